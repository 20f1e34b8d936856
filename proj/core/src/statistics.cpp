#include "twostack/statistics.hpp"

#include "twostack/errors.hpp"

namespace twostack {

std::string_view to_string(PermType type) noexcept {
  return type == PermType::Type1 ? "type1" : "type2";
}

std::size_t count_descents(std::span<const Entry> p) noexcept {
  std::size_t d = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) d += p[i] > p[i + 1];
  return d;
}

std::size_t count_ascents(std::span<const Entry> p) noexcept {
  std::size_t a = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) a += p[i] < p[i + 1];
  return a;
}

std::size_t count_runs(std::span<const Entry> p) noexcept {
  return p.empty() ? 0 : count_descents(p) + 1;
}

std::size_t count_rl_maxima(std::span<const Entry> p) noexcept {
  std::size_t count = 0;
  Entry best = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    if (*it > best) {
      best = *it;
      ++count;
    }
  }
  return count;
}

std::vector<std::size_t> rl_maxima_positions(std::span<const Entry> p) {
  std::vector<std::size_t> positions;
  Entry best = 0;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i] > best) {
      best = p[i];
      positions.push_back(i);
    }
  }
  return {positions.rbegin(), positions.rend()};
}

std::vector<Entry> rl_maxima(std::span<const Entry> p) {
  std::vector<Entry> values;
  for (std::size_t pos : rl_maxima_positions(p)) values.push_back(p[pos]);
  return values;
}

namespace {

PermType classify_by_positions(std::span<const Entry> p,
                               std::span<const std::size_t> maxima) {
  // s_t spans the positions strictly between a_{t-1} and a_t (from the start
  // when t = 1).
  const Entry last = p.back();
  if (last == 1) return PermType::Type2;
  const std::size_t segment_begin =
      maxima.size() >= 2 ? maxima[maxima.size() - 2] + 1 : 0;
  for (std::size_t i = segment_begin; i + 1 < p.size(); ++i) {
    if (p[i] == last - 1) return PermType::Type1;
  }
  return PermType::Type2;
}

}  // namespace

PermType classify(const Permutation& p) {
  if (p.empty()) throw DomainError("type is undefined for the empty permutation");
  const auto maxima = rl_maxima_positions(p.entries());
  return classify_by_positions(p.entries(), maxima);
}

Statistics compute_statistics(const Permutation& p) {
  if (p.empty()) {
    throw DomainError("statistics are undefined for the empty permutation");
  }
  Statistics s;
  s.descents = count_descents(p.entries());
  s.ascents = count_ascents(p.entries());
  s.runs = s.descents + 1;
  const auto positions = rl_maxima_positions(p.entries());
  s.rl_maxima.reserve(positions.size());
  for (std::size_t pos : positions) s.rl_maxima.push_back(p[pos]);
  s.type = classify_by_positions(p.entries(), positions);
  return s;
}

}  // namespace twostack
