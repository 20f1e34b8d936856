#include "twostack/stack_sort.hpp"

#include <algorithm>

#include "twostack/errors.hpp"

namespace twostack {

void stack_sort_into(std::span<const Entry> word, std::vector<Entry>& out) {
  if (word.empty()) return;
  const auto max_it = std::max_element(word.begin(), word.end());
  const auto split = static_cast<std::size_t>(max_it - word.begin());
  stack_sort_into(word.first(split), out);
  stack_sort_into(word.subspan(split + 1), out);
  out.push_back(*max_it);
}

Permutation stack_sort(const Permutation& p) {
  std::vector<Entry> out;
  out.reserve(p.size());
  stack_sort_into(p.entries(), out);
  return Permutation::from_trusted(std::move(out));
}

Permutation stack_sort(const Permutation& p, std::size_t passes) {
  Permutation current = p;
  for (std::size_t i = 0; i < passes && !current.is_identity(); ++i) {
    current = stack_sort(current);
  }
  return current;
}

namespace {

bool is_identity(std::span<const Entry> p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != static_cast<Entry>(i + 1)) return false;
  }
  return true;
}

}  // namespace

bool is_t_stack_sortable(std::span<const Entry> p, std::size_t passes) {
  std::vector<Entry> current(p.begin(), p.end());
  std::vector<Entry> next;
  next.reserve(p.size());
  for (std::size_t i = 0; i < passes; ++i) {
    if (is_identity(current)) return true;
    next.clear();
    stack_sort_into(current, next);
    current.swap(next);
  }
  return is_identity(current);
}

bool is_t_stack_sortable(const Permutation& p, std::size_t passes) {
  return is_t_stack_sortable(p.entries(), passes);
}

std::size_t passes_to_sort(const Permutation& p) {
  std::size_t passes = 0;
  Permutation current = p;
  while (!current.is_identity()) {
    current = stack_sort(current);
    ++passes;
  }
  return passes;
}

namespace {

// Extends a partial embedding of pattern[0..depth) at increasing positions of
// p, starting the search at `from`.
bool embed(std::span<const Entry> p, std::span<const Entry> pattern,
           std::vector<Entry>& chosen, std::size_t from) {
  const std::size_t depth = chosen.size();
  if (depth == pattern.size()) return true;
  const std::size_t remaining = pattern.size() - depth;
  for (std::size_t i = from; i + remaining <= p.size(); ++i) {
    bool consistent = true;
    for (std::size_t j = 0; j < depth && consistent; ++j) {
      consistent = (chosen[j] < p[i]) == (pattern[j] < pattern[depth]);
    }
    if (!consistent) continue;
    chosen.push_back(p[i]);
    if (embed(p, pattern, chosen, i + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool contains_pattern(const Permutation& p, const Permutation& pattern) {
  if (pattern.empty()) throw DomainError("pattern must be non-empty");
  if (pattern.size() > p.size()) return false;
  std::vector<Entry> chosen;
  chosen.reserve(pattern.size());
  return embed(p.entries(), pattern.entries(), chosen, 0);
}

}  // namespace twostack
