#include "twostack/marked_bijection.hpp"

#include "twostack/errors.hpp"
#include "twostack/statistics.hpp"

namespace twostack {

MarkedPermutation::MarkedPermutation(Permutation perm, std::size_t mark_rank)
    : perm_(std::move(perm)), mark_rank_(mark_rank) {
  const auto rl = count_rl_maxima(perm_.entries());
  if (mark_rank_ < 1 || mark_rank_ > rl) {
    throw DomainError("mark rank " + std::to_string(mark_rank_) +
                      " outside 1.." + std::to_string(rl) + " for " +
                      to_string(perm_));
  }
}

Entry MarkedPermutation::marked_value() const {
  return rl_maxima(perm_.entries())[mark_rank_ - 1];
}

MarkedPermutation reduce_type1(const Permutation& p) {
  if (p.empty() || classify(p) != PermType::Type1) {
    throw DomainError("reduction needs a type 1 permutation, got \"" +
                      to_string(p) + "\"");
  }
  const std::size_t t = count_rl_maxima(p.entries());
  const Entry last = p.back();
  std::vector<Entry> reduced;
  reduced.reserve(p.size() - 1);
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    reduced.push_back(p[i] > last ? p[i] - 1 : p[i]);
  }
  return MarkedPermutation(Permutation::from_trusted(std::move(reduced)), t);
}

Permutation expand_marked(const MarkedPermutation& mp) {
  const Entry v = mp.marked_value();
  std::vector<Entry> expanded;
  expanded.reserve(mp.perm().size() + 1);
  for (Entry e : mp.perm()) expanded.push_back(e > v ? e + 1 : e);
  expanded.push_back(v + 1);
  return Permutation::from_trusted(std::move(expanded));
}

}  // namespace twostack
