#pragma once

#include <compare>
#include <cstddef>

#include "twostack/permutation.hpp"

namespace twostack {

// A permutation with one of its right-to-left maxima marked. The mark is a
// rank counted from the largest maximum: rank 1 is always the entry n.
class MarkedPermutation {
 public:
  // Throws DomainError unless 1 <= mark_rank <= rl(perm).
  MarkedPermutation(Permutation perm, std::size_t mark_rank);

  const Permutation& perm() const noexcept { return perm_; }
  std::size_t mark_rank() const noexcept { return mark_rank_; }
  // Value of the marked right-to-left maximum.
  Entry marked_value() const;

  friend bool operator==(const MarkedPermutation&,
                         const MarkedPermutation&) = default;
  friend auto operator<=>(const MarkedPermutation&,
                          const MarkedPermutation&) = default;

 private:
  Permutation perm_;
  std::size_t mark_rank_;
};

// The reduction of a Type 1 permutation with t right-to-left maxima:
// delete the last entry a_t, decrement every entry larger than a_t, and mark
// the former a_t - 1, which is now the t-th right-to-left maximum.
// Descents are preserved and rl never drops. Throws DomainError on Type 2
// input (including ε).
//
// Restricted to 2-stack sortable permutations this is a bijection onto the
// 2-stack sortable (n-1)-permutations with a marked right-to-left maximum.
MarkedPermutation reduce_type1(const Permutation& p);

// Inverse of reduce_type1: with v the marked value, increment every entry
// larger than v and append v + 1.
Permutation expand_marked(const MarkedPermutation& mp);

}  // namespace twostack
