#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "twostack/beta_tree.hpp"
#include "twostack/bigint.hpp"

namespace twostack {

// Visits every β(1,0)-tree on `nodes` nodes exactly once, restricted to
// `leaves` leaves when given. Throws DomainError if nodes < 2 or the leaf
// count is outside 1..nodes-1.
//
// Canonical order. Trees are ordered by, in turn:
//   1. the root degree, ascending;
//   2. the sequence of child subtree sizes, lexicographically;
//   3. the child subtrees themselves, first child most significant, each
//      compared recursively by this same order;
// and a non-root subtree with identical shape and children is further
// ordered by its own label, ascending. The root label is determined by its
// children. The six trees on four nodes come out as
//   (1 (1 (1 (1))))  (1 (1 (1) (1)))  (2 (2 (1) (1)))
//   (2 (1) (1 (1)))  (2 (1 (1)) (1))  (3 (1) (1) (1))
void for_each_beta_tree(std::size_t nodes, std::optional<std::size_t> leaves,
                        const std::function<void(const BetaTree&)>& visit);

std::vector<BetaTree> enumerate_beta_trees(
    std::size_t nodes, std::optional<std::size_t> leaves = std::nullopt);

// Memoized counts of β(1,0)-trees, keyed by (node count, leaf count, label).
// Built once for trees on up to max_n + 1 nodes.
class TreeCounter {
 public:
  explicit TreeCounter(std::size_t max_n);

  std::size_t max_n() const noexcept { return max_n_; }

  // Trees on n + 1 nodes with k leaves. Throws DomainError outside
  // 1 <= k <= n <= max_n.
  BigInt count(std::size_t n, std::size_t k) const;
  // Same, restricted to root label `root_label` (0 when out of range).
  BigInt count(std::size_t n, std::size_t k, std::size_t root_label) const;

 private:
  std::size_t max_n_;
  // forests_[m][k][s]: ordered forests with m nodes, k leaves, and root
  // labels summing to s. A β(1,0)-tree on n + 1 nodes is a root over a
  // forest on n nodes.
  std::vector<std::vector<std::vector<BigInt>>> forests_;
};

enum class TreeCountMethod {
  Automatic,    // enumeration for n <= 6, the memoized recursion above that
  Enumeration,
  Recursion,
};

// T(n, k): β(1,0)-trees on n + 1 nodes with k leaves. Throws DomainError
// unless 1 <= k <= n.
BigInt count_beta_trees(std::size_t n, std::size_t k,
                        TreeCountMethod method = TreeCountMethod::Automatic);

inline constexpr std::size_t kTreeEnumerationThreshold = 6;

}  // namespace twostack
