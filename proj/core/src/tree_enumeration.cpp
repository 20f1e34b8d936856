#include "twostack/tree_enumeration.hpp"

#include <span>
#include <string>

#include "twostack/errors.hpp"

namespace twostack {

namespace {

struct Subtree {
  LabeledNode node;
  std::size_t leaves;
};

// Calls `visit(parts)` for every composition of `total` into `count`
// positive parts, in lexicographic order.
template <typename Visit>
void for_each_composition(std::size_t total, std::size_t count,
                          std::vector<std::size_t>& parts, Visit&& visit) {
  if (count == 0) {
    if (total == 0) visit(parts);
    return;
  }
  for (std::size_t first = 1; first + (count - 1) <= total; ++first) {
    parts.push_back(first);
    for_each_composition(total - first, count - 1, parts, visit);
    parts.pop_back();
  }
}

// Non-root subtrees by node count, each list in canonical order.
class SubtreeCatalog {
 public:
  const std::vector<Subtree>& of_size(std::size_t size) {
    while (by_size_.size() <= size) build(by_size_.size());
    return by_size_[size];
  }

  // Visits every tuple of subtrees with the given sizes, first position
  // varying slowest. With a leaf target, only tuples with exactly that many
  // leaves in total are visited.
  template <typename Visit>
  void for_each_children(std::span<const std::size_t> sizes,
                         std::optional<std::size_t> leaf_target,
                         Visit&& visit) {
    for (std::size_t s : sizes) of_size(s);
    std::vector<const Subtree*> chosen;
    chosen.reserve(sizes.size());
    // most leaves obtainable from positions i.. onwards
    std::vector<std::size_t> max_after(sizes.size() + 1, 0);
    for (std::size_t i = sizes.size(); i-- > 0;) {
      max_after[i] = max_after[i + 1] + sizes[i];
    }
    descend(sizes, leaf_target, max_after, chosen, 0, visit);
  }

 private:
  template <typename Visit>
  void descend(std::span<const std::size_t> sizes,
               std::optional<std::size_t> leaf_target,
               const std::vector<std::size_t>& max_after,
               std::vector<const Subtree*>& chosen, std::size_t leaves_so_far,
               Visit& visit) {
    const std::size_t i = chosen.size();
    if (i == sizes.size()) {
      visit(chosen);
      return;
    }
    const std::size_t remaining = sizes.size() - i - 1;
    for (const Subtree& sub : by_size_[sizes[i]]) {
      const std::size_t leaves = leaves_so_far + sub.leaves;
      if (leaf_target) {
        if (leaves + remaining > *leaf_target) continue;
        if (leaves + max_after[i + 1] < *leaf_target) continue;
      }
      chosen.push_back(&sub);
      descend(sizes, leaf_target, max_after, chosen, leaves, visit);
      chosen.pop_back();
    }
  }

  void build(std::size_t size) {
    std::vector<Subtree> list;
    if (size == 1) {
      list.push_back({LabeledNode{1, {}}, 1});
    } else if (size >= 2) {
      std::vector<std::size_t> parts;
      for (std::size_t degree = 1; degree < size; ++degree) {
        for_each_composition(size - 1, degree, parts, [&](const auto& sizes) {
          for_each_children(sizes, std::nullopt, [&](const auto& kids) {
            Label sum = 0;
            std::size_t leaves = 0;
            for (const Subtree* kid : kids) {
              sum += kid->node.label;
              leaves += kid->leaves;
            }
            for (Label label = 1; label <= sum; ++label) {
              LabeledNode node{label, {}};
              node.children.reserve(kids.size());
              for (const Subtree* kid : kids) node.children.push_back(kid->node);
              list.push_back({std::move(node), leaves});
            }
          });
        });
      }
    }
    by_size_.push_back(std::move(list));
  }

  std::vector<std::vector<Subtree>> by_size_;
};

void check_tree_range(std::size_t nodes, std::optional<std::size_t> leaves) {
  if (nodes < 2) {
    throw DomainError("a beta(1,0)-tree has at least 2 nodes, got " +
                      std::to_string(nodes));
  }
  if (leaves && (*leaves < 1 || *leaves > nodes - 1)) {
    throw DomainError("leaf count " + std::to_string(*leaves) +
                      " outside 1.." + std::to_string(nodes - 1));
  }
}

void check_nk(std::size_t n, std::size_t k) {
  if (n < 1 || k < 1 || k > n) {
    throw DomainError("need 1 <= k <= n, got n=" + std::to_string(n) +
                      " k=" + std::to_string(k));
  }
}

}  // namespace

void for_each_beta_tree(std::size_t nodes, std::optional<std::size_t> leaves,
                        const std::function<void(const BetaTree&)>& visit) {
  check_tree_range(nodes, leaves);
  SubtreeCatalog catalog;
  std::vector<std::size_t> parts;
  for (std::size_t degree = 1; degree < nodes; ++degree) {
    if (leaves && degree > *leaves) break;
    for_each_composition(nodes - 1, degree, parts, [&](const auto& sizes) {
      catalog.for_each_children(sizes, leaves, [&](const auto& kids) {
        LabeledNode root{0, {}};
        root.children.reserve(kids.size());
        for (const Subtree* kid : kids) {
          root.label += kid->node.label;
          root.children.push_back(kid->node);
        }
        visit(BetaTree::from_trusted(std::move(root)));
      });
    });
  }
}

std::vector<BetaTree> enumerate_beta_trees(std::size_t nodes,
                                           std::optional<std::size_t> leaves) {
  std::vector<BetaTree> trees;
  for_each_beta_tree(nodes, leaves,
                     [&](const BetaTree& t) { trees.push_back(t); });
  return trees;
}

TreeCounter::TreeCounter(std::size_t max_n) : max_n_(max_n) {
  // subtrees[m][k][l]: non-root β(1,0) subtrees with m nodes, k leaves and
  // label l. forests_[m][k][s] as documented in the header.
  using Table = std::vector<std::vector<std::vector<BigInt>>>;
  auto shaped = [](std::size_t m) {
    std::vector<std::vector<BigInt>> t(m + 1);
    for (std::size_t k = 0; k <= m; ++k) t[k].assign(k + 1, BigInt(0));
    return t;
  };
  Table subtrees(max_n + 1);
  forests_.resize(max_n + 1);
  forests_[0] = shaped(0);
  forests_[0][0][0] = 1;
  for (std::size_t m = 1; m <= max_n; ++m) {
    subtrees[m] = shaped(m);
    if (m == 1) {
      subtrees[1][1][1] = 1;
    } else {
      const auto& below = forests_[m - 1];
      for (std::size_t k = 1; k <= m - 1; ++k) {
        BigInt suffix = 0;
        for (std::size_t l = k; l >= 1; --l) {
          suffix += below[k][l];
          subtrees[m][k][l] = suffix;
        }
      }
    }

    // Split off the first tree of the forest.
    forests_[m] = shaped(m);
    auto& forest = forests_[m];
    for (std::size_t m1 = 1; m1 <= m; ++m1) {
      const auto& rest = forests_[m - m1];
      for (std::size_t k1 = 1; k1 <= m1; ++k1) {
        for (std::size_t l1 = 1; l1 <= k1; ++l1) {
          const BigInt& first = subtrees[m1][k1][l1];
          if (first == 0) continue;
          for (std::size_t k2 = 0; k2 <= m - m1; ++k2) {
            for (std::size_t s2 = 0; s2 <= k2; ++s2) {
              const BigInt& tail = rest[k2][s2];
              if (tail == 0) continue;
              forest[k1 + k2][l1 + s2] += first * tail;
            }
          }
        }
      }
    }
  }
}

BigInt TreeCounter::count(std::size_t n, std::size_t k) const {
  check_nk(n, k);
  if (n > max_n_) {
    throw DomainError("n=" + std::to_string(n) + " exceeds counter range " +
                      std::to_string(max_n_));
  }
  BigInt total = 0;
  for (const auto& c : forests_[n][k]) total += c;
  return total;
}

BigInt TreeCounter::count(std::size_t n, std::size_t k,
                          std::size_t root_label) const {
  check_nk(n, k);
  if (n > max_n_) {
    throw DomainError("n=" + std::to_string(n) + " exceeds counter range " +
                      std::to_string(max_n_));
  }
  if (root_label > k) return 0;
  return forests_[n][k][root_label];
}

BigInt count_beta_trees(std::size_t n, std::size_t k, TreeCountMethod method) {
  check_nk(n, k);
  if (method == TreeCountMethod::Automatic) {
    method = n <= kTreeEnumerationThreshold ? TreeCountMethod::Enumeration
                                            : TreeCountMethod::Recursion;
  }
  if (method == TreeCountMethod::Enumeration) {
    std::uint64_t count = 0;
    for_each_beta_tree(n + 1, k, [&](const BetaTree&) { ++count; });
    return count;
  }
  return TreeCounter(n).count(n, k);
}

}  // namespace twostack
