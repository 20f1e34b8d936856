#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace twostack {

using Label = std::int64_t;

// A node of a rooted plane tree with integer labels. Child order matters.
// Nothing about the labels is enforced here; see validate() and BetaTree.
struct LabeledNode {
  Label label = 1;
  std::vector<LabeledNode> children;

  bool is_leaf() const noexcept { return children.empty(); }
  Label children_label_sum() const noexcept;

  friend bool operator==(const LabeledNode&, const LabeledNode&) = default;
};

std::size_t node_count(const LabeledNode& root) noexcept;
std::size_t leaf_count(const LabeledNode& root) noexcept;

enum class ViolationKind {
  LabelNotPositive,      // every label must be >= 1
  LeafLabelNotOne,       // leaves carry label 1
  RootLabelNotSum,       // root label equals the sum of its children's labels
  InternalLabelTooLarge, // non-root internal label <= sum of children's labels
  RootIsLeaf,            // a β(1,0)-tree has at least two nodes
};

std::string_view to_string(ViolationKind kind) noexcept;

struct Violation {
  // Child indices from the root; empty for the root itself.
  std::vector<std::size_t> path;
  ViolationKind kind;
  Label label;     // label found at the node
  Label children_sum; // sum of its children's labels

  // "root" or e.g. "root/0/1".
  std::string where() const;
  std::string describe() const;

  friend bool operator==(const Violation&, const Violation&) = default;
};

// Every violated β(1,0) constraint, in preorder. Empty iff the tree is a
// β(1,0)-tree. All labels are required to be positive.
std::vector<Violation> validate(const LabeledNode& root);

// A labeled plane tree known to satisfy the β(1,0) constraints:
//   - leaves are labeled 1,
//   - the root label is the sum of its children's labels,
//   - any other internal label is at most the sum of its children's labels,
//   - all labels are >= 1.
class BetaTree {
 public:
  // Throws DomainError describing the first violation.
  explicit BetaTree(LabeledNode root);

  static BetaTree from_trusted(LabeledNode root) noexcept {
    BetaTree t;
    t.root_ = std::move(root);
    return t;
  }

  const LabeledNode& root() const noexcept { return root_; }
  std::size_t nodes() const noexcept { return node_count(root_); }
  std::size_t leaves() const noexcept { return leaf_count(root_); }
  Label root_label() const noexcept { return root_.label; }

  friend bool operator==(const BetaTree&, const BetaTree&) = default;

 private:
  BetaTree() = default;
  LabeledNode root_;
};

struct LeavesAndRootLabel {
  std::size_t leaves;
  Label root_label;

  friend bool operator==(const LeavesAndRootLabel&,
                         const LeavesAndRootLabel&) = default;
};

LeavesAndRootLabel leaf_count_and_root_label(const BetaTree& t) noexcept;

// Canonical s-expression: "(label child child ...)", a leaf is "(1)".
// Children are separated from the label and each other by one space.
std::string to_sexpr(const LabeledNode& root);
inline std::string to_sexpr(const BetaTree& t) { return to_sexpr(t.root()); }

// Accepts arbitrary whitespace between tokens. Labels are decimal integers,
// optionally negative, so that invalid candidates can still be validated.
// Throws ParseError.
LabeledNode parse_sexpr(std::string_view text);

// {"label": 3, "children": [...]}
std::string to_json(const LabeledNode& root);
LabeledNode parse_json_tree(std::string_view text);

}  // namespace twostack
