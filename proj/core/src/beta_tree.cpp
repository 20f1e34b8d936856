#include "twostack/beta_tree.hpp"

#include <cctype>
#include <charconv>

#include <json.hpp>

#include "twostack/errors.hpp"

namespace twostack {

Label LabeledNode::children_label_sum() const noexcept {
  Label sum = 0;
  for (const auto& child : children) sum += child.label;
  return sum;
}

std::size_t node_count(const LabeledNode& root) noexcept {
  std::size_t count = 1;
  for (const auto& child : root.children) count += node_count(child);
  return count;
}

std::size_t leaf_count(const LabeledNode& root) noexcept {
  if (root.is_leaf()) return 1;
  std::size_t count = 0;
  for (const auto& child : root.children) count += leaf_count(child);
  return count;
}

std::string_view to_string(ViolationKind kind) noexcept {
  switch (kind) {
    case ViolationKind::LabelNotPositive:
      return "label-not-positive";
    case ViolationKind::LeafLabelNotOne:
      return "leaf-label-not-one";
    case ViolationKind::RootLabelNotSum:
      return "root-label-not-sum";
    case ViolationKind::InternalLabelTooLarge:
      return "internal-label-too-large";
    case ViolationKind::RootIsLeaf:
      return "root-is-leaf";
  }
  return "unknown";
}

std::string Violation::where() const {
  std::string out = "root";
  for (std::size_t i : path) out += "/" + std::to_string(i);
  return out;
}

std::string Violation::describe() const {
  std::string out = where() + ": ";
  switch (kind) {
    case ViolationKind::LabelNotPositive:
      return out + "label " + std::to_string(label) + " is not positive";
    case ViolationKind::LeafLabelNotOne:
      return out + "leaf label " + std::to_string(label) + " is not 1";
    case ViolationKind::RootLabelNotSum:
      return out + "root label " + std::to_string(label) +
             " != sum of children " + std::to_string(children_sum);
    case ViolationKind::InternalLabelTooLarge:
      return out + "label " + std::to_string(label) +
             " > sum of children " + std::to_string(children_sum);
    case ViolationKind::RootIsLeaf:
      return out + "the root has no children";
  }
  return out;
}

namespace {

void validate_node(const LabeledNode& node, std::vector<std::size_t>& path,
                   std::vector<Violation>& out) {
  const bool is_root = path.empty();
  const Label sum = node.children_label_sum();
  auto report = [&](ViolationKind kind) {
    out.push_back(Violation{path, kind, node.label, sum});
  };
  if (node.label < 1) report(ViolationKind::LabelNotPositive);
  if (is_root) {
    if (node.is_leaf()) {
      report(ViolationKind::RootIsLeaf);
    } else if (node.label != sum) {
      report(ViolationKind::RootLabelNotSum);
    }
  } else if (node.is_leaf()) {
    if (node.label != 1) report(ViolationKind::LeafLabelNotOne);
  } else if (node.label > sum) {
    report(ViolationKind::InternalLabelTooLarge);
  }
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    path.push_back(i);
    validate_node(node.children[i], path, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<Violation> validate(const LabeledNode& root) {
  std::vector<Violation> violations;
  std::vector<std::size_t> path;
  validate_node(root, path, violations);
  return violations;
}

BetaTree::BetaTree(LabeledNode root) : root_(std::move(root)) {
  const auto violations = validate(root_);
  if (!violations.empty()) {
    throw DomainError("not a beta(1,0)-tree: " + violations.front().describe());
  }
}

LeavesAndRootLabel leaf_count_and_root_label(const BetaTree& t) noexcept {
  return {t.leaves(), t.root_label()};
}

namespace {

void write_sexpr(const LabeledNode& node, std::string& out) {
  out += '(';
  out += std::to_string(node.label);
  for (const auto& child : node.children) {
    out += ' ';
    write_sexpr(child, out);
  }
  out += ')';
}

class SexprParser {
 public:
  explicit SexprParser(std::string_view text) : text_(text) {}

  LabeledNode parse() {
    LabeledNode root = node();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return root;
  }

 private:
  LabeledNode node() {
    skip_space();
    expect('(');
    LabeledNode n;
    n.label = label();
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) fail("unterminated node");
      if (text_[pos_] == ')') {
        ++pos_;
        return n;
      }
      n.children.push_back(node());
    }
  }

  Label label() {
    skip_space();
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    Label value = 0;
    auto [next, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{}) fail("expected an integer label");
    pos_ += static_cast<std::size_t>(next - begin);
    return value;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("tree: " + what + " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

nlohmann::json node_to_json(const LabeledNode& node) {
  nlohmann::json children = nlohmann::json::array();
  for (const auto& child : node.children) children.push_back(node_to_json(child));
  return {{"label", node.label}, {"children", std::move(children)}};
}

LabeledNode node_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("label") ||
      !j.at("label").is_number_integer()) {
    throw ParseError("tree json: each node needs an integer \"label\"");
  }
  LabeledNode node;
  node.label = j.at("label").get<Label>();
  if (j.contains("children")) {
    const auto& children = j.at("children");
    if (!children.is_array()) {
      throw ParseError("tree json: \"children\" must be an array");
    }
    for (const auto& child : children) {
      node.children.push_back(node_from_json(child));
    }
  }
  return node;
}

}  // namespace

std::string to_sexpr(const LabeledNode& root) {
  std::string out;
  write_sexpr(root, out);
  return out;
}

LabeledNode parse_sexpr(std::string_view text) {
  return SexprParser(text).parse();
}

std::string to_json(const LabeledNode& root) {
  return node_to_json(root).dump();
}

LabeledNode parse_json_tree(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("tree json: ") + e.what());
  }
  return node_from_json(j);
}

}  // namespace twostack
