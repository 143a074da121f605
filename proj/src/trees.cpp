#include "permsub/trees.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "permsub/errors.hpp"

namespace permsub {

namespace {

std::unique_ptr<TreeNode> clone(const TreeNode* node) {
  if (!node) return nullptr;
  auto copy = std::make_unique<TreeNode>();
  copy->label = node->label;
  copy->left = clone(node->left.get());
  copy->right = clone(node->right.get());
  return copy;
}

int count_nodes(const TreeNode* node) {
  if (!node) return 0;
  return 1 + count_nodes(node->left.get()) + count_nodes(node->right.get());
}

bool equal_nodes(const TreeNode* a, const TreeNode* b) {
  if (!a || !b) return a == b;
  return a->label == b->label && equal_nodes(a->left.get(), b->left.get()) &&
         equal_nodes(a->right.get(), b->right.get());
}

} // namespace

Tree::Tree(Role role, std::unique_ptr<TreeNode> root)
    : role_(role), root_(std::move(root)) {}

Tree::Tree(const Tree& other) : role_(other.role_), root_(clone(other.root_.get())) {}

Tree& Tree::operator=(const Tree& other) {
  if (this != &other) {
    role_ = other.role_;
    root_ = clone(other.root_.get());
  }
  return *this;
}

int Tree::size() const { return count_nodes(root_.get()); }

bool Tree::operator==(const Tree& other) const {
  return role_ == other.role_ && equal_nodes(root_.get(), other.root_.get());
}

namespace {

void render(const TreeNode* node, Tree::Role role, std::string& out) {
  if (role == Tree::Role::increasing) {
    out += '(';
    out += std::to_string(node->label);
    if (node->left) {
      out += " L:";
      render(node->left.get(), role, out);
    }
    if (node->right) {
      out += " R:";
      render(node->right.get(), role, out);
    }
    out += ')';
  } else {
    out += "(L:";
    if (node->left) render(node->left.get(), role, out);
    else out += '*';
    out += " R:";
    if (node->right) render(node->right.get(), role, out);
    else out += '*';
    out += ')';
  }
}

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw invalid_input("tree parse error at offset " + std::to_string(pos) +
                        ": " + why);
  }
  char peek() const { return pos < text.size() ? text[pos] : '\0'; }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }
  bool accept(const std::string& s) {
    if (text.compare(pos, s.size(), s) == 0) {
      pos += s.size();
      return true;
    }
    return false;
  }

  std::unique_ptr<TreeNode> parse_increasing() {
    expect('(');
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected label");
    int label = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      label = label * 10 + (text[pos] - '0');
      ++pos;
    }
    auto node = std::make_unique<TreeNode>();
    node->label = label;
    if (accept(" L:")) node->left = parse_increasing();
    if (accept(" R:")) node->right = parse_increasing();
    expect(')');
    return node;
  }

  std::unique_ptr<TreeNode> parse_planar() {
    if (accept("*")) return nullptr;
    expect('(');
    if (!accept("L:")) fail("expected 'L:'");
    auto node = std::make_unique<TreeNode>();
    node->left = parse_planar();
    if (!accept(" R:")) fail("expected ' R:'");
    node->right = parse_planar();
    expect(')');
    return node;
  }
};

void check_increasing(const TreeNode* node, int parent_label,
                      std::vector<bool>& seen) {
  if (!node) return;
  const int n = static_cast<int>(seen.size()) - 1;
  if (node->label < 1 || node->label > n ||
      seen[static_cast<std::size_t>(node->label)])
    throw invalid_input("increasing tree: labels must be a bijection onto 1..n");
  if (node->label <= parent_label)
    throw invalid_input("increasing tree: labels must grow along root paths");
  seen[static_cast<std::size_t>(node->label)] = true;
  check_increasing(node->left.get(), node->label, seen);
  check_increasing(node->right.get(), node->label, seen);
}

} // namespace

std::string Tree::str() const {
  if (!root_) return role_ == Role::planar ? "*" : "";
  std::string out;
  render(root_.get(), role_, out);
  return out;
}

Tree Tree::parse(const std::string& text, Role role) {
  Parser p{text};
  std::unique_ptr<TreeNode> root;
  if (role == Role::increasing) {
    if (!text.empty()) root = p.parse_increasing();
  } else {
    root = p.parse_planar();
  }
  if (p.pos != text.size()) p.fail("trailing characters");
  Tree t(role, std::move(root));
  if (role == Role::increasing && t.root()) {
    std::vector<bool> seen(static_cast<std::size_t>(t.size()) + 1, false);
    check_increasing(t.root(), 0, seen);
  }
  return t;
}

namespace {

void in_order(const TreeNode* node, std::vector<int>& out) {
  if (!node) return;
  in_order(node->left.get(), out);
  out.push_back(node->label);
  in_order(node->right.get(), out);
}

// Mutable collapse state: words over the original labels.
struct CollapseNode {
  std::vector<int> word;
  std::unique_ptr<CollapseNode> left, right;
  bool is_leaf() const { return !left && !right; }
};

std::unique_ptr<CollapseNode> to_collapse(const TreeNode* node,
                                          bool implicit_leaves) {
  if (!node) return nullptr;
  auto c = std::make_unique<CollapseNode>();
  c->word.push_back(node->label);
  c->left = to_collapse(node->left.get(), implicit_leaves);
  c->right = to_collapse(node->right.get(), implicit_leaves);
  if (implicit_leaves) {
    // Planar role stores internal nodes only; materialize the leaves as
    // empty-word children so the collapse dynamics see them.
    if (!c->left) c->left = std::make_unique<CollapseNode>();
    if (!c->right) c->right = std::make_unique<CollapseNode>();
  }
  return c;
}

// One synchronous step: every current leaf merges into its parent, word
// received on the matching side. Leaf-ness is decided before any mutation.
void collapse_step(CollapseNode* node) {
  const bool left_leaf = node->left && node->left->is_leaf();
  const bool right_leaf = node->right && node->right->is_leaf();
  if (node->left && !left_leaf) collapse_step(node->left.get());
  if (node->right && !right_leaf) collapse_step(node->right.get());
  if (left_leaf) {
    std::vector<int> w = std::move(node->left->word);
    w.insert(w.end(), node->word.begin(), node->word.end());
    node->word = std::move(w);
    node->left.reset();
  }
  if (right_leaf) {
    node->word.insert(node->word.end(), node->right->word.begin(),
                      node->right->word.end());
    node->right.reset();
  }
}

Permutation run_collapse(std::unique_ptr<CollapseNode> root) {
  while (!root->is_leaf()) collapse_step(root.get());
  return Permutation(root->word);
}

void validate_increasing(const Tree& t) {
  if (t.role() != Tree::Role::increasing)
    throw invalid_input("operation requires the increasing role");
  if (!t.root()) throw invalid_input("empty increasing tree");
  std::vector<bool> seen(static_cast<std::size_t>(t.size()) + 1, false);
  check_increasing(t.root(), 0, seen);
}

} // namespace

Permutation phi(const Tree& t) {
  validate_increasing(t);
  std::vector<int> word;
  in_order(t.root(), word);
  return Permutation(std::move(word));
}

Permutation phi_collapse(const Tree& t) {
  validate_increasing(t);
  return run_collapse(to_collapse(t.root(), false));
}

namespace {

std::unique_ptr<TreeNode> min_split(const std::vector<int>& word, int lo, int hi) {
  if (lo > hi) return nullptr;
  int min_at = lo;
  for (int i = lo + 1; i <= hi; ++i)
    if (word[static_cast<std::size_t>(i)] < word[static_cast<std::size_t>(min_at)])
      min_at = i;
  auto node = std::make_unique<TreeNode>();
  node->label = word[static_cast<std::size_t>(min_at)];
  node->left = min_split(word, lo, min_at - 1);
  node->right = min_split(word, min_at + 1, hi);
  return node;
}

} // namespace

Tree phi_inverse(const Permutation& p) {
  if (p.size() < 1) throw invalid_input("phi_inverse: empty permutation");
  return Tree(Tree::Role::increasing,
              min_split(p.entries(), 0, p.size() - 1));
}

namespace {

const TreeNode* find_label(const TreeNode* node, int label) {
  if (!node) return nullptr;
  if (node->label == label) return node;
  if (const TreeNode* f = find_label(node->left.get(), label)) return f;
  return find_label(node->right.get(), label);
}

void collect_labels(const TreeNode* node, std::vector<int>& out) {
  if (!node) return;
  out.push_back(node->label);
  collect_labels(node->left.get(), out);
  collect_labels(node->right.get(), out);
}

void relabel(TreeNode* node, const std::map<int, int>& ranks) {
  if (!node) return;
  node->label = ranks.at(node->label);
  relabel(node->left.get(), ranks);
  relabel(node->right.get(), ranks);
}

} // namespace

Tree subtree_at(const Tree& t, int label) {
  validate_increasing(t);
  const TreeNode* node = find_label(t.root(), label);
  if (!node) throw invalid_input("subtree_at: label not present");
  std::unique_ptr<TreeNode> sub = clone(node);
  std::vector<int> labels;
  collect_labels(sub.get(), labels);
  std::sort(labels.begin(), labels.end());
  std::map<int, int> ranks;
  for (std::size_t i = 0; i < labels.size(); ++i)
    ranks[labels[i]] = static_cast<int>(i) + 1;
  relabel(sub.get(), ranks);
  return Tree(Tree::Role::increasing, std::move(sub));
}

int descendant_count(const Tree& t, int label) {
  validate_increasing(t);
  const TreeNode* node = find_label(t.root(), label);
  if (!node) throw invalid_input("descendant_count: label not present");
  return count_nodes(node);
}

namespace {

void require_planar(const Tree& t) {
  if (t.role() != Tree::Role::planar)
    throw invalid_input("operation requires the planar role");
}

// Pre-order labelling of the stored (internal) nodes, 1-based.
std::unique_ptr<TreeNode> preorder_labeled(const TreeNode* node, int& counter) {
  if (!node) return nullptr;
  auto out = std::make_unique<TreeNode>();
  out->label = ++counter;
  out->left = preorder_labeled(node->left.get(), counter);
  out->right = preorder_labeled(node->right.get(), counter);
  return out;
}

} // namespace

Permutation psi(const Tree& t) {
  require_planar(t);
  if (!t.root()) throw invalid_input("psi: empty tree");
  int counter = 0;
  std::unique_ptr<TreeNode> labeled = preorder_labeled(t.root(), counter);
  std::vector<int> word;
  in_order(labeled.get(), word);
  return Permutation(std::move(word));
}

Permutation psi_collapse(const Tree& t) {
  require_planar(t);
  if (!t.root()) throw invalid_input("psi_collapse: empty tree");
  int counter = 0;
  std::unique_ptr<TreeNode> labeled = preorder_labeled(t.root(), counter);
  return run_collapse(to_collapse(labeled.get(), true));
}

namespace {

// Split at the minimum; for a 312-avoider every prefix entry is smaller
// than every suffix entry, and a violation at any level is equivalent to
// the word containing 312.
std::unique_ptr<TreeNode> entry_split(const std::vector<int>& word, int lo,
                                      int hi) {
  if (lo > hi) return nullptr;
  int min_at = lo;
  for (int i = lo + 1; i <= hi; ++i)
    if (word[static_cast<std::size_t>(i)] < word[static_cast<std::size_t>(min_at)])
      min_at = i;
  if (min_at > lo && min_at < hi) {
    int pref_max = word[static_cast<std::size_t>(lo)];
    for (int i = lo; i < min_at; ++i)
      pref_max = std::max(pref_max, word[static_cast<std::size_t>(i)]);
    for (int i = min_at + 1; i <= hi; ++i)
      if (word[static_cast<std::size_t>(i)] < pref_max)
        throw invalid_input("psi_inverse: input contains 312");
  }
  auto node = std::make_unique<TreeNode>();
  node->left = entry_split(word, lo, min_at - 1);
  node->right = entry_split(word, min_at + 1, hi);
  return node;
}

} // namespace

Tree psi_inverse(const Permutation& p) {
  if (p.size() < 1) throw invalid_input("psi_inverse: empty permutation");
  return Tree(Tree::Role::planar, entry_split(p.entries(), 0, p.size() - 1));
}

namespace {

bool caterpillar_nodes(const TreeNode* node) {
  if (!node) return true;
  if (node->left && node->right) return false;
  return caterpillar_nodes(node->left.get()) &&
         caterpillar_nodes(node->right.get());
}

bool strictly_binary_nodes(const TreeNode* node) {
  if (!node) return true;
  if (static_cast<bool>(node->left) != static_cast<bool>(node->right))
    return false;
  return strictly_binary_nodes(node->left.get()) &&
         strictly_binary_nodes(node->right.get());
}

} // namespace

bool is_caterpillar(const Tree& t) {
  require_planar(t);
  return caterpillar_nodes(t.root());
}

bool is_strictly_binary(const Tree& t) {
  require_planar(t);
  if (t.size() % 2 == 0)
    throw invalid_input("is_strictly_binary: size must be odd");
  return strictly_binary_nodes(t.root());
}

namespace {

void gather_subtrees(const TreeNode* node, Tree::Role role,
                     const std::function<bool(const Tree&)>& shape_test,
                     std::vector<int>& sizes) {
  if (!node) return;
  Tree sub(role, clone(node));
  if (shape_test(sub)) sizes.push_back(sub.size());
  gather_subtrees(node->left.get(), role, shape_test, sizes);
  gather_subtrees(node->right.get(), role, shape_test, sizes);
}

} // namespace

std::vector<int> subtree_sizes_passing(
    const Tree& t, const std::function<bool(const Tree&)>& shape_test) {
  std::vector<int> sizes;
  gather_subtrees(t.root(), t.role(), shape_test, sizes);
  return sizes;
}

int max_subtree_size(const Tree& t,
                     const std::function<bool(const Tree&)>& shape_test) {
  const std::vector<int> sizes = subtree_sizes_passing(t, shape_test);
  return sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
}

namespace {

std::vector<std::unique_ptr<TreeNode>> gen_increasing(
    const std::vector<int>& labels) {
  std::vector<std::unique_ptr<TreeNode>> out;
  if (labels.empty()) {
    out.push_back(nullptr);
    return out;
  }
  // Root takes the least label; any split of the rest between the two
  // oriented subtrees is valid because all remaining labels are larger.
  const int root_label = labels.front();
  std::vector<int> rest(labels.begin() + 1, labels.end());
  const std::size_t k = rest.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<int> left_set, right_set;
    for (std::size_t i = 0; i < k; ++i)
      (mask >> i & 1 ? left_set : right_set).push_back(rest[i]);
    for (auto& lt : gen_increasing(left_set)) {
      for (auto& rt : gen_increasing(right_set)) {
        auto node = std::make_unique<TreeNode>();
        node->label = root_label;
        node->left = clone(lt.get());
        node->right = clone(rt.get());
        out.push_back(std::move(node));
      }
    }
  }
  return out;
}

std::vector<std::unique_ptr<TreeNode>> gen_planar(int n) {
  std::vector<std::unique_ptr<TreeNode>> out;
  if (n == 0) {
    out.push_back(nullptr);
    return out;
  }
  for (int i = 0; i < n; ++i) {
    auto lefts = gen_planar(i);
    auto rights = gen_planar(n - 1 - i);
    for (auto& lt : lefts) {
      for (auto& rt : rights) {
        auto node = std::make_unique<TreeNode>();
        node->left = clone(lt.get());
        node->right = clone(rt.get());
        out.push_back(std::move(node));
      }
    }
  }
  return out;
}

} // namespace

std::vector<Tree> all_increasing_trees(int n) {
  if (n < 0) throw invalid_input("all_increasing_trees: negative size");
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Tree> out;
  for (auto& root : gen_increasing(labels))
    out.emplace_back(Tree::Role::increasing, std::move(root));
  return out;
}

std::vector<Tree> all_planar_trees(int n) {
  if (n < 0) throw invalid_input("all_planar_trees: negative size");
  std::vector<Tree> out;
  for (auto& root : gen_planar(n))
    out.emplace_back(Tree::Role::planar, std::move(root));
  return out;
}

} // namespace permsub
