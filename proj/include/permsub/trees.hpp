#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "permsub/permutation.hpp"

namespace permsub {

struct TreeNode {
  int label = 0;  // increasing role: rank in 1..n; planar role: unused
  std::unique_ptr<TreeNode> left, right;
};

// A rooted planar tree in one of two roles.
//
// increasing: nodes labelled bijectively with 1..n, labels strictly
// increasing on every root-to-leaf path, outdegree <= 2, single children
// explicitly oriented.
//
// planar: unlabelled full binary tree; only internal nodes are stored and
// a missing child slot denotes a leaf, so size counts internal nodes and
// fullness holds by construction.
class Tree {
public:
  enum class Role { increasing, planar };

  Tree() = default;
  Tree(Role role, std::unique_ptr<TreeNode> root);
  Tree(const Tree& other);
  Tree& operator=(const Tree& other);
  Tree(Tree&&) = default;
  Tree& operator=(Tree&&) = default;

  Role role() const { return role_; }
  const TreeNode* root() const { return root_.get(); }
  int size() const;  // stored node count

  // Nested-parentheses text: increasing "(1 L:(2) R:(3))", planar
  // "(L:* R:*)" with "*" for leaves. Round-trips bit-exactly with parse.
  std::string str() const;
  static Tree parse(const std::string& text, Role role);

  bool operator==(const Tree& other) const;

private:
  Role role_ = Role::increasing;
  std::unique_ptr<TreeNode> root_;
};

// In-order reading of the labels; equals the iterated leaf-collapse word.
// Validates the increasing-role invariants (invalid_input on violation).
Permutation phi(const Tree& t);

// Literal step-by-step leaf-collapse simulation; test oracle for phi.
Permutation phi_collapse(const Tree& t);

// Recursive minimum-split: root takes the minimum entry, left subtree from
// the prefix before it, right subtree from the suffix after it.
Tree phi_inverse(const Permutation& p);

// Descendant subtree of the node carrying the label, labels rescaled to
// {1..size}; invalid_input when the label is absent.
Tree subtree_at(const Tree& t, int label);

// Node count of the descendant subtree at the label.
int descendant_count(const Tree& t, int label);

// Label internal nodes 1..n in pre-order, then read labels in-order; the
// image avoids 312. Planar role required.
Permutation psi(const Tree& t);

// Pre-order labelling followed by the literal leaf-collapse; test oracle.
Permutation psi_collapse(const Tree& t);

// Recursive split at entry 1: for a 312-avoider every entry left of 1 is
// smaller than every entry right of 1, so the two sides standardize into
// the subtrees. invalid_input when p contains 312.
Tree psi_inverse(const Permutation& p);

// Every internal node has a leaf child. Planar role required.
bool is_caterpillar(const Tree& t);

// Stripping the leaves leaves only outdegrees 0 and 2; defined for odd
// sizes only (invalid_input on even size). Planar role required.
bool is_strictly_binary(const Tree& t);

// Internal-node counts of all descendant subtrees passing shape_test.
std::vector<int> subtree_sizes_passing(
    const Tree& t, const std::function<bool(const Tree&)>& shape_test);

// Maximum such size; 0 when no subtree passes.
int max_subtree_size(const Tree& t,
                     const std::function<bool(const Tree&)>& shape_test);

// Exhaustive tree-family generators for oracles.
std::vector<Tree> all_increasing_trees(int n);
std::vector<Tree> all_planar_trees(int n);

} // namespace permsub
