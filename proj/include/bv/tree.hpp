#pragma once
// Finite rooted binary trees with value semantics and shared subtrees.
// Leaves are numbered 0..leaf_count()-1 from left to right.
#include <memory>
#include <utility>
#include <vector>

namespace bv {

class BinaryTree {
 public:
  BinaryTree() = default;  // a single leaf

  static BinaryTree leaf() { return BinaryTree(); }
  static BinaryTree caret(BinaryTree left, BinaryTree right);

  bool is_leaf() const { return node_ == nullptr; }
  const BinaryTree& left() const;   // requires a caret at the root
  const BinaryTree& right() const;  // requires a caret at the root
  int leaf_count() const;

  bool operator==(const BinaryTree& other) const;
  bool operator!=(const BinaryTree& other) const { return !(*this == other); }

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

struct BinaryTree::Node {
  BinaryTree l, r;
  int leaves;
};

// Leaf indices i such that leaves i and i+1 are the children of one caret.
// Ascending; empty for a single leaf.
std::vector<int> terminal_carets(const BinaryTree& t);
bool has_terminal_caret(const BinaryTree& t, int i);

// Split leaf j into a caret over two leaves.
BinaryTree add_caret(const BinaryTree& t, int j);

// Collapse the terminal caret over leaves i, i+1; throws if there is none.
BinaryTree remove_caret(const BinaryTree& t, int i);

// Replace leaf j by an arbitrary subtree.
BinaryTree graft(const BinaryTree& t, int j, const BinaryTree& sub);

BinaryTree left_vine(int leaves);   // caret(caret(...), leaf) shape
BinaryTree right_vine(int leaves);  // caret(leaf, caret(...)) shape

// How to grow a tree into a refinement of it: for each leaf that becomes a
// subtree, the pair (leaf index in the unexpanded tree, grafted subtree).
// Entries are ascending by leaf index; applying them right to left keeps
// earlier indices valid.
struct Expansion {
  std::vector<std::pair<int, BinaryTree>> entries;
};

BinaryTree apply_expansion(const BinaryTree& t, const Expansion& e);

// Expansion carrying a onto target; throws if target does not refine a.
Expansion expansion_from(const BinaryTree& a, const BinaryTree& target);

struct Refinement {
  BinaryTree tree;
  Expansion from_a, from_b;
};

// Least common refinement of two trees, with the expansion of each input
// onto it.  In the dyadic subdivision picture this is the union of the two
// breakpoint sets, computed here by structural recursion.
Refinement common_refinement(const BinaryTree& a, const BinaryTree& b);

}  // namespace bv
