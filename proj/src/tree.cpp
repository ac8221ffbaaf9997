#include "bv/tree.hpp"

#include <cassert>
#include <stdexcept>

namespace bv {

BinaryTree BinaryTree::caret(BinaryTree left, BinaryTree right) {
  BinaryTree t;
  int leaves = left.leaf_count() + right.leaf_count();
  t.node_ = std::make_shared<const Node>(Node{std::move(left), std::move(right), leaves});
  return t;
}

const BinaryTree& BinaryTree::left() const {
  assert(node_);
  return node_->l;
}

const BinaryTree& BinaryTree::right() const {
  assert(node_);
  return node_->r;
}

int BinaryTree::leaf_count() const { return node_ ? node_->leaves : 1; }

bool BinaryTree::operator==(const BinaryTree& other) const {
  if (node_ == other.node_) return true;
  if (!node_ || !other.node_) return false;
  if (node_->leaves != other.node_->leaves) return false;
  return node_->l == other.node_->l && node_->r == other.node_->r;
}

namespace {

void collect_terminal(const BinaryTree& t, int off, std::vector<int>& out) {
  if (t.is_leaf()) return;
  if (t.left().is_leaf() && t.right().is_leaf()) {
    out.push_back(off);
    return;
  }
  collect_terminal(t.left(), off, out);
  collect_terminal(t.right(), off + t.left().leaf_count(), out);
}

}  // namespace

std::vector<int> terminal_carets(const BinaryTree& t) {
  std::vector<int> out;
  collect_terminal(t, 0, out);
  return out;
}

bool has_terminal_caret(const BinaryTree& t, int i) {
  if (t.is_leaf() || i < 0 || i + 1 >= t.leaf_count()) return false;
  const int nl = t.left().leaf_count();
  if (i + 1 <= nl - 1) return has_terminal_caret(t.left(), i);
  if (i >= nl) return has_terminal_caret(t.right(), i - nl);
  // the pair i, i+1 straddles the root split
  return t.left().is_leaf() && t.right().is_leaf();
}

BinaryTree graft(const BinaryTree& t, int j, const BinaryTree& sub) {
  if (j < 0 || j >= t.leaf_count()) throw std::out_of_range("leaf index out of range");
  if (t.is_leaf()) return sub;
  const int nl = t.left().leaf_count();
  if (j < nl) return BinaryTree::caret(graft(t.left(), j, sub), t.right());
  return BinaryTree::caret(t.left(), graft(t.right(), j - nl, sub));
}

BinaryTree add_caret(const BinaryTree& t, int j) {
  return graft(t, j, BinaryTree::caret(BinaryTree::leaf(), BinaryTree::leaf()));
}

BinaryTree remove_caret(const BinaryTree& t, int i) {
  if (!has_terminal_caret(t, i)) throw std::invalid_argument("no terminal caret at this index");
  const int nl = t.left().leaf_count();
  if (i + 1 <= nl - 1) return BinaryTree::caret(remove_caret(t.left(), i), t.right());
  if (i >= nl) return BinaryTree::caret(t.left(), remove_caret(t.right(), i - nl));
  return BinaryTree::leaf();
}

BinaryTree left_vine(int leaves) {
  assert(leaves >= 1);
  BinaryTree t;
  for (int i = 1; i < leaves; ++i) t = BinaryTree::caret(t, BinaryTree::leaf());
  return t;
}

BinaryTree right_vine(int leaves) {
  assert(leaves >= 1);
  BinaryTree t;
  for (int i = 1; i < leaves; ++i) t = BinaryTree::caret(BinaryTree::leaf(), t);
  return t;
}

BinaryTree apply_expansion(const BinaryTree& t, const Expansion& e) {
  BinaryTree out = t;
  for (auto it = e.entries.rbegin(); it != e.entries.rend(); ++it)
    out = graft(out, it->first, it->second);
  return out;
}

namespace {

void expansion_rec(const BinaryTree& a, const BinaryTree& t, int off, Expansion& out) {
  if (a.is_leaf()) {
    if (!t.is_leaf()) out.entries.emplace_back(off, t);
    return;
  }
  if (t.is_leaf() || t.left().leaf_count() < a.left().leaf_count())
    throw std::invalid_argument("target does not refine the tree");
  expansion_rec(a.left(), t.left(), off, out);
  expansion_rec(a.right(), t.right(), off + a.left().leaf_count(), out);
}

}  // namespace

Expansion expansion_from(const BinaryTree& a, const BinaryTree& target) {
  Expansion out;
  expansion_rec(a, target, 0, out);
  return out;
}

Refinement common_refinement(const BinaryTree& a, const BinaryTree& b) {
  if (a == b) return {a, {}, {}};
  if (a.is_leaf()) return {b, {{{0, b}}}, {}};
  if (b.is_leaf()) return {a, {}, {{{0, a}}}};
  Refinement L = common_refinement(a.left(), b.left());
  Refinement R = common_refinement(a.right(), b.right());
  Refinement out;
  out.tree = BinaryTree::caret(L.tree, R.tree);
  out.from_a = std::move(L.from_a);
  const int sa = a.left().leaf_count();
  for (auto& [j, sub] : R.from_a.entries) out.from_a.entries.emplace_back(j + sa, sub);
  out.from_b = std::move(L.from_b);
  const int sb = b.left().leaf_count();
  for (auto& [j, sub] : R.from_b.entries) out.from_b.entries.emplace_back(j + sb, sub);
  return out;
}

}  // namespace bv
