#include "bv/element.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace bv {

namespace {

int preimage(const Perm& p, int j) {
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    if (p[i] == j) return i;
  assert(false);
  return -1;
}

// Split top leaf i into two, together with the strand below it and the
// bottom leaf it lands on.  p is kept in sync with r.braid.
void insert_eye(RawTriple& r, Perm& p, int i) {
  r.top = add_caret(r.top, i);
  r.bot = add_caret(r.bot, p[i]);
  r.braid = double_strand(r.braid, i);
  p = perm_double_point(p, i);
}

void expand_top_at(RawTriple& r, Perm& p, int i, const BinaryTree& s) {
  if (s.is_leaf()) return;
  insert_eye(r, p, i);
  expand_top_at(r, p, i + 1, s.right());
  expand_top_at(r, p, i, s.left());
}

void expand_bottom_at(RawTriple& r, Perm& p, int j, const BinaryTree& s) {
  if (s.is_leaf()) return;
  insert_eye(r, p, preimage(p, j));
  expand_bottom_at(r, p, j + 1, s.right());
  expand_bottom_at(r, p, j, s.left());
}

// Entries descending, so indices into the unexpanded tree stay valid.
void expand_side(RawTriple& r, Perm& p, Side side, const Expansion& e) {
  for (auto it = e.entries.rbegin(); it != e.entries.rend(); ++it) {
    if (side == Side::top)
      expand_top_at(r, p, it->first, it->second);
    else
      expand_bottom_at(r, p, it->first, it->second);
  }
}

}  // namespace

RawTriple raw_identity() {
  return {BinaryTree::leaf(), BraidWord(1), BinaryTree::leaf()};
}

RawTriple raw_inverse(const RawTriple& r) {
  return {r.bot, braid_inverse(r.braid), r.top};
}

RawTriple raw_multiply(const RawTriple& a, const RawTriple& b) {
  if (a.bot.leaf_count() != a.braid.strand_count() ||
      b.top.leaf_count() != b.braid.strand_count())
    throw std::invalid_argument("triple has mismatched strand count");
  Refinement ref = common_refinement(a.bot, b.top);
  RawTriple ae = a;
  Perm pa = permutation_of(ae.braid);
  expand_side(ae, pa, Side::bottom, ref.from_a);
  RawTriple be = b;
  Perm pb = permutation_of(be.braid);
  expand_side(be, pb, Side::top, ref.from_b);
  return {std::move(ae.top), braid_concat(ae.braid, be.braid),
          std::move(be.bot)};
}

BVElement::BVElement()
    : top_(BinaryTree::leaf()), bot_(BinaryTree::leaf()), nf_{1, 0, {}} {}

RawTriple BVElement::raw() const { return {top_, word_of(nf_), bot_}; }

BVElement reduce(RawTriple r) {
  const int n = r.braid.strand_count();
  if (r.top.leaf_count() != n || r.bot.leaf_count() != n)
    throw std::invalid_argument("triple has mismatched strand count");

  BVElement e;
  e.top_ = std::move(r.top);
  e.bot_ = std::move(r.bot);
  e.nf_ = normal_form(r.braid);

  bool changed = true;
  while (changed) {
    changed = false;
    BraidWord w = word_of(e.nf_);
    Perm p = permutation_of(e.nf_);
    int i = 0;
    while (i + 1 < static_cast<int>(p.size())) {
      const bool eye = has_terminal_caret(e.top_, i) &&
                       p[i + 1] == p[i] + 1 &&
                       has_terminal_caret(e.bot_, p[i]) &&
                       strands_parallel(w, i);
      if (!eye) {
        ++i;
        continue;
      }
      e.top_ = remove_caret(e.top_, i);
      e.bot_ = remove_caret(e.bot_, p[i]);
      e.nf_ = normal_form(delete_strand(w, i));
      w = word_of(e.nf_);
      p = permutation_of(e.nf_);
      changed = true;
    }
  }
  return e;
}

RawTriple unreduce(const RawTriple& triple, Side side,
                   const BinaryTree& target) {
  RawTriple r = triple;
  Expansion ex =
      expansion_from(side == Side::top ? r.top : r.bot, target);
  Perm p = permutation_of(r.braid);
  expand_side(r, p, side, ex);
  return r;
}

RawTriple unreduce(const BVElement& e, Side side, const BinaryTree& target) {
  return unreduce(e.raw(), side, target);
}

BVElement multiply(const BVElement& a, const BVElement& b) {
  return reduce(raw_multiply(a.raw(), b.raw()));
}

BVElement invert(const BVElement& e) {
  return reduce(raw_inverse(e.raw()));
}

BVElement generator(GenFamily fam, int index) {
  if (index < 0) throw std::invalid_argument("generator index is negative");
  switch (fam) {
    case GenFamily::f: {
      BinaryTree top = graft(right_vine(index + 1), index, left_vine(3));
      BinaryTree bot = graft(right_vine(index + 1), index, right_vine(3));
      return reduce({top, BraidWord(index + 3), bot});
    }
    case GenFamily::b: {
      BinaryTree vine = right_vine(index + 2);
      BraidWord w = BraidWord::from_artin(index + 2, {{index, +1}});
      return reduce({vine, w, vine});
    }
    case GenFamily::a: {
      BVElement bj = generator(GenFamily::b, index);
      BVElement fj = generator(GenFamily::f, index);
      BVElement bnext = generator(GenFamily::b, index + 1);
      return multiply(multiply(bj, fj), invert(bnext));
    }
  }
  throw std::invalid_argument("unknown generator family");
}

BVElement evaluate_word(const std::vector<GenLetter>& word) {
  BVElement acc;
  for (const GenLetter& l : word) {
    BVElement g = generator(l.family, l.index);
    acc = multiply(acc, l.sign > 0 ? g : invert(g));
  }
  return acc;
}

bool RelationReport::all_pass() const {
  for (const RelationInstance& r : instances)
    if (!r.pass) return false;
  return true;
}

namespace {

// Generators cached up to the largest subscript a relation instance needs.
struct GenCache {
  std::vector<BVElement> f, b, a;

  explicit GenCache(int top_index) {
    for (int j = 0; j <= top_index; ++j) {
      f.push_back(generator(GenFamily::f, j));
      b.push_back(generator(GenFamily::b, j));
      a.push_back(generator(GenFamily::a, j));
    }
  }
};

BVElement eval_side(const GenCache& g,
                    const std::vector<std::pair<char, int>>& gens,
                    const std::vector<int>& signs) {
  BVElement acc;
  for (size_t k = 0; k < gens.size(); ++k) {
    const auto& fam = gens[k].first == 'f'   ? g.f
                      : gens[k].first == 'b' ? g.b
                                             : g.a;
    const BVElement& e = fam[gens[k].second];
    acc = multiply(acc, signs[k] > 0 ? e : invert(e));
  }
  return acc;
}

std::string side_name(const std::vector<std::pair<char, int>>& gens,
                      const std::vector<int>& signs) {
  std::string s;
  for (size_t k = 0; k < gens.size(); ++k) {
    if (k) s += ' ';
    char c = gens[k].first;
    s += signs[k] > 0 ? c : static_cast<char>(c - 'a' + 'A');
    s += std::to_string(gens[k].second);
  }
  if (s.empty()) s = "1";
  return s;
}

void check_one(std::vector<RelationInstance>& out, const GenCache& g,
               int family, std::vector<std::pair<char, int>> lhs,
               std::vector<int> lsigns, std::vector<std::pair<char, int>> rhs,
               std::vector<int> rsigns) {
  const bool pass = eval_side(g, lhs, lsigns) == eval_side(g, rhs, rsigns);
  out.push_back({family, side_name(lhs, lsigns) + " = " + side_name(rhs, rsigns),
                 pass});
}

}  // namespace

RelationReport check_relations(int max_index) {
  if (max_index < 2)
    throw std::invalid_argument("max_index must be at least 2");
  const int K = max_index;
  GenCache g(K + 1);
  RelationReport rep;
  auto& out = rep.instances;

  for (int l = 0; l <= K; ++l)
    for (int h = 0; h < l; ++h) {
      check_one(out, g, 1, {{'f', l}, {'f', h}}, {1, 1},
                {{'f', h}, {'f', l + 1}}, {1, 1});
      check_one(out, g, 4, {{'b', l}, {'f', h}}, {1, 1},
                {{'f', h}, {'b', l + 1}}, {1, 1});
    }

  for (int h = 0; h <= K; ++h)
    for (int eps : {+1, -1})
      check_one(out, g, 2, {{'a', h}, {'f', h}}, {eps, 1},
                {{'f', h + 1}, {'a', h}, {'a', h + 1}}, {1, eps, eps});

  for (int l = 0; l <= K; ++l)
    for (int h = l + 2; h <= K; ++h)
      check_one(out, g, 3, {{'a', l}, {'f', h}}, {1, 1},
                {{'f', h}, {'a', l}}, {1, 1});

  for (int h = 0; h <= K; ++h)
    check_one(out, g, 5, {{'a', h}}, {1},
              {{'b', h + 1}, {'f', h}, {'b', h}}, {-1, -1, 1});

  for (int l = 0; l <= K; ++l)
    for (int h = l + 2; h <= K; ++h)
      check_one(out, g, 6, {{'a', l}, {'a', h}}, {1, 1},
                {{'a', h}, {'a', l}}, {1, 1});

  for (int h = 0; h <= K; ++h)
    check_one(out, g, 7, {{'a', h}, {'a', h + 1}, {'a', h}}, {1, 1, 1},
              {{'a', h + 1}, {'a', h}, {'a', h + 1}}, {1, 1, 1});

  for (int h = 0; h <= K; ++h)
    for (int l = h + 2; l <= K; ++l)
      check_one(out, g, 8, {{'b', l}, {'a', h}}, {1, 1},
                {{'a', h}, {'b', l}}, {1, 1});

  for (int h = 0; h <= K; ++h)
    check_one(out, g, 9, {{'a', h}, {'b', h + 1}, {'a', h}}, {1, 1, 1},
              {{'b', h + 1}, {'a', h}, {'b', h + 1}}, {1, 1, 1});

  for (int j = 0; j <= K; ++j)
    check_one(out, g, 10, {{'a', j}}, {1},
              {{'b', j}, {'f', j}, {'b', j + 1}}, {1, 1, -1});

  for (int i = 1; i <= K; ++i) {
    check_one(out, g, 11, {{'f', i}, {'f', i + 1}}, {1, -1},
              {{'f', 0}, {'f', i + 1}, {'f', 0}, {'f', i + 1}}, {1, 1, -1, -1});
    check_one(out, g, 11, {{'f', i + 1}, {'f', i}}, {1, -1},
              {{'f', i + 1}, {'f', 0}, {'f', i + 1}, {'f', 0}}, {1, 1, -1, -1});
  }

  return rep;
}

VElement v_identity() {
  return {BinaryTree::leaf(), perm_identity(1), BinaryTree::leaf()};
}

namespace {

VElement v_reduce(VElement e) {
  bool changed = true;
  while (changed) {
    changed = false;
    int i = 0;
    while (i + 1 < static_cast<int>(e.perm.size())) {
      const bool eye = e.perm[i + 1] == e.perm[i] + 1 &&
                       has_terminal_caret(e.top, i) &&
                       has_terminal_caret(e.bot, e.perm[i]);
      if (!eye) {
        ++i;
        continue;
      }
      e.top = remove_caret(e.top, i);
      e.bot = remove_caret(e.bot, e.perm[i]);
      e.perm = perm_delete_point(e.perm, i);
      changed = true;
    }
  }
  return e;
}

void v_expand_top_at(VElement& e, int i, const BinaryTree& s) {
  if (s.is_leaf()) return;
  e.top = add_caret(e.top, i);
  e.bot = add_caret(e.bot, e.perm[i]);
  e.perm = perm_double_point(e.perm, i);
  v_expand_top_at(e, i + 1, s.right());
  v_expand_top_at(e, i, s.left());
}

void v_expand_bottom_at(VElement& e, int j, const BinaryTree& s) {
  if (s.is_leaf()) return;
  const int i = preimage(e.perm, j);
  e.top = add_caret(e.top, i);
  e.bot = add_caret(e.bot, j);
  e.perm = perm_double_point(e.perm, i);
  v_expand_bottom_at(e, j + 1, s.right());
  v_expand_bottom_at(e, j, s.left());
}

}  // namespace

VElement project_to_v(const BVElement& e) {
  return v_reduce({e.top(), permutation_of(e.braid()), e.bot()});
}

VElement v_multiply(const VElement& a, const VElement& b) {
  Refinement ref = common_refinement(a.bot, b.top);
  VElement ae = a;
  for (auto it = ref.from_a.entries.rbegin(); it != ref.from_a.entries.rend();
       ++it)
    v_expand_bottom_at(ae, it->first, it->second);
  VElement be = b;
  for (auto it = ref.from_b.entries.rbegin(); it != ref.from_b.entries.rend();
       ++it)
    v_expand_top_at(be, it->first, it->second);
  return v_reduce({ae.top, perm_stack(ae.perm, be.perm), be.bot});
}

}  // namespace bv
