#include <stdexcept>

#include "bv/bench.hpp"
#include "bv/element.hpp"
#include "bv/rng.hpp"
#include "bv/text.hpp"
#include "doctest.h"

using namespace bv;

namespace {

BinaryTree L() { return BinaryTree::leaf(); }
BinaryTree C(BinaryTree a, BinaryTree b) {
  return BinaryTree::caret(std::move(a), std::move(b));
}

BVElement b0() { return generator(GenFamily::b, 0); }
BVElement f0() { return generator(GenFamily::f, 0); }

// generator words over f0, f1, b0, b1, a0, a1 with random signs
BVElement random_word_element(SplitMix64& rng, int max_len) {
  const int len = static_cast<int>(rng.below(max_len + 1));
  std::vector<GenLetter> word;
  for (int t = 0; t < len; ++t) {
    static const GenFamily fams[] = {GenFamily::f, GenFamily::b, GenFamily::a};
    word.push_back({fams[rng.below(3)], static_cast<int>(rng.below(2)),
                    rng.below(2) == 0 ? +1 : -1});
  }
  return evaluate_word(word);
}

}  // namespace

TEST_CASE("reduce: pinned cases") {
  const BVElement eye = reduce({C(L(), L()), BraidWord(2), C(L(), L())});
  CHECK(eye == BVElement());
  CHECK(eye.top() == L());
  CHECK(eye.strand_count() == 1);

  // a single crossing is not an eye
  const BVElement cross =
      reduce({C(L(), L()), BraidWord::from_artin(2, {{0, +1}}), C(L(), L())});
  CHECK(cross == b0());
  CHECK(cross.top() == C(L(), L()));

  CHECK(reduce(b0().raw()) == b0());
  CHECK(reduce(f0().raw()) == f0());
  CHECK_THROWS_AS(reduce({C(L(), L()), BraidWord(3), L()}),
                  std::invalid_argument);
}

TEST_CASE("unreduce grows matching carets") {
  const RawTriple grown =
      unreduce(BVElement(), Side::bottom, C(L(), L()));
  CHECK(grown.top == C(L(), L()));
  CHECK(grown.bot == C(L(), L()));
  CHECK(grown.braid.strand_count() == 2);
  CHECK(grown.braid.letter_count() == 0);

  const RawTriple same = unreduce(b0(), Side::top, b0().top());
  CHECK(same.top == b0().top());
  CHECK(same.braid.strand_count() == 2);

  const RawTriple wide = unreduce(b0(), Side::bottom, left_vine(3));
  CHECK(wide.braid.strand_count() == 3);
  CHECK(wide.top == right_vine(3));
  CHECK(reduce(wide) == b0());

  CHECK_THROWS_AS(unreduce(f0(), Side::top, right_vine(3)),
                  std::invalid_argument);
}

TEST_CASE("multiply and invert: pinned cases") {
  CHECK(multiply(b0(), BVElement()) == b0());
  CHECK(multiply(BVElement(), f0()) == f0());
  CHECK(multiply(f0(), invert(f0())) == BVElement());

  const BVElement sq = multiply(b0(), b0());
  CHECK(sq.top() == C(L(), L()));
  CHECK(sq.braid().delta_power == 2);
  CHECK(sq.braid().factors.empty());
  CHECK_FALSE(sq == BVElement());

  const BVElement ib = invert(b0());
  CHECK(ib.braid().delta_power == -1);
  CHECK(invert(BVElement()) == BVElement());
  CHECK(invert(invert(f0())) == f0());
}

TEST_CASE("equality separates and identifies") {
  CHECK(BVElement() == BVElement());
  CHECK_FALSE(b0() == BVElement());
  CHECK_FALSE(f0() == generator(GenFamily::f, 1));
  const BVElement lhs = multiply(generator(GenFamily::f, 1), f0());
  const BVElement rhs = multiply(f0(), generator(GenFamily::f, 2));
  CHECK(lhs == rhs);
}

TEST_CASE("generators") {
  CHECK(print_element(b0()) == "T: (()())\nB: D^1 |\nTb: (()())\n");
  CHECK(f0().top() == left_vine(3));
  CHECK(f0().bot() == right_vine(3));
  CHECK(f0().braid().is_identity());
  CHECK(f0().strand_count() == 3);

  const BVElement a0 = generator(GenFamily::a, 0);
  const BVElement built = multiply(multiply(b0(), f0()),
                                   invert(generator(GenFamily::b, 1)));
  CHECK(a0 == built);
  CHECK_THROWS_AS(generator(GenFamily::f, -1), std::invalid_argument);
}

TEST_CASE("word evaluation") {
  CHECK(evaluate_word({}) == BVElement());
  CHECK(evaluate_word({{GenFamily::f, 0, +1}, {GenFamily::f, 0, -1}}) ==
        BVElement());
  const BVElement bsq =
      evaluate_word({{GenFamily::b, 0, +1}, {GenFamily::b, 0, +1}});
  CHECK_FALSE(bsq == BVElement());
  CHECK(project_to_v(bsq) == v_identity());
}

TEST_CASE("group axioms on random elements") {
  SplitMix64 rng(10);
  for (int trial = 0; trial < 60; ++trial) {
    const BVElement a = random_word_element(rng, 8);
    const BVElement b = random_word_element(rng, 8);
    const BVElement c = random_word_element(rng, 8);
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    CHECK(multiply(a, invert(a)) == BVElement());
    CHECK(multiply(invert(a), a) == BVElement());
    CHECK(multiply(a, BVElement()) == a);
    CHECK(multiply(BVElement(), a) == a);
  }
}

TEST_CASE("reduction is confluent under random expansions") {
  SplitMix64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const BVElement e = random_word_element(rng, 10);
    RawTriple r = e.raw();
    const int steps = static_cast<int>(rng.below(4));
    for (int s = 0; s < steps; ++s) {
      const Side side = rng.below(2) == 0 ? Side::top : Side::bottom;
      BinaryTree t = side == Side::top ? r.top : r.bot;
      const int grows = 1 + static_cast<int>(rng.below(3));
      for (int g = 0; g < grows; ++g)
        t = add_caret(t, static_cast<int>(rng.below(t.leaf_count())));
      r = unreduce(r, side, t);
    }
    CHECK(reduce(r) == e);
  }
}

TEST_CASE("products of the f family stay braid-free") {
  SplitMix64 rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<GenLetter> word;
    for (int t = 0; t < 8; ++t)
      word.push_back({GenFamily::f, static_cast<int>(rng.below(3)),
                      rng.below(2) == 0 ? +1 : -1});
    CHECK(evaluate_word(word).braid().is_identity());
  }
}

TEST_CASE("projection to the permutation quotient") {
  CHECK(project_to_v(BVElement()) == v_identity());
  const VElement vb = project_to_v(b0());
  CHECK(vb.top == C(L(), L()));
  CHECK(vb.perm == Perm{1, 0});
  CHECK(project_to_v(multiply(b0(), b0())) == v_identity());

  for (int j = 0; j <= 3; ++j) {
    const BVElement bj = generator(GenFamily::b, j);
    CHECK(project_to_v(multiply(bj, bj)) == v_identity());
  }

  SplitMix64 rng(16);
  for (int trial = 0; trial < 60; ++trial) {
    const BVElement a = random_word_element(rng, 8);
    const BVElement b = random_word_element(rng, 8);
    CHECK(project_to_v(multiply(a, b)) ==
          v_multiply(project_to_v(a), project_to_v(b)));
  }
}

// raw_multiply defers reduction; the result must still reduce to the product
TEST_CASE("deferred products match reduced products") {
  SplitMix64 rng(18);
  for (int trial = 0; trial < 40; ++trial) {
    const BVElement a = random_word_element(rng, 8);
    const BVElement b = random_word_element(rng, 8);
    const BVElement c = random_word_element(rng, 8);
    const RawTriple chain =
        raw_multiply(raw_multiply(a.raw(), b.raw()), c.raw());
    CHECK(reduce(chain) == multiply(multiply(a, b), c));
  }
}
