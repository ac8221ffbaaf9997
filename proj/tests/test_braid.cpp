#include <algorithm>
#include <stdexcept>

#include "bv/braid.hpp"
#include "bv/rng.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace bv;

namespace {

BraidWord random_word(SplitMix64& rng, int n, int len) {
  std::vector<ArtinGen> gens;
  gens.reserve(len);
  for (int t = 0; t < len; ++t)
    gens.push_back({static_cast<int>(rng.below(n - 1)),
                    rng.below(2) == 0 ? +1 : -1});
  return BraidWord::from_artin(n, gens);
}

}  // namespace

TEST_CASE("simple braids from permutations") {
  CHECK(simple_from_permutation(Perm{0, 1, 2}).is_identity());
  const SimpleBraid s1 = simple_from_permutation(Perm{1, 0});
  CHECK(artin_word(s1) == std::vector<ArtinGen>{{0, +1}});
  const SimpleBraid d3 = simple_from_permutation(Perm{2, 1, 0});
  CHECK(d3.is_delta());
  CHECK(artin_word(d3).size() == 3);
  CHECK_THROWS_AS(simple_from_permutation(Perm{0, 0}), std::invalid_argument);
  // spelling a simple braid as Artin letters and reassembling is lossless
  SplitMix64 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(9));
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    for (int i = n - 1; i > 0; --i)
      std::swap(p[i], p[rng.below(i + 1)]);
    const SimpleBraid s = simple_from_permutation(p);
    CHECK(permutation_of(BraidWord::from_artin(n, artin_word(s))) == p);
    CHECK(artin_word(s).size() == oracle::inversions(p).size());
  }
}

TEST_CASE("braid words") {
  const BraidWord w1 = BraidWord::from_artin(2, {{0, +1}});
  REQUIRE(w1.letter_count() == 1);
  CHECK(w1.letters()[0].s.perm == Perm{1, 0});
  CHECK(w1.letters()[0].sign == +1);
  CHECK(BraidWord::from_artin(3, {}).letter_count() == 0);
  const BraidWord w2 = BraidWord::from_artin(3, {{0, +1}, {1, -1}});
  REQUIRE(w2.letter_count() == 2);
  CHECK(w2.letters()[1].s.perm == Perm{0, 2, 1});
  CHECK(w2.letters()[1].sign == -1);
  CHECK_THROWS_AS(BraidWord::from_artin(2, {{1, +1}}), std::out_of_range);

  CHECK(braid_concat(BraidWord(3), w2).letter_count() == 2);
  CHECK_THROWS_AS(braid_concat(w1, w2), std::invalid_argument);
  // reverse the letters and flip each sign
  const BraidWord inv2 = braid_inverse(w2);
  REQUIRE(inv2.letter_count() == 2);
  CHECK(inv2.letters()[0].s.perm == Perm{0, 2, 1});
  CHECK(inv2.letters()[0].sign == +1);
  CHECK(inv2.letters()[1].s.perm == Perm{1, 0, 2});
  CHECK(inv2.letters()[1].sign == -1);
  CHECK(braid_inverse(BraidWord(4)).letter_count() == 0);
}

TEST_CASE("permutation of a word") {
  CHECK(permutation_of(BraidWord(3)) == perm_identity(3));
  CHECK(permutation_of(BraidWord::from_artin(2, {{0, +1}})) == Perm{1, 0});
  CHECK(permutation_of(BraidWord::from_artin(2, {{0, +1}, {0, +1}})) ==
        perm_identity(2));
  SplitMix64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(6));
    const BraidWord a = random_word(rng, n, 6), b = random_word(rng, n, 6);
    CHECK(permutation_of(braid_concat(a, b)) ==
          perm_stack(permutation_of(a), permutation_of(b)));
  }
}

TEST_CASE("normal form: pinned cases") {
  const NormalForm nf0 = normal_form(BraidWord(5));
  CHECK(nf0.n == 5);
  CHECK(nf0.delta_power == 0);
  CHECK(nf0.factors.empty());
  CHECK(nf0.is_identity());

  const NormalForm nfd =
      normal_form(BraidWord::from_artin(3, {{0, +1}, {1, +1}, {0, +1}}));
  CHECK(nfd.delta_power == 1);
  CHECK(nfd.factors.empty());

  const NormalForm nfi = normal_form(BraidWord::from_artin(2, {{0, -1}}));
  CHECK(nfi.delta_power == -1);
  CHECK(nfi.factors.empty());

  const NormalForm nfs = normal_form(BraidWord::from_artin(3, {{0, +1}}));
  CHECK(nfs.delta_power == 0);
  REQUIRE(nfs.factors.size() == 1);
  CHECK(nfs.factors[0].perm == Perm{1, 0, 2});

  // mixed signs force a negative delta power and two factors
  const NormalForm nfm =
      normal_form(BraidWord::from_artin(4, {{1, -1}, {0, +1}}));
  CHECK(nfm.delta_power == -1);
  REQUIRE(nfm.factors.size() == 2);
  CHECK(nfm.factors[0].perm == Perm{0, 2, 3, 1});
  CHECK(nfm.factors[1].perm == Perm{3, 1, 0, 2});
}

TEST_CASE("normal form: structural properties") {
  SplitMix64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(7));
    const int len = 1 + static_cast<int>(rng.below(24));
    const BraidWord w = random_word(rng, n, len);
    const NormalForm nf = normal_form(w);

    CHECK(oracle::crossing_sum(nf) == oracle::crossing_sum(w));
    CHECK(permutation_of(nf) == permutation_of(w));
    CHECK(normal_form(word_of(nf)) == nf);

    for (const SimpleBraid& s : nf.factors) {
      CHECK_FALSE(s.is_identity());
      CHECK_FALSE(s.is_delta());
    }
    // Adjacent factors are right-weighted: a crossing could migrate from
    // the tail of the left factor only at a position where the right factor
    // does not already start, so every finishing position of the left factor
    // must be a starting position of the right one.
    for (size_t k = 0; k + 1 < nf.factors.size(); ++k) {
      const auto fin = perm_descents(perm_inverse(nf.factors[k].perm));
      const auto sta = perm_descents(nf.factors[k + 1].perm);
      CHECK(std::includes(sta.begin(), sta.end(), fin.begin(), fin.end()));
    }
  }
}

TEST_CASE("equality") {
  CHECK(braids_equal(BraidWord(3), BraidWord(3)));
  CHECK(braids_equal(BraidWord::from_artin(3, {{0, +1}, {1, +1}, {0, +1}}),
                     BraidWord::from_artin(3, {{1, +1}, {0, +1}, {1, +1}})));
  CHECK_FALSE(braids_equal(BraidWord::from_artin(2, {{0, +1}}),
                           BraidWord::from_artin(2, {{0, -1}})));
  CHECK_FALSE(braids_equal(BraidWord(2), BraidWord(3)));
  SplitMix64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(5));
    const BraidWord w = random_word(rng, n, 10);
    CHECK(braids_equal(braid_concat(w, braid_inverse(w)), BraidWord(n)));
  }
}

TEST_CASE("strand surgery: pinned cases") {
  const BraidWord s1b2 = BraidWord::from_artin(2, {{0, +1}});
  CHECK(delete_strand(s1b2, 0).strand_count() == 1);
  CHECK(delete_strand(s1b2, 0).letter_count() == 0);
  CHECK(braids_equal(delete_strand(BraidWord::from_artin(3, {{0, +1}}), 2),
                     s1b2));
  // strand 0 fully unlinks the crossing of the other two
  const BraidWord w = BraidWord::from_artin(3, {{0, +1}, {1, +1}});
  CHECK(braids_equal(delete_strand(w, 0), BraidWord(2)));

  CHECK(double_strand(BraidWord(1), 0).strand_count() == 2);
  const BraidWord d0 = double_strand(s1b2, 0);
  REQUIRE(d0.letter_count() == 1);
  CHECK(d0.letters()[0].s.perm == Perm{1, 2, 0});
  const BraidWord d1 = double_strand(s1b2, 1);
  REQUIRE(d1.letter_count() == 1);
  CHECK(d1.letters()[0].s.perm == Perm{2, 0, 1});
  CHECK_THROWS_AS(delete_strand(s1b2, 2), std::out_of_range);
}

TEST_CASE("strand surgery: laws") {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(6));
    const BraidWord w = random_word(rng, n, 12);
    const int i = static_cast<int>(rng.below(n));
    const BraidWord dd = double_strand(w, i);
    CHECK(dd.letter_count() == w.letter_count());
    CHECK(braids_equal(delete_strand(dd, i), w));
    const BraidWord del = delete_strand(w, i);
    CHECK(del.letter_count() <= w.letter_count());
  }
}

TEST_CASE("parallel strands") {
  for (int i = 0; i < 2; ++i) CHECK(strands_parallel(BraidWord(3), i));
  CHECK_FALSE(strands_parallel(BraidWord::from_artin(2, {{0, +1}}), 0));
  const BraidWord twin = double_strand(BraidWord::from_artin(2, {{0, +1}}), 0);
  CHECK(strands_parallel(twin, 0));
  CHECK_FALSE(strands_parallel(twin, 1));
  SplitMix64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(5));
    const BraidWord w = random_word(rng, n, 8);
    const int i = static_cast<int>(rng.below(n));
    CHECK(strands_parallel(double_strand(w, i), i));
  }
}
