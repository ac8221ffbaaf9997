#pragma once
// Reduced words in a free group and the braid action on them.  A letter is a
// nonzero integer: +k stands for the generator x_k and -k for its inverse
// (k is 1-based so that 0 never appears).  This module exists to serve as an
// equality oracle for braid words that is independent of normal forms: the
// action of B_n on the free group of rank n is faithful, so two words are
// equal in B_n exactly when their action tables coincide.
#include <cstdint>
#include <vector>

#include "bv/braid.hpp"

namespace bv {

using FreeWord = std::vector<int32_t>;

FreeWord free_reduce(const FreeWord& w);
FreeWord free_inverse(const FreeWord& w);
FreeWord free_concat(const FreeWord& a, const FreeWord& b);

// Replace every letter +-k of w by images[k-1] (or its inverse) and reduce.
FreeWord free_substitute(const FreeWord& w, const std::vector<FreeWord>& images);

// Images of x_1..x_n under an endomorphism, each freely reduced.
struct ActionTable {
  std::vector<FreeWord> image;

  int rank() const { return static_cast<int>(image.size()); }
  bool operator==(const ActionTable&) const = default;
};

ActionTable action_identity(int n);

// The Artin action of a braid word, letter by letter.  A positive crossing
// at position i (0-based) maps x_(i+1) to x_(i+1) x_(i+2) x_(i+1)^-1 and
// x_(i+2) to x_(i+1), fixing the rest; a negative crossing applies the
// inverse substitution.  Letters act left to right.
ActionTable artin_action(const BraidWord& w);

}  // namespace bv
