#pragma once
// Commutator key exchange simulated over the group.  Both parties publish a
// set of elements, pick a private product of their own set, exchange the
// conjugates of each other's sets, and reconstruct the same commutator.
// This is a correctness/experimentation artifact, not a secure system.
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bv/element.hpp"
#include "bv/rng.hpp"

namespace bv {

struct KexParams {
  int alice_set_size = 3;
  int alice_key_length = 4;
  int bob_set_size = 3;
  int bob_key_length = 4;
  int public_gen_word_length = 6;
  uint64_t seed = 42;
};

// Throws std::invalid_argument on out-of-range sizes.
void validate(const KexParams& p);

struct RecipeStep {
  int index;
  int sign;  // +1 or -1
};
using Recipe = std::vector<RecipeStep>;

// Private keys and recipes are stored only so tests can cross-check the
// protocol algebra; a real party would never reveal them.
struct KexSession {
  KexParams params;
  std::vector<BVElement> alice_public, bob_public;
  BVElement alice_key, bob_key;
  Recipe alice_recipe, bob_recipe;
  std::vector<BVElement> alice_msg, bob_msg;
  BVElement shared_secret_alice, shared_secret_bob;
};

// Random word of the given length over f0, f1, b0, b1 and inverses.  Each
// letter costs two draws: generator (4 choices), then sign (0 = positive).
BVElement sample_element(SplitMix64& rng, int word_length);

// Random product over the public set; each step draws index then sign.
std::pair<BVElement, Recipe> sample_key(SplitMix64& rng,
                                        const std::vector<BVElement>& pub,
                                        int key_length);

BVElement apply_recipe(const Recipe& recipe,
                       const std::vector<BVElement>& set);

// key . t . key^-1 for each t, composed in deferred form and reduced once.
std::vector<BVElement> conjugate_tuple(const BVElement& key,
                                       const std::vector<BVElement>& tuple);

KexSession run_session(const KexParams& params);

// Plain-text block: params, public sets, messages, both secrets, verdict.
std::string transcript(const KexSession& s);

}  // namespace bv
