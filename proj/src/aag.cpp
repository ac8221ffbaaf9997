#include "bv/aag.hpp"

#include <stdexcept>
#include <tuple>

#include "bv/text.hpp"

namespace bv {

void validate(const KexParams& p) {
  if (p.alice_set_size < 0 || p.bob_set_size < 0 ||
      p.alice_key_length < 0 || p.bob_key_length < 0 ||
      p.public_gen_word_length < 0)
    throw std::invalid_argument("negative size or length");
  if (p.alice_key_length >= 1 && p.alice_set_size < 1)
    throw std::invalid_argument("alice needs a nonempty public set");
  if (p.bob_key_length >= 1 && p.bob_set_size < 1)
    throw std::invalid_argument("bob needs a nonempty public set");
}

BVElement sample_element(SplitMix64& rng, int word_length) {
  std::vector<GenLetter> word;
  word.reserve(word_length);
  for (int t = 0; t < word_length; ++t) {
    const uint64_t which = rng.below(4);
    const GenFamily fam = which < 2 ? GenFamily::f : GenFamily::b;
    const int index = static_cast<int>(which % 2);
    const int sign = rng.below(2) == 0 ? +1 : -1;
    word.push_back({fam, index, sign});
  }
  return evaluate_word(word);
}

std::pair<BVElement, Recipe> sample_key(SplitMix64& rng,
                                        const std::vector<BVElement>& pub,
                                        int key_length) {
  if (key_length >= 1 && pub.empty())
    throw std::invalid_argument("empty public set with positive key length");
  BVElement key;
  Recipe recipe;
  for (int t = 0; t < key_length; ++t) {
    const int index = static_cast<int>(rng.below(pub.size()));
    const int sign = rng.below(2) == 0 ? +1 : -1;
    recipe.push_back({index, sign});
    key = multiply(key, sign > 0 ? pub[index] : invert(pub[index]));
  }
  return {key, recipe};
}

BVElement apply_recipe(const Recipe& recipe,
                       const std::vector<BVElement>& set) {
  BVElement acc;
  for (const RecipeStep& s : recipe)
    acc = multiply(acc, s.sign > 0 ? set[s.index] : invert(set[s.index]));
  return acc;
}

std::vector<BVElement> conjugate_tuple(const BVElement& key,
                                       const std::vector<BVElement>& tuple) {
  const RawTriple k = key.raw();
  const RawTriple kinv = raw_inverse(k);
  std::vector<BVElement> out;
  out.reserve(tuple.size());
  for (const BVElement& t : tuple)
    out.push_back(reduce(raw_multiply(raw_multiply(k, t.raw()), kinv)));
  return out;
}

KexSession run_session(const KexParams& params) {
  validate(params);
  KexSession s;
  s.params = params;
  SplitMix64 rng(params.seed);

  for (int k = 0; k < params.alice_set_size; ++k)
    s.alice_public.push_back(
        sample_element(rng, params.public_gen_word_length));
  for (int k = 0; k < params.bob_set_size; ++k)
    s.bob_public.push_back(sample_element(rng, params.public_gen_word_length));

  std::tie(s.alice_key, s.alice_recipe) =
      sample_key(rng, s.alice_public, params.alice_key_length);
  std::tie(s.bob_key, s.bob_recipe) =
      sample_key(rng, s.bob_public, params.bob_key_length);

  s.alice_msg = conjugate_tuple(s.alice_key, s.bob_public);
  s.bob_msg = conjugate_tuple(s.bob_key, s.alice_public);

  // Alice substitutes her recipe into the conjugates she received, getting
  // B A B^-1; together with A this yields A B A^-1 B^-1.  Bob gets A B A^-1
  // from his recipe and appends B^-1, reaching the same element.
  const BVElement from_bob = apply_recipe(s.alice_recipe, s.bob_msg);
  s.shared_secret_alice = multiply(s.alice_key, invert(from_bob));
  const BVElement from_alice = apply_recipe(s.bob_recipe, s.alice_msg);
  s.shared_secret_bob = multiply(from_alice, invert(s.bob_key));
  return s;
}

namespace {

void append_tuple(std::string& out, const std::string& label,
                  const std::vector<BVElement>& tuple) {
  for (size_t k = 0; k < tuple.size(); ++k) {
    out += label + " " + std::to_string(k) + ":\n";
    out += print_element(tuple[k]);
  }
}

}  // namespace

std::string transcript(const KexSession& s) {
  const KexParams& p = s.params;
  std::string out;
  out += "params: alice-set=" + std::to_string(p.alice_set_size) +
         " alice-len=" + std::to_string(p.alice_key_length) +
         " bob-set=" + std::to_string(p.bob_set_size) +
         " bob-len=" + std::to_string(p.bob_key_length) +
         " gen-len=" + std::to_string(p.public_gen_word_length) +
         " seed=" + std::to_string(p.seed) + "\n";
  append_tuple(out, "alice public", s.alice_public);
  append_tuple(out, "bob public", s.bob_public);
  append_tuple(out, "alice message", s.alice_msg);
  append_tuple(out, "bob message", s.bob_msg);
  out += "shared secret (alice):\n" + print_element(s.shared_secret_alice);
  out += "shared secret (bob):\n" + print_element(s.shared_secret_bob);
  out += s.shared_secret_alice == s.shared_secret_bob ? "secrets match\n"
                                                      : "secrets mismatch\n";
  return out;
}

}  // namespace bv
