#pragma once
// Group elements as tree-braid-tree triples.  A RawTriple is any compatible
// stack of top tree, braid, bottom tree; a BVElement is the unique reduced
// representative with the braid in normal form, so equality is structural.
#include <string>
#include <vector>

#include "bv/braid.hpp"
#include "bv/perm.hpp"
#include "bv/tree.hpp"

namespace bv {

struct RawTriple {
  BinaryTree top;
  BraidWord braid;
  BinaryTree bot;
};

RawTriple raw_identity();
RawTriple raw_inverse(const RawTriple& r);

// Stack a over b after growing both onto the common refinement of a's bottom
// tree and b's top tree.  No reduction or normalization happens here; this is
// the deferred mode used for bulk products.
RawTriple raw_multiply(const RawTriple& a, const RawTriple& b);

class BVElement {
 public:
  BVElement();  // identity: single leaf over a single strand

  const BinaryTree& top() const { return top_; }
  const BinaryTree& bot() const { return bot_; }
  const NormalForm& braid() const { return nf_; }
  int strand_count() const { return nf_.n; }

  RawTriple raw() const;

  bool operator==(const BVElement&) const = default;

  friend BVElement reduce(RawTriple r);

 private:
  BinaryTree top_, bot_;
  NormalForm nf_;
};

// Remove eyes until none is left and normalize the braid.  The reduced
// representative is unique, so the sweep order cannot change the result.
BVElement reduce(RawTriple r);

enum class Side { top, bottom };

// Grow the tree on the given side onto target (which must refine it),
// doubling the strands under each added caret and adding the matching caret
// on the far side.  Throws std::invalid_argument if target does not refine.
// The RawTriple form lets expansions stack without re-reducing in between.
RawTriple unreduce(const RawTriple& r, Side side, const BinaryTree& target);
RawTriple unreduce(const BVElement& e, Side side, const BinaryTree& target);

BVElement multiply(const BVElement& a, const BVElement& b);
BVElement invert(const BVElement& e);

enum class GenFamily { f, b, a };

// f_j: the braid-free right-vine generators (the copy of Thompson's F);
// b_j: a single positive crossing of the last two strands under a right vine
// with j+2 leaves; a_j = b_j f_j b_(j+1)^-1.
BVElement generator(GenFamily fam, int index);

struct GenLetter {
  GenFamily family;
  int index;
  int sign;  // +1 or -1
  bool operator==(const GenLetter&) const = default;
};

BVElement evaluate_word(const std::vector<GenLetter>& word);

struct RelationInstance {
  int family;        // 1..10, or 11 for the commutator identities
  std::string name;  // the instantiated equation, e.g. "f1 f0 = f0 f2"
  bool pass;
};

struct RelationReport {
  std::vector<RelationInstance> instances;
  bool all_pass() const;
};

// Instantiate the defining relations of the generator presentation for all
// subscripts up to max_index (composite subscripts may exceed it by one) and
// check each one.  Throws std::invalid_argument if max_index < 2.
RelationReport check_relations(int max_index);

// The quotient that forgets braiding and keeps only the permutation: the
// image is Thompson's group V, where squares of the b generators die.
struct VElement {
  BinaryTree top;
  Perm perm;
  BinaryTree bot;

  bool operator==(const VElement&) const = default;
};

VElement v_identity();
VElement project_to_v(const BVElement& e);
VElement v_multiply(const VElement& a, const VElement& b);

}  // namespace bv
