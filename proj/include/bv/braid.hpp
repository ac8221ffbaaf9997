#pragma once
// Braid words over the Garside generators: each letter is a positive simple
// braid (every pair of strands crosses at most once, so the letter is
// determined by its permutation) used with a sign.  Words compose top to
// bottom: the diagram of a*b is a stacked above b.
#include <cstdint>
#include <vector>

#include "bv/perm.hpp"

namespace bv {

struct SimpleBraid {
  Perm perm;  // top position -> bottom position

  int n() const { return static_cast<int>(perm.size()); }
  bool is_identity() const { return perm_is_identity(perm); }
  bool is_delta() const { return perm_is_delta(perm); }
  bool operator==(const SimpleBraid&) const = default;
};

SimpleBraid simple_identity(int n);
SimpleBraid simple_delta(int n);
SimpleBraid simple_from_permutation(Perm p);  // validates

// One Artin generator: the positive crossing of strands pos, pos+1 when
// sign = +1 (0-based position, 0 <= pos <= n-2).
struct ArtinGen {
  int pos;
  int sign;
  bool operator==(const ArtinGen&) const = default;
};

// A positive word in the Artin generators spelling the simple braid, in
// stacking order.  Its length is the crossing number of the braid.
std::vector<ArtinGen> artin_word(const SimpleBraid& s);

struct BraidLetter {
  SimpleBraid s;
  int sign;  // +1 or -1
  bool operator==(const BraidLetter&) const = default;
};

class BraidWord {
 public:
  explicit BraidWord(int n) : n_(n) {}
  BraidWord(int n, std::vector<BraidLetter> letters);

  static BraidWord from_artin(int n, const std::vector<ArtinGen>& word);

  int strand_count() const { return n_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  size_t letter_count() const { return letters_.size(); }
  void push(SimpleBraid s, int sign);

 private:
  int n_;
  std::vector<BraidLetter> letters_;
};

Perm permutation_of(const BraidWord& w);
BraidWord braid_concat(const BraidWord& a, const BraidWord& b);
BraidWord braid_inverse(const BraidWord& w);

// Remove strand i (0-based top index).  Letters that become trivial are
// dropped, so the letter count never grows.
BraidWord delete_strand(const BraidWord& w, int i);

// Replace strand i by two parallel copies entering at top positions i, i+1.
// Letter count is preserved.
BraidWord double_strand(const BraidWord& w, int i);

// Strands i and i+1 bound a band that nothing links: deleting strand i and
// doubling the survivor gives back the same braid.
bool strands_parallel(const BraidWord& w, int i);

// Right-greedy normal form  delta^p . x1 ... xk : every xi is a simple braid
// other than the identity and the half twist, and no Artin generator can be
// moved from the tail of xi into the head of x(i+1) keeping both simple.
struct NormalForm {
  int n = 1;
  int64_t delta_power = 0;
  std::vector<SimpleBraid> factors;

  bool operator==(const NormalForm&) const = default;
  bool is_identity() const { return delta_power == 0 && factors.empty(); }
};

NormalForm normal_form(const BraidWord& w);
BraidWord word_of(const NormalForm& nf);
Perm permutation_of(const NormalForm& nf);

bool braids_equal(const BraidWord& a, const BraidWord& b);

}  // namespace bv
