#include "bv/braid.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace bv {

SimpleBraid simple_identity(int n) { return {perm_identity(n)}; }
SimpleBraid simple_delta(int n) { return {perm_delta(n)}; }

SimpleBraid simple_from_permutation(Perm p) {
  if (!perm_is_valid(p)) throw std::invalid_argument("not a permutation");
  return {std::move(p)};
}

std::vector<ArtinGen> artin_word(const SimpleBraid& s) {
  // Bubble sort of the image sequence; each swap is one positive crossing,
  // and no pair is swapped twice, so the word is reduced.
  Perm a = s.perm;
  const int n = s.n();
  std::vector<ArtinGen> out;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (a[i] > a[i + 1]) {
        std::swap(a[i], a[i + 1]);
        out.push_back({i, +1});
        moved = true;
      }
    }
  }
  return out;
}

BraidWord::BraidWord(int n, std::vector<BraidLetter> letters)
    : n_(n), letters_(std::move(letters)) {
  for (const BraidLetter& l : letters_) {
    if (l.s.n() != n_) throw std::invalid_argument("letter strand count mismatch");
    if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +-1");
  }
}

void BraidWord::push(SimpleBraid s, int sign) {
  if (s.n() != n_) throw std::invalid_argument("letter strand count mismatch");
  if (sign != 1 && sign != -1) throw std::invalid_argument("letter sign must be +-1");
  letters_.push_back({std::move(s), sign});
}

BraidWord BraidWord::from_artin(int n, const std::vector<ArtinGen>& word) {
  BraidWord w(n);
  for (const ArtinGen& g : word) {
    if (g.pos < 0 || g.pos + 1 >= n) throw std::out_of_range("Artin generator out of range");
    Perm p = perm_identity(n);
    std::swap(p[g.pos], p[g.pos + 1]);
    w.push({std::move(p)}, g.sign);
  }
  return w;
}

Perm permutation_of(const BraidWord& w) {
  Perm p = perm_identity(w.strand_count());
  for (const BraidLetter& l : w.letters()) {
    const Perm q = l.sign > 0 ? l.s.perm : perm_inverse(l.s.perm);
    p = perm_stack(p, q);
  }
  return p;
}

BraidWord braid_concat(const BraidWord& a, const BraidWord& b) {
  if (a.strand_count() != b.strand_count())
    throw std::invalid_argument("strand count mismatch");
  std::vector<BraidLetter> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strand_count(), std::move(letters));
}

BraidWord braid_inverse(const BraidWord& w) {
  BraidWord out(w.strand_count());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    out.push(it->s, -it->sign);
  return out;
}

BraidWord delete_strand(const BraidWord& w, int i) {
  const int n = w.strand_count();
  if (i < 0 || i >= n) throw std::out_of_range("strand index out of range");
  if (n == 1) return BraidWord(0);
  BraidWord out(n - 1);
  int c = i;
  for (const BraidLetter& l : w.letters()) {
    int at;  // top index of the tracked strand inside this letter's braid
    if (l.sign > 0) {
      at = c;
      c = l.s.perm[c];
    } else {
      // the letter acts as the inverse braid; its top position c is the
      // bottom position c of the stored simple braid
      at = static_cast<int>(perm_inverse(l.s.perm)[c]);
      c = at;
    }
    Perm p = perm_delete_point(l.s.perm, at);
    if (!perm_is_identity(p)) out.push({std::move(p)}, l.sign);
  }
  return out;
}

BraidWord double_strand(const BraidWord& w, int i) {
  const int n = w.strand_count();
  if (i < 0 || i >= n) throw std::out_of_range("strand index out of range");
  BraidWord out(n + 1);
  int c = i;
  for (const BraidLetter& l : w.letters()) {
    int at;
    if (l.sign > 0) {
      at = c;
      c = l.s.perm[c];
    } else {
      at = static_cast<int>(perm_inverse(l.s.perm)[c]);
      c = at;
    }
    out.push({perm_double_point(l.s.perm, at)}, l.sign);
  }
  return out;
}

bool strands_parallel(const BraidWord& w, int i) {
  const int n = w.strand_count();
  if (i < 0 || i + 1 >= n) throw std::out_of_range("strand index out of range");
  const Perm p = permutation_of(w);
  if (p[i + 1] != p[i] + 1) return false;
  return braids_equal(double_strand(delete_strand(w, i), i), w);
}

namespace {

// Left-greedy form  delta^q . z1 ... zm  of a word, the mirror of what the
// public normal form stores.  Negative letters are rewritten through the
// left complement, the half twists migrate to the front through tau, and
// right-to-left passes of maximal local transfers settle the factors.
struct LeftNF {
  int64_t delta = 0;
  std::vector<Perm> factors;
};

LeftNF left_normalize(int n, const std::vector<BraidLetter>& letters) {
  int64_t negs = 0;
  for (const BraidLetter& l : letters)
    if (l.sign < 0 && !l.s.is_identity()) ++negs;

  // s^{-1} = delta^{-1} . lc(s), and x . delta^{-1} = delta^{-1} . tau(x):
  // every factor gets one tau per half-twist inverse emitted to its right.
  std::vector<Perm> f;
  f.reserve(letters.size());
  int64_t seen = 0;
  for (const BraidLetter& l : letters) {
    if (l.s.is_identity()) continue;
    Perm p;
    if (l.sign > 0) {
      p = l.s.perm;
    } else {
      ++seen;
      p = perm_left_complement(l.s.perm);
    }
    if ((negs - seen) % 2 != 0) p = perm_tau(p);
    f.push_back(std::move(p));
  }

  const size_t m = f.size();
  if (m > 1) {
    // Each productive transfer moves at least one crossing one slot to the
    // left, and a word of m factors on n strands holds at most m*n*n/2 of
    // them, so the move count below is a finite-loop tripwire, not a tuning
    // knob.
    const uint64_t move_cap = static_cast<uint64_t>(m) * m * n * n + 4;
    uint64_t moves = 0;
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t k = m - 1; k-- > 0;) {
        Perm t = perm_meet(perm_right_complement(f[k]), f[k + 1]);
        if (!perm_is_identity(t)) {
          f[k + 1] = perm_compose(f[k + 1], perm_inverse(t));
          f[k] = perm_compose(t, f[k]);
          changed = true;
          ++moves;
          assert(moves < move_cap);
        }
      }
    }
  }

  LeftNF out;
  size_t lo = 0, hi = m;
  while (lo < hi && perm_is_delta(f[lo])) ++lo;
  while (hi > lo && perm_is_identity(f[hi - 1])) --hi;
  out.delta = -negs + static_cast<int64_t>(lo);
  out.factors.assign(std::make_move_iterator(f.begin() + lo),
                     std::make_move_iterator(f.begin() + hi));
  return out;
}

}  // namespace

NormalForm normal_form(const BraidWord& w) {
  const int n = w.strand_count();
  NormalForm nf;
  nf.n = n;
  if (n <= 1) return nf;

  // Right-greedy = left-greedy of the reversed word, read back in reverse.
  std::vector<BraidLetter> rev;
  rev.reserve(w.letter_count());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    rev.push_back({{perm_inverse(it->s.perm)}, it->sign});

  LeftNF lnf = left_normalize(n, rev);
  nf.delta_power = lnf.delta;
  nf.factors.reserve(lnf.factors.size());
  const bool twist = (lnf.delta % 2) != 0;
  for (auto it = lnf.factors.rbegin(); it != lnf.factors.rend(); ++it) {
    Perm p = perm_inverse(*it);
    if (twist) p = perm_tau(p);
    nf.factors.push_back({std::move(p)});
  }
  return nf;
}

BraidWord word_of(const NormalForm& nf) {
  BraidWord w(nf.n);
  const int sign = nf.delta_power < 0 ? -1 : 1;
  for (int64_t k = 0; k < (nf.delta_power < 0 ? -nf.delta_power : nf.delta_power); ++k)
    w.push(simple_delta(nf.n), sign);
  for (const SimpleBraid& s : nf.factors) w.push(s, +1);
  return w;
}

Perm permutation_of(const NormalForm& nf) {
  Perm p = (nf.delta_power % 2 != 0) ? perm_delta(nf.n) : perm_identity(nf.n);
  for (const SimpleBraid& s : nf.factors) p = perm_stack(p, s.perm);
  return p;
}

bool braids_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strand_count() != b.strand_count()) return false;
  return normal_form(a) == normal_form(b);
}

}  // namespace bv
