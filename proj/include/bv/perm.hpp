#pragma once
// Permutations of {0, ..., n-1} stored as image vectors: p[i] is the bottom
// position reached by the strand entering at top position i.  All indices in
// the library are 0-based; the text formats add 1 on output.
#include <cstdint>
#include <vector>

namespace bv {

using Perm = std::vector<int32_t>;

Perm perm_identity(int n);
Perm perm_delta(int n);  // order reversal i -> n-1-i
bool perm_is_valid(const Perm& p);
bool perm_is_identity(const Perm& p);
bool perm_is_delta(const Perm& p);

Perm perm_inverse(const Perm& p);

// compose(f, g)[i] = f[g[i]]
Perm perm_compose(const Perm& outer, const Perm& inner);

// Diagram of a stacked on top of b: strand i ends at b[a[i]].
inline Perm perm_stack(const Perm& a, const Perm& b) { return perm_compose(b, a); }

// Conjugation by the half twist: tau(p)[i] = n-1-p[n-1-i].  Involutive.
Perm perm_tau(const Perm& p);

// a . right_complement(a) = delta;  left_complement(a) . a = delta
Perm perm_right_complement(const Perm& a);
Perm perm_left_complement(const Perm& a);

// positions i with p[i] > p[i+1]
std::vector<int32_t> perm_descents(const Perm& p);

// Largest common prefix of two permutation braids: the maximal t that left
// divides both x and y in the subword order on positive permutation braids.
Perm perm_meet(const Perm& x, const Perm& y);

// Strand surgery on a single layer.  i is a 0-based top index.
Perm perm_delete_point(const Perm& p, int i);
Perm perm_double_point(const Perm& p, int i);

}  // namespace bv
