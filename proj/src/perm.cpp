#include "bv/perm.hpp"

#include <cassert>
#include <stdexcept>

namespace bv {

Perm perm_identity(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

Perm perm_delta(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = n - 1 - i;
  return p;
}

bool perm_is_valid(const Perm& p) {
  const int n = static_cast<int>(p.size());
  std::vector<char> seen(n, 0);
  for (int32_t v : p) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool perm_is_identity(const Perm& p) {
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    if (p[i] != i) return false;
  return true;
}

bool perm_is_delta(const Perm& p) {
  const int n = static_cast<int>(p.size());
  for (int i = 0; i < n; ++i)
    if (p[i] != n - 1 - i) return false;
  return true;
}

Perm perm_inverse(const Perm& p) {
  Perm q(p.size());
  for (int i = 0; i < static_cast<int>(p.size()); ++i) q[p[i]] = i;
  return q;
}

Perm perm_compose(const Perm& outer, const Perm& inner) {
  assert(outer.size() == inner.size());
  Perm q(inner.size());
  for (size_t i = 0; i < inner.size(); ++i) q[i] = outer[inner[i]];
  return q;
}

Perm perm_tau(const Perm& p) {
  const int n = static_cast<int>(p.size());
  Perm q(n);
  for (int i = 0; i < n; ++i) q[i] = n - 1 - p[n - 1 - i];
  return q;
}

Perm perm_right_complement(const Perm& a) {
  const int n = static_cast<int>(a.size());
  Perm inv = perm_inverse(a);
  Perm q(n);
  for (int i = 0; i < n; ++i) q[i] = n - 1 - inv[i];
  return q;
}

Perm perm_left_complement(const Perm& a) {
  const int n = static_cast<int>(a.size());
  Perm inv = perm_inverse(a);
  Perm q(n);
  for (int i = 0; i < n; ++i) q[i] = inv[n - 1 - i];
  return q;
}

std::vector<int32_t> perm_descents(const Perm& p) {
  std::vector<int32_t> out;
  for (int i = 0; i + 1 < static_cast<int>(p.size()); ++i)
    if (p[i] > p[i + 1]) out.push_back(i);
  return out;
}

Perm perm_meet(const Perm& x, const Perm& y) {
  assert(x.size() == y.size());
  const int n = static_cast<int>(x.size());
  // Greatest lower bound in prefix order: grow an arrangement from the
  // identity, swapping adjacent strands only when the swap creates an
  // inversion that x and y share.  A divide-and-conquer merge is tempting
  // but wrong here: merging decides each pair once, yet a shared inversion
  // (u,v) is only usable when u and v can actually become adjacent, which
  // depends on the pairs in between.  The sweep re-tests until nothing
  // moves, which is exactly the closure the meet needs.
  std::vector<int32_t> arr = perm_identity(n);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int k = 0; k + 1 < n; ++k) {
      const int32_t u = arr[k], v = arr[k + 1];
      if (u < v && x[u] > x[v] && y[u] > y[v]) {
        arr[k] = v;
        arr[k + 1] = u;
        changed = true;
      }
    }
  }
  Perm t(n);
  for (int k = 0; k < n; ++k) t[arr[k]] = k;
  return t;
}

Perm perm_delete_point(const Perm& p, int i) {
  const int n = static_cast<int>(p.size());
  if (i < 0 || i >= n) throw std::out_of_range("strand index out of range");
  const int32_t q = p[i];
  Perm out(n - 1);
  for (int j = 0; j < n; ++j) {
    if (j == i) continue;
    const int jj = j < i ? j : j - 1;
    const int32_t v = p[j];
    out[jj] = v < q ? v : v - 1;
  }
  return out;
}

Perm perm_double_point(const Perm& p, int i) {
  const int n = static_cast<int>(p.size());
  if (i < 0 || i >= n) throw std::out_of_range("strand index out of range");
  const int32_t q = p[i];
  Perm out(n + 1);
  for (int j = 0; j < n; ++j) {
    if (j == i) continue;
    const int jj = j < i ? j : j + 1;
    const int32_t v = p[j];
    out[jj] = v < q ? v : v + 1;
  }
  out[i] = q;
  out[i + 1] = q + 1;
  return out;
}

}  // namespace bv
