#include "bv/free_group.hpp"

#include <cassert>
#include <cstdlib>

namespace bv {

FreeWord free_reduce(const FreeWord& w) {
  FreeWord out;
  out.reserve(w.size());
  for (int32_t g : w) {
    assert(g != 0);
    if (!out.empty() && out.back() == -g)
      out.pop_back();
    else
      out.push_back(g);
  }
  return out;
}

FreeWord free_inverse(const FreeWord& w) {
  FreeWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

FreeWord free_concat(const FreeWord& a, const FreeWord& b) {
  FreeWord out = a;
  for (int32_t g : b) {
    if (!out.empty() && out.back() == -g)
      out.pop_back();
    else
      out.push_back(g);
  }
  return out;
}

FreeWord free_substitute(const FreeWord& w, const std::vector<FreeWord>& images) {
  FreeWord out;
  for (int32_t g : w) {
    const size_t k = static_cast<size_t>(std::abs(g)) - 1;
    assert(k < images.size());
    const FreeWord& img = images[k];
    if (g > 0) {
      out = free_concat(out, img);
    } else {
      out = free_concat(out, free_inverse(img));
    }
  }
  return out;
}

ActionTable action_identity(int n) {
  ActionTable t;
  t.image.resize(n);
  for (int i = 0; i < n; ++i) t.image[i] = {static_cast<int32_t>(i + 1)};
  return t;
}

namespace {

// Apply one signed crossing to every image in the table.
void apply_crossing(ActionTable& t, int pos, int sign) {
  const int n = t.rank();
  assert(pos >= 0 && pos + 1 < n);
  std::vector<FreeWord> step(n);
  for (int i = 0; i < n; ++i) step[i] = {static_cast<int32_t>(i + 1)};
  const int32_t xi = static_cast<int32_t>(pos + 1);
  const int32_t xj = static_cast<int32_t>(pos + 2);
  if (sign > 0) {
    step[pos] = {xi, xj, -xi};
    step[pos + 1] = {xi};
  } else {
    step[pos] = {xj};
    step[pos + 1] = {-xj, xi, xj};
  }
  for (FreeWord& img : t.image) img = free_substitute(img, step);
}

}  // namespace

ActionTable artin_action(const BraidWord& w) {
  ActionTable t = action_identity(w.strand_count());
  for (const BraidLetter& l : w.letters()) {
    std::vector<ArtinGen> gens = artin_word(l.s);
    if (l.sign > 0) {
      for (const ArtinGen& g : gens) apply_crossing(t, g.pos, +1);
    } else {
      for (auto it = gens.rbegin(); it != gens.rend(); ++it)
        apply_crossing(t, it->pos, -1);
    }
  }
  return t;
}

}  // namespace bv
