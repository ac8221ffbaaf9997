#include "bv/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace bv {

BinaryTree random_tree(SplitMix64& rng, int leaves) {
  if (leaves <= 1) return BinaryTree::leaf();
  const int left = 1 + static_cast<int>(rng.below(leaves - 1));
  return BinaryTree::caret(random_tree(rng, left),
                           random_tree(rng, leaves - left));
}

Perm random_perm(SplitMix64& rng, int n) {
  Perm p = perm_identity(n);
  for (int i = n - 1; i > 0; --i)
    std::swap(p[i], p[rng.below(i + 1)]);
  return p;
}

BVElement random_element(SplitMix64& rng, int size) {
  BraidWord w(size);
  for (int k = 0; k < size; ++k)
    w.push(simple_from_permutation(random_perm(rng, size)),
           rng.below(2) == 0 ? +1 : -1);
  return reduce({random_tree(rng, size), std::move(w), random_tree(rng, size)});
}

int64_t element_bits(const BVElement& e) {
  const int64_t n = e.strand_count();
  int64_t log_n = 1;
  while ((int64_t{1} << log_n) < n) ++log_n;
  const int64_t h = static_cast<int64_t>(e.braid().factors.size()) +
                    std::llabs(e.braid().delta_power);
  return h * n * log_n + 4 * n;
}

std::vector<BenchRow> run_bench(const std::vector<int>& sizes, int trials,
                                const std::string& mode, uint64_t seed) {
  if (mode != "nf" && mode != "fast")
    throw std::invalid_argument("mode must be nf or fast");
  std::vector<BenchRow> rows;
  SplitMix64 rng(seed);
  for (int size : sizes) {
    if (size <= 0) throw std::invalid_argument("sizes must be positive");
    std::vector<int64_t> micros;
    int64_t bits = 0;
    for (int t = 0; t < trials; ++t) {
      BVElement a = random_element(rng, size);
      BVElement b = random_element(rng, size);
      bits += element_bits(a) + element_bits(b);
      const auto start = std::chrono::steady_clock::now();
      if (mode == "nf") {
        volatile int keep = multiply(a, b).strand_count();
        (void)keep;
      } else {
        volatile int keep =
            raw_multiply(a.raw(), b.raw()).braid.strand_count();
        (void)keep;
      }
      const auto stop = std::chrono::steady_clock::now();
      micros.push_back(
          std::chrono::duration_cast<std::chrono::microseconds>(stop - start)
              .count());
    }
    std::sort(micros.begin(), micros.end());
    rows.push_back({size, mode, trials, micros[micros.size() / 2],
                    bits / std::max(trials, 1)});
  }
  return rows;
}

double fit_loglog_slope(const std::vector<BenchRow>& rows) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(rows.size());
  for (const BenchRow& r : rows) {
    const double x = std::log(static_cast<double>(r.mean_input_bits));
    const double y =
        std::log(static_cast<double>(std::max<int64_t>(r.median_micros, 1)));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string out = "size,mode,trials,median_micros\n";
  for (const BenchRow& r : rows)
    out += std::to_string(r.size) + "," + r.mode + "," +
           std::to_string(r.trials) + "," + std::to_string(r.median_micros) +
           "\n";
  return out;
}

}  // namespace bv
