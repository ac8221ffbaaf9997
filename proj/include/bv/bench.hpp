#pragma once
// Timing harness for multiplication, used to check the growth trend of the
// running time against the input size measured in bits.
#include <cstdint>
#include <string>
#include <vector>

#include "bv/element.hpp"
#include "bv/rng.hpp"

namespace bv {

BinaryTree random_tree(SplitMix64& rng, int leaves);
Perm random_perm(SplitMix64& rng, int n);

// Element with trees of `size` leaves and a braid word of `size` random
// simple letters, reduced.
BVElement random_element(SplitMix64& rng, int size);

// Bit size of the reduced triple: word length x strands x bits per strand
// index for the braid, plus two trees at about two bits per leaf each.
int64_t element_bits(const BVElement& e);

struct BenchRow {
  int size;
  std::string mode;  // "nf" or "fast"
  int trials;
  int64_t median_micros;
  int64_t mean_input_bits;  // mean over trials of the two factors' bits
};

// For each size, time `trials` products of fresh random elements.  Mode
// "nf" runs full multiplication; "fast" skips reduction and normalization.
std::vector<BenchRow> run_bench(const std::vector<int>& sizes, int trials,
                                const std::string& mode, uint64_t seed);

// Least-squares slope of log(micros) against log(bits).
double fit_loglog_slope(const std::vector<BenchRow>& rows);

std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace bv
