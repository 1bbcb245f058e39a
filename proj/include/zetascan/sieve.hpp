#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

namespace zetascan {

inline constexpr std::int64_t kSegmentLength = 1 << 20;

// Von Mangoldt Lambda(n) for n = start .. start+length-1. Requires
// start >= 1 and start+length-1 within int64 range. Lambda(p^m) = ln p,
// 0 elsewhere; values are exact calls to std::log of the prime, so equal
// inputs give bit-identical outputs regardless of segmentation.
std::vector<double> sieve_lambda(std::int64_t start, std::int64_t length);

struct PrimePowerEntry {
  std::int64_t n;
  double lambda;  // ln p for n = p^m
  double log_n;   // ln n
};

// All prime powers n <= limit in ascending order. Requires limit >= 2.
struct PrimePowerTable {
  std::int64_t limit = 0;
  std::vector<PrimePowerEntry> entries;
};

PrimePowerTable prime_power_table(std::int64_t limit);

// Process-wide cache: returns a table with limit >= the request, rebuilt
// only when the high-water mark grows.
std::shared_ptr<const PrimePowerTable> shared_prime_power_table(
    std::int64_t limit);

struct SumResult {
  double value = 0.0;
  long long terms = 0;  // prime powers visited
};

// Sum of term(n, Lambda(n)) over prime powers n <= limit, streamed in
// fixed-length segments. Each segment is accumulated serially with Neumaier
// compensation and the per-segment partials are combined by a fixed pairwise
// tree, so the result is bit-identical for any thread count.
SumResult sum_prime_powers(
    std::int64_t limit, int threads,
    const std::function<double(std::int64_t, double)>& term);

}  // namespace zetascan
