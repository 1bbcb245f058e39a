#include "zetascan/sieve.hpp"

#include <atomic>
#include <cmath>
#include <cstring>
#include <limits>
#include <mutex>
#include <thread>

#include "zetascan/errors.hpp"
#include "zetascan/numerics.hpp"

namespace zetascan {
namespace {

std::int64_t isqrt_floor(std::int64_t n) {
  if (n < 0) return 0;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::vector<std::int64_t> primes_up_to(std::int64_t n) {
  std::vector<std::int64_t> primes;
  if (n < 2) return primes;
  std::vector<char> comp(static_cast<std::size_t>(n + 1), 0);
  for (std::int64_t p = 2; p <= n; ++p) {
    if (comp[p]) continue;
    primes.push_back(p);
    for (std::int64_t m = p * p; m <= n; m += p) comp[m] = 1;
  }
  return primes;
}

// Fills out[0 .. hi-lo] with Lambda(lo .. hi). base must contain all primes
// up to isqrt(hi). Buffers are reused across segments.
void lambda_segment(std::int64_t lo, std::int64_t hi,
                    const std::vector<std::int64_t>& base,
                    std::vector<double>& out, std::vector<char>& comp) {
  const std::size_t len = static_cast<std::size_t>(hi - lo + 1);
  out.assign(len, 0.0);
  comp.assign(len, 0);
  for (std::int64_t p : base) {
    // prime powers p, p^2, ... in [lo, hi]
    for (std::int64_t q = p;; ) {
      if (q >= lo) out[q - lo] = std::log(static_cast<double>(p));
      if (q > hi / p) break;
      q *= p;
      if (q > hi) break;
    }
    // composite marking from max(p^2, first multiple >= lo)
    std::int64_t m0 = (lo - 1) / p + 1;
    if (m0 < p) m0 = p;
    if (m0 > hi / p) continue;
    for (std::int64_t m = m0 * p; m <= hi;) {
      comp[m - lo] = 1;
      if (m > hi - p) break;
      m += p;
    }
  }
  // Unmarked n >= 2 with no recorded power value are primes above isqrt(hi).
  // Prime powers of base primes already hold ln p; plain composites stay 0.
  const std::int64_t first = lo < 2 ? 2 : lo;
  for (std::int64_t n = first; n <= hi; ++n) {
    const std::size_t i = n - lo;
    if (!comp[i] && out[i] == 0.0) out[i] = std::log(static_cast<double>(n));
  }
}

struct SegmentPlan {
  std::int64_t lo, hi;
};

std::vector<SegmentPlan> plan_segments(std::int64_t start, std::int64_t end) {
  std::vector<SegmentPlan> segs;
  for (std::int64_t lo = start; lo <= end;) {
    const std::int64_t hi =
        lo + (kSegmentLength - 1) > end ? end : lo + (kSegmentLength - 1);
    segs.push_back({lo, hi});
    if (hi == end) break;
    lo = hi + 1;
  }
  return segs;
}

void check_range(std::int64_t start, std::int64_t length) {
  if (start < 1) throw argument_error("sieve_lambda: requires start >= 1");
  if (length < 0) throw argument_error("sieve_lambda: requires length >= 0");
  const std::int64_t max64 = std::numeric_limits<std::int64_t>::max();
  if (length > 0 && start > max64 - (length - 1))
    throw argument_error("sieve_lambda: range end exceeds int64 range");
}

}  // namespace

std::vector<double> sieve_lambda(std::int64_t start, std::int64_t length) {
  check_range(start, length);
  std::vector<double> out(static_cast<std::size_t>(length), 0.0);
  if (length == 0) return out;
  const std::int64_t end = start + length - 1;
  const auto base = primes_up_to(isqrt_floor(end));
  std::vector<double> seg;
  std::vector<char> comp;
  for (const auto& s : plan_segments(start, end)) {
    lambda_segment(s.lo, s.hi, base, seg, comp);
    std::memcpy(out.data() + (s.lo - start), seg.data(),
                static_cast<std::size_t>(s.hi - s.lo + 1) * sizeof(double));
  }
  return out;
}

PrimePowerTable prime_power_table(std::int64_t limit) {
  if (limit < 2) throw argument_error("prime_power_table: requires limit >= 2");
  PrimePowerTable t;
  t.limit = limit;
  const auto base = primes_up_to(isqrt_floor(limit));
  std::vector<double> seg;
  std::vector<char> comp;
  for (const auto& s : plan_segments(2, limit)) {
    lambda_segment(s.lo, s.hi, base, seg, comp);
    for (std::int64_t n = s.lo; n <= s.hi; ++n) {
      const double lam = seg[n - s.lo];
      if (lam != 0.0)
        t.entries.push_back({n, lam, std::log(static_cast<double>(n))});
    }
  }
  return t;
}

std::shared_ptr<const PrimePowerTable> shared_prime_power_table(
    std::int64_t limit) {
  if (limit < 2)
    throw argument_error("shared_prime_power_table: requires limit >= 2");
  static std::mutex mu;
  static std::shared_ptr<const PrimePowerTable> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (!cache || cache->limit < limit)
    cache = std::make_shared<const PrimePowerTable>(prime_power_table(limit));
  return cache;
}

SumResult sum_prime_powers(
    std::int64_t limit, int threads,
    const std::function<double(std::int64_t, double)>& term) {
  if (limit < 2) throw argument_error("sum_prime_powers: requires limit >= 2");
  if (threads < 1) throw argument_error("sum_prime_powers: requires threads >= 1");
  const auto segs = plan_segments(2, limit);
  const auto base = primes_up_to(isqrt_floor(limit));
  std::vector<double> partials(segs.size(), 0.0);
  std::atomic<long long> total_terms{0};
  std::atomic<std::size_t> next{0};

  auto worker = [&]() {
    std::vector<double> seg;
    std::vector<char> comp;
    long long terms = 0;
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= segs.size()) break;
      lambda_segment(segs[i].lo, segs[i].hi, base, seg, comp);
      CompensatedSum acc;
      for (std::int64_t n = segs[i].lo; n <= segs[i].hi; ++n) {
        const double lam = seg[n - segs[i].lo];
        if (lam != 0.0) {
          acc.add(term(n, lam));
          ++terms;
        }
      }
      partials[i] = acc.value();
    }
    total_terms.fetch_add(terms);
  };

  const int nw = std::min<std::size_t>(threads, segs.size());
  if (nw <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < nw; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return {tree_reduce(std::move(partials)), total_terms.load()};
}

}  // namespace zetascan
