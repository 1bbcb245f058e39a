#pragma once

#include <cstdint>
#include <vector>

#include "zetascan/formula.hpp"

namespace zetascan {

// Degree schedule k(xi) for profile scans.
struct KPolicy {
  enum class Kind { fixed_alpha, log_squared_growth };
  Kind kind = Kind::fixed_alpha;
  double param = 1.0;

  // k = ceil(alpha0 xi^2); keeps the window width 1/(2 sqrt(alpha)) constant.
  static KPolicy fixed_alpha(double alpha0);

  // k = ceil(beta (xi ln(xi ln xi))^2), beta > 1: degree growth that keeps
  // the truncation tail uniform as xi grows. Requires xi ln xi > 1.
  static KPolicy log_squared_growth(double beta);

  std::int64_t k_for(double xi) const;
};

struct ScanProfile {
  std::vector<double> xis;
  std::vector<double> values;       // prime-side totals
  std::vector<std::int64_t> ks;
  std::vector<long long> terms_used;
  std::vector<double> error_bounds;
  double step = 0.0;
  double eps = 0.0;
  bool exact_weight = false;
};

// Prime-side profile on the grid xi_i = lo + i step covering [lo, hi].
// Requires 2 <= lo < hi and 0 < step <= 0.1. One shared prime-power table
// serves every grid point; each point is summed serially in table order, so
// results are bit-identical for any thread count. Throws
// truncation_infeasible_error naming the offending xi if some grid point
// needs an infeasible truncation length.
ScanProfile scan_profile(double lo, double hi, double step,
                         const KPolicy& policy, double eps,
                         bool use_exact_weight = false, int threads = 1);

struct ZeroCandidate {
  double location;    // grid ordinate of the peak
  double mass;        // trapezoid mass over the window
  double window_lo;
  double window_hi;
};

// Peak detection on a profile: local maxima above 0.5 sqrt(alpha/2pi),
// consolidated within 1/(2 sqrt(alpha)), integrated over +-3/(2 sqrt(alpha))
// windows (split at the interior minimum when neighbors overlap), and kept
// when the mass lands in [0.35, 0.65]. Requires the grid step to resolve
// the feature width: step <= 1/(4 sqrt(alpha)) everywhere
// (resolution_error otherwise).
std::vector<ZeroCandidate> detect_zeros(const ScanProfile& profile);

// Preview of the prime budget for the growing-degree schedule at xi0:
// real-valued degree, the implied truncation length, and whether it fits in
// double range at all. Requires xi0 > e, beta > 1, eps > 0.
struct PrimeBudget {
  double k_real = 0.0;
  double tau = 0.0;
  bool finite = false;
};
PrimeBudget required_primes_estimate(double xi0, double beta, double eps);

}  // namespace zetascan
