#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "zetascan/weights.hpp"

namespace zetascan {

// Ordinates of critical-line zeros, strictly increasing and positive.
struct ZeroTable {
  std::vector<double> gammas;
};

// Validates positivity, finiteness and strict monotonicity; messages name
// the offending entry (1-based).
ZeroTable make_zero_table(std::vector<double> gammas);

// True when the table plausibly lists every zero from the first onward:
// front in (14.0, 14.2) and count within +-2 of the zero-count main term
// at the last entry.
bool initial_segment_consistent(const ZeroTable& zt);

// Gaussian zero-side profile S = sqrt(alpha/2pi) sum_gamma
// e^(-2 alpha (gamma-xi)^2). The table must cover
// [max(0, xi - 8/sqrt(alpha)), xi + 8/sqrt(alpha)] (coverage_error
// otherwise); an empty table gives 0. tail_bound bounds the neglected mass
// beyond the covered window.
struct ZeroSideSum {
  double value = 0.0;
  double tail_bound = 0.0;
};
ZeroSideSum zero_side_S_detail(const WeightParams& p, const ZeroTable& zt);
double zero_side_S(const WeightParams& p, const ZeroTable& zt);

// Exact spectral sum over the table: sum_gamma w_hat(1/2 + i gamma).
// Same coverage contract as zero_side_S.
double zero_side_exact(const WeightParams& p, const ZeroTable& zt);

// Archimedean main term ln(xi / 2pi) / (4 pi).
double smooth_term(double xi);

// Contribution of the zeta pole, -w_hat(1) = (-1)^(k+1) c1 4^(-k)
// e^(alpha/4); underflows to zero at scan-scale parameters, so the log form
// is also exposed.
ExtendedReal pole_term_ext(const WeightParams& p);
double pole_term(const WeightParams& p);

// g(s) = ln 2pi + (pi/2) tan(pi s / 2) - psi(s), the logarithmic derivative
// of the functional-equation factor. Poles at odd integers and at
// non-positive integers (domain_error within 1e-8).
std::complex<double> g_chi(std::complex<double> s);

// Line integral -integral of w_hat(1/2+it) g(1/2+it) dt over the real line
// (truncated to the Gaussian window). Real by conjugate symmetry; main term
// ln(xi / 2pi) for large xi. Requires xi >= 1.
struct JIntegralResult {
  double value = 0.0;
  double imag_residual = 0.0;  // symmetry self-check, must stay <= 1e-9
  double est_error = 0.0;
  int panels = 0;
};
JIntegralResult j_integral_detail(const WeightParams& p,
                                  double abs_tol = 1e-10);
double j_integral(const WeightParams& p);

// Prime-side breakdown of the smoothed profile at (k, xi).
struct FormulaBreakdown {
  double smooth_term = 0.0;
  double prime_sum = 0.0;   // sum of Lambda(n) w(n) for n <= tau(eps)
  double pole_term = 0.0;
  double total = 0.0;       // smooth_term - prime_sum + pole_term / 2
  double error_bound = 0.0; // (sqrt(k)/xi^2 + e^(-sqrt(k)/xi)) ln xi + eps
  long long terms_used = 0;
  double eps_requested = 0.0;
};

// use_exact_weight selects weight_w_exact (k <= kExactHermiteMaxK required)
// versus the weight_w_tilde surrogate.
FormulaBreakdown prime_side_S(const WeightParams& p, double eps,
                              bool use_exact_weight = true, int threads = 1);

// Relative sign of the j-integral term in the contour identity below,
// frozen against an independent Perron evaluation of the prime sum.
inline constexpr double kIdentityJSign = -1.0;

// Residual of the contour identity
//   2 sum_n Lambda(n) w(n) + 2 pole_term + 2 sum_gamma w_hat(1/2+i gamma)
//     + kIdentityJSign * j_integral / (2 pi)  ==  0,
// with the prime sum truncated at tau(eps). Near zero when the table covers
// the spectral window and eps is small.
struct IdentityBreakdown {
  double m1 = 0.0;         // truncated prime sum
  double pole = 0.0;
  double zero_side = 0.0;
  double j = 0.0;
  double residual = 0.0;
  double tau = 0.0;
  long long terms_used = 0;
};
IdentityBreakdown identity_residual_detail(const WeightParams& p,
                                           const ZeroTable& zt, double eps,
                                           int threads = 1);
double identity_residual(const WeightParams& p, const ZeroTable& zt,
                         double eps, int threads = 1);

// Prime sum by Perron contour on Re s = 2: -(1/2pi) integral of
// w_hat(2+it) (zeta'/zeta)(2+it) dt. Quadrature cost limits k <= 64.
double perron_m1_oracle(const WeightParams& p, double abs_tol = 1e-9);

}  // namespace zetascan
