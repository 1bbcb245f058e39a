#pragma once

#include <complex>
#include <vector>

namespace zetascan {

struct ZetaEvaluation {
  std::complex<double> value;
  std::complex<double> derivative;
  double est_error = 0.0;  // magnitude of the first omitted correction term
  long long terms = 0;     // direct-sum cutoff N actually used
};

// zeta(s) and zeta'(s) by Euler-Maclaurin with 8 correction terms, doubling
// the cutoff until the first omitted term drops below tol. Supports
// |Im s| <= 1000 (unsupported_regime_error above); s = 1 is a pole
// (domain_error); numerical_error if tol is unreachable.
ZetaEvaluation zeta_em(std::complex<double> s, double tol = 1e-10);

// chi(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s), the functional-equation
// factor zeta(s) = chi(s) zeta(1-s). Poles at odd positive integers.
std::complex<double> chi_factor(std::complex<double> s);

// theta(t) = Im ln Gamma(1/4 + it/2) - (t/2) ln pi.
double riemann_siegel_theta(double t);

// Z(t) = e^(i theta(t)) zeta(1/2 + it), real on the real axis.
double hardy_z(double t);

// Smooth main term of the zero-counting function:
// (t/2pi) ln(t/2pi) - t/2pi + 7/8.
double zero_count_main_term(double t);

struct ZeroSearchResult {
  std::vector<double> zeros;     // ordinates in (0, t_max], ascending
  double expected_count = 0.0;   // zero_count_main_term(t_max)
  bool count_consistent = false; // |#zeros - expected| <= 2 after refinement
};

// All critical-line zeros up to t_max by sign changes of Z on a grid
// (initial step 0.05, halved up to 3 times if the count check fails),
// refined by bisection to about 1e-10. Requires t_max <= 1000.
ZeroSearchResult find_zeros(double t_max);

// First-order inverse of the zero-counting main term: 2 pi n / ln n.
// Requires n >= 2.
double gamma_n_estimate(int n);

}  // namespace zetascan
