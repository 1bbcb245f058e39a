#pragma once

#include <complex>
#include <cstdint>

#include "zetascan/numerics.hpp"

namespace zetascan {

// Center xi > 0 and degree k >= 1 of the Gaussian-Hermite test function
// family; alpha = k / xi^2 sets the spectral window width 1/(2 sqrt(alpha)).
struct WeightParams {
  std::int64_t k;
  double xi;
  double alpha;

  WeightParams(std::int64_t k, double xi);
};

// Nearest integer degree >= 1 for a real-valued target.
WeightParams params_from_real_k(double k_real, double xi);

// Largest degree the exact Hermite weight supports.
inline constexpr std::int64_t kExactHermiteMaxK = 10000;

// c1 = alpha^(k+1/2) / Gamma(k+1/2); positive, returned in log form.
ExtendedReal c1_log(const WeightParams& p);

// c2 = (1 / (2 sqrt(pi))) (-1/4)^k / Gamma(k+1/2), in log form with sign.
ExtendedReal c2_log(const WeightParams& p);

// Spectral window w_hat(s) = c1 (-1)^k (s-1/2)^(2k) e^(alpha (s-1/2)^2).
// Real and nonnegative on the critical line.
std::complex<double> w_hat(const WeightParams& p, std::complex<double> s);

// Multiplicative-side weight w(x) = (c2/sqrt(x)) e^(-ln^2 x / (4 alpha))
// H_{2k}(ln x / (2 sqrt(alpha))), x > 0. Throws unsupported_regime_error
// for k > kExactHermiteMaxK.
double weight_w_exact(const WeightParams& p, double x);

// Leading-order surrogate (1/(2 pi)) x^(-1/2) e^(-ln^2 x / (8 alpha))
// cos(xi ln x); printed_alternating multiplies by (-1)^k.
enum class TildePhase { standard, printed_alternating };
double weight_w_tilde(const WeightParams& p, double x,
                      TildePhase phase = TildePhase::standard);

// Truncation length tau(eps) = exp{4 (alpha + sqrt(alpha) sqrt(alpha +
// (1/2) max(0, ln(4k / (eps xi)))))}. Values at or above 2^63 are capped
// there and flagged infeasible.
struct TauResult {
  double value = 0.0;
  bool feasible = false;

  std::int64_t n_limit() const;  // floor(value); requires feasible
};
TauResult tau_truncation(const WeightParams& p, double eps);

// Smallest eps whose truncation length is feasible; +inf when none is
// (tau(eps) >= e^(8 alpha) for every eps).
double min_feasible_eps(const WeightParams& p);

// integral of w_hat(1/2+it) dt over [-xi-12/sqrt(alpha), xi+12/sqrt(alpha)];
// equals 1 up to the Gaussian tail beyond the window.
double normalization_integral(const WeightParams& p, double abs_tol = 1e-10);

// Mellin inversion of w_hat along the saddle line through x; agrees with
// weight_w_exact to quadrature accuracy.
double inverse_mellin_w(const WeightParams& p, double x,
                        double abs_tol = 1e-10);

}  // namespace zetascan
