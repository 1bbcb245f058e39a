#include "zetascan/weights.hpp"

#include <cmath>
#include <limits>

#include "zetascan/errors.hpp"
#include "zetascan/quadrature.hpp"

namespace zetascan {
namespace {

constexpr double kPi = 3.14159265358979324;
constexpr double kLn4 = 1.38629436111989062;
constexpr double kLn2SqrtPi = 1.26551212348464539;  // ln(2 sqrt(pi))
// Largest double strictly below 2^63; the feasibility cap for tau.
constexpr double kTauCap = 9223372036854775808.0;

int parity_sign(std::int64_t k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace

WeightParams::WeightParams(std::int64_t k_, double xi_)
    : k(k_), xi(xi_), alpha(0.0) {
  if (k < 1) throw argument_error("WeightParams: requires k >= 1");
  if (!(xi > 0) || !std::isfinite(xi))
    throw argument_error("WeightParams: requires finite xi > 0");
  alpha = static_cast<double>(k) / (xi * xi);
  if (!(alpha > 0) || !std::isfinite(alpha))
    throw argument_error("WeightParams: alpha = k/xi^2 out of double range");
}

WeightParams params_from_real_k(double k_real, double xi) {
  if (!(k_real > 0) || !std::isfinite(k_real))
    throw argument_error("params_from_real_k: requires finite k_real > 0");
  if (k_real >= 9.2e18)
    throw argument_error("params_from_real_k: k_real exceeds int64 range");
  std::int64_t k = std::llround(k_real);
  if (k < 1) k = 1;
  return WeightParams(k, xi);
}

ExtendedReal c1_log(const WeightParams& p) {
  const double kk = static_cast<double>(p.k);
  return ExtendedReal::from_log(
      1, (kk + 0.5) * std::log(p.alpha) - log_gamma(kk + 0.5));
}

ExtendedReal c2_log(const WeightParams& p) {
  const double kk = static_cast<double>(p.k);
  return ExtendedReal::from_log(
      parity_sign(p.k), -kLn2SqrtPi - kk * kLn4 - log_gamma(kk + 0.5));
}

std::complex<double> w_hat(const WeightParams& p, std::complex<double> s) {
  const std::complex<double> z = s - 0.5;
  if (z == std::complex<double>(0.0, 0.0)) return 0.0;  // zero of order 2k
  const double lc1 = c1_log(p).log_mag;
  if (s.real() == 0.5) {
    // On the critical line the (-1)^k phase cancels against (it)^(2k):
    // w_hat = c1 t^(2k) e^(-alpha t^2), real and nonnegative.
    const double t = s.imag();
    return std::exp(lc1 + 2.0 * static_cast<double>(p.k) * std::log(std::fabs(t)) -
                    p.alpha * t * t);
  }
  // z^(2k) = exp(2k Log z) is single-valued for integer k.
  const std::complex<double> e =
      lc1 + 2.0 * static_cast<double>(p.k) * std::log(z) + p.alpha * z * z;
  return static_cast<double>(parity_sign(p.k)) * std::exp(e);
}

double weight_w_exact(const WeightParams& p, double x) {
  if (!(x > 0)) throw domain_error("weight_w_exact: requires x > 0");
  if (p.k > kExactHermiteMaxK)
    throw unsupported_regime_error(
        "weight_w_exact: k exceeds the exact-Hermite cap; use weight_w_tilde");
  const double lx = std::log(x);
  const ExtendedReal h =
      hermite_scaled(static_cast<int>(2 * p.k), lx / (2.0 * std::sqrt(p.alpha)));
  if (h.sign == 0) return 0.0;
  const ExtendedReal c2 = c2_log(p);
  const double e =
      c2.log_mag + h.log_mag - 0.5 * lx - lx * lx / (4.0 * p.alpha);
  return c2.sign * h.sign * std::exp(e);
}

double weight_w_tilde(const WeightParams& p, double x, TildePhase phase) {
  if (!(x > 0)) throw domain_error("weight_w_tilde: requires x > 0");
  const double lx = std::log(x);
  const double env = std::exp(-0.5 * lx - lx * lx / (8.0 * p.alpha));
  double v = env * std::cos(p.xi * lx) / (2.0 * kPi);
  if (phase == TildePhase::printed_alternating) v *= parity_sign(p.k);
  return v;
}

TauResult tau_truncation(const WeightParams& p, double eps) {
  if (!(eps > 0)) throw argument_error("tau_truncation: requires eps > 0");
  const double inner =
      p.alpha +
      0.5 * std::max(0.0, std::log(4.0 * static_cast<double>(p.k) / (eps * p.xi)));
  const double raw =
      std::exp(4.0 * (p.alpha + std::sqrt(p.alpha) * std::sqrt(inner)));
  if (raw < kTauCap) return {raw, true};
  return {kTauCap, false};
}

std::int64_t TauResult::n_limit() const {
  if (!feasible)
    throw truncation_infeasible_error(
        "tau: truncation length exceeds the feasible range");
  return static_cast<std::int64_t>(std::floor(value));
}

double min_feasible_eps(const WeightParams& p) {
  const double t4 = std::log(kTauCap) / 4.0;  // ln(2^63)/4
  // tau(eps -> inf) = e^(8 alpha): no eps is feasible once alpha >= ln(2^63)/8.
  if (p.alpha >= 0.5 * t4) return std::numeric_limits<double>::infinity();
  const double l =
      2.0 * ((t4 - p.alpha) * (t4 - p.alpha) / p.alpha - p.alpha);
  return 4.0 * static_cast<double>(p.k) / (p.xi * std::exp(std::min(l, 700.0)));
}

double normalization_integral(const WeightParams& p, double abs_tol) {
  const double w = p.xi + 12.0 / std::sqrt(p.alpha);
  const auto f = [&](double t) { return w_hat(p, {0.5, t}); };
  return integrate_line(f, -w, w, abs_tol, 1.0 / (2.0 * std::sqrt(p.alpha)))
      .value.real();
}

double inverse_mellin_w(const WeightParams& p, double x, double abs_tol) {
  if (!(x > 0)) throw domain_error("inverse_mellin_w: requires x > 0");
  // Saddle line sigma0 = (1 + ln x / alpha)/2 makes the integrand decay as a
  // pure Gaussian in t.
  const double sigma0 = 0.5 * (1.0 + std::log(x) / p.alpha);
  const double w =
      p.xi + 12.0 / std::sqrt(p.alpha) + std::fabs(sigma0 - 0.5);
  const double lx = std::log(x);
  const auto f = [&](double t) {
    const std::complex<double> s(sigma0, t);
    return w_hat(p, s) * std::exp(-s * lx);
  };
  return integrate_line(f, -w, w, abs_tol, 1.0 / (2.0 * std::sqrt(p.alpha)))
             .value.real() /
         (2.0 * kPi);
}

}  // namespace zetascan
