#include "zetascan/formula.hpp"

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <string>

#include "zetascan/errors.hpp"
#include "zetascan/quadrature.hpp"
#include "zetascan/sieve.hpp"
#include "zetascan/zeta.hpp"

namespace zetascan {
namespace {

constexpr double kPi = 3.14159265358979324;
constexpr double kLn4 = 1.38629436111989062;
constexpr double kLn2Pi = 1.83787706640934548;

std::string msgf(const char* format, ...) {
  char buf[256];
  va_list ap;
  va_start(ap, format);
  std::vsnprintf(buf, sizeof buf, format, ap);
  va_end(ap);
  return buf;
}

// The Gaussian window carries all but e^-128 of the spectral mass within
// +-8/sqrt(alpha) of xi; a table covering that interval suffices. Tables
// whose first entry lies in (14.0, 14.2) are taken to start at the first
// zero, which certifies the region below it as empty.
void require_coverage(const char* who, const WeightParams& p,
                      const ZeroTable& zt) {
  const double hw = 8.0 / std::sqrt(p.alpha);
  const double lo = p.xi - hw > 0 ? p.xi - hw : 0.0;
  const double hi = p.xi + hw;
  if (zt.gammas.back() < hi)
    throw coverage_error(
        msgf("%s: zero table ends at %.6f but the window needs coverage of "
             "[%.6f, %.6f]",
             who, zt.gammas.back(), lo, hi));
  const double front = zt.gammas.front();
  if (front > lo && !(front > 14.0 && front < 14.2))
    throw coverage_error(
        msgf("%s: zero table starts at %.6f, above the window edge %.6f, and "
             "does not begin at the first zero",
             who, front, lo));
}

}  // namespace

ZeroTable make_zero_table(std::vector<double> gammas) {
  double prev = 0.0;
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    if (!std::isfinite(gammas[i]) || gammas[i] <= 0.0)
      throw argument_error(
          msgf("zero table: entry %zu is not a positive finite ordinate",
               i + 1));
    if (gammas[i] <= prev)
      throw argument_error(
          msgf("zero table: entry %zu is not strictly increasing", i + 1));
    prev = gammas[i];
  }
  return {std::move(gammas)};
}

bool initial_segment_consistent(const ZeroTable& zt) {
  if (zt.gammas.empty()) return false;
  if (!(zt.gammas.front() > 14.0 && zt.gammas.front() < 14.2)) return false;
  const double expected = zero_count_main_term(zt.gammas.back());
  return std::fabs(static_cast<double>(zt.gammas.size()) - expected) <= 2.0;
}

ZeroSideSum zero_side_S_detail(const WeightParams& p, const ZeroTable& zt) {
  if (zt.gammas.empty()) return {0.0, 0.0};
  require_coverage("zero_side_S", p, zt);
  const double pref = std::sqrt(p.alpha / (2.0 * kPi));
  CompensatedSum acc;
  for (double g : zt.gammas) {
    const double d = g - p.xi;
    acc.add(std::exp(-2.0 * p.alpha * d * d));
  }
  // Terms beyond the covered window are below e^-128 each; multiply by a
  // crude count of zeros near the window edge.
  const double hi = p.xi + 8.0 / std::sqrt(p.alpha);
  const double x = hi / (2.0 * kPi);
  const double density =
      (x > 1.0 ? x * std::log(x) : 0.0) + 10.0;
  return {pref * acc.value(), pref * std::exp(-128.0) * density};
}

double zero_side_S(const WeightParams& p, const ZeroTable& zt) {
  return zero_side_S_detail(p, zt).value;
}

double zero_side_exact(const WeightParams& p, const ZeroTable& zt) {
  if (zt.gammas.empty()) return 0.0;
  require_coverage("zero_side_exact", p, zt);
  const double lc1 = c1_log(p).log_mag;
  const double kk = static_cast<double>(p.k);
  CompensatedSum acc;
  for (double g : zt.gammas)
    acc.add(std::exp(lc1 + 2.0 * kk * std::log(g) - p.alpha * g * g));
  return acc.value();
}

double smooth_term(double xi) {
  if (!(xi > 0)) throw argument_error("smooth_term: requires xi > 0");
  return std::log(xi / (2.0 * kPi)) / (4.0 * kPi);
}

ExtendedReal pole_term_ext(const WeightParams& p) {
  const int sign = (p.k % 2 == 0) ? -1 : 1;  // (-1)^(k+1)
  return ExtendedReal::from_log(
      sign, c1_log(p).log_mag - static_cast<double>(p.k) * kLn4 +
                0.25 * p.alpha);
}

double pole_term(const WeightParams& p) { return pole_term_ext(p).to_double(); }

std::complex<double> g_chi(std::complex<double> s) {
  if (std::fabs(s.imag()) < 1e-8) {
    const double r = std::round(s.real());
    if (std::hypot(s.real() - r, s.imag()) < 1e-8) {
      const bool odd = std::fabs(std::remainder(r, 2.0)) == 1.0;
      if (odd || r <= 0.0)
        throw domain_error("g_chi: pole at integer s");
    }
  }
  return kLn2Pi + 0.5 * kPi * tan_robust(0.5 * kPi * s) - digamma(s);
}

JIntegralResult j_integral_detail(const WeightParams& p, double abs_tol) {
  if (!(p.xi >= 1.0)) throw argument_error("j_integral: requires xi >= 1");
  const double w = p.xi + 12.0 / std::sqrt(p.alpha);
  const auto f = [&](double t) {
    const std::complex<double> s(0.5, t);
    return w_hat(p, s) * g_chi(s);
  };
  const QuadratureResult q =
      integrate_line(f, -w, w, abs_tol, 1.0 / (2.0 * std::sqrt(p.alpha)));
  if (std::fabs(q.value.imag()) > 1e-9)
    throw numerical_error("j_integral: symmetry residual above 1e-9");
  return {-q.value.real(), q.value.imag(), q.est_error, q.panels};
}

double j_integral(const WeightParams& p) { return j_integral_detail(p).value; }

FormulaBreakdown prime_side_S(const WeightParams& p, double eps,
                              bool use_exact_weight, int threads) {
  if (!(eps > 0)) throw argument_error("prime_side_S: requires eps > 0");
  const TauResult tau = tau_truncation(p, eps);
  if (!tau.feasible)
    throw truncation_infeasible_error(
        msgf("prime_side_S: tau(eps) exceeds the feasible range at xi=%.6f; "
             "smallest feasible eps is %.3e",
             p.xi, min_feasible_eps(p)));
  if (use_exact_weight && p.k > kExactHermiteMaxK)
    throw unsupported_regime_error(
        "prime_side_S: exact weight requires k <= 10000");
  const std::int64_t n_max = tau.n_limit();
  SumResult sum;
  if (n_max >= 2) {
    sum = sum_prime_powers(n_max, threads, [&](std::int64_t n, double lam) {
      const double x = static_cast<double>(n);
      return lam * (use_exact_weight ? weight_w_exact(p, x)
                                     : weight_w_tilde(p, x));
    });
  }
  const double kk = static_cast<double>(p.k);
  FormulaBreakdown b;
  b.smooth_term = smooth_term(p.xi);
  b.prime_sum = sum.value;
  b.pole_term = pole_term(p);
  b.total = b.smooth_term - b.prime_sum + b.pole_term / 2.0;
  b.error_bound =
      (std::sqrt(kk) / (p.xi * p.xi) + std::exp(-std::sqrt(kk) / p.xi)) *
          std::log(p.xi) +
      eps;
  b.terms_used = sum.terms;
  b.eps_requested = eps;
  return b;
}

IdentityBreakdown identity_residual_detail(const WeightParams& p,
                                           const ZeroTable& zt, double eps,
                                           int threads) {
  if (!(eps > 0)) throw argument_error("identity_residual: requires eps > 0");
  const TauResult tau = tau_truncation(p, eps);
  if (!tau.feasible)
    throw truncation_infeasible_error(
        msgf("identity_residual: tau(eps) infeasible; smallest feasible eps "
             "is %.3e",
             min_feasible_eps(p)));
  const std::int64_t n_max = tau.n_limit();
  IdentityBreakdown b;
  b.tau = tau.value;
  if (n_max >= 2) {
    const SumResult s =
        sum_prime_powers(n_max, threads, [&](std::int64_t n, double lam) {
          return lam * weight_w_exact(p, static_cast<double>(n));
        });
    b.m1 = s.value;
    b.terms_used = s.terms;
  }
  b.pole = pole_term(p);
  b.zero_side = zero_side_exact(p, zt);
  b.j = j_integral(p);
  b.residual = 2.0 * b.m1 + 2.0 * b.pole + 2.0 * b.zero_side +
               kIdentityJSign * b.j / (2.0 * kPi);
  return b;
}

double identity_residual(const WeightParams& p, const ZeroTable& zt,
                         double eps, int threads) {
  return identity_residual_detail(p, zt, eps, threads).residual;
}

double perron_m1_oracle(const WeightParams& p, double abs_tol) {
  if (p.k > 64)
    throw argument_error("perron_m1_oracle: requires k <= 64 (quadrature cost)");
  const double w = p.xi + 12.0 / std::sqrt(p.alpha) + 2.0;
  const auto f = [&](double t) {
    const std::complex<double> s(2.0, t);
    const ZetaEvaluation ze = zeta_em(s, 1e-12);
    return w_hat(p, s) * (ze.derivative / ze.value);
  };
  const QuadratureResult q =
      integrate_line(f, -w, w, abs_tol, 1.0 / (2.0 * std::sqrt(p.alpha)));
  return -q.value.real() / (2.0 * kPi);
}

}  // namespace zetascan
