#include "zetascan/zeta.hpp"

#include <cmath>

#include "zetascan/errors.hpp"
#include "zetascan/numerics.hpp"

namespace zetascan {
namespace {

constexpr double kPi = 3.14159265358979324;
constexpr double kLn2 = 0.69314718055994531;
constexpr double kLnPi = 1.14472988584940017;
constexpr double kImMax = 1000.0;  // validated height for the EM evaluator

// B_2 .. B_18, used for corrections j = 1..8 plus the error estimate at j = 9.
constexpr double kBernoulli[] = {
    1.0 / 6,    -1.0 / 30,      1.0 / 42,      -1.0 / 30,    5.0 / 66,
    -691.0 / 2730, 7.0 / 6,     -3617.0 / 510, 43867.0 / 798,
};
constexpr int kCorrections = 8;

struct EmOnce {
  std::complex<double> val, dval;
  double est;
};

EmOnce em_once(std::complex<double> s, long long n_cut) {
  std::complex<double> val = 0.0, dval = 0.0;
  for (long long n = 1; n < n_cut; ++n) {
    const double ln = std::log(static_cast<double>(n));
    const std::complex<double> t = std::exp(-s * ln);
    val += t;
    dval -= ln * t;
  }
  const double nn = static_cast<double>(n_cut);
  const double ln_n = std::log(nn);
  const std::complex<double> n_pow = std::exp(-s * ln_n);  // N^(-s)

  // integral term N^(1-s)/(s-1)
  const std::complex<double> t1 = n_pow * nn / (s - 1.0);
  val += t1;
  dval += t1 * (-ln_n - 1.0 / (s - 1.0));
  // midpoint term N^(-s)/2
  val += 0.5 * n_pow;
  dval += 0.5 * n_pow * (-ln_n);

  // corrections T_j = B_2j/(2j)! * s(s+1)...(s+2j-2) * N^(-s-2j+1)
  std::complex<double> prod = s, dprod = 1.0;
  double fact = 2.0;  // (2j)!
  std::complex<double> npw = n_pow / nn;  // N^(-s-2j+1)
  const double n2 = nn * nn;
  std::complex<double> last_t = 0.0;
  for (int j = 1; j <= kCorrections + 1; ++j) {
    if (j > 1) {
      fact *= (2.0 * j - 1.0) * (2.0 * j);
      npw /= n2;
      for (int i = 2 * j - 3; i <= 2 * j - 2; ++i) {
        dprod = dprod * (s + static_cast<double>(i)) + prod;
        prod = prod * (s + static_cast<double>(i));
      }
    }
    const double b = kBernoulli[j - 1] / fact;
    const std::complex<double> tj = b * prod * npw;
    if (j <= kCorrections) {
      val += tj;
      dval += b * (dprod * npw + prod * npw * (-ln_n));
    } else {
      last_t = tj;  // first omitted term, drives the error estimate
    }
  }
  const double sig = s.real();
  const double grow = std::abs(s + (2.0 * kCorrections + 1.0)) /
                      std::max(sig + 2.0 * kCorrections + 1.0, 0.5);
  return {val, dval, std::abs(last_t) * std::max(1.0, grow)};
}

// ln cos z and ln sin z stable for large |Im z| (principal values up to the
// 2 pi i ambiguity, which exp() downstream ignores).
std::complex<double> ln_cos(std::complex<double> z) {
  if (std::fabs(z.imag()) <= 20.0) return std::log(std::cos(z));
  const double sy = z.imag() > 0 ? 1.0 : -1.0;
  const std::complex<double> i_sy(0.0, sy);
  // cos z = e^(-i sy z) (1 + e^(2 i sy z)) / 2
  return -i_sy * z + std::log(1.0 + std::exp(2.0 * i_sy * z)) - kLn2;
}

std::complex<double> ln_sin(std::complex<double> z) {
  if (std::fabs(z.imag()) <= 20.0) return std::log(std::sin(z));
  if (z.imag() > 0) {
    // sin z = (i/2) e^(-iz) (1 - e^(2iz))
    return std::log(std::complex<double>(0.0, 0.5)) -
           std::complex<double>(0, 1) * z +
           std::log(1.0 - std::exp(std::complex<double>(0, 2) * z));
  }
  return std::log(std::complex<double>(0.0, -0.5)) +
         std::complex<double>(0, 1) * z +
         std::log(1.0 - std::exp(std::complex<double>(0, -2) * z));
}

}  // namespace

ZetaEvaluation zeta_em(std::complex<double> s, double tol) {
  if (!(tol > 0)) throw argument_error("zeta_em: requires tol > 0");
  if (std::abs(s - 1.0) < 1e-12) throw domain_error("zeta_em: pole at s = 1");
  if (std::fabs(s.imag()) > kImMax)
    throw unsupported_regime_error("zeta_em: |Im s| above supported height 1000");
  long long n_cut = std::max<long long>(
      20, static_cast<long long>(std::ceil(2.0 * std::fabs(s.imag()))));
  for (int attempt = 0; attempt < 8; ++attempt, n_cut *= 2) {
    const EmOnce r = em_once(s, n_cut);
    if (r.est <= tol) return {r.val, r.dval, r.est, n_cut};
  }
  throw numerical_error("zeta_em: tolerance not reached after cutoff doubling");
}

std::complex<double> chi_factor(std::complex<double> s) {
  if (s.imag() == 0.0) {
    const double r = std::round(s.real());
    if (r >= 1.0 && std::fabs(s.real() - r) < 1e-9 &&
        std::fabs(std::remainder(r, 2.0)) == 1.0)
      throw domain_error("chi_factor: pole at odd positive integer");
  }
  if (s.real() >= 0.5) {
    // chi = 2^(s-1) pi^s / (cos(pi s / 2) Gamma(s)), the reflected form
    // whose Gamma argument stays in the right half-plane.
    return std::exp((s - 1.0) * kLn2 + s * kLnPi - ln_cos(kPi * s / 2.0) -
                    log_gamma(s));
  }
  return std::exp(s * kLn2 + (s - 1.0) * kLnPi + ln_sin(kPi * s / 2.0) +
                  log_gamma(1.0 - s));
}

double riemann_siegel_theta(double t) {
  if (t == 0.0) return 0.0;
  return log_gamma(std::complex<double>(0.25, 0.5 * t)).imag() -
         0.5 * t * kLnPi;
}

double hardy_z(double t) {
  const double th = riemann_siegel_theta(t);
  const ZetaEvaluation e = zeta_em({0.5, t});
  return std::cos(th) * e.value.real() - std::sin(th) * e.value.imag();
}

double zero_count_main_term(double t) {
  if (!(t > 0)) throw argument_error("zero_count_main_term: requires t > 0");
  const double x = t / (2.0 * kPi);
  return x * std::log(x) - x + 7.0 / 8.0;
}

namespace {

double bisect_hardy(double a, double b, double za) {
  // za = hardy_z(a) with a sign change somewhere in (a, b)
  for (int i = 0; i < 60 && b - a > 1e-10; ++i) {
    const double m = 0.5 * (a + b);
    const double zm = hardy_z(m);
    if (zm == 0.0) return m;
    if ((za > 0) == (zm > 0)) {
      a = m;
      za = zm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

std::vector<double> hardy_sign_changes(double t_max, double step) {
  std::vector<double> zeros;
  if (t_max <= 2.0) return zeros;  // first zero sits well above t = 2
  double prev_t = 2.0;
  double prev_z = hardy_z(prev_t);
  for (long long i = 1;; ++i) {
    double t = 2.0 + static_cast<double>(i) * step;
    if (t > t_max) t = t_max;
    const double z = hardy_z(t);
    if (z == 0.0)
      zeros.push_back(t);
    else if ((prev_z > 0) != (z > 0))
      zeros.push_back(bisect_hardy(prev_t, t, prev_z));
    prev_t = t;
    prev_z = z;
    if (t >= t_max) break;
  }
  return zeros;
}

}  // namespace

ZeroSearchResult find_zeros(double t_max) {
  if (!(t_max > 0)) throw argument_error("find_zeros: requires t_max > 0");
  if (t_max > kImMax)
    throw unsupported_regime_error("find_zeros: t_max above supported height 1000");
  const double expected = zero_count_main_term(t_max);
  double step = 0.05;
  std::vector<double> zeros;
  for (int attempt = 0; attempt < 4; ++attempt, step *= 0.5) {
    zeros = hardy_sign_changes(t_max, step);
    if (std::fabs(static_cast<double>(zeros.size()) - expected) <= 2.0)
      return {std::move(zeros), expected, true};
  }
  return {std::move(zeros), expected, false};
}

double gamma_n_estimate(int n) {
  if (n < 2) throw domain_error("gamma_n_estimate: requires n >= 2");
  return 2.0 * kPi * static_cast<double>(n) / std::log(static_cast<double>(n));
}

}  // namespace zetascan
