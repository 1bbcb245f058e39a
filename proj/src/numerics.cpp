#include "zetascan/numerics.hpp"

#include <cmath>
#include <limits>

#include "zetascan/errors.hpp"

namespace zetascan {
namespace {

constexpr double kLn2 = 0.69314718055994531;
constexpr double kHalfLn2Pi = 0.91893853320467274;  // ln(2 pi) / 2

// Stirling tail coefficients B_{2j} / (2j (2j-1)) for j = 1..7.
constexpr double kStirling[] = {
    1.0 / 12,   -1.0 / 360,       1.0 / 1260, -1.0 / 1680,
    1.0 / 1188, -691.0 / 360360,  7.0 / 1092,
};

// Requires |w| >= 10 so the w^-13 tail is below machine precision.
template <typename T>
T stirling_log_gamma(T w) {
  using std::log;
  T r = (w - 0.5) * log(w) - w + kHalfLn2Pi;
  const T w2 = 1.0 / (w * w);
  T t = 1.0 / w;
  for (double c : kStirling) {
    r += c * t;
    t *= w2;
  }
  return r;
}

}  // namespace

ExtendedReal ExtendedReal::from_double(double v) {
  if (v == 0.0) return {};
  return {v > 0 ? 1 : -1, std::log(std::fabs(v))};
}

ExtendedReal ExtendedReal::from_log(int sign, double log_mag) {
  if (sign == 0) return {};
  return {sign > 0 ? 1 : -1, log_mag};
}

double ExtendedReal::to_double() const {
  if (sign == 0) return 0.0;
  return sign * std::exp(log_mag);
}

ExtendedReal ExtendedReal::operator*(const ExtendedReal& o) const {
  if (sign == 0 || o.sign == 0) return {};
  return {sign * o.sign, log_mag + o.log_mag};
}

double log_gamma(double x) {
  if (!(x > 0)) throw domain_error("log_gamma: requires x > 0");
  double acc = 0.0;
  while (x < 10.0) {
    acc -= std::log(x);
    x += 1.0;
  }
  return stirling_log_gamma(x) + acc;
}

std::complex<double> log_gamma(std::complex<double> z) {
  if (!(z.real() > 0))
    throw domain_error("log_gamma: requires Re z > 0");
  std::complex<double> acc = 0.0;
  while (z.real() < 10.0) {
    acc -= std::log(z);  // principal log; arguments stay in Re > 0
    z += 1.0;
  }
  return stirling_log_gamma(z) + acc;
}

namespace {

// Shared tail: psi(w) ~ ln w - 1/(2w) - 1/(12 w^2) + 1/(120 w^4) - 1/(252 w^6)
// for |w| >= 10 (absolute error below 1e-12 there).
template <typename T>
T digamma_tail(T w) {
  using std::log;
  const T w2 = 1.0 / (w * w);
  return log(w) - 0.5 / w -
         w2 * (1.0 / 12 - w2 * (1.0 / 120 - w2 * (1.0 / 252)));
}

}  // namespace

double digamma(double x) {
  if (x <= 0.0) {
    const double r = std::round(x);
    if (std::fabs(x - r) < 1e-12)
      throw domain_error("digamma: pole at non-positive integer");
  }
  double acc = 0.0;
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  return digamma_tail(x) + acc;
}

std::complex<double> digamma(std::complex<double> z) {
  if (z.imag() == 0.0) {
    const double r = std::round(z.real());
    if (r <= 0.0 && std::fabs(z.real() - r) < 1e-12)
      throw domain_error("digamma: pole at non-positive integer");
  }
  std::complex<double> acc = 0.0;
  while (z.real() < 10.0) {
    acc -= 1.0 / z;
    z += 1.0;
  }
  return digamma_tail(z) + acc;
}

ExtendedReal hermite_scaled(int n, double x) {
  if (n < 0) throw argument_error("hermite_scaled: requires n >= 0");
  if (n == 0) return ExtendedReal::from_double(1.0);
  // H_j held as b * 2^eb with b renormalized through frexp each step, so the
  // recurrence runs at native double precision regardless of |H_j|.
  double a = 1.0;
  int ea = 0;
  int eb = 0;
  double b = std::frexp(2.0 * x, &eb);
  for (int j = 1; j < n; ++j) {
    // H_{j+1} = 2x H_j - 2j H_{j-1}, evaluated in units of 2^eb.
    const double c = 2.0 * x * b - 2.0 * j * std::ldexp(a, ea - eb);
    a = b;
    ea = eb;
    int e = 0;
    b = std::frexp(c, &e);  // frexp(0) yields (0, 0)
    eb += e;
  }
  if (b == 0.0) return {};
  return {b > 0 ? 1 : -1, std::log(std::fabs(b)) + eb * kLn2};
}

std::complex<double> tan_robust(std::complex<double> z) {
  if (std::fabs(z.imag()) <= 20.0) return std::tan(z);
  // tan z = i (1 - q) / (1 + q) with q = e^(2iz); |q| << 1 for Im z > 20,
  // mirrored through the conjugate for Im z < -20.
  if (z.imag() > 0) {
    const std::complex<double> q = std::exp(std::complex<double>(0, 2) * z);
    return std::complex<double>(0, 1) * (1.0 - q) / (1.0 + q);
  }
  const std::complex<double> q = std::exp(std::complex<double>(0, -2) * z);
  return std::complex<double>(0, -1) * (1.0 - q) / (1.0 + q);
}

void CompensatedSum::add(double x) {
  const double t = sum_ + x;
  if (std::fabs(sum_) >= std::fabs(x))
    comp_ += (sum_ - t) + x;
  else
    comp_ += (x - t) + sum_;
  sum_ = t;
}

double compensated_sum(const std::vector<double>& values) {
  CompensatedSum s;
  for (double v : values) s.add(v);
  return s.value();
}

double tree_reduce(std::vector<double> partials) {
  if (partials.empty()) return 0.0;
  // Fixed pairwise tree: level l combines elements 2i and 2i+1 of level l-1.
  while (partials.size() > 1) {
    std::size_t half = (partials.size() + 1) / 2;
    for (std::size_t i = 0; i < half; ++i) {
      const std::size_t a = 2 * i, b = 2 * i + 1;
      partials[i] = b < partials.size() ? partials[a] + partials[b]
                                        : partials[a];
    }
    partials.resize(half);
  }
  return partials[0];
}

}  // namespace zetascan
