#pragma once

#include <complex>
#include <vector>

namespace zetascan {

// Sign plus natural-log magnitude. Holds factors like gamma^(2k) e^(-alpha
// gamma^2) whose magnitudes overflow double. sign == 0 encodes exactly zero.
struct ExtendedReal {
  int sign = 0;
  double log_mag = 0.0;  // ln|value|, meaningful only when sign != 0

  static ExtendedReal from_double(double v);
  static ExtendedReal from_log(int sign, double log_mag);

  // Saturates to 0 or +-inf when the value leaves double range.
  double to_double() const;

  ExtendedReal operator*(const ExtendedReal& o) const;
};

// ln Gamma(x), x > 0. Relative accuracy near machine precision; absolute
// accuracy is bounded by |ln Gamma| * eps for large x.
double log_gamma(double x);

// Principal-branch ln Gamma(z) for Re z > 0, where the upward recurrence
// shift never crosses the negative real axis.
std::complex<double> log_gamma(std::complex<double> z);

// psi(z) = Gamma'(z)/Gamma(z). Poles at non-positive integers. Absolute
// accuracy 1e-10 over the supported region (asymptotic series to w^-6).
double digamma(double x);
std::complex<double> digamma(std::complex<double> z);

// Physicists' Hermite polynomial H_n(x) via the three-term recurrence,
// carried as (mantissa, power-of-two exponent) pairs so no intermediate
// overflows. Exact sign; small relative error away from roots.
ExtendedReal hermite_scaled(int n, double x);

// tan(z) without overflow for large |Im z|, where naive evaluation of
// sin/cos overflows; exact agreement with std::tan for |Im z| <= 20.
std::complex<double> tan_robust(std::complex<double> z);

// Neumaier-compensated accumulator; deterministic for a fixed add order.
class CompensatedSum {
 public:
  void add(double x);
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

double compensated_sum(const std::vector<double>& values);

// Pairwise reduction in a fixed tree order: the result depends only on the
// input sequence, never on how the partials were produced.
double tree_reduce(std::vector<double> partials);

}  // namespace zetascan
