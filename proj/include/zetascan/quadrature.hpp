#pragma once

#include <complex>
#include <functional>

namespace zetascan {

struct QuadratureResult {
  std::complex<double> value;
  double est_error = 0.0;  // |change| at the accepted panel doubling
  int panels = 0;          // panel count of the accepted composite rule
};

// Adaptive composite 16-node Gauss-Legendre rule on [a, b]. Starts with
// panels no wider than feature_scale, then doubles the panel count until two
// successive composites agree within abs_tol. Throws numerical_error if
// max_panels is exhausted first.
QuadratureResult integrate_line(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    double abs_tol, double feature_scale, int max_panels = 1 << 15);

}  // namespace zetascan
