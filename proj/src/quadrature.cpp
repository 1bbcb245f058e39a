#include "zetascan/quadrature.hpp"

#include <cmath>

#include "zetascan/errors.hpp"
#include "zetascan/numerics.hpp"

namespace zetascan {
namespace {

// 16-node Gauss-Legendre abscissas and weights on [-1, 1], positive half;
// weights sum to exactly 2.
struct NodeWeight {
  double x, w;
};
constexpr NodeWeight kGL16[] = {
    {0.0950125098376374402, 0.189450610455068496},
    {0.281603550779258913, 0.182603415044923589},
    {0.458016777657227386, 0.169156519395002538},
    {0.617876244402643748, 0.149595988816576732},
    {0.755404408355003034, 0.124628971255533872},
    {0.865631202387831744, 0.0951585116824927848},
    {0.944575023073232576, 0.0622535239386478929},
    {0.989400934991649933, 0.0271524594117540949},
};

std::complex<double> composite(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    int panels) {
  const double h = (b - a) / panels;
  CompensatedSum re, im;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    const double half = 0.5 * h;
    for (const auto& nw : kGL16) {
      const std::complex<double> lo = f(mid - half * nw.x);
      const std::complex<double> hi = f(mid + half * nw.x);
      re.add(nw.w * half * (lo.real() + hi.real()));
      im.add(nw.w * half * (lo.imag() + hi.imag()));
    }
  }
  return {re.value(), im.value()};
}

}  // namespace

QuadratureResult integrate_line(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    double abs_tol, double feature_scale, int max_panels) {
  if (!(a < b)) throw argument_error("integrate_line: requires a < b");
  if (!(abs_tol > 0))
    throw argument_error("integrate_line: requires abs_tol > 0");
  if (!(feature_scale > 0))
    throw argument_error("integrate_line: requires feature_scale > 0");
  int panels = 16;
  while (panels < max_panels && panels * feature_scale < (b - a)) panels *= 2;
  std::complex<double> prev = composite(f, a, b, panels);
  while (2 * panels <= max_panels) {
    panels *= 2;
    const std::complex<double> cur = composite(f, a, b, panels);
    const double change = std::abs(cur - prev);
    if (change <= abs_tol) return {cur, change, panels};
    prev = cur;
  }
  throw numerical_error(
      "integrate_line: tolerance not reached at maximum panel count");
}

}  // namespace zetascan
