#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "doctest.h"
#include "zetascan/errors.hpp"
#include "zetascan/sieve.hpp"
#include "zetascan/zeta.hpp"

using zetascan::chi_factor;
using zetascan::find_zeros;
using zetascan::gamma_n_estimate;
using zetascan::hardy_z;
using zetascan::riemann_siegel_theta;
using zetascan::zero_count_main_term;
using zetascan::zeta_em;

namespace {

void check_point(std::complex<double> s, std::complex<double> zeta,
                 std::complex<double> dzeta, double abs_tol) {
  const auto r = zeta_em(s);
  CHECK(std::abs(r.value - zeta) <= abs_tol);
  CHECK(std::abs(r.derivative - dzeta) <= abs_tol);
  CHECK(r.est_error <= 1e-10);
  CHECK(r.terms >= 20);
}

}  // namespace

TEST_CASE("zeta_em on the real axis") {
  check_point({2.0, 0.0}, {1.64493406684823, 0.0},
              {-0.937548254315844, 0.0}, 1e-11);
  check_point({0.0, 0.0}, {-0.5, 0.0}, {-0.918938533204673, 0.0}, 1e-11);
  check_point({-1.0, 0.0}, {-0.0833333333333333, 0.0},
              {-0.165421143700451, 0.0}, 1e-11);
  check_point({0.5, 0.0}, {-1.46035450880959, 0.0},
              {-3.92264613920915, 0.0}, 1e-10);

  const auto r = zeta_em({2.0, 0.0});
  const std::complex<double> ratio = r.derivative / r.value;
  CHECK(ratio.real() == doctest::Approx(-0.569960993094533).epsilon(1e-11));
}

TEST_CASE("zeta_em off the real axis") {
  check_point({0.5, 14.134725}, {1.7674298413849e-8, -1.11020289309231e-7},
              {0.783296479298712, 0.124699916831352}, 5e-12);
  check_point({0.3, 7.0}, {1.01713149889509, 0.439444006896341},
              {0.0260736372224872, -0.225811238078705}, 1e-10);
  check_point({2.0, 5.0}, {0.850962943624263, 0.0989969461348313},
              {0.0751514799038889, -0.0626693376336944}, 1e-10);
  check_point({0.5, 30.0}, {-0.120642287590044, -0.583691214763706},
              {1.53774081810247, 0.157891656316925}, 1e-9);
  check_point({-1.0, 37.5}, {-14.157312875628, 3.52401383726786},
              {26.6118174624527, -7.57004300383985}, 5e-8);
  check_point({1.5, 81.0}, {1.68794824715128, 0.141637405388659},
              {-0.833988293966985, -0.185118071698447}, 1e-9);

  // near the first critical zero the value almost vanishes
  CHECK(std::abs(zeta_em({0.5, 14.1347251417347}).value) <= 1e-5);
}

TEST_CASE("zeta_em contract violations") {
  CHECK_THROWS_AS(zeta_em({1.0, 0.0}), zetascan::domain_error);
  CHECK_THROWS_AS(zeta_em({1.0, 1e-13}), zetascan::domain_error);
  CHECK_THROWS_AS(zeta_em({0.5, 1001.0}), zetascan::unsupported_regime_error);
  CHECK_THROWS_AS(zeta_em({0.5, -1001.0}), zetascan::unsupported_regime_error);
  CHECK_THROWS_AS(zeta_em({2.0, 0.0}, 0.0), zetascan::argument_error);
}

TEST_CASE("logarithmic derivative matches the prime-power sum on Re s = 2") {
  const auto table = zetascan::shared_prime_power_table(1000000);
  const double pins[] = {1.000392e-6, 1.962543e-7, 5.038481e-8};
  const double ts[] = {0.0, 5.0, 20.0};
  for (int i = 0; i < 3; ++i) {
    const std::complex<double> s(2.0, ts[i]);
    std::complex<double> sum = 0.0;
    for (const auto& e : table->entries)
      sum += e.lambda * std::exp(-s * e.log_n);
    const auto r = zeta_em(s, 1e-12);
    const double tail = std::abs(r.derivative / r.value + sum);
    CHECK(tail == doctest::Approx(pins[i]).epsilon(0.01));
    CHECK(tail <= 1.01e-6);
  }
}

TEST_CASE("functional-equation factor") {
  const std::complex<double> at_half = chi_factor({0.5, 0.0});
  CHECK(at_half.real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(at_half.imag()) <= 1e-12);

  const std::complex<double> at_two = chi_factor({2.0, 0.0});
  CHECK(at_two.real() ==
        doctest::Approx(-2.0 * M_PI * M_PI).epsilon(1e-12));
  CHECK(std::abs(at_two.imag()) <= 1e-12);

  // zeta(s) = chi(s) zeta(1-s)
  {
    const std::complex<double> s(0.3, 7.0);
    const std::complex<double> lhs = zeta_em(s).value;
    const std::complex<double> rhs =
        chi_factor(s) * zeta_em(1.0 - s).value;
    CHECK(std::abs(lhs - rhs) <= 1e-8 * std::abs(lhs));
  }
  std::mt19937 rng(777);
  std::uniform_real_distribution<double> pick_re(-1.0, 2.0);
  std::uniform_real_distribution<double> pick_im(2.0, 50.0);
  for (int trial = 0; trial < 50; ++trial) {
    const std::complex<double> s(pick_re(rng),
                                 (trial % 2 ? 1.0 : -1.0) * pick_im(rng));
    const std::complex<double> lhs = zeta_em(s).value;
    const std::complex<double> rhs = chi_factor(s) * zeta_em(1.0 - s).value;
    CHECK(std::abs(lhs - rhs) <= 1e-8 * (1.0 + std::abs(lhs)));
  }

  CHECK_THROWS_AS(chi_factor({3.0, 0.0}), zetascan::domain_error);
  CHECK_THROWS_AS(chi_factor({1.0, 0.0}), zetascan::domain_error);
}

TEST_CASE("theta and hardy Z") {
  CHECK(riemann_siegel_theta(20.0) ==
        doctest::Approx(1.18689480844448).epsilon(1e-11));
  CHECK(riemann_siegel_theta(100.0) ==
        doctest::Approx(87.9721652317872).epsilon(1e-11));
  CHECK(std::abs(riemann_siegel_theta(0.0)) <= 1e-14);

  CHECK(hardy_z(20.0) == doctest::Approx(1.1478424121852).epsilon(1e-9));
  CHECK(hardy_z(14.1) * hardy_z(14.2) < 0.0);  // brackets the first zero
}

TEST_CASE("zero_count_main_term") {
  CHECK(zero_count_main_term(30.0) ==
        doctest::Approx(3.564656381).epsilon(1e-8));
  CHECK(zero_count_main_term(100.0) ==
        doctest::Approx(29.00234359).epsilon(1e-8));
}

TEST_CASE("find_zeros locates the first ordinates") {
  const auto r = find_zeros(30.0);
  CHECK(r.count_consistent);
  REQUIRE(r.zeros.size() == 3);
  CHECK(r.zeros[0] == doctest::Approx(14.1347251417347).epsilon(1e-9));
  CHECK(r.zeros[1] == doctest::Approx(21.0220396387716).epsilon(1e-9));
  CHECK(r.zeros[2] == doctest::Approx(25.0108575801457).epsilon(1e-9));

  const auto none = find_zeros(10.0);
  CHECK(none.zeros.empty());
  CHECK(none.count_consistent);

  const auto hundred = find_zeros(100.0);
  CHECK(hundred.count_consistent);
  CHECK(hundred.zeros.size() == 29);

  CHECK_THROWS_AS(find_zeros(0.0), zetascan::argument_error);
  CHECK_THROWS_AS(find_zeros(1001.0), zetascan::argument_error);
}

TEST_CASE("find_zeros reaches the fiftieth ordinate") {
  const auto r = find_zeros(143.2);
  CHECK(r.count_consistent);
  REQUIRE(r.zeros.size() >= 50);
  CHECK(r.zeros[49] == doctest::Approx(143.111845807621).epsilon(1e-9));

  // gaps track the local mean spacing 2 pi / ln(gamma / 2 pi)
  for (std::size_t i = 1; i < r.zeros.size(); ++i) {
    if (r.zeros[i] < 50.0) continue;
    const double gap = r.zeros[i] - r.zeros[i - 1];
    const double mean = 2.0 * M_PI / std::log(r.zeros[i] / (2.0 * M_PI));
    CHECK(gap / mean >= 0.2);
    CHECK(gap / mean <= 5.0);
  }
}

TEST_CASE("gamma_n_estimate") {
  CHECK(gamma_n_estimate(2) ==
        doctest::Approx(18.1294405673088).epsilon(1e-12));
  // n / ln n dips at n = 3 (its minimum sits at e) and grows from there on
  CHECK(gamma_n_estimate(3) < gamma_n_estimate(2));
  for (int n = 4; n <= 50; ++n)
    CHECK(gamma_n_estimate(n) > gamma_n_estimate(n - 1));

  const auto r = find_zeros(100.0);
  REQUIRE(r.zeros.size() == 29);
  for (int n = 2; n <= 29; ++n) {
    const double ratio = gamma_n_estimate(n) / r.zeros[n - 1];
    CHECK(ratio >= 0.5);
    CHECK(ratio <= 2.0);
  }

  CHECK_THROWS_AS(gamma_n_estimate(1), zetascan::domain_error);
  CHECK_THROWS_AS(gamma_n_estimate(0), zetascan::domain_error);
}
