#include "zetascan/scan.hpp"

#include <atomic>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <string>
#include <thread>

#include "zetascan/errors.hpp"
#include "zetascan/sieve.hpp"

namespace zetascan {
namespace {

constexpr double kPi = 3.14159265358979324;
constexpr double kE = 2.71828182845904524;

std::string msgf(const char* format, ...) {
  char buf[256];
  va_list ap;
  va_start(ap, format);
  std::vsnprintf(buf, sizeof buf, format, ap);
  va_end(ap);
  return buf;
}

}  // namespace

KPolicy KPolicy::fixed_alpha(double alpha0) {
  if (!(alpha0 > 0))
    throw argument_error("KPolicy::fixed_alpha: requires alpha0 > 0");
  return {Kind::fixed_alpha, alpha0};
}

KPolicy KPolicy::log_squared_growth(double beta) {
  if (!(beta > 1.0))
    throw argument_error("KPolicy::log_squared_growth: requires beta > 1");
  return {Kind::log_squared_growth, beta};
}

std::int64_t KPolicy::k_for(double xi) const {
  if (!(xi > 0)) throw argument_error("KPolicy::k_for: requires xi > 0");
  double target = 0.0;
  if (kind == Kind::fixed_alpha) {
    target = param * xi * xi;
  } else {
    if (!(xi * std::log(xi) > 1.0))
      throw argument_error(
          "KPolicy::k_for: growth schedule requires xi ln xi > 1");
    const double u = xi * std::log(xi * std::log(xi));
    target = param * u * u;
  }
  if (!(target < 9.2e18))
    throw argument_error("KPolicy::k_for: k exceeds int64 range");
  const auto k = static_cast<std::int64_t>(std::ceil(target));
  return k < 1 ? 1 : k;
}

ScanProfile scan_profile(double lo, double hi, double step,
                         const KPolicy& policy, double eps,
                         bool use_exact_weight, int threads) {
  if (!(lo >= 2.0)) throw argument_error("scan_profile: requires lo >= 2");
  if (!(hi > lo)) throw argument_error("scan_profile: requires hi > lo");
  if (!(step > 0.0) || step > 0.1)
    throw argument_error("scan_profile: requires 0 < step <= 0.1");
  if (!(eps > 0)) throw argument_error("scan_profile: requires eps > 0");
  if (threads < 1) throw argument_error("scan_profile: requires threads >= 1");

  const auto n =
      static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
  ScanProfile pr;
  pr.step = step;
  pr.eps = eps;
  pr.exact_weight = use_exact_weight;
  pr.xis.resize(n);
  pr.values.resize(n);
  pr.ks.resize(n);
  pr.terms_used.resize(n);
  pr.error_bounds.resize(n);

  std::vector<WeightParams> params;
  params.reserve(n);
  std::vector<std::int64_t> n_limits(n);
  std::int64_t tau_max = 2;
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = lo + static_cast<double>(i) * step;
    pr.xis[i] = xi;
    WeightParams p(policy.k_for(xi), xi);
    if (use_exact_weight && p.k > kExactHermiteMaxK)
      throw unsupported_regime_error(
          msgf("scan_profile: exact weight needs k <= %lld but xi=%.6f gives "
               "k=%lld",
               static_cast<long long>(kExactHermiteMaxK), xi,
               static_cast<long long>(p.k)));
    const TauResult tau = tau_truncation(p, eps);
    if (!tau.feasible)
      throw truncation_infeasible_error(
          msgf("scan_profile: tau(eps) infeasible at xi=%.6f; smallest "
               "feasible eps there is %.3e",
               xi, min_feasible_eps(p)));
    n_limits[i] = tau.n_limit();
    if (n_limits[i] > tau_max) tau_max = n_limits[i];
    pr.ks[i] = p.k;
    params.push_back(p);
  }

  const auto table = shared_prime_power_table(tau_max);
  // Threads split across grid points; each point sums a serial prefix of the
  // shared table, so values do not depend on the thread count.
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) break;
      const WeightParams& p = params[i];
      CompensatedSum acc;
      long long terms = 0;
      for (const auto& e : table->entries) {
        if (e.n > n_limits[i]) break;
        const double x = static_cast<double>(e.n);
        acc.add(e.lambda * (use_exact_weight ? weight_w_exact(p, x)
                                             : weight_w_tilde(p, x)));
        ++terms;
      }
      const double kk = static_cast<double>(p.k);
      pr.values[i] =
          smooth_term(p.xi) - acc.value() + pole_term(p) / 2.0;
      pr.error_bounds[i] =
          (std::sqrt(kk) / (p.xi * p.xi) + std::exp(-std::sqrt(kk) / p.xi)) *
              std::log(p.xi) +
          eps;
      pr.terms_used[i] = terms;
    }
  };
  const int nw = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(threads), n));
  if (nw <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < nw; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return pr;
}

std::vector<ZeroCandidate> detect_zeros(const ScanProfile& pr) {
  const std::size_t n = pr.xis.size();
  if (n < 3)
    throw argument_error("detect_zeros: profile needs at least 3 points");
  std::vector<double> alphas(n);
  for (std::size_t i = 0; i < n; ++i) {
    alphas[i] = static_cast<double>(pr.ks[i]) / (pr.xis[i] * pr.xis[i]);
    const double max_step = 1.0 / (4.0 * std::sqrt(alphas[i]));
    if (pr.step > max_step + 1e-12)
      throw resolution_error(
          msgf("detect_zeros: step %.4f too coarse at xi=%.6f; needs "
               "step <= %.4f",
               pr.step, pr.xis[i], max_step));
  }

  // Local maxima above half the isolated-zero peak height.
  std::vector<std::size_t> peaks;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double threshold = 0.5 * std::sqrt(alphas[i] / (2.0 * kPi));
    if (pr.values[i] > pr.values[i - 1] && pr.values[i] >= pr.values[i + 1] &&
        pr.values[i] > threshold)
      peaks.push_back(i);
  }

  // Consolidate micro-peaks closer than the feature width, keeping the
  // highest.
  std::vector<std::size_t> kept;
  for (std::size_t pk : peaks) {
    if (!kept.empty()) {
      const double radius = 0.5 / std::sqrt(alphas[kept.back()]);
      if (pr.xis[pk] - pr.xis[kept.back()] < radius) {
        if (pr.values[pk] > pr.values[kept.back()]) kept.back() = pk;
        continue;
      }
    }
    kept.push_back(pk);
  }

  // Integration windows +-3/(2 sqrt(alpha)), clipped to the grid; overlapping
  // neighbors split at the interior minimum.
  const std::size_t m = kept.size();
  std::vector<long long> i_lo(m), i_hi(m);
  for (std::size_t c = 0; c < m; ++c) {
    const double half = 1.5 / std::sqrt(alphas[kept[c]]);
    double wlo = pr.xis[kept[c]] - half;
    double whi = pr.xis[kept[c]] + half;
    if (wlo < pr.xis.front()) wlo = pr.xis.front();
    if (whi > pr.xis.back()) whi = pr.xis.back();
    i_lo[c] = static_cast<long long>(
        std::ceil((wlo - pr.xis.front()) / pr.step - 1e-9));
    i_hi[c] = static_cast<long long>(
        std::floor((whi - pr.xis.front()) / pr.step + 1e-9));
  }
  for (std::size_t c = 0; c + 1 < m; ++c) {
    if (i_hi[c] >= i_lo[c + 1]) {
      std::size_t argmin = kept[c];
      for (std::size_t i = kept[c]; i <= kept[c + 1]; ++i)
        if (pr.values[i] < pr.values[argmin]) argmin = i;
      i_hi[c] = static_cast<long long>(argmin);
      i_lo[c + 1] = static_cast<long long>(argmin);
    }
  }

  std::vector<ZeroCandidate> out;
  for (std::size_t c = 0; c < m; ++c) {
    double mass = 0.0;
    for (long long i = i_lo[c]; i < i_hi[c]; ++i)
      mass += 0.5 * (pr.values[i] + pr.values[i + 1]) * pr.step;
    if (mass >= 0.35 && mass <= 0.65)
      out.push_back({pr.xis[kept[c]], mass, pr.xis[i_lo[c]], pr.xis[i_hi[c]]});
  }
  return out;
}

PrimeBudget required_primes_estimate(double xi0, double beta, double eps) {
  if (!(xi0 > kE))
    throw argument_error("required_primes_estimate: requires xi0 > e");
  if (!(beta > 1.0))
    throw argument_error("required_primes_estimate: requires beta > 1");
  if (!(eps > 0))
    throw argument_error("required_primes_estimate: requires eps > 0");
  const double u = xi0 * std::log(xi0 * std::log(xi0));
  const double k = beta * u * u;
  const double a = k / (xi0 * xi0);
  const double inner =
      a + 0.5 * std::max(0.0, std::log(4.0 * k / (eps * xi0)));
  const double tau = std::exp(4.0 * (a + std::sqrt(a) * std::sqrt(inner)));
  return {k, tau, std::isfinite(tau)};
}

}  // namespace zetascan
