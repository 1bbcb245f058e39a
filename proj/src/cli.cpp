#include "zetascan/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>

#include "CLI11.hpp"
#include "zetascan/errors.hpp"
#include "zetascan/io.hpp"
#include "zetascan/scan.hpp"
#include "zetascan/sieve.hpp"
#include "zetascan/zeta.hpp"

namespace zetascan {
namespace {

void with_output(const std::string& path, std::ostream& fallback,
                 const std::function<void(std::ostream&)>& fn) {
  if (path.empty()) {
    fn(fallback);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw argument_error("cannot open output file: " + path);
  fn(f);
  f.flush();
  if (!f) throw std::runtime_error("failed writing output file: " + path);
}

struct ScanArgs {
  double lo = 0.0, hi = 0.0, step = 0.02, eps = 0.05;
  double alpha = 1.0, beta = 0.0;
  bool exact = false;
  int threads = 1;
  std::string out;
};

void add_scan_options(CLI::App* sub, ScanArgs& a) {
  sub->add_option("--lo", a.lo, "grid start (>= 2)")->required();
  sub->add_option("--hi", a.hi, "grid end (> lo)")->required();
  sub->add_option("--step", a.step, "grid step (<= 0.1)")
      ->capture_default_str();
  sub->add_option("--eps", a.eps, "truncation tolerance")
      ->capture_default_str();
  auto* oa = sub->add_option("--alpha", a.alpha,
                             "degree schedule k = ceil(alpha xi^2)")
                 ->capture_default_str();
  auto* ob = sub->add_option(
      "--beta", a.beta, "growing-degree schedule k = ceil(beta (xi ln(xi ln xi))^2)");
  ob->excludes(oa);
  sub->add_flag("--exact", a.exact,
                "sum the exact Hermite weight instead of the surrogate");
  sub->add_option("--threads", a.threads, "worker threads")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  sub->add_option("--out", a.out, "output file (default stdout)");
}

KPolicy policy_from(const ScanArgs& a, const CLI::App* sub) {
  if (sub->count("--beta")) return KPolicy::log_squared_growth(a.beta);
  return KPolicy::fixed_alpha(a.alpha);
}

int run_parsed(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"prime-power profiles that locate critical-line zeta zeros"};
  app.set_config("--config", "", "TOML/INI config file; sections per subcommand");
  app.require_subcommand(1);

  // sieve
  auto* sv = app.add_subcommand("sieve", "von Mangoldt values over a range")
                 ->configurable();
  std::int64_t sv_start = 1, sv_length = 0;
  std::string sv_out;
  sv->add_option("--start", sv_start, "first n (>= 1)")->required();
  sv->add_option("--length", sv_length, "count of values")->required();
  sv->add_option("--out", sv_out, "output file (default stdout)");

  // eval
  auto* ev = app.add_subcommand("eval", "prime-side profile value at one xi")
                 ->configurable();
  double ev_xi = 0.0, ev_alpha = 0.0, ev_eps = 0.01;
  std::int64_t ev_k = 0;
  bool ev_tilde = false;
  int ev_threads = 1;
  ev->add_option("--xi", ev_xi, "profile center")->required();
  auto* ev_ok = ev->add_option("--k", ev_k, "degree");
  auto* ev_oa =
      ev->add_option("--alpha", ev_alpha, "degree via k = ceil(alpha xi^2)");
  ev_oa->excludes(ev_ok);
  ev->add_flag("--tilde", ev_tilde, "use the surrogate weight");
  ev->add_option("--eps", ev_eps, "truncation tolerance")
      ->capture_default_str();
  ev->add_option("--threads", ev_threads, "worker threads")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();

  // profile
  auto* pf = app.add_subcommand("profile", "prime-side profile over a grid")
                 ->configurable();
  ScanArgs pf_args;
  add_scan_options(pf, pf_args);

  // detect
  auto* dt = app.add_subcommand("detect", "zero candidates from a grid scan")
                 ->configurable();
  ScanArgs dt_args;
  add_scan_options(dt, dt_args);
  std::string dt_profile_out;
  dt->add_option("--profile-out", dt_profile_out,
                 "also write the underlying profile CSV");

  // identity-check
  auto* ic = app.add_subcommand(
                    "identity-check",
                    "contour-identity residual against a zero table")
                 ->configurable();
  std::int64_t ic_k = 0;
  double ic_xi = 0.0, ic_eps = 1e-6;
  std::string ic_zeros;
  int ic_threads = 1;
  ic->add_option("--k", ic_k, "degree")->required();
  ic->add_option("--xi", ic_xi, "profile center")->required();
  ic->add_option("--eps", ic_eps, "truncation tolerance")
      ->capture_default_str();
  ic->add_option("--zeros", ic_zeros, "zero-table file")->required();
  ic->add_option("--threads", ic_threads, "worker threads")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();

  // oracle-zeros
  auto* oz = app.add_subcommand("oracle-zeros",
                                "critical-line zeros up to a height")
                 ->configurable();
  double oz_tmax = 0.0;
  std::string oz_out;
  oz->add_option("--t-max", oz_tmax, "search height (<= 1000)")->required();
  oz->add_option("--out", oz_out, "output file (default stdout)");

  // compare
  auto* cp = app.add_subcommand(
                    "compare", "prime-side vs zero-side profile over a grid")
                 ->configurable();
  ScanArgs cp_args;
  cp_args.exact = true;
  add_scan_options(cp, cp_args);
  bool cp_tilde = false;
  cp->add_flag("--tilde", cp_tilde, "use the surrogate weight");
  std::string cp_zeros;
  cp->add_option("--zeros", cp_zeros, "zero-table file")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("zetascan");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (app.got_subcommand(sv)) {
    const std::vector<double> lam = sieve_lambda(sv_start, sv_length);
    with_output(sv_out, out, [&](std::ostream& os) {
      os << "n,lambda\n";
      for (std::int64_t i = 0; i < sv_length; ++i)
        os << sv_start + i << ',' << format_sig12(lam[i]) << '\n';
    });
    return 0;
  }

  if (app.got_subcommand(ev)) {
    if (!ev->count("--k") && !ev->count("--alpha"))
      throw argument_error("eval: requires --k or --alpha");
    const std::int64_t k =
        ev->count("--k") ? ev_k
                         : KPolicy::fixed_alpha(ev_alpha).k_for(ev_xi);
    const WeightParams p(k, ev_xi);
    const TauResult tau = tau_truncation(p, ev_eps);
    const FormulaBreakdown b =
        prime_side_S(p, ev_eps, !ev_tilde, ev_threads);
    out << "xi = " << format_sig12(p.xi) << "\n"
        << "k = " << p.k << "\n"
        << "alpha = " << format_sig12(p.alpha) << "\n"
        << "eps = " << format_sig12(ev_eps) << "\n"
        << "tau = " << format_sig12(tau.value) << "\n"
        << "terms_used = " << b.terms_used << "\n"
        << "smooth_term = " << format_sig12(b.smooth_term) << "\n"
        << "prime_sum = " << format_sig12(b.prime_sum) << "\n"
        << "pole_term = " << format_sig12(b.pole_term) << "\n"
        << "total = " << format_sig12(b.total) << "\n"
        << "error_bound = " << format_sig12(b.error_bound) << "\n";
    return 0;
  }

  if (app.got_subcommand(pf)) {
    const ScanProfile pr =
        scan_profile(pf_args.lo, pf_args.hi, pf_args.step,
                     policy_from(pf_args, pf), pf_args.eps, pf_args.exact,
                     pf_args.threads);
    with_output(pf_args.out, out,
                [&](std::ostream& os) { write_profile_csv(os, pr); });
    return 0;
  }

  if (app.got_subcommand(dt)) {
    const ScanProfile pr =
        scan_profile(dt_args.lo, dt_args.hi, dt_args.step,
                     policy_from(dt_args, dt), dt_args.eps, dt_args.exact,
                     dt_args.threads);
    if (!dt_profile_out.empty())
      with_output(dt_profile_out, out,
                  [&](std::ostream& os) { write_profile_csv(os, pr); });
    const std::vector<ZeroCandidate> cs = detect_zeros(pr);
    with_output(dt_args.out, out,
                [&](std::ostream& os) { write_candidates_csv(os, cs); });
    return 0;
  }

  if (app.got_subcommand(ic)) {
    const WeightParams p(ic_k, ic_xi);
    const ZeroTable zt = read_zero_table(ic_zeros);
    const IdentityBreakdown b =
        identity_residual_detail(p, zt, ic_eps, ic_threads);
    out << "k = " << p.k << "\n"
        << "xi = " << format_sig12(p.xi) << "\n"
        << "eps = " << format_sig12(ic_eps) << "\n"
        << "tau = " << format_sig12(b.tau) << "\n"
        << "terms_used = " << b.terms_used << "\n"
        << "m1 = " << format_sig12(b.m1) << "\n"
        << "pole_term = " << format_sig12(b.pole) << "\n"
        << "zero_side_exact = " << format_sig12(b.zero_side) << "\n"
        << "j_integral = " << format_sig12(b.j) << "\n"
        << "residual = " << format_sig12(b.residual) << "\n";
    return 0;
  }

  if (app.got_subcommand(oz)) {
    const ZeroSearchResult r = find_zeros(oz_tmax);
    if (!r.count_consistent)
      err << "warning: zero count " << r.zeros.size()
          << " differs from the main-term estimate "
          << format_sig12(r.expected_count)
          << " by more than 2; table may be incomplete\n";
    char header[160];
    std::snprintf(header, sizeof header,
                  "critical-line zeros up to t = %s\ncount = %zu, expected = "
                  "%s, count_consistent = %s",
                  format_sig12(oz_tmax).c_str(), r.zeros.size(),
                  format_sig12(r.expected_count).c_str(),
                  r.count_consistent ? "yes" : "no");
    with_output(oz_out, out, [&](std::ostream& os) {
      write_zero_table(os, r.zeros, header);
    });
    return 0;
  }

  if (app.got_subcommand(cp)) {
    const ZeroTable zt = read_zero_table(cp_zeros);
    const ScanProfile pr =
        scan_profile(cp_args.lo, cp_args.hi, cp_args.step,
                     policy_from(cp_args, cp), cp_args.eps, !cp_tilde,
                     cp_args.threads);
    with_output(cp_args.out, out, [&](std::ostream& os) {
      os << "xi,prime_S,zero_S,abs_diff\n";
      for (std::size_t i = 0; i < pr.xis.size(); ++i) {
        const WeightParams p(pr.ks[i], pr.xis[i]);
        const double zs = zero_side_S(p, zt);
        os << format_sig12(pr.xis[i]) << ',' << format_sig12(pr.values[i])
           << ',' << format_sig12(zs) << ','
           << format_sig12(std::fabs(pr.values[i] - zs)) << '\n';
      }
    });
    return 0;
  }

  err << "error: no subcommand selected\n";
  return 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  try {
    return run_parsed(args, out, err);
  } catch (const numerical_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const argument_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace zetascan
