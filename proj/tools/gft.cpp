// Command-line front end for the verification toolkit: membership checks
// with cross-oracle consistency, symmetrized-product construction, distortion
// bound tables, reproducible member synthesis, and a sweep of the whole
// property suite over a parameter grid.
//
// Every subcommand writes one JSON run report to stdout (bounds can emit CSV
// instead). Exit codes:
//   0  success, and a positive verdict where one applies
//   1  negative verdict: non-member input, failed sweep
//   2  unusable input: missing or malformed files, invalid parameters
//   3  internally inconsistent verdicts, which indicate a tolerance problem
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gft/classes.hpp"
#include "gft/generators.hpp"
#include "gft/json_io.hpp"
#include "gft/sampling.hpp"
#include "gft/series.hpp"
#include "gft/theorems.hpp"

namespace {

using gft::ClassParams;
using gft::ClassReport;
using gft::Complex;
using gft::MemberFixture;
using gft::SamplingPolicy;
using gft::SchwarzWitness;
using gft::TruncatedSeries;
using nlohmann::json;

// Sampling flags shared by the disk-scanning subcommands. A field is applied
// only when the user actually passed the flag, so the baseline (built-in
// defaults, or the file named by GFT_DEFAULT_POLICY) shows through otherwise.
struct PolicyFlags {
  double r_max = 0.0;
  int angles = 0;
  double tol = 0.0;
  std::vector<double> radii;
};

void add_policy_flags(CLI::App* cmd, PolicyFlags& flags) {
  cmd->add_option("--rmax", flags.r_max, "outermost sampling radius");
  cmd->add_option("--angles", flags.angles, "sample points per circle");
  cmd->add_option("--radii", flags.radii, "sampling radii, comma separated")
      ->delimiter(',');
  cmd->add_option("--tol", flags.tol, "verdict margin tolerance");
}

SamplingPolicy resolve_policy(const CLI::App* cmd, const PolicyFlags& flags) {
  SamplingPolicy policy = SamplingPolicy::defaults();
  if (const char* env = std::getenv("GFT_DEFAULT_POLICY")) {
    policy = gft::policy_from_json(gft::load_json_file(env));
  }
  if (cmd->count("--rmax") > 0) policy.r_max = flags.r_max;
  if (cmd->count("--angles") > 0) policy.angles_per_circle = flags.angles;
  if (cmd->count("--radii") > 0) policy.radii = flags.radii;
  if (cmd->count("--tol") > 0) policy.margin_tol = flags.tol;
  policy.validate();
  return policy;
}

class ReportClock {
 public:
  long long elapsed_ms() const {
    const auto now = std::chrono::steady_clock::now();
    return std::chrono::duration_cast<std::chrono::milliseconds>(now - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

json run_report(const std::string& command, json inputs, json results,
                json policy, const ReportClock& clock) {
  return json{{"command", command},
              {"inputs", std::move(inputs)},
              {"results", std::move(results)},
              {"policy", std::move(policy)},
              {"elapsed_ms", clock.elapsed_ms()}};
}

void emit(const json& report) { std::cout << report.dump(2) << '\n'; }

struct CheckOptions {
  std::string f_path;
  std::string g_path;
  int valence = 1;
  int symmetry = 1;
  double order = 0.0;
  int zeta_samples = 360;
  PolicyFlags policy;
};

int cmd_check(const CLI::App* cmd, const CheckOptions& opt) {
  ReportClock clock;
  const SamplingPolicy policy = resolve_policy(cmd, opt.policy);
  const ClassParams params =
      ClassParams::make(opt.valence, opt.symmetry, opt.order);

  TruncatedSeries f = gft::read_series_file(opt.f_path);
  TruncatedSeries g = gft::read_series_file(opt.g_path);
  // The pair checks require matching horizons; accept files of different
  // lengths by cutting both back to the shorter one.
  const int common = std::min(f.degree(), g.degree());
  f = gft::extend(f, common);
  g = gft::extend(g, common);

  const ClassReport membership = gft::membership_report(f, g, params, policy);
  const SchwarzWitness schwarz = gft::recover_schwarz(f, g, params, policy);
  const TruncatedSeries comparison =
      gft::normalize_symmetrized(gft::symmetrize(g, params), params);
  const gft::NonvanishingReport zeros =
      gft::nonvanishing_check(f, comparison, params, policy, opt.zeta_samples);

  const bool inequality = membership.real_part.holds;
  const bool bounded = schwarz.max_modulus < 1.0;
  // The bounded-function recovery is an exact reformulation, so a decisive
  // margin must produce the same verdict there. The zero scan resolves
  // failures only down to its zeta spacing; its silence on a thin crossing
  // is resolution, not contradiction, so only one direction is enforced.
  const bool decisive = std::abs(membership.real_part.min_margin) > 1e-6;
  bool consistent = true;
  if (decisive && inequality != bounded) consistent = false;
  if (decisive && inequality && !zeros.nonvanishing) consistent = false;

  const json verdicts{{"member", membership.holds},
                      {"inequality_holds", inequality},
                      {"schwarz_bounded", bounded},
                      {"nonvanishing", zeros.nonvanishing},
                      {"consistent", consistent}};
  json results{{"membership", membership},
               {"schwarz", schwarz},
               {"nonvanishing", zeros},
               {"verdicts", verdicts}};
  json inputs{{"f", opt.f_path},
              {"g", opt.g_path},
              {"params", params},
              {"zeta_samples", opt.zeta_samples},
              {"common_degree", common}};
  emit(run_report("check", std::move(inputs), std::move(results), json(policy),
                  clock));
  if (!consistent) return 3;
  return membership.holds ? 0 : 1;
}

struct GkOptions {
  std::string g_path;
  int valence = 1;
  int symmetry = 1;
  PolicyFlags policy;
};

int cmd_gk(const CLI::App* cmd, const GkOptions& opt) {
  ReportClock clock;
  const SamplingPolicy policy = resolve_policy(cmd, opt.policy);
  const ClassParams params = ClassParams::make(opt.valence, opt.symmetry, 0.0);
  const TruncatedSeries g = gft::read_series_file(opt.g_path);
  const TruncatedSeries product = gft::symmetrize(g, params);
  const TruncatedSeries normalized =
      gft::normalize_symmetrized(product, params);
  const double residual = gft::logderiv_residual(g, params, policy);

  json results{{"symmetrized", product},
               {"normalized", normalized},
               {"logderiv_residual", residual}};
  json inputs{{"g", opt.g_path}, {"params", params}};
  emit(run_report("gk", std::move(inputs), std::move(results), json(policy),
                  clock));
  return 0;
}

struct BoundsOptions {
  int valence = 1;
  double order = 0.0;
  std::vector<double> radii;
  int steps = 1024;
  bool csv = false;
};

int cmd_bounds(const BoundsOptions& opt) {
  ReportClock clock;
  const ClassParams params = ClassParams::make(opt.valence, 1, opt.order);
  const std::vector<double> radii =
      opt.radii.empty() ? SamplingPolicy::defaults().radii : opt.radii;

  std::vector<gft::BoundSet> rows;
  rows.reserve(radii.size());
  for (double r : radii) {
    rows.push_back(gft::distortion_bounds(params, r, opt.steps));
  }

  if (opt.csv) {
    std::cout << "r,deriv_lower,deriv_upper,growth_lower,growth_upper,"
                 "comparison_lower,comparison_upper,ratio_lower,ratio_upper\n"
              << std::setprecision(17);
    for (const auto& b : rows) {
      std::cout << b.r << ',' << b.deriv_lower << ',' << b.deriv_upper << ','
                << b.growth_lower << ',' << b.growth_upper << ','
                << b.comparison_lower << ',' << b.comparison_upper << ','
                << b.ratio_lower << ',' << b.ratio_upper << '\n';
    }
    return 0;
  }

  json inputs{{"params", params}, {"steps", opt.steps}};
  json results{{"rows", rows}};
  emit(run_report("bounds", std::move(inputs), std::move(results),
                  json{{"radii", radii}}, clock));
  return 0;
}

struct SynthOptions {
  std::uint64_t seed = 1;
  int valence = 1;
  int symmetry = 1;
  double order = 0.0;
  int degree = 64;
  double beta = 0.6;
  int schwarz_degree = 4;
  double max_modulus = 0.85;
  std::string out_prefix;
  PolicyFlags policy;
};

int cmd_synth(const CLI::App* cmd, const SynthOptions& opt) {
  ReportClock clock;
  const SamplingPolicy policy = resolve_policy(cmd, opt.policy);
  const ClassParams params =
      ClassParams::make(opt.valence, opt.symmetry, opt.order);
  const MemberFixture fixture =
      gft::make_member_fixture(params, opt.seed, opt.degree, opt.beta,
                               opt.schwarz_degree, opt.max_modulus);
  const ClassReport membership =
      gft::membership_report(fixture.f, fixture.g, params, policy);

  const std::string f_path = opt.out_prefix + "_f.json";
  const std::string g_path = opt.out_prefix + "_g.json";
  const std::string w_path = opt.out_prefix + "_w.json";
  gft::write_series_file(f_path, fixture.f);
  gft::write_series_file(g_path, fixture.g);
  gft::write_series_file(w_path, fixture.w);

  json inputs{{"seed", opt.seed},          {"params", params},
              {"degree", opt.degree},      {"beta", opt.beta},
              {"schwarz_degree", opt.schwarz_degree},
              {"max_modulus", opt.max_modulus}};
  json results{{"membership", membership},
               {"files", json{{"f", f_path}, {"g", g_path}, {"w", w_path}}}};
  const json report = run_report("synth", std::move(inputs),
                                 std::move(results), json(policy), clock);
  gft::save_json_file(opt.out_prefix + "_cert.json", report);
  emit(report);
  return membership.holds ? 0 : 1;
}

struct VerifyAllOptions {
  int trials = 54;
  std::uint64_t base_seed = 20260801;
  int degree = 128;
  double beta = 0.6;
  int schwarz_degree = 4;
  double max_modulus = 0.6;
  int zeta_samples = 360;
  int perturb = -1;
  PolicyFlags policy;
};

std::vector<ClassParams> parameter_grid() {
  std::vector<ClassParams> cells;
  for (int p = 1; p <= 3; ++p) {
    for (int k = 1; k <= 3; ++k) {
      for (double fraction : {0.0, 0.25, 0.5}) {
        cells.push_back(ClassParams::make(p, k, fraction * p));
      }
    }
  }
  return cells;
}

struct TrialOutcome {
  int trial = 0;
  std::uint64_t seed = 0;
  ClassParams params;
  std::vector<std::string> failures;
  double membership_margin = 0.0;
  double roundtrip_error = 0.0;
  double logderiv = 0.0;
};

TrialOutcome run_trial(int index, const VerifyAllOptions& opt,
                       const ClassParams& params, const SamplingPolicy& policy,
                       const std::vector<Complex>& grid) {
  TrialOutcome out;
  out.trial = index;
  out.seed = opt.base_seed + static_cast<std::uint64_t>(index);
  out.params = params;

  const MemberFixture fixture =
      gft::make_member_fixture(params, out.seed, opt.degree, opt.beta,
                               opt.schwarz_degree, opt.max_modulus);
  TruncatedSeries f = fixture.f;
  if (index == opt.perturb) {
    std::vector<Complex> coeffs(f.coeffs().begin(), f.coeffs().end());
    coeffs[std::min<std::size_t>(3, coeffs.size() - 1)] += 0.5;
    f = gft::make_series(f.lead(), std::move(coeffs));
  }

  const auto note = [&out](bool ok, const char* what) {
    if (!ok) out.failures.emplace_back(what);
  };

  const ClassReport membership =
      gft::membership_report(f, fixture.g, params, policy);
  out.membership_margin = membership.real_part.min_margin;
  note(membership.holds, "membership");
  note(membership.modulus_disagreements == 0, "modulus_form_agreement");

  const SchwarzWitness recovered =
      gft::recover_schwarz(f, fixture.g, params, policy);
  note(recovered.max_modulus < 1.0, "schwarz_bound");
  double roundtrip = 0.0;
  for (const Complex z : grid) {
    roundtrip = std::max(roundtrip, std::abs(gft::evaluate(recovered.w, z) -
                                             gft::evaluate(fixture.w, z)));
  }
  out.roundtrip_error = roundtrip;
  note(roundtrip < 1e-8, "schwarz_roundtrip");

  const TruncatedSeries comparison =
      gft::normalize_symmetrized(gft::symmetrize(fixture.g, params), params);
  bool rows_ok = true;
  const int n_max = std::min(16, opt.degree);
  for (const auto& row :
       gft::coefficient_inequality_check(f, comparison, params, n_max)) {
    rows_ok = rows_ok && row.satisfied;
  }
  note(rows_ok, "coefficient_rows");

  if (membership.holds) {
    const gft::DistortionReport distortion =
        gft::verify_distortion(f, fixture.g, params, policy);
    note(distortion.ok, "distortion_sandwich");
    const gft::OrderInclusionReport inclusion = gft::verify_order_inclusion(
        f, fixture.g, params, params.order / 2.0, policy);
    note(inclusion.implication && inclusion.identity_error < 1e-12,
         "order_inclusion");
    const gft::MembershipReport convex =
        gft::close_to_convex_report(f, fixture.g, params, policy);
    note(convex.min_margin > 0.0, "close_to_convex");
  }

  const gft::NonvanishingReport zeros = gft::nonvanishing_check(
      f, comparison, params, policy, opt.zeta_samples);
  note(zeros.nonvanishing == membership.real_part.holds,
       "zero_scan_agreement");

  out.logderiv = gft::logderiv_residual(fixture.g, params, policy);
  note(out.logderiv < 1e-6, "logderiv_residual");
  return out;
}

int cmd_verify_all(const CLI::App* cmd, const VerifyAllOptions& opt) {
  ReportClock clock;
  const SamplingPolicy policy = resolve_policy(cmd, opt.policy);
  const std::vector<ClassParams> cells = parameter_grid();
  const std::vector<Complex> grid = gft::make_grid(policy);

  json failures = json::array();
  double worst_margin = std::numeric_limits<double>::infinity();
  double worst_roundtrip = 0.0;
  double worst_logderiv = 0.0;
  int failed = 0;
  for (int i = 0; i < opt.trials; ++i) {
    const TrialOutcome out =
        run_trial(i, opt, cells[i % cells.size()], policy, grid);
    worst_margin = std::min(worst_margin, out.membership_margin);
    worst_roundtrip = std::max(worst_roundtrip, out.roundtrip_error);
    worst_logderiv = std::max(worst_logderiv, out.logderiv);
    if (!out.failures.empty()) {
      ++failed;
      failures.push_back(json{{"trial", out.trial},
                              {"seed", out.seed},
                              {"params", out.params},
                              {"failed_checks", out.failures},
                              {"membership_margin", out.membership_margin}});
    }
  }

  json inputs{{"trials", opt.trials},
              {"base_seed", opt.base_seed},
              {"degree", opt.degree},
              {"beta", opt.beta},
              {"schwarz_degree", opt.schwarz_degree},
              {"max_modulus", opt.max_modulus},
              {"zeta_samples", opt.zeta_samples},
              {"perturb", opt.perturb}};
  json results{{"failed_trials", failed},
               {"failures", failures},
               {"worst", json{{"membership_margin", worst_margin},
                              {"schwarz_roundtrip", worst_roundtrip},
                              {"logderiv_residual", worst_logderiv}}}};
  emit(run_report("verify-all", std::move(inputs), std::move(results),
                  json(policy), clock));
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  CLI::App app{
      "Verification toolkit for p-valent close-to-convex function classes "
      "defined by symmetrized starlike comparisons."};
  app.require_subcommand(1);

  CheckOptions check_opt;
  CLI::App* check = app.add_subcommand(
      "check", "membership scan of a candidate pair with cross-oracle checks");
  check->add_option("f", check_opt.f_path, "candidate series file (JSON)")
      ->required();
  check->add_option("g", check_opt.g_path, "comparison series file (JSON)")
      ->required();
  check->add_option("-p,--valence", check_opt.valence, "valence p >= 1");
  check->add_option("-k,--symmetry", check_opt.symmetry,
                    "symmetrization order k >= 1");
  check->add_option("--gamma,--order", check_opt.order,
                    "membership order, 0 <= gamma < p");
  check->add_option("--zeta-samples", check_opt.zeta_samples,
                    "unimodular sample count for the zero scan");
  add_policy_flags(check, check_opt.policy);

  GkOptions gk_opt;
  CLI::App* gk = app.add_subcommand(
      "gk", "symmetrized comparison product and its consistency residual");
  gk->add_option("g", gk_opt.g_path, "comparison series file (JSON)")
      ->required();
  gk->add_option("-p,--valence", gk_opt.valence, "valence p >= 1");
  gk->add_option("-k,--symmetry", gk_opt.symmetry,
                 "symmetrization order k >= 1");
  add_policy_flags(gk, gk_opt.policy);

  BoundsOptions bounds_opt;
  CLI::App* bounds = app.add_subcommand(
      "bounds", "two-sided derivative, growth, comparison and ratio bounds");
  bounds->add_option("-p,--valence", bounds_opt.valence, "valence p >= 1");
  bounds->add_option("--gamma,--order", bounds_opt.order,
                     "membership order, 0 <= gamma < p");
  bounds->add_option("--radii", bounds_opt.radii,
                     "radii to tabulate, comma separated")
      ->delimiter(',');
  bounds->add_option("--steps", bounds_opt.steps,
                     "quadrature steps for the growth integrals");
  bounds->add_flag("--csv", bounds_opt.csv, "emit CSV instead of JSON");

  SynthOptions synth_opt;
  CLI::App* synth = app.add_subcommand(
      "synth", "synthesize a reproducible member fixture from a seed");
  synth->add_option("--seed", synth_opt.seed, "generator seed")->required();
  synth->add_option("-p,--valence", synth_opt.valence, "valence p >= 1");
  synth->add_option("-k,--symmetry", synth_opt.symmetry,
                    "symmetrization order k >= 1");
  synth->add_option("--gamma,--order", synth_opt.order,
                    "membership order, 0 <= gamma < p");
  synth->add_option("-N,--degree", synth_opt.degree,
                    "truncation degree of the fixture");
  synth->add_option("--beta", synth_opt.beta,
                    "bound on the generating function, in [0, 1]");
  synth->add_option("--schwarz-degree", synth_opt.schwarz_degree,
                    "polynomial degree of the generating function");
  synth->add_option("--max-modulus", synth_opt.max_modulus,
                    "comparison factor root modulus cap, in (0.3, 1)");
  synth->add_option("--out", synth_opt.out_prefix,
                    "output path prefix for _f/_g/_w/_cert files")
      ->required();
  add_policy_flags(synth, synth_opt.policy);

  VerifyAllOptions all_opt;
  CLI::App* all = app.add_subcommand(
      "verify-all", "run every checker over seeded members on a params grid");
  all->add_option("--trials", all_opt.trials, "number of synthesized members");
  all->add_option("--base-seed", all_opt.base_seed, "seed of the first trial");
  all->add_option("-N,--degree", all_opt.degree,
                  "truncation degree of the fixtures");
  all->add_option("--beta", all_opt.beta,
                  "bound on the generating functions, in [0, 1]");
  all->add_option("--schwarz-degree", all_opt.schwarz_degree,
                  "polynomial degree of the generating functions");
  all->add_option("--max-modulus", all_opt.max_modulus,
                  "comparison factor root modulus cap, in (0.3, 1)");
  all->add_option("--zeta-samples", all_opt.zeta_samples,
                  "unimodular sample count for the zero scans");
  all->add_option("--perturb", all_opt.perturb,
                  "corrupt the member of this trial index (detection demo)");
  add_policy_flags(all, all_opt.policy);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*check) return cmd_check(check, check_opt);
    if (*gk) return cmd_gk(gk, gk_opt);
    if (*bounds) return cmd_bounds(bounds_opt);
    if (*synth) return cmd_synth(synth, synth_opt);
    if (*all) return cmd_verify_all(all, all_opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
