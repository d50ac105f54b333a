#include "gft/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace gft {

namespace {

void require_pair_degrees(const TruncatedSeries& f,
                          const TruncatedSeries& comparison,
                          const ClassParams& params) {
  if (!f.is_normalized(params.valence)) {
    throw std::invalid_argument("candidate function must be normalized");
  }
  if (!comparison.is_normalized(params.valence)) {
    throw std::invalid_argument("comparison series must be normalized");
  }
  if (f.degree() != comparison.degree()) {
    throw std::invalid_argument("mismatched truncation degrees");
  }
}

void require_membership(const TruncatedSeries& f, const TruncatedSeries& g,
                        const ClassParams& params,
                        const SamplingPolicy& policy) {
  if (!membership_report(f, g, params, policy).holds) {
    throw std::invalid_argument("pair fails the membership precondition");
  }
}

double deriv_lower_at(const ClassParams& params, double t) {
  const double p = params.valence;
  const double spread = p - 2.0 * params.order;
  return (p - spread * t) * std::pow(t, p - 1) /
         std::pow(1.0 + t, 2.0 * p + 1.0);
}

double deriv_upper_at(const ClassParams& params, double t) {
  const double p = params.valence;
  const double spread = p - 2.0 * params.order;
  return (p + spread * t) * std::pow(t, p - 1) /
         std::pow(1.0 - t, 2.0 * p + 1.0);
}

}  // namespace

SufficiencyResult sufficiency_margin(const TruncatedSeries& f,
                                     const TruncatedSeries& comparison,
                                     const ClassParams& params) {
  require_pair_degrees(f, comparison, params);
  const double p = params.valence;
  const double gamma = params.order;
  const double weight = std::abs(p - 2.0 * gamma) + p;

  double sum = 0.0;
  for (int n = 1; n <= f.degree(); ++n) {
    sum += 2.0 * (n + p) * std::abs(f.coeffs()[n]);
    sum += weight * std::abs(comparison.coeffs()[n]);
  }

  SufficiencyResult result;
  result.horizon = f.degree();
  result.margin = 2.0 * (p - gamma) - sum;
  result.certifies = result.margin > 0.0;
  return result;
}

std::vector<CoeffCheckResult> coefficient_inequality_check(
    const TruncatedSeries& f, const TruncatedSeries& comparison,
    const ClassParams& params, int n_max, double tol) {
  require_pair_degrees(f, comparison, params);
  if (n_max < 1) throw std::invalid_argument("need n_max >= 1");
  if (n_max > f.degree()) {
    throw std::invalid_argument("n_max exceeds the truncation degree");
  }

  const double p = params.valence;
  const double gamma = params.order;
  const double weight = std::abs(p - 2.0 * gamma) + p;

  std::vector<CoeffCheckResult> table;
  table.reserve(n_max);
  double cross_sum = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    CoeffCheckResult row;
    row.n = n;
    const Complex lead_term =
        (n + p) * f.coeffs()[n] - p * comparison.coeffs()[n];
    row.lhs = std::norm(lead_term) - 4.0 * (p - gamma) * (p - gamma);
    row.rhs = 2.0 * (p - gamma) * cross_sum;
    row.satisfied = row.lhs <= row.rhs + tol;
    table.push_back(row);

    // The cross-term sum for index n covers coefficients strictly below
    // n + p; fold in the n-th pair for the next row.
    const double fa = std::abs(f.coeffs()[n]);
    const double ba = std::abs(comparison.coeffs()[n]);
    cross_sum += 2.0 * (n + p) * fa * ba + weight * ba * ba;
  }
  return table;
}

BoundSet distortion_bounds(const ClassParams& params, double r, int steps) {
  if (!(r >= 0.0) || !(r < 1.0)) {
    throw std::invalid_argument("radius must lie in [0, 1)");
  }
  const double p = params.valence;
  const double gamma = params.order;
  const double spread = p - 2.0 * gamma;

  BoundSet bounds;
  bounds.r = r;
  bounds.deriv_lower = deriv_lower_at(params, r);
  bounds.deriv_upper = deriv_upper_at(params, r);
  bounds.growth_lower = simpson_integrate(
      [&](double t) { return deriv_lower_at(params, t); }, r, steps);
  bounds.growth_upper = simpson_integrate(
      [&](double t) { return deriv_upper_at(params, t); }, r, steps);
  bounds.comparison_lower = std::pow(r, p) / std::pow(1.0 + r, 2.0 * p);
  bounds.comparison_upper = std::pow(r, p) / std::pow(1.0 - r, 2.0 * p);
  bounds.ratio_lower = (p - spread * r) / (1.0 + r);
  bounds.ratio_upper = (p + spread * r) / (1.0 - r);
  return bounds;
}

DistortionReport verify_distortion(const TruncatedSeries& f,
                                   const TruncatedSeries& g,
                                   const ClassParams& params,
                                   const SamplingPolicy& policy) {
  policy.validate();
  require_membership(f, g, params, policy);

  const TruncatedSeries fprime = differentiate(f);
  const TruncatedSeries comparison =
      normalize_symmetrized(symmetrize(g, params), params);
  const TruncatedSeries ratio = transfer_ratio(f, g, params);

  DistortionReport report;
  report.deriv_slack = std::numeric_limits<double>::infinity();
  report.growth_slack = std::numeric_limits<double>::infinity();
  report.comparison_slack = std::numeric_limits<double>::infinity();
  report.ratio_slack = std::numeric_limits<double>::infinity();

  const auto fold = [](double& slack, double value, double lower,
                       double upper) {
    slack = std::min({slack, value - lower, upper - value});
  };

  for (double r : policy.radii) {
    const BoundSet bounds = distortion_bounds(params, r);
    for (int j = 0; j < policy.angles_per_circle; ++j) {
      const Complex z = std::polar(
          r, 2.0 * std::numbers::pi * j / policy.angles_per_circle);
      fold(report.deriv_slack, std::abs(evaluate(fprime, z)),
           bounds.deriv_lower, bounds.deriv_upper);
      fold(report.growth_slack, std::abs(evaluate(f, z)), bounds.growth_lower,
           bounds.growth_upper);
      fold(report.comparison_slack, std::abs(evaluate(comparison, z)),
           bounds.comparison_lower, bounds.comparison_upper);
      fold(report.ratio_slack, std::abs(evaluate(ratio, z)),
           bounds.ratio_lower, bounds.ratio_upper);
    }
  }
  report.ok = report.deriv_slack >= -kDistortionSlackTol &&
              report.growth_slack >= -kDistortionSlackTol &&
              report.comparison_slack >= -kDistortionSlackTol &&
              report.ratio_slack >= -kDistortionSlackTol;
  return report;
}

OrderInclusionReport verify_order_inclusion(const TruncatedSeries& f,
                                            const TruncatedSeries& g,
                                            const ClassParams& params,
                                            double lower_order,
                                            const SamplingPolicy& policy) {
  if (!(lower_order >= 0.0) || !(lower_order <= params.order)) {
    throw std::invalid_argument(
        "relaxed order must satisfy 0 <= lower_order <= order");
  }
  OrderInclusionReport report;
  report.original = membership_report(f, g, params, policy);
  report.relaxed =
      membership_report(f, g, params.with_order(lower_order), policy);
  const double shift = params.order - lower_order;
  report.identity_error =
      std::abs(report.relaxed.real_part.min_margin -
               (report.original.real_part.min_margin + shift));
  report.implication = !report.original.holds || report.relaxed.holds;
  return report;
}

MembershipReport close_to_convex_report(const TruncatedSeries& f,
                                        const TruncatedSeries& g,
                                        const ClassParams& params,
                                        const SamplingPolicy& policy) {
  policy.validate();
  require_membership(f, g, params, policy);

  const TruncatedSeries ratio = transfer_ratio(f, g, params);
  const std::vector<Complex> grid = make_grid(policy);
  const ScanExtreme low =
      grid_min_real([&](Complex z) { return evaluate(ratio, z); }, grid);

  MembershipReport report;
  report.min_margin = low.value;
  report.witness = low.witness;
  report.checked_points = static_cast<long>(grid.size());
  report.holds = report.min_margin > -policy.margin_tol;
  return report;
}

NonvanishingReport nonvanishing_check(const TruncatedSeries& f,
                                      const TruncatedSeries& comparison,
                                      const ClassParams& params,
                                      const SamplingPolicy& policy,
                                      int zeta_samples) {
  require_pair_degrees(f, comparison, params);
  policy.validate();

  const double p = params.valence;
  const double gamma = params.order;
  // Normalized building blocks with constant terms p and 1: the weighted
  // derivative of f and the comparison series, both divided by z^p. Each
  // zeta combination is affine in these two, so their grid and circle values
  // are computed once.
  const TruncatedSeries deriv_part =
      downshift(downshift(differentiate(f), -1), params.valence);
  const TruncatedSeries comp_part = downshift(comparison, params.valence);

  const std::vector<Complex> grid = make_grid(policy);
  std::vector<Complex> deriv_grid = evaluate_on(deriv_part, grid);
  std::vector<Complex> comp_grid = evaluate_on(comp_part, grid);

  const int m = policy.angles_per_circle;
  std::vector<Complex> circle(m);
  for (int j = 0; j < m; ++j) {
    circle[j] = std::polar(policy.r_max, 2.0 * std::numbers::pi * j / m);
  }
  const std::vector<Complex> deriv_circle = evaluate_on(deriv_part, circle);
  const std::vector<Complex> comp_circle = evaluate_on(comp_part, circle);

  NonvanishingReport report;
  report.min_modulus = std::numeric_limits<double>::infinity();
  std::vector<Complex> image(m);
  for (const Complex& zeta : unimodular_samples(zeta_samples)) {
    ++report.zeta_count;
    const Complex a = (zeta + 1.0) / (2.0 * (p - gamma));
    const Complex b = (Complex(p - 2.0 * gamma, 0.0) - p * zeta) /
                      (2.0 * (p - gamma));
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double mod = std::abs(a * deriv_grid[i] + b * comp_grid[i]);
      if (mod < report.min_modulus) {
        report.min_modulus = mod;
        report.witness_z = grid[i];
        report.witness_zeta = zeta;
      }
    }
    for (int j = 0; j < m; ++j) {
      image[j] = a * deriv_circle[j] + b * comp_circle[j];
    }
    const WindingResult wind =
        winding_number(image, Complex(0.0, 0.0), policy.margin_tol);
    if (wind.passes_through || wind.turns != 0) ++report.winding_hits;
  }
  report.nonvanishing =
      report.min_modulus > policy.margin_tol && report.winding_hits == 0;
  return report;
}

}  // namespace gft
