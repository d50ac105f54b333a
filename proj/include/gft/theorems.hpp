// Verifiers for the quantitative consequences of membership: the sufficient
// coefficient condition, the per-index coefficient inequality, two-sided
// modulus bounds with their sampled sandwiches, order inclusion, and the
// excluded-value nonvanishing criterion.
#pragma once

#include <vector>

#include "gft/classes.hpp"
#include "gft/sampling.hpp"
#include "gft/series.hpp"

namespace gft {

// Two-sided bounds at a fixed radius r: on |f'|, on |f| (integrals of the
// derivative bounds), on the normalized symmetrized comparison, and on the
// transfer ratio.
struct BoundSet {
  double r = 0.0;
  double deriv_lower = 0.0;
  double deriv_upper = 0.0;
  double growth_lower = 0.0;
  double growth_upper = 0.0;
  double comparison_lower = 0.0;
  double comparison_upper = 0.0;
  double ratio_lower = 0.0;
  double ratio_upper = 0.0;
};

// Margin of the sufficient coefficient condition. The sums run over the
// shared truncation horizon; a positive margin certifies membership, a
// negative one is inconclusive because the unseen tail could go either way.
struct SufficiencyResult {
  double margin = 0.0;
  int horizon = 0;
  bool certifies = false;
};

// One row of the coefficient-inequality table: the squared combination on
// the left against the cross-term sum on the right.
struct CoeffCheckResult {
  int n = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  bool satisfied = false;
};

// Worst slack per bound family over every sampled radius and angle. Slack is
// min(value - lower, upper - value); the sandwich holds when every slack
// stays above -kDistortionSlackTol.
struct DistortionReport {
  bool ok = false;
  double deriv_slack = 0.0;
  double growth_slack = 0.0;
  double comparison_slack = 0.0;
  double ratio_slack = 0.0;
};

inline constexpr double kDistortionSlackTol = 1e-6;

// Membership at the original order versus a relaxed (smaller) order, the
// implication verdict, and the exact margin bookkeeping: relaxing the order
// by delta raises the margin by exactly delta.
struct OrderInclusionReport {
  ClassReport original;
  ClassReport relaxed;
  double identity_error = 0.0;
  bool implication = false;
};

// Excluded-value scan: for unimodular zeta the combination series must not
// vanish on the sampled disk. min_modulus is the smallest sampled value over
// all (zeta, z); winding_hits counts zeta whose combination winds around 0
// inside the outermost circle.
struct NonvanishingReport {
  bool nonvanishing = false;
  double min_modulus = 0.0;
  Complex witness_z{0.0, 0.0};
  Complex witness_zeta{0.0, 0.0};
  long zeta_count = 0;
  long winding_hits = 0;
};

// Margin of 2(p - gamma) against the weighted coefficient sums of f and the
// normalized symmetrized comparison. Requires equal truncation degrees.
SufficiencyResult sufficiency_margin(const TruncatedSeries& f,
                                     const TruncatedSeries& comparison,
                                     const ClassParams& params);

// Per-index inequality for n = 1..n_max: the deviation of the n-th
// combined coefficient from its disk bound against the accumulated
// cross-terms of lower index.
std::vector<CoeffCheckResult> coefficient_inequality_check(
    const TruncatedSeries& f, const TruncatedSeries& comparison,
    const ClassParams& params, int n_max, double tol = 1e-9);

// Closed-form bound evaluation at radius r; growth bounds by composite
// Simpson quadrature of the derivative bounds.
BoundSet distortion_bounds(const ClassParams& params, double r,
                           int steps = 1024);

// Samples |f'|, |f|, the comparison modulus, and the transfer-ratio modulus
// on every policy circle and checks them against distortion_bounds.
// Requires a passing membership report.
DistortionReport verify_distortion(const TruncatedSeries& f,
                                   const TruncatedSeries& g,
                                   const ClassParams& params,
                                   const SamplingPolicy& policy);

// Membership at params.order versus membership at lower_order <= params.order
// for the same pair, with the exact margin-shift identity checked.
OrderInclusionReport verify_order_inclusion(const TruncatedSeries& f,
                                            const TruncatedSeries& g,
                                            const ClassParams& params,
                                            double lower_order,
                                            const SamplingPolicy& policy);

// Close-to-convexity of f against the normalized symmetrized comparison:
// min Re of the transfer ratio must exceed 0. Requires a passing membership
// report at params.order.
MembershipReport close_to_convex_report(const TruncatedSeries& f,
                                        const TruncatedSeries& g,
                                        const ClassParams& params,
                                        const SamplingPolicy& policy);

// For each sampled unimodular zeta, forms the affine combination of the
// normalized derivative and comparison series and scans it for zeros: grid
// minimum modulus plus a winding-number pass over the outermost circle.
// Agreement with the membership verdict is the cross-oracle property.
NonvanishingReport nonvanishing_check(const TruncatedSeries& f,
                                      const TruncatedSeries& comparison,
                                      const ClassParams& params,
                                      const SamplingPolicy& policy,
                                      int zeta_samples);

}  // namespace gft
