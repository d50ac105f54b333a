// p-valent starlike and close-to-convex class machinery: symmetrized
// comparison products, membership scans, Schwarz-function recovery, and the
// Mobius/half-plane criteria the membership theory rests on.
#pragma once

#include "gft/sampling.hpp"
#include "gft/series.hpp"

namespace gft {

// Class parameters: valence p >= 1, symmetrization order k >= 1, and the
// real order 0 <= gamma < p. unit_root caches exp(2 pi i / k).
struct ClassParams {
  int valence = 1;
  int symmetry = 1;
  double order = 0.0;
  Complex unit_root{1.0, 0.0};

  static ClassParams make(int valence, int symmetry, double order);

  // The starlikeness order (k-1)p/k the comparison function must meet.
  double starlike_order() const {
    return static_cast<double>((symmetry - 1) * valence) / symmetry;
  }

  ClassParams with_order(double new_order) const {
    return make(valence, symmetry, new_order);
  }
};

// Membership verdict for a candidate pair (f, g). holds requires both the
// starlikeness precondition on g and the real-part margin of the transfer
// ratio. The modulus form |H - p| < |H + p - 2 gamma| is evaluated at every
// grid point as a cross-check; disagreements beyond tolerance are counted.
struct ClassReport {
  MembershipReport starlike;
  MembershipReport real_part;
  double min_modulus_margin = 0.0;
  long modulus_disagreements = 0;
  bool holds = false;
};

// A bounded analytic witness: the function itself, its largest sampled
// modulus with the point attaining it, and whether it vanishes at 0 by
// construction (lead >= 1).
struct SchwarzWitness {
  TruncatedSeries w;
  double max_modulus = 0.0;
  Complex witness{0.0, 0.0};
  bool vanishes_at_origin = false;
};

// Result of the right-half-plane criterion: positivity of the real part
// over the grid, and avoidance of the excluded boundary values
// (zeta-1)/(zeta+1), |zeta| = 1, decided by an argument-principle scan.
struct HalfplaneCheck {
  bool positive = false;
  bool avoids_excluded = false;
  double min_real = 0.0;
  long excluded_hits = 0;
};

// Product of the k rotated copies e^{-2 pi i nu p / k} g(e^{2 pi i nu / k} z);
// the leading term is z^{kp} with unit coefficient.
TruncatedSeries symmetrize(const TruncatedSeries& g, const ClassParams& params);

// Divides the symmetrized product by z^{(k-1)p}, returning a normalized
// p-valent series.
TruncatedSeries normalize_symmetrized(const TruncatedSeries& gk,
                                      const ClassParams& params);

// The transfer ratio H(z) = z^{(k-1)p+1} f'(z) / (symmetrized g)(z), a
// series with H(0) = p. Every membership-flavored scan evaluates this one
// series so that equivalent formulations see identical values.
TruncatedSeries transfer_ratio(const TruncatedSeries& f,
                               const TruncatedSeries& g,
                               const ClassParams& params);

// Checks Re(z g'(z)/g(z)) > order over the grid for a normalized p-valent g.
// Throws evaluation_error when g vanishes at a grid point.
MembershipReport starlike_report(const TruncatedSeries& g, double order,
                                 int valence, const SamplingPolicy& policy);

// Full membership scan of the pair (f, g): starlikeness precondition on g,
// real-part margin min Re H - gamma, and the modulus-form cross-check.
ClassReport membership_report(const TruncatedSeries& f,
                              const TruncatedSeries& g,
                              const ClassParams& params,
                              const SamplingPolicy& policy);

// Recovers the bounded function w = (H - p)/(H + p - 2 gamma) vanishing at
// the origin. Membership is equivalent to max |w| < 1 on the grid.
SchwarzWitness recover_schwarz(const TruncatedSeries& f,
                               const TruncatedSeries& g,
                               const ClassParams& params,
                               const SamplingPolicy& policy);

// Builds H = (p - (p - 2 gamma) z phi(z)) / (1 + z phi(z)) from a factor phi
// bounded by beta in the closed disk (checked on the unit circle).
TruncatedSeries ratio_from_factor(const TruncatedSeries& phi, double beta,
                                  const ClassParams& params);

// Inverts ratio_from_factor: recovers phi = h/z from
// h = (p - H)/((p - 2 gamma) + H) and reports its sampled bound.
SchwarzWitness factor_from_ratio(const TruncatedSeries& H,
                                 const ClassParams& params);

// Largest grid deviation between z G'(z)/G(z) for the normalized symmetrized
// product and the sum of the rotated log-derivatives of g minus (k-1)p.
// The two sides agree coefficient-wise, so the residual measures arithmetic
// consistency of the construction pipeline.
double logderiv_residual(const TruncatedSeries& g, const ClassParams& params,
                         const SamplingPolicy& policy);

// Whether the image of the unit disk under (1+A1 z)/(1+B1 z) is contained in
// the image under (1+A2 z)/(1+B2 z), given -1 <= B2 <= B1 < A1 <= A2 <= 1.
// B = -1 degenerates to the half-plane Re w > (1-A)/2.
bool mobius_containment(double A1, double B1, double A2, double B2);

// For a series with value 1 at the origin: tests positivity of the real part
// over the grid, and independently whether any excluded value
// (zeta-1)/(zeta+1) is attained inside the outermost sampled circle, by
// winding numbers of the circle image (plus a near-hit guard). The two
// verdicts agree exactly when the criterion is confirmed on the instance.
HalfplaneCheck halfplane_criterion(const TruncatedSeries& pfun,
                                   const SamplingPolicy& policy,
                                   int zeta_samples);

// Equispaced points on the unit circle, skipping -1 where the Mobius map
// (zeta-1)/(zeta+1) has its pole.
std::vector<Complex> unimodular_samples(int count);

// Winding number of the closed polyline around the point s; hits within tol
// of s are reported through the bool.
struct WindingResult {
  int turns = 0;
  bool passes_through = false;
};
WindingResult winding_number(std::span<const Complex> closed_curve, Complex s,
                             double tol);

}  // namespace gft
