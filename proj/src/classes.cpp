#include "gft/classes.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace gft {

namespace {

constexpr double kVanishTol = 1e-12;

// Rotation e^{-2 pi i nu p / k} g(e^{2 pi i nu / k} z) applied directly on
// coefficients: the absolute degree p + j picks up the phase
// 2 pi ((nu j) mod k) / k. Reducing the exponent modulo k before forming the
// phase keeps each factor exactly unimodular for large j.
TruncatedSeries rotated_copy(const TruncatedSeries& g, int nu, int symmetry) {
  const double step = 2.0 * std::numbers::pi / symmetry;
  std::vector<Complex> out(g.coeffs().begin(), g.coeffs().end());
  for (std::size_t j = 0; j < out.size(); ++j) {
    const long long e = (static_cast<long long>(nu) * j) % symmetry;
    out[j] *= std::polar(1.0, step * static_cast<double>(e));
  }
  return TruncatedSeries(g.lead(), std::move(out));
}

void require_normalized(const TruncatedSeries& g, int valence,
                        const char* role) {
  if (!g.is_normalized(valence)) {
    std::ostringstream msg;
    msg << role << " must be normalized with leading term z^" << valence;
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

ClassParams ClassParams::make(int valence, int symmetry, double order) {
  if (valence < 1) throw std::invalid_argument("valence must be at least 1");
  if (symmetry < 1) throw std::invalid_argument("symmetry must be at least 1");
  if (!(order >= 0.0) || !(order < valence)) {
    throw std::invalid_argument("order must satisfy 0 <= order < valence");
  }
  ClassParams params;
  params.valence = valence;
  params.symmetry = symmetry;
  params.order = order;
  params.unit_root = std::polar(1.0, 2.0 * std::numbers::pi / symmetry);
  return params;
}

TruncatedSeries symmetrize(const TruncatedSeries& g,
                           const ClassParams& params) {
  require_normalized(g, params.valence, "comparison function");
  TruncatedSeries product = g;
  for (int nu = 1; nu < params.symmetry; ++nu) {
    product = multiply(product, rotated_copy(g, nu, params.symmetry));
  }
  return product;
}

TruncatedSeries normalize_symmetrized(const TruncatedSeries& gk,
                                      const ClassParams& params) {
  const int shift = (params.symmetry - 1) * params.valence;
  if (gk.lead() != params.symmetry * params.valence) {
    throw std::invalid_argument(
        "symmetrized product has unexpected leading exponent");
  }
  return downshift(gk, shift);
}

TruncatedSeries transfer_ratio(const TruncatedSeries& f,
                               const TruncatedSeries& g,
                               const ClassParams& params) {
  require_normalized(f, params.valence, "candidate function");
  const TruncatedSeries gk = symmetrize(g, params);
  // z^{(k-1)p+1} f' / gk  =  (z f') / Gk with Gk = gk / z^{(k-1)p}; dividing
  // the raw series and stripping the quotient's zero leading block yields a
  // series with constant term p.
  const TruncatedSeries zfprime = downshift(differentiate(f), -1);
  const TruncatedSeries quotient = divide(zfprime, gk);
  return downshift(quotient, quotient.lead());
}

MembershipReport starlike_report(const TruncatedSeries& g, double order,
                                 int valence, const SamplingPolicy& policy) {
  require_normalized(g, valence, "comparison function");
  policy.validate();
  const TruncatedSeries ratio = log_derivative_ratio(g);
  const std::vector<Complex> grid = make_grid(policy);

  MembershipReport report;
  report.min_margin = std::numeric_limits<double>::infinity();
  for (const Complex& z : grid) {
    const Complex gz = evaluate(g, z);
    if (std::abs(gz) <= kVanishTol) {
      throw evaluation_error(z, "comparison function vanishes");
    }
    const double margin = evaluate(ratio, z).real() - order;
    ++report.checked_points;
    if (margin < report.min_margin) {
      report.min_margin = margin;
      report.witness = z;
    }
  }
  report.holds = report.min_margin > -policy.margin_tol;
  return report;
}

ClassReport membership_report(const TruncatedSeries& f,
                              const TruncatedSeries& g,
                              const ClassParams& params,
                              const SamplingPolicy& policy) {
  policy.validate();
  ClassReport report;
  report.starlike =
      starlike_report(g, params.starlike_order(), params.valence, policy);

  const double p = params.valence;
  const double gamma = params.order;
  const TruncatedSeries ratio = transfer_ratio(f, g, params);
  const std::vector<Complex> grid = make_grid(policy);

  report.real_part.min_margin = std::numeric_limits<double>::infinity();
  report.min_modulus_margin = std::numeric_limits<double>::infinity();
  for (const Complex& z : grid) {
    const Complex h = evaluate(ratio, z);
    const double margin = h.real() - gamma;
    ++report.real_part.checked_points;
    if (margin < report.real_part.min_margin) {
      report.real_part.min_margin = margin;
      report.real_part.witness = z;
    }
    // Same point, same H: the modulus form |H + p - 2 gamma| - |H - p| must
    // give the identical verdict, since the difference of squares equals
    // 4 (p - gamma)(Re H - gamma).
    const double modulus_margin =
        std::abs(h + Complex(p - 2.0 * gamma, 0.0)) -
        std::abs(h - Complex(p, 0.0));
    if (modulus_margin < report.min_modulus_margin) {
      report.min_modulus_margin = modulus_margin;
    }
    const bool real_side = margin > -policy.margin_tol;
    const bool modulus_side = modulus_margin > -policy.margin_tol;
    if (real_side != modulus_side) ++report.modulus_disagreements;
  }
  report.real_part.holds =
      report.real_part.min_margin > -policy.margin_tol;
  report.holds = report.starlike.holds && report.real_part.holds;
  return report;
}

SchwarzWitness recover_schwarz(const TruncatedSeries& f,
                               const TruncatedSeries& g,
                               const ClassParams& params,
                               const SamplingPolicy& policy) {
  policy.validate();
  const double p = params.valence;
  const double gamma = params.order;
  const TruncatedSeries ratio = transfer_ratio(f, g, params);

  const TruncatedSeries numer = add_scalar(ratio, -p);
  const TruncatedSeries denom = add_scalar(ratio, p - 2.0 * gamma);
  TruncatedSeries w = divide(numer, denom);

  // H(0) = p forces w(0) = 0; anything else means the pair is inconsistent
  // with the normalization, not merely a non-member.
  const Complex w0 = w.coeff_at_degree(0);
  if (std::abs(w0) > 1e-10) {
    throw std::domain_error(
        "transfer ratio does not equal the valence at the origin");
  }
  if (w.lead() == 0) {
    std::vector<Complex> tail(w.coeffs().begin() + 1, w.coeffs().end());
    w = TruncatedSeries(1, std::move(tail));
  }

  const bool vanishes = w.lead() >= 1;
  const std::vector<Complex> grid = make_grid(policy);
  const ScanExtreme peak =
      grid_max_modulus([&](Complex z) { return evaluate(w, z); }, grid);
  return SchwarzWitness{std::move(w), peak.value, peak.witness, vanishes};
}

TruncatedSeries ratio_from_factor(const TruncatedSeries& phi, double beta,
                                  const ClassParams& params) {
  if (!(beta >= 0.0) || !(beta <= 1.0)) {
    throw std::invalid_argument("factor bound must lie in [0, 1]");
  }
  if (phi.lead() != 0) {
    throw std::invalid_argument("factor must have a constant term");
  }
  // The bound |phi| <= beta must hold on the closed disk; by the maximum
  // principle it suffices to check the unit circle.
  constexpr int kCircleSamples = 720;
  double max_mod = 0.0;
  for (int j = 0; j < kCircleSamples; ++j) {
    const Complex z =
        std::polar(1.0, 2.0 * std::numbers::pi * j / kCircleSamples);
    max_mod = std::max(max_mod, std::abs(evaluate(phi, z)));
  }
  if (max_mod > beta + 1e-9) {
    throw std::invalid_argument("factor exceeds its stated bound");
  }

  const double p = params.valence;
  const double gamma = params.order;
  const TruncatedSeries zphi = downshift(phi, -1);
  const TruncatedSeries numer =
      add_scalar(scale(zphi, -(p - 2.0 * gamma)), p);
  const TruncatedSeries denom = add_scalar(zphi, 1.0);
  return divide(numer, denom);
}

SchwarzWitness factor_from_ratio(const TruncatedSeries& H,
                                 const ClassParams& params) {
  const double p = params.valence;
  const double gamma = params.order;
  if (std::abs(H.coeff_at_degree(0) - Complex(p, 0.0)) > 1e-10) {
    throw std::invalid_argument("ratio must equal the valence at the origin");
  }
  const TruncatedSeries numer = scale(add_scalar(H, -p), -1.0);
  const TruncatedSeries denom = add_scalar(H, p - 2.0 * gamma);
  TruncatedSeries h = divide(numer, denom);
  if (h.lead() == 0) {
    std::vector<Complex> tail(h.coeffs().begin() + 1, h.coeffs().end());
    h = TruncatedSeries(1, std::move(tail));
  }
  const TruncatedSeries phi = downshift(h, 1);

  const SamplingPolicy policy = SamplingPolicy::defaults();
  const std::vector<Complex> grid = make_grid(policy);
  const ScanExtreme peak =
      grid_max_modulus([&](Complex z) { return evaluate(phi, z); }, grid);
  return SchwarzWitness{phi, peak.value, peak.witness, true};
}

double logderiv_residual(const TruncatedSeries& g, const ClassParams& params,
                         const SamplingPolicy& policy) {
  policy.validate();
  const TruncatedSeries gk = symmetrize(g, params);
  const TruncatedSeries big = normalize_symmetrized(gk, params);
  const TruncatedSeries lhs = log_derivative_ratio(big);

  std::vector<TruncatedSeries> rotated_ratios;
  rotated_ratios.reserve(params.symmetry);
  for (int nu = 0; nu < params.symmetry; ++nu) {
    rotated_ratios.push_back(
        log_derivative_ratio(rotated_copy(g, nu, params.symmetry)));
  }
  const double offset =
      static_cast<double>((params.symmetry - 1) * params.valence);

  const std::vector<Complex> grid = make_grid(policy);
  double worst = 0.0;
  for (const Complex& z : grid) {
    Complex sum{0.0, 0.0};
    for (const TruncatedSeries& r : rotated_ratios) sum += evaluate(r, z);
    const Complex residual = evaluate(lhs, z) - (sum - offset);
    worst = std::max(worst, std::abs(residual));
  }
  return worst;
}

bool mobius_containment(double A1, double B1, double A2, double B2) {
  if (!(-1.0 <= B2 && B2 <= B1 && B1 < A1 && A1 <= A2 && A2 <= 1.0)) {
    throw std::invalid_argument(
        "coefficients must satisfy -1 <= B2 <= B1 < A1 <= A2 <= 1");
  }

  const auto center = [](double A, double B) {
    return (1.0 - A * B) / (1.0 - B * B);
  };
  const auto radius = [](double A, double B) {
    return (A - B) / (1.0 - B * B);
  };

  if (B2 == -1.0) {
    // Outer image is the half-plane Re w > (1 - A2)/2; the inner disk (or
    // half-plane, when B1 = -1 as well) is contained iff its leftmost point
    // is at least that.
    const double edge = (1.0 - A2) / 2.0;
    if (B1 == -1.0) return (1.0 - A1) / 2.0 >= edge - 1e-12;
    return center(A1, B1) - radius(A1, B1) >= edge - 1e-12;
  }
  const double c1 = center(A1, B1);
  const double c2 = center(A2, B2);
  const double r1 = radius(A1, B1);
  const double r2 = radius(A2, B2);
  return std::abs(c1 - c2) <= r2 - r1 + 1e-12;
}

std::vector<Complex> unimodular_samples(int count) {
  if (count < 1) throw std::invalid_argument("need at least one sample");
  std::vector<Complex> samples;
  samples.reserve(count);
  for (int j = 0; j < count; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / count;
    const Complex zeta = std::polar(1.0, theta);
    if (std::abs(zeta + Complex(1.0, 0.0)) < 1e-9) continue;
    samples.push_back(zeta);
  }
  return samples;
}

WindingResult winding_number(std::span<const Complex> closed_curve, Complex s,
                             double tol) {
  WindingResult result;
  if (closed_curve.size() < 3) {
    throw std::invalid_argument("curve needs at least three vertices");
  }
  double total = 0.0;
  const std::size_t n = closed_curve.size();
  for (std::size_t j = 0; j < n; ++j) {
    const Complex a = closed_curve[j] - s;
    const Complex b = closed_curve[(j + 1) % n] - s;
    if (std::abs(a) <= tol) {
      result.passes_through = true;
      return result;
    }
    // Angle swept from a to b, always in (-pi, pi]: the sampled curve must
    // be dense enough that no edge subtends half a turn around s.
    total += std::arg(b / a);
  }
  result.turns = static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
  return result;
}

HalfplaneCheck halfplane_criterion(const TruncatedSeries& pfun,
                                   const SamplingPolicy& policy,
                                   int zeta_samples) {
  policy.validate();
  if (std::abs(pfun.coeff_at_degree(0) - Complex(1.0, 0.0)) > 1e-10) {
    throw std::invalid_argument("function must equal 1 at the origin");
  }

  const std::vector<Complex> grid = make_grid(policy);
  HalfplaneCheck check;
  const ScanExtreme low =
      grid_min_real([&](Complex z) { return evaluate(pfun, z); }, grid);
  check.min_real = low.value;
  check.positive = low.value > -policy.margin_tol;

  // Excluded-value scan on the outermost sampled circle. A value is attained
  // inside the circle exactly when the image curve winds around it, which a
  // pointwise distance test cannot see.
  const int m = policy.angles_per_circle;
  std::vector<Complex> image;
  image.reserve(m);
  for (int j = 0; j < m; ++j) {
    const Complex z =
        std::polar(policy.r_max, 2.0 * std::numbers::pi * j / m);
    image.push_back(evaluate(pfun, z));
  }

  for (const Complex& zeta : unimodular_samples(zeta_samples)) {
    const Complex excluded = (zeta - 1.0) / (zeta + 1.0);
    const WindingResult wind =
        winding_number(image, excluded, policy.margin_tol);
    if (wind.passes_through || wind.turns != 0) ++check.excluded_hits;
  }
  check.avoids_excluded = check.excluded_hits == 0;
  return check;
}

}  // namespace gft
