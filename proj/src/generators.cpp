#include "gft/generators.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

namespace gft {

namespace {

// Uniform draw in [0, 1) from the top 53 bits of the engine output. The
// standard distributions are implementation-defined; this mapping is not.
double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Coefficients of (1 - t)^{-exponent} through t^count, by the generalized
// binomial recurrence.
std::vector<double> binomial_coeffs(double exponent, int count) {
  std::vector<double> coeffs(count + 1);
  coeffs[0] = 1.0;
  for (int j = 1; j <= count; ++j) {
    coeffs[j] = coeffs[j - 1] * (exponent + j - 1) / j;
  }
  return coeffs;
}

// Lead-0 series of (1 - x z^step)^{-exponent} through the given degree.
TruncatedSeries binomial_factor(Complex x, int step, double exponent,
                                int degree) {
  std::vector<Complex> coeffs(degree + 1, Complex(0.0, 0.0));
  Complex power{1.0, 0.0};
  const std::vector<double> base = binomial_coeffs(exponent, degree / step);
  for (int j = 0; j * step <= degree; ++j) {
    coeffs[j * step] = base[j] * power;
    power *= x;
  }
  return TruncatedSeries(0, std::move(coeffs));
}

}  // namespace

TruncatedSeries extremal_starlike(const ClassParams& params, int degree) {
  if (degree < 1) throw std::invalid_argument("degree must be at least 1");
  const double exponent =
      2.0 * params.valence / static_cast<double>(params.symmetry);
  std::vector<double> base = binomial_coeffs(exponent, degree);
  std::vector<Complex> coeffs(base.begin(), base.end());
  return TruncatedSeries(params.valence, std::move(coeffs));
}

TruncatedSeries random_starlike(const ClassParams& params, std::uint64_t seed,
                                int degree, double max_modulus) {
  if (degree < 1) throw std::invalid_argument("degree must be at least 1");
  if (!(max_modulus > 0.3) || !(max_modulus < 1.0)) {
    throw std::invalid_argument("max_modulus must lie in (0.3, 1)");
  }
  std::mt19937_64 rng(seed);
  const double budget =
      2.0 * params.valence / static_cast<double>(params.symmetry);

  const int factors = 1 + static_cast<int>(rng() % 3);
  std::vector<double> shares(factors);
  double total = 0.0;
  for (double& s : shares) {
    s = 0.1 + unit_draw(rng);
    total += s;
  }
  // Spend between 85% and 100% of the starlikeness budget, split across the
  // factors; each factor's exponent c satisfies c * step = share.
  const double spend = budget * (0.85 + 0.15 * unit_draw(rng));

  std::vector<Complex> one(degree + 1, Complex(0.0, 0.0));
  one[0] = 1.0;
  TruncatedSeries product(0, std::move(one));
  for (int i = 0; i < factors; ++i) {
    const int step = 1 + static_cast<int>(rng() % 3);
    const double rate = 0.3 + (max_modulus - 0.3) * unit_draw(rng);
    const double angle = 2.0 * std::numbers::pi * unit_draw(rng);
    const Complex x = std::polar(std::pow(rate, step), angle);
    const double share = spend * shares[i] / total;
    const double exponent = share / step;
    product = multiply(product, binomial_factor(x, step, exponent, degree));
  }
  return downshift(product, -params.valence);
}

TruncatedSeries random_schwarz(const GeneratorSeed& gen) {
  if (gen.degree < 0) throw std::invalid_argument("degree must be >= 0");
  if (!(gen.beta >= 0.0 && gen.beta <= 1.0)) {
    throw std::invalid_argument("beta must lie in [0, 1]");
  }

  std::vector<Complex> coeffs(gen.degree + 1, Complex(0.0, 0.0));
  if (gen.beta > 0.0) {
    std::mt19937_64 rng(gen.seed);
    for (Complex& c : coeffs) {
      const double re = 2.0 * unit_draw(rng) - 1.0;
      const double im = 2.0 * unit_draw(rng) - 1.0;
      c = Complex(re, im);
    }

    constexpr int kCircleSamples = 720;
    const TruncatedSeries raw(0, std::vector<Complex>(coeffs));
    double max_mod = 0.0;
    for (int j = 0; j < kCircleSamples; ++j) {
      const Complex z =
          std::polar(1.0, 2.0 * std::numbers::pi * j / kCircleSamples);
      max_mod = std::max(max_mod, std::abs(evaluate(raw, z)));
    }
    if (max_mod > 0.0) {
      const double factor = 0.99 * gen.beta / max_mod;
      for (Complex& c : coeffs) c *= factor;
    }
  }
  return TruncatedSeries(1, std::move(coeffs));
}

TruncatedSeries synthesize_member(const TruncatedSeries& g,
                                  const ClassParams& params,
                                  const TruncatedSeries& w, int degree) {
  if (degree < 1) throw std::invalid_argument("degree must be at least 1");
  const SamplingPolicy policy = SamplingPolicy::defaults();
  const MembershipReport starlike = starlike_report(
      g, params.starlike_order(), params.valence, policy);
  if (!starlike.holds) {
    throw std::invalid_argument(
        "comparison function is not starlike at the required order");
  }
  if (w.lead() < 1) {
    throw std::invalid_argument("bounded function must vanish at the origin");
  }
  const std::vector<Complex> grid = make_grid(policy);
  const ScanExtreme peak =
      grid_max_modulus([&](Complex z) { return evaluate(w, z); }, grid);
  if (peak.value >= 1.0) {
    throw std::invalid_argument("bounded function reaches modulus 1");
  }

  const double p = params.valence;
  const double gamma = params.order;
  const TruncatedSeries wx = extend(w, degree);
  const TruncatedSeries numer = add_scalar(scale(wx, p - 2.0 * gamma), p);
  const TruncatedSeries denom = add_scalar(scale(wx, -1.0), 1.0);
  const TruncatedSeries ratio = divide(numer, denom);

  const TruncatedSeries gk = symmetrize(extend(g, degree), params);
  const TruncatedSeries fprime =
      downshift(multiply(gk, ratio),
                (params.symmetry - 1) * params.valence + 1);
  return integrate_primitive(fprime, params.valence);
}

MemberFixture make_member_fixture(const ClassParams& params,
                                  std::uint64_t seed, int degree, double beta,
                                  int schwarz_degree, double max_modulus) {
  TruncatedSeries g = random_starlike(params, seed, degree, max_modulus);
  GeneratorSeed ws;
  ws.seed = seed ^ 0x9e3779b97f4a7c15ULL;
  ws.degree = schwarz_degree;
  ws.beta = beta;
  TruncatedSeries w = random_schwarz(ws);
  TruncatedSeries f = synthesize_member(g, params, w, degree);
  return MemberFixture{std::move(f), std::move(g), std::move(w)};
}

}  // namespace gft
