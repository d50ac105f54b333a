// Seeded producers of valid inputs: starlike comparison functions (extremal
// and randomized), bounded functions vanishing at the origin, and fully
// synthesized class members built by inverting the subordination step.
//
// All randomness flows through std::mt19937_64 with an explicit bits-to-
// double mapping, so a seed reproduces the same series on every platform.
#pragma once

#include <cstdint>

#include "gft/classes.hpp"
#include "gft/series.hpp"

namespace gft {

// Seed material for the bounded-function generator: the PRNG seed, the
// polynomial degree of the inner factor, and the modulus cap beta.
struct GeneratorSeed {
  std::uint64_t seed = 0;
  int degree = 4;
  double beta = 0.7;
};

// A synthesized member together with the pieces that built it.
struct MemberFixture {
  TruncatedSeries f;
  TruncatedSeries g;
  TruncatedSeries w;
};

// The extremal starlike function z^p (1-z)^{-2p/k}, whose log-derivative
// margin at the required order is exactly p(1-r)/(k(1+r)) on |z| = r.
TruncatedSeries extremal_starlike(const ClassParams& params, int degree);

// Random starlike comparison: z^p times a product of negative binomial
// factors (1 - x z^J)^{-c} whose weighted exponents stay within the
// starlikeness budget 2p/k. Factor roots are drawn with |x|^{1/J} between
// 0.3 and max_modulus, which caps the coefficient decay rate and hence the
// truncation tail at max_modulus^n.
TruncatedSeries random_starlike(const ClassParams& params, std::uint64_t seed,
                                int degree, double max_modulus = 0.85);

// Random bounded function w = z q(z) with w(0) = 0, rescaled so the sampled
// maximum of |w| on the unit circle is 0.99 beta. The safety factor covers
// the gap between the 720-point sampled maximum and the true maximum at
// these polynomial degrees.
TruncatedSeries random_schwarz(const GeneratorSeed& gen);

// Builds the member determined by (g, w): forms the transfer ratio
// (p + (p - 2 gamma) w)/(1 - w), multiplies by the symmetrized comparison,
// and integrates. The output passes the membership scan against the same g
// by construction. Preconditions: g starlike at the required order, w(0) = 0
// with sampled modulus below 1.
TruncatedSeries synthesize_member(const TruncatedSeries& g,
                                  const ClassParams& params,
                                  const TruncatedSeries& w, int degree);

// One-call fixture: seeded comparison, seeded bounded function, synthesized
// member. Same seed, same fixture.
MemberFixture make_member_fixture(const ClassParams& params,
                                  std::uint64_t seed, int degree,
                                  double beta = 0.6, int schwarz_degree = 4,
                                  double max_modulus = 0.85);

}  // namespace gft
