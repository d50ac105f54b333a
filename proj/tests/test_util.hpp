// Shared test helpers. Series equality always means coefficient-wise
// agreement by absolute degree, with 1e-10 as the default tolerance.
#pragma once

#include <complex>
#include <initializer_list>
#include <utility>
#include <vector>

#include "gft/series.hpp"

namespace gft_test {

inline gft::TruncatedSeries real_series(int lead,
                                        std::initializer_list<double> coeffs) {
  std::vector<gft::Complex> c;
  c.reserve(coeffs.size());
  for (double x : coeffs) c.emplace_back(x, 0.0);
  return gft::make_series(lead, std::move(c));
}

// z^p plus trailing zeros up to the given truncation degree.
inline gft::TruncatedSeries monomial(int lead, int degree) {
  std::vector<gft::Complex> c(static_cast<std::size_t>(degree) + 1,
                              gft::Complex(0.0, 0.0));
  c[0] = 1.0;
  return gft::make_series(lead, std::move(c));
}

// z/(1-z) truncated: all coefficients 1. Maps the disk onto the half-plane
// Re w > -1/2 and is starlike of order 1/2.
inline gft::TruncatedSeries half_plane_map(int degree) {
  std::vector<gft::Complex> c(static_cast<std::size_t>(degree) + 1,
                              gft::Complex(1.0, 0.0));
  return gft::make_series(1, std::move(c));
}

// The odd-harmonic primitive z + z^3/3 + z^5/5 + ...: the classic member
// with transfer ratio identically equal to the valence.
inline gft::TruncatedSeries odd_log_primitive(int degree) {
  std::vector<gft::Complex> c(static_cast<std::size_t>(degree) + 1,
                              gft::Complex(0.0, 0.0));
  for (int j = 0; j <= degree; j += 2) c[j] = 1.0 / (1.0 + j);
  return gft::make_series(1, std::move(c));
}

}  // namespace gft_test
