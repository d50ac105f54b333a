// Truncated complex power series: arithmetic, calculus, evaluation.
#pragma once

#include <complex>
#include <span>
#include <vector>

namespace gft {

using Complex = std::complex<double>;

// Number of coefficients carried beyond the leading term by default.
inline constexpr int kDefaultDegree = 64;

// z^lead * (c0 + c1 z + ... + cN z^N).
//
// A value holds the first N+1 coefficients of an analytic function above a
// monomial factor. Coefficients beyond index N are unknown rather than zero,
// so binary operations truncate to the shorter operand's reach; extend()
// zero-pads a series that is known to be an exact polynomial.
//
// Values are immutable after construction and safe to share across threads.
class TruncatedSeries {
 public:
  // Accepts any lead so that quotients may carry a negative exponent
  // internally; make_series() is the checked entry point for callers.
  TruncatedSeries(int lead, std::vector<Complex> coeffs);

  int lead() const { return lead_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }

  // Coefficient of z^(lead+j); zero outside the stored range.
  Complex coeff(int j) const;
  // Coefficient of z^d, d counted as an absolute degree.
  Complex coeff_at_degree(int d) const { return coeff(d - lead_); }

  // Leading exponent equals the valence and the leading coefficient is 1.
  bool is_normalized(int valence, double tol = 1e-10) const;

 private:
  int lead_;
  std::vector<Complex> coeffs_;
};

// Checked constructor: rejects a negative lead or an empty coefficient list.
TruncatedSeries make_series(int lead, std::vector<Complex> coeffs);

// Convolution product, truncated to min(a.degree(), b.degree()).
TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b);

// Quotient by forward substitution, truncated like multiply(). The divisor
// needs a nonzero leading coefficient; the result's lead may go negative.
TruncatedSeries divide(const TruncatedSeries& a, const TruncatedSeries& b);

// Term-wise derivative; the degree of the polynomial part drops by one.
TruncatedSeries differentiate(const TruncatedSeries& f);

// Primitive of a derivative whose leading term is valence * z^(valence-1),
// normalized so the constant of integration is zero.
TruncatedSeries integrate_primitive(const TruncatedSeries& fprime, int valence);

// f(e^{i angle} z): multiplies coefficient j by e^{i angle (lead+j)}.
TruncatedSeries rotate(const TruncatedSeries& f, double angle);

// f(z) / z^m. m may be negative (multiplication by a power of z); m larger
// than the lead would create a pole and is refused.
TruncatedSeries downshift(const TruncatedSeries& f, int m);

// factor * f. A separate operation because multiplying by a constant series
// of degree zero would truncate everything after the leading term.
TruncatedSeries scale(const TruncatedSeries& f, Complex factor);

// f + value, exact: a positive lead is materialized as explicit zeros.
TruncatedSeries add_scalar(const TruncatedSeries& f, Complex value);

// Re-truncate to new_degree, zero-padding on the right. Padding asserts the
// series is an exact polynomial; use only when that is known.
TruncatedSeries extend(const TruncatedSeries& f, int new_degree);

// Horner evaluation of the polynomial part times z^lead.
Complex evaluate(const TruncatedSeries& f, Complex z);
std::vector<Complex> evaluate_on(const TruncatedSeries& f,
                                 std::span<const Complex> points);

// z f'(z) / f(z); requires a nonzero leading coefficient.
TruncatedSeries log_derivative_ratio(const TruncatedSeries& f);

// Largest coefficient gap between a and b in absolute degree, treating
// entries outside either stored range as zero.
double coeff_distance(const TruncatedSeries& a, const TruncatedSeries& b);

}  // namespace gft
