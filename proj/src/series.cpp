#include "gft/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gft {

namespace {

// Neumaier-compensated accumulator. Deconvolution against series with large
// coefficients (binomial growth) cancels heavily; plain summation would leak
// rounding error of the order of the largest partial term into small results.
struct Accum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }

  double value() const { return sum + comp; }
};

struct ComplexAccum {
  Accum re;
  Accum im;

  void add(Complex x) {
    re.add(x.real());
    im.add(x.imag());
  }

  Complex value() const { return {re.value(), im.value()}; }
};

// Integer power by repeated squaring; negative exponents via the reciprocal.
Complex ipow(Complex z, int n) {
  if (n < 0) {
    if (z == Complex(0.0, 0.0)) {
      throw std::domain_error("ipow: zero base with negative exponent");
    }
    return Complex(1.0, 0.0) / ipow(z, -n);
  }
  Complex acc(1.0, 0.0);
  Complex base = z;
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

}  // namespace

TruncatedSeries::TruncatedSeries(int lead, std::vector<Complex> coeffs)
    : lead_(lead), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("TruncatedSeries: empty coefficient list");
  }
}

Complex TruncatedSeries::coeff(int j) const {
  if (j < 0 || j > degree()) return {0.0, 0.0};
  return coeffs_[static_cast<size_t>(j)];
}

bool TruncatedSeries::is_normalized(int valence, double tol) const {
  return lead_ == valence && std::abs(coeffs_[0] - Complex(1.0, 0.0)) <= tol;
}

TruncatedSeries make_series(int lead, std::vector<Complex> coeffs) {
  if (lead < 0) {
    throw std::invalid_argument("make_series: negative lead");
  }
  return TruncatedSeries(lead, std::move(coeffs));
}

TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.degree(), b.degree());
  std::vector<Complex> out(static_cast<size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    ComplexAccum acc;
    for (int i = 0; i <= m; ++i) {
      acc.add(a.coeffs()[static_cast<size_t>(i)] *
              b.coeffs()[static_cast<size_t>(m - i)]);
    }
    out[static_cast<size_t>(m)] = acc.value();
  }
  return TruncatedSeries(a.lead() + b.lead(), std::move(out));
}

TruncatedSeries divide(const TruncatedSeries& a, const TruncatedSeries& b) {
  const Complex b0 = b.coeffs()[0];
  if (b0 == Complex(0.0, 0.0)) {
    throw std::domain_error("divide: zero leading coefficient of divisor");
  }
  const int n = std::min(a.degree(), b.degree());
  std::vector<Complex> q(static_cast<size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    ComplexAccum acc;
    acc.add(a.coeff(m));
    for (int i = 0; i < m; ++i) {
      acc.add(-(q[static_cast<size_t>(i)] *
                b.coeffs()[static_cast<size_t>(m - i)]));
    }
    q[static_cast<size_t>(m)] = acc.value() / b0;
  }
  return TruncatedSeries(a.lead() - b.lead(), std::move(q));
}

TruncatedSeries differentiate(const TruncatedSeries& f) {
  const int lead = f.lead();
  if (lead == 0) {
    // The constant term dies; one coefficient of knowledge is lost with it.
    if (f.degree() == 0) return TruncatedSeries(0, {Complex(0.0, 0.0)});
    std::vector<Complex> out(static_cast<size_t>(f.degree()));
    for (int j = 1; j <= f.degree(); ++j) {
      out[static_cast<size_t>(j - 1)] =
          static_cast<double>(j) * f.coeffs()[static_cast<size_t>(j)];
    }
    return TruncatedSeries(0, std::move(out));
  }
  std::vector<Complex> out(static_cast<size_t>(f.degree()) + 1);
  for (int j = 0; j <= f.degree(); ++j) {
    out[static_cast<size_t>(j)] =
        static_cast<double>(lead + j) * f.coeffs()[static_cast<size_t>(j)];
  }
  return TruncatedSeries(lead - 1, std::move(out));
}

TruncatedSeries integrate_primitive(const TruncatedSeries& fprime,
                                    int valence) {
  if (valence < 1) {
    throw std::invalid_argument("integrate_primitive: valence must be >= 1");
  }
  if (fprime.lead() != valence - 1 ||
      std::abs(fprime.coeffs()[0] - Complex(static_cast<double>(valence))) >
          1e-10) {
    throw std::invalid_argument(
        "integrate_primitive: leading data inconsistent with a normalized "
        "primitive");
  }
  std::vector<Complex> out(static_cast<size_t>(fprime.degree()) + 1);
  for (int j = 0; j <= fprime.degree(); ++j) {
    out[static_cast<size_t>(j)] =
        fprime.coeffs()[static_cast<size_t>(j)] /
        static_cast<double>(valence + j);
  }
  return TruncatedSeries(valence, std::move(out));
}

TruncatedSeries rotate(const TruncatedSeries& f, double angle) {
  std::vector<Complex> out(static_cast<size_t>(f.degree()) + 1);
  for (int j = 0; j <= f.degree(); ++j) {
    out[static_cast<size_t>(j)] =
        f.coeffs()[static_cast<size_t>(j)] *
        std::polar(1.0, angle * static_cast<double>(f.lead() + j));
  }
  return TruncatedSeries(f.lead(), std::move(out));
}

TruncatedSeries downshift(const TruncatedSeries& f, int m) {
  if (f.lead() < m) {
    throw std::domain_error("downshift: would create a pole");
  }
  return TruncatedSeries(f.lead() - m, f.coeffs());
}

TruncatedSeries scale(const TruncatedSeries& f, Complex factor) {
  std::vector<Complex> out(f.coeffs());
  for (auto& c : out) c *= factor;
  return TruncatedSeries(f.lead(), std::move(out));
}

TruncatedSeries add_scalar(const TruncatedSeries& f, Complex value) {
  if (f.lead() > 0) {
    // Degrees below the lead are known zeros, so materializing them is exact.
    std::vector<Complex> out(static_cast<size_t>(f.lead() + f.degree()) + 1,
                             Complex(0.0, 0.0));
    out[0] = value;
    std::copy(f.coeffs().begin(), f.coeffs().end(),
              out.begin() + f.lead());
    return TruncatedSeries(0, std::move(out));
  }
  const int idx = -f.lead();
  if (idx > f.degree()) {
    throw std::invalid_argument("add_scalar: constant term beyond truncation");
  }
  std::vector<Complex> out(f.coeffs());
  out[static_cast<size_t>(idx)] += value;
  return TruncatedSeries(f.lead(), std::move(out));
}

TruncatedSeries extend(const TruncatedSeries& f, int new_degree) {
  if (new_degree < 0) {
    throw std::invalid_argument("extend: negative degree");
  }
  std::vector<Complex> out(f.coeffs());
  out.resize(static_cast<size_t>(new_degree) + 1, Complex(0.0, 0.0));
  return TruncatedSeries(f.lead(), std::move(out));
}

Complex evaluate(const TruncatedSeries& f, Complex z) {
  Complex acc(0.0, 0.0);
  for (int j = f.degree(); j >= 0; --j) {
    acc = acc * z + f.coeffs()[static_cast<size_t>(j)];
  }
  return acc * ipow(z, f.lead());
}

std::vector<Complex> evaluate_on(const TruncatedSeries& f,
                                 std::span<const Complex> points) {
  std::vector<Complex> out;
  out.reserve(points.size());
  for (Complex z : points) out.push_back(evaluate(f, z));
  return out;
}

TruncatedSeries log_derivative_ratio(const TruncatedSeries& f) {
  return divide(downshift(differentiate(f), -1), f);
}

double coeff_distance(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int lo = std::min(a.lead(), b.lead());
  const int hi = std::max(a.lead() + a.degree(), b.lead() + b.degree());
  double worst = 0.0;
  for (int d = lo; d <= hi; ++d) {
    worst = std::max(worst, std::abs(a.coeff_at_degree(d) -
                                     b.coeff_at_degree(d)));
  }
  return worst;
}

}  // namespace gft
