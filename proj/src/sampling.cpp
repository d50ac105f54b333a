#include "gft/sampling.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace gft {

namespace {

std::string format_point(Complex z) {
  std::ostringstream os;
  os << "(" << z.real() << ", " << z.imag() << ")";
  return os.str();
}

Complex checked_eval(const DiskMap& q, Complex z) {
  Complex v;
  try {
    v = q(z);
  } catch (const evaluation_error&) {
    throw;
  } catch (const std::exception& e) {
    throw evaluation_error(z, e.what());
  }
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw evaluation_error(z, "non-finite value");
  }
  return v;
}

}  // namespace

evaluation_error::evaluation_error(Complex at_, const std::string& what_)
    : std::runtime_error("evaluation failed at z = " + format_point(at_) +
                         ": " + what_),
      at(at_) {}

SamplingPolicy SamplingPolicy::defaults() {
  SamplingPolicy p;
  p.radii = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95};
  p.angles_per_circle = 720;
  p.r_max = 0.95;
  p.margin_tol = 1e-9;
  return p;
}

void SamplingPolicy::validate() const {
  if (!(r_max > 0.0 && r_max < 1.0)) {
    throw std::invalid_argument("SamplingPolicy: r_max must lie in (0, 1)");
  }
  if (radii.empty()) {
    throw std::invalid_argument("SamplingPolicy: empty radius list");
  }
  for (double r : radii) {
    if (!(r > 0.0 && r <= r_max)) {
      throw std::invalid_argument(
          "SamplingPolicy: radii must lie in (0, r_max]");
    }
  }
  if (angles_per_circle < 4) {
    throw std::invalid_argument(
        "SamplingPolicy: need at least 4 angles per circle");
  }
  if (!(margin_tol > 0.0)) {
    throw std::invalid_argument("SamplingPolicy: margin_tol must be positive");
  }
}

std::vector<Complex> make_grid(const SamplingPolicy& policy) {
  policy.validate();
  std::vector<Complex> grid;
  grid.reserve(policy.radii.size() *
               static_cast<size_t>(policy.angles_per_circle));
  for (double r : policy.radii) {
    for (int j = 0; j < policy.angles_per_circle; ++j) {
      const double theta =
          2.0 * std::numbers::pi * j / policy.angles_per_circle;
      grid.push_back(std::polar(r, theta));
    }
  }
  return grid;
}

ScanExtreme grid_min_real(const DiskMap& q, std::span<const Complex> grid) {
  ScanExtreme best{std::numeric_limits<double>::infinity(), {0.0, 0.0}};
  for (Complex z : grid) {
    const double re = checked_eval(q, z).real();
    if (re < best.value) best = {re, z};
  }
  return best;
}

ScanExtreme grid_max_modulus(const DiskMap& q, std::span<const Complex> grid) {
  ScanExtreme best{-std::numeric_limits<double>::infinity(), {0.0, 0.0}};
  for (Complex z : grid) {
    const double mod = std::abs(checked_eval(q, z));
    if (mod > best.value) best = {mod, z};
  }
  return best;
}

double simpson_integrate(const std::function<double(double)>& h, double r,
                         int steps) {
  if (steps < 2 || steps % 2 != 0) {
    throw std::invalid_argument("simpson_integrate: steps must be even, >= 2");
  }
  if (!(r >= 0.0)) {
    throw std::invalid_argument("simpson_integrate: negative upper limit");
  }
  if (r == 0.0) return 0.0;
  const double dt = r / steps;
  double odd = 0.0;
  double even = 0.0;
  for (int i = 1; i < steps; ++i) {
    const double v = h(dt * i);
    if (!std::isfinite(v)) {
      throw std::domain_error("simpson_integrate: non-finite integrand");
    }
    if (i % 2 == 1) {
      odd += v;
    } else {
      even += v;
    }
  }
  const double ends = h(0.0) + h(r);
  if (!std::isfinite(ends)) {
    throw std::domain_error("simpson_integrate: non-finite integrand");
  }
  return dt / 3.0 * (ends + 4.0 * odd + 2.0 * even);
}

}  // namespace gft
