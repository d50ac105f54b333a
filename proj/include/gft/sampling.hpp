// Concentric-circle sampling of the unit disk and quadrature on [0, r].
#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gft/series.hpp"

namespace gft {

// Where and how finely disk scans sample, and how strict verdicts are.
struct SamplingPolicy {
  std::vector<double> radii;
  int angles_per_circle = 720;
  double r_max = 0.95;
  double margin_tol = 1e-9;

  static SamplingPolicy defaults();

  // Throws std::invalid_argument when any constraint fails: radii nonempty
  // and inside (0, r_max], r_max inside (0, 1), at least 4 angles, positive
  // tolerance.
  void validate() const;
};

// Outcome of a margin scan: the claim holds when the worst margin observed
// over the grid stays above -margin_tol, and witness is where it was worst.
struct MembershipReport {
  bool holds = false;
  double min_margin = 0.0;
  Complex witness{0.0, 0.0};
  long checked_points = 0;
};

// Evaluation failure at a specific grid point.
class evaluation_error : public std::runtime_error {
 public:
  evaluation_error(Complex at, const std::string& what);
  Complex at;
};

// Points r * exp(2 pi i j / M) for each radius r, angles in increasing order.
std::vector<Complex> make_grid(const SamplingPolicy& policy);

using DiskMap = std::function<Complex(Complex)>;

struct ScanExtreme {
  double value = 0.0;
  Complex witness{0.0, 0.0};
};

// Pointwise extrema of q over the grid. Non-finite values (or exceptions
// from q) surface as evaluation_error carrying the offending point.
ScanExtreme grid_min_real(const DiskMap& q, std::span<const Complex> grid);
ScanExtreme grid_max_modulus(const DiskMap& q, std::span<const Complex> grid);

// Composite Simpson rule for h on [0, r]; steps must be even and >= 2.
// Exact for polynomials of degree <= 3 up to rounding.
double simpson_integrate(const std::function<double(double)>& h, double r,
                         int steps);

}  // namespace gft
