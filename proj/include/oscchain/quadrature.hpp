#pragma once

#include <functional>
#include <vector>

namespace oscchain {

// Uniform trapezoid over one period [0, 2pi); endpoints coincide, so this is
// the n-point rectangle sum, spectrally accurate for smooth periodic
// integrands. Returns the integral (not the mean).
double periodic_trapezoid(const std::function<double(double)>& f, int n_points);

// Gauss-Legendre nodes/weights on [-1, 1], computed by Newton iteration on the
// Legendre recurrence; map_to rescales onto [a, b].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;

  static const GaussLegendre& order(int n);  // cached per order
  GaussLegendre mapped_to(double a, double b) const;
};

// Composite Simpson on [a, b] with an even number of intervals >= 2.
double simpson(const std::function<double(double)>& f, double a, double b, int intervals);

}  // namespace oscchain
