#include "oscchain/measure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "oscchain/errors.hpp"
#include "oscchain/quadrature.hpp"

namespace oscchain {

double DensityPanel::density(double x) const {
  double acc = 0.0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double DensityPanel::mass() const {
  // Exact integral of the polynomial over [lo, hi].
  double acc = 0.0;
  double plo = lo, phi = hi;
  for (std::size_t d = 0; d < poly.size(); ++d) {
    acc += poly[d] * (phi - plo) / (d + 1.0);
    plo *= lo;
    phi *= hi;
  }
  return acc;
}

SpectralMeasure::SpectralMeasure(std::vector<Atom> atoms, std::vector<DensityPanel> panels)
    : atoms_(std::move(atoms)), panels_(std::move(panels)) {
  for (const Atom& a : atoms_) {
    if (a.frequency < 0.0) throw std::invalid_argument("SpectralMeasure: atom frequency must be >= 0");
    if (a.mass <= 0.0) throw std::invalid_argument("SpectralMeasure: atom mass must be positive");
    total_mass_ += (a.frequency > 0.0) ? 2.0 * a.mass : a.mass;
  }
  for (const DensityPanel& p : panels_) {
    if (!(0.0 <= p.lo && p.lo < p.hi)) throw std::invalid_argument("SpectralMeasure: bad panel interval");
    const double m = p.mass();
    if (m < 0.0) throw std::invalid_argument("SpectralMeasure: panel with negative mass");
    total_mass_ += 2.0 * m;
  }
}

std::vector<SpectralMeasure::Node> SpectralMeasure::quadrature_nodes(int gl_order) const {
  std::vector<Node> nodes;
  for (const Atom& a : atoms_) {
    nodes.push_back({a.frequency, a.frequency > 0.0 ? 2.0 * a.mass : a.mass});
  }
  for (const DensityPanel& p : panels_) {
    const GaussLegendre gl = GaussLegendre::order(gl_order).mapped_to(p.lo, p.hi);
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
      nodes.push_back({gl.nodes[i], 2.0 * gl.weights[i] * p.density(gl.nodes[i])});
    }
  }
  return nodes;
}

double force_covariance(const SpectralMeasure& measure, double s) {
  double value = 0.0;
  for (const auto& node : measure.quadrature_nodes()) value += node.weight * std::cos(node.x * s);
  return value;
}

namespace {

// Signed distance from |x| to [s1, s2]: positive outside, negative penetration inside.
double signed_distance(double x, double s1, double s2) {
  x = std::abs(x);
  if (x < s1) return s1 - x;
  if (x > s2) return x - s2;
  return -std::min(x - s1, s2 - x);
}

}  // namespace

GapReport check_gap(const SpectralMeasure& measure, const SpectralSet& set) {
  const double s1 = std::sqrt(set.e1);
  const double s2 = std::sqrt(set.e2);
  double margin = std::numeric_limits<double>::infinity();
  for (const Atom& a : measure.atoms()) {
    margin = std::min(margin, signed_distance(a.frequency, s1, s2));
  }
  for (const DensityPanel& p : measure.panels()) {
    margin = std::min(margin, signed_distance(p.lo, s1, s2));
    margin = std::min(margin, signed_distance(p.hi, s1, s2));
    if (p.lo <= s2 && p.hi >= s1) {
      // Panel overlaps the forbidden band: deepest interior penetration.
      const double deepest = std::clamp(0.5 * (s1 + s2), std::max(p.lo, s1), std::min(p.hi, s2));
      margin = std::min(margin, signed_distance(deepest, s1, s2));
    }
  }
  GapReport report;
  report.margin = margin;
  report.pass = margin > 0.0;
  return report;
}

}  // namespace oscchain
