#pragma once

#include <vector>

#include "oscchain/kernel.hpp"

namespace oscchain {

// One symmetric atom pair: mass `mass` at +frequency and at -frequency.
// frequency == 0 is a single atom of mass `mass` at the origin.
struct Atom {
  double frequency = 0.0;  // >= 0
  double mass = 0.0;       // > 0
};

// Smooth density panel on [lo, hi] (0 <= lo < hi), mirrored onto [-hi, -lo].
// The density is a polynomial in x evaluated by Horner; it must be
// nonnegative on the panel.
struct DensityPanel {
  double lo = 0.0;
  double hi = 0.0;
  std::vector<double> poly;  // c0 + c1 x + c2 x^2 + ...

  double density(double x) const;
  double mass() const;  // one-sided integral of the density over [lo, hi]
};

// Even spectral measure of the driving force, represented on the positive
// half-line; symmetry is baked into every weight.
class SpectralMeasure {
 public:
  SpectralMeasure(std::vector<Atom> atoms, std::vector<DensityPanel> panels = {});

  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<DensityPanel>& panels() const { return panels_; }
  double total_mass() const { return total_mass_; }  // = B(0) = sigma^2

  // Positive-half quadrature nodes with folded-pair weights: an even integrand
  // F satisfies  integral F dmu  =  sum_i weight_i F(x_i)  (exact on atoms,
  // Gauss-Legendre of the given order per panel).
  struct Node {
    double x = 0.0;
    double weight = 0.0;
  };
  std::vector<Node> quadrature_nodes(int gl_order = 64) const;

 private:
  std::vector<Atom> atoms_;
  std::vector<DensityPanel> panels_;
  double total_mass_ = 0.0;
};

// Covariance of the force process: B(s) = sum 2 w cos(x s) + panel terms.
// Even in s, |B(s)| <= B(0).
double force_covariance(const SpectralMeasure& measure, double s);

struct GapReport {
  double margin = 0.0;  // signed distance from supp(mu) to +-[sqrt(e1), sqrt(e2)]; negative inside
  bool pass = false;    // margin > 0
};

GapReport check_gap(const SpectralMeasure& measure, const SpectralSet& set);

}  // namespace oscchain
