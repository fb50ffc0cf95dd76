#include "oscchain/force.hpp"

#include <cmath>
#include <numbers>

#include "oscchain/errors.hpp"
#include "oscchain/rng.hpp"

namespace oscchain {

double ForceRealization::evaluate(double t) const {
  double value = 0.0;
  for (const ForceTerm& term : terms_) {
    value += term.cos_amp * std::cos(term.frequency * t) + term.sin_amp * std::sin(term.frequency * t);
  }
  return value;
}

namespace {

// Cumulative one-sided mass of the panel, exact polynomial antiderivative.
double cumulative_mass(const DensityPanel& panel, double x) {
  double acc = 0.0;
  double plo = panel.lo, px = x;
  for (std::size_t d = 0; d < panel.poly.size(); ++d) {
    acc += panel.poly[d] * (px - plo) / (d + 1.0);
    plo *= panel.lo;
    px *= x;
  }
  return acc;
}

// Equal-mass midpoint frequencies: node j sits at the mass-median of the j-th
// of n equal-mass sub-panels.
std::vector<double> equal_mass_nodes(const DensityPanel& panel, int n) {
  const double total = panel.mass();
  std::vector<double> nodes;
  nodes.reserve(n);
  for (int j = 0; j < n; ++j) {
    const double target = (j + 0.5) * total / n;
    double lo = panel.lo, hi = panel.hi;
    for (int iter = 0; iter < 200 && hi - lo > 1e-14 * (panel.hi - panel.lo); ++iter) {
      const double mid = 0.5 * (lo + hi);
      (cumulative_mass(panel, mid) < target ? lo : hi) = mid;
    }
    nodes.push_back(0.5 * (lo + hi));
  }
  return nodes;
}

ForceTerm draw_term(CounterRng& rng, double frequency, double pair_mass, SynthesisMode mode) {
  // pair_mass = w on each of +-frequency, so the term variance is 2w;
  // a frequency-0 atom carries mass w once and has no sine component.
  const double variance = (frequency > 0.0) ? 2.0 * pair_mass : pair_mass;
  ForceTerm term;
  term.frequency = frequency;
  if (mode == SynthesisMode::gaussian_amplitudes) {
    term.cos_amp = std::sqrt(variance) * rng.next_gaussian();
    term.sin_amp = (frequency > 0.0) ? std::sqrt(variance) * rng.next_gaussian() : 0.0;
  } else {
    const double phi = 2.0 * std::numbers::pi * rng.next_unit();
    const double amp = std::sqrt(2.0 * variance);
    term.cos_amp = amp * std::cos(phi);
    term.sin_amp = (frequency > 0.0) ? amp * std::sin(phi) : 0.0;
  }
  return term;
}

}  // namespace

ForceRealization synthesize(const SpectralMeasure& measure, std::uint64_t seed, SynthesisMode mode,
                            int n_density_terms, std::uint64_t stream) {
  if (measure.total_mass() <= 0.0) throw EmptyMeasure("synthesize: spectral measure has zero total mass");
  CounterRng rng(seed, stream);
  ForceRealization realization;
  realization.seed_ = seed;
  realization.stream_ = stream;
  realization.mode_ = mode;
  for (const Atom& atom : measure.atoms()) {
    realization.terms_.push_back(draw_term(rng, atom.frequency, atom.mass, mode));
  }
  for (const DensityPanel& panel : measure.panels()) {
    const double node_mass = panel.mass() / n_density_terms;
    for (double x : equal_mass_nodes(panel, n_density_terms)) {
      realization.terms_.push_back(draw_term(rng, x, node_mass, mode));
    }
  }
  return realization;
}

}  // namespace oscchain
