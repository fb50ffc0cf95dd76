#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "oscchain/measure.hpp"
#include "oscchain/parallel.hpp"
#include "oscchain/simulator.hpp"

namespace oscchain {

// Replica-level Monte Carlo drivers. Replica r draws its force from
// sub-stream (seed, r); every replica writes only its own row, and rows are
// reduced serially, so summaries are bitwise reproducible for any worker
// count (serial and parallel execution agree exactly).
struct EnsembleOptions {
  std::uint64_t seed = 1;
  int replicas = 0;
  SynthesisMode mode = SynthesisMode::gaussian_amplitudes;
  int n_density_terms = 64;
  Exec exec = Exec::parallel;
};

// q and p of every replica at the requested sites and one sample time.
struct SiteSamples {
  std::vector<int> sites;
  double time = 0.0;
  Eigen::MatrixXd q;  // replicas x sites
  Eigen::MatrixXd p;
};

SiteSamples ensemble_site_samples(const InteractionKernel& kernel, const SpectralMeasure& measure,
                                  const SimConfig& base, const EnsembleOptions& options,
                                  const std::vector<int>& sites, double time);

// Total chain energy of every replica at the given times (replicas x times).
Eigen::MatrixXd ensemble_energy(const InteractionKernel& kernel, const SpectralMeasure& measure,
                                const SimConfig& base, const EnsembleOptions& options,
                                const std::vector<double>& times);

// Transient decomposition per replica: psi - eta evolved on the ring, reported
// as sqrt(t) * sup_k max(|eps_q|, |eps_p|) per time plus the total drift of
// the (conserved) transient energy.
struct EpsilonEnsemble {
  std::vector<double> times;
  Eigen::MatrixXd scaled_sup;        // replicas x times
  std::vector<double> energy_drift;  // per replica, max-min of H_eps over times
};

EpsilonEnsemble ensemble_epsilon(const InteractionKernel& kernel, const SpectralMeasure& measure,
                                 const SimConfig& base, const EnsembleOptions& options,
                                 const std::vector<double>& times);

}  // namespace oscchain
