#pragma once

#include <cstdint>
#include <vector>

#include "oscchain/measure.hpp"

namespace oscchain {

enum class SynthesisMode { gaussian_amplitudes, random_phases };

struct ForceTerm {
  double frequency = 0.0;
  double cos_amp = 0.0;  // A
  double sin_amp = 0.0;  // B
};

// One sampled trajectory of the strictly stationary force
//   f(t) = sum_j A_j cos(x_j t) + B_j sin(x_j t).
// Immutable after synthesis; a pure function of (measure, seed, stream, mode,
// n_density_terms).
class ForceRealization {
 public:
  double evaluate(double t) const;
  const std::vector<ForceTerm>& terms() const { return terms_; }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }
  SynthesisMode mode() const { return mode_; }

 private:
  friend ForceRealization synthesize(const SpectralMeasure&, std::uint64_t, SynthesisMode, int,
                                     std::uint64_t);
  std::vector<ForceTerm> terms_;
  std::uint64_t seed_ = 0;
  std::uint64_t stream_ = 0;
  SynthesisMode mode_ = SynthesisMode::gaussian_amplitudes;
};

// Spectral sampling of the measure. Atoms become exact terms; each density
// panel contributes n_density_terms frequencies placed at equal-mass midpoints
// (every sub-panel carries the same mass, so the total variance is exact).
//
// gaussian_amplitudes: A, B independent N(0, 2w) per pair node -> Gaussian
// process with exact covariance. random_phases: A = sqrt(4w) cos(phi),
// B = sqrt(4w) sin(phi), phi uniform -> bounded trajectories, same covariance.
// Replica r passes stream = r.
ForceRealization synthesize(const SpectralMeasure& measure, std::uint64_t seed, SynthesisMode mode,
                            int n_density_terms = 64, std::uint64_t stream = 0);

}  // namespace oscchain
