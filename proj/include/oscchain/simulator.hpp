#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "oscchain/force.hpp"
#include "oscchain/kernel.hpp"
#include "oscchain/propagator.hpp"

namespace oscchain {

enum class Integrator { mode_exact, verlet };
enum class InitialCondition { zero, stationary, explicit_state, random };

struct SimConfig {
  int lattice_size = 64;
  Boundary boundary = Boundary::periodic;
  int forcing_site = 0;
  double horizon = 0.0;
  std::vector<double> sample_times;  // strictly increasing, within [0, horizon]
  Integrator integrator = Integrator::mode_exact;
  double verlet_dt = 0.0;  // <= 0 selects 2pi / (100 sqrt(e2))
  InitialCondition ic = InitialCondition::zero;
  ChainState ic_state;        // explicit_state
  std::uint64_t ic_seed = 0;  // random
  double ic_scale = 0.0;      // random

  void validate(const InteractionKernel& kernel) const;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<ChainState> states;
  int lattice_size = 0;
  Boundary boundary = Boundary::periodic;
  int forcing_site = 0;
  std::uint64_t force_seed = 0;
  std::uint64_t force_stream = 0;
};

struct EnergyTrace {
  std::vector<double> times;
  std::vector<double> energy;
};

// Closed-form per-mode evolution of the driven periodic ring. Each discrete
// mode is a scalar oscillator driven by the finite cosine sum, solved exactly
// per term; no time-stepping error. Shared by the simulator and the ensemble
// drivers (which only need single sites or Parseval energies).
class ModeSolver {
 public:
  ModeSolver(const InteractionKernel& kernel, int lattice_size, int forcing_site);

  int size() const { return n_; }
  double mode_angle(int m) const;
  double mode_frequency(int m) const { return omega_[m]; }

  // Throws Resonance if a forcing frequency meets a mode frequency within 1e-10.
  void guard_resonance(const ForceRealization& force) const;

  struct Amplitudes {
    std::vector<std::complex<double>> Q;
    std::vector<std::complex<double>> P;
  };

  Amplitudes zero_amplitudes() const;
  Amplitudes transform(const ChainState& state) const;  // DFT
  ChainState assemble(const Amplitudes& amps) const;    // inverse DFT, real

  // State at time t given modal initial data at time 0 plus the forced
  // closed-form response (undetermined-coefficients particular solution).
  Amplitudes driven_at(const Amplitudes& initial, const ForceRealization& force, double t) const;
  Amplitudes homogeneous_at(const Amplitudes& initial, double t) const;
  // Stationary solution of every mode at time t.
  Amplitudes stationary_at(const ForceRealization& force, double t) const;

  double site_q(const Amplitudes& amps, int k) const;
  double site_p(const Amplitudes& amps, int k) const;
  double energy(const Amplitudes& amps) const;  // Parseval form of the Hamiltonian

 private:
  int n_ = 0;
  int site_ = 0;
  std::vector<double> omega2_;
  std::vector<double> omega_;
  std::vector<std::complex<double>> unit_;  // e^{2 pi i j / n}
  std::complex<double> unit(long long j) const { return unit_[static_cast<std::size_t>(((j % n_) + n_) % n_)]; }
};

// Time-domain simulation of the truncated driven chain.
Trajectory simulate(const SimConfig& config, const InteractionKernel& kernel, const ForceRealization& force);

// Stationary component eta on the same truncated ring (periodic only).
Trajectory stationary_trajectory(const InteractionKernel& kernel, const ForceRealization& force,
                                 const SimConfig& config);

// epsilon = psi - eta, sitewise; solves the homogeneous system. Trajectories
// must come from the same config and realization (MismatchedRuns otherwise).
Trajectory transient_component(const Trajectory& full, const Trajectory& stationary);

// H(t) = 1/2 (p,p) + 1/2 (q, Vq) with the truncated coupling matrix.
EnergyTrace energy_trace(const Trajectory& trajectory, const InteractionKernel& kernel);

// V q with the kernel applied under the given boundary (O(N K)).
Eigen::VectorXd apply_coupling(const InteractionKernel& kernel, const Eigen::VectorXd& q, Boundary boundary);

}  // namespace oscchain
