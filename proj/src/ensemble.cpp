#include "oscchain/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "oscchain/errors.hpp"

namespace oscchain {

namespace {

void check_options(const EnsembleOptions& options) {
  if (options.replicas < 1) throw std::invalid_argument("ensemble: need at least one replica");
}

bool mode_fast_path(const SimConfig& config) {
  return config.integrator == Integrator::mode_exact && config.boundary == Boundary::periodic;
}

bool has_shared_ic(const SimConfig& config) {
  return config.ic == InitialCondition::explicit_state || config.ic == InitialCondition::random;
}

ChainState shared_ic_state(const SimConfig& config) {
  if (config.ic == InitialCondition::explicit_state) return config.ic_state;
  CounterRng rng(config.ic_seed, 0x1C);
  ChainState state = ChainState::zero(config.lattice_size);
  for (int i = 0; i < config.lattice_size; ++i) state.q[i] = config.ic_scale * rng.next_gaussian();
  for (int i = 0; i < config.lattice_size; ++i) state.p[i] = config.ic_scale * rng.next_gaussian();
  return state;
}

// Modal start amplitudes for one replica; `shared` caches the transform of a
// replica-independent initial state.
ModeSolver::Amplitudes start_amplitudes(const ModeSolver& solver, const SimConfig& config,
                                        const ForceRealization& force,
                                        const ModeSolver::Amplitudes* shared) {
  switch (config.ic) {
    case InitialCondition::zero:
      return solver.zero_amplitudes();
    case InitialCondition::stationary:
      return solver.stationary_at(force, 0.0);
    default:
      return *shared;
  }
}

}  // namespace

SiteSamples ensemble_site_samples(const InteractionKernel& kernel, const SpectralMeasure& measure,
                                  const SimConfig& base, const EnsembleOptions& options,
                                  const std::vector<int>& sites, double time) {
  check_options(options);
  SimConfig config = base;
  config.sample_times = {time};
  config.horizon = std::max(config.horizon, time);
  config.validate(kernel);

  SiteSamples out;
  out.sites = sites;
  out.time = time;
  out.q.resize(options.replicas, static_cast<Eigen::Index>(sites.size()));
  out.p.resize(options.replicas, static_cast<Eigen::Index>(sites.size()));

  if (mode_fast_path(config)) {
    const ModeSolver solver(kernel, config.lattice_size, config.forcing_site);
    ModeSolver::Amplitudes shared;
    if (has_shared_ic(config)) shared = solver.transform(shared_ic_state(config));
    parallel_for(static_cast<std::size_t>(options.replicas), options.exec, [&](std::size_t r) {
      const ForceRealization force =
          synthesize(measure, options.seed, options.mode, options.n_density_terms, r);
      solver.guard_resonance(force);
      const auto start = start_amplitudes(solver, config, force, &shared);
      const auto amps = solver.driven_at(start, force, time);
      for (std::size_t s = 0; s < sites.size(); ++s) {
        const int k = ((sites[s] % config.lattice_size) + config.lattice_size) % config.lattice_size;
        out.q(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(s)) = solver.site_q(amps, k);
        out.p(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(s)) = solver.site_p(amps, k);
      }
    });
    return out;
  }

  parallel_for(static_cast<std::size_t>(options.replicas), options.exec, [&](std::size_t r) {
    const ForceRealization force =
        synthesize(measure, options.seed, options.mode, options.n_density_terms, r);
    const Trajectory traj = simulate(config, kernel, force);
    const ChainState& state = traj.states.front();
    for (std::size_t s = 0; s < sites.size(); ++s) {
      const int k = ((sites[s] % config.lattice_size) + config.lattice_size) % config.lattice_size;
      out.q(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(s)) = state.q[k];
      out.p(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(s)) = state.p[k];
    }
  });
  return out;
}

Eigen::MatrixXd ensemble_energy(const InteractionKernel& kernel, const SpectralMeasure& measure,
                                const SimConfig& base, const EnsembleOptions& options,
                                const std::vector<double>& times) {
  check_options(options);
  SimConfig config = base;
  config.sample_times = times;
  if (!times.empty()) config.horizon = std::max(config.horizon, times.back());
  config.validate(kernel);

  Eigen::MatrixXd energies(options.replicas, static_cast<Eigen::Index>(times.size()));

  if (mode_fast_path(config)) {
    const ModeSolver solver(kernel, config.lattice_size, config.forcing_site);
    ModeSolver::Amplitudes shared;
    if (has_shared_ic(config)) shared = solver.transform(shared_ic_state(config));
    parallel_for(static_cast<std::size_t>(options.replicas), options.exec, [&](std::size_t r) {
      const ForceRealization force =
          synthesize(measure, options.seed, options.mode, options.n_density_terms, r);
      solver.guard_resonance(force);
      const auto start = start_amplitudes(solver, config, force, &shared);
      for (std::size_t j = 0; j < times.size(); ++j) {
        energies(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j)) =
            solver.energy(solver.driven_at(start, force, times[j]));
      }
    });
    return energies;
  }

  parallel_for(static_cast<std::size_t>(options.replicas), options.exec, [&](std::size_t r) {
    const ForceRealization force =
        synthesize(measure, options.seed, options.mode, options.n_density_terms, r);
    const Trajectory traj = simulate(config, kernel, force);
    const EnergyTrace trace = energy_trace(traj, kernel);
    for (std::size_t j = 0; j < times.size(); ++j) {
      energies(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j)) = trace.energy[j];
    }
  });
  return energies;
}

EpsilonEnsemble ensemble_epsilon(const InteractionKernel& kernel, const SpectralMeasure& measure,
                                 const SimConfig& base, const EnsembleOptions& options,
                                 const std::vector<double>& times) {
  check_options(options);
  SimConfig config = base;
  config.sample_times = times;
  if (!times.empty()) config.horizon = std::max(config.horizon, times.back());
  config.validate(kernel);
  if (config.boundary != Boundary::periodic) {
    throw BoundaryUnsupported("ensemble_epsilon: periodic lattice required");
  }

  EpsilonEnsemble out;
  out.times = times;
  out.scaled_sup.resize(options.replicas, static_cast<Eigen::Index>(times.size()));
  out.energy_drift.assign(options.replicas, 0.0);

  parallel_for(static_cast<std::size_t>(options.replicas), options.exec, [&](std::size_t r) {
    const ForceRealization force =
        synthesize(measure, options.seed, options.mode, options.n_density_terms, r);
    const Trajectory full = simulate(config, kernel, force);
    const Trajectory stat = stationary_trajectory(kernel, force, config);
    const Trajectory eps = transient_component(full, stat);
    const EnergyTrace trace = energy_trace(eps, kernel);
    double lo = trace.energy.empty() ? 0.0 : trace.energy.front();
    double hi = lo;
    for (std::size_t j = 0; j < times.size(); ++j) {
      const double sup =
          std::max(eps.states[j].q.cwiseAbs().maxCoeff(), eps.states[j].p.cwiseAbs().maxCoeff());
      out.scaled_sup(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j)) =
          std::sqrt(times[j]) * sup;
      lo = std::min(lo, trace.energy[j]);
      hi = std::max(hi, trace.energy[j]);
    }
    out.energy_drift[r] = hi - lo;
  });
  return out;
}

}  // namespace oscchain
