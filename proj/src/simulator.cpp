#include "oscchain/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oscchain/errors.hpp"
#include "oscchain/rng.hpp"

namespace oscchain {

void SimConfig::validate(const InteractionKernel& kernel) const {
  if (lattice_size <= 2 * kernel.support()) throw TooSmall("SimConfig: lattice_size must exceed 2K");
  if (forcing_site < 0 || forcing_site >= lattice_size) {
    throw std::invalid_argument("SimConfig: forcing site outside the lattice");
  }
  if (horizon < 0.0) throw std::invalid_argument("SimConfig: horizon must be >= 0");
  double prev = -1.0;
  for (double t : sample_times) {
    if (t < 0.0 || t > horizon) throw std::invalid_argument("SimConfig: sample time outside [0, horizon]");
    if (t <= prev) throw std::invalid_argument("SimConfig: sample times must be strictly increasing");
    prev = t;
  }
  if (integrator == Integrator::mode_exact && boundary == Boundary::free) {
    throw BoundaryUnsupported("SimConfig: mode_exact requires a periodic lattice");
  }
  if (ic == InitialCondition::stationary && boundary == Boundary::free) {
    throw BoundaryUnsupported("SimConfig: stationary start requires a periodic lattice");
  }
  if (ic == InitialCondition::explicit_state &&
      (ic_state.q.size() != lattice_size || ic_state.p.size() != lattice_size)) {
    throw std::invalid_argument("SimConfig: explicit initial state has the wrong dimension");
  }
}

ModeSolver::ModeSolver(const InteractionKernel& kernel, int lattice_size, int forcing_site)
    : n_(lattice_size), site_(forcing_site) {
  if (lattice_size <= 2 * kernel.support()) throw TooSmall("ModeSolver: lattice_size must exceed 2K");
  spectral_set(kernel);  // positivity certificate
  omega2_.resize(n_);
  omega_.resize(n_);
  unit_.resize(n_);
  for (int m = 0; m < n_; ++m) {
    const double lambda = mode_angle(m);
    omega2_[m] = kernel.dispersion(lambda);
    omega_[m] = std::sqrt(omega2_[m]);
    unit_[m] = std::exp(std::complex<double>(0.0, lambda));
  }
}

double ModeSolver::mode_angle(int m) const { return 2.0 * std::numbers::pi * m / n_; }

void ModeSolver::guard_resonance(const ForceRealization& force) const {
  for (int m = 0; m < n_; ++m) {
    for (const ForceTerm& term : force.terms()) {
      if (std::abs(omega2_[m] - term.frequency * term.frequency) < 1e-10) {
        throw Resonance("ModeSolver: forcing frequency matches a lattice mode");
      }
    }
  }
}

ModeSolver::Amplitudes ModeSolver::zero_amplitudes() const {
  Amplitudes amps;
  amps.Q.assign(n_, 0.0);
  amps.P.assign(n_, 0.0);
  return amps;
}

ModeSolver::Amplitudes ModeSolver::transform(const ChainState& state) const {
  Amplitudes amps = zero_amplitudes();
  for (int m = 0; m < n_; ++m) {
    std::complex<double> q = 0.0, p = 0.0;
    for (int k = 0; k < n_; ++k) {
      const std::complex<double> w = std::conj(unit(static_cast<long long>(m) * k));
      q += state.q[k] * w;
      p += state.p[k] * w;
    }
    amps.Q[m] = q;
    amps.P[m] = p;
  }
  return amps;
}

ChainState ModeSolver::assemble(const Amplitudes& amps) const {
  ChainState state = ChainState::zero(n_);
  for (int k = 0; k < n_; ++k) {
    std::complex<double> q = 0.0, p = 0.0;
    for (int m = 0; m < n_; ++m) {
      const std::complex<double> w = unit(static_cast<long long>(m) * k);
      q += amps.Q[m] * w;
      p += amps.P[m] * w;
    }
    state.q[k] = q.real() / n_;
    state.p[k] = p.real() / n_;
  }
  return state;
}

ModeSolver::Amplitudes ModeSolver::homogeneous_at(const Amplitudes& initial, double t) const {
  Amplitudes amps = zero_amplitudes();
  for (int m = 0; m < n_; ++m) {
    const double w = omega_[m];
    const double c = std::cos(w * t);
    const double s = std::sin(w * t);
    amps.Q[m] = c * initial.Q[m] + (s / w) * initial.P[m];
    amps.P[m] = -w * s * initial.Q[m] + c * initial.P[m];
  }
  return amps;
}

ModeSolver::Amplitudes ModeSolver::driven_at(const Amplitudes& initial, const ForceRealization& force,
                                             double t) const {
  Amplitudes amps = homogeneous_at(initial, t);
  for (int m = 0; m < n_; ++m) {
    const double w2 = omega2_[m];
    const double w = omega_[m];
    const double cwt = std::cos(w * t);
    const double swt = std::sin(w * t);
    double q_acc = 0.0, p_acc = 0.0;
    for (const ForceTerm& term : force.terms()) {
      const double x = term.frequency;
      const double denom = w2 - x * x;
      const double cxt = std::cos(x * t);
      const double sxt = std::sin(x * t);
      q_acc += (term.cos_amp * (cxt - cwt) + term.sin_amp * (sxt - (x / w) * swt)) / denom;
      p_acc += (term.cos_amp * (-x * sxt + w * swt) + term.sin_amp * x * (cxt - cwt)) / denom;
    }
    const std::complex<double> phase = std::conj(unit(static_cast<long long>(m) * site_));
    amps.Q[m] += phase * q_acc;
    amps.P[m] += phase * p_acc;
  }
  return amps;
}

ModeSolver::Amplitudes ModeSolver::stationary_at(const ForceRealization& force, double t) const {
  Amplitudes amps = zero_amplitudes();
  for (int m = 0; m < n_; ++m) {
    const double w2 = omega2_[m];
    double q_acc = 0.0, p_acc = 0.0;
    for (const ForceTerm& term : force.terms()) {
      const double x = term.frequency;
      const double denom = w2 - x * x;
      if (std::abs(denom) < 1e-10) {
        throw Resonance("stationary_at: forcing frequency matches a lattice mode");
      }
      q_acc += (term.cos_amp * std::cos(x * t) + term.sin_amp * std::sin(x * t)) / denom;
      p_acc += x * (-term.cos_amp * std::sin(x * t) + term.sin_amp * std::cos(x * t)) / denom;
    }
    const std::complex<double> phase = std::conj(unit(static_cast<long long>(m) * site_));
    amps.Q[m] = phase * q_acc;
    amps.P[m] = phase * p_acc;
  }
  return amps;
}

double ModeSolver::site_q(const Amplitudes& amps, int k) const {
  std::complex<double> acc = 0.0;
  for (int m = 0; m < n_; ++m) acc += amps.Q[m] * unit(static_cast<long long>(m) * k);
  return acc.real() / n_;
}

double ModeSolver::site_p(const Amplitudes& amps, int k) const {
  std::complex<double> acc = 0.0;
  for (int m = 0; m < n_; ++m) acc += amps.P[m] * unit(static_cast<long long>(m) * k);
  return acc.real() / n_;
}

double ModeSolver::energy(const Amplitudes& amps) const {
  double acc = 0.0;
  for (int m = 0; m < n_; ++m) {
    acc += std::norm(amps.P[m]) + omega2_[m] * std::norm(amps.Q[m]);
  }
  return 0.5 * acc / n_;
}

Eigen::VectorXd apply_coupling(const InteractionKernel& kernel, const Eigen::VectorXd& q, Boundary boundary) {
  const int n = static_cast<int>(q.size());
  const int K = kernel.support();
  Eigen::VectorXd out(n);
  for (int i = 0; i < n; ++i) {
    double acc = kernel.coeff(0) * q[i];
    for (int k = 1; k <= K; ++k) {
      const double a = kernel.coeff(k);
      if (boundary == Boundary::periodic) {
        acc += a * (q[(i + k) % n] + q[(i - k + n) % n]);
      } else {
        if (i + k < n) acc += a * q[i + k];
        if (i - k >= 0) acc += a * q[i - k];
      }
    }
    out[i] = acc;
  }
  return out;
}

namespace {

ChainState initial_state(const SimConfig& config, const InteractionKernel& kernel,
                         const ForceRealization& force) {
  switch (config.ic) {
    case InitialCondition::zero:
      return ChainState::zero(config.lattice_size);
    case InitialCondition::explicit_state:
      return config.ic_state;
    case InitialCondition::random: {
      CounterRng rng(config.ic_seed, 0x1C);
      ChainState state = ChainState::zero(config.lattice_size);
      for (int i = 0; i < config.lattice_size; ++i) state.q[i] = config.ic_scale * rng.next_gaussian();
      for (int i = 0; i < config.lattice_size; ++i) state.p[i] = config.ic_scale * rng.next_gaussian();
      return state;
    }
    case InitialCondition::stationary: {
      ModeSolver solver(kernel, config.lattice_size, config.forcing_site);
      solver.guard_resonance(force);
      return solver.assemble(solver.stationary_at(force, 0.0));
    }
  }
  throw std::logic_error("initial_state: unknown initial condition kind");
}

Trajectory simulate_mode_exact(const SimConfig& config, const InteractionKernel& kernel,
                               const ForceRealization& force) {
  ModeSolver solver(kernel, config.lattice_size, config.forcing_site);
  solver.guard_resonance(force);

  ModeSolver::Amplitudes start;
  if (config.ic == InitialCondition::zero) {
    start = solver.zero_amplitudes();
  } else if (config.ic == InitialCondition::stationary) {
    start = solver.stationary_at(force, 0.0);
  } else {
    start = solver.transform(initial_state(config, kernel, force));
  }

  Trajectory traj;
  traj.times = config.sample_times;
  traj.lattice_size = config.lattice_size;
  traj.boundary = config.boundary;
  traj.forcing_site = config.forcing_site;
  traj.force_seed = force.seed();
  traj.force_stream = force.stream();
  traj.states.reserve(config.sample_times.size());
  for (double t : config.sample_times) {
    traj.states.push_back(solver.assemble(solver.driven_at(start, force, t)));
  }
  return traj;
}

Trajectory simulate_verlet(const SimConfig& config, const InteractionKernel& kernel,
                           const ForceRealization& force) {
  double dt = config.verlet_dt;
  if (dt <= 0.0) {
    const SpectralSet set = spectral_set(kernel);
    dt = 2.0 * std::numbers::pi / (100.0 * std::sqrt(set.e2));
  }

  ChainState state = initial_state(config, kernel, force);
  Eigen::VectorXd unit_site = Eigen::VectorXd::Zero(config.lattice_size);
  unit_site[config.forcing_site] = 1.0;
  const auto accel = [&](const Eigen::VectorXd& q, double t) -> Eigen::VectorXd {
    return -apply_coupling(kernel, q, config.boundary) + force.evaluate(t) * unit_site;
  };

  Trajectory traj;
  traj.times = config.sample_times;
  traj.lattice_size = config.lattice_size;
  traj.boundary = config.boundary;
  traj.forcing_site = config.forcing_site;
  traj.force_seed = force.seed();
  traj.force_stream = force.stream();

  double now = 0.0;
  Eigen::VectorXd a = accel(state.q, now);
  for (double target : config.sample_times) {
    const double span = target - now;
    const int steps = span > 0.0 ? static_cast<int>(std::ceil(span / dt)) : 0;
    const double h = steps > 0 ? span / steps : 0.0;
    for (int s = 0; s < steps; ++s) {
      state.q += h * state.p + 0.5 * h * h * a;
      const double t_next = now + (s + 1) * h;
      const Eigen::VectorXd a_next = accel(state.q, t_next);
      state.p += 0.5 * h * (a + a_next);
      a = a_next;
    }
    now = target;
    traj.states.push_back(state);
  }
  return traj;
}

}  // namespace

Trajectory simulate(const SimConfig& config, const InteractionKernel& kernel, const ForceRealization& force) {
  config.validate(kernel);
  if (config.integrator == Integrator::mode_exact) return simulate_mode_exact(config, kernel, force);
  return simulate_verlet(config, kernel, force);
}

Trajectory stationary_trajectory(const InteractionKernel& kernel, const ForceRealization& force,
                                 const SimConfig& config) {
  config.validate(kernel);
  if (config.boundary != Boundary::periodic) {
    throw BoundaryUnsupported("stationary_trajectory: periodic lattice required");
  }
  ModeSolver solver(kernel, config.lattice_size, config.forcing_site);
  solver.guard_resonance(force);
  Trajectory traj;
  traj.times = config.sample_times;
  traj.lattice_size = config.lattice_size;
  traj.boundary = config.boundary;
  traj.forcing_site = config.forcing_site;
  traj.force_seed = force.seed();
  traj.force_stream = force.stream();
  traj.states.reserve(config.sample_times.size());
  for (double t : config.sample_times) {
    traj.states.push_back(solver.assemble(solver.stationary_at(force, t)));
  }
  return traj;
}

Trajectory transient_component(const Trajectory& full, const Trajectory& stationary) {
  const bool matched = full.lattice_size == stationary.lattice_size &&
                       full.boundary == stationary.boundary &&
                       full.forcing_site == stationary.forcing_site &&
                       full.times == stationary.times && full.force_seed == stationary.force_seed &&
                       full.force_stream == stationary.force_stream;
  if (!matched) throw MismatchedRuns("transient_component: trajectories disagree on config or realization");
  Trajectory eps = full;
  for (std::size_t i = 0; i < eps.states.size(); ++i) {
    eps.states[i].q -= stationary.states[i].q;
    eps.states[i].p -= stationary.states[i].p;
  }
  return eps;
}

EnergyTrace energy_trace(const Trajectory& trajectory, const InteractionKernel& kernel) {
  EnergyTrace trace;
  trace.times = trajectory.times;
  trace.energy.reserve(trajectory.states.size());
  for (const ChainState& state : trajectory.states) {
    const Eigen::VectorXd vq = apply_coupling(kernel, state.q, trajectory.boundary);
    trace.energy.push_back(0.5 * state.p.squaredNorm() + 0.5 * state.q.dot(vq));
  }
  return trace;
}

}  // namespace oscchain
