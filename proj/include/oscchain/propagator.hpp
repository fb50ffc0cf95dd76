#pragma once

#include <Eigen/Dense>

#include "oscchain/force.hpp"

namespace oscchain {

// Deviation/momentum pair on a finite lattice.
struct ChainState {
  Eigen::VectorXd q;
  Eigen::VectorXd p;

  static ChainState zero(int n) { return {Eigen::VectorXd::Zero(n), Eigen::VectorXd::Zero(n)}; }
};

// Blocks of the free-flow operator exponential:
//   C(t) = cos(sqrt(V) t),  S(t) = sqrt(V)^{-1} sin(sqrt(V) t),
// so  e^{At} = [[C, S], [-V S, C]]  for A = [[0, I], [-V, 0]].
struct PropagatorBlocks {
  Eigen::MatrixXd C;
  Eigen::MatrixXd S;
  double time = 0.0;
};

// Spectral decomposition of a symmetric positive-definite coupling matrix,
// reused across evaluation times. Throws NotPositiveDefinite when the
// smallest eigenvalue is <= 1e-12.
class SpectralOperator {
 public:
  explicit SpectralOperator(const Eigen::MatrixXd& v);

  int size() const { return static_cast<int>(frequencies_.size()); }
  const Eigen::MatrixXd& matrix() const { return v_; }
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }

  PropagatorBlocks blocks(double t) const;
  ChainState evolve(const ChainState& state, double t) const;

  // Forced evolution under f applied at `site`. Finite cosine-sum forces are
  // integrated in closed form per eigenmode (no time-stepping error); the
  // composite-Simpson path with step quadrature_dt covers near-resonant
  // degeneracies. quadrature_dt <= 0 selects the default t/2048.
  ChainState evolve_forced(const ChainState& state, const ForceRealization& force, int site, double t,
                           double quadrature_dt = 0.0) const;

  double energy(const ChainState& state) const;  // 1/2 (p,p) + 1/2 (q, Vq)

 private:
  Eigen::MatrixXd v_;
  Eigen::MatrixXd basis_;        // columns are eigenvectors
  Eigen::VectorXd eigenvalues_;  // omega^2, ascending
  Eigen::VectorXd frequencies_;  // omega
};

// One-shot wrappers around SpectralOperator.
PropagatorBlocks propagator_blocks(const Eigen::MatrixXd& v, double t);
ChainState evolve_homogeneous(const Eigen::MatrixXd& v, const ChainState& state, double t);
ChainState duhamel_forced(const Eigen::MatrixXd& v, const ChainState& state, const ForceRealization& force,
                          int site, double t, double quadrature_dt = 0.0);

// Off-diagonal propagator tail bounds: with rho = ceil(offset / K),
//   |C_{k,n}(t)| <= v^rho t^{2 rho} / (2 rho)! * e^{sqrt(v) t}
//   |S_{k,n}(t)| <= v^rho t^{2 rho + 1} / (2 rho + 1)! * e^{sqrt(v) t}.
// v_norm must dominate the spectral radius of V; requires K >= 1.
struct PropagatorTailBound {
  double bound_C = 0.0;
  double bound_S = 0.0;
};

PropagatorTailBound propagator_tail_bound(double v_norm, int support, int offset, double t);

}  // namespace oscchain
