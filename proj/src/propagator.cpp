#include "oscchain/propagator.hpp"

#include <cmath>
#include <stdexcept>

#include "oscchain/errors.hpp"
#include "oscchain/quadrature.hpp"

namespace oscchain {

SpectralOperator::SpectralOperator(const Eigen::MatrixXd& v) : v_(v) {
  if (v.rows() != v.cols()) throw std::invalid_argument("SpectralOperator: matrix must be square");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(v);
  if (solver.info() != Eigen::Success) throw std::runtime_error("SpectralOperator: eigendecomposition failed");
  eigenvalues_ = solver.eigenvalues();
  basis_ = solver.eigenvectors();
  if (eigenvalues_.minCoeff() <= 1e-12) {
    throw NotPositiveDefinite("SpectralOperator: smallest eigenvalue below the positivity floor");
  }
  frequencies_ = eigenvalues_.cwiseSqrt();
}

PropagatorBlocks SpectralOperator::blocks(double t) const {
  const Eigen::ArrayXd wt = frequencies_.array() * t;
  const Eigen::VectorXd cos_wt = wt.cos();
  const Eigen::VectorXd sinc_wt = (wt.sin() / frequencies_.array()).matrix();
  PropagatorBlocks out;
  out.C = basis_ * cos_wt.asDiagonal() * basis_.transpose();
  out.S = basis_ * sinc_wt.asDiagonal() * basis_.transpose();
  out.time = t;
  return out;
}

ChainState SpectralOperator::evolve(const ChainState& state, double t) const {
  const Eigen::VectorXd qm = basis_.transpose() * state.q;
  const Eigen::VectorXd pm = basis_.transpose() * state.p;
  const Eigen::ArrayXd w = frequencies_.array();
  const Eigen::ArrayXd c = (w * t).cos();
  const Eigen::ArrayXd s = (w * t).sin();
  ChainState out;
  out.q = basis_ * (c * qm.array() + s / w * pm.array()).matrix();
  out.p = basis_ * (-w * s * qm.array() + c * pm.array()).matrix();
  return out;
}

ChainState SpectralOperator::evolve_forced(const ChainState& state, const ForceRealization& force,
                                           int site, double t, double quadrature_dt) const {
  if (site < 0 || site >= size()) throw std::invalid_argument("evolve_forced: site out of range");
  if (t < 0.0) throw std::invalid_argument("evolve_forced: horizon must be >= 0");
  ChainState out = evolve(state, t);
  if (t == 0.0 || force.terms().empty()) return out;

  bool resonant = false;
  for (int i = 0; i < size(); ++i) {
    for (const ForceTerm& term : force.terms()) {
      if (std::abs(eigenvalues_[i] - term.frequency * term.frequency) < 1e-10) resonant = true;
    }
  }

  const Eigen::VectorXd gain = basis_.row(site).transpose();  // modal forcing amplitudes
  Eigen::VectorXd qm = Eigen::VectorXd::Zero(size());
  Eigen::VectorXd pm = Eigen::VectorXd::Zero(size());

  if (!resonant) {
    for (int i = 0; i < size(); ++i) {
      const double w2 = eigenvalues_[i];
      const double w = frequencies_[i];
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
      qm[i] = q_acc;
      pm[i] = p_acc;
    }
  } else {
    // Near-resonant force: composite Simpson on the convolution integrals.
    const double dt = quadrature_dt > 0.0 ? quadrature_dt : t / 2048.0;
    if (dt > t) throw std::invalid_argument("evolve_forced: quadrature step exceeds horizon");
    int intervals = static_cast<int>(std::ceil(t / dt));
    if (intervals % 2 == 1) ++intervals;
    for (int i = 0; i < size(); ++i) {
      const double w = frequencies_[i];
      qm[i] = simpson([&](double s) { return force.evaluate(s) * std::sin(w * (t - s)) / w; }, 0.0, t,
                      intervals);
      pm[i] = simpson([&](double s) { return force.evaluate(s) * std::cos(w * (t - s)); }, 0.0, t,
                      intervals);
    }
  }

  out.q += basis_ * qm.cwiseProduct(gain);
  out.p += basis_ * pm.cwiseProduct(gain);
  return out;
}

double SpectralOperator::energy(const ChainState& state) const {
  return 0.5 * state.p.squaredNorm() + 0.5 * state.q.dot(v_ * state.q);
}

PropagatorBlocks propagator_blocks(const Eigen::MatrixXd& v, double t) {
  return SpectralOperator(v).blocks(t);
}

ChainState evolve_homogeneous(const Eigen::MatrixXd& v, const ChainState& state, double t) {
  return SpectralOperator(v).evolve(state, t);
}

ChainState duhamel_forced(const Eigen::MatrixXd& v, const ChainState& state, const ForceRealization& force,
                          int site, double t, double quadrature_dt) {
  return SpectralOperator(v).evolve_forced(state, force, site, t, quadrature_dt);
}

PropagatorTailBound propagator_tail_bound(double v_norm, int support, int offset, double t) {
  if (support < 1) throw std::invalid_argument("propagator_tail_bound: kernel support must be >= 1");
  if (v_norm < 0.0 || t < 0.0) throw std::invalid_argument("propagator_tail_bound: need v >= 0, t >= 0");
  offset = std::abs(offset);
  const long long rho = (offset + support - 1) / support;  // smallest integer >= offset / K
  const double envelope = std::sqrt(v_norm) * t;
  PropagatorTailBound bound;
  if (rho == 0) {
    bound.bound_C = std::exp(envelope);
    bound.bound_S = t * std::exp(envelope);
    return bound;
  }
  if (t == 0.0) return bound;  // positive power of t
  const double log_common = rho * std::log(v_norm) + envelope;
  bound.bound_C = std::exp(log_common + 2.0 * rho * std::log(t) - std::lgamma(2.0 * rho + 1.0));
  bound.bound_S = std::exp(log_common + (2.0 * rho + 1.0) * std::log(t) - std::lgamma(2.0 * rho + 2.0));
  return bound;
}

}  // namespace oscchain
