#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "oscchain/force.hpp"
#include "oscchain/kernel.hpp"
#include "oscchain/measure.hpp"
#include "oscchain/parallel.hpp"

namespace oscchain {

// Lattice Green's coefficient of the shifted coupling operator:
//   g(m; x) = (1/2pi) integral_0^{2pi} cos(m lambda) / (omega^2(lambda) - x^2) dlambda.
// Even in m; the building block of every stationary covariance.

// Direct route: uniform trapezoid in lambda (spectrally convergent).
// Throws InsideSpectrum when x^2 lies in [e1, e2] up to tolerance.
double greens_coefficient_quadrature(const InteractionKernel& kernel, const SpectralSet& set, double x,
                                     int offset, int n_lambda = 4096);

// Largest modulus among roots of the symbol polynomial strictly inside the
// unit circle; the spatial decay rate of g(m; x) is R(x)^|m|. Roots come in
// inverse pairs; RootOnCircle when one sits within 1e-8 of |z| = 1.
double inner_root_radius(const InteractionKernel& kernel, double x);

// Contour route: residues at the simple inner roots of z^K (P(z) - x^2).
// RepeatedRoot when two inner roots coincide within 1e-8 (callers fall back
// to quadrature). K = 0 short-circuits to the constant-symbol value.
double greens_coefficient_residue(const InteractionKernel& kernel, double x, int offset);

// Residue route with automatic quadrature fallback on repeated roots.
double greens_coefficient(const InteractionKernel& kernel, const SpectralSet& set, double x, int offset,
                          int n_lambda = 4096);

// Covariance matrices of the limiting stationary state on a site window:
//   cqq[k][j] = integral g(n-k; x) g(n-j; x) mu(dx),
//   cpp[k][j] = same with x^2 weight; cross q-p block vanishes by measure
// symmetry. Symmetric positive semidefinite.
struct StationaryCovariance {
  int site = 0;  // forcing site n
  int k_min = 0;
  int k_max = 0;
  Eigen::MatrixXd cqq;
  Eigen::MatrixXd cpp;

  int index(int k) const { return k - k_min; }
  double var_q(int k) const { return cqq(index(k), index(k)); }
  double var_p(int k) const { return cpp(index(k), index(k)); }
};

StationaryCovariance stationary_covariance(const InteractionKernel& kernel, const SpectralMeasure& measure,
                                           int site, int k_min, int k_max, int gl_order = 64,
                                           Exec exec = Exec::parallel);

// Exponential decay estimate fit to the window variances: least-squares line
// through (|n-k|, log Var q_k); rate = exp(slope). The prefactors are raised
// just enough that c1 rate^|n-k| dominates Var q_k (and c2 the momenta) on the
// whole window. DegenerateWindow when fewer than 3 sites carry positive
// variance.
struct DecayEstimate {
  double rate = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
};

DecayEstimate variance_decay_fit(const StationaryCovariance& cov, int site);

// Limit of the mean total energy for a zero-IC driven chain's stationary
// component:
//   alpha = (1/4pi) iint (omega^2 + x^2) / (omega^2 - x^2)^2 dlambda mu(dx).
// error_estimate comes from doubling n_lambda; the returned value uses the
// finer grid.
struct EnergyLimit {
  double alpha = 0.0;
  double error_estimate = 0.0;
};

EnergyLimit stationary_energy_limit(const InteractionKernel& kernel, const SpectralMeasure& measure,
                                    const SpectralSet& set, int n_lambda = 4096,
                                    Exec exec = Exec::parallel);

// Same constant assembled from a covariance window:
//   1/2 ( sum_{k,j} a(k-j) cqq[k][j] + trace cpp ).
double energy_trace_form(const InteractionKernel& kernel, const StationaryCovariance& cov);

// Expected total energy of the zero-IC forced solution at finite t:
//   (1/4pi) iint [ (1-cos t(x+omega))/(x+omega)^2 + (1-cos t(x-omega))/(x-omega)^2 ]
// dlambda mu(dx). Vanishes at t = 0; the t -> infinity limit is twice the
// stationary value `alpha` (the transient keeps, and disperses, as much energy
// as the stationary component retains).
double transient_mean_energy(const InteractionKernel& kernel, const SpectralMeasure& measure,
                             const SpectralSet& set, double t, int n_lambda = 4096,
                             Exec exec = Exec::parallel);

// Exact second moments of the zero-IC response at site n + offset and time t,
// per measure-node quadrature (reference oracle for finite-horizon ensembles).
struct TransientVariance {
  double var_q = 0.0;
  double var_p = 0.0;
};

TransientVariance transient_site_variance(const InteractionKernel& kernel, const SpectralMeasure& measure,
                                          const SpectralSet& set, int offset, double t,
                                          int n_lambda = 4096);

// Stationary solution of one driven mode  Q'' = -omega_m^2 Q + f(t) e^{i n lambda_m}:
//   Q(t) = e^{i n lambda_m} sum_j [A_j cos x_j t + B_j sin x_j t] / (omega_m^2 - x_j^2),
// returned with its time derivative. Throws Resonance when some
// |omega_m^2 - x_j^2| < 1e-10.
std::pair<std::complex<double>, std::complex<double>> stationary_mode_solution(
    const ForceRealization& force, double mode_frequency, int site, double mode_angle, double t);

}  // namespace oscchain
