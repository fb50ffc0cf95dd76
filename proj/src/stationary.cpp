#include "oscchain/stationary.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "oscchain/errors.hpp"
#include "oscchain/quadrature.hpp"

namespace oscchain {

namespace {

void guard_outside_spectrum(const SpectralSet& set, double x) {
  const double tol = 1e-9 * (1.0 + set.e2);
  const double x2 = x * x;
  if (x2 >= set.e1 - tol && x2 <= set.e2 + tol) {
    std::ostringstream msg;
    msg << "x^2 = " << x2 << " lies in the spectral set [" << set.e1 << ", " << set.e2 << "]";
    throw InsideSpectrum(msg.str());
  }
}

std::vector<std::complex<double>> inner_roots(const InteractionKernel& kernel, double x) {
  const SymbolPolynomial poly = symbol_polynomial(kernel, x);
  const int degree = poly.degree;
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(degree, degree);
  for (int i = 0; i + 1 < degree; ++i) companion(i + 1, i) = 1.0;
  for (int i = 0; i < degree; ++i) {
    companion(i, degree - 1) = -poly.coeffs[degree - i] / poly.coeffs[0];
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion);
  if (solver.info() != Eigen::Success) throw std::runtime_error("inner_roots: eigensolver failed");

  std::vector<std::complex<double>> inside;
  for (int i = 0; i < degree; ++i) {
    const std::complex<double> z = solver.eigenvalues()[i];
    if (std::abs(std::abs(z) - 1.0) < 1e-8) {
      throw RootOnCircle("symbol root on the unit circle: frequency inside +-sqrt(E)");
    }
    if (std::abs(z) < 1.0) inside.push_back(z);
  }
  if (static_cast<int>(inside.size()) != kernel.support()) {
    throw std::runtime_error("inner_roots: expected K roots inside the unit circle");
  }
  return inside;
}

std::complex<double> symbol_derivative(const SymbolPolynomial& poly, std::complex<double> z) {
  std::complex<double> acc = 0.0;
  for (int i = 0; i < poly.degree; ++i) {
    acc = acc * z + poly.coeffs[i] * static_cast<double>(poly.degree - i);
  }
  return acc;
}

void guard_simple_roots(const std::vector<std::complex<double>>& roots) {
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (std::abs(roots[i] - roots[j]) < 1e-8) {
        throw RepeatedRoot("coincident inner roots; residue evaluation is degenerate");
      }
    }
  }
}

// Residue row g(0..max_offset; x) with one root solve; throws RepeatedRoot /
// RootOnCircle like the single-offset routine.
std::vector<double> greens_row_residue(const InteractionKernel& kernel, double x, int max_offset) {
  const int K = kernel.support();
  std::vector<double> row(max_offset + 1, 0.0);
  if (K == 0) {
    row[0] = 1.0 / (kernel.coeff(0) - x * x);
    return row;
  }
  const SymbolPolynomial poly = symbol_polynomial(kernel, x);
  const std::vector<std::complex<double>> roots = inner_roots(kernel, x);
  guard_simple_roots(roots);
  std::vector<std::complex<double>> acc(max_offset + 1, 0.0);
  for (const std::complex<double> z : roots) {
    const std::complex<double> dq = symbol_derivative(poly, z);
    std::complex<double> power = std::pow(z, K - 1);  // z^{|m| + K - 1} at m = 0
    for (int m = 0; m <= max_offset; ++m) {
      acc[m] += power / dq;
      power *= z;
    }
  }
  for (int m = 0; m <= max_offset; ++m) {
    if (std::abs(acc[m].imag()) > 1e-10 * (1.0 + std::abs(acc[m].real()))) {
      throw std::runtime_error("greens_row_residue: residue sum has a nonreal remainder");
    }
    row[m] = acc[m].real();
  }
  return row;
}

}  // namespace

double greens_coefficient_quadrature(const InteractionKernel& kernel, const SpectralSet& set, double x,
                                     int offset, int n_lambda) {
  guard_outside_spectrum(set, x);
  const int m = std::abs(offset);
  const double x2 = x * x;
  double cos_sum = 0.0, sin_sum = 0.0;
  const double two_pi = 2.0 * std::numbers::pi;
  for (int j = 0; j < n_lambda; ++j) {
    const double lambda = two_pi * j / n_lambda;
    const double denom = kernel.dispersion(lambda) - x2;
    cos_sum += std::cos(m * lambda) / denom;
    sin_sum += std::sin(m * lambda) / denom;
  }
  cos_sum /= n_lambda;
  sin_sum /= n_lambda;
  if (std::abs(sin_sum) > 1e-12) {
    throw std::runtime_error("greens_coefficient_quadrature: sine part failed to vanish");
  }
  return cos_sum;
}

double inner_root_radius(const InteractionKernel& kernel, double x) {
  double radius = 0.0;
  for (const std::complex<double> z : inner_roots(kernel, x)) {
    radius = std::max(radius, std::abs(z));
  }
  return radius;
}

double greens_coefficient_residue(const InteractionKernel& kernel, double x, int offset) {
  return greens_row_residue(kernel, x, std::abs(offset))[std::abs(offset)];
}

double greens_coefficient(const InteractionKernel& kernel, const SpectralSet& set, double x, int offset,
                          int n_lambda) {
  if (kernel.support() == 0) {
    guard_outside_spectrum(set, x);
    return offset == 0 ? 1.0 / (kernel.coeff(0) - x * x) : 0.0;
  }
  try {
    return greens_coefficient_residue(kernel, x, offset);
  } catch (const RepeatedRoot&) {
    return greens_coefficient_quadrature(kernel, set, x, offset, n_lambda);
  }
}

StationaryCovariance stationary_covariance(const InteractionKernel& kernel, const SpectralMeasure& measure,
                                           int site, int k_min, int k_max, int gl_order, Exec exec) {
  if (k_min > k_max) throw std::invalid_argument("stationary_covariance: empty window");
  const SpectralSet set = spectral_set(kernel);
  const GapReport gap = check_gap(measure, set);
  if (!gap.pass) {
    std::ostringstream msg;
    msg << "stationary_covariance: spectral gap violated (margin " << gap.margin << ")";
    throw GapViolation(msg.str());
  }

  const int width = k_max - k_min + 1;
  const int max_offset = std::max(std::abs(site - k_min), std::abs(site - k_max));
  const std::vector<SpectralMeasure::Node> nodes = measure.quadrature_nodes(gl_order);

  // Per-node Green's rows in independent slots, reduced serially afterwards.
  std::vector<std::vector<double>> rows(nodes.size());
  parallel_for(nodes.size(), exec, [&](std::size_t i) {
    guard_outside_spectrum(set, nodes[i].x);
    try {
      rows[i] = greens_row_residue(kernel, nodes[i].x, max_offset);
    } catch (const RepeatedRoot&) {
      rows[i].resize(max_offset + 1);
      for (int m = 0; m <= max_offset; ++m) {
        rows[i][m] = greens_coefficient_quadrature(kernel, set, nodes[i].x, m);
      }
    }
  });

  StationaryCovariance cov;
  cov.site = site;
  cov.k_min = k_min;
  cov.k_max = k_max;
  cov.cqq = Eigen::MatrixXd::Zero(width, width);
  cov.cpp = Eigen::MatrixXd::Zero(width, width);
  Eigen::VectorXd g(width);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (int k = k_min; k <= k_max; ++k) g[k - k_min] = rows[i][std::abs(site - k)];
    const double w = nodes[i].weight;
    cov.cqq.noalias() += w * g * g.transpose();
    cov.cpp.noalias() += w * nodes[i].x * nodes[i].x * g * g.transpose();
  }
  return cov;
}

namespace {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  int points = 0;
  bool usable = false;  // >= 3 points spanning >= 2 distinct abscissae
};

LineFit fit_log_line(const std::vector<std::pair<double, double>>& pts) {
  LineFit fit;
  fit.points = static_cast<int>(pts.size());
  if (fit.points < 3) return fit;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [d, lv] : pts) {
    sx += d;
    sy += lv;
    sxx += d * d;
    sxy += d * lv;
  }
  const double n = fit.points;
  const double det = n * sxx - sx * sx;
  if (det <= 0.0) return fit;  // all abscissae equal
  fit.slope = (n * sxy - sx * sy) / det;
  fit.intercept = (sy * sxx - sx * sxy) / det;
  fit.usable = true;
  return fit;
}

}  // namespace

DecayEstimate variance_decay_fit(const StationaryCovariance& cov, int site) {
  const int radius = std::min(site - cov.k_min, cov.k_max - site);
  if (radius < 5) throw std::invalid_argument("variance_decay_fit: window radius must be >= 5 each side");

  std::vector<std::pair<double, double>> q_pts, p_pts;
  for (int k = cov.k_min; k <= cov.k_max; ++k) {
    const double d = std::abs(site - k);
    if (cov.var_q(k) > 1e-300) q_pts.push_back({d, std::log(cov.var_q(k))});
    if (cov.var_p(k) > 1e-300) p_pts.push_back({d, std::log(cov.var_p(k))});
  }
  const LineFit q_fit = fit_log_line(q_pts);
  if (!q_fit.usable) throw DegenerateWindow("variance_decay_fit: fewer than 3 usable sites");
  const double rate = std::exp(q_fit.slope);
  if (!(rate > 0.0 && rate < 1.0)) throw DegenerateWindow("variance_decay_fit: no exponential decay in window");

  DecayEstimate est;
  est.rate = rate;
  est.c1 = 1.0001 * std::exp(q_fit.intercept);
  const LineFit p_fit = fit_log_line(p_pts);
  est.c2 = p_fit.usable ? 1.0001 * std::exp(p_fit.intercept) : 0.0;
  // Raise the prefactors until they dominate the window (the least-squares
  // line can undercut convex mixture data at the edges).
  for (int k = cov.k_min; k <= cov.k_max; ++k) {
    const double decay = std::pow(rate, std::abs(site - k));
    est.c1 = std::max(est.c1, 1.0001 * cov.var_q(k) / decay);
    est.c2 = std::max(est.c2, 1.0001 * cov.var_p(k) / decay);
  }
  return est;
}

namespace {

void guard_gap(const InteractionKernel& kernel, const SpectralMeasure& measure, const SpectralSet& set) {
  const GapReport gap = check_gap(measure, set);
  if (!gap.pass) {
    std::ostringstream msg;
    msg << "spectral gap violated (margin " << gap.margin << ")";
    throw GapViolation(msg.str());
  }
  (void)kernel;
}

// lambda-slot tensor quadrature: value = (1/2) * mean over lambda of
// sum_nodes w * f(lambda, x). Slot writes keep serial/parallel bitwise equal.
template <typename F>
double half_mean_over_angles(const std::vector<SpectralMeasure::Node>& nodes, int n_lambda, Exec exec,
                             F&& integrand) {
  std::vector<double> slot(n_lambda);
  const double two_pi = 2.0 * std::numbers::pi;
  parallel_for(static_cast<std::size_t>(n_lambda), exec, [&](std::size_t j) {
    const double lambda = two_pi * static_cast<double>(j) / n_lambda;
    double acc = 0.0;
    for (const auto& node : nodes) acc += node.weight * integrand(lambda, node.x);
    slot[j] = acc;
  });
  double sum = 0.0;
  for (double v : slot) sum += v;
  return 0.5 * sum / n_lambda;
}

}  // namespace

EnergyLimit stationary_energy_limit(const InteractionKernel& kernel, const SpectralMeasure& measure,
                                    const SpectralSet& set, int n_lambda, Exec exec) {
  guard_gap(kernel, measure, set);
  const auto nodes = measure.quadrature_nodes();
  for (const auto& node : nodes) guard_outside_spectrum(set, node.x);
  const auto integrand = [&](double lambda, double x) {
    const double w2 = kernel.dispersion(lambda);
    const double denom = w2 - x * x;
    return (w2 + x * x) / (denom * denom);
  };
  const double coarse = half_mean_over_angles(nodes, n_lambda, exec, integrand);
  const double fine = half_mean_over_angles(nodes, 2 * n_lambda, exec, integrand);
  return {fine, std::abs(fine - coarse)};
}

double energy_trace_form(const InteractionKernel& kernel, const StationaryCovariance& cov) {
  double acc = 0.0;
  for (int k = cov.k_min; k <= cov.k_max; ++k) {
    acc += cov.cpp(cov.index(k), cov.index(k));
    for (int j = std::max(cov.k_min, k - kernel.support()); j <= std::min(cov.k_max, k + kernel.support()); ++j) {
      acc += kernel.coeff(k - j) * cov.cqq(cov.index(k), cov.index(j));
    }
  }
  return 0.5 * acc;
}

double transient_mean_energy(const InteractionKernel& kernel, const SpectralMeasure& measure,
                             const SpectralSet& set, double t, int n_lambda, Exec exec) {
  if (t < 0.0) throw std::invalid_argument("transient_mean_energy: t must be >= 0");
  guard_gap(kernel, measure, set);
  const auto nodes = measure.quadrature_nodes();
  for (const auto& node : nodes) guard_outside_spectrum(set, node.x);
  return half_mean_over_angles(nodes, n_lambda, exec, [&](double lambda, double x) {
    const double w = std::sqrt(kernel.dispersion(lambda));
    const double gp = x + w;
    const double gm = x - w;
    return (1.0 - std::cos(t * gp)) / (gp * gp) + (1.0 - std::cos(t * gm)) / (gm * gm);
  });
}

TransientVariance transient_site_variance(const InteractionKernel& kernel, const SpectralMeasure& measure,
                                          const SpectralSet& set, int offset, double t, int n_lambda) {
  guard_gap(kernel, measure, set);
  const int m = std::abs(offset);
  const double two_pi = 2.0 * std::numbers::pi;
  TransientVariance out;
  for (const auto& node : measure.quadrature_nodes()) {
    guard_outside_spectrum(set, node.x);
    const double x = node.x;
    double gc = 0.0, gs = 0.0, dgc = 0.0, dgs = 0.0;
    for (int j = 0; j < n_lambda; ++j) {
      const double lambda = two_pi * j / n_lambda;
      const double w2 = kernel.dispersion(lambda);
      const double w = std::sqrt(w2);
      const double denom = w2 - x * x;
      const double weight = std::cos(m * lambda) / denom;
      gc += weight * (std::cos(x * t) - std::cos(w * t));
      gs += weight * (std::sin(x * t) - (x / w) * std::sin(w * t));
      dgc += weight * (-x * std::sin(x * t) + w * std::sin(w * t));
      dgs += weight * (x * std::cos(x * t) - x * std::cos(w * t));
    }
    gc /= n_lambda;
    gs /= n_lambda;
    dgc /= n_lambda;
    dgs /= n_lambda;
    const bool has_sine = node.x > 0.0;
    out.var_q += node.weight * (gc * gc + (has_sine ? gs * gs : 0.0));
    out.var_p += node.weight * (dgc * dgc + (has_sine ? dgs * dgs : 0.0));
  }
  return out;
}

std::pair<std::complex<double>, std::complex<double>> stationary_mode_solution(
    const ForceRealization& force, double mode_frequency, int site, double mode_angle, double t) {
  const double w2 = mode_frequency * mode_frequency;
  double sum = 0.0, dsum = 0.0;
  for (const ForceTerm& term : force.terms()) {
    const double x = term.frequency;
    const double denom = w2 - x * x;
    if (std::abs(denom) < 1e-10) {
      throw Resonance("stationary_mode_solution: forcing frequency meets the mode frequency");
    }
    sum += (term.cos_amp * std::cos(x * t) + term.sin_amp * std::sin(x * t)) / denom;
    dsum += x * (-term.cos_amp * std::sin(x * t) + term.sin_amp * std::cos(x * t)) / denom;
  }
  const std::complex<double> phase = std::exp(std::complex<double>(0.0, site * mode_angle));
  return {phase * sum, phase * dsum};
}

}  // namespace oscchain
