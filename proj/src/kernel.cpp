#include "oscchain/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "oscchain/errors.hpp"

namespace oscchain {

InteractionKernel::InteractionKernel(std::vector<double> half_coeffs) : half_(std::move(half_coeffs)) {
  if (half_.empty()) throw std::invalid_argument("InteractionKernel: empty coefficient list");
  while (half_.size() > 1 && half_.back() == 0.0) half_.pop_back();
}

double InteractionKernel::coeff(int k) const {
  const int a = std::abs(k);
  return a <= support() ? half_[a] : 0.0;
}

double InteractionKernel::dispersion(double lambda) const {
  double value = half_[0];
  for (int k = 1; k <= support(); ++k) value += 2.0 * half_[k] * std::cos(k * lambda);
  return value;
}

double InteractionKernel::dispersion_derivative(double lambda) const {
  double value = 0.0;
  for (int k = 1; k <= support(); ++k) value -= 2.0 * k * half_[k] * std::sin(k * lambda);
  return value;
}

SpectralSet spectral_set(const InteractionKernel& kernel, int grid_points) {
  const int K = kernel.support();
  if (grid_points < 4 * K + 4) throw std::invalid_argument("spectral_set: grid too coarse for kernel support");

  // The symbol is even, so [0, pi] covers the full range. Candidate extrema:
  // the interval ends plus every bisected sign change of the derivative.
  std::vector<double> candidates{0.0, std::numbers::pi};
  const double step = std::numbers::pi / grid_points;
  double prev_lambda = 0.0;
  double prev_slope = kernel.dispersion_derivative(0.0);
  for (int j = 1; j <= grid_points; ++j) {
    const double lambda = step * j;
    const double slope = kernel.dispersion_derivative(lambda);
    if ((prev_slope < 0.0 && slope > 0.0) || (prev_slope > 0.0 && slope < 0.0)) {
      double lo = prev_lambda, hi = lambda;
      double flo = prev_slope;
      while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = kernel.dispersion_derivative(mid);
        if ((flo < 0.0) == (fmid < 0.0)) {
          lo = mid;
          flo = fmid;
        } else {
          hi = mid;
        }
      }
      candidates.push_back(0.5 * (lo + hi));
    } else if (slope == 0.0) {
      candidates.push_back(lambda);
    }
    prev_lambda = lambda;
    prev_slope = slope;
  }

  SpectralSet set;
  set.e1 = std::numeric_limits<double>::infinity();
  set.e2 = -std::numeric_limits<double>::infinity();
  for (double lambda : candidates) {
    const double value = kernel.dispersion(lambda);
    if (value < set.e1) {
      set.e1 = value;
      set.argmin_lambda = lambda;
    }
    if (value > set.e2) {
      set.e2 = value;
      set.argmax_lambda = lambda;
    }
  }
  if (set.e1 <= 0.0) {
    std::ostringstream msg;
    msg << "spectral_set: dispersion symbol reaches " << set.e1 << " at lambda = " << set.argmin_lambda;
    throw PositivityViolation(msg.str());
  }
  return set;
}

std::complex<double> SymbolPolynomial::eval_at(std::complex<double> z) const {
  std::complex<double> acc = 0.0;
  for (double c : coeffs) acc = acc * z + c;
  return acc;
}

SymbolPolynomial symbol_polynomial(const InteractionKernel& kernel, double x) {
  const int K = kernel.support();
  if (K == 0) throw DegenerateSupport("symbol_polynomial: K = 0 has no polynomial; use the constant-symbol path");
  SymbolPolynomial poly;
  poly.degree = 2 * K;
  poly.frequency = x;
  poly.coeffs.resize(2 * K + 1);
  for (int j = 1; j <= K; ++j) {
    poly.coeffs[K - j] = kernel.coeff(j);  // z^{K+j}
    poly.coeffs[K + j] = kernel.coeff(j);  // z^{K-j}
  }
  poly.coeffs[K] = kernel.coeff(0) - x * x;
  return poly;
}

Eigen::MatrixXd coupling_matrix(const InteractionKernel& kernel, int n, Boundary boundary) {
  const int K = kernel.support();
  if (n <= 2 * K) throw TooSmall("coupling_matrix: need n > 2K");
  Eigen::MatrixXd V = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (boundary == Boundary::free) {
        V(i, j) = kernel.coeff(i - j);
      } else {
        int d = (i - j) % n;
        if (d < 0) d += n;
        // n > 2K: at most one of {d, d-n} lies in the support.
        V(i, j) = kernel.coeff(d) + (d > 0 ? kernel.coeff(d - n) : 0.0);
      }
    }
  }
  return V;
}

}  // namespace oscchain
