#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace oscchain {

// Symmetric finite-support interaction kernel a(-K..K), stored as the half
// sequence {a(0), ..., a(K)} with a(K) != 0 unless K == 0 (trailing zeros are
// trimmed on construction, so K is always tight).
class InteractionKernel {
 public:
  explicit InteractionKernel(std::vector<double> half_coeffs);

  int support() const { return static_cast<int>(half_.size()) - 1; }  // K
  double coeff(int k) const;                                          // a(k), zero beyond K
  const std::vector<double>& half_coeffs() const { return half_; }

  // Dispersion symbol: a(0) + 2 sum_{k=1..K} a(k) cos(k lambda). Real-valued,
  // even, 2pi-periodic.
  double dispersion(double lambda) const;
  double dispersion_derivative(double lambda) const;

 private:
  std::vector<double> half_;
};

// Range [e1, e2] of the dispersion symbol, plus the angles where the extrema
// are attained.
struct SpectralSet {
  double e1 = 0.0;
  double e2 = 0.0;
  double argmin_lambda = 0.0;
  double argmax_lambda = 0.0;
};

// Scans grid_points angles on [0, pi], refines every derivative sign change by
// bisection to 1e-12, and certifies positivity. Throws PositivityViolation
// when min omega^2 <= 0 (message carries the offending angle).
SpectralSet spectral_set(const InteractionKernel& kernel, int grid_points = 4096);

// Laurent symbol cleared to a polynomial: coefficients of
//   a(K) z^{2K} + ... + (a(0) - x^2) z^K + ... + a(K),
// stored highest power first. Palindromic by construction.
struct SymbolPolynomial {
  int degree = 0;                // 2K
  std::vector<double> coeffs;    // size 2K+1, coeffs[i] multiplies z^{2K-i}
  double frequency = 0.0;        // x

  std::complex<double> eval_at(std::complex<double> z) const;  // Horner
};

SymbolPolynomial symbol_polynomial(const InteractionKernel& kernel, double x);  // DegenerateSupport if K == 0

enum class Boundary { periodic, free };

// Finite coupling matrix: circulant wrap for periodic, banded Toeplitz cut for
// free. Requires n > 2K.
Eigen::MatrixXd coupling_matrix(const InteractionKernel& kernel, int n, Boundary boundary);

}  // namespace oscchain
