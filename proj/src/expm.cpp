#include "oscchain/expm.hpp"

#include <cmath>

namespace oscchain {

Eigen::MatrixXd expm_dense(const Eigen::MatrixXd& m) {
  const Eigen::Index n = m.rows();
  const double norm = m.cwiseAbs().colwise().sum().maxCoeff();  // 1-norm
  int squarings = 0;
  double scale = 1.0;
  while (norm * scale >= 0.5) {
    ++squarings;
    scale *= 0.5;
  }
  const Eigen::MatrixXd a = m * scale;

  Eigen::MatrixXd result = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
  for (int k = 1; k <= 16; ++k) {
    term = (term * a) / static_cast<double>(k);
    result += term;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

}  // namespace oscchain
