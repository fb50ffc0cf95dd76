#pragma once

#include <Eigen/Dense>

namespace oscchain {

// Dense matrix exponential by scaling-and-squaring with a degree-16 Taylor
// core; the scaling count keeps ||M||_1 / 2^s below 0.5. Serial reference
// path, deliberately independent of the spectral propagator it cross-checks.
Eigen::MatrixXd expm_dense(const Eigen::MatrixXd& m);

}  // namespace oscchain
