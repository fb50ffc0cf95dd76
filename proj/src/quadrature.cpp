#include "oscchain/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace oscchain {

double periodic_trapezoid(const std::function<double(double)>& f, int n_points) {
  if (n_points < 2) throw std::invalid_argument("periodic_trapezoid: need at least 2 points");
  const double two_pi = 2.0 * std::numbers::pi;
  double sum = 0.0;
  for (int j = 0; j < n_points; ++j) {
    sum += f(two_pi * j / n_points);
  }
  return sum * two_pi / n_points;
}

namespace {

GaussLegendre compute_gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("GaussLegendre: order must be positive");
  GaussLegendre gl;
  gl.nodes.resize(n);
  gl.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double step = p1 / dp;
      x -= step;
      if (std::abs(step) < 1e-15) break;
    }
    gl.nodes[i] = -x;
    gl.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    gl.weights[i] = w;
    gl.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) gl.nodes[n / 2] = 0.0;
  return gl;
}

}  // namespace

const GaussLegendre& GaussLegendre::order(int n) {
  static std::map<int, GaussLegendre> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
  return it->second;
}

GaussLegendre GaussLegendre::mapped_to(double a, double b) const {
  GaussLegendre out;
  const double mid = 0.5 * (a + b);
  const double scale = 0.5 * (b - a);
  out.nodes.reserve(nodes.size());
  out.weights.reserve(weights.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out.nodes.push_back(mid + scale * nodes[i]);
    out.weights.push_back(scale * weights[i]);
  }
  return out;
}

double simpson(const std::function<double(double)>& f, double a, double b, int intervals) {
  if (intervals < 2) intervals = 2;
  if (intervals % 2 == 1) ++intervals;
  const double h = (b - a) / intervals;
  double sum = f(a) + f(b);
  for (int i = 1; i < intervals; ++i) {
    sum += f(a + h * i) * (i % 2 == 1 ? 4.0 : 2.0);
  }
  return sum * h / 3.0;
}

}  // namespace oscchain
