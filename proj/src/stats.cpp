#include "oscchain/stats.hpp"

#include <algorithm>
#include <cmath>

#include "oscchain/errors.hpp"

namespace oscchain {

MeanStderr ensemble_mean(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n < 2) throw TooFew("ensemble_mean: need at least 2 values");
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / n;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  const double variance = ss / (n - 1);
  return {mean, std::sqrt(variance / n), n};
}

VarianceEstimate sample_variance(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n < 2) throw TooFew("sample_variance: need at least 2 values");
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / n;
  double m2 = 0.0, m4 = 0.0;
  for (double v : values) {
    const double d = v - mean;
    m2 += d * d;
    m4 += d * d * d * d;
  }
  const double variance = m2 / (n - 1);
  m2 /= n;
  m4 /= n;
  // Var(s^2) = (m4 - s^4 (n-3)/(n-1)) / n, clipped at zero for degenerate data.
  const double var_of_var = std::max(0.0, (m4 - variance * variance * (n - 3.0) / (n - 1.0)) / n);
  return {variance, std::sqrt(var_of_var), n};
}

SiteVariances variance_profile(const SiteSamples& samples) {
  if (samples.q.rows() < 100) throw TooFew("variance_profile: need at least 100 replicas");
  SiteVariances out;
  out.sites = samples.sites;
  const std::size_t n_sites = samples.sites.size();
  out.var_q.reserve(n_sites);
  out.var_p.reserve(n_sites);
  std::vector<double> column(samples.q.rows());
  for (std::size_t s = 0; s < n_sites; ++s) {
    for (Eigen::Index r = 0; r < samples.q.rows(); ++r) column[r] = samples.q(r, static_cast<Eigen::Index>(s));
    out.var_q.push_back(sample_variance(column));
    for (Eigen::Index r = 0; r < samples.p.rows(); ++r) column[r] = samples.p(r, static_cast<Eigen::Index>(s));
    out.var_p.push_back(sample_variance(column));
  }
  return out;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

KsResult ks_distance(std::span<const double> samples, double variance) {
  if (variance <= 0.0) throw DegenerateVariance("ks_distance: variance must be positive");
  if (samples.size() < 50) throw TooFew("ks_distance: need at least 50 samples");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  const double sigma = std::sqrt(variance);
  double distance = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double cdf = normal_cdf(sorted[i] / sigma);
    distance = std::max(distance, std::max(cdf - i / n, (i + 1) / n - cdf));
  }
  KsResult result;
  result.distance = distance;
  result.threshold = 1.63 / std::sqrt(n);
  result.n = sorted.size();
  result.below_threshold = distance < result.threshold;
  return result;
}

double sqrt_t_decay_statistic(const Trajectory& epsilon, double t_min, double t_max) {
  double sup = 0.0;
  for (std::size_t i = 0; i < epsilon.times.size(); ++i) {
    const double t = epsilon.times[i];
    if (t < t_min || t > t_max) continue;
    const double amp =
        std::max(epsilon.states[i].q.cwiseAbs().maxCoeff(), epsilon.states[i].p.cwiseAbs().maxCoeff());
    sup = std::max(sup, std::sqrt(t) * amp);
  }
  return sup;
}

}  // namespace oscchain
