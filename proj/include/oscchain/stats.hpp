#pragma once

#include <span>
#include <vector>

#include "oscchain/ensemble.hpp"

namespace oscchain {

struct MeanStderr {
  double mean = 0.0;
  double stderr = 0.0;
  std::size_t n = 0;
};

// Unbiased mean and its standard error; TooFew below 2 values.
MeanStderr ensemble_mean(std::span<const double> values);

struct VarianceEstimate {
  double variance = 0.0;
  double stderr = 0.0;  // fourth-moment formula, no normality assumed
  std::size_t n = 0;
};

VarianceEstimate sample_variance(std::span<const double> values);

// Per-site variances of q and p across replicas; TooFew below 100 replicas.
struct SiteVariances {
  std::vector<int> sites;
  std::vector<VarianceEstimate> var_q;
  std::vector<VarianceEstimate> var_p;
};

SiteVariances variance_profile(const SiteSamples& samples);

// Kolmogorov-Smirnov distance against the centered normal with the given
// variance, with the asymptotic 1% critical value 1.63/sqrt(n).
// DegenerateVariance when variance <= 0, TooFew below 50 samples.
struct KsResult {
  double distance = 0.0;
  double threshold = 0.0;
  std::size_t n = 0;
  bool below_threshold = false;
};

KsResult ks_distance(std::span<const double> samples, double variance);

double normal_cdf(double z);  // standard normal

// sup over sampled times in [t_min, t_max] of sqrt(t) * max_k |eps_k(t)|,
// with the max taken over both deviation and momentum components.
double sqrt_t_decay_statistic(const Trajectory& epsilon, double t_min, double t_max);

}  // namespace oscchain
