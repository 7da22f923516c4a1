#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <limits>
#include <random>

namespace geqw {

/// Sentinel for the q -> infinity (uniform step) limit.
inline constexpr double kQInfinity = std::numeric_limits<double>::infinity();

/// Fixed deterministic PRNG; identical seeds give identical step
/// sequences on every platform. Ensemble run i uses seed base_seed + i.
struct SeededRng {
  explicit SeededRng(std::uint64_t seed) : seed(seed), engine(seed) {}
  std::uint64_t seed;
  std::mt19937_64 engine;
};

/// Discretized q-exponential PMF over step sizes delta in {1, ..., t}:
///   weight(delta) = [1 - (1-q) delta]^{1/(1-q)}  where positive, else 0,
/// with the q = 1 limit e^{-delta} and the q = infinity limit uniform.
/// pmf is normalized; cdf holds the running sums for inverse-CDF sampling.
struct StepDistribution {
  double q = 0.5;
  long t = 1;
  Eigen::VectorXd pmf;   // pmf(i) = Pr(delta = i + 1)
  Eigen::VectorXd cdf;   // cumulative sums of pmf
  double tau = 1.0;      // normalization, 1 / (sum of raw weights)
};

/// Build the step-size distribution at time step t. Rejects q < 0.5
/// (outside the studied range) and t < 1. Weights are evaluated in
/// log space so that the large exponents near q = 0.5 do not underflow.
StepDistribution qexp_pmf(double q, long t);

/// Draw one step size by inverse-CDF lookup, O(log t).
long sample_step(const StepDistribution& dist, SeededRng& rng);

}  // namespace geqw
