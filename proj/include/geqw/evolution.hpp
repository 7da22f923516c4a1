#pragma once

#include <cstdint>
#include <vector>

#include "geqw/coin.hpp"
#include "geqw/observables.hpp"
#include "geqw/state.hpp"
#include "geqw/step_sampler.hpp"

namespace geqw {

/// Full parameter set of one walk: coin, step statistics, initial state
/// and ensemble bookkeeping. sigma2 = 0 selects a localized walker.
struct WalkConfig {
  CoinOperator coin = coin_hadamard();
  double step_q = 0.5;
  long total_steps = 1000;
  CoinBlochParams bloch;        // initial coin state
  double sigma2 = 0.0;          // initial position variance
  std::uint64_t base_seed = 0;
  long ensemble_size = 50;
};

/// One trajectory: the sampled step sequence plus per-step observable
/// series, all indexed by t = 0..T (steps has length T). The trace
/// distance entry at index t holds D(rho_c(t), rho_c(t-1)), 0 at t = 0.
struct RunRecord {
  std::uint64_t seed = 0;
  std::vector<long> steps;
  Eigen::VectorXd entropy;
  Eigen::VectorXd variance;
  Eigen::VectorXd coherence;
  Eigen::VectorXd ipr;
  Eigen::VectorXd trace_dist;
};

/// Ensemble aggregate: per-t sample mean and standard deviation of each
/// series, independent of evaluation order, plus the individual records.
struct EnsembleResult {
  Eigen::VectorXd entropy_mean, entropy_std;
  Eigen::VectorXd variance_mean, variance_std;
  Eigen::VectorXd coherence_mean, coherence_std;
  Eigen::VectorXd ipr_mean, ipr_std;
  Eigen::VectorXd trace_dist_mean, trace_dist_std;
  std::vector<RunRecord> runs;
};

/// One gEQW step: coin mixing followed by a shift of size delta. The
/// stored window grows by delta on each side; reads only t-1 amplitudes
/// (double buffered), so aliasing is impossible. Norm preserving.
WalkerState step(const WalkerState& state, const CoinOperator& coin,
                 long delta);

/// Initial state from the config (localized or Gaussian).
WalkerState make_initial_state(const WalkConfig& config);

/// Run one trajectory with seed = base_seed + run_index, recording all
/// observables at every t including t = 0. Pure function of
/// (config, run_index).
RunRecord run_trajectory(const WalkConfig& config, long run_index);

/// Run ensemble_size independent trajectories and aggregate. Threads
/// split the runs; results are identical for any worker count.
EnsembleResult run_ensemble(const WalkConfig& config, int n_threads = 0);

}  // namespace geqw
