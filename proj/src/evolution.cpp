#include "geqw/evolution.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

namespace geqw {

WalkerState step(const WalkerState& state, const CoinOperator& coin,
                 long delta) {
  if (delta < 1) {
    throw std::invalid_argument("step: delta must be >= 1");
  }
  const long n = state.size();
  const long m = n + 2 * delta;
  const auto& u = coin.entries;

  WalkerState next;
  next.offset = state.offset - delta;
  next.time = state.time + 1;
  next.up.resize(m);
  next.down.resize(m);
  // spin-up gathers from x - delta, spin-down from x + delta; only the
  // freshly exposed edges need zeroing
  next.up.head(2 * delta).setZero();
  next.up.segment(2 * delta, n) = u(0, 0) * state.up + u(0, 1) * state.down;
  next.down.head(n) = u(1, 0) * state.up + u(1, 1) * state.down;
  next.down.tail(2 * delta).setZero();
  return next;
}

WalkerState make_initial_state(const WalkConfig& config) {
  const Spinor coin_state = make_coin_state(config.bloch);
  if (config.sigma2 > 0.0) {
    return make_gaussian_state({config.sigma2, 0}, coin_state);
  }
  return make_localized_state(coin_state);
}

namespace {
// single fused pass over the window; equivalent to coin_density +
// position_distribution + position_variance + ipr (checked in tests)
void record_observables(const WalkerState& state, long t, RunRecord& rec,
                        CoinDensityMatrix& prev_rho) {
  const Complex* up = state.up.data();
  const Complex* down = state.down.data();
  const long n = state.size();
  double a = 0.0, c = 0.0;
  Complex b = 0.0;
  double m1 = 0.0, m2 = 0.0, p2 = 0.0;
  for (long i = 0; i < n; ++i) {
    const double pu = std::norm(up[i]);
    const double pd = std::norm(down[i]);
    const double p = pu + pd;
    const double x = static_cast<double>(state.offset + i);
    a += pu;
    c += pd;
    b += up[i] * std::conj(down[i]);
    m1 += x * p;
    m2 += x * x * p;
    p2 += p * p;
  }
  const CoinDensityMatrix rho{a, b, c};
  rec.entropy(t) = von_neumann_entropy(rho);
  rec.coherence(t) = coherence_abs(rho);
  rec.variance(t) = m2 - m1 * m1;
  rec.ipr(t) = 1.0 / p2;
  rec.trace_dist(t) = t == 0 ? 0.0 : trace_distance(rho, prev_rho);
  prev_rho = rho;
}
}  // namespace

RunRecord run_trajectory(const WalkConfig& config, long run_index) {
  if (config.total_steps < 1) {
    throw std::invalid_argument("run_trajectory: total_steps must be >= 1");
  }
  const long T = config.total_steps;
  RunRecord rec;
  rec.seed = config.base_seed + static_cast<std::uint64_t>(run_index);
  rec.steps.reserve(T);
  rec.entropy.resize(T + 1);
  rec.variance.resize(T + 1);
  rec.coherence.resize(T + 1);
  rec.ipr.resize(T + 1);
  rec.trace_dist.resize(T + 1);

  SeededRng rng(rec.seed);
  WalkerState state = make_initial_state(config);
  CoinDensityMatrix prev_rho;
  record_observables(state, 0, rec, prev_rho);

  for (long t = 1; t <= T; ++t) {
    const StepDistribution dist = qexp_pmf(config.step_q, t);
    const long delta = sample_step(dist, rng);
    rec.steps.push_back(delta);
    state = step(state, config.coin, delta);
    record_observables(state, t, rec, prev_rho);
  }
  return rec;
}

namespace {
void aggregate(const std::vector<RunRecord>& runs,
               Eigen::VectorXd RunRecord::*series, Eigen::VectorXd& mean,
               Eigen::VectorXd& stdev) {
  const long n = (runs.front().*series).size();
  const double k = static_cast<double>(runs.size());
  mean = Eigen::VectorXd::Zero(n);
  for (const auto& run : runs) mean += run.*series;
  mean /= k;
  stdev = Eigen::VectorXd::Zero(n);
  if (runs.size() > 1) {
    for (const auto& run : runs) {
      stdev += (run.*series - mean).cwiseAbs2();
    }
    stdev = (stdev / (k - 1.0)).cwiseSqrt();
  }
}
}  // namespace

EnsembleResult run_ensemble(const WalkConfig& config, int n_threads) {
  if (config.ensemble_size < 1) {
    throw std::invalid_argument("run_ensemble: ensemble_size must be >= 1");
  }
  const long n = config.ensemble_size;
  EnsembleResult result;
  result.runs.resize(n);

  int workers = n_threads > 0
                    ? n_threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::max(1, std::min<int>(workers, static_cast<int>(n)));

  if (workers == 1) {
    for (long i = 0; i < n; ++i) {
      result.runs[i] = run_trajectory(config, i);
    }
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (long i = w; i < n; i += workers) {
          result.runs[i] = run_trajectory(config, i);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  aggregate(result.runs, &RunRecord::entropy, result.entropy_mean,
            result.entropy_std);
  aggregate(result.runs, &RunRecord::variance, result.variance_mean,
            result.variance_std);
  aggregate(result.runs, &RunRecord::coherence, result.coherence_mean,
            result.coherence_std);
  aggregate(result.runs, &RunRecord::ipr, result.ipr_mean, result.ipr_std);
  aggregate(result.runs, &RunRecord::trace_dist, result.trace_dist_mean,
            result.trace_dist_std);
  return result;
}

}  // namespace geqw
