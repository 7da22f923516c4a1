#pragma once

#include <Eigen/Dense>
#include <utility>

#include "geqw/state.hpp"

namespace geqw {

/// Reduced coin density matrix [[a, b], [conj(b), c]]; a + c = 1.
struct CoinDensityMatrix {
  double a = 1.0;
  Complex b = 0.0;
  double c = 0.0;
};

/// Result of an ordinary least-squares fit of log(series) vs log(t).
struct PowerLawFit {
  double exponent = 0.0;
  double stderr_ = 0.0;
  long t_min = 0;
  long t_max = 0;
  double r_squared = 0.0;
};

/// Late-time averaging window as a fraction of the series, default the
/// final half.
struct QuasiStationaryWindow {
  double start_fraction = 0.5;
};

/// Trace out the position: a = sum |c_up|^2, b = sum c_up conj(c_down),
/// c = sum |c_down|^2.
CoinDensityMatrix coin_density(const WalkerState& state);

/// Base-2 von Neumann entropy via the closed-form eigenvalues
/// lambda_pm = (1 pm sqrt(1 - 4(ac - |b|^2))) / 2, with 0 log 0 = 0.
double von_neumann_entropy(const CoinDensityMatrix& rho);

/// |b|, the magnitude of the coin coherence.
double coherence_abs(const CoinDensityMatrix& rho);

/// P(x) = |c_up(x)|^2 + |c_down(x)|^2 over the stored window.
Eigen::VectorXd position_distribution(const WalkerState& state);

/// Var = sum x^2 P - (sum x P)^2; positions start at `offset`.
double position_variance(const Eigen::VectorXd& p, long offset);

/// Inverse participation ratio 1 / sum P^2.
double ipr(const Eigen::VectorXd& p);

/// Trace distance (1/2)||rho1 - rho2||_1. The difference is traceless,
/// so both eigenvalues have magnitude sqrt(m11^2 + |m12|^2).
double trace_distance(const CoinDensityMatrix& r1, const CoinDensityMatrix& r2);

/// OLS fit of log(series) vs log(t) over t in [t_min, t_max]. series(i)
/// is the value at t = i (index 0 holds t = 0). All values inside the
/// window must be strictly positive and the window must hold at least
/// 10 points.
PowerLawFit fit_power_law(const Eigen::VectorXd& series, long t_min,
                          long t_max);

/// Same fit on geometrically binned data: the window is split into
/// log-spaced bins, each contributing the arithmetic mean of the series
/// values inside it. Robust against oscillation nulls in decaying
/// series; bins whose mean is not positive are dropped.
PowerLawFit fit_power_law_binned(const Eigen::VectorXd& series, long t_min,
                                 long t_max, int bins = 25);

/// Mean and sample standard deviation over the trailing window.
std::pair<double, double> time_average(const Eigen::VectorXd& series,
                                       const QuasiStationaryWindow& window);

}  // namespace geqw
