#include "geqw/observables.hpp"

#include <cmath>
#include <stdexcept>

namespace geqw {

CoinDensityMatrix coin_density(const WalkerState& state) {
  CoinDensityMatrix rho;
  rho.a = state.up.squaredNorm();
  rho.c = state.down.squaredNorm();
  rho.b = state.down.dot(state.up);  // sum of c_up conj(c_down)
  return rho;
}

namespace {
double entropy_term(double lambda) {
  return lambda > 0.0 ? -lambda * std::log2(lambda) : 0.0;
}
}  // namespace

double von_neumann_entropy(const CoinDensityMatrix& rho) {
  double radicand = 1.0 - 4.0 * (rho.a * rho.c - std::norm(rho.b));
  if (radicand < 0.0) {
    if (radicand < -1e-12) {
      throw std::invalid_argument(
          "von_neumann_entropy: density matrix not positive semidefinite");
    }
    radicand = 0.0;
  }
  double root = std::sqrt(radicand);
  if (root > 1.0) {
    // an eigenvalue outside [0, 1] means |b|^2 > a c upstream
    if (root > 1.0 + 1e-12) {
      throw std::invalid_argument(
          "von_neumann_entropy: density matrix not positive semidefinite");
    }
    root = 1.0;
  }
  const double lp = 0.5 * (1.0 + root);
  const double lm = 0.5 * (1.0 - root);
  return entropy_term(lp) + entropy_term(lm);
}

double coherence_abs(const CoinDensityMatrix& rho) { return std::abs(rho.b); }

Eigen::VectorXd position_distribution(const WalkerState& state) {
  return state.up.cwiseAbs2() + state.down.cwiseAbs2();
}

double position_variance(const Eigen::VectorXd& p, long offset) {
  double mean = 0.0;
  double second = 0.0;
  for (long i = 0; i < p.size(); ++i) {
    const double x = static_cast<double>(offset + i);
    mean += x * p(i);
    second += x * x * p(i);
  }
  return second - mean * mean;
}

double ipr(const Eigen::VectorXd& p) { return 1.0 / p.squaredNorm(); }

double trace_distance(const CoinDensityMatrix& r1,
                      const CoinDensityMatrix& r2) {
  const double m11 = r1.a - r2.a;
  const Complex m12 = r1.b - r2.b;
  return std::sqrt(m11 * m11 + std::norm(m12));
}

namespace {
PowerLawFit ols_loglog(const std::vector<double>& logt,
                       const std::vector<double>& logv, long t_min,
                       long t_max) {
  const auto n = static_cast<double>(logt.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < logt.size(); ++i) {
    sx += logt[i];
    sy += logv[i];
    sxx += logt[i] * logt[i];
    sxy += logt[i] * logv[i];
  }
  const double denom = n * sxx - sx * sx;
  const double slope = (n * sxy - sx * sy) / denom;
  const double intercept = (sy - slope * sx) / n;

  double ss_res = 0, ss_tot = 0;
  const double ybar = sy / n;
  for (std::size_t i = 0; i < logt.size(); ++i) {
    const double fit = intercept + slope * logt[i];
    ss_res += (logv[i] - fit) * (logv[i] - fit);
    ss_tot += (logv[i] - ybar) * (logv[i] - ybar);
  }
  PowerLawFit result;
  result.exponent = slope;
  result.t_min = t_min;
  result.t_max = t_max;
  result.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  if (logt.size() > 2) {
    const double var_slope = (ss_res / (n - 2.0)) / (sxx - sx * sx / n);
    result.stderr_ = std::sqrt(std::max(var_slope, 0.0));
  }
  return result;
}
}  // namespace

PowerLawFit fit_power_law(const Eigen::VectorXd& series, long t_min,
                          long t_max) {
  if (t_min < 1 || t_max > series.size() - 1 || t_max - t_min + 1 < 10) {
    throw std::invalid_argument("fit_power_law: window invalid or too short");
  }
  std::vector<double> logt, logv;
  for (long t = t_min; t <= t_max; ++t) {
    if (!(series(t) > 0.0)) {
      throw std::invalid_argument(
          "fit_power_law: series must be strictly positive on the window");
    }
    logt.push_back(std::log(static_cast<double>(t)));
    logv.push_back(std::log(series(t)));
  }
  return ols_loglog(logt, logv, t_min, t_max);
}

PowerLawFit fit_power_law_binned(const Eigen::VectorXd& series, long t_min,
                                 long t_max, int bins) {
  if (t_min < 1 || t_max > series.size() - 1 || t_max <= t_min || bins < 3) {
    throw std::invalid_argument("fit_power_law_binned: window invalid");
  }
  const double la = std::log(static_cast<double>(t_min));
  const double lb = std::log(static_cast<double>(t_max) + 1.0);
  std::vector<double> logt, logv;
  for (int b = 0; b < bins; ++b) {
    const long lo = static_cast<long>(
        std::ceil(std::exp(la + (lb - la) * b / bins)));
    const long hi = static_cast<long>(
        std::ceil(std::exp(la + (lb - la) * (b + 1) / bins)) - 1);
    double sum = 0.0, tsum = 0.0;
    long count = 0;
    for (long t = std::max(lo, t_min); t <= std::min(hi, t_max); ++t) {
      sum += series(t);
      tsum += std::log(static_cast<double>(t));
      ++count;
    }
    if (count == 0 || !(sum > 0.0)) continue;
    logt.push_back(tsum / count);
    logv.push_back(std::log(sum / count));
  }
  if (logt.size() < 3) {
    throw std::invalid_argument("fit_power_law_binned: too few usable bins");
  }
  return ols_loglog(logt, logv, t_min, t_max);
}

std::pair<double, double> time_average(const Eigen::VectorXd& series,
                                       const QuasiStationaryWindow& window) {
  if (!(window.start_fraction > 0.0) || !(window.start_fraction < 1.0)) {
    throw std::invalid_argument("time_average: start_fraction not in (0,1)");
  }
  const long n = series.size();
  const long start = static_cast<long>(window.start_fraction * n);
  const long count = n - start;
  if (count < 1) {
    throw std::invalid_argument("time_average: empty window");
  }
  const double mean = series.tail(count).mean();
  double ss = 0.0;
  for (long i = start; i < n; ++i) {
    ss += (series(i) - mean) * (series(i) - mean);
  }
  const double stdev = count > 1 ? std::sqrt(ss / (count - 1)) : 0.0;
  return {mean, stdev};
}

}  // namespace geqw
