#include "geqw/step_sampler.hpp"

#include <cmath>
#include <stdexcept>

namespace geqw {

StepDistribution qexp_pmf(double q, long t) {
  if (t < 1) {
    throw std::invalid_argument("qexp_pmf: t must be >= 1");
  }
  if (std::isnan(q) || q < 0.5) {
    throw std::invalid_argument("qexp_pmf: q must be >= 0.5 or infinite");
  }

  StepDistribution dist;
  dist.q = q;
  dist.t = t;
  dist.pmf.resize(t);
  dist.cdf.resize(t);

  if (std::isinf(q)) {
    dist.pmf.setConstant(1.0 / static_cast<double>(t));
    dist.tau = 1.0 / static_cast<double>(t);
  } else if (std::abs(q - 1.0) < 1e-6) {
    // removable singularity of the exponent at q = 1
    Eigen::VectorXd logw(t);
    for (long i = 0; i < t; ++i) logw(i) = -static_cast<double>(i + 1);
    const double shift = logw.maxCoeff();
    dist.pmf = (logw.array() - shift).exp();
    const double sum = dist.pmf.sum();
    dist.pmf /= sum;
    dist.tau = std::exp(-(shift + std::log(sum)));
  } else {
    const double exponent = 1.0 / (1.0 - q);
    Eigen::VectorXd logw(t);
    double maxlog = -std::numeric_limits<double>::infinity();
    for (long i = 0; i < t; ++i) {
      const double base = 1.0 - (1.0 - q) * static_cast<double>(i + 1);
      if (base > 0.0) {
        logw(i) = exponent * std::log(base);
        maxlog = std::max(maxlog, logw(i));
      } else {
        logw(i) = -std::numeric_limits<double>::infinity();
      }
    }
    for (long i = 0; i < t; ++i) {
      dist.pmf(i) = std::isinf(logw(i)) ? 0.0 : std::exp(logw(i) - maxlog);
    }
    const double sum = dist.pmf.sum();
    dist.pmf /= sum;
    dist.tau = std::exp(-(maxlog + std::log(sum)));
  }

  double running = 0.0;
  for (long i = 0; i < t; ++i) {
    running += dist.pmf(i);
    dist.cdf(i) = running;
  }
  dist.cdf(t - 1) = 1.0;  // guard against rounding in the last entry
  return dist;
}

long sample_step(const StepDistribution& dist, SeededRng& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double u = unif(rng.engine);
  const double* begin = dist.cdf.data();
  const double* end = begin + dist.cdf.size();
  const double* it = std::lower_bound(begin, end, u);
  if (it == end) --it;
  return static_cast<long>(it - begin) + 1;
}

}  // namespace geqw
