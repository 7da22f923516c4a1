#include "geqw/state.hpp"

#include <cmath>
#include <stdexcept>

namespace geqw {

WalkerState make_localized_state(const Spinor& coin) {
  WalkerState state;
  state.offset = 0;
  state.up = Eigen::VectorXcd::Constant(1, coin(0));
  state.down = Eigen::VectorXcd::Constant(1, coin(1));
  state.time = 0;
  return state;
}

WalkerState make_gaussian_state(const GaussianInitParams& params,
                                const Spinor& coin) {
  if (!(params.sigma2 > 0.0) || !std::isfinite(params.sigma2)) {
    throw std::invalid_argument(
        "make_gaussian_state: sigma2 must be positive and finite "
        "(use make_localized_state for sigma2 = 0)");
  }
  long radius = params.truncation_radius;
  if (radius <= 0) {
    radius = static_cast<long>(std::ceil(6.0 * std::sqrt(params.sigma2)));
  }
  const long n = 2 * radius + 1;
  Eigen::VectorXd profile(n);
  for (long i = 0; i < n; ++i) {
    const double x = static_cast<double>(i - radius);
    profile(i) = std::exp(-x * x / (4.0 * params.sigma2));
  }
  profile /= profile.norm();

  WalkerState state;
  state.offset = -radius;
  state.up = profile.cast<Complex>() * coin(0);
  state.down = profile.cast<Complex>() * coin(1);
  state.time = 0;
  return state;
}

}  // namespace geqw
