#pragma once

#include <Eigen/Dense>

#include "geqw/coin.hpp"

namespace geqw {

/// Walker state on a dense contiguous window of the 1-D lattice.
/// Site x is stored at index x - offset; up and down always have the
/// same length and the total norm is 1.
struct WalkerState {
  long offset = 0;          // lattice index of the leftmost stored site
  Eigen::VectorXcd up;      // spin-up amplitudes over the window
  Eigen::VectorXcd down;    // spin-down amplitudes over the window
  long time = 0;            // step counter

  long size() const { return up.size(); }
  double norm_squared() const { return up.squaredNorm() + down.squaredNorm(); }
};

/// Gaussian initial position profile, amplitude ~ exp(-x^2 / 4 sigma^2).
struct GaussianInitParams {
  double sigma2 = 0.0;          // initial position variance, > 0
  long truncation_radius = 0;   // 0 means auto: ceil(6 * sigma)
};

/// Walker fully localized at x = 0 with the given coin spinor.
WalkerState make_localized_state(const Spinor& coin);

/// Gaussian-delocalized walker with the given coin spinor. The stored
/// window is [-R, R] with R = truncation_radius (default ceil(6 sigma),
/// leaving truncated tail mass below 1e-8); the profile is renormalized
/// numerically to unit norm.
WalkerState make_gaussian_state(const GaussianInitParams& params,
                                const Spinor& coin);

}  // namespace geqw
