#pragma once

#include <Eigen/Dense>
#include <complex>

namespace geqw {

using Complex = std::complex<double>;
using Spinor = Eigen::Vector2cd;

/// 2x2 unitary coin, parameterized by the mixing angle theta and two
/// phase angles beta, gamma. The matrix entries are materialized once
/// at construction.
struct CoinOperator {
  double theta = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  Eigen::Matrix2cd entries;
};

/// General U(2) coin
///   [[cos t,        sin t e^{i b}          ],
///    [sin t e^{i g}, -cos t e^{i (g + b)}  ]]
/// Requires theta in [0, pi/2] and finite angles.
CoinOperator coin_general(double theta, double beta, double gamma);

/// Kempe coin [[cos t, i sin t], [i sin t, cos t]].
CoinOperator coin_kempe(double theta);

/// Hadamard coin, coin_general(pi/4, 0, 0).
CoinOperator coin_hadamard();

/// Bloch-sphere parameterization of an initial coin state.
struct CoinBlochParams {
  double omega = 0.0;  // polar angle in [0, pi]
  double phi = 0.0;    // relative phase in [0, 2*pi)
};

/// Initial coin spinor cos(Omega/2)|up> + e^{i phi} sin(Omega/2)|down>.
/// The relative phase enters as e^{i phi}; with this convention the
/// relation phi = orthey_phase(omega) yields maximal asymptotic
/// entanglement for wide Gaussian initial states (Hadamard walk).
Spinor make_coin_state(const CoinBlochParams& params);

/// Phase angle phi = arccos(-cot Omega) of the maximal-entanglement
/// relation cos(phi) = -cot(Omega). Defined for Omega in [pi/4, 3*pi/4];
/// outside that range cot(Omega) leaves [-1, 1] and there is no real
/// solution (std::domain_error).
double orthey_phase(double omega);

}  // namespace geqw
