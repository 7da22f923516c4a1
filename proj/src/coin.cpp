#include "geqw/coin.hpp"

#include <cmath>
#include <stdexcept>

namespace geqw {

namespace {
void check_angle(double value, const char* name) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument(std::string(name) + " must be finite");
  }
}
}  // namespace

CoinOperator coin_general(double theta, double beta, double gamma) {
  check_angle(theta, "theta");
  check_angle(beta, "beta");
  check_angle(gamma, "gamma");
  if (theta < 0.0 || theta > M_PI_2) {
    throw std::invalid_argument("theta must lie in [0, pi/2]");
  }
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const Complex eib = std::polar(1.0, beta);
  const Complex eig = std::polar(1.0, gamma);
  CoinOperator coin{theta, beta, gamma, {}};
  coin.entries << c, s * eib, s * eig, -c * eig * eib;
  return coin;
}

CoinOperator coin_kempe(double theta) {
  check_angle(theta, "theta");
  if (theta < 0.0 || theta > M_PI_2) {
    throw std::invalid_argument("theta must lie in [0, pi/2]");
  }
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  CoinOperator coin{theta, M_PI_2, M_PI_2, {}};
  coin.entries << Complex(c, 0), Complex(0, s), Complex(0, s), Complex(c, 0);
  return coin;
}

CoinOperator coin_hadamard() { return coin_general(M_PI_4, 0.0, 0.0); }

Spinor make_coin_state(const CoinBlochParams& params) {
  check_angle(params.omega, "omega");
  check_angle(params.phi, "phi");
  Spinor spinor;
  spinor << std::cos(params.omega / 2.0),
      std::polar(std::sin(params.omega / 2.0), params.phi);
  return spinor;
}

double orthey_phase(double omega) {
  check_angle(omega, "omega");
  double cot = std::cos(omega) / std::sin(omega);
  // tolerate rounding at the domain endpoints omega = pi/4, 3 pi/4
  if (std::abs(cot) > 1.0 && std::abs(cot) < 1.0 + 1e-9) {
    cot = std::copysign(1.0, cot);
  }
  if (!(cot >= -1.0 && cot <= 1.0)) {
    throw std::domain_error("orthey_phase: cot(omega) outside [-1, 1]");
  }
  return std::acos(-cot);
}

}  // namespace geqw
