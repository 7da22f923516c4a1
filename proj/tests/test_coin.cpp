#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "geqw/coin.hpp"

using namespace geqw;

namespace {
bool approx_eq(const Complex& z, const Complex& w, double tol = 1e-12) {
  return std::abs(z - w) < tol;
}
}  // namespace

TEST_CASE("coin_general examples") {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  SUBCASE("Hadamard at (pi/4, 0, 0)") {
    const auto coin = coin_general(M_PI_4, 0.0, 0.0);
    CHECK(approx_eq(coin.entries(0, 0), inv_sqrt2));
    CHECK(approx_eq(coin.entries(0, 1), inv_sqrt2));
    CHECK(approx_eq(coin.entries(1, 0), inv_sqrt2));
    CHECK(approx_eq(coin.entries(1, 1), -inv_sqrt2));
  }
  SUBCASE("theta = 0 gives diag(1, -1)") {
    const auto coin = coin_general(0.0, 0.0, 0.0);
    CHECK(approx_eq(coin.entries(0, 0), 1.0));
    CHECK(approx_eq(coin.entries(0, 1), 0.0));
    CHECK(approx_eq(coin.entries(1, 0), 0.0));
    CHECK(approx_eq(coin.entries(1, 1), -1.0));
  }
  SUBCASE("(pi/2, pi/2, pi/2) gives [[0,i],[i,0]]") {
    const auto coin = coin_general(M_PI_2, M_PI_2, M_PI_2);
    CHECK(approx_eq(coin.entries(0, 0), 0.0));
    CHECK(approx_eq(coin.entries(0, 1), Complex(0, 1)));
    CHECK(approx_eq(coin.entries(1, 0), Complex(0, 1)));
    CHECK(approx_eq(coin.entries(1, 1), 0.0));
  }
  SUBCASE("rejects bad input") {
    CHECK_THROWS_AS(coin_general(std::nan(""), 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(coin_general(-0.1, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(coin_general(2.0, 0, 0), std::invalid_argument);
  }
}

TEST_CASE("coin_kempe examples") {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  SUBCASE("theta = 0 is identity") {
    const auto coin = coin_kempe(0.0);
    CHECK(approx_eq(coin.entries(0, 0), 1.0));
    CHECK(approx_eq(coin.entries(1, 1), 1.0));
    CHECK(approx_eq(coin.entries(0, 1), 0.0));
  }
  SUBCASE("theta = pi/4") {
    const auto coin = coin_kempe(M_PI_4);
    CHECK(approx_eq(coin.entries(0, 0), inv_sqrt2));
    CHECK(approx_eq(coin.entries(0, 1), Complex(0, inv_sqrt2)));
    CHECK(approx_eq(coin.entries(1, 0), Complex(0, inv_sqrt2)));
    CHECK(approx_eq(coin.entries(1, 1), inv_sqrt2));
  }
  SUBCASE("theta = pi/2") {
    const auto coin = coin_kempe(M_PI_2);
    CHECK(approx_eq(coin.entries(0, 0), 0.0));
    CHECK(approx_eq(coin.entries(0, 1), Complex(0, 1)));
  }
  SUBCASE("matches coin_general(theta, pi/2, pi/2)") {
    for (double theta : {0.1, 0.5, 1.0, 1.4}) {
      const auto kempe = coin_kempe(theta);
      const auto general = coin_general(theta, M_PI_2, M_PI_2);
      CHECK((kempe.entries - general.entries).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("every constructed coin is unitary within 1e-12") {
  for (int i = 0; i <= 10; ++i) {
    for (int j = 0; j < 7; ++j) {
      for (int k = 0; k < 7; ++k) {
        const double theta = M_PI_2 * i / 10.0;
        const double beta = 2.0 * M_PI * j / 7.0;
        const double gamma = 2.0 * M_PI * k / 7.0;
        const auto coin = coin_general(theta, beta, gamma);
        const Eigen::Matrix2cd prod =
            coin.entries * coin.entries.adjoint();
        CHECK((prod - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() <
              1e-12);
      }
    }
    const auto kempe = coin_kempe(M_PI_2 * i / 10.0);
    const Eigen::Matrix2cd prod = kempe.entries * kempe.entries.adjoint();
    CHECK((prod - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("make_coin_state") {
  SUBCASE("poles and equator") {
    auto up = make_coin_state({0.0, 0.0});
    CHECK(approx_eq(up(0), 1.0));
    CHECK(approx_eq(up(1), 0.0));

    auto balanced = make_coin_state({M_PI_2, 0.0});
    CHECK(approx_eq(balanced(0), 1.0 / std::sqrt(2.0)));
    CHECK(approx_eq(balanced(1), 1.0 / std::sqrt(2.0)));

    auto down = make_coin_state({M_PI, 0.0});
    CHECK(std::abs(down(0)) < 1e-12);
    CHECK(approx_eq(down(1), 1.0));
  }
  SUBCASE("unit norm on a 100-point (omega, phi) grid") {
    for (int i = 0; i < 10; ++i) {
      for (int j = 0; j < 10; ++j) {
        const auto spinor =
            make_coin_state({M_PI * i / 9.0, 2.0 * M_PI * j / 10.0});
        CHECK(std::abs(spinor.norm() - 1.0) < 1e-12);
      }
    }
  }
  SUBCASE("relative phase is e^{i phi}") {
    const auto spinor = make_coin_state({M_PI_2, M_PI_2});
    CHECK(approx_eq(spinor(1), Complex(0, 1.0 / std::sqrt(2.0))));
  }
}

TEST_CASE("orthey_phase") {
  CHECK(orthey_phase(M_PI_2) == doctest::Approx(M_PI_2).epsilon(1e-12));
  CHECK(orthey_phase(M_PI / 3.0) ==
        doctest::Approx(0.6959132760153038 * M_PI).epsilon(1e-9));
  CHECK(orthey_phase(M_PI_4) == doctest::Approx(M_PI).epsilon(1e-12));

  SUBCASE("out of domain") {
    CHECK_THROWS_AS(orthey_phase(0.1), std::domain_error);
    CHECK_THROWS_AS(orthey_phase(3.0), std::domain_error);
  }
  SUBCASE("cos(orthey_phase(omega)) = -cot(omega) across the domain") {
    for (int i = 0; i <= 50; ++i) {
      const double omega = M_PI_4 + (M_PI_2)*i / 50.0;
      const double cot = std::cos(omega) / std::sin(omega);
      if (cot < -1.0 || cot > 1.0) continue;
      CHECK(std::abs(std::cos(orthey_phase(omega)) + cot) < 1e-12);
    }
  }
}
