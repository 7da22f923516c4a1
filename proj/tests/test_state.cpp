#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "geqw/observables.hpp"
#include "geqw/state.hpp"

using namespace geqw;

TEST_CASE("make_localized_state") {
  const auto up_only = make_localized_state(Spinor(1.0, 0.0));
  CHECK(up_only.size() == 1);
  CHECK(up_only.offset == 0);
  CHECK(up_only.time == 0);
  CHECK(std::abs(up_only.up(0) - Complex(1.0)) < 1e-15);
  CHECK(std::abs(up_only.down(0)) < 1e-15);

  const double r = 1.0 / std::sqrt(2.0);
  const auto balanced = make_localized_state(Spinor(r, r));
  CHECK(std::abs(balanced.up(0).real() - r) < 1e-15);
  CHECK(std::abs(balanced.down(0).real() - r) < 1e-15);
  CHECK(std::abs(balanced.norm_squared() - 1.0) < 1e-10);
}

TEST_CASE("make_gaussian_state") {
  const Spinor coin(1.0, 0.0);

  SUBCASE("rejects sigma2 <= 0") {
    CHECK_THROWS_AS(make_gaussian_state({0.0, 0}, coin),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_gaussian_state({-1.0, 0}, coin),
                    std::invalid_argument);
  }

  SUBCASE("unit norm for a spread of variances") {
    for (double sigma2 : {1e-4, 0.5, 10.0, 100.0, 1000.0}) {
      const auto state = make_gaussian_state({sigma2, 0}, coin);
      CHECK(std::abs(state.norm_squared() - 1.0) < 1e-10);
    }
  }

  SUBCASE("tiny sigma2 concentrates at the origin") {
    const auto state = make_gaussian_state({1e-4, 0}, coin);
    const auto p = position_distribution(state);
    // total variation distance to the point mass at x = 0
    double tv = 0.0;
    for (long i = 0; i < p.size(); ++i) {
      const long x = state.offset + i;
      tv += std::abs(p(i) - (x == 0 ? 1.0 : 0.0));
    }
    CHECK(tv / 2.0 < 1e-6);
  }

  SUBCASE("profile variance matches sigma2 within 2% for sigma2 >= 10") {
    for (double sigma2 : {10.0, 100.0, 1000.0}) {
      const auto state = make_gaussian_state({sigma2, 0}, coin);
      const double var =
          position_variance(position_distribution(state), state.offset);
      CHECK(std::abs(var - sigma2) / sigma2 < 0.02);
    }
  }

  SUBCASE("window covers [-6 sigma, 6 sigma]") {
    const auto state = make_gaussian_state({100.0, 0}, coin);
    CHECK(state.offset == -60);
    CHECK(state.size() == 121);
  }
}
