#include <cmath>
#include <numbers>

#include "doctest.h"
#include "dkg/angular.hpp"
#include "dkg/errors.hpp"
#include "support/generators.hpp"

using namespace dkg;
using angular::Reflection;
using std::numbers::pi;

namespace {
const Parity P = Parity::Even;
const Parity M = Parity::Odd;
}  // namespace

TEST_CASE("theta_1 closed forms") {
  const auto c0 = DunklConfig::uniform(3, 0.0);
  CHECK(angular::theta_1(c0, 0, P, P, 0.7) == doctest::Approx(1.0));
  CHECK(angular::theta_1(c0, 1, M, P, 0.7) == doctest::Approx(std::cos(0.7)));
  const auto c4 = DunklConfig::uniform(3, 0.4);
  CHECK(std::abs(angular::theta_1(c4, 2, P, P, pi / 4)) < 1e-15);
  CHECK_THROWS_AS(angular::theta_1(c0, 1, P, P, 0.7), Error);
}

TEST_CASE("theta_j structure") {
  auto c = DunklConfig::uniform(3, 0.0);
  c.s = {P, P, P};
  CHECK(angular::theta_j(c, 2, AngularState{{0, 0}}, P, 0.9) == doctest::Approx(1.0));
  c.s = {M, P, M};
  const double t = 0.9;
  CHECK(angular::theta_j(c, 2, AngularState{{1, 1}}, M, t) == doctest::Approx(std::cos(t) * std::sin(t)));
  auto c4 = DunklConfig::uniform(4, 0.2);
  c4.s = {P, P, P, M};
  CHECK(std::abs(angular::theta_j(c4, 3, AngularState{{2, 2, 1}}, M, pi / 2)) < 1e-15);
  c4.s = {P, P, P, P};
  CHECK(std::abs(angular::theta_j(c4, 3, AngularState{{2, 2, 2}}, P, pi / 2)) > 1e-3);
  CHECK_THROWS_AS(angular::theta_j(c4, 4, AngularState{{2, 2, 2}}, P, 0.3), Error);
}

TEST_CASE("parity checks") {
  const auto c0 = DunklConfig::uniform(3, 0.0);
  CHECK(angular::check_parity(angular::sample_theta_1(c0, 1, M, P), M) < 1e-15);
  CHECK(angular::check_parity(angular::sample_theta_1(c0, 0, P, P), P) < 1e-15);
  const auto c4 = DunklConfig::uniform(3, 0.4);
  const auto prof = angular::sample_theta_1(c4, 2, P, P, 101);
  CHECK(angular::check_parity(prof, P, Reflection::AcrossHalfPi) < 1e-12);
  CHECK(angular::check_parity(prof, P, Reflection::AcrossZero) < 1e-12);
}

TEST_CASE("residual of the first angular equation") {
  for (double mu : {-0.4, 0.0, 0.4}) {
    const auto c = DunklConfig::uniform(3, mu);
    CHECK(angular::max_residual_theta_1(c, 2, P, P) < 1e-5);
    CHECK(angular::max_residual_theta_1(c, 3, M, P) < 1e-5);
    CHECK(angular::max_residual_theta_1(c, 4, M, M) < 1e-5);
  }
}

TEST_CASE("orthogonality for mu >= 0") {
  const auto c = DunklConfig::uniform(3, 0.3);
  CHECK(std::abs(angular::overlap_theta_1(c, 0, 2, P, P)) < 1e-10);
  CHECK(std::abs(angular::overlap_theta_1(c, 2, 4, P, P)) < 1e-10);
  CHECK(angular::overlap_theta_1(c, 2, 2, P, P) > 0.01);
}

TEST_CASE("property: chained angular equations and parities hold for random coupled states") {
  testing::Gen g(41);
  for (int i = 0; i < 60; ++i) {
    const int d = g.integer(3, 6);
    const auto c = g.config(d, -0.4, 0.4);
    const auto a = g.coupled_state(c, 2);
    CAPTURE(i);
    const auto p1 = angular::sample_theta_1(c, a.two_ell[0], c.s[0], c.s[1], 81);
    CHECK(angular::check_parity(p1, c.s[0], Reflection::AcrossHalfPi) < 1e-12);
    CHECK(angular::check_parity(p1, c.s[1], Reflection::AcrossZero) < 1e-12);
    CHECK(std::abs(angular::residual_theta_1(c, a.two_ell[0], c.s[0], c.s[1], g.real(0.2, 1.3))) < 1e-5);
    for (int k = 2; k <= d - 1; ++k) {
      const double theta = g.real(0.2, 1.3);
      const double scale = 1.0 + std::abs(angular::theta_j(c, k, a, c.s[k], theta));
      CHECK(std::abs(angular::residual_theta_j(c, k, a, c.s[k], theta)) < 1e-5 * scale);
    }
  }
}
