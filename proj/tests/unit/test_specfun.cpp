#include <cmath>
#include <numbers>

#include "doctest.h"
#include "dkg/errors.hpp"
#include "dkg/oracle.hpp"
#include "dkg/specfun.hpp"
#include "support/generators.hpp"

using namespace dkg;
using specfun::Complex;
using std::numbers::pi;

TEST_CASE("log_gamma values") {
  CHECK(std::abs(specfun::log_gamma(1.0)) < 1e-15);
  CHECK(std::real(specfun::log_gamma(5.0)) == doctest::Approx(std::log(24.0)).epsilon(1e-14));
  const double g2 = std::exp(2.0 * std::real(specfun::log_gamma({0.5, 1.0})));
  CHECK(g2 == doctest::Approx(pi / std::cosh(pi)).epsilon(1e-13));
  CHECK(g2 == doctest::Approx(0.271015).epsilon(1e-6));
  CHECK_THROWS_AS(specfun::log_gamma(-2.0), Error);
}

TEST_CASE("kummer_m values") {
  CHECK(specfun::kummer_m(0.7, 1.3, 0.0) == 1.0);
  CHECK(specfun::kummer_m(1.7, 1.7, 1.3) == doctest::Approx(std::exp(1.3)).epsilon(1e-14));
  CHECK(specfun::kummer_m(-2.0, 1.0, 1.0) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(specfun::kummer_m(1.0, 2.0, 2.0) == doctest::Approx((std::exp(2.0) - 1.0) / 2.0).epsilon(1e-14));
  // large argument, positive a
  const double z = 40.0;
  CHECK(specfun::kummer_m(1.0, 2.0, z) == doctest::Approx((std::exp(z) - 1.0) / z).epsilon(1e-12));
  CHECK_THROWS_AS(specfun::kummer_m(0.5, -1.0, 1.0), Error);
}

TEST_CASE("jacobi_p closed forms") {
  CHECK(specfun::jacobi_p(0, 0.3, -0.2, 0.7) == 1.0);
  const double a = 0.3, b = -0.2, x = 0.7;
  CHECK(specfun::jacobi_p(1, a, b, x) == doctest::Approx((a - b) / 2 + (a + b + 2) * x / 2).epsilon(1e-15));
  CHECK(specfun::jacobi_p(2, 0, 0, 0.5) == doctest::Approx(-0.125).epsilon(1e-15));
  CHECK_THROWS_AS(specfun::jacobi_p(-1, 0, 0, 0.5), Error);
}

TEST_CASE("whittaker_m values") {
  const Complex w = specfun::whittaker_m(0.0, 0.5, 2.0);
  CHECK(w.real() == doctest::Approx(std::exp(1.0) - std::exp(-1.0)).epsilon(1e-13));
  CHECK(std::abs(w.imag()) < 1e-14);
  for (double r : {0.1, 1.0, 5.0, 10.0}) {
    const Complex v = specfun::whittaker_m({0.0, -0.7}, {0.0, 1.3}, {0.0, -r});
    CHECK(std::isfinite(std::abs(v)));
  }
  const Complex z{1e-6, 0.0};
  const Complex ratio = specfun::whittaker_m(0.3, 0.8, z) / (std::pow(z, 1.3) * std::exp(-z / 2.0));
  CHECK(std::abs(ratio - 1.0) < 1e-6);
}

TEST_CASE("log_cosh does not overflow") {
  CHECK(specfun::log_cosh(0.0) == 0.0);
  CHECK(specfun::log_cosh(1000.0) == doctest::Approx(1000.0 - std::numbers::ln2).epsilon(1e-15));
  CHECK(specfun::log_cosh(-1000.0) == specfun::log_cosh(1000.0));
}

TEST_CASE("property: Kummer polynomial cases agree with the long-double series") {
  testing::Gen g(23);
  for (int i = 0; i < testing::kCases; ++i) {
    const int n = g.integer(0, 12);
    const double b = g.real(0.3, 8.0);
    const double z = g.real(-5.0, 15.0);
    const auto ref = oracle::reference_kummer(-n, b, z);
    const double scale = std::max(1.0, std::abs(ref.value));
    CAPTURE(n);
    CAPTURE(b);
    CAPTURE(z);
    CHECK(std::abs(specfun::kummer_m(-n, b, z) - ref.value) <= 1e-13 * scale + ref.error_estimate);
  }
}

TEST_CASE("property: Jacobi recurrence matches the explicit sum") {
  testing::Gen g(29);
  for (int i = 0; i < testing::kCases; ++i) {
    const int n = g.integer(0, 10);
    const double a = g.real(-0.9, 3.0), b = g.real(-0.9, 3.0), x = g.real(-1.0, 1.0);
    const auto ref = oracle::reference_jacobi(n, a, b, x);
    CHECK(specfun::jacobi_p(n, a, b, x) == doctest::Approx(ref.value).epsilon(1e-11).scale(1.0));
  }
}

TEST_CASE("property: gamma recurrence and reflection in the complex plane") {
  testing::Gen g(31);
  for (int i = 0; i < testing::kCases; ++i) {
    const Complex z{g.real(0.1, 20.0), g.real(-20.0, 20.0)};
    // log Gamma(z+1) - log Gamma(z) = log z (mod 2 pi i)
    const Complex diff = specfun::log_gamma(z + 1.0) - specfun::log_gamma(z) - std::log(z);
    CHECK(std::abs(diff.real()) < 1e-11);
    const double k = diff.imag() / (2.0 * pi);
    CHECK(std::abs(k - std::round(k)) < 1e-10);
    // conjugate symmetry
    CHECK(std::abs(std::real(specfun::log_gamma(std::conj(z)) - std::conj(specfun::log_gamma(z)))) < 1e-12);
  }
}
