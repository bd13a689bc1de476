#include <cmath>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "doctest.h"
#include "dkg/errors.hpp"
#include "dkg/oracle.hpp"
#include "dkg/specfun.hpp"

using namespace dkg;

TEST_CASE("quadrature") {
  CHECK(oracle::quadrature([](double x) { return x; }, 0.0, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(oracle::quadrature([](double x) { return std::exp(-x); }, 0.0, 40.0) == doctest::Approx(1.0).epsilon(1e-10));
  // the [20, inf) tail is about 2e-7 of Gamma(2.7)
  const double g = std::exp(std::real(specfun::log_gamma(2.7)));
  const double lower = boost::math::tgamma_lower(2.7, 20.0);
  CHECK(oracle::quadrature([](double x) { return std::pow(x, 1.7) * std::exp(-x); }, 0.0, 20.0) ==
        doctest::Approx(lower).epsilon(1e-12));
  CHECK(lower == doctest::Approx(g).epsilon(1e-6));
  CHECK(oracle::quadrature([](double x) { return x * x * std::exp(-x); }, 0.0, 60.0) ==
        doctest::Approx(2.0).epsilon(1e-10));
  CHECK_THROWS_AS(oracle::integrate([](double x) { return 1.0 / x; }, 0.0, 1.0, 1e-14, 1e-15, 6), Error);
}

TEST_CASE("reference series") {
  CHECK(oracle::reference_kummer(-2, 1, 1).value == doctest::Approx(-0.5).epsilon(1e-16));
  CHECK(oracle::reference_kummer(1.3, 1.3, 1.0).value == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
  CHECK(oracle::reference_jacobi(2, 0, 0, 0.5).value == doctest::Approx(-0.125).epsilon(1e-16));
  const double params[] = {2.0, 0.0, 0.0};
  CHECK(oracle::reference_series(oracle::SeriesKind::Jacobi, params, 0.5).value == doctest::Approx(-0.125));
}

TEST_CASE("symmetrize") {
  oracle::RadialProblem p;
  p.c = 0.0;
  p.inverse_square = 3.0;
  CHECK(oracle::symmetrize(p).kappa_eff == doctest::Approx(3.0));
  p.c = 2.0;
  CHECK(oracle::symmetrize(p).kappa_eff == doctest::Approx(3.0));
  p.c = 4.4;
  CHECK(oracle::symmetrize(p).kappa_eff == doctest::Approx(3.0 + 2.64));
}

TEST_CASE("3D isotropic oscillator levels") {
  // u'' + [E - r^2 - l(l+1)/r^2] u = 0 has E = 4n + 2l + 3
  oracle::RadialProblem p;
  p.c = 2.0;
  p.inverse_square = 2.0;
  p.quadratic = -1.0;
  p.grid = {10.0, 2000};
  const auto e = oracle::eigensolve(p, 3);
  CHECK(e[0] == doctest::Approx(5.0).epsilon(1e-6));
  CHECK(e[1] == doctest::Approx(9.0).epsilon(1e-6));
  CHECK(e[2] == doctest::Approx(13.0).epsilon(1e-6));
  p.quadratic = 0.0;
  CHECK_THROWS_AS(oracle::eigensolve(p, 1), Error);
}

TEST_CASE("eigenvector nodes and count_nodes") {
  oracle::RadialProblem p;
  p.c = 2.0;
  p.quadratic = -1.0;
  p.grid = {10.0, 1000};
  const auto sym = oracle::symmetrize(p);
  const auto lv = oracle::grid_eigenvalues(sym, 1000, 3);
  for (int k = 0; k < 3; ++k) CHECK(oracle::count_nodes(oracle::eigenvector(sym, 1000, lv[k])) == k);
  const std::vector<double> v{1, -1, 1e-20, 1};
  CHECK(oracle::count_nodes(v) == 2);
}

TEST_CASE("Coulomb oracle at d=3, l=1 reproduces the Klein-Gordon spectrum") {
  // E = m / sqrt(1 + a^2/(n + 1/2 + sqrt((l + 1/2)^2 - a^2))^2)
  oracle::CoulombProblem p;
  p.c = 2.0;
  p.varpi2 = 2.0;
  p.ze2 = 0.3;
  for (int n = 0; n < 2; ++n) {
    const double nn = n + 0.5 + std::sqrt(2.25 - 0.09);
    const double expect = 1.0 / std::sqrt(1.0 + 0.09 / (nn * nn));
    CHECK(oracle::coulomb_level(p, n).energy == doctest::Approx(expect).epsilon(2e-6));
  }
}
