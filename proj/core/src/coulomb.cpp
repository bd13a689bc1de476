#include "dkg/coulomb.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dkg/specfun.hpp"

namespace dkg::coulomb {

void CoulombSpec::check() const {
  validate_shape(config, ang);
  if (!(m > 0.0) || !std::isfinite(m)) throw Error(ErrorCode::InvalidArgument, "mass m must be positive");
  if (!(ze2 >= 0.0) || !std::isfinite(ze2)) throw Error(ErrorCode::InvalidArgument, "Ze^2 must be >= 0");
}

namespace {

void check_level(int n) {
  if (n < 0) throw Error(ErrorCode::NegativeDegree, "radial quantum number n must be >= 0");
}

double root_q(const CoulombSpec& spec) {
  const double q = radicand(spec);
  if (q < 0.0)
    throw Error(ErrorCode::SupercriticalCharge,
                "Ze^2 = " + std::to_string(spec.ze2) + " exceeds the bound-state limit " +
                    std::to_string(critical_coupling(spec)));
  return std::sqrt(q);
}

double energy_for(const CoulombSpec& spec, double denom) {
  const double z2 = spec.ze2 * spec.ze2;
  return spec.m / std::sqrt(1.0 + z2 / (denom * denom));
}

}  // namespace

double radicand(const CoulombSpec& spec) {
  spec.check();
  const double mu = spec.config.mu_sum();
  const double d = spec.config.d;
  const double shift = 0.5 * d - 1.0;
  return varpi_squared(spec.config, spec.ang) + mu * (mu + d - 2.0) + shift * shift - spec.ze2 * spec.ze2;
}

bool constraint(const CoulombSpec& spec) { return radicand(spec) >= 0.0; }

double delta(const CoulombSpec& spec) {
  return 1.0 - 0.5 * (spec.config.d + 2.0 * spec.config.mu_sum()) + root_q(spec);
}

double energy(const CoulombSpec& spec, int n) {
  check_level(n);
  const double denom = n - 0.5 - root_q(spec);
  if (denom == 0.0)
    throw Error(ErrorCode::DegenerateDenominator, "n - 1/2 - sqrt(Q) vanishes for n = " + std::to_string(n));
  if (spec.ze2 == 0.0) return spec.m;
  return energy_for(spec, denom);
}

double energy_from_truncation(const CoulombSpec& spec, int n) {
  check_level(n);
  const double big_n = n + 0.5 + root_q(spec);
  if (spec.ze2 == 0.0) return spec.m;
  return energy_for(spec, big_n);
}

BoundState bound_state(const CoulombSpec& spec, int n) {
  if (!(spec.ze2 > 0.0)) throw Error(ErrorCode::InvalidArgument, "bound states need Ze^2 > 0");
  BoundState b;
  b.n = n;
  b.energy = energy_from_truncation(spec, n);
  b.delta = delta(spec);
  // kappa = m Z e^2 / sqrt(N^2 + Z^2 e^4), free of the cancellation in m^2 - E^2
  const double big_n = n + 0.5 + root_q(spec);
  b.kappa_b = spec.m * spec.ze2 / std::sqrt(big_n * big_n + spec.ze2 * spec.ze2);
  return b;
}

double wavefunction(const CoulombSpec& spec, int n, double r) {
  if (!(r > 0.0)) throw Error(ErrorCode::InvalidArgument, "r must be positive");
  const BoundState b = bound_state(spec, n);
  const double eta = 2.0 * b.kappa_b * r;
  const double second = 2.0 * b.delta + spec.config.drift();
  return std::pow(eta, b.delta) * std::exp(-0.5 * eta) * specfun::kummer_m(-static_cast<double>(n), second, eta);
}

double critical_coupling(const CoulombSpec& spec) {
  CoulombSpec free = spec;
  free.ze2 = 0.0;
  return std::sqrt(std::max(0.0, radicand(free)));
}

oracle::CoulombProblem oracle_problem(const CoulombSpec& spec, int grid_n) {
  spec.check();
  oracle::CoulombProblem p;
  p.c = spec.config.drift();
  p.varpi2 = varpi_squared(spec.config, spec.ang);
  p.ze2 = spec.ze2;
  p.m = spec.m;
  p.n = grid_n;
  return p;
}

}  // namespace dkg::coulomb
