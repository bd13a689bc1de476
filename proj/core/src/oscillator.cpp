#include "dkg/oscillator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dkg/specfun.hpp"

namespace dkg::oscillator {

void OscillatorSpec::check() const {
  validate_shape(config, ang);
  if (!(m > 0.0) || !std::isfinite(m)) throw Error(ErrorCode::InvalidArgument, "mass m must be positive");
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw Error(ErrorCode::InvalidArgument, "frequency omega must be positive");
}

namespace {

void check_level(int n) {
  if (n < 0) throw Error(ErrorCode::NegativeDegree, "radial quantum number n must be >= 0");
}

// 2(n + L) + sum mu - sum mu s, with the integer part kept exact
double level_factor(const OscillatorSpec& spec, int n) {
  return (2 * n + spec.ang.two_total()) + (spec.config.mu_sum() - spec.config.mu_parity_sum());
}

}  // namespace

double energy_squared(const OscillatorSpec& spec, int n) {
  spec.check();
  check_level(n);
  return 2.0 * spec.m * spec.omega * level_factor(spec, n) + spec.m * spec.m;
}

double energy(const OscillatorSpec& spec, int n, Branch branch) {
  const double e2 = energy_squared(spec, n);
  if (e2 < 0.0)
    throw Error(ErrorCode::ImaginaryEnergy,
                "E^2 = " + std::to_string(e2) + " < 0 for n = " + std::to_string(n));
  const double e = std::sqrt(e2);
  return branch == Branch::Positive ? e : -e;
}

double energy_nonrel(const OscillatorSpec& spec, int n) {
  spec.check();
  check_level(n);
  return spec.omega * level_factor(spec, n);
}

double kummer_b(const OscillatorSpec& spec) {
  return spec.ang.two_total() + 0.5 * spec.config.d + spec.config.mu_sum();
}

double radial_wavefunction(const OscillatorSpec& spec, int n, double rho) {
  spec.check();
  check_level(n);
  if (!(rho > 0.0)) throw Error(ErrorCode::InvalidArgument, "rho must be positive");
  const double b = kummer_b(spec);
  return std::pow(rho, spec.ang.total()) * std::exp(-0.5 * rho) * specfun::kummer_m(-static_cast<double>(n), b, rho);
}

double ode_residual(const OscillatorSpec& spec, int n, double rho) {
  const double h = 1e-3 * std::min(1.0, rho);
  const auto f = [&](double x) { return radial_wavefunction(spec, n, x); };
  const double fm2 = f(rho - 2 * h), fm1 = f(rho - h), f0 = f(rho), fp1 = f(rho + h), fp2 = f(rho + 2 * h);
  const double d1 = (fm2 - 8 * fm1 + 8 * fp1 - fp2) / (12 * h);
  const double d2 = (-fm2 + 16 * fm1 - 30 * f0 + 16 * fp1 - fp2) / (12 * h * h);
  const auto& c = spec.config;
  const double half_d = 0.5 * c.d;
  const double varpi2 = varpi_squared(c, spec.ang);
  const double spectral = (energy_squared(spec, n) - spec.m * spec.m) / (4.0 * spec.m * spec.omega);
  return rho * d2 + (half_d + c.mu_sum()) * d1 - 0.25 * rho * f0 - varpi2 / (4.0 * rho) * f0 +
         0.5 * (c.mu_parity_sum() + half_d) * f0 + spectral * f0;
}

std::vector<double> default_grid(const OscillatorSpec& spec, int n, int points) {
  if (points < 2) throw Error(ErrorCode::InvalidArgument, "profile grid needs at least two points");
  const double rho_max = 4.0 * (2.0 * n + kummer_b(spec));
  std::vector<double> g(points);
  for (int i = 0; i < points; ++i) g[i] = rho_max * (i + 1) / points;
  return g;
}

RadialProfile density_profile(const OscillatorSpec& spec, int n, std::span<const double> grid) {
  spec.check();
  check_level(n);
  if (grid.empty()) throw Error(ErrorCode::InvalidArgument, "empty profile grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0) || (i > 0 && !(grid[i] > grid[i - 1])))
      throw Error(ErrorCode::InvalidArgument, "profile grid must be positive and strictly increasing");
  }
  const double power = 0.5 * (spec.config.d - 2) + spec.config.mu_sum();
  const double scale = std::pow(spec.m * spec.omega, -(0.5 * spec.config.d + spec.config.mu_sum())) / 2.0;
  // rho = t^4 tames the rho^power endpoint behaviour for negative mu
  const auto integrand = [&](double t) {
    if (t <= 0.0) return 0.0;
    const double rho = t * t * t * t;
    const double r = radial_wavefunction(spec, n, rho);
    return r * r * std::pow(rho, power) * 4.0 * t * t * t;
  };
  const double t_max = std::pow(grid.back(), 0.25);
  const auto q = oracle::integrate(integrand, 0.0, t_max, 1e-14, 1e-12);
  const double norm = q.value * scale;
  if (!(norm > 0.0) || !std::isfinite(norm))
    throw Error(ErrorCode::GridTooCoarse, "normalization integral is not positive");
  const double rel_err = q.error / std::abs(q.value);
  if (rel_err > 1e-6)
    throw Error(ErrorCode::GridTooCoarse, "normalization quadrature error " + std::to_string(rel_err));

  RadialProfile out;
  out.norm_constant = 1.0 / std::sqrt(norm);
  out.norm_error = rel_err;
  out.grid.assign(grid.begin(), grid.end());
  out.values.reserve(grid.size());
  out.probability.reserve(grid.size());
  for (double rho : grid) {
    const double r = radial_wavefunction(spec, n, rho);
    out.values.push_back(r * r / norm);
    out.probability.push_back(out.values.back() * std::pow(rho, power) * scale);
  }
  return out;
}

RadialProfile density_profile(const OscillatorSpec& spec, int n) {
  const auto g = default_grid(spec, n);
  return density_profile(spec, n, g);
}

oracle::RadialProblem radial_problem(const OscillatorSpec& spec, oracle::Grid grid) {
  spec.check();
  const auto& c = spec.config;
  // R'' + (c/r) R' + [E^2 - m^2 - m^2 w^2 r^2 + 2 m w (d/2 + sum mu s) - varpi^2/r^2] R = 0
  oracle::RadialProblem p;
  p.c = c.drift();
  p.inverse_square = varpi_squared(c, spec.ang);
  p.inverse_r = 0.0;
  p.quadratic = -spec.m * spec.m * spec.omega * spec.omega;
  p.constant = -spec.m * spec.m + spec.m * spec.omega * (c.d + 2.0 * c.mu_parity_sum());
  p.grid = grid;
  return p;
}

}  // namespace dkg::oscillator
