#pragma once

#include <span>
#include <vector>

#include "dkg/config.hpp"
#include "dkg/oracle.hpp"

namespace dkg::oscillator {

struct OscillatorSpec {
  DunklConfig config;
  AngularState ang;
  double m = 1.0;
  double omega = 1.0;

  /// Shape validation plus m > 0, omega > 0.
  void check() const;
};

enum class Branch { Positive, Negative };

/// E^2 = 2 m omega [2(n + L) + sum mu - sum mu s] + m^2.
double energy_squared(const OscillatorSpec& spec, int n);

/// +-sqrt(E^2). Throws ImaginaryEnergy when E^2 < 0.
double energy(const OscillatorSpec& spec, int n, Branch branch = Branch::Positive);

/// omega [2(n + L) + sum mu - sum mu s], rest mass excluded.
double energy_nonrel(const OscillatorSpec& spec, int n);

/// Second Kummer parameter b = 2L + d/2 + sum mu.
double kummer_b(const OscillatorSpec& spec);

/// R(rho) = rho^L e^{-rho/2} M(-n, b; rho), rho = m omega r^2, unnormalized.
double radial_wavefunction(const OscillatorSpec& spec, int n, double rho);

/// Left-hand side of the radial equation in rho,
///   rho R'' + (d/2 + sum mu) R' - rho R/4 - varpi^2 R/(4 rho)
///     + (sum mu s + d/2) R/2 + (E^2 - m^2) R/(4 m omega),
/// with R from radial_wavefunction and derivatives by central differences.
double ode_residual(const OscillatorSpec& spec, int n, double rho);

struct RadialProfile {
  std::vector<double> grid;    // rho values, strictly increasing, > 0
  std::vector<double> values;  // normalized |R(rho)|^2
  /// values times the measure weight rho^{(d-2)/2 + sum mu} (m omega)^{-(d/2 + sum mu)}/2,
  /// so that its integral over rho is 1.
  std::vector<double> probability;
  double norm_constant = 1.0;  // C in R = C rho^L e^{-rho/2} M
  double norm_error = 0.0;     // quadrature self-estimate, relative
};

/// 2000 uniform points on (0, rho_max], rho_max = 4 (2n + b).
std::vector<double> default_grid(const OscillatorSpec& spec, int n, int points = 2000);

/// |R|^2 on the grid, normalized so that
///   int_0^{rho_max} |R|^2 rho^{(d-2)/2 + sum mu} (m omega)^{-(d/2 + sum mu)} d rho / 2 = 1,
/// which is int |R|^2 r^{d-1+2 sum mu} dr over the matching r interval.
/// Throws GridTooCoarse when the quadrature self-estimate exceeds 1e-6.
RadialProfile density_profile(const OscillatorSpec& spec, int n, std::span<const double> grid);
RadialProfile density_profile(const OscillatorSpec& spec, int n);

/// The separated radial equation in r as an oracle problem whose
/// eigenvalues are E^2.
oracle::RadialProblem radial_problem(const OscillatorSpec& spec, oracle::Grid grid = {});

}  // namespace dkg::oscillator
