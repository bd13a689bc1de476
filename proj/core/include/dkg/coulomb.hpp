#pragma once

#include "dkg/config.hpp"
#include "dkg/oracle.hpp"

namespace dkg::coulomb {

struct CoulombSpec {
  DunklConfig config;
  AngularState ang;
  double m = 1.0;
  double ze2 = 1.0;  // Z e^2

  void check() const;
};

struct BoundState {
  int n = 0;
  double energy = 0.0;
  double delta = 0.0;
  double kappa_b = 0.0;  // sqrt(m^2 - E^2)
};

/// Q = varpi^2 + sum mu (sum mu + d - 2) + (d/2 - 1)^2 - Z^2 e^4.
double radicand(const CoulombSpec& spec);

/// Q >= 0.
bool constraint(const CoulombSpec& spec);

/// delta = 1 - (d + 2 sum mu)/2 + sqrt(Q). Throws SupercriticalCharge.
double delta(const CoulombSpec& spec);

/// Energy with the denominator (n - 1/2 - sqrt Q)^2, in closed form:
///   E = m [1 + Z^2 e^4 / (n - 1/2 - sqrt Q)^2]^{-1/2}.
/// Throws SupercriticalCharge, DegenerateDenominator.
double energy(const CoulombSpec& spec, int n);

/// Energy fixed by truncating M(-n, 2 delta + d - 1 + 2 sum mu; eta):
///   E Z e^2 / kappa = n + 1/2 + sqrt Q.
/// Coincides with energy() at n = 0 only.
double energy_from_truncation(const CoulombSpec& spec, int n);

/// Bound state built on energy_from_truncation.
BoundState bound_state(const CoulombSpec& spec, int n);

/// R(r) = eta^delta e^{-eta/2} M(-n, 2 delta + d - 1 + 2 sum mu; eta), eta = 2 kappa r, unnormalized.
double wavefunction(const CoulombSpec& spec, int n, double r);

/// Coupling Z e^2 at which Q = 0.
double critical_coupling(const CoulombSpec& spec);

/// Oracle problem for this spec (energy-dependent; see oracle::coulomb_level).
oracle::CoulombProblem oracle_problem(const CoulombSpec& spec, int grid_n = 8000);

}  // namespace dkg::coulomb
