#pragma once

#include <functional>
#include <span>
#include <vector>

namespace dkg::oracle {

// ---------------------------------------------------------------------------
// Quadrature

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // sum of |coarse - refined| over accepted panels
  int panels = 0;
};

/// Adaptive composite Gauss-Legendre: 16-point panels, recursive bisection
/// until each panel agrees with its two halves to within its share of
/// max(abs_tol, rel_tol * |I|). Throws MaxDepthExceeded.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol = 1e-10, double rel_tol = 1e-13, int max_depth = 60);

double quadrature(const std::function<double(double)>& f, double a, double b);

// ---------------------------------------------------------------------------
// Radial eigenproblems
//
// A separated radial equation
//   R'' + (c/r) R' + [E^2 + constant + inverse_r/r + quadratic r^2 - inverse_square/r^2] R = 0
// is turned into u'' + [W(r) - kappa_eff/r^2] u = 0 by u = r^{c/2} R.
// The discrete operator H = -d^2/dr^2 + V(r) uses second-order central
// differences on r_i = i h, i = 1..n-1, h = r_max/n, with u(0) = u(r_max) = 0.

struct Grid {
  double r_max = 12.0;
  int n = 4000;
};

struct RadialProblem {
  double c = 0.0;               // first-derivative coefficient
  double inverse_square = 0.0;  // coefficient of -1/r^2 before symmetrization
  double inverse_r = 0.0;       // coefficient of +1/r
  double quadratic = 0.0;       // coefficient of +r^2
  double constant = 0.0;        // r-independent terms other than E^2
  Grid grid;
};

struct SymmetrizedProblem {
  double kappa_eff = 0.0;  // inverse_square + (c/2)(c/2 - 1)
  double inverse_r = 0.0;
  double quadratic = 0.0;
  double constant = 0.0;
  Grid grid;

  /// V(r) so that H u = E^2 u.
  double potential(double r) const noexcept {
    return kappa_eff / (r * r) - inverse_r / r - quadratic * r * r - constant;
  }
};

SymmetrizedProblem symmetrize(const RadialProblem& problem);

/// Number of eigenvalues of the discrete H on an n-interval grid below sigma.
int sturm_count(const SymmetrizedProblem& problem, int n, double sigma);

/// Lowest k eigenvalues of the discrete H on an n-interval grid, by bisection.
std::vector<double> grid_eigenvalues(const SymmetrizedProblem& problem, int n, int k);

/// Lowest k eigenvalues (values of E^2) with Richardson extrapolation over
/// the grid's n and 2n. Throws NonConfining unless quadratic < 0.
std::vector<double> eigensolve(const RadialProblem& problem, int k);

/// Discrete eigenvector of H on an n-interval grid near `eigenvalue`,
/// by inverse iteration. Entry i belongs to r = (i+1) h.
std::vector<double> eigenvector(const SymmetrizedProblem& problem, int n, double eigenvalue);

/// Interior sign changes of a sampled function, ignoring entries below
/// `floor` times the largest magnitude.
int count_nodes(std::span<const double> values, double floor = 1e-10);

// Coulomb problems: E enters the 1/r coefficient, so each level is found
// by bisection on E with Sturm counting at fixed E.

struct CoulombProblem {
  double c = 2.0;       // d - 1 + 2 sum(mu)
  double varpi2 = 0.0;  // angular separation constant
  double ze2 = 1.0;     // coupling Z e^2
  double m = 1.0;
  int n = 8000;         // grid intervals of the coarse grid
  double r_max = 0.0;   // 0 selects the box size from the computed level
};

struct CoulombLevel {
  double energy = 0.0;         // Richardson-extrapolated
  double energy_coarse = 0.0;  // n intervals
  double energy_fine = 0.0;    // 2n intervals
  double r_max = 0.0;
};

/// Level with n radial nodes, bracketed in (0.01 m, 0.999 m).
/// Throws BisectionBracketFailure.
CoulombLevel coulomb_level(const CoulombProblem& problem, int n);

std::vector<double> eigensolve_coulomb(const CoulombProblem& problem, int k);

/// The Coulomb problem at a fixed trial energy, as a RadialProblem.
RadialProblem coulomb_at_energy(const CoulombProblem& problem, double energy, Grid grid);

// ---------------------------------------------------------------------------
// Reference series (test oracles; long double with compensated summation)

struct ReferenceValue {
  double value = 0.0;
  double error_estimate = 0.0;
};

enum class SeriesKind { Kummer, Jacobi };

/// Kummer: params = {a, b}. Jacobi: params = {n, alpha, beta}, evaluated
/// from the explicit hypergeometric sum
///   P_n = (alpha+1)_n / n! * 2F1(-n, n+alpha+beta+1; alpha+1; (1-x)/2).
ReferenceValue reference_series(SeriesKind kind, std::span<const double> params, double z);

ReferenceValue reference_kummer(double a, double b, double z);
ReferenceValue reference_jacobi(int n, double alpha, double beta, double x);

struct PairReference {
  double probability = 0.0;
  double density = 0.0;     // P / (1 - P)
  double complement = 0.0;  // 1 - P
};

/// P = cosh pi(b+x) / (e^{2 pi b} cosh pi(b-x)) and P/(1-P), both evaluated
/// from that quotient in 50-digit arithmetic.
PairReference reference_pair(double beta_tilde, double x);

}  // namespace dkg::oracle
