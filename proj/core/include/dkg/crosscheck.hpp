#pragma once

#include <string>
#include <vector>

#include "dkg/coulomb.hpp"
#include "dkg/oracle.hpp"
#include "dkg/oscillator.hpp"

namespace dkg::crosscheck {

struct OscillatorCheck {
  int n = 0;
  double analytic = 0.0;  // positive-branch E
  double oracle = 0.0;    // sqrt of the extrapolated E^2
  double rel_error = 0.0;
  double seconds = 0.0;   // wall time of the whole solve, shared by its levels
};

/// Compares levels 0..levels-1 against the finite-difference oracle.
std::vector<OscillatorCheck> check_oscillator(const oscillator::OscillatorSpec& spec, int levels,
                                              oracle::Grid grid = {12.0, 4000});

enum class CoulombBranch { Printed, Truncation, Neither };

std::string to_string(CoulombBranch b);

struct CoulombCheck {
  int n = 0;
  double printed = 0.0;     // coulomb::energy
  double truncation = 0.0;  // coulomb::energy_from_truncation
  double oracle = 0.0;
  double rel_error_printed = 0.0;
  double rel_error_truncation = 0.0;
  CoulombBranch matched = CoulombBranch::Neither;
  double r_max = 0.0;
  double seconds = 0.0;
};

CoulombCheck check_coulomb(const coulomb::CoulombSpec& spec, int n, int grid_n = 8000, double tol = 1e-5);

/// Ratio (E_N - E_2N)/(E_2N - E_4N) of the k lowest grid eigenvalues
/// (second-order convergence gives about 4).
std::vector<double> convergence_ratio(const oracle::RadialProblem& problem, int k);

/// Local exponent q of the discrete eigenvector near the origin, fitted from
/// p(r) = r u'/u at r_fit and 2 r_fit and extrapolated to r -> 0.
double indicial_exponent(const oracle::RadialProblem& problem, double eigenvalue, double r_fit = 0.05);

/// Regular root of q (q - 1) = kappa_eff.
double indicial_root(double kappa_eff);

template <class Spec>
struct Labeled {
  std::string label;
  Spec spec;
};

/// Twelve oscillator configurations, d in {3,4,5} x mu in {-0.4, 0, 0.4}
/// with alternating parities plus three further mixed-parity cases;
/// all l_j = 1, m = omega = 1.
std::vector<Labeled<oscillator::OscillatorSpec>> oscillator_suite();

/// Eight Coulomb configurations over d in {3,4}, mu in {0, +-0.4},
/// Ze^2 in {0.5, 1}; all l_j = 1, m = 1.
std::vector<Labeled<coulomb::CoulombSpec>> coulomb_suite();

/// "d=3 mu=(0.4,0.4,0.4) s=(+,-,+) l=(1,1)" style label.
std::string describe(const DunklConfig& config, const AngularState& ang);

}  // namespace dkg::crosscheck
