#pragma once

#include <span>
#include <string>
#include <vector>

#include "dkg/errors.hpp"

namespace dkg {

/// Fine-structure style coupling used for critical charges: e^2 = 1/137.
inline constexpr double kInverseCoupling = 137.0;

/// Reflection eigenvalue of one Cartesian axis.
enum class Parity : int { Even = +1, Odd = -1 };

constexpr int sign(Parity p) noexcept { return static_cast<int>(p); }

/// Dimension, Dunkl parameters and reflection parities of a d-dimensional
/// problem. Axis j (0-based here) carries mu[j] and s[j].
struct DunklConfig {
  int d = 3;
  std::vector<double> mu;
  std::vector<Parity> s;

  /// Same mu and parity on every axis.
  static DunklConfig uniform(int d, double mu, Parity s = Parity::Even);

  double mu_sum() const noexcept;
  /// sum_j mu_j s_j
  double mu_parity_sum() const noexcept;
  /// d - 1 + 2 sum(mu): coefficient of the radial first-derivative term.
  double drift() const noexcept { return d - 1 + 2.0 * mu_sum(); }
};

/// The d-1 angular quantum numbers, stored doubled so half-integers are exact.
struct AngularState {
  std::vector<int> two_ell;

  /// ell_j = ell on all d-1 axes (ell may be a half-integer).
  static AngularState uniform(int d, double ell);
  static AngularState from_values(std::span<const double> ells);

  /// 2L where L = sum_j ell_j.
  int two_total() const noexcept;
  double total() const noexcept { return 0.5 * two_total(); }
  double ell(std::size_t j) const { return 0.5 * two_ell.at(j); }
};

/// e_j = (1 - s_j) / 2.
struct ParityIndicator {
  std::vector<int> e;

  static ParityIndicator from(const DunklConfig& config);
};

/// Checks vector lengths and mu_j > -1/2. The spectral formulas only need
/// this much: they depend on the angular numbers through L alone.
void validate_shape(const DunklConfig& config, const AngularState& ang);

/// Full check including the parity/quantum-number coupling rules that an
/// actual angular eigenfunction requires.
void validate(const DunklConfig& config, const AngularState& ang);

/// varpi^2 = 4L(L + sum mu + (d-2)/2).
double varpi_squared(const DunklConfig& config, const AngularState& ang);

/// lambda_k^2 = 4 S_k (S_k + mu_1 + ... + mu_{k+1} + (k-1)/2), S_k = ell_1 + ... + ell_k.
/// k runs over 1..d-1; k = d-1 closes the chain and equals varpi_squared.
double lambda_squared(int k, const DunklConfig& config, const AngularState& ang);

/// Parses "+,-,+" style parity lists.
std::vector<Parity> parse_parities(const std::string& text);
std::string format_parities(std::span<const Parity> s);

}  // namespace dkg
