#pragma once

#include <complex>
#include <optional>

#include "dkg/config.hpp"

namespace dkg::scattering {

using Complex = std::complex<double>;

struct ScatterInput {
  DunklConfig config;
  AngularState ang;
  double m = 1.0;
  double ze2 = 0.0;
  double energy = 2.0;  // |E| > m
};

struct ScatterResult {
  double vartheta = 0.0;
  double beta_tilde = 0.0;
  double alpha_im = 0.0;  // x = E Z e^2 / kappa, alpha = -i x
  double probability = 0.0;
  double density = 0.0;
  double log_probability = 0.0;
  double log_density = 0.0;
  double log_complement = 0.0;  // log(1 - probability), -inf at threshold
};

/// vartheta = -(d - 1 + 2 sum mu)/2.
double vartheta(const DunklConfig& config);

/// varpi^2 + vartheta(vartheta + 1) + 1/4: the value of Z^2 e^4 where creation starts.
double threshold(const DunklConfig& config, const AngularState& ang);

/// Z^2 e^4 >= threshold.
bool creation_condition(const DunklConfig& config, const AngularState& ang, double ze2);

/// sqrt(Z^2 e^4 - threshold). Throws SubcriticalCharge.
double beta_tilde(const DunklConfig& config, const AngularState& ang, double ze2);

struct CriticalCharge {
  double z = 0.0;        // 137 sqrt(threshold)
  double z_over_137 = 0.0;
  std::optional<double> reduced;  // 137 (l + d/2 - 1), only for mu = 0 and equal l_j
};

CriticalCharge critical_charge(const DunklConfig& config, const AngularState& ang);

/// 137 (l + d/2 - 1).
double reduced_critical_charge(int d, double ell);

/// Sign choice in beta = -+ i beta~. Negative (beta = -i beta~) reproduces
/// the closed-form probability; Positive yields its reciprocal.
enum class BetaBranch { Negative, Positive };

struct Bogoliubov {
  Complex a;
  Complex b;
  double log_abs_a = 0.0;
  double log_abs_b = 0.0;
  double ratio_squared = 0.0;  // |B/A|^2
  double normalization = 0.0;  // |A|^2 - |B|^2
};

/// A = Gamma(1+2b) e^{i pi a} / Gamma(1/2 + b - a),
/// B = Gamma(1+2b) e^{i pi (a - b - 1/2)} / Gamma(1/2 + b + a),
/// with a = -i alpha_im and b = -+ i beta_tilde. Throws GammaPole.
Bogoliubov bogoliubov(double alpha_im, double beta_tilde, BetaBranch branch = BetaBranch::Negative);

/// log P = log cosh pi(b + x) - log cosh pi(b - x) - 2 pi b.
double log_pair_probability(double beta_tilde, double x);
double pair_probability(double beta_tilde, double x);

/// log N with the denominator e^{2 pi b} cosh pi(b - x) - cosh pi(b + x)
/// rewritten as e^{pi (b - x)} sinh(2 pi b). Throws DivergentDensity for b <= 0.
double log_pair_density(double beta_tilde, double x);

/// log(1 - P) = pi(b-x) - 2 pi b + log sinh(2 pi b) - log cosh pi(b-x),
/// accurate where P itself rounds to 1. Returns -inf at beta~ = 0.
double log_pair_complement(double beta_tilde, double x);
double pair_density(double beta_tilde, double x);

/// x = E Z e^2 / sqrt(E^2 - m^2). Throws NonPropagatingEnergy.
double alpha_im(const ScatterInput& input);

double pair_probability(const ScatterInput& input);
double pair_density(const ScatterInput& input);
ScatterResult scatter(const ScatterInput& input);

/// In-mode Phi = M_{alpha, beta}(zeta).
Complex whittaker_mode(const ScatterInput& input, Complex zeta, BetaBranch branch = BetaBranch::Negative);

}  // namespace dkg::scattering
