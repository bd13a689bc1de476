#pragma once

#include <vector>

#include "dkg/config.hpp"

namespace dkg::angular {

/// Which coordinate reflection acts on the sampled angle.
///   AcrossHalfPi: theta -> pi - theta (flips the cos factor)
///   AcrossZero:   theta -> -theta    (flips the sin factor; Theta_1 only)
enum class Reflection { AcrossHalfPi, AcrossZero };

struct Sample {
  double theta = 0.0;
  double value = 0.0;
};

struct AngularProfile {
  int j = 1;
  std::vector<Sample> samples;
};

/// Theta_1(theta) = cos^{e1} sin^{e2} P_{l1-(e1+e2)/2}^{(mu2+e2-1/2, mu1+e1-1/2)}(cos 2 theta),
/// unnormalized. two_ell1 = 2 l1. Throws ParityCoupling, NegativeDegree.
double theta_1(const DunklConfig& config, int two_ell1, Parity s1, Parity s2, double theta);

/// Theta_k for k >= 2 (k <= d-1):
///   cos^{e_{k+1}} sin^{2 S_{k-1}} P_{l_k - e_{k+1}/2}^{(a, b)}(cos 2 theta),
///   a = (k-2)/2 + 2 S_{k-1} + mu_1 + ... + mu_k,  b = mu_{k+1} + e_{k+1} - 1/2,
/// where S_{k-1} = l_1 + ... + l_{k-1}.
double theta_j(const DunklConfig& config, int k, const AngularState& ang, Parity s_next, double theta);

/// Theta_1 on n uniform points of [0, 2 pi]; Theta_k (k >= 2) on [0, pi].
AngularProfile sample_theta_1(const DunklConfig& config, int two_ell1, Parity s1, Parity s2, int n = 201);
AngularProfile sample_theta_j(const DunklConfig& config, int k, const AngularState& ang, Parity s_next,
                              int n = 201);

/// max |Theta(reflected theta) - s Theta(theta)| over samples whose mirror
/// image (taken mod 2 pi) is also a sample.
double check_parity(const AngularProfile& profile, Parity s, Reflection r = Reflection::AcrossHalfPi);

/// J Theta_1 + lambda_1^2 Theta_1 at theta, with
///   J = d^2 + 2 (mu2 cot - mu1 tan) d - mu1 (1 - R1)/cos^2 - mu2 (1 - R2)/sin^2,
/// R1: theta -> pi - theta, R2: theta -> -theta. Derivatives by 4th-order
/// central differences, reflections exact.
double residual_theta_1(const DunklConfig& config, int two_ell1, Parity s1, Parity s2, double theta);

/// Residual of the k-th chained equation (k >= 2):
///   Theta'' + [(k-1 + 2 sum_{i<=k} mu_i) cot - 2 mu_{k+1} tan] Theta'
///     - mu_{k+1} (1 - R_{k+1}) Theta / cos^2 - lambda_{k-1}^2 Theta / sin^2 + lambda_k^2 Theta,
/// with lambda_{d-1}^2 = varpi^2.
double residual_theta_j(const DunklConfig& config, int k, const AngularState& ang, Parity s_next, double theta);

/// Largest |residual| on n uniform points of [a, b].
double max_residual_theta_1(const DunklConfig& config, int two_ell1, Parity s1, Parity s2, double a = 0.1,
                            double b = 3.04159265358979323846, int n = 200);

/// int_0^{2pi} Theta_1^{(a)} Theta_1^{(b)} |cos|^{2 mu1} |sin|^{2 mu2} d theta by quadrature.
/// Intended for mu1, mu2 >= 0 where the weight is bounded.
double overlap_theta_1(const DunklConfig& config, int two_ell_a, int two_ell_b, Parity s1, Parity s2);

}  // namespace dkg::angular
