#include "dkg/scattering.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "dkg/specfun.hpp"

namespace dkg::scattering {

namespace {

constexpr double kPi = std::numbers::pi;

double threshold_coupling(const DunklConfig& config, const AngularState& ang) {
  return std::sqrt(threshold(config, ang));
}

// log sinh(y) for y > 0
double log_sinh(double y) { return y + std::log1p(-std::exp(-2.0 * y)) - std::numbers::ln2; }

Complex safe_exp(Complex w) {
  if (w.real() > 700.0) return {std::numeric_limits<double>::infinity(), 0.0};
  return std::exp(w);
}

}  // namespace

double vartheta(const DunklConfig& config) { return -0.5 * config.drift(); }

double threshold(const DunklConfig& config, const AngularState& ang) {
  const double v = vartheta(config);
  return varpi_squared(config, ang) + v * (v + 1.0) + 0.25;
}

namespace {

// ze2^2 - threshold with rounding of sqrt(threshold)^2 absorbed into zero
double excess(const DunklConfig& config, const AngularState& ang, double ze2) {
  const double thr = threshold(config, ang);
  const double r = ze2 * ze2 - thr;
  return (r < 0.0 && -r <= 8.0 * std::numeric_limits<double>::epsilon() * thr) ? 0.0 : r;
}

}  // namespace

bool creation_condition(const DunklConfig& config, const AngularState& ang, double ze2) {
  return excess(config, ang, ze2) >= 0.0;
}

double beta_tilde(const DunklConfig& config, const AngularState& ang, double ze2) {
  const double r = excess(config, ang, ze2);
  if (r < 0.0)
    throw Error(ErrorCode::SubcriticalCharge, "Ze^2 = " + std::to_string(ze2) + " is below the creation threshold " +
                                                  std::to_string(threshold_coupling(config, ang)));
  return std::sqrt(r);
}

CriticalCharge critical_charge(const DunklConfig& config, const AngularState& ang) {
  CriticalCharge out;
  out.z_over_137 = threshold_coupling(config, ang);
  out.z = kInverseCoupling * out.z_over_137;
  bool free = true;
  for (double mu : config.mu) free = free && mu == 0.0;
  bool equal = true;
  for (int t : ang.two_ell) equal = equal && t == ang.two_ell.front();
  if (free && equal && !ang.two_ell.empty()) out.reduced = reduced_critical_charge(config.d, ang.ell(0));
  return out;
}

double reduced_critical_charge(int d, double ell) { return kInverseCoupling * (ell + 0.5 * d - 1.0); }

Bogoliubov bogoliubov(double alpha_im, double beta_tilde, BetaBranch branch) {
  if (!std::isfinite(alpha_im) || !std::isfinite(beta_tilde) || beta_tilde < 0.0)
    throw Error(ErrorCode::InvalidArgument, "Bogoliubov coefficients need finite x and beta~ >= 0");
  const Complex i(0.0, 1.0);
  const Complex alpha = -i * alpha_im;
  const Complex beta = (branch == BetaBranch::Negative ? -1.0 : 1.0) * i * beta_tilde;
  Complex lg_num, lg_a, lg_b;
  try {
    lg_num = specfun::log_gamma(1.0 + 2.0 * beta);
    lg_a = specfun::log_gamma(0.5 + beta - alpha);
    lg_b = specfun::log_gamma(0.5 + beta + alpha);
  } catch (const Error& e) {
    throw Error(ErrorCode::GammaPole, e.what());
  }
  const Complex log_a = lg_num + i * kPi * alpha - lg_a;
  const Complex log_b = lg_num + i * kPi * (alpha - beta - 0.5) - lg_b;
  Bogoliubov out;
  out.a = safe_exp(log_a);
  out.b = safe_exp(log_b);
  out.log_abs_a = log_a.real();
  out.log_abs_b = log_b.real();
  out.ratio_squared = std::exp(2.0 * (log_b.real() - log_a.real()));
  out.normalization = std::exp(2.0 * log_a.real()) - std::exp(2.0 * log_b.real());
  return out;
}

double log_pair_probability(double beta_tilde, double x) {
  return specfun::log_cosh(kPi * (beta_tilde + x)) - specfun::log_cosh(kPi * (beta_tilde - x)) -
         2.0 * kPi * beta_tilde;
}

double pair_probability(double beta_tilde, double x) { return std::exp(log_pair_probability(beta_tilde, x)); }

double log_pair_density(double beta_tilde, double x) {
  if (!(beta_tilde > 0.0))
    throw Error(ErrorCode::DivergentDensity, "density diverges at beta~ = 0 (probability reaches 1)");
  return specfun::log_cosh(kPi * (beta_tilde + x)) - kPi * (beta_tilde - x) - log_sinh(2.0 * kPi * beta_tilde);
}

double log_pair_complement(double beta_tilde, double x) {
  if (beta_tilde < 0.0) throw Error(ErrorCode::InvalidArgument, "beta~ must be >= 0");
  if (beta_tilde == 0.0) return -std::numeric_limits<double>::infinity();
  const double v = kPi * (beta_tilde - x);
  return v - 2.0 * kPi * beta_tilde + log_sinh(2.0 * kPi * beta_tilde) - specfun::log_cosh(v);
}

double pair_density(double beta_tilde, double x) { return std::exp(log_pair_density(beta_tilde, x)); }

double alpha_im(const ScatterInput& input) {
  if (!(input.m > 0.0)) throw Error(ErrorCode::InvalidArgument, "mass m must be positive");
  if (!(std::abs(input.energy) > input.m))
    throw Error(ErrorCode::NonPropagatingEnergy,
                "|E| = " + std::to_string(std::abs(input.energy)) + " does not exceed m = " + std::to_string(input.m));
  const double kappa = std::sqrt((input.energy - input.m) * (input.energy + input.m));
  return input.energy * input.ze2 / kappa;
}

ScatterResult scatter(const ScatterInput& input) {
  validate_shape(input.config, input.ang);
  ScatterResult out;
  out.vartheta = vartheta(input.config);
  out.alpha_im = alpha_im(input);
  out.beta_tilde = beta_tilde(input.config, input.ang, input.ze2);
  out.log_probability = log_pair_probability(out.beta_tilde, out.alpha_im);
  out.probability = std::exp(out.log_probability);
  out.log_complement = log_pair_complement(out.beta_tilde, out.alpha_im);
  if (out.beta_tilde > 0.0) {
    out.log_density = log_pair_density(out.beta_tilde, out.alpha_im);
    out.density = std::exp(out.log_density);
  } else {
    out.log_density = out.density = std::numeric_limits<double>::infinity();
  }
  return out;
}

double pair_probability(const ScatterInput& input) { return scatter(input).probability; }

double pair_density(const ScatterInput& input) {
  const auto r = scatter(input);
  return pair_density(r.beta_tilde, r.alpha_im);
}

Complex whittaker_mode(const ScatterInput& input, Complex zeta, BetaBranch branch) {
  const double x = alpha_im(input);
  const double bt = beta_tilde(input.config, input.ang, input.ze2);
  const Complex i(0.0, 1.0);
  const Complex beta = (branch == BetaBranch::Negative ? -1.0 : 1.0) * i * bt;
  return specfun::whittaker_m(-i * x, beta, zeta);
}

}  // namespace dkg::scattering
