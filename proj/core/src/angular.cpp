#include "dkg/angular.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "dkg/oracle.hpp"
#include "dkg/specfun.hpp"

namespace dkg::angular {

namespace {

constexpr double kPi = std::numbers::pi;

int indicator(Parity s) { return s == Parity::Odd ? 1 : 0; }

// (d, a, b) for Theta_1 or throws on a coupling violation
struct Theta1Shape {
  int degree;
  int e1;
  int e2;
  double alpha;
  double beta;
};

Theta1Shape theta1_shape(const DunklConfig& config, int two_ell1, Parity s1, Parity s2) {
  if (config.mu.size() < 2) throw Error(ErrorCode::DimensionMismatch, "Theta_1 needs mu_1 and mu_2");
  const int e1 = indicator(s1);
  const int e2 = indicator(s2);
  const int twice_degree = two_ell1 - e1 - e2;
  if (twice_degree % 2 != 0)
    throw Error(ErrorCode::ParityCoupling, "2 l_1 = " + std::to_string(two_ell1) +
                                               " has the wrong parity for s_1 s_2 = " +
                                               std::to_string(sign(s1) * sign(s2)));
  if (twice_degree < 0)
    throw Error(ErrorCode::NegativeDegree, "l_1 = " + std::to_string(0.5 * two_ell1) +
                                               " is below (e_1 + e_2)/2");
  return {twice_degree / 2, e1, e2, config.mu[1] + e2 - 0.5, config.mu[0] + e1 - 0.5};
}

struct ThetaKShape {
  int degree;
  int e;
  int two_s_lower;  // 2 S_{k-1}
  double alpha;
  double beta;
};

ThetaKShape thetak_shape(const DunklConfig& config, int k, const AngularState& ang, Parity s_next) {
  if (k < 2 || k > config.d - 1)
    throw Error(ErrorCode::IndexOutOfRange,
                "angular index k = " + std::to_string(k) + " outside 2.." + std::to_string(config.d - 1));
  if (static_cast<int>(ang.two_ell.size()) < k || static_cast<int>(config.mu.size()) < k + 1)
    throw Error(ErrorCode::DimensionMismatch, "not enough angular numbers or mu values for Theta_k");
  const int e = indicator(s_next);
  const int two_ell = ang.two_ell[k - 1];
  if ((two_ell - e) % 2 != 0)
    throw Error(ErrorCode::ParityCoupling, "l_" + std::to_string(k) + " = " + std::to_string(0.5 * two_ell) +
                                               " has the wrong parity for s_" + std::to_string(k + 1));
  if (two_ell < e) throw Error(ErrorCode::NegativeDegree, "l_k below e_{k+1}/2");
  int two_s = 0;
  for (int i = 0; i < k - 1; ++i) two_s += ang.two_ell[i];
  double mu_sum = 0.0;
  for (int i = 0; i < k; ++i) mu_sum += config.mu[i];
  const double alpha = 0.5 * (k - 2) + two_s + mu_sum;
  const double beta = config.mu[k] + e - 0.5;
  return {(two_ell - e) / 2, e, two_s, alpha, beta};
}

double int_pow(double x, int p) {
  double r = 1.0;
  for (int i = 0; i < p; ++i) r *= x;
  return r;
}

double eval1(const Theta1Shape& sh, double theta) {
  return int_pow(std::cos(theta), sh.e1) * int_pow(std::sin(theta), sh.e2) *
         specfun::jacobi_p(sh.degree, sh.alpha, sh.beta, std::cos(2.0 * theta));
}

double evalk(const ThetaKShape& sh, double theta) {
  return int_pow(std::cos(theta), sh.e) * int_pow(std::sin(theta), sh.two_s_lower) *
         specfun::jacobi_p(sh.degree, sh.alpha, sh.beta, std::cos(2.0 * theta));
}

// first and second derivative, fourth-order central stencils
template <class F>
std::pair<double, double> derivatives(const F& f, double x) {
  const double h = 1e-3;
  const double fm2 = f(x - 2 * h), fm1 = f(x - h), f0 = f(x), fp1 = f(x + h), fp2 = f(x + 2 * h);
  const double d1 = (fm2 - 8 * fm1 + 8 * fp1 - fp2) / (12 * h);
  const double d2 = (-fm2 + 16 * fm1 - 30 * f0 + 16 * fp1 - fp2) / (12 * h * h);
  return {d1, d2};
}

AngularProfile sample(int j, double a, double b, int n, const std::function<double(double)>& f) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "profile needs at least two samples");
  AngularProfile p;
  p.j = j;
  p.samples.reserve(n);
  const double step = (b - a) / (n - 1);
  for (int i = 0; i < n; ++i) {
    const double t = (i == n - 1) ? b : a + i * step;
    p.samples.push_back({t, f(t)});
  }
  return p;
}

}  // namespace

double theta_1(const DunklConfig& config, int two_ell1, Parity s1, Parity s2, double theta) {
  return eval1(theta1_shape(config, two_ell1, s1, s2), theta);
}

double theta_j(const DunklConfig& config, int k, const AngularState& ang, Parity s_next, double theta) {
  return evalk(thetak_shape(config, k, ang, s_next), theta);
}

AngularProfile sample_theta_1(const DunklConfig& config, int two_ell1, Parity s1, Parity s2, int n) {
  const auto sh = theta1_shape(config, two_ell1, s1, s2);
  return sample(1, 0.0, 2.0 * kPi, n, [&](double t) { return eval1(sh, t); });
}

AngularProfile sample_theta_j(const DunklConfig& config, int k, const AngularState& ang, Parity s_next, int n) {
  const auto sh = thetak_shape(config, k, ang, s_next);
  return sample(k, 0.0, kPi, n, [&](double t) { return evalk(sh, t); });
}

double check_parity(const AngularProfile& profile, Parity s, Reflection r) {
  const auto& xs = profile.samples;
  if (xs.size() < 2) return 0.0;
  const double a = xs.front().theta;
  const double step = (xs.back().theta - a) / (xs.size() - 1);
  const double period = 2.0 * kPi;
  double worst = 0.0;
  for (const auto& smp : xs) {
    double mirror = (r == Reflection::AcrossHalfPi) ? kPi - smp.theta : -smp.theta;
    // bring the mirror angle into the sampled window
    while (mirror < a - 1e-9) mirror += period;
    while (mirror > xs.back().theta + 1e-9) mirror -= period;
    const long idx = std::lround((mirror - a) / step);
    if (idx < 0 || idx >= static_cast<long>(xs.size())) continue;
    if (std::abs(xs[idx].theta - mirror) > 1e-9) continue;
    worst = std::max(worst, std::abs(xs[idx].value - sign(s) * smp.value));
  }
  return worst;
}

double residual_theta_1(const DunklConfig& config, int two_ell1, Parity s1, Parity s2, double theta) {
  const auto sh = theta1_shape(config, two_ell1, s1, s2);
  const auto f = [&](double t) { return eval1(sh, t); };
  const double mu1 = config.mu[0];
  const double mu2 = config.mu[1];
  // lambda_1^2 = 4 l1 (l1 + mu1 + mu2) = 2 l1 (2 l1 + 2 mu1 + 2 mu2)
  const double lambda_sq = two_ell1 * (two_ell1 + 2.0 * (mu1 + mu2));
  const auto [d1, d2] = derivatives(f, theta);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double v = f(theta);
  const double odd_r1 = v - f(kPi - theta);
  const double odd_r2 = v - f(-theta);
  return d2 + 2.0 * (mu2 * c / s - mu1 * s / c) * d1 - mu1 * odd_r1 / (c * c) - mu2 * odd_r2 / (s * s) +
         lambda_sq * v;
}

double residual_theta_j(const DunklConfig& config, int k, const AngularState& ang, Parity s_next, double theta) {
  const auto sh = thetak_shape(config, k, ang, s_next);
  const auto f = [&](double t) { return evalk(sh, t); };
  double mu_sum = 0.0;
  for (int i = 0; i < k; ++i) mu_sum += config.mu[i];
  const double mu_next = config.mu[k];
  const double lower = lambda_squared(k - 1, config, ang);
  const double upper = lambda_squared(k, config, ang);
  const auto [d1, d2] = derivatives(f, theta);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double v = f(theta);
  const double odd = v - f(kPi - theta);
  return d2 + ((k - 1 + 2.0 * mu_sum) * c / s - 2.0 * mu_next * s / c) * d1 - mu_next * odd / (c * c) -
         lower * v / (s * s) + upper * v;
}

double max_residual_theta_1(const DunklConfig& config, int two_ell1, Parity s1, Parity s2, double a, double b,
                            int n) {
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const double t = a + (b - a) * i / (n - 1);
    worst = std::max(worst, std::abs(residual_theta_1(config, two_ell1, s1, s2, t)));
  }
  return worst;
}

double overlap_theta_1(const DunklConfig& config, int two_ell_a, int two_ell_b, Parity s1, Parity s2) {
  const auto sa = theta1_shape(config, two_ell_a, s1, s2);
  const auto sb = theta1_shape(config, two_ell_b, s1, s2);
  const double mu1 = config.mu[0];
  const double mu2 = config.mu[1];
  const auto integrand = [&](double t) {
    const double w = std::pow(std::abs(std::cos(t)), 2.0 * mu1) * std::pow(std::abs(std::sin(t)), 2.0 * mu2);
    return eval1(sa, t) * eval1(sb, t) * w;
  };
  // the integrand has the same value on all four quadrants
  return 4.0 * oracle::integrate(integrand, 0.0, 0.5 * kPi, 1e-13, 1e-12).value;
}

}  // namespace dkg::angular
