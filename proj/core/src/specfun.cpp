#include "dkg/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/multiprecision/cpp_complex.hpp>

#include "dkg/errors.hpp"

namespace dkg::specfun {

namespace {

// Godfrey's coefficients, g = 607/128, 15 terms.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,      -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,    .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4,  .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,   -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4,  .36899182659531622704e-5,
};

constexpr double kHalfLog2Pi = 0.91893853320467274178032973640562;

Complex principal(Complex w) {
  double im = std::remainder(w.imag(), 2.0 * kPi);
  if (im <= -kPi) im += 2.0 * kPi;
  return {w.real(), im};
}

Complex log_gamma_right(Complex z) {
  const Complex zm = z - 1.0;
  Complex acc = kLanczos[0];
  for (std::size_t k = 1; k < kLanczos.size(); ++k) acc += kLanczos[k] / (zm + static_cast<double>(k));
  const Complex t = zm + kLanczosG + 0.5;
  return kHalfLog2Pi + (zm + 0.5) * std::log(t) - t + std::log(acc);
}

bool is_nonpositive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real());
}

constexpr int kMaxTerms = 20000;
constexpr double kCancellationLimit = 1e3;
constexpr double kMaxArgument = 500.0;

struct SeriesResult {
  Complex value;
  double max_term;
};

template <class C>
C series_sum(C a, C b, C z, long n_terms, int& count) {
  // n_terms >= 0: finite polynomial; otherwise convergence-driven
  C term = 1;
  C sum = 1;
  int small_run = 0;
  for (long k = 0;; ++k) {
    if (n_terms >= 0 && k >= n_terms) break;
    const C kk = static_cast<double>(k);
    term *= (a + kk) / ((b + kk) * (kk + C(1))) * z;
    sum += term;
    count = static_cast<int>(k + 1);
    if (n_terms < 0) {
      using std::abs;
      if (abs(term) < 1e-17 * abs(sum)) {
        if (++small_run >= 3) break;
      } else {
        small_run = 0;
      }
      if (k > kMaxTerms)
        throw Error(ErrorCode::NonConvergence, "Kummer series exceeded term budget");
    }
  }
  return sum;
}

SeriesResult series_double(Complex a, Complex b, Complex z, long n_terms) {
  Complex term = 1.0;
  Complex sum = 1.0;
  double max_term = 1.0;
  int small_run = 0;
  for (long k = 0;; ++k) {
    if (n_terms >= 0 && k >= n_terms) break;
    const double kk = static_cast<double>(k);
    term *= (a + kk) / ((b + kk) * (kk + 1.0)) * z;
    sum += term;
    max_term = std::max(max_term, std::abs(term));
    if (n_terms < 0) {
      if (std::abs(term) < 1e-17 * std::abs(sum)) {
        if (++small_run >= 3) break;
      } else {
        small_run = 0;
      }
      if (k > kMaxTerms)
        throw Error(ErrorCode::NonConvergence, "Kummer series exceeded term budget");
    }
  }
  return {sum, max_term};
}

Complex series_extended(Complex a, Complex b, Complex z, long n_terms) {
  using Big = boost::multiprecision::cpp_complex_50;
  int count = 0;
  const Big s = series_sum<Big>(Big(a.real(), a.imag()), Big(b.real(), b.imag()),
                                Big(z.real(), z.imag()), n_terms, count);
  return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
}

}  // namespace

Complex log_gamma(Complex z) {
  if (is_nonpositive_integer(z))
    throw Error(ErrorCode::PoleAtNonPositiveInteger,
                "log_gamma evaluated at the pole z = " + std::to_string(z.real()));
  if (z.real() >= 0.5) return principal(log_gamma_right(z));
  // Gamma(z) Gamma(1-z) = pi / sin(pi z)
  const Complex log_sin = std::log(std::sin(kPi * z));
  return principal(std::log(kPi) - log_sin - log_gamma_right(1.0 - z));
}

Complex kummer_m(Complex a, Complex b, Complex z) {
  long n_terms = -1;
  if (is_nonpositive_integer(a)) n_terms = std::lround(-a.real());

  if (is_nonpositive_integer(b)) {
    const long pole = std::lround(-b.real());  // (b)_k vanishes from k = pole + 1
    if (n_terms < 0 || n_terms > pole)
      throw Error(ErrorCode::ParameterPole,
                  "Kummer M undefined for b = " + std::to_string(b.real()));
  }
  if (z == 0.0) return 1.0;
  if (n_terms < 0 && std::abs(z) > kMaxArgument)
    throw Error(ErrorCode::NonConvergence,
                "Kummer series not supported for |z| = " + std::to_string(std::abs(z)));

  const auto fast = series_double(a, b, z, n_terms);
  if (std::isfinite(fast.value.real()) && std::isfinite(fast.value.imag()) &&
      fast.max_term <= kCancellationLimit * std::abs(fast.value))
    return fast.value;
  return series_extended(a, b, z, n_terms);
}

double kummer_m(double a, double b, double z) { return kummer_m(Complex(a), Complex(b), Complex(z)).real(); }

double jacobi_p(int n, double alpha, double beta, double x) {
  if (n < 0) throw Error(ErrorCode::NegativeDegree, "Jacobi degree must be >= 0");
  if (n == 0) return 1.0;
  const double p1 = 0.5 * (alpha - beta) + 0.5 * (alpha + beta + 2.0) * x;
  if (n == 1) return p1;

  double prev = 1.0;
  double cur = p1;
  const double ab = alpha + beta;
  for (int k = 2; k <= n; ++k) {
    const double two_k_ab = 2.0 * k + ab;
    const double a1 = 2.0 * k * (k + ab) * (two_k_ab - 2.0);
    if (a1 == 0.0) {
      // Recurrence degenerates (only possible for alpha + beta <= -2);
      // use the binomial sum instead.
      // sum_j C(n+alpha, n-j) C(n+beta, j) ((x-1)/2)^j ((x+1)/2)^(n-j)
      auto gen_binom = [](double top, int k_) {
        double r = 1.0;
        for (int i = 1; i <= k_; ++i) r *= (top - k_ + i) / i;
        return r;
      };
      double acc = 0.0;
      for (int j = 0; j <= n; ++j)
        acc += gen_binom(n + alpha, n - j) * gen_binom(n + beta, j) * std::pow(0.5 * (x - 1.0), j) *
               std::pow(0.5 * (x + 1.0), n - j);
      return acc;
    }
    const double a2 = (two_k_ab - 1.0) * (alpha * alpha - beta * beta);
    const double a3 = (two_k_ab - 2.0) * (two_k_ab - 1.0) * two_k_ab;
    const double a4 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * two_k_ab;
    const double next = ((a2 + a3 * x) * cur - a4 * prev) / a1;
    prev = cur;
    cur = next;
  }
  return cur;
}

Complex whittaker_m(Complex alpha, Complex beta, Complex z) {
  const Complex b = 1.0 + 2.0 * beta;
  if (is_nonpositive_integer(b))
    throw Error(ErrorCode::ParameterPole, "Whittaker M needs 1 + 2 beta off the non-positive integers");
  if (z.imag() == 0.0 && z.real() < 0.0)
    throw Error(ErrorCode::BranchCutInput, "Whittaker M evaluated on the negative real axis");
  const Complex power = beta + 0.5;
  if (z == 0.0) {
    if (power.real() > 0.0) return 0.0;
    throw Error(ErrorCode::ParameterPole, "Whittaker M singular at z = 0 for Re(beta) <= -1/2");
  }
  return std::exp(power * std::log(z) - 0.5 * z) * kummer_m(beta - alpha + 0.5, b, z);
}

double log_cosh(double y) noexcept {
  const double a = std::abs(y);
  return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

}  // namespace dkg::specfun
