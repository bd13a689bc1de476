#include "dkg/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "dkg/errors.hpp"

namespace dkg::oracle {

namespace {

struct GaussLegendre16 {
  std::array<double, 16> x{};
  std::array<double, 16> w{};

  GaussLegendre16() {
    constexpr int n = 16;
    for (int i = 0; i < n / 2; ++i) {
      double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = z;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (z * p1 - p0) / (z * z - 1.0);
        const double dz = p1 / dp;
        z -= dz;
        if (std::abs(dz) < 1e-16) break;
      }
      x[i] = -z;
      x[n - 1 - i] = z;
      w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
  }
};

const GaussLegendre16& gauss16() {
  static const GaussLegendre16 rule;
  return rule;
}

double panel(const std::function<double(double)>& f, double a, double b) {
  const auto& gl = gauss16();
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double acc = 0.0;
  for (int i = 0; i < 16; ++i) acc += gl.w[i] * f(mid + half * gl.x[i]);
  return half * acc;
}

struct Adaptive {
  const std::function<double(double)>& f;
  double tol;
  double width;
  int max_depth;
  QuadratureResult result;

  void run(double a, double b, double whole, int depth) {
    const double mid = 0.5 * (a + b);
    const double left = panel(f, a, mid);
    const double right = panel(f, mid, b);
    const double diff = std::abs(left + right - whole);
    const double share = tol * (b - a) / width;
    if (diff <= share || mid == a || mid == b) {
      result.value += left + right;
      result.error += diff;
      result.panels += 2;
      return;
    }
    if (depth >= max_depth)
      throw Error(ErrorCode::MaxDepthExceeded,
                  "adaptive quadrature did not converge near x = " + std::to_string(mid));
    run(a, mid, left, depth + 1);
    run(mid, b, right, depth + 1);
  }
};

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b, double abs_tol,
                           double rel_tol, int max_depth) {
  if (a == b) return {};
  if (b < a) {
    auto r = integrate(f, b, a, abs_tol, rel_tol, max_depth);
    r.value = -r.value;
    return r;
  }
  // coarse estimate over 8 panels to set the relative tolerance
  double coarse = 0.0;
  const double step = (b - a) / 8.0;
  std::array<double, 8> pieces{};
  for (int i = 0; i < 8; ++i) {
    pieces[i] = panel(f, a + i * step, a + (i + 1) * step);
    coarse += pieces[i];
  }
  Adaptive ad{f, std::max(abs_tol, rel_tol * std::abs(coarse)), b - a, max_depth, {}};
  for (int i = 0; i < 8; ++i) ad.run(a + i * step, (i == 7) ? b : a + (i + 1) * step, pieces[i], 0);
  return ad.result;
}

double quadrature(const std::function<double(double)>& f, double a, double b) {
  return integrate(f, a, b).value;
}

// ---------------------------------------------------------------------------

SymmetrizedProblem symmetrize(const RadialProblem& p) {
  const double half = 0.5 * p.c;
  return {p.inverse_square + half * (half - 1.0), p.inverse_r, p.quadratic, p.constant, p.grid};
}

int sturm_count(const SymmetrizedProblem& p, int n, double sigma) {
  const double h = p.grid.r_max / n;
  const double inv_h2 = 1.0 / (h * h);
  const double off2 = inv_h2 * inv_h2;
  int count = 0;
  double pivot = 1.0;
  for (int i = 1; i < n; ++i) {
    const double diag = 2.0 * inv_h2 + p.potential(i * h) - sigma;
    pivot = (i == 1) ? diag : diag - off2 / pivot;
    if (pivot == 0.0) pivot = -std::numeric_limits<double>::min();
    if (pivot < 0.0) ++count;
  }
  return count;
}

namespace {

std::pair<double, double> gershgorin(const SymmetrizedProblem& p, int n) {
  const double h = p.grid.r_max / n;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (int i = 1; i < n; ++i) {
    const double v = p.potential(i * h);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return {lo, hi + 4.0 / (h * h)};
}

double kth_eigenvalue(const SymmetrizedProblem& p, int n, int k, double lo, double hi) {
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (sturm_count(p, n, mid) >= k + 1)
      hi = mid;
    else
      lo = mid;
    if (hi - lo <= 1e-15 * std::max(1.0, std::abs(mid))) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> grid_eigenvalues(const SymmetrizedProblem& p, int n, int k) {
  if (n < 500) throw Error(ErrorCode::InvalidArgument, "radial grid needs at least 500 points");
  const auto [lo, hi] = gershgorin(p, n);
  std::vector<double> out;
  out.reserve(k);
  double floor = lo;
  for (int j = 0; j < k; ++j) {
    const double ev = kth_eigenvalue(p, n, j, floor, hi);
    out.push_back(ev);
    floor = std::max(lo, ev - 1e-9 * std::max(1.0, std::abs(ev)));
  }
  return out;
}

std::vector<double> eigensolve(const RadialProblem& problem, int k) {
  if (!(problem.quadratic < 0.0))
    throw Error(ErrorCode::NonConfining, "eigensolve needs a confining r^2 term (quadratic < 0)");
  if (problem.grid.r_max <= 0.0) throw Error(ErrorCode::InvalidArgument, "r_max must be positive");
  const auto sym = symmetrize(problem);
  const int n = problem.grid.n;
  const auto coarse = grid_eigenvalues(sym, n, k);
  const auto fine = grid_eigenvalues(sym, 2 * n, k);
  std::vector<double> out(k);
  for (int j = 0; j < k; ++j) out[j] = (4.0 * fine[j] - coarse[j]) / 3.0;
  return out;
}

std::vector<double> eigenvector(const SymmetrizedProblem& p, int n, double eigenvalue) {
  const double h = p.grid.r_max / n;
  const double inv_h2 = 1.0 / (h * h);
  const double shift = eigenvalue - 1e-9 * std::max(1.0, std::abs(eigenvalue));
  const int m = n - 1;
  std::vector<double> diag(m), x(m, 1.0), c_prime(m), d_prime(m);
  for (int i = 0; i < m; ++i) diag[i] = 2.0 * inv_h2 + p.potential((i + 1) * h) - shift;
  const double off = -inv_h2;
  for (int iter = 0; iter < 4; ++iter) {
    // Thomas algorithm for (H - shift) y = x
    c_prime[0] = off / diag[0];
    d_prime[0] = x[0] / diag[0];
    for (int i = 1; i < m; ++i) {
      const double denom = diag[i] - off * c_prime[i - 1];
      c_prime[i] = off / denom;
      d_prime[i] = (x[i] - off * d_prime[i - 1]) / denom;
    }
    x[m - 1] = d_prime[m - 1];
    for (int i = m - 2; i >= 0; --i) x[i] = d_prime[i] - c_prime[i] * x[i + 1];
    double norm = 0.0;
    for (double v : x) norm += v * v;
    norm = std::sqrt(norm * h);
    for (double& v : x) v /= norm;
  }
  // fix sign so the solution starts positive
  for (double v : x) {
    if (v != 0.0) {
      if (v < 0.0)
        for (double& w : x) w = -w;
      break;
    }
  }
  return x;
}

int count_nodes(std::span<const double> values, double floor) {
  double peak = 0.0;
  for (double v : values) peak = std::max(peak, std::abs(v));
  const double cut = floor * peak;
  int nodes = 0;
  int last = 0;
  for (double v : values) {
    if (std::abs(v) <= cut) continue;
    const int sgn = v > 0 ? 1 : -1;
    if (last != 0 && sgn != last) ++nodes;
    last = sgn;
  }
  return nodes;
}

// ---------------------------------------------------------------------------

RadialProblem coulomb_at_energy(const CoulombProblem& p, double energy, Grid grid) {
  RadialProblem rp;
  rp.c = p.c;
  rp.inverse_square = p.varpi2 - p.ze2 * p.ze2;
  rp.inverse_r = 2.0 * energy * p.ze2;
  rp.quadratic = 0.0;
  rp.constant = -p.m * p.m;
  rp.grid = grid;
  return rp;
}

namespace {

struct Bracket {
  bool ok;
  double energy;
};

Bracket coulomb_bisect(const CoulombProblem& p, int level, Grid grid) {
  auto count = [&](double e) { return sturm_count(symmetrize(coulomb_at_energy(p, e, grid)), grid.n, e * e); };
  double lo = 0.01 * p.m;
  double hi = 0.999 * p.m;
  if (count(lo) >= level + 1) throw Error(ErrorCode::BisectionBracketFailure,
                                          "level " + std::to_string(level) + " lies below 0.01 m");
  if (count(hi) < level + 1) return {false, 0.0};
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (count(mid) >= level + 1)
      hi = mid;
    else
      lo = mid;
    if (hi - lo <= 1e-14 * p.m) break;
  }
  return {true, 0.5 * (lo + hi)};
}

}  // namespace

CoulombLevel coulomb_level(const CoulombProblem& p, int level) {
  if (p.n < 500) throw Error(ErrorCode::InvalidArgument, "radial grid needs at least 500 points");
  if (!(p.m > 0.0) || !(p.ze2 > 0.0)) throw Error(ErrorCode::InvalidArgument, "Coulomb oracle needs m > 0, Ze^2 > 0");
  const double half = 0.5 * p.c;
  const double kappa_eff = p.varpi2 - p.ze2 * p.ze2 + half * (half - 1.0);
  if (kappa_eff < -0.25)
    throw Error(ErrorCode::SupercriticalCharge, "1/r^2 coefficient below -1/4: no regular solution");
  const double exponent = 0.5 + std::sqrt(0.25 + kappa_eff);

  const bool fixed_box = p.r_max > 0.0;
  double r_max = fixed_box ? p.r_max : 100.0 / p.m;
  for (int attempt = 0; attempt < 12; ++attempt) {
    const Bracket coarse = coulomb_bisect(p, level, {r_max, p.n});
    if (!coarse.ok) {
      if (fixed_box)
        throw Error(ErrorCode::BisectionBracketFailure,
                    "level " + std::to_string(level) + " not bound below 0.999 m in the given box");
      r_max *= 2.0;
      continue;
    }
    const double kappa = std::sqrt(p.m * p.m - coarse.energy * coarse.energy);
    // Box must hold r^{g+n} e^{-kappa r} down to ~e^{-40} past its peak.
    const double needed = (2.0 * (exponent + level) + 40.0) / kappa;
    if (!fixed_box && needed > r_max) {
      r_max = 1.2 * needed;
      continue;
    }
    const Bracket fine = coulomb_bisect(p, level, {r_max, 2 * p.n});
    if (!fine.ok) throw Error(ErrorCode::BisectionBracketFailure, "fine grid lost the level");
    return {(4.0 * fine.energy - coarse.energy) / 3.0, coarse.energy, fine.energy, r_max};
  }
  throw Error(ErrorCode::BisectionBracketFailure, "could not size the radial box");
}

std::vector<double> eigensolve_coulomb(const CoulombProblem& problem, int k) {
  std::vector<double> out;
  for (int j = 0; j < k; ++j) out.push_back(coulomb_level(problem, j).energy);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Neumaier compensated accumulator
struct Compensated {
  long double sum = 0.0L;
  long double carry = 0.0L;
  long double abs_sum = 0.0L;

  void add(long double x) {
    const long double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      carry += (sum - t) + x;
    else
      carry += (x - t) + sum;
    sum = t;
    abs_sum += std::abs(x);
  }
  long double value() const { return sum + carry; }
};

}  // namespace

ReferenceValue reference_kummer(double a, double b, double z) {
  const bool poly = a <= 0.0 && a == std::round(a);
  const long n_terms = poly ? std::lround(-a) : -1;
  Compensated acc;
  long double term = 1.0L;
  acc.add(term);
  int small = 0;
  for (long k = 0; k < 100000; ++k) {
    if (poly && k >= n_terms) break;
    const long double denom = (static_cast<long double>(b) + k) * (k + 1);
    if (denom == 0.0L) throw Error(ErrorCode::ParameterPole, "reference Kummer series hit a pole in b");
    term *= (static_cast<long double>(a) + k) / denom * z;
    acc.add(term);
    if (!poly) {
      if (std::abs(term) < 1e-21L * std::abs(acc.value())) {
        if (++small >= 3) break;
      } else {
        small = 0;
      }
    }
  }
  const long double eps = std::numeric_limits<long double>::epsilon();
  return {static_cast<double>(acc.value()), static_cast<double>(4 * eps * acc.abs_sum)};
}

ReferenceValue reference_jacobi(int n, double alpha, double beta, double x) {
  if (n < 0) throw Error(ErrorCode::NegativeDegree, "Jacobi degree must be >= 0");
  if (!(alpha > -1.0)) throw Error(ErrorCode::InvalidArgument, "reference Jacobi series needs alpha > -1");
  // (alpha+1)_n / n!
  long double prefactor = 1.0L;
  for (int i = 1; i <= n; ++i) prefactor *= (static_cast<long double>(alpha) + i) / i;
  const long double y = (1.0L - static_cast<long double>(x)) / 2.0L;
  Compensated acc;
  long double term = 1.0L;
  acc.add(term);
  for (int k = 0; k < n; ++k) {
    term *= (static_cast<long double>(-n) + k) * (static_cast<long double>(n) + alpha + beta + 1.0L + k) /
            ((static_cast<long double>(alpha) + 1.0L + k) * (k + 1)) * y;
    acc.add(term);
  }
  const long double eps = std::numeric_limits<long double>::epsilon();
  return {static_cast<double>(prefactor * acc.value()),
          static_cast<double>(4 * eps * std::abs(prefactor) * acc.abs_sum)};
}

ReferenceValue reference_series(SeriesKind kind, std::span<const double> params, double z) {
  switch (kind) {
    case SeriesKind::Kummer:
      if (params.size() != 2) throw Error(ErrorCode::InvalidArgument, "Kummer reference needs {a, b}");
      return reference_kummer(params[0], params[1], z);
    case SeriesKind::Jacobi:
      if (params.size() != 3) throw Error(ErrorCode::InvalidArgument, "Jacobi reference needs {n, alpha, beta}");
      return reference_jacobi(static_cast<int>(std::lround(params[0])), params[1], params[2], z);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown series kind");
}

PairReference reference_pair(double beta_tilde, double x) {
  using Big = boost::multiprecision::cpp_bin_float_50;
  const Big pi = boost::math::constants::pi<Big>();
  const Big b = beta_tilde;
  const Big p = cosh(pi * (b + x)) / (exp(2 * pi * b) * cosh(pi * (b - x)));
  return {static_cast<double>(p), static_cast<double>(p / (1 - p)), static_cast<double>(1 - p)};
}

}  // namespace dkg::oracle
