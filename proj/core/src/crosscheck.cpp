#include "dkg/crosscheck.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

namespace dkg::crosscheck {

namespace {

double elapsed(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::vector<OscillatorCheck> check_oscillator(const oscillator::OscillatorSpec& spec, int levels, oracle::Grid grid) {
  const auto start = std::chrono::steady_clock::now();
  const auto e2 = oracle::eigensolve(oscillator::radial_problem(spec, grid), levels);
  const double secs = elapsed(start);
  std::vector<OscillatorCheck> out;
  for (int n = 0; n < levels; ++n) {
    OscillatorCheck c;
    c.n = n;
    c.analytic = oscillator::energy(spec, n);
    c.oracle = std::sqrt(std::max(0.0, e2[n]));
    c.rel_error = std::abs(c.oracle - c.analytic) / std::abs(c.analytic);
    c.seconds = secs;
    out.push_back(c);
  }
  return out;
}

std::string to_string(CoulombBranch b) {
  switch (b) {
    case CoulombBranch::Printed: return "printed";
    case CoulombBranch::Truncation: return "truncation";
    case CoulombBranch::Neither: return "neither";
  }
  return "neither";
}

CoulombCheck check_coulomb(const coulomb::CoulombSpec& spec, int n, int grid_n, double tol) {
  CoulombCheck c;
  c.n = n;
  c.printed = coulomb::energy(spec, n);
  c.truncation = coulomb::energy_from_truncation(spec, n);
  const auto start = std::chrono::steady_clock::now();
  const auto level = oracle::coulomb_level(coulomb::oracle_problem(spec, grid_n), n);
  c.seconds = elapsed(start);
  c.oracle = level.energy;
  c.r_max = level.r_max;
  c.rel_error_printed = std::abs(c.oracle - c.printed) / c.printed;
  c.rel_error_truncation = std::abs(c.oracle - c.truncation) / c.truncation;
  if (c.rel_error_printed <= tol)
    c.matched = CoulombBranch::Printed;
  else if (c.rel_error_truncation <= tol)
    c.matched = CoulombBranch::Truncation;
  return c;
}

std::vector<double> convergence_ratio(const oracle::RadialProblem& problem, int k) {
  const auto sym = oracle::symmetrize(problem);
  const int n = problem.grid.n;
  const auto a = oracle::grid_eigenvalues(sym, n, k);
  const auto b = oracle::grid_eigenvalues(sym, 2 * n, k);
  const auto c = oracle::grid_eigenvalues(sym, 4 * n, k);
  std::vector<double> out(k);
  for (int j = 0; j < k; ++j) out[j] = (a[j] - b[j]) / (b[j] - c[j]);
  return out;
}

double indicial_exponent(const oracle::RadialProblem& problem, double eigenvalue, double r_fit) {
  const auto sym = oracle::symmetrize(problem);
  const int n = problem.grid.n;
  const double h = problem.grid.r_max / n;
  const auto u = oracle::eigenvector(sym, n, eigenvalue);
  // u[i] sits at r = (i+1) h
  const auto local = [&](double r) {
    const long i = std::lround(r / h) - 1;
    if (i < 1 || i + 1 >= static_cast<long>(u.size()))
      throw Error(ErrorCode::GridTooCoarse, "fit radius outside the grid");
    const double ri = (i + 1) * h;
    return ri * (u[i + 1] - u[i - 1]) / (2.0 * h * u[i]);
  };
  return (4.0 * local(r_fit) - local(2.0 * r_fit)) / 3.0;
}

double indicial_root(double kappa_eff) { return 0.5 + std::sqrt(0.25 + kappa_eff); }

std::string describe(const DunklConfig& config, const AngularState& ang) {
  std::ostringstream os;
  os << "d=" << config.d << " mu=(";
  for (std::size_t j = 0; j < config.mu.size(); ++j) os << (j ? "," : "") << config.mu[j];
  os << ") s=(" << format_parities(config.s) << ") l=(";
  for (std::size_t j = 0; j < ang.two_ell.size(); ++j) os << (j ? "," : "") << ang.ell(j);
  os << ")";
  return os.str();
}

std::vector<Labeled<oscillator::OscillatorSpec>> oscillator_suite() {
  std::vector<Labeled<oscillator::OscillatorSpec>> out;
  auto add = [&](DunklConfig c) {
    oscillator::OscillatorSpec sp{c, AngularState::uniform(c.d, 1.0), 1.0, 1.0};
    out.push_back({describe(sp.config, sp.ang), sp});
  };
  for (int d : {3, 4, 5}) {
    for (double mu : {-0.4, 0.0, 0.4}) {
      DunklConfig c = DunklConfig::uniform(d, mu);
      for (int j = 0; j < d; ++j) c.s[j] = (j % 2 == 0) ? Parity::Even : Parity::Odd;
      add(c);
    }
  }
  add(DunklConfig{3, {0.4, -0.4, 0.0}, {Parity::Odd, Parity::Odd, Parity::Even}});
  add(DunklConfig::uniform(4, 0.4, Parity::Odd));
  add(DunklConfig{5, {-0.4, -0.4, -0.4, -0.4, -0.4},
                  {Parity::Even, Parity::Even, Parity::Odd, Parity::Odd, Parity::Even}});
  return out;
}

std::vector<Labeled<coulomb::CoulombSpec>> coulomb_suite() {
  struct Row {
    int d;
    double mu;
    double ze2;
  };
  const Row rows[] = {{3, 0.0, 0.5}, {3, 0.4, 1.0}, {3, -0.4, 0.5}, {3, 0.0, 1.0},
                      {4, 0.0, 1.0}, {4, 0.4, 0.5}, {4, -0.4, 1.0}, {4, 0.4, 1.0}};
  std::vector<Labeled<coulomb::CoulombSpec>> out;
  for (const auto& r : rows) {
    coulomb::CoulombSpec sp{DunklConfig::uniform(r.d, r.mu), AngularState::uniform(r.d, 1.0), 1.0, r.ze2};
    std::ostringstream os;
    os << describe(sp.config, sp.ang) << " Ze2=" << r.ze2;
    out.push_back({os.str(), sp});
  }
  return out;
}

}  // namespace dkg::crosscheck
