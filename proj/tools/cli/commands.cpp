#include "commands.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "dkg/coulomb.hpp"
#include "dkg/oscillator.hpp"
#include "dkg/scattering.hpp"
#include "parallel.hpp"

namespace dkg::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string join(const std::vector<double>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? ";" : "") << format_cell(xs[i]);
  return os.str();
}

double printed_or_nan(const coulomb::CoulombSpec& spec, int n) {
  try {
    return coulomb::energy(spec, n);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DegenerateDenominator) return kNaN;
    throw;
  }
}

}  // namespace

std::vector<double> linspace(double a, double b, int n) {
  if (n < 2) return {a};
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = (i == n - 1) ? b : a + (b - a) * i / (n - 1);
  return out;
}

Table osc_spectrum(const RunConfig& rc) {
  const auto r = resolve(rc);
  const oscillator::OscillatorSpec spec{r.config, r.ang, rc.m, rc.omega};
  Table t;
  t.name = "osc-spectrum";
  t.columns = {"n", "E", "E_negative", "E_nonrel"};
  for (int n : rc.n) {
    t.rows.push_back({static_cast<long long>(n), oscillator::energy(spec, n),
                      oscillator::energy(spec, n, oscillator::Branch::Negative), oscillator::energy_nonrel(spec, n)});
  }
  return t;
}

Table osc_profile(const RunConfig& rc) {
  const auto r = resolve(rc);
  const oscillator::OscillatorSpec spec{r.config, r.ang, rc.m, rc.omega};
  const int points = rc.points > 0 ? rc.points : 2000;
  Table t;
  t.name = "osc-profile";
  t.columns = {"n", "rho", "density", "probability"};
  t.meta.push_back({"grid", std::to_string(points) + " uniform points on (0, 4(2n+b)]"});
  const auto profiles = parallel_map<oscillator::RadialProfile>(rc.n.size(), [&](std::size_t i) {
    return oscillator::density_profile(spec, rc.n[i], oscillator::default_grid(spec, rc.n[i], points));
  });
  for (std::size_t i = 0; i < rc.n.size(); ++i) {
    t.meta.push_back({"norm_constant n=" + std::to_string(rc.n[i]), format_cell(profiles[i].norm_constant)});
    for (std::size_t k = 0; k < profiles[i].grid.size(); ++k)
      t.rows.push_back({static_cast<long long>(rc.n[i]), profiles[i].grid[k], profiles[i].values[k],
                        profiles[i].probability[k]});
  }
  return t;
}

Table coulomb_spectrum(const RunConfig& rc) {
  const auto r = resolve(rc);
  const coulomb::CoulombSpec spec{r.config, r.ang, rc.m, rc.ze2};
  Table t;
  t.name = "coulomb-spectrum";
  t.columns = {"n", "E_printed", "E_truncation", "delta", "kappa_b"};
  t.meta.push_back({"note", "E_printed uses (n-1/2-sqrt Q)^2; E_truncation uses n+1/2+sqrt Q and matches the "
                            "numerical oracle for all n (they coincide at n=0)"});
  for (int n : rc.n) {
    const auto b = coulomb::bound_state(spec, n);
    t.rows.push_back({static_cast<long long>(n), printed_or_nan(spec, n), b.energy, b.delta, b.kappa_b});
  }
  return t;
}

Table coulomb_sweep(const RunConfig& rc) {
  const auto r = resolve(rc);
  coulomb::CoulombSpec spec{r.config, r.ang, rc.m, 0.0};
  const double top = coulomb::critical_coupling(spec);
  const double lo = rc.ze2_min.value_or(0.01);
  const double hi = rc.ze2_max.value_or(top);
  if (!(hi > lo)) throw Error(ErrorCode::InvalidArgument, "Ze^2 sweep needs ze2_max > ze2_min");
  const int points = rc.points > 0 ? rc.points : 200;
  const auto grid = linspace(lo, hi, points);
  Table t;
  t.name = "coulomb-sweep";
  t.columns = {"ze2", "n", "E_printed", "E_truncation"};
  t.meta.push_back({"critical Ze^2 (Q=0)", format_cell(top)});
  const auto rows = parallel_map<std::vector<Row>>(grid.size(), [&](std::size_t i) {
    std::vector<Row> out;
    coulomb::CoulombSpec local = spec;
    local.ze2 = grid[i];
    if (!coulomb::constraint(local)) return out;
    for (int n : rc.n)
      out.push_back({grid[i], static_cast<long long>(n), printed_or_nan(local, n),
                     coulomb::energy_from_truncation(local, n)});
    return out;
  });
  for (const auto& block : rows) t.rows.insert(t.rows.end(), block.begin(), block.end());
  return t;
}

Table pair_creation(const RunConfig& rc) {
  const auto r = resolve(rc);
  Table t;
  t.name = "pair-creation";
  t.columns = {"ze2", "beta_tilde", "x", "probability", "density"};
  t.meta.push_back({"beta branch", "beta = -i beta~ (reproduces the closed-form probability)"});
  const double thr = std::sqrt(scattering::threshold(r.config, r.ang));
  t.meta.push_back({"threshold Ze^2", format_cell(thr)});
  auto row = [&](double ze2) -> Row {
    const auto res = scattering::scatter({r.config, r.ang, rc.m, ze2, rc.energy});
    return {ze2, res.beta_tilde, res.alpha_im, res.probability, res.density};
  };
  if (!rc.ze2_min && !rc.ze2_max) {
    t.rows.push_back(row(rc.ze2));
    return t;
  }
  const double lo = std::max(rc.ze2_min.value_or(thr), thr);
  const double hi = rc.ze2_max.value_or(thr + 5.0);
  if (!(hi > lo)) throw Error(ErrorCode::InvalidArgument, "Ze^2 sweep needs ze2_max above the threshold");
  const auto grid = linspace(lo, hi, rc.points > 0 ? rc.points : 200);
  const auto rows = parallel_map<Row>(grid.size(), [&](std::size_t i) { return row(grid[i]); });
  t.rows.insert(t.rows.end(), rows.begin(), rows.end());
  return t;
}

Table critical_charge_table(const RunConfig& rc) {
  const auto r = resolve(rc);
  const auto cc = scattering::critical_charge(r.config, r.ang);
  Table t;
  t.name = "critical-charge";
  t.columns = {"d", "l", "mu", "Z", "Z_over_137", "Z_reduced_over_137"};
  t.meta.push_back({"formula", "Z = 137 sqrt(varpi^2 + vartheta(vartheta+1) + 1/4); reduced 137(l + d/2 - 1)"});
  std::vector<double> ells;
  for (std::size_t j = 0; j < r.ang.two_ell.size(); ++j) ells.push_back(r.ang.ell(j));
  Cell reduced = std::string();
  if (cc.reduced) reduced = *cc.reduced / kInverseCoupling;
  t.rows.push_back({static_cast<long long>(r.config.d), join(ells), join(r.config.mu), cc.z, cc.z_over_137, reduced});
  return t;
}

}  // namespace dkg::cli
