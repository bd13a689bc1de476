#include <cmath>
#include <limits>
#include <sstream>

#include "commands.hpp"
#include "dkg/coulomb.hpp"
#include "dkg/oscillator.hpp"
#include "dkg/scattering.hpp"
#include "parallel.hpp"

namespace dkg::cli {

namespace {

std::string mu_label(double mu) {
  std::ostringstream os;
  os << (mu > 0 ? "+" : "") << mu;
  return os.str();
}

const char* relaxed_note = "relaxed (lengths and mu only; l_i = 1 on every axis regardless of parity)";

Table oscillator_spectra(const std::string& id, double mu) {
  Table t;
  t.name = id;
  t.columns = {"series", "x", "y", "d", "s"};
  t.meta = {{"figure", "oscillator energy vs n"},
            {"parameters", "l_i = 1, mu_i = " + mu_label(mu) + ", m = omega = 1, d = 3..6, n = 0..10"},
            {"coupling", relaxed_note},
            {"x", "n"},
            {"y", "E (positive branch)"}};
  for (Parity p : {Parity::Even, Parity::Odd}) {
    for (int d = 3; d <= 6; ++d) {
      const oscillator::OscillatorSpec spec{DunklConfig::uniform(d, mu, p), AngularState::uniform(d, 1.0), 1.0, 1.0};
      const std::string s = p == Parity::Even ? "+" : "-";
      for (int n = 0; n <= 10; ++n)
        t.rows.push_back({"d=" + std::to_string(d) + ",s=" + s, static_cast<long long>(n),
                          oscillator::energy(spec, n), static_cast<long long>(d), s});
    }
  }
  return t;
}

Table oscillator_densities() {
  Table t;
  t.name = "F3";
  t.columns = {"series", "x", "y", "probability"};
  t.meta = {{"figure", "oscillator radial density vs rho"},
            {"parameters", "d = 3, l = (1,1), s = +, m = omega = 1, n = 2..5, mu_i = +-0.4"},
            {"x", "rho = m omega r^2"},
            {"y", "normalized |R(rho)|^2"},
            {"probability", "|R|^2 times the radial measure, integrates to 1 over rho"}};
  struct Job {
    double mu;
    int n;
  };
  std::vector<Job> jobs;
  for (double mu : {0.4, -0.4})
    for (int n = 2; n <= 5; ++n) jobs.push_back({mu, n});
  const auto profiles = parallel_map<oscillator::RadialProfile>(jobs.size(), [&](std::size_t i) {
    const oscillator::OscillatorSpec spec{DunklConfig::uniform(3, jobs[i].mu), AngularState::uniform(3, 1.0), 1.0,
                                          1.0};
    return oscillator::density_profile(spec, jobs[i].n);
  });
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const std::string label = "mu=" + mu_label(jobs[i].mu) + ",n=" + std::to_string(jobs[i].n);
    for (std::size_t k = 0; k < profiles[i].grid.size(); ++k)
      t.rows.push_back({label, profiles[i].grid[k], profiles[i].values[k], profiles[i].probability[k]});
  }
  return t;
}

coulomb::CoulombSpec coulomb_spec(int d, double mu, double ze2) {
  return {DunklConfig::uniform(d, mu), AngularState::uniform(d, 1.0), 1.0, ze2};
}

Table coulomb_vs_n() {
  Table t;
  t.name = "F4";
  t.columns = {"series", "x", "y", "E_truncation"};
  t.meta = {{"figure", "Coulomb energy vs n"},
            {"parameters", "l_i = 1, Ze^2 = 1, m = 1, d = 3..6, mu_i = +-0.4"},
            {"x", "n"},
            {"y", "E with the printed denominator (n - 1/2 - sqrt Q)^2"},
            {"n range", "from ceil(max_d (1/2 + sqrt Q)) to 25 levels above it, where the printed form "
                        "increases with n and decreases with d"}};
  for (double mu : {0.4, -0.4}) {
    double g_max = 0.0;
    for (int d = 3; d <= 6; ++d) g_max = std::max(g_max, 0.5 + std::sqrt(coulomb::radicand(coulomb_spec(d, mu, 1.0))));
    const int start = static_cast<int>(std::ceil(g_max));
    for (int d = 3; d <= 6; ++d) {
      const auto spec = coulomb_spec(d, mu, 1.0);
      const std::string label = "mu=" + mu_label(mu) + ",d=" + std::to_string(d);
      for (int n = start; n <= start + 25; ++n)
        t.rows.push_back({label, static_cast<long long>(n), coulomb::energy(spec, n),
                          coulomb::energy_from_truncation(spec, n)});
    }
  }
  return t;
}

Table coulomb_vs_coupling() {
  Table t;
  t.name = "F5";
  t.columns = {"series", "x", "y", "E_truncation", "ze2_critical"};
  t.meta = {{"figure", "Coulomb energy vs Ze^2"},
            {"parameters", "l_i = 1, n = 1, m = 1, d = 3..6, mu_i = +-0.4"},
            {"x", "Ze^2, 1000 points from 0.01 to the Q = 0 coupling of each curve"},
            {"y", "E with the printed denominator"}};
  struct Curve {
    double mu;
    int d;
  };
  std::vector<Curve> curves;
  for (double mu : {0.4, -0.4})
    for (int d = 3; d <= 6; ++d) curves.push_back({mu, d});
  const auto blocks = parallel_map<std::vector<Row>>(curves.size(), [&](std::size_t i) {
    auto spec = coulomb_spec(curves[i].d, curves[i].mu, 0.0);
    const double top = coulomb::critical_coupling(spec);
    const std::string label = "mu=" + mu_label(curves[i].mu) + ",d=" + std::to_string(curves[i].d);
    std::vector<Row> rows;
    for (double z : linspace(0.01, top, 1000)) {
      spec.ze2 = z;
      if (!coulomb::constraint(spec)) continue;
      double printed;
      try {
        printed = coulomb::energy(spec, 1);
      } catch (const Error&) {
        continue;  // the printed denominator vanishes exactly on this point
      }
      rows.push_back({label, z, printed, coulomb::energy_from_truncation(spec, 1), top});
    }
    return rows;
  });
  for (const auto& b : blocks) t.rows.insert(t.rows.end(), b.begin(), b.end());
  return t;
}

Table coulomb_vs_dimension() {
  Table t;
  t.name = "F6";
  t.columns = {"series", "x", "y", "E_truncation"};
  t.meta = {{"figure", "Coulomb energy vs d"},
            {"parameters", "l_i = 1, Ze^2 = 1, m = 1, n = 0..3, d = 3..10, mu_i = +-0.4"},
            {"x", "d"},
            {"y", "E with the printed denominator"}};
  for (double mu : {0.4, -0.4})
    for (int n = 0; n <= 3; ++n)
      for (int d = 3; d <= 10; ++d) {
        const auto spec = coulomb_spec(d, mu, 1.0);
        t.rows.push_back({"mu=" + mu_label(mu) + ",n=" + std::to_string(n), static_cast<long long>(d),
                          coulomb::energy(spec, n), coulomb::energy_from_truncation(spec, n)});
      }
  return t;
}

Table pair_probability_figure(const std::string& id, int d) {
  Table t;
  t.name = id;
  t.columns = {"series", "x", "y", "log_one_minus_y", "density", "beta_tilde"};
  t.meta = {{"figure", "pair-creation probability vs Ze^2"},
            {"parameters", "d = " + std::to_string(d) + ", l_i = 1, m = 1, mu_i in {-0.4, 0, +0.4}"},
            {"energy", "E = 2m (not given with the figure; chosen here)"},
            {"x", "Ze^2 on a grid shared by all series, starting at each series' own threshold"},
            {"y", "probability"},
            {"log_one_minus_y", "log(1 - probability), resolves the ordering where y rounds to 1"}};
  const double mus[] = {-0.4, 0.0, 0.4};
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (double mu : mus) {
    const double thr = std::sqrt(scattering::threshold(DunklConfig::uniform(d, mu), AngularState::uniform(d, 1.0)));
    lo = std::min(lo, thr);
    hi = std::max(hi, thr);
  }
  const auto grid = linspace(lo, hi + 4.0, 301);
  for (double mu : mus) {
    const auto config = DunklConfig::uniform(d, mu);
    const auto ang = AngularState::uniform(d, 1.0);
    const double thr = std::sqrt(scattering::threshold(config, ang));
    const std::string label = "mu=" + mu_label(mu);
    std::vector<double> xs{thr};
    for (double z : grid)
      if (z > thr) xs.push_back(z);
    for (double z : xs) {
      const auto r = scattering::scatter({config, ang, 1.0, z, 2.0});
      t.rows.push_back({label, z, r.probability, r.log_complement, r.density, r.beta_tilde});
    }
  }
  return t;
}

}  // namespace

Table figure_data(const std::string& id) {
  if (id == "F1") return oscillator_spectra(id, 0.4);
  if (id == "F2") return oscillator_spectra(id, -0.4);
  if (id == "F3") return oscillator_densities();
  if (id == "F4") return coulomb_vs_n();
  if (id == "F5") return coulomb_vs_coupling();
  if (id == "F6") return coulomb_vs_dimension();
  if (id == "F7") return pair_probability_figure(id, 3);
  if (id == "F8") return pair_probability_figure(id, 4);
  throw Error(ErrorCode::UnknownFigure, "figure id '" + id + "' is not one of F1..F8");
}

}  // namespace dkg::cli
