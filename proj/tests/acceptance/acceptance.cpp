// Prints one PASS/FAIL line per acceptance criterion; exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "cli/cli.hpp"
#include "cli/commands.hpp"
#include "dkg/angular.hpp"
#include "dkg/coulomb.hpp"
#include "dkg/crosscheck.hpp"
#include "dkg/oracle.hpp"
#include "dkg/oscillator.hpp"
#include "dkg/scattering.hpp"
#include "dkg/specfun.hpp"

using namespace dkg;
using std::numbers::pi;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Notes {
 public:
  void fail(const std::string& what) {
    pass_ = false;
    if (failures_++ < 3) os_ << (os_.tellp() > 0 ? "; " : "") << what;
  }
  void note(const std::string& what) { os_ << (os_.tellp() > 0 ? "; " : "") << what; }
  Outcome done() {
    if (failures_ > 3) note("(+" + std::to_string(failures_ - 3) + " more)");
    return {pass_, os_.str()};
  }

 private:
  bool pass_ = true;
  int failures_ = 0;
  std::ostringstream os_;
};

std::string fmt(double v, const char* spec = "%.3g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

// ---------------------------------------------------------------------------

Outcome table3() {
  struct Entry {
    int d, ell;
    double plus, minus;
    double zero;
  };
  const Entry table[] = {
      {3, 1, 5.7, 3.3, 1.5},   {4, 1, 8.6, 5.4, 2.0},   {5, 1, 11.5, 7.5, 2.5},  {6, 1, 14.4, 9.6, 3.0},
      {3, 2, 9.7, 7.3, 2.5},   {4, 2, 14.6, 11.4, 3.0}, {5, 2, 19.5, 15.5, 3.5}, {6, 2, 24.4, 19.6, 4.0},
      {3, 3, 13.7, 11.3, 3.5}, {4, 3, 20.6, 17.4, 4.0}, {5, 3, 27.5, 23.5, 4.5}, {6, 3, 34.4, 23.6, 5.0},
  };
  Notes n;
  int matched_plus = 0, matched_minus = 0, matched_zero = 0;
  auto z_over_137 = [](int d, int ell, double mu) {
    cli::RunConfig rc;
    rc.command = cli::Command::CriticalCharge;
    rc.d = d;
    rc.mu = {mu};
    rc.ell = {static_cast<double>(ell)};
    rc.relax_coupling = true;
    const auto t = cli::critical_charge_table(rc);
    return std::pair{t.number(0, "Z_over_137"), t.text(0, "Z_reduced_over_137")};
  };
  for (const auto& e : table) {
    const auto [plus, unused_p] = z_over_137(e.d, e.ell, 0.4);
    if (std::abs(plus - e.plus) <= 0.05)
      ++matched_plus;
    else
      n.fail("mu=+0.4 d=" + std::to_string(e.d) + " l=" + std::to_string(e.ell) + " got " + fmt(plus));
    const auto [minus, unused_m] = z_over_137(e.d, e.ell, -0.4);
    const bool excluded = e.d == 6 && e.ell == 3;
    if (std::abs(minus - e.minus) <= 0.05)
      ++matched_minus;
    else if (excluded)
      n.note("excluded d=6 l=3 mu=-0.4: computed " + fmt(minus) + " vs printed " + fmt(e.minus));
    else
      n.fail("mu=-0.4 d=" + std::to_string(e.d) + " l=" + std::to_string(e.ell) + " got " + fmt(minus));
    const auto [unused_z, reduced] = z_over_137(e.d, e.ell, 0.0);
    if (!reduced.empty() && std::stod(reduced) == e.zero)
      ++matched_zero;
    else
      n.fail("reduced d=" + std::to_string(e.d) + " l=" + std::to_string(e.ell) + " got '" + reduced + "'");
  }
  n.note("matched +0.4: " + std::to_string(matched_plus) + "/12, -0.4: " + std::to_string(matched_minus) +
         "/11, reduced: " + std::to_string(matched_zero) + "/12");
  return n.done();
}

Outcome oscillator_oracle() {
  Notes n;
  double worst = 0.0, slowest = 0.0;
  int count = 0;
  for (const auto& c : crosscheck::oscillator_suite()) {
    for (const auto& r : crosscheck::check_oscillator(c.spec, 3)) {
      ++count;
      worst = std::max(worst, r.rel_error);
      slowest = std::max(slowest, r.seconds);
      if (r.rel_error > 1e-5) n.fail(c.label + " n=" + std::to_string(r.n) + " rel " + fmt(r.rel_error));
      if (r.seconds > 10.0) n.fail(c.label + " took " + fmt(r.seconds) + " s");
    }
  }
  n.note(std::to_string(count) + " levels over 12 configs, worst rel error " + fmt(worst) + ", slowest solve " +
         fmt(slowest) + " s");
  return n.done();
}

Outcome coulomb_oracle() {
  Notes n;
  int printed = 0, documented = 0, total = 0;
  double slowest = 0.0;
  for (const auto& c : crosscheck::coulomb_suite()) {
    for (int level : {0, 1}) {
      ++total;
      const auto r = crosscheck::check_coulomb(c.spec, level);
      slowest = std::max(slowest, r.seconds);
      if (r.seconds > 30.0) n.fail(c.label + " took " + fmt(r.seconds) + " s");
      if (r.rel_error_printed <= 1e-5)
        ++printed;
      else if (r.rel_error_truncation <= 1e-5)
        ++documented;
      else
        n.fail(c.label + " n=" + std::to_string(level) + " oracle " + fmt(r.oracle, "%.8f") + " printed " +
               fmt(r.printed, "%.8f") + " truncation " + fmt(r.truncation, "%.8f"));
    }
  }
  n.note(std::to_string(printed) + "/" + std::to_string(total) + " match the printed branch, " +
         std::to_string(documented) + " documented mismatches where only the truncation branch matches; slowest " +
         fmt(slowest) + " s");
  return n.done();
}

Outcome parity_shift() {
  Notes n;
  const std::vector<oscillator::OscillatorSpec> specs = {
      {DunklConfig{3, {0.4, 0.4, 0.4}, {}}, AngularState::uniform(3, 1), 1.0, 1.0},
      {DunklConfig{3, {-0.4, 0.2, 0.1}, {}}, AngularState::uniform(3, 2), 2.0, 0.5},
      {DunklConfig{4, {0.3, -0.3, 0.45, 0.0}, {}}, AngularState::uniform(4, 1), 1.0, 1.0},
      {DunklConfig{5, {0.4, 0.4, 0.4, 0.4, 0.4}, {}}, AngularState::uniform(5, 1), 1.5, 2.0},
      {DunklConfig{6, {-0.4, -0.1, 0.2, 0.3, -0.25, 0.05}, {}}, AngularState::uniform(6, 1), 1.0, 3.0},
      {DunklConfig{2, {0.35, -0.2}, {}}, AngularState::uniform(2, 3), 4.0, 0.25},
  };
  int axes = 0;
  for (auto s : specs) {
    s.config.s.assign(s.config.d, Parity::Even);
    for (int j = 0; j < s.config.d; ++j) {
      ++axes;
      auto flipped = s;
      flipped.config.s[j] = Parity::Odd;
      const double diff = oscillator::energy_squared(flipped, 1) - oscillator::energy_squared(s, 1);
      const double expect = 4.0 * s.m * s.omega * s.config.mu[j];
      if (expect == 0.0 ? diff != 0.0 : rel(diff, expect) > 1e-12)
        n.fail("d=" + std::to_string(s.config.d) + " axis " + std::to_string(j) + " shift " + fmt(diff, "%.17g"));
    }
  }
  coulomb::CoulombSpec c{DunklConfig::uniform(3, 0.4), AngularState::uniform(3, 1), 1.0, 1.0};
  const double printed = coulomb::energy(c, 1), truncation = coulomb::energy_from_truncation(c, 1);
  for (int mask = 0; mask < 8; ++mask) {
    for (int j = 0; j < 3; ++j) c.config.s[j] = (mask >> j) & 1 ? Parity::Odd : Parity::Even;
    if (coulomb::energy(c, 1) != printed || coulomb::energy_from_truncation(c, 1) != truncation)
      n.fail("Coulomb energy changed for parity mask " + std::to_string(mask));
  }
  n.note(std::to_string(axes) + " axes over 6 configs; Coulomb identical over 8 parity vectors");
  return n.done();
}

Outcome probability_identities() {
  Notes n;
  double worst_n = 0.0, worst_ba = 0.0;
  for (int i = 0; i < 10; ++i) {
    for (int k = 0; k < 10; ++k) {
      const double b = 0.1 + 4.9 * i / 9.0, x = 0.1 + 4.9 * k / 9.0;
      const auto ref = oracle::reference_pair(b, x);
      const double p = scattering::pair_probability(b, x);
      // 1 - P is formed in 50-digit arithmetic; in double it cancels when P is near 1
      const double en = rel(scattering::pair_density(b, x), ref.density);
      const double eb = rel(scattering::bogoliubov(x, b).ratio_squared, p);
      worst_n = std::max(worst_n, en);
      worst_ba = std::max(worst_ba, eb);
      if (en > 1e-12) n.fail("N vs P/(1-P) at (" + fmt(b) + "," + fmt(x) + ") rel " + fmt(en));
      if (eb > 1e-9) n.fail("|B/A|^2 vs P at (" + fmt(b) + "," + fmt(x) + ") rel " + fmt(eb));
    }
  }
  for (double b : {10.0, 30.0, 50.0}) {
    for (double x : {0.1, 25.0, 50.0}) {
      const double lp = scattering::log_pair_probability(b, x);
      const double ln = scattering::log_pair_density(b, x);
      const auto bg = scattering::bogoliubov(x, b);
      if (!std::isfinite(lp) || !std::isfinite(ln) || !std::isfinite(bg.log_abs_a) || !std::isfinite(bg.log_abs_b))
        n.fail("non-finite log value at (" + fmt(b) + "," + fmt(x) + ")");
    }
  }
  n.note("worst N rel " + fmt(worst_n) + ", worst |B/A|^2 rel " + fmt(worst_ba) + "; logs finite to 50");
  return n.done();
}

Outcome special_functions() {
  Notes n;
  double worst_g = 0.0;
  for (int i = 1; i <= 100; ++i) {
    const double x = 0.1 * i;
    const double a = std::exp(2.0 * std::real(specfun::log_gamma({0.5, x}))) * std::cosh(pi * x);
    const double b = std::exp(2.0 * std::real(specfun::log_gamma({1.0, x}))) * std::sinh(pi * x);
    worst_g = std::max({worst_g, rel(a, pi), rel(b, pi * x)});
  }
  if (worst_g > 1e-10) n.fail("Gamma line identities rel " + fmt(worst_g));
  double worst_k = 0.0;
  for (int m = 0; m <= 15; ++m) {
    for (double b : {0.5, 1.0, 2.7, 6.7, 11.0}) {
      for (double z : {-3.0, 0.5, 1.0, 4.0, 12.0}) {
        const auto ref = oracle::reference_kummer(-m, b, z);
        const double err = std::abs(specfun::kummer_m(-m, b, z) - ref.value) / std::max(1.0, std::abs(ref.value));
        worst_k = std::max(worst_k, err);
      }
    }
  }
  if (worst_k > 1e-13) n.fail("Kummer truncation error " + fmt(worst_k));
  double worst_j = 0.0;
  for (double a : {-0.5, 0.0, 0.3, 1.7}) {
    for (double b : {-0.4, 0.0, 0.9, 2.5}) {
      for (double x : {-1.0, -0.3, 0.0, 0.45, 1.0}) {
        const double p1 = (a - b) / 2 + (a + b + 2) * x / 2;
        // P_2 from the explicit hypergeometric form
        const double t = (1 - x) / 2;
        const double p2 = (a + 1) * (a + 2) / 2 *
                          (1 - 2 * (a + b + 3) / (a + 1) * t + (a + b + 3) * (a + b + 4) / ((a + 1) * (a + 2)) * t * t);
        worst_j = std::max({worst_j, std::abs(specfun::jacobi_p(0, a, b, x) - 1.0),
                            std::abs(specfun::jacobi_p(1, a, b, x) - p1) / std::max(1.0, std::abs(p1)),
                            std::abs(specfun::jacobi_p(2, a, b, x) - p2) / std::max(1.0, std::abs(p2))});
      }
    }
  }
  if (worst_j > 1e-14) n.fail("Jacobi n<=2 error " + fmt(worst_j));
  n.note("Gamma " + fmt(worst_g) + ", Kummer " + fmt(worst_k) + ", Jacobi " + fmt(worst_j));
  return n.done();
}

Outcome angular_residuals() {
  Notes n;
  struct Combo {
    int two_ell;
    Parity s1, s2;
    double mu;
  };
  const Combo combos[] = {
      {2, Parity::Even, Parity::Even, 0.4},  {4, Parity::Even, Parity::Even, -0.4}, {1, Parity::Odd, Parity::Even, 0.4},
      {3, Parity::Even, Parity::Odd, -0.2},  {2, Parity::Odd, Parity::Odd, 0.3},    {5, Parity::Odd, Parity::Even, 0.0},
  };
  double worst_r = 0.0, worst_p = 0.0;
  for (const auto& c : combos) {
    const auto config = DunklConfig::uniform(3, c.mu);
    const double r = angular::max_residual_theta_1(config, c.two_ell, c.s1, c.s2);
    const auto prof = angular::sample_theta_1(config, c.two_ell, c.s1, c.s2, 201);
    const double p = std::max(angular::check_parity(prof, c.s1, angular::Reflection::AcrossHalfPi),
                              angular::check_parity(prof, c.s2, angular::Reflection::AcrossZero));
    worst_r = std::max(worst_r, r);
    worst_p = std::max(worst_p, p);
    const std::string label = "2l=" + std::to_string(c.two_ell) + " mu=" + fmt(c.mu);
    if (!(r < 1e-5)) n.fail(label + " residual " + fmt(r));
    if (!(p < 1e-12)) n.fail(label + " parity " + fmt(p));
  }
  n.note("worst residual " + fmt(worst_r) + ", worst parity deviation " + fmt(worst_p));
  return n.done();
}

std::map<std::string, std::vector<std::pair<double, double>>> series(const cli::Table& t,
                                                                     const std::string& y = "y") {
  std::map<std::string, std::vector<std::pair<double, double>>> out;
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    out[t.text(i, "series")].push_back({t.number(i, "x"), t.number(i, y)});
  return out;
}

Outcome figure_claims() {
  Notes n;
  for (const auto& [id, mu] : {std::pair{"F1", 0.4}, std::pair{"F2", -0.4}}) {
    const auto s = series(cli::figure_data(id));
    for (const auto& [label, pts] : s)
      for (std::size_t i = 1; i < pts.size(); ++i)
        if (!(pts[i].second > pts[i - 1].second)) n.fail(std::string(id) + " " + label + " not increasing in n");
    for (const char* p : {"+", "-"})
      for (int d = 3; d < 6; ++d) {
        const auto& lo = s.at("d=" + std::to_string(d) + ",s=" + p);
        const auto& hi = s.at("d=" + std::to_string(d + 1) + ",s=" + p);
        for (std::size_t i = 0; i < lo.size(); ++i)
          if (!(hi[i].second > lo[i].second)) n.fail(std::string(id) + " not increasing in d at d=" + std::to_string(d));
      }
    for (int d = 3; d <= 6; ++d) {
      const auto& even = s.at("d=" + std::to_string(d) + ",s=+");
      const auto& odd = s.at("d=" + std::to_string(d) + ",s=-");
      for (std::size_t i = 0; i < even.size(); ++i)
        if (mu > 0 ? !(even[i].second < odd[i].second) : !(even[i].second > odd[i].second))
          n.fail(std::string(id) + " parity ordering at d=" + std::to_string(d));
    }
  }
  {
    const auto t = cli::figure_data("F3");
    const auto s = series(t);
    for (const auto& [label, pts] : s) {
      const int level = std::stoi(label.substr(label.find("n=") + 2));
      const double mu = label.find("mu=+") != std::string::npos ? 0.4 : -0.4;
      const oscillator::OscillatorSpec spec{DunklConfig::uniform(3, mu), AngularState::uniform(3, 1), 1.0, 1.0};
      std::vector<double> r;
      for (const auto& [x, y] : pts) r.push_back(oscillator::radial_wavefunction(spec, level, x));
      if (oracle::count_nodes(r) != level) n.fail("F3 " + label + " node count");
    }
  }
  {
    const auto s = series(cli::figure_data("F4"));
    for (const char* mu : {"+0.4", "-0.4"})
      for (int d = 3; d < 6; ++d) {
        const auto& lo = s.at("mu=" + std::string(mu) + ",d=" + std::to_string(d));
        const auto& hi = s.at("mu=" + std::string(mu) + ",d=" + std::to_string(d + 1));
        for (std::size_t i = 0; i < lo.size(); ++i)
          if (!(hi[i].second < lo[i].second)) n.fail("F4 not decreasing in d at mu=" + std::string(mu));
      }
  }
  {
    const auto t = cli::figure_data("F5");
    std::map<std::string, std::pair<double, double>> best;  // series -> (min y, x at min)
    std::map<std::string, double> critical;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      const auto label = t.text(i, "series");
      const double y = t.number(i, "y");
      if (!best.count(label) || y < best[label].first) best[label] = {y, t.number(i, "x")};
      critical[label] = t.number(i, "ze2_critical");
    }
    double spread = 0.0;
    for (const auto& [label, b] : best) {
      spread = std::max(spread, b.first);
      if (!(b.first < 0.02) || rel(b.second, critical[label]) > 0.02)
        n.fail("F5 " + label + " minimum " + fmt(b.first) + " at " + fmt(b.second));
    }
    n.note("F5 minima all below " + fmt(spread));
  }
  for (const char* id : {"F7", "F8"}) {
    const auto s = series(cli::figure_data(id), "log_one_minus_y");
    std::map<double, double> zero(s.at("mu=0").begin(), s.at("mu=0").end());
    int shared = 0;
    for (const auto& [x, lc] : s.at("mu=+0.4")) {
      const auto it = zero.find(x);
      if (it == zero.end()) continue;
      ++shared;
      if (!(lc < it->second)) n.fail(std::string(id) + " P(+0.4) <= P(0) at Ze2=" + fmt(x));
    }
    n.note(std::string(id) + " " + std::to_string(shared) + " shared points");
  }
  return n.done();
}

Outcome nonrelativistic() {
  Notes n;
  // omega K / m must be small for the expansion; K = 2 here
  oscillator::OscillatorSpec s{DunklConfig::uniform(3, 0.4), AngularState::uniform(3, 0), 1.0, 1.0};
  std::vector<double> err;
  for (double m : {10.0, 100.0, 1000.0}) {
    s.m = m;
    err.push_back(std::abs(oscillator::energy(s, 1) - m - oscillator::energy_nonrel(s, 1)));
  }
  for (std::size_t i = 1; i < err.size(); ++i) {
    const double ratio = err[i - 1] / err[i];
    n.note("ratio " + fmt(ratio, "%.4f"));
    if (ratio < 8.0 || ratio > 12.0) n.fail("ratio outside [8, 12]");
  }
  return n.done();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"critical charges", table3},
      {"oscillator oracle", oscillator_oracle},
      {"Coulomb oracle", coulomb_oracle},
      {"parity shift", parity_shift},
      {"probability/density identities", probability_identities},
      {"special functions", special_functions},
      {"angular residuals", angular_residuals},
      {"figure claims", figure_claims},
      {"non-relativistic limit", nonrelativistic},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (i == 0 && secs >= 1.0) {
      o.pass = false;
      o.detail += "; slower than 1 s";
    }
    failed += !o.pass;
    std::printf("%s %zu %s [%.2f s] %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failed;
}
