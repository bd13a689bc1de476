#include "cli.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "json.hpp"

namespace dkg::cli {

namespace {

struct NamedCommand {
  Command command;
  const char* name;
  const char* help;
};

constexpr NamedCommand kCommands[] = {
    {Command::OscSpectrum, "osc-spectrum", "oscillator energies E(n), both branches and the non-relativistic limit"},
    {Command::OscProfile, "osc-profile", "normalized oscillator radial densities on the default rho grid"},
    {Command::CoulombSpectrum, "coulomb-spectrum", "Coulomb bound-state energies (printed and truncation forms)"},
    {Command::CoulombSweep, "coulomb-sweep", "Coulomb energies across a Ze^2 range"},
    {Command::PairCreation, "pair-creation", "pair-creation probability and density at one Ze^2 or across a range"},
    {Command::CriticalCharge, "critical-charge", "critical nucleus charge Z_cr (units of 137)"},
    {Command::Verify, "verify", "oracle-vs-analytic verification suite"},
    {Command::Figure, "figure", "dataset for one figure, --id F1..F8"},
};

std::string timestamp_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, sep)) out.push_back(tok);
  return out;
}

int parse_int(const std::string& tok) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != tok.size())
    throw Error(ErrorCode::InvalidArgument, "'" + tok + "' is not an integer");
  return v;
}

double parse_real(const std::string& tok) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != tok.size()) throw Error(ErrorCode::InvalidArgument, "'" + tok + "' is not a number");
  return v;
}

// Flags are captured as text so that explicitly given ones can override --config.
struct RawOptions {
  std::string d, mu, s, l, n, m, omega, ze2, ze2_min, ze2_max, points, energy, id, format, output, config;
  bool relax = false;
  bool dump = false;
};

void add_options(CLI::App* app, RawOptions& o) {
  app->add_option("--d", o.d, "dimension d >= 2");
  app->add_option("--mu", o.mu, "Dunkl parameters, comma list or one value for all axes");
  app->add_option("--s", o.s, "parities as +/- tokens, comma list or one token for all axes");
  app->add_option("--l", o.l, "angular numbers l_1..l_{d-1} (integers or halves), or one value for all");
  app->add_option("--n", o.n, "radial levels: 3, 0,2,5 or 0..10");
  app->add_option("--m", o.m, "rest mass");
  app->add_option("--omega", o.omega, "oscillator frequency");
  app->add_option("--ze2", o.ze2, "coupling Ze^2");
  app->add_option("--ze2-min", o.ze2_min, "start of a Ze^2 sweep");
  app->add_option("--ze2-max", o.ze2_max, "end of a Ze^2 sweep");
  app->add_option("--points", o.points, "sweep or profile points");
  app->add_option("--energy", o.energy, "scattering energy E, |E| > m");
  app->add_option("--id", o.id, "figure id F1..F8");
  app->add_option("--format", o.format, "csv (default) or json");
  app->add_option("--output", o.output, "output file (default stdout)");
  app->add_option("--config", o.config, "JSON run configuration");
  app->add_flag("--relax-coupling", o.relax, "check lengths and mu only, not the parity/l coupling rules");
  app->add_flag("--dump-config", o.dump, "print the resolved JSON configuration and exit");
}

void apply(const RawOptions& o, RunConfig& rc) {
  if (!o.d.empty()) rc.d = parse_int(o.d);
  if (!o.mu.empty()) rc.mu = parse_reals(o.mu);
  if (!o.s.empty()) rc.s = parse_parities(o.s);
  if (!o.l.empty()) rc.ell = parse_reals(o.l);
  if (!o.n.empty()) rc.n = parse_levels(o.n);
  if (!o.m.empty()) rc.m = parse_real(o.m);
  if (!o.omega.empty()) rc.omega = parse_real(o.omega);
  if (!o.ze2.empty()) rc.ze2 = parse_real(o.ze2);
  if (!o.ze2_min.empty()) rc.ze2_min = parse_real(o.ze2_min);
  if (!o.ze2_max.empty()) rc.ze2_max = parse_real(o.ze2_max);
  if (!o.points.empty()) rc.points = parse_int(o.points);
  if (!o.energy.empty()) rc.energy = parse_real(o.energy);
  if (!o.id.empty()) rc.figure = o.id;
  if (!o.format.empty()) {
    if (o.format == "csv")
      rc.format = Format::Csv;
    else if (o.format == "json")
      rc.format = Format::Json;
    else
      throw Error(ErrorCode::InvalidArgument, "format must be csv or json");
  }
  if (o.relax) rc.relax_coupling = true;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string to_string(Command c) {
  for (const auto& nc : kCommands)
    if (nc.command == c) return nc.name;
  return "unknown";
}

Command command_from_string(const std::string& s) {
  for (const auto& nc : kCommands)
    if (s == nc.name) return nc.command;
  throw Error(ErrorCode::InvalidArgument, "unknown command '" + s + "'");
}

std::vector<int> parse_levels(const std::string& text) {
  std::vector<int> out;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const int lo = parse_int(text.substr(0, dots));
    const int hi = parse_int(text.substr(dots + 2));
    if (hi < lo) throw Error(ErrorCode::InvalidArgument, "empty level range " + text);
    for (int k = lo; k <= hi; ++k) out.push_back(k);
  } else {
    for (const auto& tok : split(text, ',')) out.push_back(parse_int(tok));
  }
  if (out.empty()) throw Error(ErrorCode::InvalidArgument, "no levels given");
  for (int k : out)
    if (k < 0) throw Error(ErrorCode::NegativeDegree, "radial level " + std::to_string(k) + " is negative");
  return out;
}

std::vector<double> parse_reals(const std::string& text) {
  std::vector<double> out;
  for (const auto& tok : split(text, ',')) out.push_back(parse_real(tok));
  if (out.empty()) throw Error(ErrorCode::InvalidArgument, "empty number list");
  return out;
}

Resolved resolve(const RunConfig& rc) {
  if (rc.d < 2) throw Error(ErrorCode::DimensionMismatch, "dimension must be >= 2");
  const auto d = static_cast<std::size_t>(rc.d);
  Resolved r;
  r.config.d = rc.d;
  r.config.mu = rc.mu.size() == 1 ? std::vector<double>(d, rc.mu[0]) : rc.mu;
  r.config.s = rc.s.size() == 1 ? std::vector<Parity>(d, rc.s[0]) : rc.s;
  const auto ells = rc.ell.size() == 1 ? std::vector<double>(d - 1, rc.ell[0]) : rc.ell;
  r.ang = AngularState::from_values(ells);
  if (rc.relax_coupling)
    validate_shape(r.config, r.ang);
  else
    validate(r.config, r.ang);
  return r;
}

std::string to_json(const RunConfig& rc) {
  nlohmann::ordered_json j;
  j["command"] = to_string(rc.command);
  j["d"] = rc.d;
  j["mu"] = rc.mu;
  j["s"] = format_parities(rc.s);
  j["l"] = rc.ell;
  j["n"] = rc.n;
  j["m"] = rc.m;
  j["omega"] = rc.omega;
  j["ze2"] = rc.ze2;
  j["ze2_min"] = rc.ze2_min ? nlohmann::ordered_json(*rc.ze2_min) : nlohmann::ordered_json();
  j["ze2_max"] = rc.ze2_max ? nlohmann::ordered_json(*rc.ze2_max) : nlohmann::ordered_json();
  j["points"] = rc.points;
  j["energy"] = rc.energy;
  j["figure"] = rc.figure;
  j["relax_coupling"] = rc.relax_coupling;
  j["format"] = rc.format == Format::Csv ? "csv" : "json";
  return j.dump();
}

RunConfig from_json(const std::string& text) {
  RunConfig rc;
  try {
    const auto j = nlohmann::json::parse(text);
    if (!j.is_object()) throw Error(ErrorCode::InvalidArgument, "config must be a JSON object");
    for (const auto& [key, value] : j.items()) {
      if (key == "command")
        rc.command = command_from_string(value.get<std::string>());
      else if (key == "d")
        rc.d = value.get<int>();
      else if (key == "mu")
        rc.mu = value.is_array() ? value.get<std::vector<double>>() : std::vector<double>{value.get<double>()};
      else if (key == "s")
        rc.s = parse_parities(value.get<std::string>());
      else if (key == "l")
        rc.ell = value.is_array() ? value.get<std::vector<double>>() : std::vector<double>{value.get<double>()};
      else if (key == "n")
        rc.n = value.is_array() ? value.get<std::vector<int>>() : parse_levels(value.get<std::string>());
      else if (key == "m")
        rc.m = value.get<double>();
      else if (key == "omega")
        rc.omega = value.get<double>();
      else if (key == "ze2")
        rc.ze2 = value.get<double>();
      else if (key == "ze2_min") {
        if (!value.is_null()) rc.ze2_min = value.get<double>();
      } else if (key == "ze2_max") {
        if (!value.is_null()) rc.ze2_max = value.get<double>();
      } else if (key == "points")
        rc.points = value.get<int>();
      else if (key == "energy")
        rc.energy = value.get<double>();
      else if (key == "figure")
        rc.figure = value.get<std::string>();
      else if (key == "relax_coupling")
        rc.relax_coupling = value.get<bool>();
      else if (key == "format") {
        const auto f = value.get<std::string>();
        if (f != "csv" && f != "json") throw Error(ErrorCode::InvalidArgument, "format must be csv or json");
        rc.format = f == "csv" ? Format::Csv : Format::Json;
      } else
        throw Error(ErrorCode::InvalidArgument, "unknown config key '" + key + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("bad JSON config: ") + e.what());
  }
  return rc;
}

std::vector<Table> execute(const RunConfig& rc) {
  std::vector<Table> tables;
  switch (rc.command) {
    case Command::OscSpectrum: tables = {osc_spectrum(rc)}; break;
    case Command::OscProfile: tables = {osc_profile(rc)}; break;
    case Command::CoulombSpectrum: tables = {coulomb_spectrum(rc)}; break;
    case Command::CoulombSweep: tables = {coulomb_sweep(rc)}; break;
    case Command::PairCreation: tables = {pair_creation(rc)}; break;
    case Command::CriticalCharge: tables = {critical_charge_table(rc)}; break;
    case Command::Verify: tables = {verify_suite()}; break;
    case Command::Figure: tables = {figure_data(rc.figure)}; break;
  }
  for (auto& t : tables) {
    t.meta.insert(t.meta.begin(), {{"tool", std::string("dkg ") + kToolVersion},
                                   {"command", to_string(rc.command)},
                                   {"units", kUnitsNote},
                                   {"config", to_json(rc)}});
  }
  return tables;
}

std::string column_help() {
  return R"(Output columns (CSV header order):
  osc-spectrum      n, E (positive branch), E_negative, E_nonrel (rest mass excluded)
  osc-profile       n, rho (= m omega r^2), density (normalized |R|^2), probability (density x measure)
  coulomb-spectrum  n, E_printed (denominator n-1/2-sqrt Q), E_truncation (n+1/2+sqrt Q), delta, kappa_b
  coulomb-sweep     ze2, n, E_printed, E_truncation
  pair-creation     ze2, beta_tilde, x (= E Ze^2/kappa), probability, density
  critical-charge   d, l, mu, Z, Z_over_137, Z_reduced_over_137 (mu = 0 with equal l only)
  verify            check, case, value, reference, rel_error, tolerance, status
  figure            series, x, y, then per figure:
                      F1,F2 d, s | F3 probability | F4,F6 E_truncation
                      F5 E_truncation, ze2_critical | F7,F8 log_one_minus_y, density, beta_tilde
CSV files start with '#' metadata lines (tool, command, units, config, notes, generated).
Exit codes: 0 success, 1 invalid parameters, 2 numerical failure or verify breach.
Environment: DKG_THREADS caps the worker threads used by sweeps.)";
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dunkl-Klein-Gordon spectra, wavefunctions and pair creation", "dkg"};
  app.footer(column_help());
  app.require_subcommand(0, 1);
  RawOptions top;
  add_options(&app, top);
  std::vector<std::pair<CLI::App*, Command>> subs;
  std::vector<RawOptions> raw(std::size(kCommands));
  for (std::size_t i = 0; i < std::size(kCommands); ++i) {
    auto* sub = app.add_subcommand(kCommands[i].name, kCommands[i].help);
    add_options(sub, raw[i]);
    subs.emplace_back(sub, kCommands[i].command);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    const RawOptions* chosen = &top;
    std::optional<Command> command;
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (subs[i].first->parsed()) {
        chosen = &raw[i];
        command = subs[i].second;
      }
    }
    const std::string config_path = !chosen->config.empty() ? chosen->config : top.config;
    RunConfig rc;
    if (!config_path.empty()) rc = from_json(read_file(config_path));
    else if (!command) {
      err << app.help();
      return 1;
    }
    if (command) rc.command = *command;
    apply(top, rc);
    if (chosen != &top) apply(*chosen, rc);
    const bool dump = top.dump || chosen->dump;
    const std::string output = !chosen->output.empty() ? chosen->output : top.output;

    if (dump) {
      if (output.empty()) {
        out << to_json(rc) << '\n';
      } else {
        std::ofstream f(output, std::ios::binary);
        f << to_json(rc) << '\n';
      }
      return 0;
    }

    const auto tables = execute(rc);
    const auto stamp = timestamp_now();
    auto emit = [&](std::ostream& os) {
      if (rc.format == Format::Csv)
        write_csv(os, tables, stamp);
      else
        write_json(os, tables, stamp);
    };
    if (output.empty()) {
      emit(out);
    } else {
      std::ofstream f(output, std::ios::binary);
      if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + output);
      emit(f);
    }
    if (rc.command == Command::Verify) {
      for (const auto& t : tables)
        for (std::size_t r = 0; r < t.rows.size(); ++r)
          if (t.text(r, "status") == "FAIL") {
            err << "verify: tolerance breach in " << t.text(r, "check") << " (" << t.text(r, "case") << ")\n";
            return 2;
          }
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_validation_error(e.code()) ? 1 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace dkg::cli
