#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dkg/config.hpp"
#include "table.hpp"

namespace dkg::cli {

inline constexpr const char* kToolVersion = "0.3.0";
inline constexpr const char* kUnitsNote = "natural units, e^2=1/137";

enum class Command {
  OscSpectrum,
  OscProfile,
  CoulombSpectrum,
  CoulombSweep,
  PairCreation,
  CriticalCharge,
  Verify,
  Figure,
};

enum class Format { Csv, Json };

std::string to_string(Command c);
Command command_from_string(const std::string& s);  // throws InvalidArgument

/// Everything a run needs apart from where the output goes.
struct RunConfig {
  Command command = Command::OscSpectrum;
  int d = 3;
  std::vector<double> mu{0.0};         // one value broadcasts to all d axes
  std::vector<Parity> s{Parity::Even};  // one value broadcasts
  std::vector<double> ell{1.0};        // one value broadcasts to all d-1 angles
  std::vector<int> n{0};
  double m = 1.0;
  double omega = 1.0;
  double ze2 = 1.0;
  std::optional<double> ze2_min;
  std::optional<double> ze2_max;
  int points = 0;  // 0 picks the command's default
  double energy = 2.0;
  std::string figure;  // F1..F8
  bool relax_coupling = false;
  Format format = Format::Csv;
};

/// Broadcast mu, s, ell to full length and validate (strictly unless relaxed).
struct Resolved {
  DunklConfig config;
  AngularState ang;
};
Resolved resolve(const RunConfig& rc);

/// "0..10", "0,2,5" or "3".
std::vector<int> parse_levels(const std::string& text);
/// "0.4" or "0.4,0.4,0.2".
std::vector<double> parse_reals(const std::string& text);

std::string to_json(const RunConfig& rc);            // stable key order
RunConfig from_json(const std::string& text);         // throws InvalidArgument

/// Runs the command and returns its tables (no I/O).
std::vector<Table> execute(const RunConfig& rc);

/// Full CLI entry: parse, run, write. Returns the process exit code
/// (0 ok, 1 validation error, 2 numerical failure or verify breach).
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

/// Column documentation shown in --help.
std::string column_help();

}  // namespace dkg::cli
