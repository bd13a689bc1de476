#include "dkg/config.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace dkg {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ParityCoupling: return "ParityCoupling";
    case ErrorCode::MuOutOfRange: return "MuOutOfRange";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NegativeDegree: return "NegativeDegree";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::UnknownFigure: return "UnknownFigure";
    case ErrorCode::PoleAtNonPositiveInteger: return "PoleAtNonPositiveInteger";
    case ErrorCode::ParameterPole: return "ParameterPole";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::BranchCutInput: return "BranchCutInput";
    case ErrorCode::GammaPole: return "GammaPole";
    case ErrorCode::EvaluationAtOrigin: return "EvaluationAtOrigin";
    case ErrorCode::ImaginaryEnergy: return "ImaginaryEnergy";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::SupercriticalCharge: return "SupercriticalCharge";
    case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::SubcriticalCharge: return "SubcriticalCharge";
    case ErrorCode::NonPropagatingEnergy: return "NonPropagatingEnergy";
    case ErrorCode::DivergentDensity: return "DivergentDensity";
    case ErrorCode::NonConfining: return "NonConfining";
    case ErrorCode::BisectionBracketFailure: return "BisectionBracketFailure";
    case ErrorCode::MaxDepthExceeded: return "MaxDepthExceeded";
  }
  return "Unknown";
}

bool is_validation_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DimensionMismatch:
    case ErrorCode::ParityCoupling:
    case ErrorCode::MuOutOfRange:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::NegativeDegree:
    case ErrorCode::InvalidArgument:
    case ErrorCode::UnknownFigure:
    case ErrorCode::SupercriticalCharge:
    case ErrorCode::SubcriticalCharge:
    case ErrorCode::NonPropagatingEnergy:
    case ErrorCode::ImaginaryEnergy:
      return true;
    default:
      return false;
  }
}

DunklConfig DunklConfig::uniform(int d, double mu, Parity s) {
  if (d < 2) throw Error(ErrorCode::DimensionMismatch, "dimension must be >= 2");
  return DunklConfig{d, std::vector<double>(d, mu), std::vector<Parity>(d, s)};
}

double DunklConfig::mu_sum() const noexcept { return std::accumulate(mu.begin(), mu.end(), 0.0); }

double DunklConfig::mu_parity_sum() const noexcept {
  double acc = 0.0;
  for (std::size_t j = 0; j < mu.size() && j < s.size(); ++j) acc += mu[j] * sign(s[j]);
  return acc;
}

AngularState AngularState::uniform(int d, double ell) {
  if (d < 2) throw Error(ErrorCode::DimensionMismatch, "dimension must be >= 2");
  std::vector<double> ells(d - 1, ell);
  return from_values(ells);
}

AngularState AngularState::from_values(std::span<const double> ells) {
  AngularState st;
  st.two_ell.reserve(ells.size());
  for (double v : ells) {
    const double twice = 2.0 * v;
    const long rounded = std::lround(twice);
    if (std::abs(twice - rounded) > 1e-9 || rounded < 0)
      throw Error(ErrorCode::InvalidArgument,
                  "angular quantum number " + std::to_string(v) +
                      " is not a non-negative integer or half-integer");
    st.two_ell.push_back(static_cast<int>(rounded));
  }
  return st;
}

int AngularState::two_total() const noexcept {
  return std::accumulate(two_ell.begin(), two_ell.end(), 0);
}

ParityIndicator ParityIndicator::from(const DunklConfig& config) {
  ParityIndicator out;
  out.e.reserve(config.s.size());
  for (Parity p : config.s) out.e.push_back((1 - sign(p)) / 2);
  return out;
}

void validate_shape(const DunklConfig& config, const AngularState& ang) {
  const auto d = static_cast<std::size_t>(config.d);
  if (config.d < 2) throw Error(ErrorCode::DimensionMismatch, "dimension must be >= 2");
  if (config.mu.size() != d)
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(d) + " Dunkl parameters, got " +
                    std::to_string(config.mu.size()));
  if (config.s.size() != d)
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(d) + " parities, got " + std::to_string(config.s.size()));
  if (ang.two_ell.size() != d - 1)
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(d - 1) + " angular quantum numbers, got " +
                    std::to_string(ang.two_ell.size()));
  for (std::size_t j = 0; j < d; ++j) {
    if (!(config.mu[j] > -0.5) || !std::isfinite(config.mu[j]))
      throw Error(ErrorCode::MuOutOfRange,
                  "mu_" + std::to_string(j + 1) + " = " + std::to_string(config.mu[j]) +
                      " must exceed -1/2");
  }
  for (int t : ang.two_ell)
    if (t < 0) throw Error(ErrorCode::InvalidArgument, "angular quantum numbers must be >= 0");
}

void validate(const DunklConfig& config, const AngularState& ang) {
  validate_shape(config, ang);
  const auto e = ParityIndicator::from(config).e;

  // ell_1: 2 ell_1 = e_1 + e_2 (mod 2) and ell_1 >= (e_1 + e_2)/2
  const int first = ang.two_ell[0];
  const int need = e[0] + e[1];
  if ((first - need) % 2 != 0 || first < need) {
    std::string rule = need == 1   ? "must be a positive half-integer when s_1 s_2 = -1"
                       : need == 0 ? "must be a non-negative integer when s_1 = s_2 = +1"
                                   : "must be a positive integer when s_1 = s_2 = -1";
    throw Error(ErrorCode::ParityCoupling,
                "ell_1 = " + std::to_string(0.5 * first) + " " + rule);
  }
  // ell_j, j >= 2: half-integer iff s_{j+1} = -1
  for (std::size_t j = 1; j < ang.two_ell.size(); ++j) {
    const int t = ang.two_ell[j];
    if (t % 2 != e[j + 1]) {
      throw Error(ErrorCode::ParityCoupling,
                  "ell_" + std::to_string(j + 1) + " = " + std::to_string(0.5 * t) +
                      (e[j + 1] ? " must be a positive half-integer when s_" : " must be an integer when s_") +
                      std::to_string(j + 2) + (e[j + 1] ? " = -1" : " = +1"));
    }
  }
}

double varpi_squared(const DunklConfig& config, const AngularState& ang) {
  validate_shape(config, ang);
  // 4L(L + A) = 2L (2L + 2A) with 2L an exact integer
  const int two_l = ang.two_total();
  return two_l * (two_l + (config.d - 2) + 2.0 * config.mu_sum());
}

double lambda_squared(int k, const DunklConfig& config, const AngularState& ang) {
  validate_shape(config, ang);
  if (k < 1 || k > config.d - 1)
    throw Error(ErrorCode::IndexOutOfRange,
                "separation index k = " + std::to_string(k) + " outside 1.." +
                    std::to_string(config.d - 1));
  int two_s = 0;
  for (int i = 0; i < k; ++i) two_s += ang.two_ell[i];
  double mu_partial = 0.0;
  for (int i = 0; i <= k; ++i) mu_partial += config.mu[i];
  return two_s * (two_s + 2.0 * mu_partial + (k - 1));
}

std::vector<Parity> parse_parities(const std::string& text) {
  std::vector<Parity> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "+" || tok == "+1" || tok == "1")
      out.push_back(Parity::Even);
    else if (tok == "-" || tok == "-1")
      out.push_back(Parity::Odd);
    else
      throw Error(ErrorCode::InvalidArgument, "parity token '" + tok + "' is not '+' or '-'");
  }
  return out;
}

std::string format_parities(std::span<const Parity> s) {
  std::string out;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (j) out += ',';
    out += s[j] == Parity::Even ? '+' : '-';
  }
  return out;
}

}  // namespace dkg
