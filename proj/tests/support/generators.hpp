#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dkg/config.hpp"

namespace dkg::testing {

/// Seeded source for property tests. Every test builds its own so failures
/// replay from the printed seed alone.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : seed_(seed), rng_(seed) {}

  std::uint64_t seed() const { return seed_; }

  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Parity parity() { return coin() ? Parity::Even : Parity::Odd; }

  /// mu_i in [lo, hi], parities uniform.
  DunklConfig config(int d, double mu_lo = -0.45, double mu_hi = 0.45) {
    DunklConfig c;
    c.d = d;
    for (int i = 0; i < d; ++i) {
      c.mu.push_back(real(mu_lo, mu_hi));
      c.s.push_back(parity());
    }
    return c;
  }

  /// Angular quantum numbers that satisfy the parity coupling of `config`.
  AngularState coupled_state(const DunklConfig& config, int max_extra = 3) {
    const auto e = ParityIndicator::from(config).e;
    AngularState a;
    a.two_ell.push_back(e[0] + e[1] + 2 * integer(0, max_extra));
    for (int j = 1; j < config.d - 1; ++j) a.two_ell.push_back(e[j + 1] + 2 * integer(0, max_extra));
    return a;
  }

  /// Any non-negative half-integers, ignoring the parity coupling.
  AngularState free_state(int d, int max_two_ell = 6) {
    AngularState a;
    for (int j = 0; j < d - 1; ++j) a.two_ell.push_back(integer(0, max_two_ell));
    return a;
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 rng_;
};

/// Number of random cases each property runs.
inline constexpr int kCases = 200;

}  // namespace dkg::testing
