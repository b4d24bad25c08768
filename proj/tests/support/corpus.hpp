#pragma once

// Spec corpora and independent oracles shared by the unit and acceptance
// suites. Nothing here calls the code paths it is used to check.

#include "gtm/gtm.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace gtm::oracle {

inline constexpr std::uint64_t corpus_seed = 0x5eed'7a0e'2024ULL;

inline std::uint32_t uniform(std::mt19937_64& rng, std::uint32_t lo, std::uint32_t hi) {
  return std::uniform_int_distribution<std::uint32_t>(lo, hi)(rng);
}

/// Random eventually periodic spec with L <= max_L, k <= max_k, y0 <= max_y0, p <= max_p.
inline KappaSpec random_spec(std::mt19937_64& rng, std::uint32_t max_L = 6,
                             std::uint32_t max_k = 5, std::uint32_t max_y0 = 3,
                             std::uint32_t max_p = 4) {
  const std::uint32_t L = uniform(rng, 2, max_L);
  const std::uint32_t k = uniform(rng, 2, max_k);
  const std::uint32_t y0 = uniform(rng, 0, max_y0);
  const std::uint32_t p = uniform(rng, 1, max_p);
  KappaSpec::Table table(k - 1, std::vector<Residue>(y0 + p));
  for (auto& row : table)
    for (auto& v : row) v = uniform(rng, 0, L - 1);
  return KappaSpec::eventually_periodic(L, k, std::move(table), y0, p);
}

inline std::vector<KappaSpec> random_corpus(std::size_t count, std::uint64_t seed = corpus_seed) {
  std::mt19937_64 rng(seed);
  std::vector<KappaSpec> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_spec(rng));
  return out;
}

/// Preperiod and cycle length of y -> k^y mod L by listing the orbit.
inline std::pair<std::size_t, std::size_t> orbit_of_powers(std::uint32_t k, std::uint32_t L) {
  std::vector<std::uint64_t> orbit;
  std::uint64_t v = 1 % L;
  while (true) {
    auto it = std::find(orbit.begin(), orbit.end(), v);
    if (it != orbit.end()) {
      const auto first = static_cast<std::size_t>(it - orbit.begin());
      return {first, orbit.size() - first};
    }
    orbit.push_back(v);
    v = v * k % L;
  }
}

/// A spec satisfying kappa(s, A + y) = c s k^y (mod L) for all y, with arbitrary
/// columns below A.
struct ConstructedPeriodic {
  KappaSpec spec;
  std::uint64_t shift;  // A used in the construction
};

inline ConstructedPeriodic periodic_by_construction(std::mt19937_64& rng, std::uint32_t L,
                                                    std::uint32_t k, std::uint64_t shift) {
  const auto [pre, cycle] = orbit_of_powers(k, L);
  const std::size_t width = shift + pre + cycle;
  const std::uint64_t c = uniform(rng, 0, L - 1);
  KappaSpec::Table table(k - 1, std::vector<Residue>(width));
  for (std::uint32_t s = 1; s < k; ++s) {
    std::uint64_t power = 1 % L;
    for (std::size_t y = 0; y < width; ++y) {
      if (y < shift) {
        table[s - 1][y] = uniform(rng, 0, L - 1);
      } else {
        table[s - 1][y] = static_cast<Residue>(c * s % L * power % L);
        power = power * k % L;
      }
    }
  }
  return {KappaSpec::eventually_periodic(L, k, std::move(table), shift + pre, cycle), shift};
}

// --- oracles ---------------------------------------------------------------

/// Digits of n in base k (most significant first) via std::to_chars.
inline std::string digit_string(std::uint64_t n, std::uint32_t k) {
  char buffer[80];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, n, static_cast<int>(k));
  return std::string(buffer, end);
}

inline std::uint32_t digit_of(char c) {
  return c >= 'a' ? static_cast<std::uint32_t>(c - 'a' + 10) : static_cast<std::uint32_t>(c - '0');
}

/// a(n) by scanning the digit string; kappa read straight from the table.
inline Residue a_by_digit_string(const KappaSpec& spec, std::uint64_t n) {
  const std::string digits = digit_string(n, spec.base());
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const std::uint32_t d = digit_of(digits[digits.size() - 1 - i]);
    if (d == 0) continue;
    std::size_t column = i;
    if (!spec.is_finite_window() && i >= spec.preperiod())
      column = spec.preperiod() + (i - spec.preperiod()) % *spec.period();
    total += spec.table()[d - 1][column];
  }
  return static_cast<Residue>(total % spec.modulus());
}

/// Least x in [1, limit] such that x*l has leading digit 1 and a gap > t, by scan.
inline std::optional<std::uint64_t> minimal_gap_multiple(std::uint64_t l, std::uint32_t k,
                                                         std::uint64_t t, std::uint64_t limit) {
  for (std::uint64_t x = 1; x <= limit; ++x) {
    const std::string digits = digit_string(x * l, k);
    std::size_t lowest = digits.size() - 1;
    while (digits[lowest] == '0') --lowest;
    if (digits[lowest] != '1') continue;
    std::size_t gap = 1;
    bool single = true;
    for (std::size_t i = lowest; i-- > 0;) {
      if (digits[i] != '0') {
        single = false;
        break;
      }
      ++gap;
    }
    if (single || gap > t) return x;
  }
  return std::nullopt;
}

/// Partial sum sum_{n<T} a(N+nl) beta^{-n-1} computed term by term as rationals.
inline ExactRational partial_sum_oracle(const KappaSpec& spec, std::uint64_t start,
                                        std::uint64_t stride, std::uint64_t beta,
                                        std::size_t terms) {
  ExactRational sum = 0;
  ExactRational weight(BigInt(1), BigInt(beta));
  for (std::size_t n = 0; n < terms; ++n) {
    sum += weight * a_by_digit_string(spec, start + n * stride);
    weight /= beta;
  }
  return sum;
}

/// Value of a purely periodic digit sequence c(0..P-1) in base beta:
/// sum_n c(n mod P) beta^{-n-1} = (sum_{n<P} c(n) beta^{P-1-n}) / (beta^P - 1).
inline ExactRational periodic_value(const std::vector<Residue>& block, std::uint64_t beta) {
  BigInt numerator = 0;
  for (Residue v : block) numerator = numerator * beta + v;
  return ExactRational(numerator, pow_big(beta, block.size()) - 1);
}

}  // namespace gtm::oracle
