#pragma once

#include "gtm/errors.hpp"
#include "gtm/expansion.hpp"
#include "gtm/kappa.hpp"

#include <cstdint>
#include <limits>
#include <vector>

namespace gtm {

using Word = std::vector<Residue>;

/// Upper bound on the number of terms any single call may materialize.
inline constexpr std::size_t default_term_budget = std::size_t{1} << 26;

namespace detail {

// k^m, or nullopt if it exceeds `limit`.
inline std::optional<std::uint64_t> bounded_power(std::uint64_t base, std::uint64_t exponent,
                                                  std::uint64_t limit) {
  std::uint64_t value = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (value > limit / base) return std::nullopt;
    value *= base;
  }
  return value;
}

inline std::uint64_t checked_index(std::uint64_t start, std::uint64_t n, std::uint64_t stride) {
  constexpr auto max = std::numeric_limits<std::uint64_t>::max();
  if (stride != 0 && n > (max - start) / stride)
    throw invalid_argument("sequence index N + n*l overflows 64 bits");
  return start + n * stride;
}

}  // namespace detail

/// a(n) = sum over the expansion terms (s, y) of n of kappa(s, y), mod L.
template <Integer Int>
Residue a_of_n(const KappaSpec& spec, Int n) {
  detail::check_nonnegative(n);
  const std::uint32_t k = spec.base();
  std::uint64_t total = 0;
  for (std::uint64_t y = 0; n != 0; ++y) {
    const auto digit = static_cast<std::uint32_t>(n % k);
    if (digit != 0) total += spec(digit, y);
    n /= k;
  }
  return static_cast<Residue>(total % spec.modulus());
}

/// Exponent of b(n) = exp(2 pi i a(n) / L); the multiplicative view of a(n).
template <Integer Int>
Residue b_exponent(const KappaSpec& spec, Int n) {
  return a_of_n(spec, std::move(n));
}

/// A_m via A_{n+1} = A_n f^{kappa(1,n)}(A_n) ... f^{kappa(k-1,n)}(A_n), where f
/// shifts every letter index by one mod L. Length k^m.
inline Word generate_prefix_morphic(const KappaSpec& spec, std::uint64_t m,
                                    std::size_t budget = default_term_budget) {
  if (auto window = spec.window(); window && m > *window)
    throw window_exceeded(m - 1, *window);
  if (!detail::bounded_power(spec.base(), m, budget))
    throw budget_exceeded("k^m = " + std::to_string(spec.base()) + "^" + std::to_string(m) +
                          " exceeds the term budget of " + std::to_string(budget));
  const Residue modulus = spec.modulus();
  Word word{0};
  for (std::uint64_t level = 0; level < m; ++level) {
    const std::size_t block = word.size();
    word.reserve(block * spec.base());
    for (std::uint32_t s = 1; s < spec.base(); ++s) {
      const Residue shift = spec(s, level);
      for (std::size_t i = 0; i < block; ++i) word.push_back((word[i] + shift) % modulus);
    }
  }
  return word;
}

/// values[n] = a(start + n * stride).
struct SequenceWindow {
  KappaSpec spec;
  Word values;
  std::uint64_t start = 0;
  std::uint64_t stride = 1;

  std::size_t size() const noexcept { return values.size(); }
};

inline SequenceWindow equally_spaced(const KappaSpec& spec, std::uint64_t start,
                                     std::uint64_t stride, std::size_t count,
                                     std::size_t budget = default_term_budget) {
  if (stride < 1) throw invalid_argument("stride l must be >= 1");
  if (count > budget)
    throw budget_exceeded("window of " + std::to_string(count) + " terms exceeds the budget");
  SequenceWindow window{spec, {}, start, stride};
  if (count == 0) return window;
  detail::checked_index(start, count - 1, stride);
  window.values.reserve(count);
  for (std::size_t n = 0; n < count; ++n) window.values.push_back(a_of_n(spec, start + n * stride));
  return window;
}

}  // namespace gtm
