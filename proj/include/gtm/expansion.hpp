#pragma once

#include "gtm/bigint.hpp"
#include "gtm/errors.hpp"

#include <concepts>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

namespace gtm {

template <typename T>
concept Integer = std::integral<T> || std::same_as<std::remove_cvref_t<T>, BigInt>;

/// One term s * k^w of a base-k expansion; s is a nonzero digit.
struct DigitTerm {
  std::uint32_t coeff = 0;
  std::uint64_t exponent = 0;

  friend bool operator==(const DigitTerm&, const DigitTerm&) = default;
};

/// The unique decomposition n = sum s_q k^{w_q} with 1 <= s_q <= k-1 and
/// strictly increasing w_q. An empty term list is n = 0.
struct DigitExpansion {
  std::uint32_t base = 2;
  std::vector<DigitTerm> terms;

  BigInt value() const {
    BigInt total = 0;
    for (const auto& term : terms) total += BigInt(term.coeff) * pow_big(base, term.exponent);
    return total;
  }

  bool is_valid() const {
    if (base < 2) return false;
    for (std::size_t q = 0; q < terms.size(); ++q) {
      if (terms[q].coeff == 0 || terms[q].coeff >= base) return false;
      if (q > 0 && terms[q].exponent <= terms[q - 1].exponent) return false;
    }
    return true;
  }

  friend bool operator==(const DigitExpansion&, const DigitExpansion&) = default;
};

namespace detail {

inline void check_base(std::uint64_t k) {
  if (k < 2) throw invalid_argument("base k must be >= 2, got " + std::to_string(k));
}

template <Integer Int>
void check_nonnegative(const Int& n) {
  if constexpr (std::same_as<Int, BigInt> || std::is_signed_v<Int>) {
    if (n < 0) throw invalid_argument("expected a non-negative integer");
  }
}

inline void check_digit(std::uint64_t s, std::uint64_t k) {
  if (s < 1 || s >= k)
    throw invalid_argument("digit coefficient s = " + std::to_string(s) + " outside [1, " +
                           std::to_string(k - 1) + "]");
}

}  // namespace detail

/// Base-k expansion of n.
template <Integer Int>
DigitExpansion expand(Int n, std::uint32_t k) {
  detail::check_base(k);
  detail::check_nonnegative(n);
  DigitExpansion out{k, {}};
  std::uint64_t exponent = 0;
  while (n != 0) {
    const auto digit = static_cast<std::uint32_t>(n % k);
    if (digit != 0) out.terms.push_back({digit, exponent});
    n /= k;
    ++exponent;
  }
  return out;
}

/// 1 iff the term s * k^y occurs in the expansion of n.
template <Integer Int>
int digit_indicator(Int n, std::uint32_t s, std::uint64_t y, std::uint32_t k) {
  detail::check_base(k);
  detail::check_digit(s, k);
  detail::check_nonnegative(n);
  for (std::uint64_t e = 0; e < y && n != 0; ++e) n /= k;
  return static_cast<std::uint32_t>(n % k) == s ? 1 : 0;
}

/// Number of occurrences of the digit s in the base-k expansion of n.
template <Integer Int>
std::uint64_t digit_count(Int n, std::uint32_t s, std::uint32_t k) {
  detail::check_base(k);
  detail::check_digit(s, k);
  detail::check_nonnegative(n);
  std::uint64_t count = 0;
  while (n != 0) {
    if (static_cast<std::uint32_t>(n % k) == s) ++count;
    n /= k;
  }
  return count;
}

template <Integer Int>
std::uint32_t digit_count_mod(Int n, std::uint32_t s, std::uint32_t k, std::uint32_t L) {
  if (L < 2) throw invalid_argument("modulus L must be >= 2");
  return static_cast<std::uint32_t>(digit_count(std::move(n), s, k) % L);
}

// ---------------------------------------------------------------------------
// Gap multiples

/// A multiple x*l whose expansion is k^{w1} * (1 + terms of exponent > w1 + t).
struct GapMultipleResult {
  BigInt x;
  DigitExpansion expansion;  // of x * l
  std::uint64_t leading_exponent = 0;
  std::optional<std::uint64_t> gap;  // w2 - w1; empty when x*l is a single power of k
};

struct PrimePower {
  std::uint64_t prime;
  std::uint32_t exponent;
};

/// Trial-division factorization; complete for any 64-bit input.
inline std::vector<PrimePower> factorize(std::uint64_t n) {
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    if (n % p != 0) continue;
    PrimePower pp{p, 0};
    while (n % p == 0) {
      n /= p;
      ++pp.exponent;
    }
    out.push_back(pp);
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

namespace detail {

// Inverse of g modulo m; requires gcd(g, m) = 1. Result in [1, m) (or 0 when m = 1).
inline BigInt mod_inverse(const BigInt& g, const BigInt& m) {
  BigInt old_r = g % m, r = m;
  BigInt old_s = 1, s = 0;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - q * s;
    old_s = std::move(s);
    s = std::move(tmp);
  }
  if (old_r != 1) throw std::logic_error("mod_inverse: arguments not coprime");
  old_s %= m;
  if (old_s < 0) old_s += m;
  return old_s;
}

// Split l = G * prod p^{x_u} with gcd(G, k) = 1 and return (G, e) where e is the
// least exponent making k^e / prod p^{x_u} an integer: e = max_u ceil(x_u / y_u).
inline std::pair<BigInt, std::uint64_t> split_coprime_part(BigInt l, std::uint32_t k) {
  std::uint64_t scale = 0;
  for (const auto& [prime, y] : factorize(k)) {
    std::uint64_t x = 0;
    while (l % prime == 0) {
      l /= prime;
      ++x;
    }
    scale = std::max<std::uint64_t>(scale, (x + y - 1) / y);
  }
  return {std::move(l), scale};
}

inline GapMultipleResult finish_gap_multiple(const BigInt& l, std::uint32_t k, std::uint64_t t,
                                             BigInt product) {
  GapMultipleResult out;
  if (product % l != 0) throw std::logic_error("gap_multiple: product is not a multiple of l");
  out.x = product / l;
  out.expansion = expand(std::move(product), k);
  const auto& terms = out.expansion.terms;
  out.leading_exponent = terms.front().exponent;
  if (terms.size() > 1) out.gap = terms[1].exponent - terms[0].exponent;
  if (terms.front().coeff != 1 || (out.gap && *out.gap <= t))
    throw std::logic_error("gap_multiple: constructed witness violates its postcondition");
  return out;
}

}  // namespace detail

/// Finds x > 0 such that x*l = k^{w1} (1 + k^{t+1} M) for some M >= 0, i.e. the
/// expansion of x*l starts with coefficient 1 followed by a gap larger than t.
///
/// Construction: write l = G * prod p^{x_u} with gcd(G, k) = 1, take D = G^{-1}
/// mod k^{t+1} so that DG = 1 - k^{t+1} E with E <= 0, then
///   x*l = k^e D^2 G^2 = k^e (1 + k^{t+1} E (k^{t+1} E - 2)),
/// or x*l = k^e (1 + k^{t+1}) when E = 0 (which forces G = 1). The scale e
/// depends only on l and k, so calls with different t share the leading exponent.
/// The witness is constructive, not minimal.
inline GapMultipleResult gap_multiple(const BigInt& l, std::uint32_t k, std::uint64_t t) {
  detail::check_base(k);
  if (l < 1) throw invalid_argument("gap_multiple: l must be >= 1");
  auto [coprime, scale] = detail::split_coprime_part(l, k);
  const BigInt modulus = pow_big(k, t + 1);
  const BigInt d = detail::mod_inverse(coprime, modulus);
  const BigInt e = (1 - d * coprime) / modulus;
  const BigInt k_scale = pow_big(k, scale);
  BigInt product = e == 0 ? k_scale * (1 + modulus) : k_scale * d * d * coprime * coprime;
  return detail::finish_gap_multiple(l, k, t, std::move(product));
}

inline std::pair<GapMultipleResult, GapMultipleResult> gap_multiple_pair(const BigInt& l,
                                                                         std::uint32_t k,
                                                                         std::uint64_t t,
                                                                         std::uint64_t t_other) {
  auto first = gap_multiple(l, k, t);
  auto second = gap_multiple(l, k, t_other);
  if (first.leading_exponent != second.leading_exponent)
    throw std::logic_error("gap_multiple_pair: leading exponents differ");
  return {std::move(first), std::move(second)};
}

}  // namespace gtm
