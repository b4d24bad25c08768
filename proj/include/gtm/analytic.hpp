#pragma once

#include "gtm/bigint.hpp"
#include "gtm/errors.hpp"
#include "gtm/kappa.hpp"
#include "gtm/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace gtm {

// ---------------------------------------------------------------------------
// Generating-function product

/// Coefficients of prod_{y=0}^{Y} (1 + sum_s zeta^{kappa(s,y)} z^{s k^y}) with
/// zeta = exp(2 pi i / L). Every coefficient is zero or a single power of zeta,
/// stored as its exponent.
struct TruncatedProductSeries {
  std::uint32_t modulus = 2;
  std::uint32_t base = 2;
  std::vector<std::optional<Residue>> coefficients;
};

inline TruncatedProductSeries product_coefficients(const KappaSpec& spec, std::uint64_t top,
                                                   std::size_t budget = default_term_budget) {
  const std::uint32_t k = spec.base();
  const auto length = detail::bounded_power(k, top + 1, budget);
  if (!length) throw budget_exceeded("product_coefficients: k^(Y+1) exceeds the term budget");

  TruncatedProductSeries series{spec.modulus(), k, {Residue{0}}};
  auto& coeffs = series.coefficients;
  std::size_t factor_step = 1;  // k^y
  for (std::uint64_t y = 0; y <= top; ++y) {
    const std::size_t old_size = coeffs.size();
    coeffs.resize(old_size * k);
    for (std::uint32_t s = 1; s < k; ++s) {
      const Residue twist = spec(s, y);
      for (std::size_t i = 0; i < old_size; ++i) {
        if (!coeffs[i]) continue;
        auto& target = coeffs[i + s * factor_step];
        // Two contributions to one power of z would make a sum of roots of unity.
        if (target) throw std::logic_error("product_coefficients: coefficient collision");
        target = (*coeffs[i] + twist) % spec.modulus();
      }
    }
    factor_step *= k;
  }
  return series;
}

// ---------------------------------------------------------------------------
// Series sum_{n >= 0} a(N + n l) beta^{-n-1}

struct SeriesInterval {
  ExactRational lo;
  ExactRational hi;
  std::uint64_t terms = 0;  // T: number of summed terms
};

/// Encloses the series value in [lo, hi] with hi - lo = beta^{-T} < 10^{-digits},
/// where T = digits * ceil(log_beta 10) + 2 and the tail uses a(.) <= beta - 1.
inline SeriesInterval eval_series(const KappaSpec& spec, std::uint64_t start,
                                  std::uint64_t stride, std::uint64_t beta, std::uint64_t digits,
                                  std::size_t budget = default_term_budget) {
  if (beta < spec.modulus())
    throw invalid_argument("beta = " + std::to_string(beta) + " must be >= L = " +
                           std::to_string(spec.modulus()));
  if (digits < 1) throw invalid_argument("digits must be >= 1");
  std::uint64_t per_digit = 0;
  for (std::uint64_t power = 1; power < 10; power *= beta) ++per_digit;
  const std::uint64_t terms = digits * per_digit + 2;
  if (terms > budget) throw budget_exceeded("eval_series: too many terms for the budget");

  const auto window = equally_spaced(spec, start, stride, terms, budget);
  BigInt scaled = 0;  // sum a_n beta^{T-1-n}
  for (Residue v : window.values) scaled = scaled * beta + v;
  const BigInt denom = pow_big(beta, terms);
  return {ExactRational(scaled, denom), ExactRational(scaled + 1, denom), terms};
}

struct DecimalRendering {
  std::string text;
  bool settled = false;  // hi truncates to the same digits as lo
};

/// Round-toward-zero decimal digits of lo; `settled` is false when hi would
/// render differently at the requested precision.
inline DecimalRendering render_decimal(const SeriesInterval& interval, std::uint64_t digits) {
  const BigInt scale = pow_big(10, digits);
  auto truncate = [&](const ExactRational& r) {
    return numerator(r) * scale / denominator(r);
  };
  const BigInt lo_digits = truncate(interval.lo);
  std::string fraction = (lo_digits % scale).str();
  fraction.insert(0, digits - std::min<std::size_t>(digits, fraction.size()), '0');
  DecimalRendering out;
  out.text = (lo_digits / scale).str() + "." + fraction;
  out.settled = truncate(interval.hi) == lo_digits;
  return out;
}

// ---------------------------------------------------------------------------
// Continued fractions

/// [0 : a_1, a_2, ...] with convergents p_n / q_n by the standard recurrence.
struct ConvergentList {
  std::vector<BigInt> partial_quotients;  // a_0 = 0, a_1, ..., a_T
  std::vector<BigInt> p;
  std::vector<BigInt> q;

  std::size_t size() const noexcept { return p.size(); }
  ExactRational convergent(std::size_t n) const { return ExactRational(p.at(n), q.at(n)); }
};

inline ConvergentList convergents(std::vector<BigInt> quotients) {
  ConvergentList out;
  out.partial_quotients = std::move(quotients);
  BigInt p_prev = 1, q_prev = 0, p_prev2 = 0, q_prev2 = 1;
  for (const auto& a : out.partial_quotients) {
    BigInt p_cur = a * p_prev + p_prev2;
    BigInt q_cur = a * q_prev + q_prev2;
    out.p.push_back(p_cur);
    out.q.push_back(q_cur);
    p_prev2 = std::move(p_prev);
    q_prev2 = std::move(q_prev);
    p_prev = std::move(p_cur);
    q_prev = std::move(q_cur);
  }
  return out;
}

/// Default letter-to-quotient map j -> j + 1.
inline std::vector<BigInt> default_value_map(std::uint32_t modulus) {
  std::vector<BigInt> map;
  for (std::uint32_t j = 0; j < modulus; ++j) map.emplace_back(j + 1);
  return map;
}

/// Convergents of [0 : rho(a(N)), rho(a(N+l)), ..., rho(a(N+(T-1)l))].
inline ConvergentList eval_cf(const KappaSpec& spec, std::uint64_t start, std::uint64_t stride,
                              std::size_t depth, const std::vector<BigInt>& value_map,
                              std::size_t budget = default_term_budget) {
  if (value_map.size() != spec.modulus())
    throw invalid_argument("value map needs exactly L = " + std::to_string(spec.modulus()) +
                           " entries");
  if (std::set<BigInt>(value_map.begin(), value_map.end()).size() != value_map.size())
    throw invalid_argument("value map is not injective");
  if (std::any_of(value_map.begin(), value_map.end(), [](const BigInt& v) { return v <= 0; }))
    throw invalid_argument("value map must take positive values");

  const auto window = equally_spaced(spec, start, stride, depth, budget);
  std::vector<BigInt> quotients{0};
  for (Residue v : window.values) quotients.push_back(value_map[v]);
  return convergents(std::move(quotients));
}

inline ConvergentList eval_cf(const KappaSpec& spec, std::uint64_t start, std::uint64_t stride,
                              std::size_t depth) {
  return eval_cf(spec, start, stride, depth, default_value_map(spec.modulus()));
}

// ---------------------------------------------------------------------------
// Irrationality exponent

/// Empirical indicator, not a bound: max of log q_{n+1} / log q_n + 1 over the
/// upper half of the available indices (q_n >= 2).
struct IrrationalityEstimate {
  double value = 0;
  std::size_t first_index = 0;
  std::size_t last_index = 0;
  static constexpr const char* label = "ESTIMATE";
};

inline double log_big(const BigInt& v) {
  if (v <= 0) throw invalid_argument("log_big: argument must be positive");
  const std::size_t bits = boost::multiprecision::msb(v) + 1;
  if (bits <= 53) return std::log(v.convert_to<double>());
  const std::size_t shift = bits - 53;
  const BigInt top = v >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::numbers::ln2;
}

inline IrrationalityEstimate irrationality_estimate(const ConvergentList& conv) {
  if (conv.size() < 3) throw insufficient_length("irrationality_estimate: need >= 3 convergents");
  IrrationalityEstimate out;
  out.first_index = std::max<std::size_t>(1, (conv.size() - 1) / 2);
  out.last_index = conv.size() - 2;
  bool any = false;
  for (std::size_t n = out.first_index; n <= out.last_index; ++n) {
    if (conv.q[n] < 2) continue;
    out.value = std::max(out.value, log_big(conv.q[n + 1]) / log_big(conv.q[n]) + 1.0);
    any = true;
  }
  if (!any) throw insufficient_length("irrationality_estimate: denominators too small");
  return out;
}

}  // namespace gtm
