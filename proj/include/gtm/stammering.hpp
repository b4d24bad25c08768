#pragma once

#include "gtm/bigint.hpp"
#include "gtm/errors.hpp"
#include "gtm/kappa.hpp"
#include "gtm/periodicity.hpp"
#include "gtm/sequence.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gtm {

/// Certificate that U * V^w is a prefix of (a(N + n l))_n, with the block
/// lengths of the factorization W1 W2 W3 W2 ... it was cut from
/// (U = W1, V = W2 W3).
struct StammerWitness {
  std::uint64_t start = 0;   // N
  std::uint64_t stride = 1;  // l
  std::uint64_t m = 0;
  Word prefix;    // U
  Word repeated;  // V
  ExactRational exponent{1};  // w
  std::size_t w1_length = 0;
  std::size_t w2_length = 0;
  std::size_t w3_length = 0;
  // Pigeonhole pair: blocks t*l*k^m and t'*l*k^m of the full sequence carry the
  // same letter shift.
  std::uint64_t block_first = 0;
  std::uint64_t block_second = 0;
  Residue block_shift = 0;
  std::uint64_t block_length = 0;  // k^m
  std::uint64_t ratio_bound = 0;   // 2 L l + 3, bound on |U| / |V|
};

/// |V^w| = floor(w) |V| + ceil(frac(w) |V|).
inline std::size_t power_length(std::size_t length, const ExactRational& w) {
  const BigInt whole = numerator(w) / denominator(w);
  const ExactRational frac = w - ExactRational(whole);
  const BigInt scaled_num = numerator(frac) * length;
  const BigInt den = denominator(frac);
  const BigInt tail = (scaled_num + den - 1) / den;
  return static_cast<std::size_t>(whole * length + tail);
}

/// Least M with k^M > 2(N + l); witnesses need m > M.
inline std::uint64_t minimal_stammer_level(std::uint32_t base, std::uint64_t start,
                                           std::uint64_t stride) {
  const BigInt target = 2 * (BigInt(start) + stride);
  std::uint64_t level = 0;
  BigInt power = 1;
  while (power <= target) {
    power *= base;
    ++level;
  }
  return level;
}

/// Outcome of each size condition on a witness, recomputed from block lengths.
struct WitnessBounds {
  bool w1_bound = false;        // |W1| <= ((Ll+1)k^m - N)/l + 1
  bool w2_lower = false;        // |W2| >= (k^m - N)/l - 1
  bool w23_bound = false;       // |W2| + |W3| <= ((Ll+1)k^m - N)/l + 1
  bool overhang_bound = false;  // (w-1)|V| <= k^m/(2l) < |W2| and ceil((w-1)|V|) < |W2|
  bool ratio_bound = false;     // |U| / |V| <= 2Ll + 3

  bool all() const noexcept {
    return w1_bound && w2_lower && w23_bound && overhang_bound && ratio_bound;
  }
};

inline WitnessBounds check_witness_bounds(const StammerWitness& w, std::uint32_t modulus) {
  const BigInt L = modulus, l = w.stride, N = w.start, km = w.block_length;
  const BigInt w1 = w.w1_length, w2 = w.w2_length, w3 = w.w3_length;
  const BigInt u = w.prefix.size(), v = w.repeated.size();
  WitnessBounds out;
  // Each inequality is multiplied through by l (or 2l) to stay in integers.
  const BigInt upper = (L * l + 1) * km - N + l;  // l * (((Ll+1)k^m - N)/l + 1)
  out.w1_bound = w1 * l <= upper;
  out.w2_lower = w2 * l >= km - N - l;
  out.w23_bound = (w2 + w3) * l <= upper;
  const ExactRational overhang = (w.exponent - 1) * ExactRational(v);
  const BigInt overhang_ceil = (numerator(overhang) + denominator(overhang) - 1) /
                               denominator(overhang);
  out.overhang_bound = numerator(overhang) * 2 * l <= km * denominator(overhang) &&
                      km < w2 * 2 * l && overhang_ceil < w2;
  out.ratio_bound = v > 0 && u <= (2 * L * l + 3) * v;
  return out;
}

struct WitnessCheck {
  bool ok = false;
  std::optional<std::size_t> mismatch_index;
  std::string reason;
};

/// True iff U * V^w is a prefix of the window, w > 1, V is nonempty and
/// |U| <= ratio_bound * |V|. On a prefix mismatch the first differing
/// subsequence index is reported.
inline WitnessCheck verify_witness(const SequenceWindow& window, const StammerWitness& witness) {
  WitnessCheck check;
  if (window.start != witness.start || window.stride != witness.stride) {
    check.reason = "window (N, l) does not match the witness";
    return check;
  }
  if (witness.exponent <= 1) {
    check.reason = "exponent w must exceed 1";
    return check;
  }
  if (witness.repeated.empty()) {
    check.reason = "V is empty";
    return check;
  }
  const std::size_t v_len = witness.repeated.size();
  const std::size_t total = witness.prefix.size() + power_length(v_len, witness.exponent);
  if (window.size() < total)
    throw insufficient_length("verify_witness: window has " + std::to_string(window.size()) +
                              " terms, witness spans " + std::to_string(total));
  for (std::size_t i = 0; i < total; ++i) {
    const Residue expected = i < witness.prefix.size()
                                 ? witness.prefix[i]
                                 : witness.repeated[(i - witness.prefix.size()) % v_len];
    if (window.values[i] != expected) {
      check.mismatch_index = i;
      check.reason = "prefix mismatch at subsequence index " + std::to_string(i);
      return check;
    }
  }
  if (BigInt(witness.prefix.size()) > BigInt(witness.ratio_bound) * v_len) {
    check.reason = "|U| / |V| exceeds the recorded ratio bound";
    return check;
  }
  check.ok = true;
  return check;
}

/// Stammering witness for (a(N + n l))_n at level m.
///
/// Block j of length k^m in the full sequence is the first block shifted by
/// a(j k^m). Among the L+1 blocks j = t l (t = 0..L) two share a shift; the pair
/// with the smallest t' - t (then smallest t) is used. The subsequence indices
/// falling into block t l form W2, those before it W1, and W2 recurs exactly
/// k^m (t' - t) positions later, so V = W2 W3 has that length.
inline StammerWitness build_witness(const KappaSpec& spec, std::uint64_t start,
                                    std::uint64_t stride, std::uint64_t m,
                                    std::size_t budget = default_term_budget) {
  if (stride < 1) throw invalid_argument("stride l must be >= 1");
  const auto verdict = classify(spec);
  if (verdict.status == PeriodicityStatus::unknown_up_to_bound)
    throw undecidable_spec("stammering needs an eventually periodic kappa");
  if (verdict.is_periodic())
    throw periodic_spec("the sequence is ultimately periodic; no stammering witness exists");
  const std::uint64_t level = minimal_stammer_level(spec.base(), start, stride);
  if (m <= level)
    throw m_too_small("m = " + std::to_string(m) + " must exceed M = " + std::to_string(level) +
                      " (least M with k^M > 2(N + l))");

  const std::uint32_t L = spec.modulus();
  const auto km = detail::bounded_power(spec.base(), m, budget);
  if (!km || *km > budget / (L + 2))
    throw budget_exceeded("witness at m = " + std::to_string(m) + " exceeds the term budget");
  const std::uint64_t block = *km;

  std::vector<Residue> shifts;
  for (std::uint64_t t = 0; t <= L; ++t)
    shifts.push_back(a_of_n(spec, detail::checked_index(0, t * stride, block)));
  std::uint64_t first = 0, second = 0;
  for (std::uint64_t gap = 1; gap <= L && second == 0; ++gap)
    for (std::uint64_t t = 0; t + gap <= L; ++t)
      if (shifts[t] == shifts[t + gap]) {
        first = t;
        second = t + gap;
        break;
      }

  auto ceil_div = [](std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; };
  const std::uint64_t block_start = block * first * stride;
  const std::uint64_t w2_begin = block_start > start ? ceil_div(block_start - start, stride) : 0;
  const std::uint64_t w2_end = ceil_div(block_start + block - start, stride);
  const std::uint64_t period = block * (second - first);

  StammerWitness out;
  out.start = start;
  out.stride = stride;
  out.m = m;
  out.exponent = ExactRational(BigInt(2 * L * stride + 4), BigInt(2 * L * stride + 3));
  out.w1_length = w2_begin;
  out.w2_length = w2_end - w2_begin;
  out.w3_length = period - out.w2_length;
  out.block_first = first;
  out.block_second = second;
  out.block_shift = shifts[first];
  out.block_length = block;
  out.ratio_bound = 2 * std::uint64_t{L} * stride + 3;

  const std::size_t needed = w2_begin + power_length(period, out.exponent);
  const auto window = equally_spaced(spec, start, stride, needed, budget);
  out.prefix.assign(window.values.begin(), window.values.begin() + w2_begin);
  out.repeated.assign(window.values.begin() + w2_begin,
                      window.values.begin() + w2_begin + period);

  if (!check_witness_bounds(out, L).all())
    throw std::logic_error("build_witness: block sizes violate the stammering bounds");
  if (const auto check = verify_witness(window, out); !check.ok)
    throw std::logic_error("build_witness: constructed witness fails verification: " +
                           check.reason);
  return out;
}

/// One witness per m in [m_first, m_last]; empty when the range is empty.
inline std::vector<StammerWitness> witness_family(const KappaSpec& spec, std::uint64_t start,
                                                  std::uint64_t stride, std::uint64_t m_first,
                                                  std::uint64_t m_last,
                                                  std::size_t budget = default_term_budget) {
  std::vector<StammerWitness> out;
  for (std::uint64_t m = m_first; m <= m_last && m_first <= m_last; ++m)
    out.push_back(build_witness(spec, start, stride, m, budget));
  return out;
}

}  // namespace gtm
