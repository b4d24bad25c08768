#pragma once

#include "gtm/bigint.hpp"
#include "gtm/errors.hpp"
#include "gtm/kappa.hpp"
#include "gtm/sequence.hpp"

#include <algorithm>
#include <cstdint>
#include <future>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace gtm {

/// First (s, y) at which the shifted criterion fails for a candidate shift A.
struct Refutation {
  std::uint64_t shift = 0;  // A
  std::uint32_t digit = 0;  // s
  std::uint64_t y = 0;

  friend bool operator==(const Refutation&, const Refutation&) = default;
};

enum class PeriodicityStatus { periodic, non_periodic, unknown_up_to_bound };

inline std::string_view to_string(PeriodicityStatus status) {
  switch (status) {
    case PeriodicityStatus::periodic: return "Periodic";
    case PeriodicityStatus::non_periodic: return "NonPeriodic";
    case PeriodicityStatus::unknown_up_to_bound: return "UnknownUpToBound";
  }
  return "?";
}

struct PeriodicityVerdict {
  PeriodicityStatus status = PeriodicityStatus::unknown_up_to_bound;
  // Periodic: the least A satisfying the criterion, the period L*k^A, the
  // exponent of h = exp(2 pi i kappa(1,A) / L), and how many y were compared.
  std::optional<std::uint64_t> shift;
  std::optional<BigInt> period;
  std::optional<Residue> root_exponent;
  std::uint64_t checked_y = 0;
  // NonPeriodic: one refutation per A in the search range. UnknownUpToBound:
  // refutations for the A that fail inside the window.
  std::vector<Refutation> refutations;
  std::optional<std::size_t> bound;  // UnknownUpToBound only: Y_max

  bool is_periodic() const noexcept { return status == PeriodicityStatus::periodic; }
  bool is_non_periodic() const noexcept { return status == PeriodicityStatus::non_periodic; }
};

/// The sequence y -> k^y mod L is eventually periodic; this is its preperiod and
/// cycle length.
struct PowerCycle {
  std::size_t preperiod = 0;
  std::size_t period = 1;
};

inline PowerCycle power_cycle(std::uint32_t base, std::uint32_t modulus) {
  std::map<std::uint64_t, std::size_t> seen;
  std::uint64_t value = 1 % modulus;
  for (std::size_t y = 0;; ++y) {
    if (auto it = seen.find(value); it != seen.end()) return {it->second, y - it->second};
    seen.emplace(value, y);
    value = value * base % modulus;
  }
}

namespace detail {

// Checks kappa(s, A+y) == kappa(1,A) * s * k^y (mod L) for y < y_limit (and
// A + y < column_limit, when given). Returns the first failure ordered by (y, s).
inline std::optional<Refutation> check_shift(const KappaSpec& spec, std::uint64_t shift,
                                             std::uint64_t y_limit,
                                             std::optional<std::uint64_t> column_limit) {
  const std::uint64_t L = spec.modulus();
  const std::uint64_t h = spec(1, shift);
  std::uint64_t power = 1 % L;  // k^y mod L
  for (std::uint64_t y = 0; y < y_limit; ++y) {
    if (column_limit && shift + y >= *column_limit) break;
    for (std::uint32_t s = 1; s < spec.base(); ++s) {
      if (spec(s, shift + y) != h * s % L * power % L) return Refutation{shift, s, y};
    }
    power = power * spec.base() % L;
  }
  return std::nullopt;
}

}  // namespace detail

/// Decides ultimate periodicity: the sequence is ultimately periodic iff some A
/// has kappa(s, A+y) == kappa(1,A) s k^y (mod L) for all s and all y, and then
/// L*k^A is a period.
///
/// Both sides are eventually periodic in y: the left with preperiod
/// max(y0 - A, 0) and period p, the right with the preperiod and cycle of
/// k^y mod L. Agreement on [0, max preperiod + lcm of periods) is therefore
/// agreement for all y. For A >= y0 the condition depends only on
/// (A - y0) mod p, so A ranges over [0, y0 + p).
inline PeriodicityVerdict classify(const KappaSpec& spec) {
  PeriodicityVerdict verdict;
  const PowerCycle cycle = power_cycle(spec.base(), spec.modulus());

  if (spec.is_finite_window()) {
    const std::size_t window = *spec.window();
    verdict.status = PeriodicityStatus::unknown_up_to_bound;
    verdict.bound = window;
    for (std::uint64_t shift = 0; shift < window; ++shift) {
      auto failure = detail::check_shift(spec, shift, window, window);
      if (!failure) {
        if (!verdict.shift) {
          verdict.shift = shift;
          verdict.root_exponent = spec(1, shift);
          verdict.checked_y = window - shift;
        }
      } else {
        verdict.refutations.push_back(*failure);
      }
    }
    return verdict;
  }

  const std::size_t y0 = spec.preperiod();
  const std::size_t p = *spec.period();
  const std::size_t joint_period = std::lcm(p, cycle.period);
  for (std::uint64_t shift = 0; shift < y0 + p; ++shift) {
    const std::uint64_t lhs_preperiod = shift < y0 ? y0 - shift : 0;
    const std::uint64_t y_limit =
        std::max<std::uint64_t>(lhs_preperiod, cycle.preperiod) + joint_period;
    if (auto failure = detail::check_shift(spec, shift, y_limit, std::nullopt)) {
      verdict.refutations.push_back(*failure);
      continue;
    }
    verdict.status = PeriodicityStatus::periodic;
    verdict.shift = shift;
    verdict.period = BigInt(spec.modulus()) * pow_big(spec.base(), shift);
    verdict.root_exponent = spec(1, shift);
    verdict.checked_y = y_limit;
    verdict.refutations.clear();
    return verdict;
  }
  verdict.status = PeriodicityStatus::non_periodic;
  return verdict;
}

/// Closed form for y-independent kappa: periodic iff s*kappa(1) == kappa(s)
/// for every s and kappa(k-1) == 0 (mod L). Refutations use the same (y, s)
/// ordering as classify on the constant spec.
inline PeriodicityVerdict classify_constant(std::uint32_t modulus, std::uint32_t base,
                                            std::span<const Residue> values) {
  if (modulus < 2 || base < 2 || values.size() + 1 != base)
    throw invalid_argument("classify_constant: need L >= 2, k >= 2 and k-1 values");
  for (Residue v : values)
    if (v >= modulus) throw invalid_argument("classify_constant: value outside [0, L-1]");

  PeriodicityVerdict verdict;
  const std::uint64_t first = values[0];
  for (std::uint32_t s = 1; s < base; ++s) {
    if (s * first % modulus != values[s - 1]) {
      verdict.status = PeriodicityStatus::non_periodic;
      verdict.refutations.push_back({0, s, 0});
      return verdict;
    }
  }
  if (values[base - 2] != 0) {
    verdict.status = PeriodicityStatus::non_periodic;
    verdict.refutations.push_back({0, 1, 1});
    return verdict;
  }
  const PowerCycle cycle = power_cycle(base, modulus);
  verdict.status = PeriodicityStatus::periodic;
  verdict.shift = 0;
  verdict.period = BigInt(modulus);
  verdict.root_exponent = static_cast<Residue>(first);
  verdict.checked_y = cycle.preperiod + cycle.period;
  return verdict;
}

/// A period observed inside a finite window: values[n] == values[n + period]
/// for every preperiod <= n < size - period.
struct WindowPeriod {
  std::size_t preperiod = 0;
  std::size_t period = 0;

  friend bool operator==(const WindowPeriod&, const WindowPeriod&) = default;
};

/// Least period (then least preperiod) of the window within the given bounds.
/// The answer describes the window only; absence is "no period up to the
/// bounds", never a proof of non-periodicity.
inline std::optional<WindowPeriod> brute_force_period(std::span<const Residue> values,
                                                      std::size_t max_preperiod,
                                                      std::size_t max_period) {
  if (max_period < 1) throw invalid_argument("brute_force_period: max_period must be >= 1");
  if (values.size() < max_preperiod + 2 * max_period)
    throw insufficient_length("brute_force_period: window of " + std::to_string(values.size()) +
                              " terms, need max_preperiod + 2*max_period = " +
                              std::to_string(max_preperiod + 2 * max_period));
  for (std::size_t period = 1; period <= max_period; ++period) {
    std::size_t start = 0;
    for (std::size_t n = values.size() - period; n-- > 0;) {
      if (values[n] != values[n + period]) {
        start = n + 1;
        break;
      }
    }
    if (start <= max_preperiod) return WindowPeriod{start, period};
  }
  return std::nullopt;
}

struct AenpHit {
  std::uint64_t start = 0;   // N
  std::uint64_t stride = 1;  // l
  WindowPeriod window_period;
  bool constant = false;

  friend bool operator==(const AenpHit&, const AenpHit&) = default;
};

struct AenpReport {
  std::uint64_t max_start = 0;
  std::uint64_t max_stride = 0;
  std::size_t horizon = 0;
  std::size_t max_preperiod = 0;
  std::size_t max_period = 0;
  std::size_t windows_scanned = 0;
  std::vector<AenpHit> hits;  // ordered by (l, N)
};

/// Runs brute_force_period on a(N + n l), n < horizon, for every N <= max_start
/// and 1 <= l <= max_stride, with preperiod and period bounds of horizon / 4.
/// Strides are distributed over `jobs` workers; output order does not depend on jobs.
inline AenpReport aenp_scan(const KappaSpec& spec, std::uint64_t max_start,
                            std::uint64_t max_stride, std::size_t horizon, unsigned jobs = 1) {
  if (horizon < 4) throw insufficient_length("aenp_scan: horizon must be >= 4");
  AenpReport report;
  report.max_start = max_start;
  report.max_stride = max_stride;
  report.horizon = horizon;
  report.max_preperiod = horizon / 4;
  report.max_period = horizon / 4;

  auto scan_stride = [&](std::uint64_t stride) {
    std::vector<AenpHit> hits;
    for (std::uint64_t start = 0; start <= max_start; ++start) {
      const auto window = equally_spaced(spec, start, stride, horizon);
      if (auto found = brute_force_period(window.values, report.max_preperiod, report.max_period)) {
        const bool constant = std::all_of(window.values.begin(), window.values.end(),
                                          [&](Residue v) { return v == window.values.front(); });
        hits.push_back({start, stride, *found, constant});
      }
    }
    return hits;
  };

  std::vector<std::vector<AenpHit>> per_stride(max_stride);
  const unsigned workers = std::max(1u, jobs);
  for (std::uint64_t first = 1; first <= max_stride; first += workers) {
    std::vector<std::future<std::vector<AenpHit>>> batch;
    for (std::uint64_t stride = first; stride < first + workers && stride <= max_stride; ++stride)
      batch.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred,
                                 scan_stride, stride));
    for (std::size_t i = 0; i < batch.size(); ++i) per_stride[first - 1 + i] = batch[i].get();
  }
  for (auto& hits : per_stride)
    report.hits.insert(report.hits.end(), hits.begin(), hits.end());
  report.windows_scanned = static_cast<std::size_t>((max_start + 1) * max_stride);
  return report;
}

}  // namespace gtm
