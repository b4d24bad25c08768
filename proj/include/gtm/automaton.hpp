#pragma once

#include "gtm/errors.hpp"
#include "gtm/kappa.hpp"
#include "gtm/sequence.hpp"

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gtm {

/// Kernel element n -> a_shift(n) + offset (mod L), where
/// a_shift(n) = sum over the expansion terms (s, w) of n of kappa(s, w + shift).
/// a(k^e n + j) is the state (e, a(j)) for every j < k^e.
struct KernelState {
  std::uint64_t shift = 0;
  Residue offset = 0;

  friend auto operator<=>(const KernelState&, const KernelState&) = default;
};

template <Integer Int>
Residue kernel_value(const KappaSpec& spec, const KernelState& state, Int n) {
  detail::check_nonnegative(n);
  std::uint64_t total = state.offset;
  for (std::uint64_t w = 0; n != 0; ++w) {
    total += spec.digit_value(static_cast<std::uint32_t>(n % spec.base()), w + state.shift);
    n /= spec.base();
  }
  return static_cast<Residue>(total % spec.modulus());
}

/// DFAO reading base-k digits least significant first. State 0 is the
/// sequence itself; the output of a state is its offset.
struct KernelAutomaton {
  std::uint32_t base = 2;
  std::uint32_t modulus = 2;
  std::vector<KernelState> states;
  std::vector<std::vector<std::size_t>> transitions;  // [state][digit]; empty while unexpanded
  std::vector<std::uint64_t> depth;                   // BFS level at which a state was found
  bool complete = false;
  std::string inconclusive_reason;

  Residue output(std::size_t state) const { return states.at(state).offset; }

  std::size_t states_within_depth(std::uint64_t max_depth) const {
    std::size_t count = 0;
    for (auto d : depth) count += d <= max_depth ? 1 : 0;
    return count;
  }

  /// Runs the automaton on n; requires a complete closure.
  Residue evaluate(std::uint64_t n) const {
    if (!complete) throw undecidable_spec("evaluate: kernel closure is incomplete");
    std::size_t state = 0;
    while (n != 0) {
      state = transitions[state][n % base];
      n /= base;
    }
    return output(state);
  }
};

namespace detail {

// True iff kappa(., a + y) == kappa(., b + y) for every y >= 0. Both column
// streams are periodic with period p past y0, so a finite comparison decides it.
inline bool same_column_stream(const KappaSpec& spec, std::uint64_t a, std::uint64_t b) {
  const std::uint64_t y0 = spec.preperiod(), p = *spec.period();
  const std::uint64_t reach = std::max(a < y0 ? y0 - a : 0, b < y0 ? y0 - b : 0) + p;
  for (std::uint64_t y = 0; y < reach; ++y)
    if (spec.column(a + y) != spec.column(b + y)) {
      for (std::uint32_t s = 1; s < spec.base(); ++s)
        if (spec(s, a + y) != spec(s, b + y)) return false;
    }
  return true;
}

// Canonical representative of each shift class for an eventually periodic spec:
// rep[e] is the least e' with the same column stream as e, for e < y0 + p.
inline std::vector<std::uint64_t> shift_representatives(const KappaSpec& spec) {
  const std::uint64_t limit = spec.preperiod() + *spec.period();
  std::vector<std::uint64_t> rep(limit);
  for (std::uint64_t e = 0; e < limit; ++e) {
    rep[e] = e;
    for (std::uint64_t f = 0; f < e; ++f)
      if (rep[f] == f && same_column_stream(spec, f, e)) {
        rep[e] = f;
        break;
      }
  }
  return rep;
}

}  // namespace detail

/// Closure of {(0, 0)} under the refinement maps (e, c) -> (e + 1, c + kappa(j, e))
/// for digits j in [0, k-1] (kappa(0, .) = 0). States with equal column streams
/// and offsets are merged, so an eventually periodic spec closes with at most
/// (y0 + p) * L states. A finite-window spec, or hitting max_states, leaves the
/// closure incomplete; that is never evidence of a proof of non-automaticity.
inline KernelAutomaton kernel_explore(const KappaSpec& spec, std::size_t max_states) {
  KernelAutomaton dfao;
  dfao.base = spec.base();
  dfao.modulus = spec.modulus();

  std::vector<std::uint64_t> rep;
  if (!spec.is_finite_window()) rep = detail::shift_representatives(spec);
  auto canonical = [&](std::uint64_t shift) -> std::uint64_t {
    if (spec.is_finite_window()) return shift;
    return rep[spec.column(shift)];
  };

  std::map<KernelState, std::size_t> index;
  auto intern = [&](KernelState state, std::uint64_t level) -> std::optional<std::size_t> {
    if (auto it = index.find(state); it != index.end()) return it->second;
    if (dfao.states.size() >= max_states) return std::nullopt;
    index.emplace(state, dfao.states.size());
    dfao.states.push_back(state);
    dfao.transitions.emplace_back();
    dfao.depth.push_back(level);
    return dfao.states.size() - 1;
  };

  if (max_states == 0) {
    dfao.inconclusive_reason = "max_states exceeded";
    return dfao;
  }
  intern({0, 0}, 0);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t id = queue.front();
    queue.pop_front();
    const KernelState state = dfao.states[id];
    if (auto window = spec.window(); window && state.shift >= *window) {
      dfao.inconclusive_reason = "finite window exhausted at shift " + std::to_string(state.shift);
      return dfao;
    }
    std::vector<std::size_t> row;
    for (std::uint32_t digit = 0; digit < spec.base(); ++digit) {
      const KernelState child{canonical(state.shift + 1),
                              static_cast<Residue>((state.offset +
                                                    spec.digit_value(digit, state.shift)) %
                                                   spec.modulus())};
      const bool fresh = !index.contains(child);
      const auto child_id = intern(child, dfao.depth[id] + 1);
      if (!child_id) {
        dfao.inconclusive_reason = "max_states exceeded";
        return dfao;
      }
      if (fresh) queue.push_back(*child_id);
      row.push_back(*child_id);
    }
    dfao.transitions[id] = std::move(row);
  }
  dfao.complete = true;
  return dfao;
}

/// Declared (y0, p) with p reduced to the least period of the column stream
/// past y0; empty for finite-window specs.
inline std::optional<std::pair<std::size_t, std::size_t>> is_n_periodic(const KappaSpec& spec) {
  if (spec.is_finite_window()) return std::nullopt;
  const std::size_t y0 = spec.preperiod(), p = *spec.period();
  for (std::size_t d = 1; d <= p; ++d) {
    if (p % d != 0) continue;
    bool periodic = true;
    for (std::size_t y = y0; y < y0 + p && periodic; ++y)
      for (std::uint32_t s = 1; s < spec.base() && periodic; ++s)
        periodic = spec(s, y) == spec(s, y0 + (y - y0 + d) % p);
    if (periodic) return std::pair{y0, d};
  }
  return std::pair{y0, p};
}

/// Distinct prefixes among the kernel subsequences (a(k^e n + j))_{n < horizon},
/// e <= e_max, j < k^e. The group count is a lower bound on the kernel size.
struct KernelGroups {
  std::vector<Word> prefixes;
  std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>> members;  // (e, j)

  std::size_t size() const noexcept { return prefixes.size(); }
};

inline KernelGroups kernel_brute_force(const KappaSpec& spec, std::uint64_t e_max,
                                       std::size_t horizon,
                                       std::size_t budget = default_term_budget) {
  const auto top = detail::bounded_power(spec.base(), e_max, budget);
  if (!top || horizon == 0 || *top > budget / horizon / 2)
    throw budget_exceeded("kernel_brute_force: k^e_max * horizon exceeds the term budget");
  KernelGroups groups;
  std::map<Word, std::size_t> seen;
  std::uint64_t power = 1;
  for (std::uint64_t e = 0; e <= e_max; ++e, power *= spec.base()) {
    for (std::uint64_t j = 0; j < power; ++j) {
      const auto window = equally_spaced(spec, j, power, horizon, budget);
      auto [it, inserted] = seen.emplace(window.values, groups.prefixes.size());
      if (inserted) {
        groups.prefixes.push_back(window.values);
        groups.members.emplace_back();
      }
      groups.members[it->second].emplace_back(e, j);
    }
  }
  return groups;
}

}  // namespace gtm
