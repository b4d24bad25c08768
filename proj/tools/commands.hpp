#pragma once

// Subcommand implementations for the gtm CLI. Each returns the JSON payload of
// a run report; main() adds the envelope and maps exceptions to exit codes.

#include "gtm/gtm.hpp"
#include "gtm/io/json_output.hpp"
#include "gtm/io/spec_file.hpp"

#include <json.hpp>

#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

namespace gtm::cli {

using nlohmann::json;

enum ExitCode : int {
  exit_ok = 0,
  exit_failure = 1,
  exit_parse_error = 2,
  exit_periodic_refusal = 3,
  exit_window_exceeded = 4,
  exit_budget_exceeded = 5,
  exit_undecidable = 6,
  exit_m_too_small = 7,
  exit_insufficient_length = 8,
};

inline constexpr const char* exit_code_help =
    "Exit codes:\n"
    "  0  success\n"
    "  1  invalid arguments or other failure\n"
    "  2  spec-file parse error\n"
    "  3  refused: sequence is ultimately periodic\n"
    "  4  finite-window spec queried outside its window\n"
    "  5  term budget exceeded (raise GTM_TERM_BUDGET)\n"
    "  6  spec cannot be decided (finite-window spec where unbounded y is needed)\n"
    "  7  stammering level m too small\n"
    "  8  window too short\n";

inline int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const io::spec_parse_error*>(&e)) return exit_parse_error;
  if (dynamic_cast<const periodic_spec*>(&e)) return exit_periodic_refusal;
  if (dynamic_cast<const window_exceeded*>(&e)) return exit_window_exceeded;
  if (dynamic_cast<const budget_exceeded*>(&e)) return exit_budget_exceeded;
  if (dynamic_cast<const undecidable_spec*>(&e)) return exit_undecidable;
  if (dynamic_cast<const m_too_small*>(&e)) return exit_m_too_small;
  if (dynamic_cast<const insufficient_length*>(&e)) return exit_insufficient_length;
  return exit_failure;
}

/// Term budget from GTM_TERM_BUDGET, falling back to the library default.
inline std::size_t term_budget_from_env() {
  if (const char* raw = std::getenv("GTM_TERM_BUDGET")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(raw, &end, 10);
    if (end != raw && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
    throw invalid_argument("GTM_TERM_BUDGET must be a positive integer");
  }
  return default_term_budget;
}

inline json make_report(const std::string& command, json parameters, json payload,
                        std::optional<double> wall_ms) {
  json report{{"command", command},
              {"parameters", std::move(parameters)},
              {"payload", std::move(payload)},
              {"version", gtm::version}};
  if (wall_ms) report["wall_time_ms"] = *wall_ms;
  return report;
}

// --- gen -------------------------------------------------------------------

enum class GenMode { digit, morphic, both };

struct GenResult {
  Word values;
  std::optional<bool> agree;  // set in GenMode::both
};

inline Word morphic_window(const KappaSpec& spec, std::uint64_t start, std::uint64_t stride,
                           std::size_t count, std::size_t budget) {
  if (count == 0) return {};
  const std::uint64_t last = detail::checked_index(start, count - 1, stride);
  std::uint64_t level = 0;
  for (std::uint64_t size = 1; size <= last; ++level) {
    if (size > budget / spec.base())
      throw budget_exceeded("morphic prefix covering index " + std::to_string(last) +
                            " exceeds the term budget");
    size *= spec.base();
  }
  const Word prefix = generate_prefix_morphic(spec, level, budget);
  Word out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) out.push_back(prefix[start + n * stride]);
  return out;
}

inline GenResult run_gen(const KappaSpec& spec, GenMode mode, std::uint64_t start,
                         std::uint64_t stride, std::size_t count, std::size_t budget) {
  GenResult out;
  if (mode == GenMode::morphic) {
    out.values = morphic_window(spec, start, stride, count, budget);
    return out;
  }
  out.values = equally_spaced(spec, start, stride, count, budget).values;
  if (mode == GenMode::both) out.agree = morphic_window(spec, start, stride, count, budget) == out.values;
  return out;
}

inline std::string render_gen(const GenResult& result) {
  std::string text = io::word_string(result.values);
  if (result.agree) text += *result.agree ? " AGREE" : " DISAGREE";
  return text;
}

inline json gen_payload(const GenResult& result) {
  json out{{"values", result.values}, {"text", io::word_string(result.values)}};
  if (result.agree) out["agreement"] = *result.agree ? "AGREE" : "DISAGREE";
  return out;
}

// --- analysis commands -----------------------------------------------------

inline json classify_payload(const KappaSpec& spec) {
  json out{{"verdict", io::to_json(classify(spec))}};
  if (auto np = is_n_periodic(spec)) out["n_period"] = {{"preperiod", np->first}, {"period", np->second}};
  return out;
}

inline json aenp_payload(const KappaSpec& spec, std::uint64_t max_start, std::uint64_t max_stride,
                         std::size_t horizon, unsigned jobs) {
  return {{"verdict", io::to_json(classify(spec))},
          {"scan", io::to_json(aenp_scan(spec, max_start, max_stride, horizon, jobs))}};
}

inline json stammer_payload(const KappaSpec& spec, std::uint64_t start, std::uint64_t stride,
                            std::uint64_t m_first, std::uint64_t m_last, std::size_t budget) {
  json witnesses = json::array();
  bool all_verified = true;
  for (const auto& w : witness_family(spec, start, stride, m_first, m_last, budget)) {
    const std::size_t span = w.prefix.size() + power_length(w.repeated.size(), w.exponent);
    const auto check = verify_witness(equally_spaced(spec, start, stride, span, budget), w);
    const auto bounds = check_witness_bounds(w, spec.modulus());
    json entry = io::to_json(w);
    entry["verified"] = check.ok;
    entry["bounds_hold"] = bounds.all();
    all_verified = all_verified && check.ok && bounds.all();
    witnesses.push_back(std::move(entry));
  }
  return {{"minimal_level", minimal_stammer_level(spec.base(), start, stride)},
          {"witnesses", witnesses},
          {"all_verified", all_verified}};
}

inline json kernel_payload(const KappaSpec& spec, std::size_t max_states) {
  json out{{"automaton", io::to_json(kernel_explore(spec, max_states))}};
  if (auto np = is_n_periodic(spec)) {
    out["n_period"] = {{"preperiod", np->first}, {"period", np->second}};
    out["state_bound"] = (np->first + np->second) * spec.modulus();
  } else {
    out["n_period"] = nullptr;
  }
  return out;
}

inline json eval_payload(const KappaSpec& spec, std::uint64_t start, std::uint64_t stride,
                         std::uint64_t beta, std::uint64_t digits, std::size_t budget) {
  const auto interval = eval_series(spec, start, stride, beta, digits, budget);
  const auto decimal = render_decimal(interval, digits);
  return {{"interval", io::to_json(interval)},
          {"decimal", decimal.text},
          {"settled", decimal.settled}};
}

inline json cf_payload(const KappaSpec& spec, std::uint64_t start, std::uint64_t stride,
                       std::size_t depth, const std::vector<BigInt>& value_map,
                       std::size_t budget) {
  const auto conv = eval_cf(spec, start, stride, depth, value_map, budget);
  json out{{"continued_fraction", io::to_json(conv)}};
  if (conv.size() >= 3) {
    try {
      out["irrationality_exponent"] = io::to_json(irrationality_estimate(conv));
    } catch (const insufficient_length&) {
      out["irrationality_exponent"] = nullptr;
    }
  } else {
    out["irrationality_exponent"] = nullptr;
  }
  return out;
}

inline json gap_payload(const BigInt& l, std::uint32_t base, std::uint64_t t,
                        std::optional<std::uint64_t> t_other) {
  if (t_other) {
    auto [first, second] = gap_multiple_pair(l, base, t, *t_other);
    return {{"first", io::to_json(first)}, {"second", io::to_json(second)}};
  }
  return {{"witness", io::to_json(gap_multiple(l, base, t))}};
}

inline json expand_payload(const BigInt& n, std::uint32_t base) {
  return {{"expansion", io::to_json(expand(n, base))}};
}

}  // namespace gtm::cli
