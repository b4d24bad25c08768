#pragma once

// JSON records for CLI output. Big integers and rationals are written as
// decimal strings so no precision is lost.

#include "gtm/analytic.hpp"
#include "gtm/automaton.hpp"
#include "gtm/expansion.hpp"
#include "gtm/periodicity.hpp"
#include "gtm/stammering.hpp"

#include <json.hpp>

#include <string>

namespace gtm::io {

using nlohmann::json;

inline std::string word_string(const Word& word) {
  std::string out;
  bool wide = false;
  for (Residue v : word) wide = wide || v > 9;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (wide && i > 0) out += ' ';
    out += std::to_string(word[i]);
  }
  return out;
}

inline json rational_json(const ExactRational& r) {
  return {{"num", numerator(r).str()}, {"den", denominator(r).str()}};
}

inline json to_json(const DigitExpansion& d) {
  json terms = json::array();
  for (const auto& t : d.terms) terms.push_back({{"s", t.coeff}, {"w", t.exponent}});
  return {{"base", d.base}, {"terms", terms}};
}

inline json to_json(const GapMultipleResult& r) {
  return {{"x", r.x.str()},
          {"product", r.expansion.value().str()},
          {"expansion", to_json(r.expansion)},
          {"leading_exponent", r.leading_exponent},
          {"leading_coefficient", r.expansion.terms.front().coeff},
          {"gap", r.gap ? json(*r.gap) : json("inf")}};
}

inline json to_json(const PeriodicityVerdict& v) {
  json out{{"status", std::string(to_string(v.status))}};
  if (v.shift) out["A"] = *v.shift;
  if (v.period) out["period"] = v.period->str();
  if (v.root_exponent) out["h_exponent"] = *v.root_exponent;
  if (v.is_periodic() || v.shift) out["checked_y"] = v.checked_y;
  if (v.bound) out["bound"] = *v.bound;
  if (!v.refutations.empty()) {
    json refutations = json::array();
    for (const auto& r : v.refutations)
      refutations.push_back({{"A", r.shift}, {"s", r.digit}, {"y", r.y}});
    out["refutations"] = refutations;
  }
  return out;
}

inline json to_json(const AenpReport& r) {
  json hits = json::array();
  for (const auto& h : r.hits)
    hits.push_back({{"N", h.start},
                    {"l", h.stride},
                    {"preperiod", h.window_period.preperiod},
                    {"period", h.window_period.period},
                    {"constant", h.constant}});
  return {{"max_N", r.max_start},         {"max_l", r.max_stride},
          {"horizon", r.horizon},         {"max_preperiod", r.max_preperiod},
          {"max_period", r.max_period},   {"windows_scanned", r.windows_scanned},
          {"periodic_windows", hits}};
}

inline json to_json(const StammerWitness& w) {
  return {{"N", w.start},
          {"l", w.stride},
          {"m", w.m},
          {"U_length", w.prefix.size()},
          {"V_length", w.repeated.size()},
          {"w", rational_json(w.exponent)},
          {"W1_length", w.w1_length},
          {"W2_length", w.w2_length},
          {"W3_length", w.w3_length},
          {"blocks", {{"t", w.block_first}, {"t_prime", w.block_second},
                      {"shift", w.block_shift}, {"length", w.block_length}}},
          {"ratio_bound", w.ratio_bound},
          {"U", word_string(w.prefix)},
          {"V", word_string(w.repeated)}};
}

inline json to_json(const SeriesInterval& s) {
  return {{"lo", rational_json(s.lo)}, {"hi", rational_json(s.hi)}, {"terms", s.terms}};
}

inline json to_json(const ConvergentList& c) {
  json quotients = json::array(), convergents = json::array();
  for (const auto& a : c.partial_quotients) quotients.push_back(a.str());
  for (std::size_t n = 0; n < c.size(); ++n)
    convergents.push_back({{"p", c.p[n].str()}, {"q", c.q[n].str()}});
  return {{"partial_quotients", quotients}, {"convergents", convergents}};
}

inline json to_json(const IrrationalityEstimate& e) {
  return {{"label", IrrationalityEstimate::label},
          {"value", e.value},
          {"first_index", e.first_index},
          {"last_index", e.last_index}};
}

inline json to_json(const KernelAutomaton& a) {
  json states = json::array();
  for (std::size_t i = 0; i < a.states.size(); ++i)
    states.push_back({{"id", i},
                      {"shift", a.states[i].shift},
                      {"offset", a.states[i].offset},
                      {"output", a.output(i)},
                      {"depth", a.depth[i]},
                      {"transitions", a.transitions[i]}});
  json out{{"base", a.base},
           {"modulus", a.modulus},
           {"status", a.complete ? "Complete" : "Inconclusive"},
           {"state_count", a.states.size()},
           {"initial", 0},
           {"states", states}};
  if (!a.complete) out["reason"] = a.inconclusive_reason;
  return out;
}

}  // namespace gtm::io
