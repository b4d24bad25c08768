#pragma once

// Spec-file format (JSON):
//
//   {
//     "name": "thue-morse",            optional
//     "comment": "...",                optional
//     "L": 2,                          alphabet size, >= 2
//     "k": 2,                          base, >= 2
//     "preperiod": 0,                  y0
//     "period": 1,                     p >= 1   (eventually periodic kappa)
//     "kappa": [[1]]                   kappa[s-1][y], k-1 rows of y0+p entries
//   }
//
// A finite-window spec replaces "preperiod"/"period" by "window": Y_max and
// gives rows of Y_max entries. Unknown keys are rejected.

#include "gtm/errors.hpp"
#include "gtm/kappa.hpp"

#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <string>

namespace gtm::io {

/// Syntax errors carry line/column; structural errors carry a JSON pointer.
class spec_parse_error : public error {
 public:
  spec_parse_error(const std::string& source, std::size_t line, std::size_t column,
                   const std::string& what)
      : error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  spec_parse_error(const std::string& source, const std::string& pointer, const std::string& what)
      : error(source + ": " + (pointer.empty() ? "/" : pointer) + ": " + what), pointer_(pointer) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::size_t line_ = 0;
  std::size_t column_ = 0;
  std::string pointer_;
};

struct SpecFile {
  std::string name;
  std::string comment;
  KappaSpec spec;
};

namespace detail {

inline std::pair<std::size_t, std::size_t> line_column(const std::string& text,
                                                       std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

inline std::uint64_t read_unsigned(const nlohmann::json& doc, const std::string& key,
                                   const std::string& source, std::uint64_t minimum,
                                   std::uint64_t maximum) {
  const std::string pointer = "/" + key;
  if (!doc.contains(key)) throw spec_parse_error(source, pointer, "missing required field");
  const auto& value = doc.at(key);
  if (!value.is_number_integer())
    throw spec_parse_error(source, pointer, "expected an integer");
  if (value.is_number_unsigned() || value.get<std::int64_t>() >= 0) {
    const auto v = value.get<std::uint64_t>();
    if (v >= minimum && v <= maximum) return v;
  }
  throw spec_parse_error(source, pointer,
                         "value out of range [" + std::to_string(minimum) + ", " +
                             std::to_string(maximum) + "]");
}

}  // namespace detail

inline SpecFile parse_spec_file(const std::string& text, const std::string& source = "<spec>") {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    const auto [line, column] = detail::line_column(text, byte);
    std::string message = e.what();
    if (auto pos = message.find("syntax error"); pos != std::string::npos)
      message = message.substr(pos);
    throw spec_parse_error(source, line, column, message);
  }
  if (!doc.is_object()) throw spec_parse_error(source, "", "top level must be an object");

  static const std::set<std::string> known{"name", "comment", "L",      "k",
                                           "preperiod", "period", "window", "kappa"};
  for (const auto& [key, value] : doc.items())
    if (!known.contains(key)) throw spec_parse_error(source, "/" + key, "unknown field");

  SpecFile file{"", "", thue_morse()};
  for (const char* key : {"name", "comment"}) {
    if (!doc.contains(key)) continue;
    if (!doc.at(key).is_string())
      throw spec_parse_error(source, std::string("/") + key, "expected a string");
    (std::string(key) == "name" ? file.name : file.comment) = doc.at(key).get<std::string>();
  }

  constexpr std::uint64_t max_small = std::numeric_limits<std::uint32_t>::max();
  const auto modulus = static_cast<std::uint32_t>(detail::read_unsigned(doc, "L", source, 2, max_small));
  const auto base = static_cast<std::uint32_t>(detail::read_unsigned(doc, "k", source, 2, max_small));

  const bool windowed = doc.contains("window");
  if (windowed && (doc.contains("period") || doc.contains("preperiod")))
    throw spec_parse_error(source, "/window", "\"window\" excludes \"preperiod\" and \"period\"");
  std::size_t preperiod = 0, period = 0, width = 0;
  if (windowed) {
    width = detail::read_unsigned(doc, "window", source, 0, 1u << 20);
  } else {
    preperiod = detail::read_unsigned(doc, "preperiod", source, 0, 1u << 20);
    period = detail::read_unsigned(doc, "period", source, 1, 1u << 20);
    width = preperiod + period;
  }

  if (!doc.contains("kappa")) throw spec_parse_error(source, "/kappa", "missing required field");
  const auto& rows = doc.at("kappa");
  if (!rows.is_array() || rows.size() != base - 1)
    throw spec_parse_error(source, "/kappa",
                           "expected an array of k-1 = " + std::to_string(base - 1) + " rows");
  KappaSpec::Table table;
  for (std::size_t s = 0; s < rows.size(); ++s) {
    const std::string row_ptr = "/kappa/" + std::to_string(s);
    const auto& row = rows[s];
    if (!row.is_array() || row.size() != width)
      throw spec_parse_error(source, row_ptr,
                             "expected " + std::to_string(width) + " entries (" +
                                 (windowed ? "window" : "preperiod + period") + ")");
    std::vector<Residue> values;
    for (std::size_t y = 0; y < row.size(); ++y) {
      const auto& v = row[y];
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0 ||
          v.get<std::int64_t>() >= static_cast<std::int64_t>(modulus))
        throw spec_parse_error(source, row_ptr + "/" + std::to_string(y),
                               "expected an integer in [0, L-1]");
      values.push_back(v.get<Residue>());
    }
    table.push_back(std::move(values));
  }
  file.spec = windowed ? KappaSpec::finite_window(modulus, base, std::move(table))
                       : KappaSpec::eventually_periodic(modulus, base, std::move(table),
                                                        preperiod, period);
  return file;
}

inline SpecFile load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw spec_parse_error(path, 0, 0, "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_spec_file(buffer.str(), path);
}

inline nlohmann::json spec_to_json(const KappaSpec& spec, const std::string& name = "") {
  nlohmann::json out;
  if (!name.empty()) out["name"] = name;
  out["L"] = spec.modulus();
  out["k"] = spec.base();
  if (spec.is_finite_window()) {
    out["window"] = *spec.window();
  } else {
    out["preperiod"] = spec.preperiod();
    out["period"] = *spec.period();
  }
  out["kappa"] = spec.table();
  return out;
}

}  // namespace gtm::io
