#pragma once

#include "gtm/errors.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gtm {

/// A residue in Z_L, i.e. an alphabet letter index in [0, L-1].
using Residue = std::uint32_t;

/// Finite description of kappa : {1..k-1} x N -> Z_L.
///
/// The table stores columns y = 0 .. width-1 for every digit s (row s-1).
/// An eventually periodic spec reads column y0 + ((y - y0) mod p) for y >= y0;
/// a finite-window spec refuses y >= width.
class KappaSpec {
 public:
  using Table = std::vector<std::vector<Residue>>;

  static KappaSpec eventually_periodic(std::uint32_t modulus, std::uint32_t base, Table table,
                                       std::size_t preperiod, std::size_t period) {
    if (period < 1) throw invalid_argument("period must be >= 1");
    KappaSpec spec(modulus, base, std::move(table));
    if (spec.width() != preperiod + period)
      throw invalid_argument("table has " + std::to_string(spec.width()) +
                             " columns, expected preperiod + period = " +
                             std::to_string(preperiod + period));
    spec.preperiod_ = preperiod;
    spec.period_ = period;
    return spec;
  }

  static KappaSpec finite_window(std::uint32_t modulus, std::uint32_t base, Table table) {
    KappaSpec spec(modulus, base, std::move(table));
    spec.preperiod_ = spec.width();
    return spec;
  }

  /// kappa(s, y) = values[s-1] for every y.
  static KappaSpec constant(std::uint32_t modulus, std::uint32_t base,
                            const std::vector<Residue>& values) {
    if (values.size() + 1 != base)
      throw invalid_argument("constant kappa needs k-1 = " + std::to_string(base - 1) + " values");
    Table table;
    for (Residue v : values) table.push_back({v});
    return eventually_periodic(modulus, base, std::move(table), 0, 1);
  }

  static KappaSpec zero(std::uint32_t modulus, std::uint32_t base) {
    return constant(modulus, base, std::vector<Residue>(base >= 1 ? base - 1 : 0, 0));
  }

  std::uint32_t modulus() const noexcept { return modulus_; }
  std::uint32_t base() const noexcept { return base_; }
  const Table& table() const noexcept { return table_; }
  std::size_t width() const noexcept { return table_.empty() ? 0 : table_.front().size(); }

  bool is_finite_window() const noexcept { return !period_.has_value(); }
  std::size_t preperiod() const noexcept { return preperiod_; }
  std::optional<std::size_t> period() const noexcept { return period_; }
  /// Y_max for finite-window specs.
  std::optional<std::size_t> window() const noexcept {
    return period_ ? std::nullopt : std::optional<std::size_t>(width());
  }

  /// Table column that holds kappa(., y).
  std::size_t column(std::uint64_t y) const {
    if (!period_) {
      if (y >= width()) throw window_exceeded(y, width());
      return static_cast<std::size_t>(y);
    }
    if (y < preperiod_) return static_cast<std::size_t>(y);
    return preperiod_ + static_cast<std::size_t>((y - preperiod_) % *period_);
  }

  Residue operator()(std::uint32_t s, std::uint64_t y) const {
    if (s < 1 || s >= base_)
      throw invalid_argument("kappa queried at s = " + std::to_string(s));
    return table_[s - 1][column(y)];
  }

  /// kappa(s, y) with the convention kappa(0, y) = 0.
  Residue digit_value(std::uint32_t digit, std::uint64_t y) const {
    return digit == 0 ? 0 : (*this)(digit, y);
  }

  /// The same function with the periodic block written out `times` extra times.
  KappaSpec unrolled(std::size_t times) const {
    if (!period_) throw undecidable_spec("cannot unroll a finite-window spec");
    Table table = table_;
    for (auto& row : table)
      for (std::size_t r = 0; r < times; ++r)
        for (std::size_t y = 0; y < *period_; ++y) row.push_back(row[preperiod_ + y]);
    return eventually_periodic(modulus_, base_, std::move(table), preperiod_,
                               *period_ * (times + 1));
  }

  friend bool operator==(const KappaSpec&, const KappaSpec&) = default;

 private:
  KappaSpec(std::uint32_t modulus, std::uint32_t base, Table table)
      : modulus_(modulus), base_(base), table_(std::move(table)) {
    if (modulus_ < 2) throw invalid_argument("L must be >= 2");
    if (base_ < 2) throw invalid_argument("k must be >= 2");
    if (table_.size() != base_ - 1)
      throw invalid_argument("kappa table needs k-1 = " + std::to_string(base_ - 1) + " rows");
    for (const auto& row : table_) {
      if (row.size() != table_.front().size())
        throw invalid_argument("kappa table rows have different lengths");
      for (Residue v : row)
        if (v >= modulus_)
          throw invalid_argument("kappa entry " + std::to_string(v) + " outside [0, L-1]");
    }
  }

  std::uint32_t modulus_;
  std::uint32_t base_;
  Table table_;
  std::size_t preperiod_ = 0;
  std::optional<std::size_t> period_;
};

/// The classical Thue-Morse spec: L = 2, k = 2, kappa = 1.
inline KappaSpec thue_morse() { return KappaSpec::constant(2, 2, {1}); }

}  // namespace gtm
