#pragma once

#include <stdexcept>
#include <string>

namespace gtm {

// Base of every error the library throws. The CLI maps each subclass to a
// distinct exit code (see tools/commands.hpp).
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameter outside its documented range (k < 2, s outside [1, k-1], ...).
class invalid_argument : public error {
 public:
  using error::error;
};

// A finite-window kappa was queried at y >= Y_max.
class window_exceeded : public error {
 public:
  window_exceeded(std::size_t y, std::size_t window)
      : error("kappa queried at y = " + std::to_string(y) +
              " outside finite window [0, " + std::to_string(window) + ")"),
        y_(y),
        window_(window) {}

  std::size_t y() const noexcept { return y_; }
  std::size_t window() const noexcept { return window_; }

 private:
  std::size_t y_;
  std::size_t window_;
};

// A requested materialization would exceed the configured term budget.
class budget_exceeded : public error {
 public:
  using error::error;
};

// An operation that needs a non-periodic sequence was handed a periodic one.
class periodic_spec : public error {
 public:
  using error::error;
};

// An operation that needs unbounded y was handed a finite-window spec.
class undecidable_spec : public error {
 public:
  using error::error;
};

// Stammering construction index m is not above the minimal legal M.
class m_too_small : public error {
 public:
  using error::error;
};

// A finite word is too short for the requested scan or verification.
class insufficient_length : public error {
 public:
  using error::error;
};

}  // namespace gtm
