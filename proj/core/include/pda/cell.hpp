#pragma once

#include <cstdint>

#include "pda/errors.hpp"

namespace pda {

// One array entry: either the reserved star or an integer symbol >= 0.
class Cell {
 public:
  constexpr Cell() : value_(kStarValue) {}

  static constexpr Cell star() { return Cell(); }

  static constexpr Cell symbol(std::int64_t s) {
    if (s < 0) throw ParameterOutOfRange("cell symbol must be non-negative");
    return Cell(s);
  }

  constexpr bool is_star() const { return value_ == kStarValue; }

  // Valid only when !is_star().
  constexpr std::int64_t symbol() const { return value_; }

  friend constexpr bool operator==(Cell a, Cell b) { return a.value_ == b.value_; }
  friend constexpr bool operator!=(Cell a, Cell b) { return a.value_ != b.value_; }

 private:
  static constexpr std::int64_t kStarValue = -1;

  constexpr explicit Cell(std::int64_t v) : value_(v) {}

  std::int64_t value_;
};

}  // namespace pda
