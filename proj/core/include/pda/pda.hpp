#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pda/cell.hpp"
#include "pda/errors.hpp"
#include "pda/numeric.hpp"

namespace pda {

using Grid = std::vector<std::vector<Cell>>;

// An F x K array of stars and integer symbols together with the declared
// parameters (K, F, Z, S). Construction performs no condition checking beyond
// rectangularity; validate() is the separate judgement. Immutable once built,
// so instances can be shared across threads freely.
class Pda {
 public:
  int k() const { return k_; }
  int f() const { return f_; }
  int z() const { return z_; }
  std::int64_t s() const { return s_; }

  // Throws IndexOutOfRange.
  Cell at(int row, int col) const;

  // Row-major cells, size F*K.
  const std::vector<Cell>& cells() const { return cells_; }

  friend bool operator==(const Pda& a, const Pda& b) = default;

 private:
  Pda(int f, int k, int z, std::int64_t s, std::vector<Cell> cells)
      : f_(f), k_(k), z_(z), s_(s), cells_(std::move(cells)) {}

  friend Pda make_pda(const Grid& grid);
  friend Pda make_pda(const Grid& grid, int z, std::int64_t s);

  int f_;
  int k_;
  int z_;
  std::int64_t s_;
  std::vector<Cell> cells_;
};

// Z is taken from the star count of column 0 and S as 1 + the maximum symbol
// (0 when the grid is all stars). Throws Empty or RaggedGrid.
Pda make_pda(const Grid& grid);

// Same, but with caller-declared Z and S (as read from a file header); the
// validator later checks the declared values against the cells.
Pda make_pda(const Grid& grid, int z, std::int64_t s);

enum class Cond { C1, C2, C3a, C3b, Labeling };

const char* cond_name(Cond c);

struct Violation {
  Cond cond;
  std::int64_t symbol;    // offending integer, -1 when not tied to one
  std::vector<int> rows;  // involved row indices
  std::vector<int> cols;  // involved column indices
  std::string message;
};

struct ValidationReport {
  bool valid = true;
  std::vector<Violation> violations;
};

// Checks, in order: every column holds exactly Z stars (C1); the integers
// present are exactly {0..S-1} (C2 for absent symbols, Labeling for gaps or
// out-of-range labels); occurrences of each integer lie in distinct rows and
// columns (C3a) with star cross entries (C3b). All violations are reported,
// not just the first.
ValidationReport validate(const Pda& p);

struct Regularity {
  // Present iff S >= 1 and every integer occurs the same number of times.
  std::optional<std::int64_t> g;
  // Occurrence count of each integer 0..S-1.
  std::vector<std::int64_t> counts;
};

Regularity regularity(const Pda& p);

// S/F as an exact reduced rational.
Rational rate(const Pda& p);

struct PlacementSet {
  int user;               // column index
  std::vector<int> rows;  // star rows, ascending
};

// Rows of column k holding stars. Throws IndexOutOfRange.
PlacementSet placement_set(const Pda& p, int k);

// The gain ceiling g <= K*Z/F + 1 rearranged to integer arithmetic.
bool gain_bound_holds(std::int64_t k, std::int64_t z, std::int64_t f, std::int64_t g);

// True iff the gain bound holds and S*g = K*(F-Z). Throws NotRegular when the
// array has no common occurrence count.
bool check_gain_bound(const Pda& p);

// Keeps the first `keep` columns (1 <= keep <= K), compacts the surviving
// symbols to {0..S'-1} by first occurrence and recomputes Z and S.
Pda delete_columns(const Pda& p, int keep);

// Keeps exactly the listed columns, in the order given (distinct, in range).
Pda select_columns(const Pda& p, const std::vector<int>& cols);

// Renumbers symbols by first occurrence in a row-major scan; stars and shape
// are untouched. Idempotent; arrays equal up to a symbol permutation
// canonicalize identically.
Pda canonical_relabel(const Pda& p);

// Occurrence coordinates (row, col) of each symbol 0..S-1, row-major order.
// Symbols out of [0,S) are ignored (validate reports them).
std::vector<std::vector<std::pair<int, int>>> occurrences_by_symbol(const Pda& p);

}  // namespace pda
