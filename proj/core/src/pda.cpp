#include "pda/pda.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

namespace pda {

namespace {

std::vector<Cell> flatten(const Grid& grid) {
  if (grid.empty() || grid.front().empty()) throw Empty("grid must be non-empty");
  const size_t k = grid.front().size();
  std::vector<Cell> cells;
  cells.reserve(grid.size() * k);
  for (size_t j = 0; j < grid.size(); ++j) {
    if (grid[j].size() != k) {
      throw RaggedGrid("row " + std::to_string(j) + " has " + std::to_string(grid[j].size()) +
                       " cells, expected " + std::to_string(k));
    }
    cells.insert(cells.end(), grid[j].begin(), grid[j].end());
  }
  return cells;
}

}  // namespace

Cell Pda::at(int row, int col) const {
  if (row < 0 || row >= f_ || col < 0 || col >= k_)
    throw IndexOutOfRange("cell (" + std::to_string(row) + "," + std::to_string(col) +
                          ") outside " + std::to_string(f_) + "x" + std::to_string(k_));
  return cells_[static_cast<size_t>(row) * k_ + col];
}

Pda make_pda(const Grid& grid) {
  std::vector<Cell> cells = flatten(grid);
  const int f = static_cast<int>(grid.size());
  const int k = static_cast<int>(grid.front().size());
  int z = 0;
  for (int j = 0; j < f; ++j) {
    if (cells[static_cast<size_t>(j) * k].is_star()) ++z;
  }
  std::int64_t max_symbol = -1;
  for (const Cell c : cells) {
    if (!c.is_star() && c.symbol() > max_symbol) max_symbol = c.symbol();
  }
  return Pda(f, k, z, max_symbol + 1, std::move(cells));
}

Pda make_pda(const Grid& grid, int z, std::int64_t s) {
  std::vector<Cell> cells = flatten(grid);
  const int f = static_cast<int>(grid.size());
  const int k = static_cast<int>(grid.front().size());
  return Pda(f, k, z, s, std::move(cells));
}

const char* cond_name(Cond c) {
  switch (c) {
    case Cond::C1: return "C1";
    case Cond::C2: return "C2";
    case Cond::C3a: return "C3a";
    case Cond::C3b: return "C3b";
    case Cond::Labeling: return "Labeling";
  }
  return "?";
}

std::vector<std::vector<std::pair<int, int>>> occurrences_by_symbol(const Pda& p) {
  std::vector<std::vector<std::pair<int, int>>> occ(static_cast<size_t>(p.s() > 0 ? p.s() : 0));
  for (int j = 0; j < p.f(); ++j) {
    for (int k = 0; k < p.k(); ++k) {
      const Cell c = p.cells()[static_cast<size_t>(j) * p.k() + k];
      if (!c.is_star() && c.symbol() < p.s()) occ[static_cast<size_t>(c.symbol())].push_back({j, k});
    }
  }
  return occ;
}

ValidationReport validate(const Pda& p) {
  ValidationReport report;
  const auto add = [&report](Violation v) { report.violations.push_back(std::move(v)); };

  // C1: every column holds exactly Z stars.
  for (int k = 0; k < p.k(); ++k) {
    int stars = 0;
    for (int j = 0; j < p.f(); ++j) {
      if (p.at(j, k).is_star()) ++stars;
    }
    if (stars != p.z()) {
      add({Cond::C1, -1, {}, {k},
           "column " + std::to_string(k) + " has " + std::to_string(stars) +
               " stars, expected Z=" + std::to_string(p.z())});
    }
  }

  // Symbol census against the declared S.
  std::map<std::int64_t, std::vector<std::pair<int, int>>> occ;
  for (int j = 0; j < p.f(); ++j) {
    for (int k = 0; k < p.k(); ++k) {
      const Cell c = p.at(j, k);
      if (!c.is_star()) occ[c.symbol()].push_back({j, k});
    }
  }
  const std::int64_t max_present = occ.empty() ? -1 : occ.rbegin()->first;
  for (std::int64_t s = 0; s < p.s(); ++s) {
    if (occ.count(s)) continue;
    if (max_present > s) {
      add({Cond::Labeling, s, {}, {},
           "integer " + std::to_string(s) + " is skipped while larger labels appear"});
    } else {
      add({Cond::C2, s, {}, {}, "integer " + std::to_string(s) + " never occurs"});
    }
  }
  for (const auto& [s, cells] : occ) {
    if (s >= p.s()) {
      std::vector<int> rows, cols;
      for (const auto& [j, k] : cells) {
        rows.push_back(j);
        cols.push_back(k);
      }
      add({Cond::Labeling, s, std::move(rows), std::move(cols),
           "integer " + std::to_string(s) + " is outside the declared range [0," +
               std::to_string(p.s()) + ")"});
    }
  }

  // C3: pairwise over each symbol's occurrences.
  for (const auto& [s, cells] : occ) {
    for (size_t a = 0; a < cells.size(); ++a) {
      for (size_t b = a + 1; b < cells.size(); ++b) {
        const auto [j1, k1] = cells[a];
        const auto [j2, k2] = cells[b];
        if (j1 == j2 || k1 == k2) {
          add({Cond::C3a, s, {j1, j2}, {k1, k2},
               "integer " + std::to_string(s) + " repeats in the same " +
                   (j1 == j2 ? "row" : "column")});
          continue;
        }
        std::string bad;
        if (!p.at(j1, k2).is_star()) bad = "(" + std::to_string(j1) + "," + std::to_string(k2) + ")";
        if (!p.at(j2, k1).is_star()) {
          if (!bad.empty()) bad += " and ";
          bad += "(" + std::to_string(j2) + "," + std::to_string(k1) + ")";
        }
        if (!bad.empty()) {
          add({Cond::C3b, s, {j1, j2}, {k1, k2},
               "integer " + std::to_string(s) + " at (" + std::to_string(j1) + "," +
                   std::to_string(k1) + ") and (" + std::to_string(j2) + "," +
                   std::to_string(k2) + ") has non-star cross " + bad});
        }
      }
    }
  }

  report.valid = report.violations.empty();
  return report;
}

Regularity regularity(const Pda& p) {
  Regularity reg;
  reg.counts.assign(static_cast<size_t>(p.s() > 0 ? p.s() : 0), 0);
  for (const Cell c : p.cells()) {
    if (!c.is_star() && c.symbol() < p.s()) ++reg.counts[static_cast<size_t>(c.symbol())];
  }
  if (!reg.counts.empty()) {
    const std::int64_t g = reg.counts.front();
    if (g > 0 && std::all_of(reg.counts.begin(), reg.counts.end(),
                             [g](std::int64_t c) { return c == g; })) {
      reg.g = g;
    }
  }
  return reg;
}

Rational rate(const Pda& p) { return Rational(BigInt(p.s())) / BigInt(p.f()); }

PlacementSet placement_set(const Pda& p, int k) {
  if (k < 0 || k >= p.k())
    throw IndexOutOfRange("column " + std::to_string(k) + " outside [0," +
                          std::to_string(p.k()) + ")");
  PlacementSet set;
  set.user = k;
  for (int j = 0; j < p.f(); ++j) {
    if (p.at(j, k).is_star()) set.rows.push_back(j);
  }
  return set;
}

bool gain_bound_holds(std::int64_t k, std::int64_t z, std::int64_t f, std::int64_t g) {
  // g <= K*Z/F + 1 without division
  return g * f <= k * z + f;
}

bool check_gain_bound(const Pda& p) {
  const Regularity reg = regularity(p);
  if (!reg.g) throw NotRegular("array has no common occurrence count");
  const std::int64_t g = *reg.g;
  const bool counting = p.s() * g == static_cast<std::int64_t>(p.k()) * (p.f() - p.z());
  return counting && gain_bound_holds(p.k(), p.z(), p.f(), g);
}

namespace {

// Rebuilds with symbols renumbered by first occurrence in row-major order.
Pda relabel_first_occurrence(const Pda& p, const std::vector<int>& cols) {
  std::map<std::int64_t, std::int64_t> next_label;
  Grid grid(static_cast<size_t>(p.f()));
  for (int j = 0; j < p.f(); ++j) {
    grid[static_cast<size_t>(j)].reserve(cols.size());
    for (const int k : cols) {
      const Cell c = p.at(j, k);
      if (c.is_star()) {
        grid[static_cast<size_t>(j)].push_back(Cell::star());
        continue;
      }
      const auto [it, inserted] =
          next_label.try_emplace(c.symbol(), static_cast<std::int64_t>(next_label.size()));
      grid[static_cast<size_t>(j)].push_back(Cell::symbol(it->second));
      (void)inserted;
    }
  }
  return make_pda(grid);
}

}  // namespace

Pda delete_columns(const Pda& p, int keep) {
  if (keep < 1 || keep > p.k())
    throw IndexOutOfRange("keep=" + std::to_string(keep) + " outside [1," +
                          std::to_string(p.k()) + "]");
  std::vector<int> cols(static_cast<size_t>(keep));
  for (int k = 0; k < keep; ++k) cols[static_cast<size_t>(k)] = k;
  return relabel_first_occurrence(p, cols);
}

Pda select_columns(const Pda& p, const std::vector<int>& cols) {
  if (cols.empty()) throw IndexOutOfRange("column selection is empty");
  std::vector<bool> seen(static_cast<size_t>(p.k()), false);
  for (const int k : cols) {
    if (k < 0 || k >= p.k())
      throw IndexOutOfRange("column " + std::to_string(k) + " outside [0," +
                            std::to_string(p.k()) + ")");
    if (seen[static_cast<size_t>(k)])
      throw IndexOutOfRange("column " + std::to_string(k) + " selected twice");
    seen[static_cast<size_t>(k)] = true;
  }
  return relabel_first_occurrence(p, cols);
}

Pda canonical_relabel(const Pda& p) {
  std::vector<int> cols(static_cast<size_t>(p.k()));
  for (int k = 0; k < p.k(); ++k) cols[static_cast<size_t>(k)] = k;
  return relabel_first_occurrence(p, cols);
}

}  // namespace pda
