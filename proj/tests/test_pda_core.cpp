#include "pda/pda.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "golden.hpp"
#include "pda/errors.hpp"

using pda::Cell;
using pda::Cond;
using pda::Grid;
using pda::Pda;
using pda::Rational;

namespace {

Grid to_grid(const Pda& p) {
  Grid grid(static_cast<size_t>(p.f()));
  for (int j = 0; j < p.f(); ++j) {
    for (int k = 0; k < p.k(); ++k) grid[static_cast<size_t>(j)].push_back(p.at(j, k));
  }
  return grid;
}

// Rebuilds with one cell replaced, keeping the original declared Z and S.
Pda mutate(const Pda& p, int row, int col, Cell value) {
  Grid grid = to_grid(p);
  grid[static_cast<size_t>(row)][static_cast<size_t>(col)] = value;
  return make_pda(grid, p.z(), p.s());
}

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Re-derives the cross-star condition for one symbol from the star sets of
// the involved columns: the all-columns intersection avoids the occurrence
// rows, and each leave-one-out intersection pins down exactly the left-out
// row. Empty leave-one-out base means every row.
bool star_sets_consistent(const Pda& p, const std::vector<std::pair<int, int>>& occ) {
  std::vector<int> rows_sorted;
  for (const auto& [j, k] : occ) rows_sorted.push_back(j);
  std::sort(rows_sorted.begin(), rows_sorted.end());

  std::vector<int> universe;
  for (int j = 0; j < p.f(); ++j) universe.push_back(j);

  std::vector<int> all = universe;
  for (const auto& [j, k] : occ) all = intersect_sorted(all, pda::placement_set(p, k).rows);
  if (!intersect_sorted(all, rows_sorted).empty()) return false;

  for (size_t l = 0; l < occ.size(); ++l) {
    std::vector<int> others = universe;
    for (size_t h = 0; h < occ.size(); ++h) {
      if (h == l) continue;
      others = intersect_sorted(others, pda::placement_set(p, occ[h].second).rows);
    }
    if (intersect_sorted(others, rows_sorted) != std::vector<int>{occ[l].first}) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("make_pda derives parameters from the grid") {
  const Pda ex1 = golden::from_text(golden::kEx1);
  CHECK(ex1.k() == 2);
  CHECK(ex1.f() == 2);
  CHECK(ex1.z() == 1);
  CHECK(ex1.s() == 1);

  const Pda star = make_pda(Grid{{Cell::star()}});
  CHECK(star.k() == 1);
  CHECK(star.f() == 1);
  CHECK(star.z() == 1);
  CHECK(star.s() == 0);

  const Pda row = make_pda(Grid{{Cell::symbol(0), Cell::symbol(1), Cell::symbol(2)}});
  CHECK(row.z() == 0);
  CHECK(row.s() == 3);

  const Pda a22 = golden::from_text(golden::kA22);
  CHECK(a22.k() == 6);
  CHECK(a22.f() == 4);
  CHECK(a22.z() == 2);
  CHECK(a22.s() == 4);
  CHECK(a22.at(0, 1) == Cell::symbol(1));
  CHECK(a22.at(0, 0).is_star());
}

TEST_CASE("make_pda rejects degenerate grids") {
  CHECK_THROWS_AS(make_pda(Grid{}), pda::Empty);
  CHECK_THROWS_AS(make_pda(Grid{{}}), pda::Empty);
  CHECK_THROWS_AS(make_pda(Grid{{Cell::star(), Cell::star()}, {Cell::star()}}),
                  pda::RaggedGrid);
  CHECK_THROWS_AS(Cell::symbol(-1), pda::ParameterOutOfRange);

  const Pda ex1 = golden::from_text(golden::kEx1);
  CHECK_THROWS_AS(ex1.at(2, 0), pda::IndexOutOfRange);
  CHECK_THROWS_AS(ex1.at(0, -1), pda::IndexOutOfRange);
}

TEST_CASE("golden arrays validate clean") {
  for (const char* text : {golden::kA22, golden::kB22, golden::kD63, golden::kA32,
                           golden::kB32, golden::kEx1}) {
    const Pda p = golden::from_text(text);
    const pda::ValidationReport report = pda::validate(p);
    CHECK(report.valid);
    CHECK(report.violations.empty());
  }
}

TEST_CASE("validate flags declared parameter mismatches") {
  const Pda a22 = golden::from_text(golden::kA22);

  const Pda wrong_z = make_pda(to_grid(a22), 1, 4);
  const auto rz = pda::validate(wrong_z);
  CHECK_FALSE(rz.valid);
  REQUIRE(rz.violations.size() == 6);
  for (const auto& v : rz.violations) {
    CHECK(v.cond == Cond::C1);
    CHECK(v.message.find("expected Z=1") != std::string::npos);
  }

  const Pda wrong_s = make_pda(to_grid(a22), 2, 5);
  const auto rs = pda::validate(wrong_s);
  CHECK_FALSE(rs.valid);
  REQUIRE(rs.violations.size() == 1);
  CHECK(rs.violations[0].cond == Cond::C2);
  CHECK(rs.violations[0].symbol == 4);
  CHECK(rs.violations[0].message == "integer 4 never occurs");
}

TEST_CASE("validate pinpoints a planted conflict") {
  // Turning (0,1) into a 0 makes symbol 0 collide with (0,5) in row 0 and
  // with (2,2) through the integer cross at (2,1).
  const Pda a22 = golden::from_text(golden::kA22);
  const Pda bad = mutate(a22, 0, 1, Cell::symbol(0));
  const auto report = pda::validate(bad);
  CHECK_FALSE(report.valid);
  REQUIRE(report.violations.size() == 2);

  CHECK(report.violations[0].cond == Cond::C3a);
  CHECK(report.violations[0].symbol == 0);
  CHECK(report.violations[0].rows == std::vector<int>{0, 0});
  CHECK(report.violations[0].cols == std::vector<int>{1, 5});
  CHECK(report.violations[0].message.find("same row") != std::string::npos);

  CHECK(report.violations[1].cond == Cond::C3b);
  CHECK(report.violations[1].symbol == 0);
  CHECK(report.violations[1].rows == std::vector<int>{0, 2});
  CHECK(report.violations[1].cols == std::vector<int>{1, 2});
  CHECK(report.violations[1].message.find("non-star cross (2,1)") != std::string::npos);
}

TEST_CASE("validate covers the remaining violation kinds") {
  // Same integer twice in one column.
  const Pda col = make_pda(Grid{{Cell::symbol(0)}, {Cell::symbol(0)}});
  const auto rc = pda::validate(col);
  REQUIRE(rc.violations.size() == 1);
  CHECK(rc.violations[0].cond == Cond::C3a);
  CHECK(rc.violations[0].message.find("same column") != std::string::npos);

  // Label gap: 0 and 2 present, 1 skipped.
  const Pda gap = make_pda(
      Grid{{Cell::symbol(0), Cell::symbol(2)}, {Cell::symbol(2), Cell::symbol(0)}}, 0, 3);
  const auto rg = pda::validate(gap);
  bool saw_gap = false;
  for (const auto& v : rg.violations) {
    if (v.cond == Cond::Labeling && v.symbol == 1) saw_gap = true;
  }
  CHECK(saw_gap);

  // Declared range too small: 1 sits outside [0,1).
  const Pda out = make_pda(Grid{{Cell::symbol(0), Cell::symbol(1)}}, 0, 1);
  const auto ro = pda::validate(out);
  bool saw_out = false;
  for (const auto& v : ro.violations) {
    if (v.cond == Cond::Labeling && v.symbol == 1) {
      saw_out = true;
      CHECK(v.rows == std::vector<int>{0});
      CHECK(v.cols == std::vector<int>{1});
    }
  }
  CHECK(saw_out);

  // Declared S=1 over an all-star grid: 0 never occurs.
  const Pda stars = make_pda(Grid{{Cell::star()}, {Cell::star()}}, 2, 1);
  const auto rstar = pda::validate(stars);
  REQUIRE(rstar.violations.size() == 1);
  CHECK(rstar.violations[0].cond == Cond::C2);
}

TEST_CASE("regularity") {
  const auto ra = pda::regularity(golden::from_text(golden::kA22));
  REQUIRE(ra.g.has_value());
  CHECK(*ra.g == 3);
  CHECK(ra.counts == std::vector<std::int64_t>{3, 3, 3, 3});

  const auto rd = pda::regularity(golden::from_text(golden::kD63));
  REQUIRE(rd.g.has_value());
  CHECK(*rd.g == 4);

  const auto rb = pda::regularity(golden::from_text(golden::kB32));
  REQUIRE(rb.g.has_value());
  CHECK(*rb.g == 6);

  const Pda mixed = make_pda(Grid{{Cell::symbol(0), Cell::symbol(1)},
                                  {Cell::symbol(1), Cell::star()}});
  const auto rm = pda::regularity(mixed);
  CHECK_FALSE(rm.g.has_value());
  CHECK(rm.counts == std::vector<std::int64_t>{1, 2});

  const auto rstar = pda::regularity(make_pda(Grid{{Cell::star()}}));
  CHECK_FALSE(rstar.g.has_value());
  CHECK(rstar.counts.empty());
}

TEST_CASE("rate") {
  CHECK(pda::rate(golden::from_text(golden::kA22)) == Rational(1));
  CHECK(pda::rate(golden::from_text(golden::kD63)) == Rational(3) / 4);
  CHECK(pda::rate(golden::from_text(golden::kEx1)) == Rational(1) / 2);
  CHECK(pda::rate(make_pda(Grid{{Cell::star(), Cell::star()}})) == Rational(0));
}

TEST_CASE("placement_set lists star rows per user") {
  const Pda a22 = golden::from_text(golden::kA22);
  for (int k = 0; k < a22.k(); ++k) {
    const auto set = pda::placement_set(a22, k);
    CHECK(set.user == k);
    CHECK(set.rows == golden::kA22Placement[static_cast<size_t>(k)]);
  }
  CHECK_THROWS_AS(pda::placement_set(a22, 6), pda::IndexOutOfRange);
  CHECK_THROWS_AS(pda::placement_set(a22, -1), pda::IndexOutOfRange);

  const Pda stars = make_pda(Grid{{Cell::star(), Cell::star(), Cell::star()}});
  for (int k = 0; k < 3; ++k) CHECK(pda::placement_set(stars, k).rows == std::vector<int>{0});
}

TEST_CASE("gain bound") {
  // 6*10/20 + 1 = 4: met with equality by the 4-regular array.
  CHECK(pda::gain_bound_holds(6, 10, 20, 4));
  CHECK_FALSE(pda::gain_bound_holds(6, 10, 20, 5));
  CHECK(pda::check_gain_bound(golden::from_text(golden::kD63)));
  CHECK(pda::check_gain_bound(golden::from_text(golden::kA22)));
  CHECK(pda::check_gain_bound(golden::from_text(golden::kB32)));

  const Pda mixed = make_pda(Grid{{Cell::symbol(0), Cell::symbol(1)},
                                  {Cell::symbol(1), Cell::star()}});
  CHECK_THROWS_AS(pda::check_gain_bound(mixed), pda::NotRegular);
}

TEST_CASE("delete_columns compacts and revalidates") {
  const Pda a22 = golden::from_text(golden::kA22);

  // Keeping everything still renumbers by first occurrence.
  CHECK(pda::delete_columns(a22, 6) == pda::canonical_relabel(a22));

  const Pda five = pda::delete_columns(a22, 5);
  CHECK(five.k() == 5);
  CHECK(five.f() == 4);
  CHECK(five.z() == 2);
  CHECK(five.s() == 4);
  CHECK(pda::validate(five).valid);
  CHECK(pda::rate(five) == Rational(1));

  const Pda d63 = golden::from_text(golden::kD63);
  const Pda four = pda::delete_columns(d63, 4);
  CHECK(four.k() == 4);
  CHECK(pda::validate(four).valid);
  CHECK(pda::rate(four) <= Rational(3) / 4);

  CHECK_THROWS_AS(pda::delete_columns(a22, 0), pda::IndexOutOfRange);
  CHECK_THROWS_AS(pda::delete_columns(a22, 7), pda::IndexOutOfRange);
}

TEST_CASE("select_columns keeps the given order") {
  const Pda a22 = golden::from_text(golden::kA22);
  const Pda two = pda::select_columns(a22, {5, 0});
  CHECK(two.k() == 2);
  CHECK(two.f() == 4);
  // Column 5 first: its rows were (0,*,*,3) -> first occurrence renumbering.
  CHECK(two.at(0, 0) == Cell::symbol(0));
  CHECK(two.at(1, 0).is_star());
  CHECK(pda::validate(two).valid);

  CHECK_THROWS_AS(pda::select_columns(a22, {}), pda::IndexOutOfRange);
  CHECK_THROWS_AS(pda::select_columns(a22, {0, 0}), pda::IndexOutOfRange);
  CHECK_THROWS_AS(pda::select_columns(a22, {6}), pda::IndexOutOfRange);
}

TEST_CASE("canonical_relabel renumbers by first occurrence") {
  const Pda trivial = make_pda(Grid{{Cell::star(), Cell::symbol(7)},
                                    {Cell::symbol(7), Cell::star()}});
  const Pda canon = pda::canonical_relabel(trivial);
  CHECK(canon.at(0, 1) == Cell::symbol(0));
  CHECK(canon.at(1, 0) == Cell::symbol(0));
  CHECK(canon.s() == 1);

  // First-seen order in the 6x4 array is 1, 2, 0, 3, so relabeling moves it.
  const Pda a22 = golden::from_text(golden::kA22);
  const Pda ca = pda::canonical_relabel(a22);
  CHECK(ca != a22);
  CHECK(ca.at(0, 1) == Cell::symbol(0));
  CHECK(ca.at(0, 3) == Cell::symbol(1));
  CHECK(ca.at(0, 5) == Cell::symbol(2));
  CHECK(ca.at(1, 0) == Cell::symbol(2));
  CHECK(ca.at(1, 3) == Cell::symbol(3));
  CHECK(pda::validate(ca).valid);

  // Idempotent.
  CHECK(pda::canonical_relabel(ca) == ca);

  // Symbol permutations wash out.
  const int perm[4] = {3, 2, 0, 1};
  Grid permuted = to_grid(a22);
  for (auto& row : permuted) {
    for (auto& c : row) {
      if (!c.is_star()) c = Cell::symbol(perm[c.symbol()]);
    }
  }
  CHECK(pda::canonical_relabel(make_pda(permuted)) == ca);
}

TEST_CASE("occurrences_by_symbol is row-major per symbol") {
  const Pda a22 = golden::from_text(golden::kA22);
  const auto occ = pda::occurrences_by_symbol(a22);
  REQUIRE(occ.size() == 4);
  CHECK(occ[0] == std::vector<std::pair<int, int>>{{0, 5}, {1, 0}, {2, 2}});
  CHECK(occ[1] == std::vector<std::pair<int, int>>{{0, 1}, {1, 4}, {3, 2}});
  for (const auto& list : occ) CHECK(list.size() == 3);
}

TEST_CASE("cross-star condition matches the star-set reformulation") {
  for (const char* text : {golden::kA22, golden::kD63, golden::kB22}) {
    const Pda p = golden::from_text(text);
    for (const auto& occ : pda::occurrences_by_symbol(p)) {
      CHECK(star_sets_consistent(p, occ));
    }
  }

  // Single-occurrence symbols: the leave-one-out base is every row.
  const Pda row = make_pda(Grid{{Cell::symbol(0), Cell::symbol(1)}});
  for (const auto& occ : pda::occurrences_by_symbol(row)) {
    CHECK(star_sets_consistent(row, occ));
  }

  // A planted cross conflict must show up through the star sets too.
  const Pda a22 = golden::from_text(golden::kA22);
  const Pda bad = mutate(a22, 3, 3, Cell::symbol(0));
  const auto occ0 = pda::occurrences_by_symbol(bad)[0];
  REQUIRE(occ0.size() == 4);
  CHECK_FALSE(star_sets_consistent(bad, occ0));
}

TEST_CASE("every single-cell mutation of a tight array is caught") {
  const char* kD42 =
      "4 6 3 4\n"
      "* * 0 1\n"
      "* 0 * 2\n"
      "* 1 2 *\n"
      "0 * * 3\n"
      "1 * 3 *\n"
      "2 3 * *\n";
  for (const char* text : {golden::kA22, kD42}) {
    const Pda p = golden::from_text(text);
    for (int j = 0; j < p.f(); ++j) {
      for (int k = 0; k < p.k(); ++k) {
        const Cell orig = p.at(j, k);
        for (std::int64_t s = 0; s < p.s(); ++s) {
          if (!orig.is_star() && orig.symbol() == s) continue;
          CHECK_FALSE(pda::validate(mutate(p, j, k, Cell::symbol(s))).valid);
        }
        if (!orig.is_star()) {
          CHECK_FALSE(pda::validate(mutate(p, j, k, Cell::star())).valid);
        }
      }
    }
  }
}
