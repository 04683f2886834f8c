#include "pda/analysis.hpp"

#include <algorithm>

#include "pda/errors.hpp"

namespace pda {

namespace {

// One fixed-F search instance. Cells are filled row-major; -2 marks an
// unassigned cell and -1 a star. Rows are forced into non-increasing star
// patterns (star = 1, column 0 most significant) and labels open in numeric
// order, which only discards row/column/label permutations of solutions.
class FixedFSearch {
 public:
  FixedFSearch(int k, int g, int spr, int f, std::int64_t labels, std::uint64_t budget,
               std::uint64_t& nodes)
      : k_(k),
        g_(g),
        spr_(spr),
        f_(f),
        labels_(labels),
        budget_(budget),
        nodes_(nodes),
        grid_(static_cast<size_t>(f), std::vector<int>(static_cast<size_t>(k), -2)),
        must_star_(static_cast<size_t>(k), false),
        count_(static_cast<size_t>(labels), 0),
        col_used_(static_cast<size_t>(labels), std::vector<bool>(static_cast<size_t>(k), false)),
        cols_free_(static_cast<size_t>(labels), k),
        last_row_(static_cast<size_t>(labels), -1) {}

  bool run() { return cell(0, 0, 0, true); }

  std::vector<std::vector<Cell>> witness() const {
    std::vector<std::vector<Cell>> out;
    out.reserve(grid_.size());
    for (const std::vector<int>& row : grid_) {
      std::vector<Cell> cells;
      cells.reserve(row.size());
      for (const int v : row) cells.push_back(v < 0 ? Cell::star() : Cell::symbol(v));
      out.push_back(std::move(cells));
    }
    return out;
  }

 private:
  bool row_done(int row) {
    for (std::int64_t label = 0; label < opened_; ++label) {
      const int needed = g_ - count_[static_cast<size_t>(label)];
      if (needed == 0) continue;
      if (needed > f_ - row - 1) return false;  // not enough rows below
      if (needed > cols_free_[static_cast<size_t>(label)]) return false;
    }
    // Labels not yet opened must still fit g rows each, starting next row.
    if (opened_ < labels_ && row + 1 > f_ - g_) return false;
    return cell(row + 1, 0, 0, true);
  }

  bool cell(int row, int col, int stars_used, bool tied) {
    if (row == f_) {
      for (std::int64_t label = 0; label < labels_; ++label) {
        if (count_[static_cast<size_t>(label)] != g_) return false;
      }
      return true;
    }
    if (col == k_) {
      if (stars_used != spr_) return false;
      return row_done(row);
    }
    if (++nodes_ > budget_) throw SearchBudgetExceeded("search node budget exhausted");

    const bool forced_star = must_star_[static_cast<size_t>(col)];
    const bool star_fits = stars_used < spr_ &&
                           (row == 0 || !tied || grid_[static_cast<size_t>(row - 1)]
                                                      [static_cast<size_t>(col)] == -1);
    const int cells_left = k_ - col - 1;

    if (star_fits) {
      const bool still_tied =
          row > 0 && tied && grid_[static_cast<size_t>(row - 1)][static_cast<size_t>(col)] == -1;
      grid_[static_cast<size_t>(row)][static_cast<size_t>(col)] = -1;
      must_star_[static_cast<size_t>(col)] = false;
      if (spr_ - stars_used - 1 <= cells_left &&
          cell(row, col + 1, stars_used + 1, row == 0 ? true : still_tied))
        return true;
      must_star_[static_cast<size_t>(col)] = forced_star;
      grid_[static_cast<size_t>(row)][static_cast<size_t>(col)] = -2;
    }
    if (forced_star) return false;
    if (spr_ - stars_used > cells_left)
      return false;  // remaining cells cannot supply the stars this row owes

    const std::int64_t limit = std::min<std::int64_t>(labels_ - 1, opened_);
    for (std::int64_t label = 0; label <= limit; ++label) {
      if (label == opened_ && row > f_ - g_) break;  // too late to open a label
      if (label < opened_) {
        if (count_[static_cast<size_t>(label)] == g_) continue;
        if (last_row_[static_cast<size_t>(label)] == row) continue;
        if (col_used_[static_cast<size_t>(label)][static_cast<size_t>(col)]) continue;
      }
      if (!place(label, row, col)) continue;

      const int prev_last = last_row_[static_cast<size_t>(label)];
      last_row_[static_cast<size_t>(label)] = row;
      count_[static_cast<size_t>(label)] += 1;
      col_used_[static_cast<size_t>(label)][static_cast<size_t>(col)] = true;
      cols_free_[static_cast<size_t>(label)] -= 1;
      if (label == opened_) ++opened_;
      grid_[static_cast<size_t>(row)][static_cast<size_t>(col)] = static_cast<int>(label);

      const bool still_tied =
          row > 0 && tied && grid_[static_cast<size_t>(row - 1)][static_cast<size_t>(col)] != -1;
      if (cell(row, col + 1, stars_used, row == 0 ? true : still_tied)) return true;

      grid_[static_cast<size_t>(row)][static_cast<size_t>(col)] = -2;
      if (label == opened_ - 1 && count_[static_cast<size_t>(label)] == 1) --opened_;
      count_[static_cast<size_t>(label)] -= 1;
      col_used_[static_cast<size_t>(label)][static_cast<size_t>(col)] = false;
      cols_free_[static_cast<size_t>(label)] += 1;
      last_row_[static_cast<size_t>(label)] = prev_last;
      unplace(label, row, col);
    }
    return false;
  }

  // Cross checks against the label's previous occurrences; queues must-star
  // demands for cells of this row that are still ahead of the cursor.
  bool place(std::int64_t label, int row, int col) {
    std::vector<int> queued;
    bool ok = true;
    for (int r = 0; r < row && ok; ++r) {
      const std::vector<int>& prev = grid_[static_cast<size_t>(r)];
      for (int c = 0; c < k_; ++c) {
        if (prev[static_cast<size_t>(c)] != static_cast<int>(label)) continue;
        if (prev[static_cast<size_t>(col)] != -1) {  // cross above must be a star
          ok = false;
          break;
        }
        const int here = grid_[static_cast<size_t>(row)][static_cast<size_t>(c)];
        if (c < col) {
          if (here != -1) {  // cross to the left must already be a star
            ok = false;
            break;
          }
        } else if (!must_star_[static_cast<size_t>(c)]) {
          must_star_[static_cast<size_t>(c)] = true;
          queued.push_back(c);
        }
      }
    }
    if (!ok) {
      for (const int q : queued) must_star_[static_cast<size_t>(q)] = false;
      return false;
    }
    pending_.push_back({label, row, col, std::move(queued)});
    return true;
  }

  void unplace(std::int64_t label, int row, int col) {
    const Placement& p = pending_.back();
    (void)label;
    (void)row;
    (void)col;
    for (const int q : p.queued) must_star_[static_cast<size_t>(q)] = false;
    pending_.pop_back();
  }

  struct Placement {
    std::int64_t label;
    int row;
    int col;
    std::vector<int> queued;
  };

  const int k_;
  const int g_;
  const int spr_;
  const int f_;
  const std::int64_t labels_;
  const std::uint64_t budget_;
  std::uint64_t& nodes_;

  std::vector<std::vector<int>> grid_;
  std::vector<bool> must_star_;  // current row, columns ahead of the cursor
  std::vector<int> count_;
  std::vector<std::vector<bool>> col_used_;
  std::vector<int> cols_free_;
  std::vector<int> last_row_;
  std::int64_t opened_ = 0;
  std::vector<Placement> pending_;
};

}  // namespace

std::optional<SearchResult> brute_force_min_f(int k, int g, int stars_per_row, int f_max,
                                              std::uint64_t budget) {
  if (k < 1) throw ParameterOutOfRange("K must be >= 1");
  if (g < 1) throw ParameterOutOfRange("occurrence count must be >= 1");
  if (stars_per_row < 0 || stars_per_row > k)
    throw ParameterOutOfRange("stars per row must lie in [0, K]");
  if (f_max < 1) throw ParameterOutOfRange("F limit must be >= 1");

  std::uint64_t nodes = 0;
  const int ints_per_row = k - stars_per_row;
  for (int f = 1; f <= f_max; ++f) {
    const std::int64_t total = static_cast<std::int64_t>(f) * ints_per_row;
    if (total % g != 0) continue;
    const std::int64_t labels = total / g;
    if (labels > 0 && (g > f || g > k)) continue;  // g occurrences need g rows and columns

    FixedFSearch search(k, g, stars_per_row, f, labels, budget, nodes);
    if (search.run()) return SearchResult{f, search.witness(), nodes};
  }
  return std::nullopt;
}

}  // namespace pda
