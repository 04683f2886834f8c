#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "pda/cell.hpp"
#include "pda/numeric.hpp"

namespace pda {

// Closed-form rates, bounds and asymptotics for the two scheme families, the
// K x M/N comparison table, and a tiny-scale exhaustive minimum-F search.

// K(1 - M/N) / (1 + K*M/N). Throws NonCornerPoint unless K*M/N is an integer
// in [0, K].
Rational rate_an(int k, const Rational& mn);

// K(1 - M/N). Throws ParameterOutOfRange unless 0 <= M/N <= 1.
Rational rate_uncoded(int k, const Rational& mn);

// C(K, K*M/N), the subpacketization floor for gain K*M/N + 1. Throws
// NonCornerPoint.
BigInt min_f_bound(int k, const Rational& mn);

// Packets per file for the partition families: q^m when M/N = 1/q,
// (q-1)q^m when M/N = (q-1)/q, with K = q(m+1), m >= 1. Throws
// UnsupportedRatio for other ratios and NonConformingK when K does not fit.
BigInt f_new(int k, const Rational& mn);

// Rate ratio of the two schemes: (K*M/N) / (K*M/N + 1). Same domain as f_new.
Rational lambda_ratio(int k, const Rational& mn);

struct EtaRatio {
  Rational exact;     // C(K, K*M/N) / F_new
  double asymptotic;  // closed-form large-K approximation
};

// Subpacketization ratio, exact and asymptotic. Same domain as f_new.
EtaRatio eta_ratio(int k, const Rational& mn);

struct AsymptoticEstimate {
  BigInt exact;
  double estimate;
  double rel_error;  // |estimate - exact| / exact
};

// Stirling approximation of C(K, K*M/N):
// exp(K*H(mn)) / sqrt(2*pi*mn*(1-mn)*K) with H the natural-log entropy.
// Throws NonCornerPoint; requires 0 < M/N < 1.
AsymptoticEstimate stirling_binom(int k, const Rational& mn);

struct GroupingComparison {
  bool a_branch;        // true when M/N <= 1/2
  int q;                // ceil(N/M) on the A branch, floor(N/(N-M)) on B
  int group_size_an;    // (g-1)*ceil(N/M)
  int group_size_new;   // g*q (A) or q*ceil(g/(q-1)) (B)
  Rational r_an_g;
  Rational r_new_g;
  BigInt f_an_g;
  BigInt f_new_g;
  Rational f_ratio;     // f_an_g / f_new_g
  bool rate_equal;      // A branch: grouped rates match exactly
  bool rate_le;         // B branch: grouped new rate <= grouped baseline rate
  bool f_bound_ok;      // B branch: f_ratio >= 2^g / ((q-1) * sqrt(8*pi))
};

// Grouped-scheme comparison at coding gain g, evaluated in closed form
// (partial groups counted as full). Throws UnsupportedRatio (M/N outside
// (0, 1)) and ParameterOutOfRange (g < 2).
GroupingComparison grouping_compare(int k, std::int64_t m, std::int64_t n, int g);

struct ComparisonRow {
  int k;
  Rational mn;
  std::int64_t g_an;
  std::int64_t g_new;
  Rational r_an;
  Rational r_new;
  BigInt f_an;
  BigInt f_new;
};

// One comparison row; M/N must be a conforming 1/q or (q-1)/q point for K.
ComparisonRow comparison_row(int k, const Rational& mn);

// The 18 rows for M/N in {1/3, 1/2, 2/3} x K in {6, 12, 18, 24, 30, 36}.
std::vector<ComparisonRow> table6();

// Header "K,MN,g_an,g_new,R_an,R_new,F_an,F_new"; R_an rendered with 4
// decimals, R_new as an exact compact decimal or p/q.
void write_csv(std::ostream& out, const std::vector<ComparisonRow>& rows);

struct SearchResult {
  int f;                                // minimal row count found
  std::vector<std::vector<Cell>> grid;  // one witness array
  std::uint64_t nodes;                  // search nodes visited
};

// Exhaustive search for the smallest F <= f_max admitting an F x K array in
// which every integer occurs exactly g times (labels 0..S-1), equal integers
// sit in distinct rows and columns with star cross entries, and every row
// holds exactly stars_per_row stars. Row 0's stars are pinned to the first
// columns, row star patterns are enforced non-increasing and labels
// canonical; none of that loses solutions since the conditions are invariant
// under row/column exchange and relabeling. Returns nullopt when no F <=
// f_max works. Throws SearchBudgetExceeded when the node budget runs out.
std::optional<SearchResult> brute_force_min_f(int k, int g, int stars_per_row,
                                              int f_max,
                                              std::uint64_t budget = 50'000'000);

}  // namespace pda
