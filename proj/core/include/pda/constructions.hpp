#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pda/numeric.hpp"
#include "pda/pda.hpp"

namespace pda {

// The three PDA families. Symbol labels follow the defining formulas exactly,
// so golden-array comparisons are cell-for-cell, not up to permutation.

// D^{K,t}: rows are the t-subsets of {0..K-1} in lexicographic order; the
// entry at (T, k) is a star when k is in T, otherwise the lexicographic rank
// of T union {k} among (t+1)-subsets. (t+1)-regular
// (K, C(K,t), C(K-1,t-1), C(K,t+1)). t=0 (one all-integer row) and t=K (one
// all-star row) are allowed as degenerate outputs. Throws ParameterOutOfRange.
Pda maddah_ali_niesen(int k, int t);

// The partition classes of [0, q^n) by q-ary digits: for u < n the values
// whose digit u equals v; for u = n the values whose digit sum is v mod q.
// Throws ParameterOutOfRange.
std::vector<std::int64_t> partition_cell(int q, int n, int u, int v);

// A^{q,m}: q^m x q(m+1), (m+1)-regular (q(m+1), q^m, q^{m-1}, q^{m+1}-q^m),
// rate q-1. Rows are indexed by the q-ary digits of j; columns by k = u*q+v.
// Throws ParameterOutOfRange (q < 2 or m < 1).
Pda construction_a(int q, int m);

// B^{q,m}: (q-1)q^m x q(m+1), (q-1)(m+1)-regular
// (q(m+1), (q-1)q^m, (q-1)^2 q^{m-1}, q^m), rate 1/(q-1). Rows are indexed by
// digits (j_m,...,j_0) with j_m in [0, q-1). Throws ParameterOutOfRange.
Pda construction_b(int q, int m);

// The B-family placement sets computed from the digit-class complements
// directly, without building the array; must agree with
// placement_set(construction_b(q, m), k) for every k.
std::vector<PlacementSet> placement_sets_b(int q, int m);

// Picks construction A for cache ratio 1/q or B for (q-1)/q, with
// m = ceil(K/q) - 1, then deletes trailing columns down to K users.
// Throws UnsupportedRatio for other ratios, ParameterOutOfRange for K < 2q.
Pda for_system(int k, std::int64_t m_num, std::int64_t m_den);

// One group of a grouped scheme: every full group runs group_pda; a trailing
// partial group runs the same array with trailing columns deleted. The
// aggregate rate counts a partial group as full.
struct GroupedScheme {
  int total_users;                 // K
  int group_size;                  // users per full group
  int group_count;                 // ceil(K / group_size)
  int leftover_users;              // K mod group_size
  Pda group_pda;                   // array run by every full group
  std::optional<Pda> leftover_pda; // truncated array for the partial group
  Rational aggregate_rate;         // group_count * per-group rate
  BigInt packets;                  // F of the group array
  std::string leftover_note;
};

// Groups of size K' = (g-1)*ceil(N/M) each running D^{K',g-1} at cache ratio
// 1/ceil(N/M). Requires g >= 2 and K' <= K. Throws ParameterOutOfRange.
GroupedScheme group_scheme_an(int k, std::int64_t m, std::int64_t n, int g);

// Groups of size g*ceil(N/M) each running A^{ceil(N/M), g-1}. Requires
// M/N <= 1/2 (UnsupportedRatio otherwise) and g >= 2.
GroupedScheme group_scheme_a(int k, std::int64_t m, std::int64_t n, int g);

// Groups of size q*ceil(g/(q-1)) with q = floor(N/(N-M)), each running
// B^{q, ceil(g/(q-1))-1}. Requires M/N > 1/2 (UnsupportedRatio otherwise);
// throws ParameterOutOfRange when the group exponent would be zero
// (g <= q-1).
GroupedScheme group_scheme_b(int k, std::int64_t m, std::int64_t n, int g);

}  // namespace pda
