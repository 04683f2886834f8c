#pragma once

#include <vector>

#include "pda/errors.hpp"
#include "pda/numeric.hpp"

namespace pda {

// Lexicographic bijection between r-subsets of {0..n-1} (strictly increasing
// element lists) and ranks [0, C(n,r)).

// Throws InvalidSubset unless subset is strictly increasing with elements in
// [0, n).
BigInt subset_rank(int n, const std::vector<int>& subset);

// Throws InvalidSubset for r outside [0, n], IndexOutOfRange for rank outside
// [0, C(n,r)).
std::vector<int> subset_unrank(int n, int r, const BigInt& rank);

// All r-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets_lex(int n, int r);

}  // namespace pda
