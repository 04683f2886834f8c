#include "pda/subsets.hpp"

namespace pda {

BigInt subset_rank(int n, const std::vector<int>& subset) {
  const int r = static_cast<int>(subset.size());
  if (r > n) throw InvalidSubset("subset larger than the ground set");
  int prev = -1;
  for (const int e : subset) {
    if (e <= prev || e >= n)
      throw InvalidSubset("subset must be strictly increasing within [0," + std::to_string(n) +
                          ")");
    prev = e;
  }
  // Count subsets that precede lexicographically: for position i, every
  // choice strictly between the previous element and subset[i] fixes a
  // smaller prefix with C(n-1-c, r-1-i) completions.
  BigInt rank = 0;
  prev = -1;
  for (int i = 0; i < r; ++i) {
    for (int c = prev + 1; c < subset[static_cast<size_t>(i)]; ++c) {
      rank += binomial(n - 1 - c, r - 1 - i);
    }
    prev = subset[static_cast<size_t>(i)];
  }
  return rank;
}

std::vector<int> subset_unrank(int n, int r, const BigInt& rank) {
  if (r < 0 || r > n) throw InvalidSubset("subset size outside [0," + std::to_string(n) + "]");
  if (rank < 0 || rank >= binomial(n, r))
    throw IndexOutOfRange("rank outside [0, C(" + std::to_string(n) + "," + std::to_string(r) +
                          "))");
  std::vector<int> subset;
  subset.reserve(static_cast<size_t>(r));
  BigInt rem = rank;
  int c = 0;
  for (int i = 0; i < r; ++i) {
    for (;;) {
      const BigInt block = binomial(n - 1 - c, r - 1 - i);
      if (rem < block) break;
      rem -= block;
      ++c;
    }
    subset.push_back(c++);
  }
  return subset;
}

std::vector<std::vector<int>> subsets_lex(int n, int r) {
  if (r < 0 || r > n) throw InvalidSubset("subset size outside [0," + std::to_string(n) + "]");
  std::vector<std::vector<int>> all;
  std::vector<int> current(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i) current[static_cast<size_t>(i)] = i;
  for (;;) {
    all.push_back(current);
    // advance to the lexicographic successor
    int i = r - 1;
    while (i >= 0 && current[static_cast<size_t>(i)] == n - r + i) --i;
    if (i < 0) break;
    ++current[static_cast<size_t>(i)];
    for (int l = i + 1; l < r; ++l)
      current[static_cast<size_t>(l)] = current[static_cast<size_t>(l - 1)] + 1;
  }
  return all;
}

}  // namespace pda
