#include "pda/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "pda/subsets.hpp"

namespace pda {

namespace {

// Generation guard: keeps a mistyped request from allocating gigabytes.
constexpr std::int64_t kMaxCells = 50'000'000;

void check_size(const BigInt& rows, std::int64_t cols) {
  if (rows * cols > kMaxCells)
    throw ParameterOutOfRange("requested array exceeds " + std::to_string(kMaxCells) + " cells");
}

int checked_int(const BigInt& v) { return v.convert_to<int>(); }

// Digits of value in base q, least significant first, padded to n digits.
std::vector<int> digits_of(std::int64_t value, int q, int n) {
  std::vector<int> d(static_cast<size_t>(n));
  for (int l = 0; l < n; ++l) {
    d[static_cast<size_t>(l)] = static_cast<int>(value % q);
    value /= q;
  }
  return d;
}

std::int64_t mod(std::int64_t a, std::int64_t q) { return ((a % q) + q) % q; }

}  // namespace

Pda maddah_ali_niesen(int k, int t) {
  if (k < 1) throw ParameterOutOfRange("K must be >= 1");
  if (t < 0 || t > k) throw ParameterOutOfRange("t must lie in [0, K]");
  check_size(binomial(k, t), k);

  Grid grid;
  grid.reserve(static_cast<size_t>(checked_int(binomial(k, t))));
  std::map<std::vector<int>, std::size_t> row_of;
  for (const std::vector<int>& subset : subsets_lex(k, t)) {
    row_of.emplace(subset, grid.size());
    grid.emplace_back(static_cast<size_t>(k), Cell::star());
  }

  // Walking the larger subsets in lex order makes the loop counter their
  // rank, so every cell gets its symbol without ranking arithmetic.
  if (t < k) {
    std::int64_t sym = 0;
    std::vector<int> rest;
    rest.reserve(static_cast<size_t>(t));
    for (const std::vector<int>& chosen : subsets_lex(k, t + 1)) {
      for (std::size_t drop = 0; drop < chosen.size(); ++drop) {
        rest.clear();
        for (std::size_t i = 0; i < chosen.size(); ++i) {
          if (i != drop) rest.push_back(chosen[i]);
        }
        grid[row_of.find(rest)->second][static_cast<std::size_t>(chosen[drop])] =
            Cell::symbol(sym);
      }
      ++sym;
    }
  }
  return make_pda(grid);
}

std::vector<std::int64_t> partition_cell(int q, int n, int u, int v) {
  if (q < 2) throw ParameterOutOfRange("q must be >= 2");
  if (n < 1) throw ParameterOutOfRange("n must be >= 1");
  if (u < 0 || u > n) throw ParameterOutOfRange("u must lie in [0, n]");
  if (v < 0 || v >= q) throw ParameterOutOfRange("v must lie in [0, q)");
  check_size(ipow(q, n), 1);

  const std::int64_t total = ipow(q, n).convert_to<std::int64_t>();
  std::vector<std::int64_t> values;
  for (std::int64_t s = 0; s < total; ++s) {
    const std::vector<int> d = digits_of(s, q, n);
    if (u < n) {
      if (d[static_cast<size_t>(u)] == v) values.push_back(s);
    } else {
      std::int64_t sum = 0;
      for (const int digit : d) sum += digit;
      if (mod(sum, q) == v) values.push_back(s);
    }
  }
  return values;
}

Pda construction_a(int q, int m) {
  if (q < 2) throw ParameterOutOfRange("q must be >= 2");
  if (m < 1) throw ParameterOutOfRange("m must be >= 1");
  check_size(ipow(q, m), static_cast<std::int64_t>(q) * (m + 1));

  const std::int64_t rows = ipow(q, m).convert_to<std::int64_t>();
  Grid grid;
  grid.reserve(static_cast<size_t>(rows));
  for (std::int64_t j = 0; j < rows; ++j) {
    const std::vector<int> jd = digits_of(j, q, m);
    std::int64_t digit_sum = 0;
    for (const int d : jd) digit_sum += d;

    std::vector<Cell> row;
    row.reserve(static_cast<size_t>(q) * (m + 1));
    for (int u = 0; u <= m; ++u) {
      for (int v = 0; v < q; ++v) {
        if (u < m) {
          if (jd[static_cast<size_t>(u)] == v) {
            row.push_back(Cell::star());
            continue;
          }
          // (j_u - v - 1, j_{m-1}, ..., j_{u+1}, v, j_{u-1}, ..., j_0) base q
          std::int64_t value = mod(jd[static_cast<size_t>(u)] - v - 1, q);
          for (int l = m - 1; l >= 0; --l) {
            value = value * q + (l == u ? v : jd[static_cast<size_t>(l)]);
          }
          row.push_back(Cell::symbol(value));
        } else {
          if (mod(digit_sum, q) == v) {
            row.push_back(Cell::star());
            continue;
          }
          // (v - sum - 1, j_{m-1}, ..., j_0) base q
          std::int64_t value = mod(v - digit_sum - 1, q);
          for (int l = m - 1; l >= 0; --l) value = value * q + jd[static_cast<size_t>(l)];
          row.push_back(Cell::symbol(value));
        }
      }
    }
    grid.push_back(std::move(row));
  }
  return make_pda(grid);
}

Pda construction_b(int q, int m) {
  if (q < 2) throw ParameterOutOfRange("q must be >= 2");
  if (m < 1) throw ParameterOutOfRange("m must be >= 1");
  check_size(BigInt(q - 1) * ipow(q, m), static_cast<std::int64_t>(q) * (m + 1));

  const std::int64_t base = ipow(q, m).convert_to<std::int64_t>();
  const std::int64_t rows = static_cast<std::int64_t>(q - 1) * base;
  Grid grid;
  grid.reserve(static_cast<size_t>(rows));
  for (std::int64_t j = 0; j < rows; ++j) {
    // digits (j_m, ..., j_0) with j_m in [0, q-1)
    std::vector<int> jd = digits_of(j % base, q, m);
    jd.push_back(static_cast<int>(j / base));
    std::int64_t digit_sum = 0;
    for (const int d : jd) digit_sum += d;

    std::vector<Cell> row;
    row.reserve(static_cast<size_t>(q) * (m + 1));
    for (int u = 0; u <= m; ++u) {
      for (int v = 0; v < q; ++v) {
        if (u < m) {
          if (jd[static_cast<size_t>(u)] != v) {
            row.push_back(Cell::star());
            continue;
          }
          // (j_{m-1}, ..., j_{u+1}, j_u + j_m + 1, j_{u-1}, ..., j_0) base q
          std::int64_t value = 0;
          for (int l = m - 1; l >= 0; --l) {
            const std::int64_t digit =
                l == u ? mod(jd[static_cast<size_t>(u)] + jd[static_cast<size_t>(m)] + 1, q)
                       : jd[static_cast<size_t>(l)];
            value = value * q + digit;
          }
          row.push_back(Cell::symbol(value));
        } else {
          if (mod(digit_sum, q) != mod(v - 1, q)) {
            row.push_back(Cell::star());
            continue;
          }
          row.push_back(Cell::symbol(j % base));  // (j_{m-1}, ..., j_0) base q
        }
      }
    }
    grid.push_back(std::move(row));
  }
  return make_pda(grid);
}

std::vector<PlacementSet> placement_sets_b(int q, int m) {
  if (q < 2) throw ParameterOutOfRange("q must be >= 2");
  if (m < 1) throw ParameterOutOfRange("m must be >= 1");
  check_size(BigInt(q - 1) * ipow(q, m), static_cast<std::int64_t>(q) * (m + 1));

  const std::int64_t base = ipow(q, m).convert_to<std::int64_t>();
  const std::int64_t rows = static_cast<std::int64_t>(q - 1) * base;

  std::vector<PlacementSet> sets;
  sets.reserve(static_cast<size_t>(q) * (m + 1));
  for (int u = 0; u <= m; ++u) {
    for (int v = 0; v < q; ++v) {
      PlacementSet set;
      set.user = u * q + v;
      for (std::int64_t j = 0; j < rows; ++j) {
        std::vector<int> jd = digits_of(j % base, q, m);
        jd.push_back(static_cast<int>(j / base));
        bool excluded;  // j belongs to the class the user leaves uncached
        if (u < m) {
          excluded = jd[static_cast<size_t>(u)] == v;
        } else {
          std::int64_t sum = 0;
          for (const int d : jd) sum += d;
          excluded = mod(sum, q) == mod(v - 1, q);
        }
        if (!excluded) set.rows.push_back(static_cast<int>(j));
      }
      sets.push_back(std::move(set));
    }
  }
  return sets;
}

Pda for_system(int k, std::int64_t m_num, std::int64_t m_den) {
  if (m_den <= 0 || m_num <= 0 || m_num >= m_den)
    throw UnsupportedRatio("cache ratio must lie strictly between 0 and 1");
  const std::int64_t g = std::gcd(m_num, m_den);
  const std::int64_t num = m_num / g;
  const std::int64_t den = m_den / g;

  bool family_a;
  if (num == 1) {
    family_a = true;  // ratio 1/q
  } else if (num == den - 1) {
    family_a = false;  // ratio (q-1)/q
  } else {
    throw UnsupportedRatio("cache ratio must be 1/q or (q-1)/q");
  }
  const int q = static_cast<int>(den);
  if (k < 2 * q) throw ParameterOutOfRange("K must be >= 2q");

  const int m = (k + q - 1) / q - 1;
  const Pda base = family_a ? construction_a(q, m) : construction_b(q, m);
  return delete_columns(base, k);
}

namespace {

GroupedScheme make_grouped(int k, Pda group_pda) {
  const int size = group_pda.k();
  GroupedScheme scheme{
      k,
      size,
      (k + size - 1) / size,
      k % size,
      std::move(group_pda),
      std::nullopt,
      Rational(0),
      BigInt(0),
      "",
  };
  scheme.packets = scheme.group_pda.f();
  scheme.aggregate_rate = Rational(scheme.group_count) * rate(scheme.group_pda);
  if (scheme.leftover_users > 0) {
    scheme.leftover_pda = delete_columns(scheme.group_pda, scheme.leftover_users);
    scheme.leftover_note = "last group serves " + std::to_string(scheme.leftover_users) +
                           " users with the group array cut to its first " +
                           std::to_string(scheme.leftover_users) + " columns";
  } else {
    scheme.leftover_note = "users split evenly into " + std::to_string(scheme.group_count) +
                           " groups";
  }
  return scheme;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

}  // namespace

GroupedScheme group_scheme_an(int k, std::int64_t m, std::int64_t n, int g) {
  if (g < 2) throw ParameterOutOfRange("coding gain must be >= 2");
  if (m < 1 || n < m) throw ParameterOutOfRange("need 0 < M <= N");
  const std::int64_t ratio_ceil = ceil_div(n, m);  // ceil(N/M)
  const std::int64_t group_size = (g - 1) * ratio_ceil;
  if (group_size > k)
    throw ParameterOutOfRange("group size " + std::to_string(group_size) + " exceeds K");
  // cache ratio inside a group is 1/ceil(N/M), so t = group_size / ceil = g-1
  return make_grouped(k, maddah_ali_niesen(static_cast<int>(group_size), g - 1));
}

GroupedScheme group_scheme_a(int k, std::int64_t m, std::int64_t n, int g) {
  if (g < 2) throw ParameterOutOfRange("coding gain must be >= 2");
  if (m < 1 || n < m) throw ParameterOutOfRange("need 0 < M <= N");
  if (2 * m > n) throw UnsupportedRatio("this family needs M/N <= 1/2");
  if (k < 1) throw ParameterOutOfRange("K must be >= 1");
  const int q = static_cast<int>(ceil_div(n, m));
  return make_grouped(k, construction_a(q, g - 1));
}

GroupedScheme group_scheme_b(int k, std::int64_t m, std::int64_t n, int g) {
  if (g < 2) throw ParameterOutOfRange("coding gain must be >= 2");
  if (m < 1 || n <= m) throw ParameterOutOfRange("need 0 < M < N");
  if (2 * m <= n) throw UnsupportedRatio("this family needs M/N > 1/2");
  if (k < 1) throw ParameterOutOfRange("K must be >= 1");
  const int q = static_cast<int>(n / (n - m));  // floor; >= 2 whenever M/N > 1/2
  const int exponent = static_cast<int>(ceil_div(g, q - 1)) - 1;
  if (exponent < 1)
    throw ParameterOutOfRange("gain " + std::to_string(g) +
                              " needs no splitting at this ratio (group exponent 0)");
  return make_grouped(k, construction_b(q, exponent));
}

}  // namespace pda
