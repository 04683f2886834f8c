#include "pda/analysis.hpp"

#include <cmath>
#include <ostream>

#include "pda/errors.hpp"

namespace pda {

namespace {

constexpr double kPi = 3.14159265358979323846;

// K * mn as an exact integer t in [0, K]; throws NonCornerPoint otherwise.
std::int64_t corner_t(int k, const Rational& mn) {
  const Rational t = Rational(BigInt(k)) * mn;
  if (boost::multiprecision::denominator(t) != 1)
    throw NonCornerPoint("K*M/N must be an integer");
  const BigInt num = boost::multiprecision::numerator(t);
  if (num < 0 || num > k) throw NonCornerPoint("K*M/N must lie in [0, K]");
  return num.convert_to<std::int64_t>();
}

struct RatioShape {
  bool family_a;  // 1/q vs (q-1)/q
  int q;
};

// Classifies M/N as 1/q or (q-1)/q; the 1/2 overlap lands on the first form.
RatioShape classify_ratio(const Rational& mn) {
  const BigInt num = boost::multiprecision::numerator(mn);
  const BigInt den = boost::multiprecision::denominator(mn);
  if (num <= 0 || num >= den)
    throw UnsupportedRatio("cache ratio must lie strictly between 0 and 1");
  if (num == 1) return {true, den.convert_to<int>()};
  if (num == den - 1) return {false, den.convert_to<int>()};
  throw UnsupportedRatio("cache ratio must be 1/q or (q-1)/q");
}

// K = q(m+1) with m >= 1; returns m.
int conforming_m(int k, int q) {
  if (k < 1 || k % q != 0 || k / q < 2)
    throw NonConformingK("K must be q(m+1) with m >= 1");
  return k / q - 1;
}

}  // namespace

Rational rate_an(int k, const Rational& mn) {
  if (k < 1) throw ParameterOutOfRange("K must be >= 1");
  const std::int64_t t = corner_t(k, mn);
  return Rational(BigInt(k - t)) / BigInt(1 + t);
}

Rational rate_uncoded(int k, const Rational& mn) {
  if (k < 1) throw ParameterOutOfRange("K must be >= 1");
  if (mn < 0 || mn > 1) throw ParameterOutOfRange("M/N must lie in [0, 1]");
  return Rational(BigInt(k)) * (Rational(1) - mn);
}

BigInt min_f_bound(int k, const Rational& mn) {
  if (k < 1) throw ParameterOutOfRange("K must be >= 1");
  return binomial(k, corner_t(k, mn));
}

BigInt f_new(int k, const Rational& mn) {
  const RatioShape shape = classify_ratio(mn);
  const int m = conforming_m(k, shape.q);
  const BigInt power = ipow(shape.q, m);
  return shape.family_a ? power : BigInt(shape.q - 1) * power;
}

Rational lambda_ratio(int k, const Rational& mn) {
  f_new(k, mn);  // domain check
  const std::int64_t t = corner_t(k, mn);
  return Rational(BigInt(t)) / BigInt(t + 1);
}

EtaRatio eta_ratio(int k, const Rational& mn) {
  const BigInt denom = f_new(k, mn);
  const std::int64_t t = corner_t(k, mn);
  EtaRatio eta;
  eta.exact = Rational(binomial(k, t)) / denom;

  const double mu = to_double(mn);
  const double pref =
      std::pow(1.0 / mu, 1.5) * std::sqrt(1.0 / (1.0 - mu)) / std::sqrt(2.0 * kPi);
  const bool family_a = boost::multiprecision::numerator(mn) == 1;
  const double exponent = family_a ? k * (1.0 - mu) * std::log(1.0 / (1.0 - mu))
                                   : k * mu * std::log(1.0 / mu);
  eta.asymptotic = pref * std::exp(exponent);
  return eta;
}

AsymptoticEstimate stirling_binom(int k, const Rational& mn) {
  if (k < 1) throw ParameterOutOfRange("K must be >= 1");
  if (mn <= 0 || mn >= 1) throw ParameterOutOfRange("M/N must lie strictly inside (0, 1)");
  const std::int64_t t = corner_t(k, mn);

  AsymptoticEstimate result;
  result.exact = binomial(k, t);
  const double mu = to_double(mn);
  const double entropy = mu * std::log(1.0 / mu) + (1.0 - mu) * std::log(1.0 / (1.0 - mu));
  result.estimate = std::exp(k * entropy) / std::sqrt(2.0 * kPi * mu * (1.0 - mu) * k);
  const double exact = to_double(result.exact);
  result.rel_error = std::abs(result.estimate - exact) / exact;
  return result;
}

GroupingComparison grouping_compare(int k, std::int64_t m, std::int64_t n, int g) {
  if (g < 2) throw ParameterOutOfRange("coding gain must be >= 2");
  if (k < 1) throw ParameterOutOfRange("K must be >= 1");
  if (m < 1 || n < 1 || m >= n)
    throw UnsupportedRatio("cache ratio must lie strictly between 0 and 1");

  const auto ceil_div = [](std::int64_t a, std::int64_t b) { return (a + b - 1) / b; };
  const std::int64_t ratio_ceil = ceil_div(n, m);  // ceil(N/M)

  GroupingComparison cmp;
  cmp.a_branch = 2 * m <= n;
  cmp.group_size_an = static_cast<int>((g - 1) * ratio_ceil);
  cmp.f_an_g = binomial(cmp.group_size_an, g - 1);
  const Rational per_group_an =
      Rational(BigInt(cmp.group_size_an - (g - 1))) / BigInt(g);
  cmp.r_an_g = Rational(BigInt(ceil_div(k, cmp.group_size_an))) * per_group_an;

  if (cmp.a_branch) {
    cmp.q = static_cast<int>(ratio_ceil);
    cmp.group_size_new = cmp.q * g;
    cmp.f_new_g = ipow(cmp.q, g - 1);
    cmp.r_new_g = Rational(BigInt(ceil_div(k, cmp.group_size_new))) * BigInt(cmp.q - 1);
  } else {
    cmp.q = static_cast<int>(n / (n - m));
    const std::int64_t exponent = ceil_div(g, cmp.q - 1) - 1;
    if (exponent < 1)
      throw ParameterOutOfRange("gain " + std::to_string(g) +
                                " needs no splitting at this ratio");
    cmp.group_size_new = static_cast<int>(cmp.q * (exponent + 1));
    cmp.f_new_g = BigInt(cmp.q - 1) * ipow(cmp.q, exponent);
    cmp.r_new_g =
        Rational(BigInt(ceil_div(k, cmp.group_size_new))) / BigInt(cmp.q - 1);
  }

  cmp.f_ratio = Rational(cmp.f_an_g) / cmp.f_new_g;
  cmp.rate_equal = cmp.r_an_g == cmp.r_new_g;
  cmp.rate_le = cmp.r_new_g <= cmp.r_an_g;
  if (cmp.a_branch) {
    cmp.f_bound_ok = true;  // the exponential floor below is a B-branch claim
  } else {
    const double floor =
        std::pow(2.0, g) / ((cmp.q - 1) * std::sqrt(8.0 * kPi));
    cmp.f_bound_ok = to_double(cmp.f_ratio) >= floor;
  }
  return cmp;
}

ComparisonRow comparison_row(int k, const Rational& mn) {
  const std::int64_t t = corner_t(k, mn);
  ComparisonRow row;
  row.k = k;
  row.mn = mn;
  row.g_an = t + 1;
  row.g_new = t;
  row.r_an = rate_an(k, mn);
  row.f_an = min_f_bound(k, mn);
  row.f_new = f_new(k, mn);

  const RatioShape shape = classify_ratio(mn);
  row.r_new = shape.family_a ? Rational(BigInt(shape.q - 1))
                             : Rational(1) / BigInt(shape.q - 1);
  return row;
}

std::vector<ComparisonRow> table6() {
  const Rational ratios[] = {Rational(1) / 3, Rational(1) / 2, Rational(2) / 3};
  std::vector<ComparisonRow> rows;
  rows.reserve(18);
  for (const Rational& mn : ratios) {
    for (int k = 6; k <= 36; k += 6) rows.push_back(comparison_row(k, mn));
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<ComparisonRow>& rows) {
  out << "K,MN,g_an,g_new,R_an,R_new,F_an,F_new\n";
  for (const ComparisonRow& row : rows) {
    out << row.k << ',' << ratio_string(row.mn) << ',' << row.g_an << ',' << row.g_new
        << ',' << fixed_string(row.r_an, 4) << ',' << compact_string(row.r_new) << ','
        << row.f_an << ',' << row.f_new << '\n';
  }
}

}  // namespace pda
