#include "pda/numeric.hpp"

#include <cctype>

#include "pda/errors.hpp"

namespace pda {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: the first i factors contain an i-divisible product
  }
  return result;
}

BigInt ipow(std::int64_t base, std::int64_t exp) {
  if (exp < 0) throw ParameterOutOfRange("negative exponent");
  BigInt result = 1;
  BigInt b = base;
  while (exp > 0) {
    if (exp & 1) result *= b;
    b *= b;
    exp >>= 1;
  }
  return result;
}

double to_double(const BigInt& v) { return v.convert_to<double>(); }

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string ratio_string(const Rational& r) {
  const BigInt num = numerator(r);
  const BigInt den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

BigInt pow10(int digits) {
  BigInt p = 1;
  for (int i = 0; i < digits; ++i) p *= 10;
  return p;
}

}  // namespace

std::string fixed_string(const Rational& r, int digits) {
  if (digits < 1) throw ParameterOutOfRange("digits must be >= 1");
  BigInt num = numerator(r);
  const BigInt den = denominator(r);
  const bool negative = num < 0;
  if (negative) num = -num;
  const BigInt scale = pow10(digits);
  // floor(x * scale + 1/2) in one integer division
  const BigInt scaled = (num * scale * 2 + den) / (den * 2);
  const BigInt whole = scaled / scale;
  std::string frac = BigInt(scaled % scale).str();
  frac.insert(frac.begin(), static_cast<size_t>(digits) - frac.size(), '0');
  return (negative ? "-" : "") + whole.str() + "." + frac;
}

std::string compact_string(const Rational& r) {
  BigInt den = denominator(r);
  int twos = 0;
  int fives = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++twos;
  }
  while (den % 5 == 0) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return ratio_string(r);
  const int digits = twos > fives ? twos : fives;
  if (digits == 0) return numerator(r).str();
  BigInt num = numerator(r);
  const bool negative = num < 0;
  if (negative) num = -num;
  const BigInt scale = pow10(digits);
  const BigInt scaled = num * scale / denominator(r);  // exact by construction
  const BigInt whole = scaled / scale;
  std::string frac = BigInt(scaled % scale).str();
  frac.insert(frac.begin(), static_cast<size_t>(digits) - frac.size(), '0');
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  std::string out = (negative ? "-" : "") + whole.str();
  if (!frac.empty()) out += "." + frac;
  return out;
}

Rational parse_ratio(const std::string& text) {
  size_t begin = 0;
  size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  const std::string body = text.substr(begin, end - begin);
  if (body.empty()) throw ParseError("ratio", 0, 0, "empty ratio");

  const auto parse_int = [&](const std::string& part) -> BigInt {
    size_t i = 0;
    if (i < part.size() && (part[i] == '+' || part[i] == '-')) ++i;
    if (i == part.size()) throw ParseError("ratio", 0, 0, "malformed integer '" + part + "'");
    for (; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i])))
        throw ParseError("ratio", 0, 0, "malformed integer '" + part + "'");
    }
    // boost's parser takes a leading '-' but not '+'
    return BigInt(part[0] == '+' ? part.substr(1) : part);
  };

  const size_t slash = body.find('/');
  if (slash == std::string::npos) return Rational(parse_int(body));
  const BigInt num = parse_int(body.substr(0, slash));
  const BigInt den = parse_int(body.substr(slash + 1));
  if (den == 0) throw ParseError("ratio", 0, 0, "zero denominator in '" + body + "'");
  return Rational(num) / den;
}

}  // namespace pda
