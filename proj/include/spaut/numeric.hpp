#pragma once

/// Exact arithmetic aliases and small helpers shared by every module.

#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace spaut {

using BigInt = mpz_class;
using Rational = mpq_class;

/// A d-tuple of naturals.
using Tuple = std::vector<BigInt>;

inline BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

inline BigInt pow(unsigned long base, unsigned long exponent) {
  BigInt result;
  mpz_ui_pow_ui(result.get_mpz_t(), base, exponent);
  return result;
}

/// log10 of a positive integer, accurate for values far beyond double range.
inline double log10(const BigInt& value) {
  long exp2 = 0;
  const double mantissa = mpz_get_d_2exp(&exp2, value.get_mpz_t());
  return std::log10(mantissa) + static_cast<double>(exp2) * std::log10(2.0);
}

inline double log10(const Rational& value) {
  return log10(BigInt(value.get_num())) - log10(BigInt(value.get_den()));
}

inline bool is_integral(const Rational& value) {
  return mpz_divisible_p(value.get_num_mpz_t(), value.get_den_mpz_t()) != 0;
}

inline std::string to_string(const BigInt& value) { return value.get_str(); }

inline std::string to_string(Rational value) {
  value.canonicalize();
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

inline BigInt coordinate_sum(const Tuple& t) {
  BigInt sum = 0;
  for (const auto& x : t) sum += x;
  return sum;
}

/// Ordering used for every tuple listing: coordinate sum, then lexicographic.
struct TupleOrder {
  bool operator()(const Tuple& a, const Tuple& b) const {
    const BigInt sa = coordinate_sum(a);
    const BigInt sb = coordinate_sum(b);
    if (sa != sb) return sa < sb;
    return a < b;
  }
};

inline std::string format_tuple(const Tuple& t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ',';
    out += t[i].get_str();
  }
  return out;
}

}  // namespace spaut
