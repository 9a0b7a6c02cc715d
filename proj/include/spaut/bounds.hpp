#pragma once

/// Explicit upper bounds for the number of solutions of unit equations and
/// for the size of the intersection of sparse automatic sets in
/// multiplicatively independent bases.
///
///   av             (8n)^{4n^4(n+r+1)}
///   nondegenerate  (8(n+m-1))^{10(n+m)^5 - 4(n+m-1)^4}
///   degenerate     2^{-(n+m)} (8(n+m-1))^{10(n+m)^5 - (n+m)}
///   term-pair      (8(s+t+1))^{10(s+t+2)^5 - (s+t+2)}
///   main           k^{d|Q|} l^{d|Q'|} (8(|Q|+|Q'|-1))^{10d(|Q|+|Q'|)^5}
///
/// The exact value is only materialized when its bit size stays under a cap.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spaut/errors.hpp"
#include "spaut/numeric.hpp"

namespace spaut {

struct BoundOptions {
  double max_exact_bits = static_cast<double>(1ull << 26);
};

struct BoundValue {
  std::string formula_id;
  std::vector<std::pair<std::string, long>> inputs;
  double log10 = 0.0;
  std::optional<Rational> exact;
};

namespace detail {

/// Π base_i^{exponent_i} · 2^{-halvings}.
struct PowerProduct {
  std::vector<std::pair<unsigned long, BigInt>> factors;
  unsigned long halvings = 0;

  double log10() const {
    double sum = -static_cast<double>(halvings) * std::log10(2.0);
    for (const auto& [base, e] : factors) sum += e.get_d() * std::log10(static_cast<double>(base));
    return sum;
  }

  double bits() const {
    double sum = 0.0;
    for (const auto& [base, e] : factors) sum += e.get_d() * std::log2(static_cast<double>(base));
    return sum;
  }

  BigInt numerator() const {
    BigInt value = 1;
    for (const auto& [base, e] : factors) value *= pow(base, e.get_ui());
    return value;
  }
};

inline BoundValue make_bound(std::string id, std::vector<std::pair<std::string, long>> inputs,
                             const PowerProduct& p, const BoundOptions& options) {
  BoundValue b{std::move(id), std::move(inputs), p.log10(), std::nullopt};
  bool fits = p.bits() <= options.max_exact_bits;
  for (const auto& f : p.factors) fits = fits && f.second.fits_ulong_p();
  if (fits) {
    Rational exact(p.numerator(), pow(2ul, p.halvings));
    exact.canonicalize();
    b.exact = std::move(exact);
  }
  return b;
}

inline BigInt big(long x) { return BigInt(x); }

inline void require(bool ok, const char* message) {
  if (!ok) throw InputError(message);
}

}  // namespace detail

inline BoundValue av_bound(long n, long r, const BoundOptions& options = {}) {
  detail::require(n >= 1 && r >= 0, "av bound needs n >= 1 and r >= 0");
  const BigInt nn = detail::big(n);
  const BigInt exponent = 4 * nn * nn * nn * nn * (nn + r + 1);
  return detail::make_bound("av", {{"n", n}, {"r", r}},
                            {{{static_cast<unsigned long>(8 * n), exponent}}, 0}, options);
}

inline BoundValue nondegenerate_pair_bound(long n, long m, const BoundOptions& options = {}) {
  detail::require(n >= 1 && m >= 1, "pair bound needs n, m >= 1");
  const BigInt total = detail::big(n + m);
  const BigInt less = total - 1;
  const BigInt exponent = 10 * total * total * total * total * total - 4 * less * less * less * less;
  return detail::make_bound("nondegenerate", {{"n", n}, {"m", m}},
                            {{{static_cast<unsigned long>(8 * (n + m - 1)), exponent}}, 0}, options);
}

inline BoundValue degenerate_pair_bound(long n, long m, const BoundOptions& options = {}) {
  detail::require(n >= 1 && m >= 1, "pair bound needs n, m >= 1");
  const BigInt total = detail::big(n + m);
  const BigInt exponent = 10 * total * total * total * total * total - total;
  return detail::make_bound("degenerate", {{"n", n}, {"m", m}},
                            {{{static_cast<unsigned long>(8 * (n + m - 1)), exponent}},
                             static_cast<unsigned long>(n + m)},
                            options);
}

inline BoundValue term_pair_bound(long s, long t, const BoundOptions& options = {}) {
  detail::require(s >= 1 && t >= 1, "term pair bound needs s, t >= 1");
  const BigInt total = detail::big(s + t + 2);
  const BigInt exponent = 10 * total * total * total * total * total - total;
  return detail::make_bound("term-pair", {{"s", s}, {"t", t}},
                            {{{static_cast<unsigned long>(8 * (s + t + 1)), exponent}}, 0}, options);
}

/// Smallest r with value = r^e for some e >= 1.
inline BigInt primitive_root(const BigInt& value) {
  const auto top = mpz_sizeinbase(value.get_mpz_t(), 2);
  for (unsigned long e = top; e >= 2; --e) {
    BigInt root;
    if (mpz_root(root.get_mpz_t(), value.get_mpz_t(), e) != 0) return root;
  }
  return value;
}

/// k^a = l^b has no solution in positive integers a, b.
inline bool multiplicatively_independent(long k, long l) {
  if (k < 2 || l < 2) throw InputError("bases must be at least 2");
  return primitive_root(BigInt(k)) != primitive_root(BigInt(l));
}

class DependentBasesError : public DomainError {
 public:
  DependentBasesError(long k, long l)
      : DomainError("bases " + std::to_string(k) + " and " + std::to_string(l) +
                    " are multiplicatively dependent") {}
};

inline BoundValue intersection_bound(long states, long other_states, long dim, long k, long l,
                                     const BoundOptions& options = {}) {
  detail::require(states >= 1 && other_states >= 1 && dim >= 1, "state counts and dimension must be positive");
  detail::require(k >= 2 && l >= 2, "bases must be at least 2");
  if (!multiplicatively_independent(k, l)) throw DependentBasesError(k, l);
  const BigInt total = detail::big(states + other_states);
  const BigInt main_exp = 10 * detail::big(dim) * total * total * total * total * total;
  detail::PowerProduct p{{{static_cast<unsigned long>(k), detail::big(dim * states)},
                          {static_cast<unsigned long>(l), detail::big(dim * other_states)},
                          {static_cast<unsigned long>(8 * (states + other_states - 1)), main_exp}},
                         0};
  return detail::make_bound("main",
                            {{"Q", states}, {"Qp", other_states}, {"d", dim}, {"k", k}, {"l", l}}, p,
                            options);
}

/// A partition of n + m terms into r blocks that each meet both sides
/// satisfies r <= (n+m)/2.
inline bool partition_rank_within_bound(long n, long m, long r) { return 2 * r <= n + m; }

/// Largest number of blocks in such a partition.
inline long max_two_sided_blocks(long n, long m) { return std::min(n, m); }

inline std::string format_bound(const BoundValue& b) {
  std::string out = "formula=" + b.formula_id + " inputs=";
  for (std::size_t i = 0; i < b.inputs.size(); ++i) {
    if (i) out += ',';
    out += b.inputs[i].first + "=" + std::to_string(b.inputs[i].second);
  }
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6f", b.log10);
  out += " log10=";
  out += buffer;
  out += " exact=" + (b.exact ? to_string(*b.exact) : std::string("omitted"));
  return out;
}

}  // namespace spaut
