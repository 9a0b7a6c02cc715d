#pragma once

/// Closed forms for the values of a simple sparse term. The values of
/// v_0 w_1* v_1 ... w_s* v_s in base k are, per coordinate,
///
///   c_0 + c_1 k^{δ_s n_s} + c_2 k^{δ_s n_s + δ_{s-1} n_{s-1}} + ... + c_s k^{δ_s n_s + ... + δ_1 n_1}
///
/// with δ_i = |w_i| and rational c_i, over all n_1, ..., n_s >= 0.

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "spaut/digit_word.hpp"
#include "spaut/numeric.hpp"
#include "spaut/sparse_term.hpp"

namespace spaut {

using Exponents = std::vector<std::size_t>;

struct ExpSumForm {
  Alphabet alphabet;
  std::vector<std::size_t> deltas;               ///< δ_1..δ_s
  std::vector<std::vector<Rational>> coefficients;  ///< [coordinate][i], i = 0..s
  std::size_t fixed_length = 0;                  ///< |v_0| + ... + |v_s|

  bool operator==(const ExpSumForm&) const = default;

  std::size_t star_count() const { return deltas.size(); }
};

/// Built from [uv]_k = [u]_k k^{|v|} + [v]_k and
/// [w^n]_k = [w]_k (k^{|w|n} - 1) / (k^{|w|} - 1).
inline ExpSumForm to_expsum(const SparseTerm& t) {
  t.validate();
  const std::size_t s = t.star_count();
  const int k = t.alphabet.base;
  ExpSumForm f;
  f.alphabet = t.alphabet;
  f.fixed_length = t.fixed_length();
  for (const auto& w : t.loops) f.deltas.push_back(w.length());

  // suffix[j] = |v_j| + ... + |v_s|, suffix[s+1] = 0.
  std::vector<std::size_t> suffix(s + 2, 0);
  for (std::size_t j = s + 1; j-- > 0;) suffix[j] = suffix[j + 1] + t.fixed[j].length();

  std::vector<Tuple> fixed_values, loop_values;
  for (const auto& v : t.fixed) fixed_values.push_back(evaluate(v));
  for (const auto& w : t.loops) loop_values.push_back(evaluate(w));

  f.coefficients.assign(static_cast<std::size_t>(t.alphabet.dim), std::vector<Rational>(s + 1));
  for (std::size_t c = 0; c < f.coefficients.size(); ++c) {
    // g[j] = [w_j] / (k^{δ_j} - 1) for j = 1..s.
    std::vector<Rational> g(s + 1);
    for (std::size_t j = 1; j <= s; ++j) {
      g[j] = Rational(loop_values[j - 1][c], pow(static_cast<unsigned long>(k), f.deltas[j - 1]) - 1);
      g[j].canonicalize();
    }
    // Monomial k^{δ_{j+1} n_{j+1} + ... + δ_s n_s} carries coefficient c_{s-j}.
    for (std::size_t j = 0; j <= s; ++j) {
      const BigInt after_v = pow(static_cast<unsigned long>(k), suffix[j + 1]);
      Rational coef = Rational(fixed_values[j][c] * after_v);
      if (j + 1 <= s) coef += g[j + 1] * after_v;
      if (j >= 1) coef -= g[j] * pow(static_cast<unsigned long>(k), suffix[j]);
      f.coefficients[c][s - j] = coef;
    }
  }
  return f;
}

namespace detail {

/// Exponent of k multiplying c_i: δ_s n_s + ... + δ_{s-i+1} n_{s-i+1}.
inline std::size_t monomial_exponent(const ExpSumForm& f, const Exponents& n, std::size_t i) {
  const std::size_t s = f.star_count();
  std::size_t e = 0;
  for (std::size_t m = s - i + 1; m <= s; ++m) e += f.deltas[m - 1] * n[m - 1];
  return e;
}

inline Tuple to_naturals(const std::vector<Rational>& values) {
  Tuple out;
  out.reserve(values.size());
  for (const auto& v : values) {
    if (!is_integral(v) || v < 0)
      throw std::logic_error("closed form produced " + to_string(v) + ", not a natural number");
    out.push_back(BigInt(v.get_num() / v.get_den()));
  }
  return out;
}

}  // namespace detail

inline Tuple eval_expsum(const ExpSumForm& f, const Exponents& n) {
  if (n.size() != f.star_count())
    throw InputError("expected " + std::to_string(f.star_count()) + " exponents, got " + std::to_string(n.size()));
  const auto k = static_cast<unsigned long>(f.alphabet.base);
  std::vector<Rational> values(f.coefficients.size(), Rational(0));
  for (std::size_t i = 0; i <= f.star_count(); ++i) {
    const BigInt power = pow(k, detail::monomial_exponent(f, n, i));
    for (std::size_t c = 0; c < values.size(); ++c) values[c] += f.coefficients[c][i] * power;
  }
  return detail::to_naturals(values);
}

namespace detail {

/// Enumeration over the nested form
///   V = c_0 + k^{δ_s n_s}(c_1 + k^{δ_{s-1} n_{s-1}}(c_2 + ... + k^{δ_1 n_1} c_s)),
/// choosing n_1 first. With inner value T fixed, the smallest reachable V is
/// c_0 + ... + c_{i-1} + T, and it grows with the exponent at that level when
/// T > 0. Pruning is only trusted while every such partial sum stays
/// nonnegative; otherwise the search reports failure.
class FrontierSearch {
 public:
  FrontierSearch(const ExpSumForm& f, const BigInt& bound) : f_(f), bound_(bound), n_(f.star_count(), 0) {}

  /// False when pruning could not be certified.
  bool run(std::map<Tuple, Exponents, TupleOrder>& out) {
    const std::size_t s = f_.star_count();
    std::vector<Rational> inner(dims());
    for (std::size_t c = 0; c < dims(); ++c) inner[c] = f_.coefficients[c][s];
    out_ = &out;
    return descend(s, inner);
  }

 private:
  std::size_t dims() const { return f_.coefficients.size(); }

  /// `inner` is T_level. Checks certification and returns the lower bound of V
  /// per coordinate, or false if some partial sum is negative.
  bool lower_bound(std::size_t level, const std::vector<Rational>& inner, std::vector<Rational>& low) const {
    low = inner;
    for (std::size_t c = 0; c < dims(); ++c) {
      if (low[c] < 0) return false;
      for (std::size_t j = level; j-- > 0;) {
        low[c] += f_.coefficients[c][j];
        if (low[c] < 0) return false;
      }
    }
    return true;
  }

  bool descend(std::size_t level, const std::vector<Rational>& inner) {
    std::vector<Rational> low;
    if (!lower_bound(level, inner, low)) return false;
    for (const auto& x : low)
      if (x > bound_) return true;
    if (level == 0) {
      Tuple value = to_naturals(inner);
      auto it = out_->find(value);
      if (it == out_->end()) out_->emplace(std::move(value), n_);
      return true;
    }
    // Level `level` multiplies `inner` by k^{δ_m n_m} with m = s - level + 1.
    const std::size_t m = f_.star_count() - level + 1;
    const bool inert = std::all_of(inner.begin(), inner.end(), [](const Rational& x) { return x == 0; });
    const auto k = static_cast<unsigned long>(f_.alphabet.base);
    std::vector<Rational> next(dims());
    for (std::size_t e = 0;; ++e) {
      n_[m - 1] = e;
      const BigInt power = pow(k, f_.deltas[m - 1] * e);
      for (std::size_t c = 0; c < dims(); ++c) next[c] = f_.coefficients[c][level - 1] + inner[c] * power;
      std::vector<Rational> next_low;
      if (!lower_bound(level - 1, next, next_low)) return false;
      bool over = false;
      for (const auto& x : next_low) over |= x > bound_;
      if (over) break;
      if (!descend(level - 1, next)) return false;
      if (inert) break;
    }
    n_[m - 1] = 0;
    return true;
  }

  const ExpSumForm& f_;
  BigInt bound_;
  Exponents n_;
  std::map<Tuple, Exponents, TupleOrder>* out_ = nullptr;
};

/// Exhaustive search over n_i <= ceil(log_k(B+2)) + |v| + Σδ.
inline void box_search(const ExpSumForm& f, const BigInt& bound, std::map<Tuple, Exponents, TupleOrder>& out) {
  std::size_t limit = f.fixed_length;
  for (auto d : f.deltas) limit += d;
  BigInt reach = 1;
  std::size_t digits = 0;
  while (reach < bound + 2) {
    reach *= f.alphabet.base;
    ++digits;
  }
  limit += digits;
  Exponents n(f.star_count(), 0);
  for (;;) {
    std::vector<Rational> values(f.coefficients.size(), Rational(0));
    for (std::size_t i = 0; i <= f.star_count(); ++i) {
      const BigInt power = pow(static_cast<unsigned long>(f.alphabet.base), monomial_exponent(f, n, i));
      for (std::size_t c = 0; c < values.size(); ++c) values[c] += f.coefficients[c][i] * power;
    }
    const bool ok = std::all_of(values.begin(), values.end(),
                                [&](const Rational& v) { return is_integral(v) && v >= 0 && v <= bound; });
    if (ok) {
      Tuple t;
      for (const auto& v : values) t.push_back(BigInt(v.get_num() / v.get_den()));
      out.try_emplace(std::move(t), n);
    }
    std::size_t i = 0;
    while (i < n.size() && n[i] == limit) n[i++] = 0;
    if (i == n.size()) break;
    ++n[i];
  }
}

}  // namespace detail

/// Every value with all coordinates <= bound, with one exponent tuple producing
/// it, ordered by coordinate sum and then lexicographically.
inline std::vector<std::pair<Tuple, Exponents>> enumerate_with_exponents(const ExpSumForm& f, const BigInt& bound) {
  std::map<Tuple, Exponents, TupleOrder> found;
  if (bound >= 0) {
    detail::FrontierSearch search(f, bound);
    if (!search.run(found)) {
      found.clear();
      detail::box_search(f, bound, found);
    }
  }
  return {found.begin(), found.end()};
}

inline std::vector<Tuple> enumerate_values(const ExpSumForm& f, const BigInt& bound) {
  std::vector<Tuple> out;
  for (auto& [value, exps] : enumerate_with_exponents(f, bound)) out.push_back(value);
  return out;
}

/// One closed form per coordinate, e.g. `1 + 6*2^(1*n1)`.
inline std::vector<std::string> format_expsum(const ExpSumForm& f) {
  std::vector<std::string> lines;
  const std::size_t s = f.star_count();
  for (const auto& coefs : f.coefficients) {
    std::string line;
    for (std::size_t i = 0; i <= s; ++i) {
      const Rational& c = coefs[i];
      if (i == 0) {
        line += to_string(c);
      } else {
        line += c < 0 ? " - " : " + ";
        line += to_string(c < 0 ? Rational(-c) : c);
      }
      if (i == 0) continue;
      line += "*" + std::to_string(f.alphabet.base) + "^(";
      for (std::size_t m = s; m >= s - i + 1; --m) {
        if (m != s) line += " + ";
        line += std::to_string(f.deltas[m - 1]) + "*n" + std::to_string(m);
      }
      line += ")";
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace spaut
