#pragma once

/// Bounded intersection of a sparse k-automatic set X with an l-automatic set
/// Y, the counting function π_S, and vanishing-subsum diagnostics for
/// intersection witnesses.
///
/// The sparse side is enumerated (polylogarithmically many values up to the
/// bound) and each candidate is tested against Y's automaton. Results are
/// only claimed complete below the search bound.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "spaut/bounds.hpp"
#include "spaut/decompose.hpp"
#include "spaut/dfa.hpp"
#include "spaut/expsum.hpp"
#include "spaut/sparsity.hpp"

namespace spaut {

/// Signed unit equation d_0 X_0 + ... + d_t X_t - c_0 Y_0 - ... - c_s Y_s = 0 at
/// one witness, X_j powers of l and Y_i powers of k. Terms are indexed with the
/// l-side first (0..t) then the k-side (t+1..t+s+1). Terms with a zero
/// coefficient take no part in the partition.
struct UnitEquationInstance {
  std::vector<Rational> lhs_coeffs;  ///< d_0..d_t
  std::vector<Rational> rhs_coeffs;  ///< c_0..c_s
  std::vector<BigInt> lhs_powers;    ///< X_0..X_t
  std::vector<BigInt> rhs_powers;    ///< Y_0..Y_s
  BigInt value;                      ///< A
  std::vector<std::vector<std::size_t>> partition;  ///< minimal vanishing blocks
  bool every_block_two_sided = false;
  bool rank_bound_holds = false;  ///< r <= (#terms)/2, meaningful when every block is two-sided

  std::size_t term_count() const { return lhs_coeffs.size() + rhs_coeffs.size(); }
  bool is_lhs(std::size_t index) const { return index < lhs_coeffs.size(); }

  Rational signed_term(std::size_t index) const {
    if (is_lhs(index)) return lhs_coeffs[index] * lhs_powers[index];
    const std::size_t i = index - lhs_coeffs.size();
    return -rhs_coeffs[i] * rhs_powers[i];
  }
};

namespace detail {

inline std::vector<BigInt> monomial_powers(const ExpSumForm& f, const Exponents& n) {
  std::vector<BigInt> out;
  for (std::size_t i = 0; i <= f.star_count(); ++i)
    out.push_back(pow(static_cast<unsigned long>(f.alphabet.base), monomial_exponent(f, n, i)));
  return out;
}

/// Splits `indices` (whose signed terms sum to zero) into blocks, each time
/// removing the vanishing subset with fewest elements (ties: smallest mask).
inline std::vector<std::vector<std::size_t>> minimal_vanishing_partition(const std::vector<Rational>& values,
                                                                         std::vector<std::size_t> indices) {
  std::vector<std::vector<std::size_t>> blocks;
  while (!indices.empty()) {
    const std::size_t n = indices.size();
    if (n > 24) throw InputError("too many terms for exhaustive subsum search");
    const std::uint32_t full = (1u << n) - 1;
    std::vector<Rational> sums(std::size_t{1} << n);
    std::uint32_t best = full;
    int best_size = static_cast<int>(n) + 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      const int low = std::countr_zero(mask);
      sums[mask] = sums[mask & (mask - 1)] + values[indices[static_cast<std::size_t>(low)]];
      if (sums[mask] != 0) continue;
      const int size = std::popcount(mask);
      if (size < best_size) {
        best_size = size;
        best = mask;
      }
    }
    if (best_size > static_cast<int>(n)) throw std::logic_error("terms do not sum to zero");
    std::vector<std::size_t> block, rest;
    for (std::size_t i = 0; i < n; ++i) ((best >> i) & 1u ? block : rest).push_back(indices[i]);
    blocks.push_back(std::move(block));
    indices = std::move(rest);
  }
  return blocks;
}

}  // namespace detail

/// Builds the unit equation for fx(nx) = fy(my) (both one-dimensional) and
/// partitions its nonzero terms into minimal vanishing subsums.
inline UnitEquationInstance subsum_diagnostics(const ExpSumForm& fx, const Exponents& nx, const ExpSumForm& fy,
                                               const Exponents& my) {
  if (fx.alphabet.dim != 1 || fy.alphabet.dim != 1) throw InputError("subsum diagnostics need one-dimensional forms");
  const Tuple ax = eval_expsum(fx, nx);
  const Tuple ay = eval_expsum(fy, my);
  if (ax != ay)
    throw InputError("forms differ at the witness: " + to_string(ax[0]) + " != " + to_string(ay[0]));

  UnitEquationInstance eq;
  eq.value = ax[0];
  eq.lhs_coeffs = fy.coefficients[0];
  eq.rhs_coeffs = fx.coefficients[0];
  eq.lhs_powers = detail::monomial_powers(fy, my);
  eq.rhs_powers = detail::monomial_powers(fx, nx);

  std::vector<Rational> values(eq.term_count());
  std::vector<std::size_t> nonzero;
  for (std::size_t i = 0; i < eq.term_count(); ++i) {
    values[i] = eq.signed_term(i);
    if (values[i] != 0) nonzero.push_back(i);
  }
  eq.partition = detail::minimal_vanishing_partition(values, nonzero);
  eq.every_block_two_sided = std::all_of(eq.partition.begin(), eq.partition.end(), [&](const auto& block) {
    const bool lhs = std::any_of(block.begin(), block.end(), [&](std::size_t i) { return eq.is_lhs(i); });
    const bool rhs = std::any_of(block.begin(), block.end(), [&](std::size_t i) { return !eq.is_lhs(i); });
    return lhs && rhs;
  });
  eq.rank_bound_holds = partition_rank_within_bound(static_cast<long>(nonzero.size()), 0,
                                                    static_cast<long>(eq.partition.size()));
  return eq;
}

struct WitnessDiagnostics {
  Tuple witness;
  std::size_t x_term = 0, y_term = 0;
  UnitEquationInstance equation;
};

struct IntersectionResult {
  std::vector<Tuple> witnesses;  ///< ascending by coordinate sum, then lexicographic
  BigInt search_bound;
  std::optional<BigInt> complete_below;
  bool exact_product = false;  ///< same base: computed through the product automaton
  std::optional<BoundValue> paper_bound;
  std::vector<WitnessDiagnostics> diagnostics;
};

struct IntersectOptions {
  bool diagnostics = false;
  BoundOptions bound{};
};

namespace detail {

inline std::optional<std::pair<std::size_t, Exponents>> locate(const std::vector<ExpSumForm>& forms,
                                                               const Tuple& value) {
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (auto& [v, exps] : enumerate_with_exponents(forms[i], value[0]))
      if (v == value) return std::make_pair(i, exps);
  return std::nullopt;
}

}  // namespace detail

/// Witnesses of X ∩ Y with coordinate sum <= bound.
inline IntersectionResult bounded_intersection(const Dfa& x_input, const Dfa& y_input, const BigInt& bound,
                                               const IntersectOptions& options = {}) {
  if (x_input.dim() != y_input.dim()) throw InputError("automata have different dimensions");
  if (bound < 0) throw InputError("search bound must be nonnegative");
  const Dfa x = minimize(reverse_direction(x_input));
  const Dfa y = minimize(reverse_direction(y_input));
  const auto x_report = classify(x, 0);
  if (!x_report.is_sparse) throw NotSparseError(*x_report.witness);
  const bool y_sparse = classify(y, 0).is_sparse;

  IntersectionResult result;
  result.search_bound = bound;
  std::set<Tuple, TupleOrder> found;
  auto collect = [&](const std::vector<SparseTerm>& terms, const Dfa* filter) {
    for (const auto& t : terms)
      for (auto& value : enumerate_values(to_expsum(t), bound))
        if (coordinate_sum(value) <= bound && (!filter || member(*filter, value))) found.insert(std::move(value));
  };

  const Dfa x_canonical = restrict_to_canonical(x);
  if (x.base() == y.base()) {
    result.exact_product = true;
    collect(decompose(minimize(product(x_canonical, y))), nullptr);
  } else {
    collect(decompose(x_canonical), &y);
  }
  for (const auto& w : found)
    if (!member(x, w) || !member(y, w)) throw std::logic_error("witness " + format_tuple(w) + " failed membership");
  result.witnesses.assign(found.begin(), found.end());
  result.complete_below = bound;

  if (y_sparse && multiplicatively_independent(x.base(), y.base()))
    result.paper_bound = intersection_bound(static_cast<long>(x.num_states()), static_cast<long>(y.num_states()),
                                            x.dim(), x.base(), y.base(), options.bound);

  if (options.diagnostics && x.dim() == 1 && y_sparse) {
    std::vector<ExpSumForm> x_forms, y_forms;
    for (const auto& t : decompose(x_canonical)) x_forms.push_back(to_expsum(t));
    for (const auto& t : decompose(restrict_to_canonical(y))) y_forms.push_back(to_expsum(t));
    for (const auto& w : result.witnesses) {
      const auto xs = detail::locate(x_forms, w);
      const auto ys = detail::locate(y_forms, w);
      if (!xs || !ys) throw std::logic_error("witness " + format_tuple(w) + " not produced by any term");
      result.diagnostics.push_back(
          {w, xs->first, ys->first, subsum_diagnostics(x_forms[xs->first], xs->second, y_forms[ys->first], ys->second)});
    }
  }
  return result;
}

/// |{t in S : t_1 + ... + t_d <= x}| by a digit recursion over the automaton.
///
/// Tuples are read as length-L words (L = digits of x) with leading all-zeros
/// symbols skipped before the automaton starts. The slack D = x_prefix -
/// sum_prefix evolves as D' = kD + x_digit - Σdigits; once negative it stays
/// negative and once >= d it stays >= d, so it is clamped to [0, d].
inline BigInt pi_count(const Dfa& input, const BigInt& x) {
  if (x < 0) return 0;
  const Dfa a = reverse_direction(input);
  const int k = a.base();
  const int d = a.dim();
  std::vector<int> digits;
  for (BigInt rest = x; rest > 0; rest /= k) digits.push_back(static_cast<int>(BigInt(rest % k).get_si()));
  std::reverse(digits.begin(), digits.end());

  const std::size_t pre = a.num_states();  // before the first nonzero symbol
  const std::size_t slack_levels = static_cast<std::size_t>(d) + 1;
  auto index = [&](std::size_t state, int slack) { return state * slack_levels + static_cast<std::size_t>(slack); };
  std::vector<BigInt> current((pre + 1) * slack_levels, BigInt(0)), next(current.size());
  current[index(pre, 0)] = 1;

  std::vector<int> digit_sums(a.num_symbols());
  for (Symbol s = 0; s < a.num_symbols(); ++s) {
    int sum = 0;
    for (int c = 0; c < d; ++c) sum += a.alphabet().digit(s, c);
    digit_sums[s] = sum;
  }

  for (int xd : digits) {
    for (auto& v : next) v = 0;
    for (std::size_t state = 0; state <= pre; ++state)
      for (int slack = 0; slack <= d; ++slack) {
        const BigInt& ways = current[index(state, slack)];
        if (ways == 0) continue;
        for (Symbol s = 0; s < a.num_symbols(); ++s) {
          int updated = k * slack + xd - digit_sums[s];
          if (updated < 0) continue;
          updated = std::min(updated, d);
          std::size_t target;
          if (state == pre) target = s == 0 ? pre : a.next(a.initial(), s);
          else target = a.next(static_cast<State>(state), s);
          next[index(target, updated)] += ways;
        }
      }
    current.swap(next);
  }

  BigInt total = 0;
  for (std::size_t state = 0; state <= pre; ++state) {
    const bool accepted = state == pre ? a.is_accepting(a.initial()) : a.is_accepting(static_cast<State>(state));
    if (!accepted) continue;
    for (int slack = 0; slack <= d; ++slack) total += current[index(state, slack)];
  }
  return total;
}

inline void write_intersection(std::ostream& out, const IntersectionResult& r) {
  out << "bound=" << r.search_bound.get_str()
      << " complete_below=" << (r.complete_below ? r.complete_below->get_str() : std::string("unknown"))
      << " paper_bound_log10=";
  if (r.paper_bound) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.6f", r.paper_bound->log10);
    out << buffer;
  } else {
    out << "none";
  }
  out << '\n';
  for (const auto& w : r.witnesses) {
    out << format_tuple(w) << '\n';
    for (const auto& diag : r.diagnostics) {
      if (diag.witness != w) continue;
      const auto& eq = diag.equation;
      out << "# A=" << eq.value.get_str() << " terms:";
      for (std::size_t i = 0; i < eq.term_count(); ++i) out << ' ' << to_string(eq.signed_term(i));
      out << " blocks:";
      for (const auto& block : eq.partition) {
        out << " {";
        for (std::size_t j = 0; j < block.size(); ++j) out << (j ? "," : "") << block[j];
        out << '}';
      }
      out << " r=" << eq.partition.size() << '\n';
    }
  }
}

}  // namespace spaut
