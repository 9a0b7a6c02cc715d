#pragma once

/// Sparsity of the word language of an automaton.
///
/// A regular language is sparse iff in its trimmed minimal automaton every
/// strongly connected component that contains a cycle is one simple cycle,
/// i.e. each of its states has exactly one outgoing edge staying inside it.
/// A non-sparse verdict comes with a state and two distinct first-return words.

#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "spaut/detail/decompose_core.hpp"
#include "spaut/detail/graph.hpp"
#include "spaut/dfa.hpp"

namespace spaut {

struct SparsityWitness {
  State state = 0;  ///< in the trimmed minimal automaton
  DigitWord prefix;  ///< initial state -> state
  DigitWord first_cycle;
  DigitWord second_cycle;
  DigitWord suffix;  ///< state -> accepting state
};

struct SparsityReport {
  bool is_sparse = false;
  std::optional<SparsityWitness> witness;  ///< present iff !is_sparse
  std::size_t poly_degree = 0;             ///< max stars along any branch (sparse only)
  std::vector<BigInt> counts;              ///< cumulative f_L(0..n_max)
  /// Sparse only: counts(n) <= count_constant * (n+1)^poly_degree.
  /// It is the number of terms in the decomposition.
  BigInt count_constant = 0;
  /// Non-sparse only: counts(n) >= alpha^n for n in [n_max/2, n_max], certified
  /// by the witness words prefix {first_cycle, second_cycle}* suffix.
  double alpha = 1.0;
  std::size_t minimal_states = 0;  ///< trimmed minimal automaton, dead state included
};

/// Number of accepted words of each exact length 0..n_max.
inline std::vector<BigInt> count_words(const Dfa& a, std::size_t n_max) {
  std::vector<BigInt> current(a.num_states(), BigInt(0)), next(a.num_states());
  current[a.initial()] = 1;
  std::vector<BigInt> out;
  out.reserve(n_max + 1);
  for (std::size_t len = 0;; ++len) {
    BigInt total = 0;
    for (State q = 0; q < a.num_states(); ++q)
      if (a.is_accepting(q)) total += current[q];
    out.push_back(total);
    if (len == n_max) break;
    for (auto& x : next) x = 0;
    for (State q = 0; q < a.num_states(); ++q) {
      if (current[q] == 0) continue;
      for (Symbol s = 0; s < a.num_symbols(); ++s) next[a.next(q, s)] += current[q];
    }
    current.swap(next);
  }
  return out;
}

inline std::vector<BigInt> cumulative(const std::vector<BigInt>& per_length) {
  std::vector<BigInt> out(per_length.size());
  BigInt running = 0;
  for (std::size_t i = 0; i < per_length.size(); ++i) {
    running += per_length[i];
    out[i] = running;
  }
  return out;
}

namespace detail {

/// Words over the prefix code {c1, c2} of total length <= m, for m = 0..limit.
inline std::vector<BigInt> code_sequence_counts(std::size_t len1, std::size_t len2, std::size_t limit) {
  std::vector<BigInt> exact(limit + 1, BigInt(0));
  exact[0] = 1;
  for (std::size_t j = 1; j <= limit; ++j) {
    if (j >= len1) exact[j] += exact[j - len1];
    if (j >= len2) exact[j] += exact[j - len2];
  }
  return cumulative(exact);
}

inline double witness_alpha(const SparsityWitness& w, std::size_t lo, std::size_t hi) {
  const std::size_t offset = w.prefix.length() + w.suffix.length();
  if (hi < offset) return 1.0;
  const auto h = code_sequence_counts(w.first_cycle.length(), w.second_cycle.length(), hi - offset);
  double alpha = std::numeric_limits<double>::infinity();
  for (std::size_t n = std::max<std::size_t>(lo, 1); n <= hi; ++n) {
    if (n < offset) return 1.0;
    const double g = log10(h[n - offset]);
    alpha = std::min(alpha, std::pow(10.0, g / static_cast<double>(n)));
  }
  // Rounded down so that h(n) >= alpha^n still holds after floating-point evaluation.
  return std::max(alpha * (1.0 - 1e-9), 1.0);
}

}  // namespace detail

inline SparsityReport classify(const Dfa& input, std::size_t n_max = 20) {
  const Dfa a = trim(minimize(input));
  SparsityReport report;
  report.minimal_states = a.num_states();
  report.counts = cumulative(count_words(a, n_max));

  const auto useful = useful_states(a);
  const auto comp = detail::scc_ids(a, useful);
  std::size_t comps = 0;
  for (State q = 0; q < a.num_states(); ++q)
    if (useful[q]) comps = std::max<std::size_t>(comps, comp[q] + 1);

  std::vector<std::size_t> comp_size(comps, 0);
  std::vector<char> cyclic(comps, 0);
  for (State q = 0; q < a.num_states(); ++q)
    if (useful[q]) ++comp_size[comp[q]];
  std::optional<State> bad;
  for (State q = 0; q < a.num_states() && !bad; ++q) {
    if (!useful[q]) continue;
    std::size_t inside = 0;
    for (Symbol s = 0; s < a.num_symbols(); ++s) {
      const State t = a.next(q, s);
      if (useful[t] && comp[t] == comp[q]) ++inside;
    }
    if (inside > 0) cyclic[comp[q]] = 1;
    if (inside > 1) bad = q;
  }

  if (bad) {
    const State q = *bad;
    SparsityWitness w;
    w.state = q;
    std::vector<char> in_comp(a.num_states(), 0);
    for (State p = 0; p < a.num_states(); ++p) in_comp[p] = useful[p] && comp[p] == comp[q];
    std::vector<Symbol> path;
    DigitWord* cycles[2] = {&w.first_cycle, &w.second_cycle};
    int found = 0;
    for (Symbol s = 0; s < a.num_symbols() && found < 2; ++s) {
      const State t = a.next(q, s);
      if (!in_comp[t]) continue;
      detail::shortest_path(a, t, in_comp, [&](State x) { return x == q; }, path);
      path.insert(path.begin(), s);
      *cycles[found++] = DigitWord{a.alphabet(), path};
    }
    detail::shortest_path(a, a.initial(), useful, [&](State x) { return x == q; }, path);
    w.prefix = DigitWord{a.alphabet(), path};
    detail::shortest_path(a, q, useful, [&](State x) { return a.is_accepting(x); }, path);
    w.suffix = DigitWord{a.alphabet(), path};
    report.alpha = detail::witness_alpha(w, n_max / 2, n_max);
    report.witness = std::move(w);
    return report;
  }

  report.is_sparse = true;
  if (useful[a.initial()]) {
    // Longest chain of cyclic components; ids are reverse topological.
    std::vector<std::size_t> best(comps, 0);
    for (std::size_t c = 0; c < comps; ++c) {
      std::size_t succ = 0;
      for (State q = 0; q < a.num_states(); ++q) {
        if (!useful[q] || comp[q] != c) continue;
        for (Symbol s = 0; s < a.num_symbols(); ++s) {
          const State t = a.next(q, s);
          if (useful[t] && comp[t] != c) succ = std::max(succ, best[comp[t]]);
        }
      }
      best[c] = succ + (cyclic[c] ? 1 : 0);
    }
    report.poly_degree = best[comp[a.initial()]];
  }
  report.count_constant = static_cast<unsigned long>(detail::Decomposer(a).run().size());
  return report;
}

enum class GrowthKind { polynomial, exponential };

struct GrowthEstimate {
  GrowthKind kind = GrowthKind::polynomial;
  double degree = 0.0;  ///< polynomial: log-log slope of the cumulative counts
  double ratio = 1.0;   ///< exponential: per-length growth ratio
};

/// Numerical annotation of the structural verdict, fitted on lengths
/// n_max/2..n_max.
inline GrowthEstimate growth_estimate(const Dfa& a, std::size_t n_max) {
  if (n_max < 8) throw InputError("growth estimation needs n_max >= 8");
  const auto report = classify(a, n_max);
  const std::size_t lo = n_max / 2;
  GrowthEstimate est;
  if (report.is_sparse) {
    est.kind = GrowthKind::polynomial;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t points = 0;
    for (std::size_t n = lo; n <= n_max; ++n) {
      if (report.counts[n] <= 0) continue;
      const double x = std::log(static_cast<double>(n + 1));
      const double y = log10(report.counts[n]) * std::log(10.0);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
      ++points;
    }
    if (points >= 2) {
      const double p = static_cast<double>(points);
      est.degree = (p * sxy - sx * sy) / (p * sxx - sx * sx);
    }
    return est;
  }
  est.kind = GrowthKind::exponential;
  const auto per_length = count_words(a, n_max);
  if (per_length[lo] > 0 && per_length[n_max] > 0) {
    est.ratio = std::pow(10.0, (log10(per_length[n_max]) - log10(per_length[lo])) /
                                   static_cast<double>(n_max - lo));
  } else {
    // Lengths with no words at all (periodic languages): use the cumulative view.
    std::size_t first = lo;
    while (first < n_max && report.counts[first] == 0) ++first;
    if (first < n_max)
      est.ratio = std::pow(10.0, (log10(report.counts[n_max]) - log10(report.counts[first])) /
                                     static_cast<double>(n_max - first));
  }
  return est;
}

}  // namespace spaut
