#pragma once

/// Decomposition of a sparse language into a finite union of simple sparse
/// terms v_0 w_1* v_1 ... w_s* v_s, with the size guarantees
///
///   #terms            <= (|Q|-1)! (N^{|Q|-1} + ... + N + 1)
///   |w_1|+...+|w_s|   <= |Q| - 1
///   |v_0|+...+|v_s|   <= N (|Q| - 1)
///
/// where |Q| counts the states of the trimmed minimal automaton (dead state
/// included) and N = k^d. Terms may overlap.

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

#include "spaut/detail/decompose_core.hpp"
#include "spaut/dfa.hpp"
#include "spaut/errors.hpp"
#include "spaut/sparse_term.hpp"
#include "spaut/sparsity.hpp"

namespace spaut {

/// Thrown for non-sparse input; carries the two-cycle witness.
class NotSparseError : public DomainError {
 public:
  explicit NotSparseError(SparsityWitness w)
      : DomainError(describe(w)), witness_(std::move(w)) {}

  const SparsityWitness& witness() const noexcept { return witness_; }

 private:
  static std::string describe(const SparsityWitness& w) {
    std::ostringstream out;
    out << "language is not sparse: state " << w.state << " has two first-return words of lengths "
        << w.first_cycle.length() << " and " << w.second_cycle.length();
    return out.str();
  }

  SparsityWitness witness_;
};

/// (|Q|-1)! (N^{|Q|-1} + ... + 1).
inline BigInt decomposition_count_bound(std::size_t states, std::size_t alphabet_size) {
  if (states == 0) return 0;
  BigInt factorial = 1;
  for (std::size_t i = 2; i < states; ++i) factorial *= static_cast<unsigned long>(i);
  BigInt geometric = 0, power = 1;
  for (std::size_t i = 0; i < states; ++i) {
    geometric += power;
    power *= static_cast<unsigned long>(alphabet_size);
  }
  return factorial * geometric;
}

/// Checks the count and length guarantees; throws std::logic_error on violation.
inline void check_decomposition_bounds(const std::vector<SparseTerm>& terms, std::size_t states,
                                       std::size_t alphabet_size) {
  if (BigInt(static_cast<unsigned long>(terms.size())) > decomposition_count_bound(states, alphabet_size))
    throw std::logic_error("decomposition exceeds the term count bound");
  const std::size_t q = states ? states - 1 : 0;
  for (const auto& t : terms) {
    if (t.loop_length() > q) throw std::logic_error("decomposition term exceeds the loop length bound");
    if (t.fixed_length() > alphabet_size * q)
      throw std::logic_error("decomposition term exceeds the fixed length bound");
  }
}

/// Terms of L(a) in msd-first word order (lsd-first input is normalized first).
inline std::vector<SparseTerm> decompose(const Dfa& input) {
  const Dfa a = trim(minimize(reverse_direction(input)));
  const auto report = classify(a, 0);
  if (!report.is_sparse) throw NotSparseError(*report.witness);
  auto terms = detail::Decomposer(a).run();
  check_decomposition_bounds(terms, a.num_states(), a.alphabet().size());
  return terms;
}

/// ε-NFA fragment for one term appended after state `from`; returns the end state.
inline State append_term(Nfa& n, State from, const SparseTerm& t) {
  auto chain = [&](State q, const DigitWord& w) {
    for (Symbol s : w.symbols) {
      const State next = n.add_state();
      n.add_edge(q, s, next);
      q = next;
    }
    return q;
  };
  State q = chain(from, t.fixed.front());
  for (std::size_t i = 0; i < t.loops.size(); ++i) {
    // Loop anchored at a fresh state so consecutive stars do not interleave.
    const State anchor = n.add_state();
    n.add_epsilon(q, anchor);
    State x = anchor;
    const auto& w = t.loops[i].symbols;
    for (std::size_t j = 0; j + 1 < w.size(); ++j) {
      const State next = n.add_state();
      n.add_edge(x, w[j], next);
      x = next;
    }
    n.add_edge(x, w.back(), anchor);
    const State exit = n.add_state();
    n.add_epsilon(anchor, exit);
    q = chain(exit, t.fixed[i + 1]);
  }
  return q;
}

inline Dfa terms_to_dfa(const std::vector<SparseTerm>& terms, Alphabet alphabet) {
  Nfa n(alphabet, 1);
  n.initial = {0};
  for (const auto& t : terms) {
    t.validate();
    if (t.alphabet != alphabet) throw InputError("terms use different alphabets");
    const State end = append_term(n, 0, t);
    n.accepting[end] = 1;
  }
  return minimize(determinize(n));
}

inline Dfa term_to_dfa(const SparseTerm& t) { return terms_to_dfa({t}, t.alphabet); }

/// Compares acceptance by `a` with membership in the union of `terms` for
/// every word of length <= max_length.
inline bool verify_decomposition(const Dfa& input, const std::vector<SparseTerm>& terms,
                                 std::size_t max_length) {
  if (max_length < 1) throw InputError("verification length must be at least 1");
  const Dfa a = minimize(reverse_direction(input));
  const Dfa u = terms_to_dfa(terms, a.alphabet());
  // Breadth-first over state pairs up to the length limit; a pair with
  // differing acceptance is a counterexample.
  std::map<std::pair<State, State>, std::size_t> depth;
  std::vector<std::pair<State, State>> frontier{{a.initial(), u.initial()}};
  depth[frontier[0]] = 0;
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    const auto [p, q] = frontier[i];
    if (a.is_accepting(p) != u.is_accepting(q)) return false;
    const std::size_t d = depth[frontier[i]];
    if (d == max_length) continue;
    for (Symbol s = 0; s < a.num_symbols(); ++s) {
      const std::pair<State, State> t{a.next(p, s), u.next(q, s)};
      if (depth.try_emplace(t, d + 1).second) frontier.push_back(t);
    }
  }
  return true;
}

/// Coordinatewise projection of every segment; `coords` are 1-based.
inline SparseTerm project_term(const SparseTerm& t, std::vector<int> coords) {
  if (coords.empty()) throw InputError("projection needs at least one coordinate");
  std::sort(coords.begin(), coords.end());
  coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
  for (int& c : coords) {
    if (c < 1 || c > t.alphabet.dim)
      throw InputError("coordinate " + std::to_string(c) + " outside 1.." + std::to_string(t.alphabet.dim));
    --c;
  }
  const Alphabet target{t.alphabet.base, static_cast<int>(coords.size())};
  auto map_word = [&](const DigitWord& w) {
    DigitWord out{target, {}};
    for (Symbol s : w.symbols) out.symbols.push_back(t.alphabet.project(s, coords));
    return out;
  };
  SparseTerm out{target, {}, {}};
  for (const auto& v : t.fixed) out.fixed.push_back(map_word(v));
  for (const auto& w : t.loops) out.loops.push_back(map_word(w));
  return out;
}

}  // namespace spaut
