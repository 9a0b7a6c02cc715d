#pragma once

/// Deterministic automata over Σ_k^d and the structural operations the rest
/// of the library is built on: trimming, minimization, direction reversal,
/// products and coordinate projection.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "spaut/digit_word.hpp"
#include "spaut/errors.hpp"
#include "spaut/numeric.hpp"

namespace spaut {

using State = std::uint32_t;

inline constexpr State kNoState = std::numeric_limits<State>::max();

/// Reading order of input words. msd_first is canonical throughout the library.
enum class Direction { msd_first, lsd_first };

class Dfa {
 public:
  Dfa() = default;

  /// All transitions start unset; validate() rejects the automaton until every
  /// (state, symbol) pair has a target.
  Dfa(Alphabet alphabet, std::size_t num_states, State initial = 0,
      Direction direction = Direction::msd_first)
      : alphabet_(alphabet),
        num_states_(num_states),
        initial_(initial),
        direction_(direction),
        accepting_(num_states, 0),
        delta_(num_states * alphabet.size(), kNoState) {
    alphabet_.validate();
    if (num_states == 0) throw InputError("an automaton needs at least one state");
  }

  const Alphabet& alphabet() const { return alphabet_; }
  int base() const { return alphabet_.base; }
  int dim() const { return alphabet_.dim; }
  std::size_t num_states() const { return num_states_; }
  std::size_t num_symbols() const { return delta_.size() / (num_states_ ? num_states_ : 1); }
  State initial() const { return initial_; }
  Direction direction() const { return direction_; }

  bool is_accepting(State q) const { return accepting_[q] != 0; }
  State next(State q, Symbol s) const { return delta_[q * num_symbols() + s]; }

  std::vector<State> accepting_states() const {
    std::vector<State> out;
    for (State q = 0; q < num_states_; ++q)
      if (is_accepting(q)) out.push_back(q);
    return out;
  }

  void set_initial(State q) { initial_ = q; }
  void set_direction(Direction d) { direction_ = d; }
  void set_accepting(State q, bool accepting = true) { accepting_.at(q) = accepting ? 1 : 0; }
  void set_transition(State from, Symbol symbol, State to) {
    if (from >= num_states_ || to >= num_states_ || symbol >= num_symbols())
      throw InputError("transition out of range");
    delta_[from * num_symbols() + symbol] = to;
  }

  /// Routes every unset transition to `target`.
  void complete_with(State target) {
    for (auto& t : delta_)
      if (t == kNoState) t = target;
  }

  void validate() const {
    alphabet_.validate();
    if (initial_ >= num_states_) throw InputError("initial state out of range");
    for (std::size_t i = 0; i < delta_.size(); ++i)
      if (delta_[i] == kNoState)
        throw InputError("missing transition from state " + std::to_string(i / num_symbols()) +
                         " on symbol " + std::to_string(i % num_symbols()));
  }

  bool operator==(const Dfa&) const = default;

 private:
  Alphabet alphabet_{};
  std::size_t num_states_ = 0;
  State initial_ = 0;
  Direction direction_ = Direction::msd_first;
  std::vector<char> accepting_;
  std::vector<State> delta_;
};

/// Runs the symbols in the given order (no direction handling).
inline State run(const Dfa& a, State from, std::span<const Symbol> symbols) {
  State q = from;
  for (Symbol s : symbols) q = a.next(q, s);
  return q;
}

inline bool accepts(const Dfa& a, const DigitWord& w) {
  if (w.alphabet != a.alphabet())
    throw InputError("word over base " + std::to_string(w.alphabet.base) + " dim " +
                     std::to_string(w.alphabet.dim) + " does not match automaton base " +
                     std::to_string(a.base()) + " dim " + std::to_string(a.dim()));
  State q = a.initial();
  if (a.direction() == Direction::msd_first) {
    for (Symbol s : w.symbols) q = a.next(q, s);
  } else {
    for (auto it = w.symbols.rbegin(); it != w.symbols.rend(); ++it) q = a.next(q, *it);
  }
  return a.is_accepting(q);
}

/// Membership of a tuple: its canonical expansion is fed in the automaton's direction.
inline bool member(const Dfa& a, const Tuple& t) {
  if (t.size() != static_cast<std::size_t>(a.dim()))
    throw InputError("tuple has " + std::to_string(t.size()) + " coordinates, automaton expects " +
                     std::to_string(a.dim()));
  return accepts(a, expand(t, a.base()));
}

inline std::vector<char> reachable_states(const Dfa& a) {
  std::vector<char> seen(a.num_states(), 0);
  std::vector<State> stack{a.initial()};
  seen[a.initial()] = 1;
  while (!stack.empty()) {
    const State q = stack.back();
    stack.pop_back();
    for (Symbol s = 0; s < a.num_symbols(); ++s) {
      const State t = a.next(q, s);
      if (!seen[t]) {
        seen[t] = 1;
        stack.push_back(t);
      }
    }
  }
  return seen;
}

inline std::vector<char> coreachable_states(const Dfa& a) {
  std::vector<std::vector<State>> preds(a.num_states());
  for (State q = 0; q < a.num_states(); ++q)
    for (Symbol s = 0; s < a.num_symbols(); ++s) preds[a.next(q, s)].push_back(q);
  std::vector<char> seen(a.num_states(), 0);
  std::vector<State> stack;
  for (State q = 0; q < a.num_states(); ++q)
    if (a.is_accepting(q)) {
      seen[q] = 1;
      stack.push_back(q);
    }
  while (!stack.empty()) {
    const State q = stack.back();
    stack.pop_back();
    for (State p : preds[q])
      if (!seen[p]) {
        seen[p] = 1;
        stack.push_back(p);
      }
  }
  return seen;
}

/// States that are reachable and can still reach an accepting state.
inline std::vector<char> useful_states(const Dfa& a) {
  auto useful = reachable_states(a);
  const auto co = coreachable_states(a);
  for (std::size_t q = 0; q < useful.size(); ++q) useful[q] = useful[q] && co[q];
  return useful;
}

inline bool is_empty(const Dfa& a) { return !useful_states(a)[a.initial()]; }

/// Renumbers the reachable part breadth-first from the initial state, visiting
/// symbols in increasing order. Isomorphic automata map to equal values.
inline Dfa canonical(const Dfa& a) {
  std::vector<State> id(a.num_states(), kNoState);
  std::vector<State> order{a.initial()};
  id[a.initial()] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Symbol s = 0; s < a.num_symbols(); ++s) {
      const State t = a.next(order[i], s);
      if (id[t] == kNoState) {
        id[t] = static_cast<State>(order.size());
        order.push_back(t);
      }
    }
  Dfa out(a.alphabet(), order.size(), 0, a.direction());
  for (State q = 0; q < order.size(); ++q) {
    out.set_accepting(q, a.is_accepting(order[q]));
    for (Symbol s = 0; s < a.num_symbols(); ++s) out.set_transition(q, s, id[a.next(order[q], s)]);
  }
  return out;
}

inline bool isomorphic(const Dfa& a, const Dfa& b) { return canonical(a) == canonical(b); }

/// Restricts to useful states; all other moves go to a single dead state,
/// placed last. An empty language yields the one-state dead automaton.
inline Dfa trim(const Dfa& a) {
  const auto useful = useful_states(a);
  if (!useful[a.initial()]) {
    Dfa dead(a.alphabet(), 1, 0, a.direction());
    dead.complete_with(0);
    return dead;
  }
  std::vector<State> id(a.num_states(), kNoState);
  State count = 0;
  for (State q = 0; q < a.num_states(); ++q)
    if (useful[q]) id[q] = count++;
  bool needs_dead = false;
  for (State q = 0; q < a.num_states(); ++q)
    if (useful[q])
      for (Symbol s = 0; s < a.num_symbols(); ++s) needs_dead |= !useful[a.next(q, s)];

  Dfa out(a.alphabet(), count + (needs_dead ? 1 : 0), id[a.initial()], a.direction());
  const State dead = count;
  for (State q = 0; q < a.num_states(); ++q) {
    if (!useful[q]) continue;
    out.set_accepting(id[q], a.is_accepting(q));
    for (Symbol s = 0; s < a.num_symbols(); ++s) {
      const State t = a.next(q, s);
      out.set_transition(id[q], s, useful[t] ? id[t] : dead);
    }
  }
  if (needs_dead) out.complete_with(dead);
  return out;
}

/// Minimal DFA by partition refinement, in canonical state order.
inline Dfa minimize(const Dfa& a) {
  const auto reach = reachable_states(a);
  std::vector<State> states;
  for (State q = 0; q < a.num_states(); ++q)
    if (reach[q]) states.push_back(q);

  std::vector<State> block(a.num_states(), kNoState);
  for (State q : states) block[q] = a.is_accepting(q) ? 1 : 0;
  std::size_t blocks = 0;
  for (;;) {
    std::map<std::vector<State>, State> ids;
    std::vector<State> next(a.num_states(), kNoState);
    std::vector<State> signature(a.num_symbols() + 1);
    for (State q : states) {
      signature[0] = block[q];
      for (Symbol s = 0; s < a.num_symbols(); ++s) signature[s + 1] = block[a.next(q, s)];
      auto [it, inserted] = ids.try_emplace(signature, static_cast<State>(ids.size()));
      next[q] = it->second;
    }
    block.swap(next);
    if (ids.size() == blocks) break;
    blocks = ids.size();
  }

  Dfa quotient(a.alphabet(), blocks, block[a.initial()], a.direction());
  for (State q : states) {
    quotient.set_accepting(block[q], a.is_accepting(q));
    for (Symbol s = 0; s < a.num_symbols(); ++s) quotient.set_transition(block[q], s, block[a.next(q, s)]);
  }
  return canonical(quotient);
}

/// Nondeterministic automaton used as an intermediate for reversal,
/// projection and term construction.
struct Nfa {
  Alphabet alphabet;
  std::size_t num_states = 0;
  std::vector<State> initial;
  std::vector<char> accepting;
  std::vector<std::vector<std::pair<Symbol, State>>> edges;
  std::vector<std::vector<State>> epsilon;

  explicit Nfa(Alphabet a, std::size_t n = 0) : alphabet(a) { resize(n); }

  State add_state(bool accept = false) {
    resize(num_states + 1);
    accepting.back() = accept ? 1 : 0;
    return static_cast<State>(num_states - 1);
  }

  void resize(std::size_t n) {
    num_states = n;
    accepting.resize(n, 0);
    edges.resize(n);
    epsilon.resize(n);
  }

  void add_edge(State from, Symbol s, State to) { edges[from].emplace_back(s, to); }
  void add_epsilon(State from, State to) { epsilon[from].push_back(to); }

  /// Sorted ε-closure of a set of states.
  std::vector<State> closure(std::vector<State> set) const {
    std::vector<char> in(num_states, 0);
    for (State q : set) in[q] = 1;
    for (std::size_t i = 0; i < set.size(); ++i)
      for (State t : epsilon[set[i]])
        if (!in[t]) {
          in[t] = 1;
          set.push_back(t);
        }
    std::sort(set.begin(), set.end());
    return set;
  }
};

/// Subset construction. Only reachable subsets are built; the empty subset
/// becomes an ordinary (dead) state when reached.
inline Dfa determinize(const Nfa& n, Direction direction = Direction::msd_first) {
  const std::size_t symbols = n.alphabet.size();
  std::map<std::vector<State>, State> ids;
  std::vector<std::vector<State>> subsets;
  std::vector<std::vector<State>> table;  // table[id][symbol]

  auto intern = [&](std::vector<State> set) {
    auto [it, inserted] = ids.try_emplace(set, static_cast<State>(subsets.size()));
    if (inserted) subsets.push_back(std::move(set));
    return it->second;
  };

  intern(n.closure(n.initial));
  std::vector<std::vector<State>> buckets(symbols);
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (auto& b : buckets) b.clear();
    for (State q : subsets[i])
      for (auto [s, t] : n.edges[q]) buckets[s].push_back(t);
    std::vector<State> row(symbols);
    for (Symbol s = 0; s < symbols; ++s) {
      auto target = n.closure(std::move(buckets[s]));
      target.erase(std::unique(target.begin(), target.end()), target.end());
      buckets[s] = {};
      row[s] = intern(std::move(target));
    }
    table.push_back(std::move(row));
  }

  Dfa out(n.alphabet, subsets.size(), 0, direction);
  for (State id = 0; id < subsets.size(); ++id) {
    const bool acc = std::any_of(subsets[id].begin(), subsets[id].end(),
                                 [&](State q) { return n.accepting[q] != 0; });
    out.set_accepting(id, acc);
    for (Symbol s = 0; s < symbols; ++s) out.set_transition(id, s, table[id][s]);
  }
  return out;
}

inline Dfa universal_dfa(Alphabet alphabet, Direction direction = Direction::msd_first) {
  Dfa a(alphabet, 1, 0, direction);
  a.set_accepting(0);
  a.complete_with(0);
  return a;
}

inline Dfa empty_dfa(Alphabet alphabet, Direction direction = Direction::msd_first) {
  Dfa a(alphabet, 1, 0, direction);
  a.complete_with(0);
  return a;
}

/// Automaton (minimized) for the reversed word language, with the opposite
/// reading direction flag, so tuple membership is unchanged.
inline Dfa reverse_language(const Dfa& a) {
  Nfa n(a.alphabet(), a.num_states());
  n.initial = a.accepting_states();
  n.accepting[a.initial()] = 1;
  for (State q = 0; q < a.num_states(); ++q)
    for (Symbol s = 0; s < a.num_symbols(); ++s) n.add_edge(a.next(q, s), s, q);
  const Direction flipped =
      a.direction() == Direction::msd_first ? Direction::lsd_first : Direction::msd_first;
  return minimize(determinize(n, flipped));
}

/// Normalizes to msd-first; msd-first input is returned unchanged.
inline Dfa reverse_direction(const Dfa& a) {
  if (a.direction() == Direction::msd_first) return a;
  return reverse_language(a);
}

enum class ProductMode { intersection, union_, difference };

inline Dfa product(const Dfa& a, const Dfa& b, ProductMode mode = ProductMode::intersection) {
  if (a.alphabet() != b.alphabet()) throw InputError("product of automata over different alphabets");
  if (a.direction() != b.direction()) throw InputError("product of automata with different directions");
  std::map<std::pair<State, State>, State> ids;
  std::vector<std::pair<State, State>> pairs{{a.initial(), b.initial()}};
  ids[pairs[0]] = 0;
  std::vector<std::vector<State>> table;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    std::vector<State> row(a.num_symbols());
    for (Symbol s = 0; s < a.num_symbols(); ++s) {
      const std::pair<State, State> t{a.next(pairs[i].first, s), b.next(pairs[i].second, s)};
      auto [it, inserted] = ids.try_emplace(t, static_cast<State>(pairs.size()));
      if (inserted) pairs.push_back(t);
      row[s] = it->second;
    }
    table.push_back(std::move(row));
  }
  Dfa out(a.alphabet(), pairs.size(), 0, a.direction());
  for (State q = 0; q < pairs.size(); ++q) {
    const bool x = a.is_accepting(pairs[q].first);
    const bool y = b.is_accepting(pairs[q].second);
    bool acc = false;
    switch (mode) {
      case ProductMode::intersection: acc = x && y; break;
      case ProductMode::union_: acc = x || y; break;
      case ProductMode::difference: acc = x && !y; break;
    }
    out.set_accepting(q, acc);
    for (Symbol s = 0; s < a.num_symbols(); ++s) out.set_transition(q, s, table[q][s]);
  }
  return out;
}

/// msd-first automaton for the canonical expansions: the empty word and every
/// word whose first symbol is not all zeros.
inline Dfa canonical_words(Alphabet alphabet) {
  Dfa a(alphabet, 3, 0);
  a.set_accepting(0);
  a.set_accepting(1);
  a.set_transition(0, 0, 2);
  for (Symbol s = 1; s < alphabet.size(); ++s) a.set_transition(0, s, 1);
  for (Symbol s = 0; s < alphabet.size(); ++s) {
    a.set_transition(1, s, 1);
    a.set_transition(2, s, 2);
  }
  return a;
}

/// Restricts the word language to canonical expansions; the tuple set is unchanged.
inline Dfa restrict_to_canonical(const Dfa& a) {
  const Dfa msd = reverse_direction(a);
  return minimize(product(msd, canonical_words(msd.alphabet())));
}

/// Coordinate projection of the tuple set. `coords` are 1-based coordinate
/// indices; the result is msd-first over Σ_k^{|coords|} and accepts the
/// canonical expansion of every projected member.
///
/// Construction: an extra start state copies q0 without its all-zeros move so
/// only canonical words of `a` contribute; symbols are projected; the start set
/// is closed under moves whose projection is all zeros (leading-zero closure);
/// then subset construction and minimization.
inline Dfa project(const Dfa& input, std::vector<int> coords) {
  if (coords.empty()) throw InputError("projection needs at least one coordinate");
  std::sort(coords.begin(), coords.end());
  coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
  const Dfa a = reverse_direction(input);
  for (int& c : coords) {
    if (c < 1 || c > a.dim())
      throw InputError("coordinate " + std::to_string(c) + " outside 1.." + std::to_string(a.dim()));
    --c;
  }
  const Alphabet target{a.base(), static_cast<int>(coords.size())};

  const std::size_t n = a.num_states();
  Nfa nfa(target, n + 1);
  const State start = static_cast<State>(n);
  std::vector<std::vector<State>> zero_moves(n + 1);
  for (State q = 0; q < n; ++q) {
    nfa.accepting[q] = a.is_accepting(q) ? 1 : 0;
    for (Symbol s = 0; s < a.num_symbols(); ++s) {
      const Symbol p = a.alphabet().project(s, coords);
      nfa.add_edge(q, p, a.next(q, s));
      if (p == 0) zero_moves[q].push_back(a.next(q, s));
    }
  }
  nfa.accepting[start] = a.is_accepting(a.initial()) ? 1 : 0;
  for (Symbol s = 1; s < a.num_symbols(); ++s) {
    const Symbol p = a.alphabet().project(s, coords);
    nfa.add_edge(start, p, a.next(a.initial(), s));
    if (p == 0) zero_moves[start].push_back(a.next(a.initial(), s));
  }

  std::vector<char> in(n + 1, 0);
  std::vector<State> starts{start};
  in[start] = 1;
  for (std::size_t i = 0; i < starts.size(); ++i)
    for (State t : zero_moves[starts[i]])
      if (!in[t]) {
        in[t] = 1;
        starts.push_back(t);
      }
  nfa.initial = std::move(starts);
  return minimize(determinize(nfa));
}

}  // namespace spaut
