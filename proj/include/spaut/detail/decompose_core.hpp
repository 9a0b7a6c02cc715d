#pragma once

/// Recursive decomposition of a sparse automaton into simple sparse terms.
///
/// For a start state q and the set of still-allowed states:
///  - if q has no cycle, branch on the first symbol into the automaton without q
///    (plus the empty word when q accepts);
///  - otherwise [q] is a single cycle w_1. Words that end inside [q] give terms
///    w_1* z for accepting cycle positions z, and words that leave [q] after the
///    cycle prefix z via symbol x into state p give w_1* (z x ...) followed by the
///    decomposition of p inside allowed \ [q].
/// Cycle-free branches come first, then exits grouped by target state in index order.

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spaut/detail/graph.hpp"
#include "spaut/dfa.hpp"
#include "spaut/sparse_term.hpp"

namespace spaut::detail {

class Decomposer {
 public:
  /// `a` must be trimmed; its useful states seed the recursion.
  explicit Decomposer(const Dfa& a) : a_(a), useful_(useful_states(a)) {}

  std::vector<SparseTerm> run() {
    if (!useful_[a_.initial()]) return {};
    return terms(a_.initial(), useful_);
  }

 private:
  using Key = std::pair<State, std::vector<char>>;

  DigitWord word(std::vector<Symbol> symbols) const { return {a_.alphabet(), std::move(symbols)}; }

  bool reaches_accepting(State q, const std::vector<char>& allowed) const {
    std::vector<Symbol> ignored;
    return shortest_path(a_, q, allowed, [&](State x) { return a_.is_accepting(x); }, ignored);
  }

  std::vector<char> reach(State q, const std::vector<char>& allowed) const {
    std::vector<char> seen(a_.num_states(), 0);
    std::vector<State> stack{q};
    seen[q] = 1;
    while (!stack.empty()) {
      const State x = stack.back();
      stack.pop_back();
      for (Symbol s = 0; s < a_.num_symbols(); ++s) {
        const State t = a_.next(x, s);
        if (allowed[t] && !seen[t]) {
          seen[t] = 1;
          stack.push_back(t);
        }
      }
    }
    return seen;
  }

  /// Mutual-reachability class of q within `allowed`.
  std::vector<char> class_of(State q, const std::vector<char>& allowed) const {
    const auto forward = reach(q, allowed);
    std::vector<char> cls(a_.num_states(), 0);
    for (State p = 0; p < a_.num_states(); ++p)
      if (forward[p] && reach(p, allowed)[q]) cls[p] = 1;
    return cls;
  }

  const std::vector<SparseTerm>& terms(State q, const std::vector<char>& allowed) {
    Key key{q, allowed};
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    auto result = compute(q, allowed);
    return cache_.emplace(std::move(key), std::move(result)).first->second;
  }

  std::vector<SparseTerm> compute(State q, const std::vector<char>& allowed) {
    std::vector<SparseTerm> out;
    if (!reaches_accepting(q, allowed)) return out;

    const auto cls = class_of(q, allowed);
    std::size_t class_size = 0;
    for (char c : cls) class_size += c ? 1 : 0;
    bool self_loop = false;
    for (Symbol s = 0; s < a_.num_symbols(); ++s) self_loop |= a_.next(q, s) == q;

    if (class_size == 1 && !self_loop) {
      if (a_.is_accepting(q)) out.push_back(SparseTerm::word(word({})));
      auto rest = allowed;
      rest[q] = 0;
      for (Symbol s = 0; s < a_.num_symbols(); ++s) {
        const State p = a_.next(q, s);
        if (!rest[p]) continue;
        for (const auto& sub : terms(p, rest)) {
          SparseTerm t = sub;
          t.fixed.front().symbols.insert(t.fixed.front().symbols.begin(), s);
          out.push_back(std::move(t));
        }
      }
      return out;
    }

    // Walk the unique cycle through [q].
    std::vector<State> cycle_states{q};
    std::vector<Symbol> cycle;
    for (State x = q;;) {
      Symbol chosen = 0;
      std::size_t inside = 0;
      for (Symbol s = 0; s < a_.num_symbols(); ++s)
        if (cls[a_.next(x, s)]) {
          ++inside;
          chosen = s;
        }
      if (inside != 1) throw std::logic_error("decomposition reached a state with several cycles");
      cycle.push_back(chosen);
      x = a_.next(x, chosen);
      if (x == q) break;
      cycle_states.push_back(x);
    }
    if (cycle.size() != class_size) throw std::logic_error("cycle does not cover its component");
    const DigitWord loop = word(cycle);

    for (std::size_t i = 0; i < cycle.size(); ++i)
      if (a_.is_accepting(cycle_states[i]))
        out.push_back({a_.alphabet(), {word({}), word({cycle.begin(), cycle.begin() + static_cast<long>(i)})}, {loop}});

    auto rest = allowed;
    for (State p = 0; p < a_.num_states(); ++p)
      if (cls[p]) rest[p] = 0;
    for (State p = 0; p < a_.num_states(); ++p) {
      if (!rest[p]) continue;
      for (std::size_t i = 0; i < cycle.size(); ++i)
        for (Symbol s = 0; s < a_.num_symbols(); ++s) {
          if (s == cycle[i] || a_.next(cycle_states[i], s) != p) continue;
          std::vector<Symbol> head(cycle.begin(), cycle.begin() + static_cast<long>(i));
          head.push_back(s);
          for (const auto& sub : terms(p, rest)) {
            SparseTerm t{a_.alphabet(), {word({})}, {loop}};
            DigitWord v1 = word(head);
            v1 += sub.fixed.front();
            t.fixed.push_back(std::move(v1));
            t.fixed.insert(t.fixed.end(), sub.fixed.begin() + 1, sub.fixed.end());
            t.loops.insert(t.loops.end(), sub.loops.begin(), sub.loops.end());
            out.push_back(std::move(t));
          }
        }
    }
    return out;
  }

  const Dfa& a_;
  std::vector<char> useful_;
  std::map<Key, std::vector<SparseTerm>> cache_;
};

}  // namespace spaut::detail
