#pragma once

#include <algorithm>
#include <vector>

#include "spaut/dfa.hpp"

namespace spaut::detail {

/// Strongly connected components of the transition graph restricted to
/// states with mask[q] set. Returns a component id per state (kNoState when
/// masked out); ids are assigned in reverse topological order (sinks first).
inline std::vector<State> scc_ids(const Dfa& a, const std::vector<char>& mask) {
  const std::size_t n = a.num_states();
  std::vector<State> index(n, kNoState), low(n, 0), comp(n, kNoState);
  std::vector<char> on_stack(n, 0);
  std::vector<State> stack;
  State counter = 0, comps = 0;

  struct Frame {
    State q;
    Symbol next_symbol;
  };
  for (State root = 0; root < n; ++root) {
    if (!mask[root] || index[root] != kNoState) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next_symbol < a.num_symbols()) {
        const State t = a.next(f.q, f.next_symbol++);
        if (!mask[t]) continue;
        if (index[t] == kNoState) {
          index[t] = low[t] = counter++;
          stack.push_back(t);
          on_stack[t] = 1;
          frames.push_back({t, 0});
        } else if (on_stack[t]) {
          low[f.q] = std::min(low[f.q], index[t]);
        }
        continue;
      }
      const State q = f.q;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().q] = std::min(low[frames.back().q], low[q]);
      if (low[q] == index[q]) {
        State x;
        do {
          x = stack.back();
          stack.pop_back();
          on_stack[x] = 0;
          comp[x] = comps;
        } while (x != q);
        ++comps;
      }
    }
  }
  return comp;
}

/// Shortest symbol path from `from` to any state satisfying `goal`, moving
/// only through states with mask set. Returns false when no such state is reachable.
template <typename Goal>
bool shortest_path(const Dfa& a, State from, const std::vector<char>& mask, Goal goal,
                   std::vector<Symbol>& path) {
  const std::size_t n = a.num_states();
  std::vector<State> parent(n, kNoState);
  std::vector<Symbol> via(n, 0);
  std::vector<char> seen(n, 0);
  std::vector<State> queue{from};
  seen[from] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const State q = queue[i];
    if (goal(q)) {
      path.clear();
      for (State x = q; x != from; x = parent[x]) path.push_back(via[x]);
      std::reverse(path.begin(), path.end());
      return true;
    }
    for (Symbol s = 0; s < a.num_symbols(); ++s) {
      const State t = a.next(q, s);
      if (!mask[t] || seen[t]) continue;
      seen[t] = 1;
      parent[t] = q;
      via[t] = s;
      queue.push_back(t);
    }
  }
  return false;
}

}  // namespace spaut::detail
