#pragma once

/// Line-oriented automaton text format:
///
///   base 2
///   dim 1
///   states 5
///   initial 0
///   accepting 3
///   direction lsd
///   trans 0 1 1
///   ...
///
/// '#' starts a comment. Digits inside a transition tuple are comma-separated.
/// `dim` defaults to 1 and `direction` to msd; every transition must be given.

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "spaut/dfa.hpp"
#include "spaut/errors.hpp"

namespace spaut {

namespace detail {

inline std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

inline long parse_integer(const std::string& text, std::size_t line) {
  try {
    std::size_t used = 0;
    const long value = std::stol(text, &used);
    if (used != text.size()) throw ParseError("not an integer: " + text, line);
    return value;
  } catch (const std::logic_error&) {
    throw ParseError("not an integer: " + text, line);
  }
}

inline std::vector<int> parse_digit_tuple(const std::string& text, std::size_t line) {
  std::vector<int> digits;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string piece = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    digits.push_back(static_cast<int>(parse_integer(piece, line)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return digits;
}

}  // namespace detail

inline Dfa parse_automaton(std::istream& in) {
  std::optional<long> base, dim, states, initial;
  std::vector<long> accepting;
  Direction direction = Direction::msd_first;
  struct PendingTransition {
    long from;
    std::vector<int> digits;
    long to;
    std::size_t line;
  };
  std::vector<PendingTransition> transitions;

  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const auto words = detail::split_words(raw);
    if (words.empty()) continue;
    const std::string& key = words[0];
    auto single = [&](std::optional<long>& slot) {
      if (words.size() != 2) throw ParseError("'" + key + "' takes exactly one value", lineno);
      if (slot) throw ParseError("duplicate '" + key + "'", lineno);
      slot = detail::parse_integer(words[1], lineno);
    };
    if (key == "base") {
      single(base);
    } else if (key == "dim") {
      single(dim);
    } else if (key == "states") {
      single(states);
    } else if (key == "initial") {
      single(initial);
    } else if (key == "accepting") {
      for (std::size_t i = 1; i < words.size(); ++i) accepting.push_back(detail::parse_integer(words[i], lineno));
    } else if (key == "direction") {
      if (words.size() != 2) throw ParseError("'direction' takes msd or lsd", lineno);
      if (words[1] == "msd") direction = Direction::msd_first;
      else if (words[1] == "lsd") direction = Direction::lsd_first;
      else throw ParseError("unknown direction '" + words[1] + "'", lineno);
    } else if (key == "trans") {
      if (words.size() != 4) throw ParseError("expected 'trans <from> <d1,...,dd> <to>'", lineno);
      transitions.push_back({detail::parse_integer(words[1], lineno),
                             detail::parse_digit_tuple(words[2], lineno),
                             detail::parse_integer(words[3], lineno), lineno});
    } else {
      throw ParseError("unknown declaration '" + key + "'", lineno);
    }
  }

  if (!base) throw ParseError("missing 'base'", 0);
  if (!states) throw ParseError("missing 'states'", 0);
  if (!initial) throw ParseError("missing 'initial'", 0);
  if (*base < 2 || *base > 36) throw ParseError("base must be in [2, 36]", 0);
  const long d = dim.value_or(1);
  if (d < 1) throw ParseError("dim must be positive", 0);
  if (*states < 1) throw ParseError("states must be positive", 0);
  if (*initial < 0 || *initial >= *states) throw ParseError("initial state out of range", 0);

  const Alphabet alphabet{static_cast<int>(*base), static_cast<int>(d)};
  Dfa a;
  try {
    a = Dfa(alphabet, static_cast<std::size_t>(*states), static_cast<State>(*initial), direction);
  } catch (const InputError& e) {
    throw ParseError(e.what(), 0);
  }
  for (long q : accepting) {
    if (q < 0 || q >= *states) throw ParseError("accepting state " + std::to_string(q) + " out of range", 0);
    a.set_accepting(static_cast<State>(q));
  }
  std::vector<char> seen(a.num_states() * alphabet.size(), 0);
  for (const auto& t : transitions) {
    if (t.from < 0 || t.from >= *states || t.to < 0 || t.to >= *states)
      throw ParseError("transition state out of range", t.line);
    Symbol s = 0;
    try {
      s = alphabet.encode(t.digits);
    } catch (const InputError& e) {
      throw ParseError(e.what(), t.line);
    }
    auto& flag = seen[static_cast<std::size_t>(t.from) * alphabet.size() + s];
    if (flag) throw ParseError("duplicate transition", t.line);
    flag = 1;
    a.set_transition(static_cast<State>(t.from), s, static_cast<State>(t.to));
  }
  try {
    a.validate();
  } catch (const InputError& e) {
    throw ParseError(e.what(), 0);
  }
  return a;
}

inline Dfa parse_automaton(const std::string& text) {
  std::istringstream in(text);
  return parse_automaton(in);
}

inline Dfa load_automaton(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  return parse_automaton(in);
}

inline void write_automaton(std::ostream& out, const Dfa& a) {
  const auto& alphabet = a.alphabet();
  out << "base " << a.base() << '\n'
      << "dim " << a.dim() << '\n'
      << "states " << a.num_states() << '\n'
      << "initial " << a.initial() << '\n'
      << "accepting";
  for (State q : a.accepting_states()) out << ' ' << q;
  out << '\n' << "direction " << (a.direction() == Direction::msd_first ? "msd" : "lsd") << '\n';
  for (State q = 0; q < a.num_states(); ++q)
    for (Symbol s = 0; s < a.num_symbols(); ++s) {
      out << "trans " << q << ' ';
      const auto digits = alphabet.digits(s);
      for (std::size_t i = 0; i < digits.size(); ++i) out << (i ? "," : "") << digits[i];
      out << ' ' << a.next(q, s) << '\n';
    }
}

inline std::string format_automaton(const Dfa& a) {
  std::ostringstream out;
  write_automaton(out, a);
  return out.str();
}

}  // namespace spaut
