#pragma once

/// Sparse-term text format:
///
///   base 2
///   dim 1
///   "11" ("0")* "1"
///
/// Each expression line is one term. Quoted strings are fixed segments and
/// ("...")* groups are starred segments. For dim 1 a string lists one digit
/// per character (0-9, a-z); for dim > 1 symbols are separated by spaces and
/// the digits of a symbol by commas, e.g. "1,0 1,1" ("0,1")* "".

#include <cctype>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "spaut/aut_format.hpp"
#include "spaut/errors.hpp"
#include "spaut/sparse_term.hpp"

namespace spaut {

struct TermFile {
  Alphabet alphabet;
  std::vector<SparseTerm> terms;
};

namespace detail {

inline DigitWord parse_quoted_word(const std::string& body, const Alphabet& alphabet, std::size_t line) {
  DigitWord w{alphabet, {}};
  try {
    const bool spaced = alphabet.dim > 1 || body.find_first_of(", ") != std::string::npos;
    if (!spaced) {
      for (char ch : body) {
        const int d = DigitWord::digit_value(ch);
        w.symbols.push_back(alphabet.encode(std::span<const int>(&d, 1)));
      }
      return w;
    }
    for (const auto& token : split_words(body)) w.symbols.push_back(alphabet.encode(parse_digit_tuple(token, line)));
  } catch (const InputError& e) {
    throw ParseError(e.what(), line);
  }
  return w;
}

inline SparseTerm parse_expression(const std::string& text, const Alphabet& alphabet, std::size_t line) {
  SparseTerm t{alphabet, {DigitWord{alphabet, {}}}, {}};
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_string = [&]() -> std::string {
    if (pos >= text.size() || text[pos] != '"') throw ParseError("expected a quoted string", line);
    const std::size_t close = text.find('"', pos + 1);
    if (close == std::string::npos) throw ParseError("unterminated string", line);
    std::string body = text.substr(pos + 1, close - pos - 1);
    pos = close + 1;
    return body;
  };
  for (skip_space(); pos < text.size(); skip_space()) {
    if (text[pos] == '"') {
      t.fixed.back() += parse_quoted_word(read_string(), alphabet, line);
    } else if (text[pos] == '(') {
      ++pos;
      skip_space();
      DigitWord loop = parse_quoted_word(read_string(), alphabet, line);
      skip_space();
      if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ')'", line);
      ++pos;
      skip_space();
      if (pos >= text.size() || text[pos] != '*') throw ParseError("expected '*' after group", line);
      ++pos;
      if (loop.empty()) throw ParseError("starred segment must be nonempty", line);
      t.loops.push_back(std::move(loop));
      t.fixed.push_back(DigitWord{alphabet, {}});
    } else {
      throw ParseError(std::string("unexpected character '") + text[pos] + "'", line);
    }
  }
  return t;
}

inline std::string format_word(const DigitWord& w) {
  std::string out = "\"";
  const auto& a = w.alphabet;
  for (std::size_t i = 0; i < w.symbols.size(); ++i) {
    if (a.dim == 1) {
      out += DigitWord::digit_char(static_cast<int>(w.symbols[i]));
      continue;
    }
    if (i) out += ' ';
    const auto digits = a.digits(w.symbols[i]);
    for (std::size_t c = 0; c < digits.size(); ++c) {
      if (c) out += ',';
      out += std::to_string(digits[c]);
    }
  }
  return out + "\"";
}

}  // namespace detail

inline std::string format_term(const SparseTerm& t) {
  std::string out = detail::format_word(t.fixed.front());
  for (std::size_t i = 0; i < t.loops.size(); ++i)
    out += " (" + detail::format_word(t.loops[i]) + ")* " + detail::format_word(t.fixed[i + 1]);
  return out;
}

inline TermFile parse_terms(std::istream& in) {
  std::optional<long> base, dim;
  std::vector<std::pair<std::string, std::size_t>> expressions;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    // '#' only starts a comment outside quotes; digits never contain it.
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const auto words = detail::split_words(raw);
    if (words.empty()) continue;
    if (words[0] == "base" || words[0] == "dim") {
      if (words.size() != 2) throw ParseError("'" + words[0] + "' takes exactly one value", lineno);
      auto& slot = words[0] == "base" ? base : dim;
      if (slot) throw ParseError("duplicate '" + words[0] + "'", lineno);
      slot = detail::parse_integer(words[1], lineno);
    } else {
      expressions.emplace_back(raw, lineno);
    }
  }
  if (!base) throw ParseError("missing 'base'", 0);
  if (*base < 2 || *base > 36) throw ParseError("base must be in [2, 36]", 0);
  const long d = dim.value_or(1);
  if (d < 1) throw ParseError("dim must be positive", 0);
  TermFile file{{static_cast<int>(*base), static_cast<int>(d)}, {}};
  for (const auto& [text, line] : expressions) file.terms.push_back(detail::parse_expression(text, file.alphabet, line));
  return file;
}

inline TermFile parse_terms(const std::string& text) {
  std::istringstream in(text);
  return parse_terms(in);
}

inline TermFile load_terms(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  return parse_terms(in);
}

inline void write_terms(std::ostream& out, const Alphabet& alphabet, const std::vector<SparseTerm>& terms) {
  out << "base " << alphabet.base << '\n' << "dim " << alphabet.dim << '\n';
  for (const auto& t : terms) out << format_term(t) << '\n';
}

}  // namespace spaut
