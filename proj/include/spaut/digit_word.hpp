#pragma once

/// Words over the alphabet of d-tuples of base-k digits, and the base-k
/// evaluation map between such words and d-tuples of naturals.
///
/// A symbol (x_1, ..., x_d) is encoded as the integer x_1 k^{d-1} + ... + x_d,
/// so the all-zeros symbol is 0 and for d = 1 a symbol is just its digit.
/// Words are stored most-significant digit first.

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spaut/errors.hpp"
#include "spaut/numeric.hpp"

namespace spaut {

using Symbol = std::uint32_t;

/// Σ_k^d.
struct Alphabet {
  int base = 2;
  int dim = 1;

  constexpr bool operator==(const Alphabet&) const = default;

  std::size_t size() const {
    std::size_t n = 1;
    for (int i = 0; i < dim; ++i) n *= static_cast<std::size_t>(base);
    return n;
  }

  int digit(Symbol symbol, int coord) const {
    for (int i = dim - 1; i > coord; --i) symbol /= static_cast<Symbol>(base);
    return static_cast<int>(symbol % static_cast<Symbol>(base));
  }

  std::vector<int> digits(Symbol symbol) const {
    std::vector<int> out(static_cast<std::size_t>(dim));
    for (int i = dim - 1; i >= 0; --i) {
      out[static_cast<std::size_t>(i)] = static_cast<int>(symbol % static_cast<Symbol>(base));
      symbol /= static_cast<Symbol>(base);
    }
    return out;
  }

  Symbol encode(std::span<const int> digits) const {
    if (digits.size() != static_cast<std::size_t>(dim))
      throw InputError("symbol has " + std::to_string(digits.size()) + " digits, expected " +
                       std::to_string(dim));
    Symbol code = 0;
    for (int x : digits) {
      if (x < 0 || x >= base)
        throw InputError("digit " + std::to_string(x) + " outside [0, " +
                         std::to_string(base - 1) + "]");
      code = code * static_cast<Symbol>(base) + static_cast<Symbol>(x);
    }
    return code;
  }

  /// Keeps only the listed coordinates (0-based, in the given order).
  Symbol project(Symbol symbol, std::span<const int> coords) const {
    Symbol code = 0;
    for (int c : coords) code = code * static_cast<Symbol>(base) + static_cast<Symbol>(digit(symbol, c));
    return code;
  }

  void validate() const {
    if (base < 2) throw InputError("base must be at least 2");
    if (dim < 1) throw InputError("dimension must be at least 1");
    if (size() > (1u << 20)) throw InputError("alphabet too large");
  }
};

struct DigitWord {
  Alphabet alphabet;
  std::vector<Symbol> symbols;

  bool operator==(const DigitWord&) const = default;

  std::size_t length() const { return symbols.size(); }
  bool empty() const { return symbols.empty(); }

  /// True when every symbol is the all-zeros tuple.
  bool is_zero() const {
    return std::all_of(symbols.begin(), symbols.end(), [](Symbol s) { return s == 0; });
  }

  DigitWord& operator+=(const DigitWord& other) {
    symbols.insert(symbols.end(), other.symbols.begin(), other.symbols.end());
    return *this;
  }

  friend DigitWord operator+(DigitWord lhs, const DigitWord& rhs) {
    lhs += rhs;
    return lhs;
  }

  DigitWord repeated(std::size_t times) const {
    DigitWord out{alphabet, {}};
    out.symbols.reserve(symbols.size() * times);
    for (std::size_t i = 0; i < times; ++i) out += *this;
    return out;
  }

  /// Builds a word from one digit string per coordinate, e.g. {"2110", "0020"}.
  /// Digits are 0-9 then a-z.
  static DigitWord from_strings(int base, std::span<const std::string> rows) {
    Alphabet alphabet{base, static_cast<int>(rows.size())};
    alphabet.validate();
    DigitWord w{alphabet, {}};
    const std::size_t len = rows.empty() ? 0 : rows.front().size();
    for (const auto& row : rows)
      if (row.size() != len) throw InputError("digit strings differ in length");
    std::vector<int> digits(rows.size());
    for (std::size_t pos = 0; pos < len; ++pos) {
      for (std::size_t c = 0; c < rows.size(); ++c) digits[c] = digit_value(rows[c][pos]);
      w.symbols.push_back(alphabet.encode(digits));
    }
    return w;
  }

  static DigitWord from_string(int base, std::string_view row) {
    const std::string r(row);
    return from_strings(base, std::span<const std::string>(&r, 1));
  }

  std::vector<std::string> to_strings() const {
    std::vector<std::string> rows(static_cast<std::size_t>(alphabet.dim));
    for (Symbol s : symbols)
      for (int c = 0; c < alphabet.dim; ++c) rows[static_cast<std::size_t>(c)] += digit_char(alphabet.digit(s, c));
    return rows;
  }

  static int digit_value(char ch) {
    if (ch >= '0' && ch <= '9') return ch - '0';
    if (ch >= 'a' && ch <= 'z') return ch - 'a' + 10;
    throw InputError(std::string("not a digit: '") + ch + "'");
  }

  static char digit_char(int digit) {
    return digit < 10 ? static_cast<char>('0' + digit) : static_cast<char>('a' + digit - 10);
  }
};

/// [w]_k: the positional value of each coordinate, most significant digit first.
inline Tuple evaluate(const DigitWord& w) {
  const auto& a = w.alphabet;
  Tuple values(static_cast<std::size_t>(a.dim), BigInt(0));
  for (Symbol s : w.symbols) {
    const auto digits = a.digits(s);
    for (std::size_t c = 0; c < values.size(); ++c) {
      values[c] *= a.base;
      values[c] += digits[c];
    }
  }
  return values;
}

/// Canonical expansion: equal-length digit strings with no leading all-zeros
/// symbol; the zero tuple maps to the empty word.
inline DigitWord expand(const Tuple& t, int base) {
  if (t.empty()) throw InputError("tuple must have at least one coordinate");
  Alphabet alphabet{base, static_cast<int>(t.size())};
  alphabet.validate();
  for (const auto& x : t)
    if (x < 0) throw InputError("tuple coordinates must be natural numbers");

  std::vector<std::vector<int>> columns(t.size());  // least significant first
  std::size_t len = 0;
  for (std::size_t c = 0; c < t.size(); ++c) {
    BigInt x = t[c];
    while (x > 0) {
      BigInt r;
      mpz_fdiv_qr_ui(x.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(base));
      columns[c].push_back(static_cast<int>(r.get_si()));
    }
    len = std::max(len, columns[c].size());
  }

  DigitWord w{alphabet, {}};
  w.symbols.reserve(len);
  std::vector<int> digits(t.size());
  for (std::size_t pos = len; pos-- > 0;) {
    for (std::size_t c = 0; c < t.size(); ++c) digits[c] = pos < columns[c].size() ? columns[c][pos] : 0;
    w.symbols.push_back(alphabet.encode(digits));
  }
  return w;
}

}  // namespace spaut
