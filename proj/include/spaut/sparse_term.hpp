#pragma once

#include <span>
#include <string>
#include <vector>

#include "spaut/digit_word.hpp"
#include "spaut/errors.hpp"

namespace spaut {

/// One simple sparse language v_0 w_1* v_1 w_2* ... w_s* v_s.
/// `fixed` holds v_0..v_s (possibly empty), `loops` holds w_1..w_s (nonempty).
struct SparseTerm {
  Alphabet alphabet;
  std::vector<DigitWord> fixed;
  std::vector<DigitWord> loops;

  bool operator==(const SparseTerm&) const = default;

  std::size_t star_count() const { return loops.size(); }

  std::size_t loop_length() const {
    std::size_t n = 0;
    for (const auto& w : loops) n += w.length();
    return n;
  }

  std::size_t fixed_length() const {
    std::size_t n = 0;
    for (const auto& v : fixed) n += v.length();
    return n;
  }

  void validate() const {
    alphabet.validate();
    if (fixed.size() != loops.size() + 1)
      throw InputError("a term with s stars needs s+1 fixed segments");
    for (const auto& v : fixed)
      if (v.alphabet != alphabet) throw InputError("term segments use different alphabets");
    for (const auto& w : loops) {
      if (w.alphabet != alphabet) throw InputError("term segments use different alphabets");
      if (w.empty()) throw InputError("starred segments must be nonempty");
    }
  }

  /// A term with no stars accepting exactly one word.
  static SparseTerm word(const DigitWord& v) { return {v.alphabet, {v}, {}}; }
};

/// The word v_0 w_1^{n_1} v_1 ... w_s^{n_s} v_s.
inline DigitWord assemble(const SparseTerm& t, std::span<const std::size_t> repetitions) {
  if (repetitions.size() != t.star_count())
    throw InputError("expected " + std::to_string(t.star_count()) + " repetition counts");
  DigitWord w = t.fixed.front();
  for (std::size_t i = 0; i < t.loops.size(); ++i) {
    w += t.loops[i].repeated(repetitions[i]);
    w += t.fixed[i + 1];
  }
  return w;
}

}  // namespace spaut
