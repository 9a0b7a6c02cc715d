#pragma once

// Command-line front end. Exit codes: 0 success, 1 domain rejection
// (non-sparse input, dependent bases), 2 parse or usage error.

#include <CLI11.hpp>

#include <cstdio>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "spaut/spaut.hpp"

namespace spaut::cli {

namespace detail {

inline Tuple parse_tuple(const std::string& text) {
  Tuple t;
  std::size_t pos = 0;
  for (;;) {
    const auto comma = text.find(',', pos);
    const std::string piece = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    BigInt value;
    if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos || value.set_str(piece, 10) != 0)
      throw InputError("not a natural number: '" + piece + "'");
    t.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return t;
}

inline BigInt parse_natural(const std::string& text) {
  const Tuple t = parse_tuple(text);
  if (t.size() != 1) throw InputError("expected a single natural number, got '" + text + "'");
  return t[0];
}

inline std::string quoted(const DigitWord& w) { return spaut::detail::format_word(w); }

inline std::string fixed6(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6f", x);
  return buffer;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sparse automatic sets: sparsity, decomposition, closed forms, bounds and intersections", "spaut"};
  app.require_subcommand(1, 1);
  bool keep_direction = false;
  app.add_flag("--keep-direction", keep_direction, "Read words in the file's order instead of normalizing to msd-first");

  std::string aut_path, other_path, term_path, tuple_text, bound_text, coords_text;

  auto* member_cmd = app.add_subcommand("member", "Membership of a tuple");
  member_cmd->add_option("automaton", aut_path)->required();
  member_cmd->add_option("tuple", tuple_text, "Comma-separated decimal tuple")->required();

  auto* sparsity_cmd = app.add_subcommand("sparsity", "Sparse or not, with degree or witness");
  sparsity_cmd->add_option("automaton", aut_path)->required();

  std::size_t max_len = 20;
  auto* counts_cmd = app.add_subcommand("counts", "Accepted words per length");
  counts_cmd->add_option("automaton", aut_path)->required();
  counts_cmd->add_option("--max-len", max_len)->capture_default_str();

  std::size_t verify_len = 0;
  auto* decompose_cmd = app.add_subcommand("decompose", "Simple sparse terms of the language");
  decompose_cmd->add_option("automaton", aut_path)->required();
  decompose_cmd->add_option("--verify", verify_len, "Check the terms against the automaton up to this length");

  auto* expsum_cmd = app.add_subcommand("expsum", "Closed forms of the values of each term");
  expsum_cmd->add_option("terms", term_path)->required();

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Values of the terms with every coordinate <= bound");
  enumerate_cmd->add_option("terms", term_path)->required();
  enumerate_cmd->add_option("--bound", bound_text)->required();

  std::string formula;
  long n = 0, r = 0, m = 0, s = 0, t = 0, q = 0, qp = 0, d = 0, k = 0, l = 0;
  auto* bound_cmd = app.add_subcommand("bound", "Evaluate an explicit bound");
  bound_cmd->add_option("--formula", formula)
      ->required()
      ->check(CLI::IsMember({"av", "nondegenerate", "degenerate", "term-pair", "main"}));
  bound_cmd->add_option("--n", n);
  bound_cmd->add_option("--r", r);
  bound_cmd->add_option("--m", m);
  bound_cmd->add_option("--s", s);
  bound_cmd->add_option("--t", t);
  bound_cmd->add_option("--Q", q);
  bound_cmd->add_option("--Qp", qp);
  bound_cmd->add_option("--d", d);
  bound_cmd->add_option("--k", k);
  bound_cmd->add_option("--l", l);

  bool diagnostics = false;
  auto* intersect_cmd = app.add_subcommand("intersect", "Intersection witnesses up to a coordinate-sum bound");
  intersect_cmd->add_option("x", aut_path, "Sparse automaton")->required();
  intersect_cmd->add_option("y", other_path)->required();
  intersect_cmd->add_option("--bound", bound_text)->required();
  intersect_cmd->add_flag("--diagnostics", diagnostics, "Vanishing-subsum partition for each witness");

  auto* project_cmd = app.add_subcommand("project", "Projection onto a set of coordinates");
  project_cmd->add_option("automaton", aut_path)->required();
  project_cmd->add_option("--coords", coords_text, "1-based, comma-separated")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  auto load = [&](const std::string& path) {
    Dfa a = load_automaton(path);
    if (keep_direction) a.set_direction(Direction::msd_first);
    return a;
  };

  try {
    if (member_cmd->parsed()) {
      const Dfa a = load(aut_path);
      const Tuple tuple = detail::parse_tuple(tuple_text);
      if (static_cast<int>(tuple.size()) != a.dim())
        throw InputError("tuple has " + std::to_string(tuple.size()) + " coordinates, automaton has dim " +
                         std::to_string(a.dim()));
      out << (member(a, tuple) ? "true" : "false") << '\n';
    } else if (sparsity_cmd->parsed()) {
      const auto report = classify(load(aut_path));
      if (report.is_sparse) {
        out << "sparse degree=" << report.poly_degree << '\n';
      } else {
        const auto& w = *report.witness;
        out << "not-sparse state=" << w.state << " prefix=" << detail::quoted(w.prefix)
            << " cycles=" << detail::quoted(w.first_cycle) << ',' << detail::quoted(w.second_cycle)
            << " suffix=" << detail::quoted(w.suffix) << " alpha=" << detail::fixed6(report.alpha) << '\n';
      }
    } else if (counts_cmd->parsed()) {
      const auto per_length = count_words(load(aut_path), max_len);
      const auto totals = cumulative(per_length);
      for (std::size_t i = 0; i < per_length.size(); ++i)
        out << i << ' ' << per_length[i].get_str() << ' ' << totals[i].get_str() << '\n';
    } else if (decompose_cmd->parsed()) {
      const Dfa a = load(aut_path);
      const auto terms = decompose(a);
      write_terms(out, a.alphabet(), terms);
      if (verify_len > 0) {
        if (!verify_decomposition(a, terms, verify_len)) {
          err << "error: decomposition disagrees with the automaton below length " << verify_len << '\n';
          return 1;
        }
        out << "# verified up to length " << verify_len << '\n';
      }
    } else if (expsum_cmd->parsed()) {
      const TermFile file = load_terms(term_path);
      for (std::size_t i = 0; i < file.terms.size(); ++i) {
        out << "term " << i + 1 << ' ' << format_term(file.terms[i]) << '\n';
        const auto lines = format_expsum(to_expsum(file.terms[i]));
        for (std::size_t c = 0; c < lines.size(); ++c) out << "  x" << c + 1 << " = " << lines[c] << '\n';
      }
    } else if (enumerate_cmd->parsed()) {
      const TermFile file = load_terms(term_path);
      const BigInt bound = detail::parse_natural(bound_text);
      std::set<Tuple, TupleOrder> values;
      for (const auto& term : file.terms)
        for (auto& v : enumerate_values(to_expsum(term), bound)) values.insert(std::move(v));
      for (const auto& v : values) out << format_tuple(v) << '\n';
    } else if (bound_cmd->parsed()) {
      BoundValue b;
      if (formula == "av") b = av_bound(n, r);
      else if (formula == "nondegenerate") b = nondegenerate_pair_bound(n, m);
      else if (formula == "degenerate") b = degenerate_pair_bound(n, m);
      else if (formula == "term-pair") b = term_pair_bound(s, t);
      else b = intersection_bound(q, qp, d, k, l);
      out << format_bound(b) << '\n';
    } else if (intersect_cmd->parsed()) {
      const Dfa x = load(aut_path);
      const Dfa y = load(other_path);
      const BigInt bound = detail::parse_natural(bound_text);
      write_intersection(out, bounded_intersection(x, y, bound, {diagnostics, {}}));
    } else if (project_cmd->parsed()) {
      const Dfa a = load(aut_path);
      std::vector<int> coords;
      for (const auto& c : detail::parse_tuple(coords_text)) {
        if (!c.fits_sint_p()) throw InputError("coordinate out of range");
        coords.push_back(static_cast<int>(c.get_si()));
      }
      write_automaton(out, project(a, coords));
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "rejected: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace spaut::cli
