// SPDX-License-Identifier: Apache-2.0
//
// Concrete syntax: printers and parsers for formulas, terms, graphs,
// contexts and sequents of both object languages.  print-then-parse is the
// identity on every abstract-syntax value.

#ifndef DTT_TEXT_HPP
#define DTT_TEXT_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "dtt/lcalc.hpp"
#include "dtt/syntax.hpp"

namespace dtt {

struct ParseError : std::runtime_error {
  int line, col;
  std::vector<std::string> expected;
  ParseError(const std::string& msg, int line_, int col_,
             std::vector<std::string> expected_ = {})
      : std::runtime_error(msg), line(line_), col(col_),
        expected(std::move(expected_)) {}
};

// -- printing ---------------------------------------------------------------

std::string to_text(Polarity p);
std::string to_text(const Formula& f);
std::string to_text(const Term& t);
std::string to_text(const Edge& e);
std::string to_text(const Graph& g);
std::string to_text(const Context& c);
std::string to_text(const Sequent& s);
std::string to_text(const LFormula& f);
std::string to_text(const LSequent& s);

// -- parsing ----------------------------------------------------------------

Polarity parse_polarity(const std::string& text);
Formula parse_formula(const std::string& text);
Term parse_term(const std::string& text);
Graph parse_graph(const std::string& text);
Context parse_context(const std::string& text);
Sequent parse_sequent(const std::string& text);
LFormula parse_lformula(const std::string& text);
LSequent parse_lsequent(const std::string& text);

// Goal file: a sequent followed by `|- term`.
struct Goal {
  Sequent sequent;
  Term term;
};
Goal parse_goal(const std::string& text);

}  // namespace dtt

#endif  // DTT_TEXT_HPP
