#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "affvir/classify.hpp"

namespace affvir {

/// Positions are 1-based. `expected` lists the tokens that would have been
/// accepted at the failure point.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, std::vector<std::string> expected, const std::string& detail = "");
  int line() const { return line_; }
  int column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  int line_;
  int column_;
  std::vector<std::string> expected_;
};

enum class ParseContext { Scalar, Algebra, SPoly, EFCandidate };

using ParsedValue = std::variant<Scalar, SPoly, EnvelopingElement, EFCandidate>;

// Expression grammar shared by all contexts:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ['^' ['-'] integer]
//   atom   := integer | name | gen '[' ['-'] integer ']' | '(' expr ')'
// Names: L A B G everywhere; s t (or d0 h0) in polynomials; e[i] f[i] h[i]
// d[i] and c in algebra expressions. Division is by scalars only; negative
// exponents apply to scalars only.

Scalar parse_scalar(const std::string& text);
SPoly parse_spoly(const std::string& text, const SVarNames& names = {});
/// Products of generators are words: `e[0]*f[1]` acts f[1] first.
EnvelopingElement parse_algebra(const std::string& text);
/// Statements `name = expr` separated by ';' or newlines. E0 and F0 are
/// polynomials in d0, h0; lambda and gamma are scalars; the optional `p` is a
/// polynomial in h0 with p_i = i*p (strict mode). E0, F0 and lambda are
/// required; gamma defaults to 0.
EFCandidate parse_candidate(const std::string& text);
/// `Omega(L,A,B,G)` with scalar arguments.
ModuleSpec parse_spec(const std::string& text);

ParsedValue parse_expr(const std::string& text, ParseContext context);

}  // namespace affvir
