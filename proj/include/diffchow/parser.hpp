#pragma once

// Text syntax for difference polynomials.
//
//   expr   := ['+'|'-'] term { ('+'|'-') term }
//   term   := unary { ('*'|'/') unary }        division only by field elements
//   unary  := '-' unary | power
//   power  := atom ['@' int] ['^' int]
//   atom   := integer | name | '(' expr ')'
//
// Names: y<j> main variables, u<i>_<j> parameters, x the base indeterminate
// (only when allowed), or a previously bound name.

#include <map>
#include <optional>
#include <set>
#include <string>

#include "diffchow/poly.hpp"

namespace diffchow {

struct ParseOptions {
  /// Whether the base indeterminate x of Q(x) may appear.
  bool allow_x = true;
  /// When set, only these symbols (shift 0) are accepted as variables.
  std::optional<std::set<Var>> declared;
  /// Named polynomials usable in expressions.
  const std::map<std::string, Poly>* names = nullptr;
};

/// Throws ParseError (1-based column) on malformed input or unknown names.
Poly parse_poly(const std::string& text, const ParseOptions& opts = {});

/// Parses a single variable name such as "y2" or "u1_0@3".
Var parse_var(const std::string& text);

}  // namespace diffchow
