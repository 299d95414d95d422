#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hermite/mask.hpp"

namespace hermite {

struct SchemeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SchemeParseError : SchemeError {
  SchemeParseError(size_t line, const std::string& message)
      : SchemeError("line " + std::to_string(line) + ": " + message), line(line) {}
  size_t line;
};

struct ExpressionError : SchemeError {
  ExpressionError(size_t position, const std::string& message)
      : SchemeError("position " + std::to_string(position) + ": " + message),
        position(position) {}
  size_t position;
};

using ParamBinding = std::map<std::string, Rational>;

// Textual description of a mask:
//
//   name=h1
//   support=-2..2
//   params=theta,omega
//   matrix -2:
//   theta, -theta/2
//   -3*omega/2, omega/2
//   ...
//
// One matrix block per support index, two rows of two expressions.  Blank
// lines and lines starting with '#' are ignored.  Expressions follow the
// grammar
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := rational | parameter | '-' factor | '(' expr ')'
//
// and may only mention declared parameters.
struct SchemeFile {
  std::string name;
  int support_min = 0;
  int support_max = 0;
  std::vector<std::string> params;
  // entries[j][row][col], j relative to support_min
  std::vector<std::array<std::array<std::string, 2>, 2>> entries;
};

// Evaluate an expression; every parameter it mentions must be bound.
Rational evaluate_expression(const std::string& text, const ParamBinding& binding);

// Syntax check only; identifiers must come from the allowed list.
void check_expression(const std::string& text, const std::vector<std::string>& allowed);

SchemeFile parse_scheme_file(std::istream& in);
SchemeFile load_scheme_file(const std::string& path);

MatrixMask evaluate_scheme(const SchemeFile& scheme, const ParamBinding& binding);
MatrixMask load_scheme(const std::string& path, const ParamBinding& binding);

// Canonical parameter-free rendering; parses back to an equal mask.
std::string render_scheme(const MatrixMask& mask, const std::string& name);

}  // namespace hermite
