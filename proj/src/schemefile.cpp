#include "hermite/schemefile.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

namespace hermite {

namespace {

std::string strip(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

// Recursive-descent evaluator for the expression grammar.  In check mode no
// arithmetic is performed, only syntax and identifier validation.
class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, const ParamBinding* binding,
                   const std::vector<std::string>* allowed)
      : text_(text), binding_(binding), allowed_(allowed) {}

  Rational run() {
    Rational v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ExpressionError(pos_, message + " in \"" + std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Rational expr() {
    Rational acc = term();
    for (;;) {
      if (consume('+'))
        acc += term();
      else if (consume('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Rational term() {
    Rational acc = factor();
    for (;;) {
      if (consume('*')) {
        acc *= factor();
      } else if (consume('/')) {
        Rational f = factor();
        if (binding_) {
          if (f == 0) fail("division by zero");
          acc /= f;
        }
      } else {
        return acc;
      }
    }
  }

  Rational factor() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '(') {
      ++pos_;
      Rational v = expr();
      if (!consume(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parameter();
    fail("expected a number, parameter or '('");
  }

  Rational number() {
    size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
      ++pos_;
    auto parsed = parse_rational(text_.substr(start, pos_ - start));
    if (!parsed) fail("malformed number");
    return *parsed;
  }

  Rational parameter() {
    size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    if (binding_) {
      auto it = binding_->find(name);
      if (it == binding_->end()) fail("unbound parameter '" + name + "'");
      return it->second;
    }
    if (allowed_) {
      bool ok = false;
      for (const auto& a : *allowed_)
        if (a == name) ok = true;
      if (!ok) fail("unknown parameter '" + name + "'");
    }
    return Rational(0);
  }

  std::string_view text_;
  size_t pos_ = 0;
  const ParamBinding* binding_;
  const std::vector<std::string>* allowed_;
};

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::optional<int> parse_int(const std::string& s) {
  if (s.empty()) return std::nullopt;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return std::nullopt;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
  try {
    return std::stoi(s);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

Rational evaluate_expression(const std::string& text, const ParamBinding& binding) {
  return ExpressionParser(text, &binding, nullptr).run();
}

void check_expression(const std::string& text, const std::vector<std::string>& allowed) {
  ExpressionParser(text, nullptr, &allowed).run();
}

SchemeFile parse_scheme_file(std::istream& in) {
  SchemeFile scheme;
  bool have_name = false, have_support = false;
  std::vector<bool> seen;

  std::string raw;
  size_t lineno = 0;
  auto next_line = [&](std::string& out_line) {
    while (std::getline(in, raw)) {
      ++lineno;
      std::string s = strip(raw);
      if (s.empty() || s[0] == '#') continue;
      out_line = s;
      return true;
    }
    return false;
  };

  std::string line;
  while (next_line(line)) {
    if (line.rfind("matrix", 0) == 0) {
      if (!have_support) throw SchemeParseError(lineno, "matrix block before support line");
      std::string idx = strip(line.substr(6));
      if (idx.empty() || idx.back() != ':')
        throw SchemeParseError(lineno, "expected 'matrix <index>:'");
      idx = strip(idx.substr(0, idx.size() - 1));
      auto j = parse_int(idx);
      if (!j) throw SchemeParseError(lineno, "malformed matrix index '" + idx + "'");
      if (*j < scheme.support_min || *j > scheme.support_max)
        throw SchemeParseError(lineno, "matrix index " + idx + " outside the support");
      size_t slot = static_cast<size_t>(*j - scheme.support_min);
      if (seen[slot])
        throw SchemeParseError(lineno, "duplicate matrix block for index " + idx);
      seen[slot] = true;
      for (int r = 0; r < 2; ++r) {
        std::string rowline;
        if (!next_line(rowline))
          throw SchemeParseError(lineno, "unexpected end of file inside a matrix block");
        size_t comma = rowline.find(',');
        if (comma == std::string::npos || rowline.find(',', comma + 1) != std::string::npos)
          throw SchemeParseError(lineno, "expected two comma separated entries");
        scheme.entries[slot][static_cast<size_t>(r)][0] = strip(rowline.substr(0, comma));
        scheme.entries[slot][static_cast<size_t>(r)][1] = strip(rowline.substr(comma + 1));
        for (int c = 0; c < 2; ++c) {
          try {
            check_expression(scheme.entries[slot][static_cast<size_t>(r)][static_cast<size_t>(c)],
                             scheme.params);
          } catch (const ExpressionError& e) {
            throw SchemeParseError(lineno, e.what());
          }
        }
      }
      continue;
    }

    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw SchemeParseError(lineno, "expected 'key=value' or 'matrix <index>:'");
    std::string key = strip(line.substr(0, eq));
    std::string value = strip(line.substr(eq + 1));
    if (key == "name") {
      if (have_name) throw SchemeParseError(lineno, "duplicate name line");
      if (value.empty()) throw SchemeParseError(lineno, "empty scheme name");
      scheme.name = value;
      have_name = true;
    } else if (key == "support") {
      if (have_support) throw SchemeParseError(lineno, "duplicate support line");
      size_t dots = value.find("..");
      if (dots == std::string::npos)
        throw SchemeParseError(lineno, "expected 'support=<lo>..<hi>'");
      auto lo = parse_int(strip(value.substr(0, dots)));
      auto hi = parse_int(strip(value.substr(dots + 2)));
      if (!lo || !hi || *lo > *hi)
        throw SchemeParseError(lineno, "malformed support range '" + value + "'");
      scheme.support_min = *lo;
      scheme.support_max = *hi;
      scheme.entries.assign(static_cast<size_t>(*hi - *lo + 1), {});
      seen.assign(static_cast<size_t>(*hi - *lo + 1), false);
      have_support = true;
    } else if (key == "params") {
      std::stringstream ss(value);
      std::string item;
      while (std::getline(ss, item, ',')) {
        item = strip(item);
        if (!valid_identifier(item))
          throw SchemeParseError(lineno, "malformed parameter name '" + item + "'");
        scheme.params.push_back(item);
      }
    } else {
      throw SchemeParseError(lineno, "unknown key '" + key + "'");
    }
  }

  if (!have_name) throw SchemeParseError(lineno, "missing name line");
  if (!have_support) throw SchemeParseError(lineno, "missing support line");
  for (size_t i = 0; i < seen.size(); ++i)
    if (!seen[i])
      throw SchemeParseError(
          lineno, "missing matrix block for index " +
                      std::to_string(scheme.support_min + static_cast<int>(i)));
  return scheme;
}

SchemeFile load_scheme_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemeError("cannot open scheme file '" + path + "'");
  return parse_scheme_file(in);
}

MatrixMask evaluate_scheme(const SchemeFile& scheme, const ParamBinding& binding) {
  std::vector<Matrix2> mats(scheme.entries.size());
  for (size_t i = 0; i < scheme.entries.size(); ++i)
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        mats[i](r, c) = evaluate_expression(
            scheme.entries[i][static_cast<size_t>(r)][static_cast<size_t>(c)], binding);
  return MatrixMask(scheme.support_min, std::move(mats));
}

MatrixMask load_scheme(const std::string& path, const ParamBinding& binding) {
  return evaluate_scheme(load_scheme_file(path), binding);
}

std::string render_scheme(const MatrixMask& mask, const std::string& name) {
  std::ostringstream out;
  out << "name=" << name << "\n";
  if (mask.is_zero()) {
    out << "support=0..0\n";
    out << "matrix 0:\n0, 0\n0, 0\n";
    return out.str();
  }
  out << "support=" << mask.support_min() << ".." << mask.support_max() << "\n";
  for (int j = mask.support_min(); j <= mask.support_max(); ++j) {
    Matrix2 m = mask.at(j);
    out << "matrix " << j << ":\n";
    for (int r = 0; r < 2; ++r)
      out << to_string(m(r, 0)) << ", " << to_string(m(r, 1)) << "\n";
  }
  return out.str();
}

}  // namespace hermite
