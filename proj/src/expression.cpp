#include "dubois/expression.hpp"

#include <cctype>
#include <limits>

#include "dubois/errors.hpp"

namespace dubois {
namespace {

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> variables)
      : text_(text), vars_(variables) {}

  Polynomial parse() {
    Polynomial result = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  Polynomial expr() {
    skip_space();
    bool negate = false;
    if (peek() == '-') {
      ++pos_;
      negate = true;
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_space();
      const char op = peek();
      if (op != '+' && op != '-') break;
      ++pos_;
      Polynomial rhs = term();
      acc = op == '+' ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      skip_space();
      if (peek() != '*') break;
      ++pos_;
      acc = acc * factor();
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    skip_space();
    if (peek() != '^') return b;
    ++pos_;
    skip_space();
    const std::size_t at = pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      fail("exponent must be a nonnegative integer literal", at);
    }
    const Integer e = digits();
    if (e > std::numeric_limits<Exponent>::max()) fail("exponent too large", at);
    return b.pow(e.get_ui());
  }

  Polynomial base() {
    skip_space();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Polynomial::constant(Ring::integers(), vars_.size(), digits());
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t at = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = text_.substr(at, pos_ - at);
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == name) return Polynomial::variable(Ring::integers(), vars_.size(), i);
      }
      fail("unknown variable '" + std::string(name) + "'", at);
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Integer digits() {
    const std::size_t at = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Integer(std::string(text_.substr(at, pos_ - at)));
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }
  [[noreturn]] void fail(const std::string& msg, std::size_t at) const { throw ParseError(msg, at); }

  std::string_view text_;
  std::span<const std::string> vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, std::span<const std::string> variables) {
  return Parser(text, variables).parse();
}

std::string to_string(const Monomial& m, std::span<const std::string> variables) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (i >= variables.size()) throw PreconditionError("to_string: not enough variable names");
    if (!out.empty()) out += '*';
    out += variables[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? std::string("1") : out;
}

std::string to_string(const Polynomial& f, std::span<const std::string> variables) {
  if (f.is_zero()) return "0";
  std::string out;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    const Integer magnitude = abs(c);
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (m.is_one()) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) out += magnitude.get_str() + '*';
      out += to_string(m, variables);
    }
  }
  return out;
}

std::string to_string(const Polynomial& f) { return to_string(f, default_variable_names(f.num_vars())); }

}  // namespace dubois
