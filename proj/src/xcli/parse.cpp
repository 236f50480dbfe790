#include "hardylab/xcli/parse.hpp"

#include <cctype>

#include "hardylab/errors.hpp"

namespace hardylab::xcli {

using namespace lefun;

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& expected) {
    throw ParseError("parse error at byte " + std::to_string(pos) + ": expected " + expected,
                     pos);
  }

  bool ident_ahead(const std::string& word) {
    skip_ws();
    if (s.compare(pos, word.size(), word) != 0) return false;
    size_t end = pos + word.size();
    if (end < s.size() &&
        (std::isalnum(static_cast<unsigned char>(s[end])) || s[end] == '_'))
      return false;
    return true;
  }
  bool eat_ident(const std::string& word) {
    if (!ident_ahead(word)) return false;
    pos += word.size();
    return true;
  }

  mpq_class parse_integer() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    size_t digits = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      ++pos;
      ++digits;
    }
    if (digits == 0) fail("integer");
    return mpq_class(s.substr(start, pos - start));
  }

  // rational := integer ('/' positive-integer)?  with optional parentheses.
  // The '/' is taken only when digits follow, so "t^2/t" parses as (t^2)/t.
  mpq_class parse_rational() {
    skip_ws();
    bool paren = eat('(');
    mpq_class num = parse_integer();
    size_t save = pos;
    if (eat('/')) {
      skip_ws();
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        mpq_class den = parse_integer();
        if (den <= 0) fail("positive integer denominator");
        num = num / den;
      } else {
        pos = save;
      }
    }
    if (paren && !eat(')')) fail("')' closing exponent");
    num.canonicalize();
    return num;
  }

  Expr parse_number() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    bool has_frac = false;
    if (pos < s.size() && s[pos] == '.') {
      ++pos;
      has_frac = true;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    if (pos == start) fail("number");
    std::string text = s.substr(start, pos - start);
    if (!has_frac) return constant(mpq_class(text));
    // Decimal literal: exact rational  digits / 10^k.
    size_t dot = text.find('.');
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    size_t k = text.size() - dot - 1;
    mpz_class den = 1;
    for (size_t i = 0; i < k; ++i) den *= 10;
    mpq_class q(mpz_class(digits.empty() ? "0" : digits), den);
    q.canonicalize();
    return constant(q);
  }

  Expr parse_atom() {
    skip_ws();
    if (pos >= s.size()) fail("atom");
    if (eat_ident("sqrt2")) return named_sqrt2();
    if (eat_ident("pi")) return named_pi();
    if (eat_ident("log")) {
      if (!eat('(')) fail("'(' after log");
      Expr a = parse_expr_rule();
      if (!eat(')')) fail("')'");
      return log_e(a);
    }
    if (eat_ident("exp")) {
      if (!eat('(')) fail("'(' after exp");
      Expr a = parse_expr_rule();
      if (!eat(')')) fail("')'");
      return exp_e(a);
    }
    if (eat_ident("sqrt")) {
      if (!eat('(')) fail("'(' after sqrt");
      Expr a = parse_expr_rule();
      if (!eat(')')) fail("')'");
      return pow(a, mpq_class(1, 2));
    }
    if (eat_ident("abs")) {
      if (!eat('(')) fail("'(' after abs");
      Expr a = parse_expr_rule();
      if (!eat(')')) fail("')'");
      return abs_e(a);
    }
    if (eat_ident("e")) return named_e();
    if (eat_ident("t")) return var_t();
    if (eat('(')) {
      Expr a = parse_expr_rule();
      if (!eat(')')) fail("')'");
      return a;
    }
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    fail("'t', number, 'pi', 'e', 'sqrt2', 'log(', 'exp(', 'sqrt(' or '('");
  }

  Expr parse_factor() {
    Expr a = parse_atom();
    skip_ws();
    if (eat('^')) {
      mpq_class r = parse_rational();
      return pow(a, r);
    }
    return a;
  }

  Expr parse_term() {
    Expr acc = parse_factor();
    for (;;) {
      skip_ws();
      if (eat('*')) {
        acc = mul({acc, parse_factor()});
      } else if (eat('/')) {
        acc = mul({acc, pow(parse_factor(), -1)});
      } else {
        return acc;
      }
    }
  }

  Expr parse_expr_rule() {
    skip_ws();
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Expr acc = parse_term();
    if (neg) acc = mul({constant(-1L), acc});
    for (;;) {
      skip_ws();
      if (eat('+')) {
        acc = add({acc, parse_term()});
      } else if (eat('-')) {
        acc = add({acc, mul({constant(-1L), parse_term()})});
      } else {
        return acc;
      }
    }
  }
};

}  // namespace

Expr parse_expr(const std::string& text) {
  Parser p(text);
  Expr e = p.parse_expr_rule();
  p.skip_ws();
  if (p.pos != text.size())
    throw ParseError("parse error at byte " + std::to_string(p.pos) + ": trailing input",
                     p.pos);
  return e;
}

lefun::LEFunction parse_lefun(const std::string& text) {
  return lefun::make_function(parse_expr(text));
}

}  // namespace hardylab::xcli
