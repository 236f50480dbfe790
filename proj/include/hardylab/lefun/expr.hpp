#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "hardylab/scalar.hpp"

namespace hardylab::lefun {

// Expression tree for a logarithmico-exponential function of one variable t.
// After normalize(), an expression is a sum of terms; each term is
// scalar * product of atom^rational factors, with atoms drawn from
// {t, log(expr), exp(term), abs(expr), non-foldable constants, power-of-sum}.
enum class Kind { Const, Var, Add, Mul, Pow, Log, Exp, Abs };

struct Node;
using Expr = std::shared_ptr<const Node>;

struct Node {
  Kind kind;
  Scalar value;                // Const
  std::vector<Expr> children;  // Add, Mul (flattened); unary ops use children[0]
  mpq_class exponent;          // Pow: children[0] ^ exponent

  explicit Node(Kind k) : kind(k) {}
};

// Builders (no normalization applied).
Expr constant(const Scalar& s);
Expr constant(long n);
Expr constant(const mpq_class& q);
Expr var_t();
Expr add(std::vector<Expr> terms);
Expr mul(std::vector<Expr> factors);
Expr pow(Expr base, const mpq_class& e);
Expr log_e(Expr arg);
Expr exp_e(Expr arg);
Expr abs_e(Expr arg);

Expr named_pi();
Expr named_e();
Expr named_sqrt2();

// Convenience combinators (normalized results).
Expr nadd(const Expr& a, const Expr& b);
Expr nsub(const Expr& a, const Expr& b);
Expr nmul(const Expr& a, const Expr& b);
Expr nmul(const Scalar& s, const Expr& a);
Expr npow(const Expr& a, const mpq_class& e);

// Total structural order; 0 iff structurally equal.
int compare(const Expr& a, const Expr& b);
bool equal(const Expr& a, const Expr& b);

bool is_zero(const Expr& e);
bool is_one(const Expr& e);
// Const node (possibly after normalization collapsed everything).
bool is_const(const Expr& e);

// Canonical normal form: flatten/expand/collect.  Idempotent on its image.
Expr normalize(const Expr& e);

// A factor atom^exponent inside a term.
struct Factor {
  Expr atom;
  mpq_class exponent;
};

// One summand of a normalized expression: coeff * prod factors.
struct Term {
  Scalar coeff;
  std::vector<Factor> factors;  // sorted by atom order, exponents nonzero
};

// Views between trees and term lists.  to_terms requires normalized input.
std::vector<Term> to_terms(const Expr& e);
Expr term_to_expr(const Term& t);
Expr terms_to_expr(const std::vector<Term>& ts);

// Grammar-compatible rendering.
std::string to_string(const Expr& e);

}  // namespace hardylab::lefun
