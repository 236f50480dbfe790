#pragma once

#include "hardylab/bigfloat.hpp"
#include "hardylab/lefun/expr.hpp"

namespace hardylab::lefun {

// A logarithmico-exponential function with its inferred domain floor: the
// expression is defined, finite and log-safe for all t >= domain_floor.
struct LEFunction {
  Expr expr;
  double domain_floor = 0.0;
};

// Normalizes and infers the domain floor by probing.
LEFunction make_function(const Expr& raw);
LEFunction make_function(const Expr& raw, double floor_hint);

// High-precision evaluation (>= 64 fractional bits; default 128-bit mantissa).
// Throws DomainError on nonpositive log/pow arguments or t below the floor.
BigFloat eval(const LEFunction& f, const BigFloat& t);
BigFloat eval(const LEFunction& f, double t, mpfr_prec_t prec = 128);

// Expression-level evaluation without the floor check.
BigFloat eval_expr(const Expr& e, const BigFloat& t);

// Exact symbolic k-th derivative, normalized.  derivative(f, 0) == f.
Expr derivative_expr(const Expr& e, unsigned k = 1);
LEFunction derivative(const LEFunction& f, unsigned k = 1);

}  // namespace hardylab::lefun
