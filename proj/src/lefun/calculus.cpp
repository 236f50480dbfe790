#include "hardylab/lefun/calculus.hpp"

#include <array>

#include "hardylab/errors.hpp"

namespace hardylab::lefun {

namespace {

BigFloat eval_rec(const Expr& e, const BigFloat& t) {
  const mpfr_prec_t prec = t.prec();
  switch (e->kind) {
    case Kind::Const:
      return e->value.to_bigfloat(prec);
    case Kind::Var:
      return t;
    case Kind::Add: {
      BigFloat acc(0.0, prec);
      for (const auto& c : e->children) acc = acc + eval_rec(c, t);
      return acc;
    }
    case Kind::Mul: {
      BigFloat acc(1.0, prec);
      for (const auto& c : e->children) acc = acc * eval_rec(c, t);
      return acc;
    }
    case Kind::Pow: {
      BigFloat b = eval_rec(e->children[0], t);
      bool fractional = e->exponent.get_den() != 1;
      if (fractional && b.sign() < 0)
        throw DomainError("fractional power of negative base");
      if (b.is_zero() && e->exponent < 0) throw DomainError("zero raised to negative power");
      BigFloat r = pow(b, BigFloat(e->exponent, prec));
      if (!r.is_finite()) throw DomainError("power evaluation overflow");
      return r;
    }
    case Kind::Log: {
      BigFloat a = eval_rec(e->children[0], t);
      if (a.sign() <= 0) throw DomainError("log of nonpositive argument");
      return log(a);
    }
    case Kind::Exp: {
      BigFloat r = exp(eval_rec(e->children[0], t));
      if (!r.is_finite()) throw DomainError("exp evaluation overflow");
      return r;
    }
    case Kind::Abs:
      return abs(eval_rec(e->children[0], t));
  }
  throw DomainError("unreachable expression kind");
}

// Strict domain probe: also rejects zero bases of fractional powers of
// non-variable subexpressions (derivative singularities at the boundary).
bool probe_ok(const Expr& e, const BigFloat& t) {
  try {
    BigFloat v = eval_rec(e, t);
    if (!v.is_finite()) return false;
  } catch (const DomainError&) {
    return false;
  }
  // Extra strictness on fractional powers of compound bases.
  switch (e->kind) {
    case Kind::Pow: {
      if (e->exponent.get_den() != 1 && e->children[0]->kind != Kind::Var) {
        try {
          if (eval_rec(e->children[0], t).sign() <= 0) return false;
        } catch (const DomainError&) {
          return false;
        }
      }
      break;
    }
    default:
      break;
  }
  for (const auto& c : e->children)
    if (!probe_ok(c, t)) return false;
  return true;
}

}  // namespace

LEFunction make_function(const Expr& raw, double floor_hint) {
  LEFunction f;
  f.expr = normalize(raw);
  f.domain_floor = floor_hint;
  return f;
}

LEFunction make_function(const Expr& raw) {
  LEFunction f;
  f.expr = normalize(raw);
  static const std::array<double, 12> candidates = {0.0, 1.0, 1.5, 2.0,  3.0,  4.0,
                                                    8.0, 16., 32., 64., 128., 1024.};
  for (double c : candidates) {
    std::array<double, 5> samples = {c, c == 0.0 ? 1e-6 : c * (1 + 1e-9), c + 1.0,
                                     4 * (c + 1.0), 100 * (c + 1.0)};
    bool ok = true;
    for (double s : samples) {
      if (!probe_ok(f.expr, BigFloat(s, 128))) {
        ok = false;
        break;
      }
    }
    if (ok) {
      f.domain_floor = c;
      return f;
    }
  }
  throw DomainError("could not infer a domain floor for: " + to_string(f.expr));
}

BigFloat eval(const LEFunction& f, const BigFloat& t) {
  if (t < BigFloat(f.domain_floor, t.prec()))
    throw DomainError("evaluation below domain floor");
  return eval_rec(f.expr, t);
}

BigFloat eval(const LEFunction& f, double t, mpfr_prec_t prec) {
  return eval(f, BigFloat(t, prec));
}

BigFloat eval_expr(const Expr& e, const BigFloat& t) { return eval_rec(e, t); }

namespace {

Expr d1(const Expr& e) {
  switch (e->kind) {
    case Kind::Const:
      return constant(0L);
    case Kind::Var:
      return constant(1L);
    case Kind::Add: {
      std::vector<Expr> parts;
      for (const auto& c : e->children) parts.push_back(d1(c));
      return add(std::move(parts));
    }
    case Kind::Mul: {
      std::vector<Expr> parts;
      for (size_t i = 0; i < e->children.size(); ++i) {
        std::vector<Expr> fs;
        for (size_t j = 0; j < e->children.size(); ++j)
          fs.push_back(i == j ? d1(e->children[j]) : e->children[j]);
        parts.push_back(mul(std::move(fs)));
      }
      return add(std::move(parts));
    }
    case Kind::Pow: {
      // (u^q)' = q u^(q-1) u'
      return mul({constant(e->exponent), pow(e->children[0], e->exponent - 1),
                  d1(e->children[0])});
    }
    case Kind::Log:
      return mul({d1(e->children[0]), pow(e->children[0], -1)});
    case Kind::Exp:
      return mul({d1(e->children[0]), e});
    case Kind::Abs:
      throw DomainError("derivative of abs is not supported");
  }
  throw DomainError("unreachable expression kind");
}

}  // namespace

Expr derivative_expr(const Expr& e, unsigned k) {
  Expr cur = normalize(e);
  for (unsigned i = 0; i < k; ++i) cur = normalize(d1(cur));
  return cur;
}

LEFunction derivative(const LEFunction& f, unsigned k) {
  LEFunction g;
  g.expr = derivative_expr(f.expr, k);
  g.domain_floor = f.domain_floor;
  return g;
}

}  // namespace hardylab::lefun
