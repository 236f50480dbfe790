#include "hardylab/lefun/expr.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hardylab/errors.hpp"

namespace hardylab::lefun {

namespace {

Expr make(Kind k) { return std::make_shared<Node>(k); }

int kind_rank(Kind k) {
  switch (k) {
    case Kind::Const: return 0;
    case Kind::Var: return 1;
    case Kind::Log: return 2;
    case Kind::Exp: return 3;
    case Kind::Abs: return 4;
    case Kind::Pow: return 5;
    case Kind::Mul: return 6;
    case Kind::Add: return 7;
  }
  return 8;
}

// Exact rational q^(a/b) when the result is rational; nullopt otherwise.
std::optional<mpq_class> rational_pow(const mpq_class& q, const mpq_class& e) {
  if (q == 0) return e > 0 ? std::optional<mpq_class>(0) : std::nullopt;
  if (e == 0) return mpq_class(1);
  mpz_class num = e.get_num(), den = e.get_den();
  if (!num.fits_sint_p() || !den.fits_sint_p()) return std::nullopt;
  long n = num.get_si(), d = den.get_si();
  mpq_class base = q;
  if (n < 0) {
    base = 1 / base;
    n = -n;
  }
  if (d > 1) {
    if (base < 0) return std::nullopt;
    mpz_class rn, rd;
    if (!mpz_root(rn.get_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(d)))
      return std::nullopt;
    if (!mpz_root(rd.get_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(d)))
      return std::nullopt;
    base = mpq_class(rn, rd);
    base.canonicalize();
  }
  if (n > 64) return std::nullopt;  // avoid giant exact blowups
  mpq_class r = 1;
  for (long i = 0; i < n; ++i) r *= base;
  return r;
}

}  // namespace

Expr constant(const Scalar& s) {
  auto n = std::make_shared<Node>(Kind::Const);
  n->value = s;
  return n;
}
Expr constant(long n) { return constant(Scalar(n)); }
Expr constant(const mpq_class& q) { return constant(Scalar(q)); }

Expr var_t() {
  static const Expr t = make(Kind::Var);
  return t;
}

Expr add(std::vector<Expr> terms) {
  auto n = std::make_shared<Node>(Kind::Add);
  n->children = std::move(terms);
  return n;
}
Expr mul(std::vector<Expr> factors) {
  auto n = std::make_shared<Node>(Kind::Mul);
  n->children = std::move(factors);
  return n;
}
Expr pow(Expr base, const mpq_class& e) {
  auto n = std::make_shared<Node>(Kind::Pow);
  n->children = {std::move(base)};
  n->exponent = e;
  return n;
}
Expr log_e(Expr arg) {
  auto n = std::make_shared<Node>(Kind::Log);
  n->children = {std::move(arg)};
  return n;
}
Expr exp_e(Expr arg) {
  auto n = std::make_shared<Node>(Kind::Exp);
  n->children = {std::move(arg)};
  return n;
}
Expr abs_e(Expr arg) {
  auto n = std::make_shared<Node>(Kind::Abs);
  n->children = {std::move(arg)};
  return n;
}

Expr named_pi() { return constant(Scalar::irrational(Scalar::kPi)); }
Expr named_e() { return constant(Scalar::irrational(Scalar::kE)); }
Expr named_sqrt2() { return constant(Scalar::irrational(Scalar::kSqrt2)); }

int compare(const Expr& a, const Expr& b) {
  if (a.get() == b.get()) return 0;
  if (kind_rank(a->kind) != kind_rank(b->kind))
    return kind_rank(a->kind) < kind_rank(b->kind) ? -1 : 1;
  switch (a->kind) {
    case Kind::Const:
      if (a->value == b->value) return 0;
      return a->value < b->value ? -1 : 1;
    case Kind::Var:
      return 0;
    case Kind::Log:
    case Kind::Exp:
    case Kind::Abs:
      return compare(a->children[0], b->children[0]);
    case Kind::Pow: {
      int c = compare(a->children[0], b->children[0]);
      if (c != 0) return c;
      int e = cmp(a->exponent, b->exponent);
      return e < 0 ? -1 : (e > 0 ? 1 : 0);
    }
    case Kind::Add:
    case Kind::Mul: {
      size_t n = std::min(a->children.size(), b->children.size());
      for (size_t i = 0; i < n; ++i) {
        int c = compare(a->children[i], b->children[i]);
        if (c != 0) return c;
      }
      if (a->children.size() != b->children.size())
        return a->children.size() < b->children.size() ? -1 : 1;
      return 0;
    }
  }
  return 0;
}

bool equal(const Expr& a, const Expr& b) { return compare(a, b) == 0; }

bool is_const(const Expr& e) { return e->kind == Kind::Const; }
bool is_zero(const Expr& e) { return is_const(e) && e->value.is_zero(); }
bool is_one(const Expr& e) { return is_const(e) && e->value.is_rational() && e->value.as_rational() == 1; }

namespace {

struct FactorKeyLess {
  bool operator()(const Expr& a, const Expr& b) const { return compare(a, b) < 0; }
};

// A term under construction: exact scalar coefficient and atom -> exponent.
struct TermBuilder {
  Scalar coeff = Scalar(1L);
  std::map<Expr, mpq_class, FactorKeyLess> factors;

  void mul_atom(const Expr& atom, const mpq_class& e) {
    if (e == 0) return;
    auto [it, inserted] = factors.try_emplace(atom, e);
    if (!inserted) {
      it->second += e;
      if (it->second == 0) factors.erase(it);
    }
  }
};

Expr normalize_impl(const Expr& e);

Term builder_to_term(TermBuilder&& tb) {
  Term t;
  t.coeff = tb.coeff;
  for (auto& [atom, e] : tb.factors) t.factors.push_back({atom, e});
  return t;
}

// Multiplies two term lists (full distribution), merging like terms.
std::vector<Term> multiply_sums(const std::vector<Term>& a, const std::vector<Term>& b);

std::vector<Term> collect_terms(std::vector<Term> raw) {
  // Key terms by factor vector, add coefficients.
  auto factor_less = [](const std::vector<Factor>& x, const std::vector<Factor>& y) {
    size_t n = std::min(x.size(), y.size());
    for (size_t i = 0; i < n; ++i) {
      int c = compare(x[i].atom, y[i].atom);
      if (c != 0) return c < 0;
      int e = cmp(x[i].exponent, y[i].exponent);
      if (e != 0) return e < 0;
    }
    return x.size() < y.size();
  };
  std::map<std::vector<Factor>, Scalar, decltype(factor_less)> bucket(factor_less);
  for (auto& t : raw) {
    auto [it, inserted] = bucket.try_emplace(t.factors, t.coeff);
    if (!inserted) it->second = it->second + t.coeff;
  }
  std::vector<Term> out;
  for (auto& [f, c] : bucket) {
    if (c.is_zero()) continue;
    out.push_back({c, f});
  }
  return out;
}

// --- term-level multiplication of one normalized factor into a builder ---

// Fold a normalized expression into the builder as a multiplicative factor
// raised to `e`.  Returns false if the expression is a sum (caller must
// distribute).
bool fold_factor(TermBuilder& tb, const Expr& f, const mpq_class& e);

// Try to simplify exp(single term).  Returns the replacement expression, or
// null if exp(term) should stay as an atom.
Expr exp_of_term(const Term& t) {
  // exp(q * log(u)) = u^q for rational q.
  if (t.factors.size() == 1 && t.factors[0].atom->kind == Kind::Log &&
      t.factors[0].exponent == 1 && t.coeff.is_rational()) {
    return normalize_impl(pow(t.factors[0].atom->children[0], t.coeff.as_rational()));
  }
  return nullptr;
}

Expr make_term_expr(const Term& t);

// exp over a normalized expression: split over sums, pull out constants.
void fold_exp(TermBuilder& tb, const Expr& arg, const mpq_class& outer_e) {
  std::vector<Term> terms = to_terms(arg);
  for (auto& t : terms) {
    Term scaled = t;
    scaled.coeff = scaled.coeff * outer_e;
    if (scaled.factors.empty()) {
      // exp(constant): rational 0 -> 1; otherwise keep a constant atom.
      if (scaled.coeff.is_zero()) continue;
      tb.mul_atom(exp_e(constant(scaled.coeff)), 1);
      continue;
    }
    if (Expr rep = exp_of_term(scaled)) {
      fold_factor(tb, rep, 1);
      continue;
    }
    // Canonical sign: keep the coefficient inside the exp argument.
    tb.mul_atom(exp_e(make_term_expr(scaled)), 1);
  }
}

bool fold_factor(TermBuilder& tb, const Expr& f, const mpq_class& e) {
  switch (f->kind) {
    case Kind::Const: {
      if (e == 1) {
        if (auto p = Scalar::mul(tb.coeff, f->value)) {
          tb.coeff = *p;
          return true;
        }
        tb.mul_atom(f, 1);
        return true;
      }
      if (f->value.is_rational()) {
        if (auto r = rational_pow(f->value.as_rational(), e)) {
          tb.coeff = tb.coeff * *r;
          return true;
        }
      }
      if (auto st = f->value.single_tag()) {
        if (st->first == Scalar::kSqrt2 && e.get_den() == 1) {
          // (q*sqrt2)^n rational for even n, q^n*2^(n/2)... handle n even.
          long n = e.get_num().get_si();
          if (n % 2 == 0) {
            long h = n / 2;
            mpq_class r = 1;
            mpq_class q2 = st->second * st->second * 2;
            long steps = h >= 0 ? h : -h;
            for (long i = 0; i < steps; ++i) r *= q2;
            if (h < 0) r = 1 / r;
            tb.coeff = tb.coeff * r;
            return true;
          }
        }
      }
      tb.mul_atom(f, e);
      return true;
    }
    case Kind::Var:
      tb.mul_atom(f, e);
      return true;
    case Kind::Log:
      tb.mul_atom(f, e);
      return true;
    case Kind::Exp:
      fold_exp(tb, f->children[0], e);
      return true;
    case Kind::Abs:
      tb.mul_atom(f, e);
      return true;
    case Kind::Pow:
      return fold_factor(tb, f->children[0], e * f->exponent);
    case Kind::Mul: {
      for (const auto& c : f->children)
        if (!fold_factor(tb, c, e)) return false;
      return true;
    }
    case Kind::Add: {
      if (e == 1) return false;  // caller distributes
      if (e.get_den() == 1 && e > 0 && e <= 6) return false;  // caller expands
      tb.mul_atom(f, e);  // opaque power-of-sum atom
      return true;
    }
  }
  return true;
}

Expr make_term_expr(const Term& t) {
  std::vector<Expr> fs;
  if (!(t.coeff.is_rational() && t.coeff.as_rational() == 1) || t.factors.empty())
    fs.push_back(constant(t.coeff));
  for (const auto& f : t.factors) {
    if (f.exponent == 1)
      fs.push_back(f.atom);
    else
      fs.push_back(pow(f.atom, f.exponent));
  }
  if (fs.empty()) return constant(1L);
  if (fs.size() == 1) return fs[0];
  return mul(std::move(fs));
}

std::vector<Term> expr_to_terms(const Expr& e);

std::vector<Term> multiply_sums(const std::vector<Term>& a, const std::vector<Term>& b) {
  std::vector<Term> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) {
      TermBuilder tb;
      if (auto p = Scalar::mul(x.coeff, y.coeff)) {
        tb.coeff = *p;
      } else {
        // Irrational*irrational coefficient: keep one as a constant atom.
        tb.coeff = x.coeff;
        tb.mul_atom(constant(y.coeff), 1);
      }
      for (const auto& f : x.factors) tb.mul_atom(f.atom, f.exponent);
      for (const auto& f : y.factors) tb.mul_atom(f.atom, f.exponent);
      out.push_back(builder_to_term(std::move(tb)));
    }
  }
  return collect_terms(std::move(out));
}

// Core: normalized expression -> term list (assumes children normalized).
std::vector<Term> expr_to_terms(const Expr& e) {
  switch (e->kind) {
    case Kind::Add: {
      std::vector<Term> out;
      for (const auto& c : e->children) {
        auto ts = expr_to_terms(c);
        out.insert(out.end(), ts.begin(), ts.end());
      }
      return collect_terms(std::move(out));
    }
    default: {
      TermBuilder tb;
      if (fold_factor(tb, e, 1)) {
        std::vector<Term> out;
        Term t = builder_to_term(std::move(tb));
        if (!t.coeff.is_zero()) out.push_back(std::move(t));
        return out;
      }
      // A sum reached multiplicatively: distribute.
      // Decompose e as Mul/Pow with sum children.
      if (e->kind == Kind::Mul) {
        std::vector<Term> acc = {Term{Scalar(1L), {}}};
        for (const auto& c : e->children) acc = multiply_sums(acc, expr_to_terms(c));
        return acc;
      }
      if (e->kind == Kind::Pow) {
        // Positive small integer power of a sum: repeated multiplication.
        auto base_terms = expr_to_terms(e->children[0]);
        long n = e->exponent.get_num().get_si();
        std::vector<Term> acc = {Term{Scalar(1L), {}}};
        for (long i = 0; i < n; ++i) acc = multiply_sums(acc, base_terms);
        return acc;
      }
      return {};
    }
  }
}

Expr terms_to_expr_sorted(std::vector<Term> ts) {
  if (ts.empty()) return constant(0L);
  std::vector<Expr> summands;
  summands.reserve(ts.size());
  for (auto& t : ts) summands.push_back(make_term_expr(t));
  std::sort(summands.begin(), summands.end(),
            [](const Expr& a, const Expr& b) { return compare(a, b) < 0; });
  if (summands.size() == 1) return summands[0];
  return add(std::move(summands));
}

Expr normalize_impl(const Expr& e) {
  switch (e->kind) {
    case Kind::Const:
    case Kind::Var:
      return e;
    case Kind::Add: {
      std::vector<Term> all;
      for (const auto& c : e->children) {
        auto ts = expr_to_terms(normalize_impl(c));
        all.insert(all.end(), ts.begin(), ts.end());
      }
      return terms_to_expr_sorted(collect_terms(std::move(all)));
    }
    case Kind::Mul: {
      std::vector<Term> acc = {Term{Scalar(1L), {}}};
      for (const auto& c : e->children) acc = multiply_sums(acc, expr_to_terms(normalize_impl(c)));
      return terms_to_expr_sorted(std::move(acc));
    }
    case Kind::Pow: {
      Expr base = normalize_impl(e->children[0]);
      if (e->exponent == 0) return constant(1L);
      if (e->exponent == 1) return base;
      if (is_zero(base)) {
        if (e->exponent > 0) return constant(0L);
        throw DomainError("0 raised to a nonpositive power");
      }
      return terms_to_expr_sorted(expr_to_terms(pow(base, e->exponent)));
    }
    case Kind::Exp: {
      Expr arg = normalize_impl(e->children[0]);
      TermBuilder tb;
      fold_exp(tb, arg, 1);
      Term t = builder_to_term(std::move(tb));
      return terms_to_expr_sorted({t});
    }
    case Kind::Log: {
      Expr arg = normalize_impl(e->children[0]);
      if (is_zero(arg)) throw DomainError("log of zero");
      // log(exp(u)) = u
      if (arg->kind == Kind::Exp) return arg->children[0];
      auto ts = to_terms(arg);
      if (ts.size() == 1) {
        const Term& t = ts[0];
        bool trivial_split = t.factors.size() == 1 && t.factors[0].exponent == 1 &&
                             t.coeff.is_rational() && t.coeff.as_rational() == 1 &&
                             t.factors[0].atom->kind != Kind::Exp;
        if (t.coeff.sign() > 0 && !t.factors.empty() && !trivial_split) {
          // log(c * prod a^r) = log c + sum r*log(a), with log(exp u) = u.
          std::vector<Term> sum;
          if (!(t.coeff.is_rational() && t.coeff.as_rational() == 1)) {
            auto lc = expr_to_terms(normalize_impl(log_e(constant(t.coeff))));
            sum.insert(sum.end(), lc.begin(), lc.end());
          }
          for (const auto& f : t.factors) {
            Expr lf;
            if (f.atom->kind == Kind::Exp)
              lf = f.atom->children[0];
            else
              lf = normalize_impl(log_e(f.atom));
            auto lt = expr_to_terms(nmul(Scalar(f.exponent), lf));
            sum.insert(sum.end(), lt.begin(), lt.end());
          }
          return terms_to_expr_sorted(collect_terms(std::move(sum)));
        }
        if (t.factors.empty()) {
          // log of a constant
          const Scalar& v = t.coeff;
          if (v.sign() <= 0) throw DomainError("log of nonpositive constant");
          if (v.is_rational() && v.as_rational() == 1) return constant(0L);
          if (auto st = v.single_tag()) {
            if (st->first == Scalar::kE && st->second == 1) return constant(1L);
            if (st->first == Scalar::kSqrt2 && st->second == 1)
              return nmul(Scalar(mpq_class(1, 2)), log_e(constant(2L)));
          }
          return log_e(constant(v));
        }
      }
      return log_e(arg);
    }
    case Kind::Abs: {
      Expr arg = normalize_impl(e->children[0]);
      if (arg->kind == Kind::Const) {
        Scalar v = arg->value;
        return v.sign() < 0 ? constant(-v) : constant(v);
      }
      return abs_e(arg);
    }
  }
  return e;
}

}  // namespace

Expr normalize(const Expr& e) { return normalize_impl(e); }

std::vector<Term> to_terms(const Expr& e) { return expr_to_terms(e); }

Expr term_to_expr(const Term& t) { return make_term_expr(t); }

Expr terms_to_expr(const std::vector<Term>& ts) {
  return terms_to_expr_sorted(std::vector<Term>(ts));
}

Expr nadd(const Expr& a, const Expr& b) { return normalize(add({a, b})); }
Expr nsub(const Expr& a, const Expr& b) {
  return normalize(add({a, mul({constant(-1L), b})}));
}
Expr nmul(const Expr& a, const Expr& b) { return normalize(mul({a, b})); }
Expr nmul(const Scalar& s, const Expr& a) { return normalize(mul({constant(s), a})); }
Expr npow(const Expr& a, const mpq_class& e) { return normalize(pow(a, e)); }

namespace {

int precedence(Kind k) {
  switch (k) {
    case Kind::Add: return 1;
    case Kind::Mul: return 2;
    case Kind::Pow: return 3;
    default: return 4;
  }
}

void print_rec(std::ostringstream& os, const Expr& e, int parent_prec) {
  int prec = precedence(e->kind);
  bool paren = prec < parent_prec;
  switch (e->kind) {
    case Kind::Const: {
      std::string s = e->value.str();
      bool needs = s.find_first_of("+- ") != std::string::npos && parent_prec > 1;
      if (needs) os << "(" << s << ")";
      else os << s;
      return;
    }
    case Kind::Var:
      os << "t";
      return;
    case Kind::Log:
      os << "log(";
      print_rec(os, e->children[0], 0);
      os << ")";
      return;
    case Kind::Exp:
      os << "exp(";
      print_rec(os, e->children[0], 0);
      os << ")";
      return;
    case Kind::Abs:
      os << "abs(";
      print_rec(os, e->children[0], 0);
      os << ")";
      return;
    case Kind::Pow: {
      if (paren) os << "(";
      print_rec(os, e->children[0], prec + 1);
      os << "^";
      if (e->exponent.get_den() == 1) {
        if (e->exponent < 0) os << "(" << e->exponent.get_str() << ")";
        else os << e->exponent.get_str();
      } else {
        os << "(" << e->exponent.get_str() << ")";
      }
      if (paren) os << ")";
      return;
    }
    case Kind::Mul: {
      if (paren) os << "(";
      bool first = true;
      for (const auto& c : e->children) {
        if (!first) os << "*";
        print_rec(os, c, prec);
        first = false;
      }
      if (paren) os << ")";
      return;
    }
    case Kind::Add: {
      if (paren) os << "(";
      bool first = true;
      for (const auto& c : e->children) {
        if (!first) os << " + ";
        print_rec(os, c, prec);
        first = false;
      }
      if (paren) os << ")";
      return;
    }
  }
}

}  // namespace

std::string to_string(const Expr& e) {
  std::ostringstream os;
  print_rec(os, e, 0);
  return os.str();
}

}  // namespace hardylab::lefun
