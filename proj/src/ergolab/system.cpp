#include "hardylab/ergolab/system.hpp"

#include <cmath>

#include "hardylab/errors.hpp"
#include "hardylab/lefun/calculus.hpp"

namespace hardylab::ergolab {

BigFloat mod1(const BigFloat& v) {
  BigFloat f = v - floor(v);
  // guard against f == 1 after rounding
  if (!(f < BigFloat(1.0, f.prec()))) f = f - BigFloat(1.0, f.prec());
  if (f.sign() < 0) f = f + BigFloat(1.0, f.prec());
  return f;
}

int SystemSpec::dim() const {
  if (auto* r = std::get_if<TorusRotation>(&kind)) return r->dim;
  return 2;
}

namespace {

bool looks_irrational(const lefun::Expr& alpha) {
  BigFloat v = lefun::eval_expr(alpha, BigFloat(1.0, 256));
  double x = v.to_double();
  // continued-fraction reconstruction, denominator bound 1e6
  long p0 = 1, q0 = 0, p1 = 0, q1 = 1;
  double frac = x;
  for (int it = 0; it < 60; ++it) {
    double a = std::floor(frac);
    long ai = static_cast<long>(a);
    long p2 = ai * p0 + p1, q2 = ai * q0 + q1;
    if (std::abs(q2) > 1000000) break;
    p1 = p0; q1 = q0; p0 = p2; q0 = q2;
    double rem = frac - a;
    if (std::abs(rem) < 1e-18) break;
    frac = 1.0 / rem;
  }
  if (q0 == 0) return true;
  double err = std::abs(x - static_cast<double>(p0) / static_cast<double>(q0));
  return err > 1e-24;
}

}  // namespace

bool SystemSpec::ergodic_flag() const {
  if (auto* r = std::get_if<TorusRotation>(&kind)) {
    for (const auto& a : r->alpha)
      if (!looks_irrational(a)) return false;
    return true;
  }
  if (auto* s = std::get_if<SkewProduct>(&kind)) return looks_irrational(s->alpha);
  // hyperbolic automorphisms are ergodic
  return hyperbolic_flag();
}

bool SystemSpec::hyperbolic_flag() const {
  auto* m = std::get_if<ToralAutomorphism>(&kind);
  if (!m) return false;
  long det = m->a[0][0] * m->a[1][1] - m->a[0][1] * m->a[1][0];
  long tr = m->a[0][0] + m->a[1][1];
  if (det != 1 && det != -1) return false;
  if (det == 1) return tr > 2 || tr < -2;
  return tr != 0;  // det == -1
}

SystemSpec make_rotation(std::vector<lefun::Expr> alpha) {
  TorusRotation r;
  r.dim = static_cast<int>(alpha.size());
  for (auto& a : alpha) r.alpha.push_back(lefun::normalize(a));
  return SystemSpec{r};
}

SystemSpec make_skew(lefun::Expr alpha) {
  return SystemSpec{SkewProduct{lefun::normalize(alpha)}};
}

SystemSpec make_automorphism(long a, long b, long c, long d) {
  ToralAutomorphism m;
  m.a = {{{a, b}, {c, d}}};
  long det = a * d - b * c;
  if (det != 1 && det != -1)
    throw UnsupportedSystem("toral automorphism requires |det| = 1");
  return SystemSpec{m};
}

Point zero_point(const SystemSpec& sys, mpfr_prec_t prec) {
  Point p;
  for (int i = 0; i < sys.dim(); ++i) p.x.push_back(BigFloat(0.0, prec));
  return p;
}

namespace {

// Exact 2x2 integer matrix power via binary exponentiation (mpz entries).
std::array<std::array<mpz_class, 2>, 2> matrix_power(const ToralAutomorphism& A, long m) {
  std::array<std::array<mpz_class, 2>, 2> base = {
      {{mpz_class(A.a[0][0]), mpz_class(A.a[0][1])},
       {mpz_class(A.a[1][0]), mpz_class(A.a[1][1])}}};
  if (m < 0) {
    long det = A.a[0][0] * A.a[1][1] - A.a[0][1] * A.a[1][0];
    // inverse = adj / det with det = +-1
    std::array<std::array<mpz_class, 2>, 2> inv = {
        {{mpz_class(A.a[1][1] * det), mpz_class(-A.a[0][1] * det)},
         {mpz_class(-A.a[1][0] * det), mpz_class(A.a[0][0] * det)}}};
    base = inv;
    m = -m;
  }
  std::array<std::array<mpz_class, 2>, 2> acc = {
      {{mpz_class(1), mpz_class(0)}, {mpz_class(0), mpz_class(1)}}};
  auto mul = [](const auto& X, const auto& Y) {
    std::array<std::array<mpz_class, 2>, 2> Z;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        Z[i][j] = X[i][0] * Y[0][j] + X[i][1] * Y[1][j];
    return Z;
  };
  while (m > 0) {
    if (m & 1) acc = mul(acc, base);
    base = mul(base, base);
    m >>= 1;
  }
  return acc;
}

}  // namespace

Point power_map(const SystemSpec& sys, long m, const Point& x) {
  const mpfr_prec_t prec = x.x.empty() ? 256 : x.x[0].prec();
  if (auto* r = std::get_if<TorusRotation>(&sys.kind)) {
    Point out;
    for (int i = 0; i < r->dim; ++i) {
      BigFloat a = lefun::eval_expr(r->alpha[i], BigFloat(1.0, prec));
      out.x.push_back(mod1(x.x[i] + BigFloat(m, prec) * a));
    }
    return out;
  }
  if (auto* s = std::get_if<SkewProduct>(&sys.kind)) {
    BigFloat a = lefun::eval_expr(s->alpha, BigFloat(1.0, prec));
    BigFloat mm(m, prec);
    Point out;
    out.x.push_back(mod1(x.x[0] + mm * a));
    out.x.push_back(mod1(x.x[1] + BigFloat(2 * 1L, prec) * mm * x.x[0] + mm * mm * a));
    return out;
  }
  auto* A = std::get_if<ToralAutomorphism>(&sys.kind);
  if (std::abs(m) > 100000)
    throw ComplexityRefusal("automorphism power beyond 1e5: use the rational-orbit API");
  auto P = matrix_power(*A, m);
  Point out;
  for (int i = 0; i < 2; ++i) {
    BigFloat v(0.0, prec);
    for (int j = 0; j < 2; ++j)
      v = v + BigFloat(mpq_class(P[i][j]), prec) * x.x[j];
    out.x.push_back(mod1(v));
  }
  return out;
}

RationalPoint automorphism_power(const ToralAutomorphism& A, long m, const RationalPoint& p) {
  auto P = matrix_power(A, m);
  RationalPoint out;
  out.den = p.den;
  mpz_class q(p.den);
  for (int i = 0; i < 2; ++i) {
    mpz_class v = P[i][0] * p.num[0] + P[i][1] * p.num[1];
    mpz_class r = v % q;
    if (r < 0) r += q;
    out.num[i] = r.get_si();
  }
  return out;
}

}  // namespace hardylab::ergolab
