#include "hardylab/lefun/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hardylab/errors.hpp"

namespace hardylab::lefun {

namespace {

// Pure monomial c * t^n with integer n >= 0 (the polynomial part), including
// plain constants.
bool is_poly_monomial(const Term& t, long* degree) {
  if (t.factors.empty()) {
    *degree = 0;
    return true;
  }
  if (t.factors.size() == 1 && t.factors[0].atom->kind == Kind::Var &&
      t.factors[0].exponent.get_den() == 1 && t.factors[0].exponent >= 0) {
    *degree = t.factors[0].exponent.get_num().get_si();
    return true;
  }
  return false;
}

struct BasisSlot {
  Term basis;       // coefficient 1
  Expr basis_expr;  // cached expression form
};

}  // namespace

Decomposition decompose(const std::vector<LEFunction>& as) {
  Decomposition out;
  const size_t k = as.size();
  std::vector<BasisSlot> slots;
  std::vector<std::vector<DecompCoef>> coef(k);
  std::vector<std::vector<Scalar>> pcoef(k);
  std::vector<std::vector<Term>> residual_terms(k);

  for (size_t i = 0; i < k; ++i) {
    Expr e = normalize(as[i].expr);
    for (const Term& t : to_terms(e)) {
      long deg = 0;
      if (is_poly_monomial(t, &deg)) {
        auto& pc = pcoef[i];
        if (pc.size() <= static_cast<size_t>(deg)) pc.resize(deg + 1, Scalar(0L));
        pc[deg] = pc[deg] + t.coeff;
        continue;
      }
      TermClass cls = classify_term(t);
      if (cls.kind == TermLimit::Unknown)
        throw NormalFormError("cannot classify term " + to_string(term_to_expr(t)));
      if (cls.kind == TermLimit::ToZero) {
        residual_terms[i].push_back(t);
        continue;
      }
      if (cls.kind == TermLimit::ToConstant)
        throw NormalFormError("term with nonzero finite limit cannot be split: " +
                              to_string(term_to_expr(t)));
      // Divergent and not a pure monomial: strongly non-polynomial content.
      Term basis = t;
      basis.coeff = Scalar(1L);
      bool placed = false;
      for (size_t j = 0; j < slots.size(); ++j) {
        GrowthComparison cmp =
            compare_growth_expr(term_to_expr(basis), slots[j].basis_expr);
        if (cmp.verdict == Verdict::Inconclusive)
          throw InconclusiveError("basis merge undecided for " +
                                  to_string(term_to_expr(basis)));
        if (cmp.verdict != Verdict::SameRate) continue;
        if (coef[i].size() < slots.size()) coef[i].resize(slots.size());
        DecompCoef add;
        if (cmp.exact_limit && cmp.exact_limit->is_rational() &&
            cmp.exact_limit->as_rational() == 1) {
          add = {t.coeff, t.coeff.to_double(), true};
        } else {
          add = {Scalar(0L), t.coeff.to_double() * cmp.limit, false};
        }
        DecompCoef& slot = coef[i][j];
        if (slot.is_exact && add.is_exact)
          slot = {slot.exact + add.exact, slot.value + add.value, true};
        else
          slot = {Scalar(0L), slot.value + add.value, false};
        placed = true;
        break;
      }
      if (!placed) {
        slots.push_back({basis, term_to_expr(basis)});
        for (size_t ii = 0; ii < k; ++ii) coef[ii].resize(slots.size());
        coef[i].back() = {t.coeff, t.coeff.to_double(), true};
      }
    }
    coef[i].resize(slots.size());
  }
  for (size_t i = 0; i < k; ++i) coef[i].resize(slots.size());

  // Order basis functions by increasing growth.
  std::vector<size_t> order(slots.size());
  for (size_t j = 0; j < order.size(); ++j) order[j] = j;
  std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
    GrowthComparison cmp = compare_growth_expr(slots[x].basis_expr, slots[y].basis_expr);
    return cmp.verdict == Verdict::Dominated;
  });

  for (size_t j : order) out.g.push_back(make_function(slots[j].basis_expr));
  out.c.resize(k);
  for (size_t i = 0; i < k; ++i)
    for (size_t j : order) out.c[i].push_back(coef[i][j]);

  out.p_coeffs = pcoef;
  for (size_t i = 0; i < k; ++i) {
    std::vector<Expr> monos;
    for (size_t d = 0; d < pcoef[i].size(); ++d) {
      if (pcoef[i][d].is_zero()) continue;
      monos.push_back(nmul(pcoef[i][d], npow(var_t(), static_cast<long>(d))));
    }
    out.p.push_back(monos.empty() ? constant(0L) : normalize(add(monos)));
  }

  // Residual ladder: sup_i |a_i - sum c g - p_i| at the sample points.
  const double pts[4] = {1e3, 1e6, 1e9, 1e12};
  for (double tp : pts) {
    bool usable = true;
    for (const auto& a : as)
      if (tp < a.domain_floor) usable = false;
    if (!usable) continue;
    BigFloat t(tp, 256);
    double sup = 0.0;
    for (size_t i = 0; i < k && usable; ++i) {
      try {
        BigFloat v = eval_expr(normalize(as[i].expr), t);
        for (size_t j = 0; j < out.g.size(); ++j)
          v = v - BigFloat(out.c[i][j].value, 256) * eval_expr(out.g[j].expr, t);
        v = v - eval_expr(out.p[i], t);
        sup = std::max(sup, std::abs(v.to_double()));
      } catch (const DomainError&) {
        usable = false;
      }
    }
    if (usable) out.residual_ladder.push_back({tp, sup});
  }
  for (auto& [tp, s] : out.residual_ladder)
    out.residual_bound = std::max(out.residual_bound, s);
  return out;
}

namespace {

// Rational reconstruction by continued fractions with denominator bound 1e6.
enum class RatKind { Rational, Irrational, Undecided };

RatKind reconstruct_ratio(double x, mpq_class* out) {
  const long kDenBound = 1000000;
  long p0 = 1, q0 = 0, p1 = 0, q1 = 1;
  double frac = x;
  for (int it = 0; it < 40; ++it) {
    double a = std::floor(frac);
    long ai = static_cast<long>(a);
    long p2 = ai * p0 + p1, q2 = ai * q0 + q1;
    if (std::abs(q2) > kDenBound) break;
    p1 = p0;
    q1 = q0;
    p0 = p2;
    q0 = q2;
    double rem = frac - a;
    if (std::abs(rem) < 1e-18) break;
    frac = 1.0 / rem;
  }
  if (q0 == 0) return RatKind::Undecided;
  double approx = static_cast<double>(p0) / static_cast<double>(q0);
  double err = std::abs(x - approx);
  double scale = std::max(1.0, std::abs(x));
  if (err < 1e-24 * scale) {
    if (out) *out = mpq_class(p0, q0);
    return RatKind::Rational;
  }
  if (err > 1e-22 * scale) return RatKind::Irrational;
  return RatKind::Undecided;
}

std::string poly_to_string(const std::vector<Scalar>& coeffs) {
  std::vector<Expr> monos;
  for (size_t d = 0; d < coeffs.size(); ++d) {
    if (coeffs[d].is_zero()) continue;
    monos.push_back(nmul(coeffs[d], npow(var_t(), static_cast<long>(d))));
  }
  if (monos.empty()) return "0";
  return to_string(normalize(add(monos)));
}

}  // namespace

OneGoodResult is_one_good(const LEFunction& a) {
  Decomposition d = decompose({a});

  // (i) strongly non-polynomial content whose fastest term beats log t.
  if (!d.g.empty()) {
    const LEFunction& gmax = d.g.back();
    GrowthComparison cl = compare_growth_expr(gmax.expr, log_e(var_t()));
    if (cl.verdict == Verdict::Inconclusive)
      throw InconclusiveError("cannot compare non-polynomial part with log t");
    if (cl.verdict == Verdict::Dominates)
      return {true, "non-polynomial term " + to_string(gmax.expr) + " dominates log t"};
  }

  // (ii) non-constant polynomial part outside the real multiples of integer
  // polynomials.
  std::vector<Scalar> pc = d.p_coeffs.empty() ? std::vector<Scalar>{} : d.p_coeffs[0];
  std::vector<size_t> nz;
  for (size_t j = 1; j < pc.size(); ++j)
    if (!pc[j].is_zero()) nz.push_back(j);

  if (!nz.empty()) {
    const Scalar& lead = pc[nz.back()];
    bool undecided = false;
    for (size_t j : nz) {
      mpq_class q;
      Scalar::RatioKind rk = Scalar::ratio(pc[j], lead, &q);
      if (rk == Scalar::RatioKind::Rational) continue;
      if (rk == Scalar::RatioKind::Irrational) {
        std::ostringstream os;
        os << "coefficient ratio at degree " << j
           << " is irrational: polynomial part lies outside CZ[t]";
        return {true, os.str()};
      }
      // The exact representation cannot settle it (pi vs e mixes).  Numeric
      // reconstruction cannot establish rationality of such a ratio either;
      // it only confirms rationals with denominator <= 1e6.
      RatKind nk = reconstruct_ratio(pc[j].to_double() / lead.to_double(), &q);
      if (nk == RatKind::Rational) continue;
      undecided = true;
    }
    if (undecided)
      throw IrrationalityUndecided("coefficient ratio rationality undecided for " +
                                   poly_to_string(pc));
    std::string witness = "p(t) = " + poly_to_string(pc);
    if (!d.g.empty())
      witness += "; remaining non-polynomial part does not dominate log t";
    return {false, witness};
  }

  std::vector<Scalar> cw =
      pc.empty() ? std::vector<Scalar>{Scalar(0L)} : std::vector<Scalar>{pc[0]};
  return {false, "p(t) = " + poly_to_string(cw) +
                     (d.g.empty() ? "" : "; non-polynomial part does not dominate log t")};
}

}  // namespace hardylab::lefun
