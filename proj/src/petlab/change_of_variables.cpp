#include "hardylab/petlab/change_of_variables.hpp"

#include <cmath>

#include "hardylab/errors.hpp"

namespace hardylab::petlab {

using lefun::Expr;
using lefun::LEFunction;

namespace {

// |k! / g^(k)(t)|^(1/k)
Expr block_length_expr(const LEFunction& g, int k) {
  mpz_class fact = 1;
  for (int i = 2; i <= k; ++i) fact *= i;
  Expr dk = lefun::derivative_expr(g.expr, static_cast<unsigned>(k));
  return lefun::normalize(lefun::pow(
      lefun::abs_e(lefun::nmul(Scalar(mpq_class(fact)), lefun::npow(dk, -1))),
      mpq_class(1, k)));
}

}  // namespace

bool window_property_q(const LEFunction& g1, int k1, const LEFunction& g2, int k2) {
  Expr e1 = lefun::normalize(
      lefun::pow(lefun::abs_e(lefun::derivative_expr(g1.expr, k1)), mpq_class(-1, k1)));
  Expr e2 = lefun::normalize(
      lefun::pow(lefun::abs_e(lefun::derivative_expr(g2.expr, k2)), mpq_class(-1, k2)));
  auto c = lefun::compare_growth_expr(e1, e2);
  if (c.verdict == lefun::Verdict::SameRate) return true;
  if (c.verdict == lefun::Verdict::Inconclusive)
    throw InconclusiveError("property Q comparison undecided");
  Expr big = c.verdict == lefun::Verdict::Dominates ? e1 : e2;
  Expr small = c.verdict == lefun::Verdict::Dominates ? e2 : e1;
  Expr ratio = lefun::nmul(big, lefun::npow(small, -1));
  auto frac =
      lefun::compare_growth_expr(ratio, lefun::npow(lefun::var_t(), mpq_class(1, 64)));
  if (frac.verdict == lefun::Verdict::Inconclusive)
    throw InconclusiveError("property Q fractional test undecided");
  return frac.verdict != lefun::Verdict::Dominated;
}

ChangeOfVariables change_of_variables(
    const std::vector<std::pair<LEFunction, int>>& expansions, size_t special, double r) {
  if (special >= expansions.size()) throw DomainError("special index out of range");
  ChangeOfVariables out;
  const auto& [gs, ks] = expansions[special];
  if (r < gs.domain_floor) throw DomainError("r below the special function's floor");

  Expr u_expr = block_length_expr(gs, ks);
  BigFloat rN(r, 256);
  out.u_r = lefun::eval_expr(u_expr, rN).to_double();
  double floor_u = std::floor(out.u_r);

  for (const auto& [g, k] : expansions) {
    mpz_class fact = 1;
    for (int i = 2; i <= k; ++i) fact *= i;
    Expr gk = lefun::derivative_expr(g.expr, static_cast<unsigned>(k));
    // c_g(r) = g^(k)(r)/k! * floor(u(r))^k
    double gk_r = lefun::eval_expr(gk, rN).to_double();
    double c = gk_r / fact.get_d() * std::pow(floor_u, k);
    out.c_g.push_back(c);

    // d_g(t) = g^(k)(t)/k! * |k_s!/gs^(k_s)(t)|^(k/k_s)
    mpz_class fact_s = 1;
    for (int i = 2; i <= ks; ++i) fact_s *= i;
    Expr ds = lefun::normalize(lefun::mul(
        {lefun::nmul(Scalar(mpq_class(1, fact)), gk),
         lefun::pow(lefun::abs_e(lefun::nmul(Scalar(mpq_class(fact_s)),
                                             lefun::npow(lefun::derivative_expr(
                                                             gs.expr, ks),
                                                         -1))),
                    mpq_class(k, ks))}));
    out.d_g.push_back(ds);

    // Claim-2 gap |c_g - d_g| on a ladder of r values.
    std::vector<std::pair<double, double>> ladder;
    for (double rp : {r, r * 10, r * 100, r * 1000}) {
      BigFloat rb(rp, 256);
      double u_rp = lefun::eval_expr(u_expr, rb).to_double();
      double c_rp = lefun::eval_expr(gk, rb).to_double() / fact.get_d() *
                    std::pow(std::floor(u_rp), k);
      double d_rp = lefun::eval_expr(ds, rb).to_double();
      ladder.push_back({rp, std::abs(c_rp - d_rp)});
    }
    out.gap_ladder.push_back(std::move(ladder));

    // Claim-3: d_g converges to a nonzero constant or dominates a fractional
    // power.
    auto cls = lefun::compare_growth_expr(ds, lefun::constant(1L));
    if (cls.verdict == lefun::Verdict::SameRate)
      out.classes.push_back(LimitClass::NonzeroConstant);
    else if (cls.verdict == lefun::Verdict::Dominates)
      out.classes.push_back(LimitClass::FractionalPowerDominant);
    else if (cls.verdict == lefun::Verdict::Dominated)
      out.classes.push_back(LimitClass::Zero);
    else
      throw InconclusiveError("d_g limit classification undecided");
  }
  return out;
}

}  // namespace hardylab::petlab
