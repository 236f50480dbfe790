#include "hardylab/petlab/sp_profile.hpp"

#include "hardylab/errors.hpp"

namespace hardylab::petlab {

SPProfile sp_profile(const std::vector<lefun::LEFunction>& fs) {
  // Split each function into sub-linear content plus polynomial.
  lefun::Decomposition d = lefun::decompose(fs);
  for (const auto& g : d.g) {
    auto cmp = lefun::compare_growth_expr(g.expr, lefun::var_t());
    if (cmp.verdict != lefun::Verdict::Dominated)
      throw NotNice("non-polynomial part " + lefun::to_string(g.expr) +
                    " is not sub-linear");
  }
  // Polynomial parts as constant-coefficient variable polynomials.
  std::vector<VarPoly> polys;
  for (const auto& pc : d.p_coeffs) {
    std::vector<AsymCoeff> coeffs;
    for (const Scalar& s : pc) coeffs.push_back(AsymCoeff::constant(s));
    polys.emplace_back(std::move(coeffs));
  }
  // Maximal subset of non-constant, pairwise essentially distinct
  // polynomials, greedily from the first.
  SPProfile out;
  PolyFamily chosen;
  for (size_t i = 0; i < polys.size(); ++i) {
    if (polys[i].is_constant()) continue;
    bool distinct = true;
    for (const auto& q : chosen)
      if ((polys[i] - q).is_constant()) distinct = false;
    if (!distinct) continue;
    chosen.push_back(polys[i]);
    out.chosen.push_back(i);
  }
  out.size = chosen.size();
  if (chosen.empty()) {
    out.degree = 0;
    return out;
  }
  out.degree = 0;
  for (const auto& p : chosen) out.degree = std::max(out.degree, p.degree());
  out.type = family_type(chosen);
  out.leading = leading_vector(chosen, 0);
  return out;
}

}  // namespace hardylab::petlab
