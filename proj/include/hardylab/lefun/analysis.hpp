#pragma once

#include <string>
#include <vector>

#include "hardylab/lefun/growth.hpp"

namespace hardylab::lefun {

// One coefficient of the decomposition, exact when the inputs allowed it.
struct DecompCoef {
  Scalar exact;
  double value = 0.0;
  bool is_exact = true;
};

// a_i(t) = sum_j c[i][j] * g[j](t) + p_i(t) + o_t(1)
// with g_1 < g_2 < ... < g_m strongly non-polynomial.
struct Decomposition {
  std::vector<LEFunction> g;
  std::vector<std::vector<DecompCoef>> c;      // k x m
  std::vector<Expr> p;                         // real polynomials in t
  std::vector<std::vector<Scalar>> p_coeffs;   // per function, by degree
  double residual_bound = 0.0;                 // sup of |residual| on the ladder
  std::vector<std::pair<double, double>> residual_ladder;  // (t, sup_i |res_i|)
};

// Splits sum-of-terms inputs into polynomial monomials and strongly
// non-polynomial basis functions shared across the family.
// Throws NormalFormError when a term cannot be classified.
Decomposition decompose(const std::vector<LEFunction>& as);

struct OneGoodResult {
  bool good = false;
  std::string witness;
};

// Condition (A): |a(t) - p(t)| / log t -> infinity for every real multiple p
// of an integer polynomial.
OneGoodResult is_one_good(const LEFunction& a);

}  // namespace hardylab::lefun
