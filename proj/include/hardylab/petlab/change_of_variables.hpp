#pragma once

#include <vector>

#include "hardylab/lefun/window.hpp"
#include "hardylab/petlab/coefficient.hpp"

namespace hardylab::petlab {

// The change-of-variables data for a family of expansion base functions with
// fixed window orders: the block length u(r) from the special function, the
// transformed leading coefficients c_g(r), their smooth proxies d_g(t), the
// sampled |c_g - d_g| gaps, and the limit classification of each d_g.
struct ChangeOfVariables {
  double u_r = 0.0;
  std::vector<double> c_g;
  std::vector<lefun::Expr> d_g;
  // per function: ladder of (r, |c_g(r) - d_g(r)|)
  std::vector<std::vector<std::pair<double, double>>> gap_ladder;
  std::vector<LimitClass> classes;
};

ChangeOfVariables change_of_variables(
    const std::vector<std::pair<lefun::LEFunction, int>>& expansions, size_t special,
    double r);

// Property Q of two window endpoints (same rate, or ratio dominating a
// fractional power); exposed for the case-b diagnostics.
bool window_property_q(const lefun::LEFunction& g1, int k1, const lefun::LEFunction& g2,
                       int k2);

}  // namespace hardylab::petlab
