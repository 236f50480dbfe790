#pragma once

#include <optional>
#include <vector>

#include "hardylab/lefun/growth.hpp"

namespace hardylab::lefun {

// S(f,k) = { g : |f^(k)|^(-1/k) <= g < |f^(k+1)|^(-1/(k+1)) }, where the
// endpoints are compared by growth rate up to constants.
struct WindowClass {
  LEFunction base;
  int order = 1;
  LEFunction lower;  // |f^(k)|^(-1/k)
  LEFunction upper;  // |f^(k+1)|^(-1/(k+1))
};

WindowClass window_class(const LEFunction& f, int k);

// The unique k <= kmax with g in S(f,k) (or the sub-fractional analogue);
// nullopt when g lies outside the union of classes.
std::optional<int> class_index(const LEFunction& g, const LEFunction& f, int kmax = 64);

struct WindowSelection {
  LEFunction L;              // common sub-linear window function t^c
  mpq_class exponent;        // the c in t^c
  std::vector<int> orders;   // k_i per input function
  size_t special = 0;        // index of the special function g~
};

struct FindWindowOptions {
  int min_order = 1;
  // When set, the maximal order among the functions must equal this value.
  std::optional<int> target_order;
  int max_exponent_den = 24;
};

// Searches rational exponents c = p/q descending in (1/2, 1) for a common
// window function L = t^c, enforcing the special-function adjustment: every
// |g^(k_g)|^(-1/k_g) either has the same rate as the special one or their
// ratio dominates a fractional power; failing orders are decremented.
WindowSelection find_window(const std::vector<LEFunction>& fs,
                            const FindWindowOptions& opts = {});

struct TaylorPoly {
  std::vector<double> coeffs;   // f^(j)(r) / j!
  double remainder_bound = 0.0; // |f^(k+1)(r)| L^(k+1) / (k+1)!
};

TaylorPoly taylor_poly(const LEFunction& f, double r, int k, double L_at_r);

}  // namespace hardylab::lefun
