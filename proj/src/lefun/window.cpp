#include "hardylab/lefun/window.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "hardylab/errors.hpp"

namespace hardylab::lefun {

namespace {

// |f^(k)|^(-1/k) as an expression.
Expr window_endpoint(const Expr& f, int k) {
  Expr d = derivative_expr(f, static_cast<unsigned>(k));
  if (is_zero(d)) throw DomainError("window endpoint of a polynomial: derivative vanishes");
  return normalize(pow(abs_e(d), mpq_class(-1, k)));
}

}  // namespace

WindowClass window_class(const LEFunction& f, int k) {
  WindowClass w;
  w.base = f;
  w.order = k;
  w.lower = make_function(window_endpoint(f.expr, k), f.domain_floor);
  w.upper = make_function(window_endpoint(f.expr, k + 1), f.domain_floor);
  return w;
}

std::optional<int> class_index(const LEFunction& g, const LEFunction& f, int kmax) {
  // Derivative chain computed incrementally.
  Expr d = normalize(f.expr);
  for (int k = 1; k <= kmax; ++k) {
    d = derivative_expr(d, 1);
    if (is_zero(d)) return std::nullopt;  // polynomial base: no classes
    Expr lower = normalize(pow(abs_e(d), mpq_class(-1, k)));
    GrowthComparison at_lower = compare_growth_expr(g.expr, lower);
    if (at_lower.verdict == Verdict::Inconclusive)
      throw InconclusiveError("class index: comparison with lower endpoint undecided");
    if (at_lower.verdict == Verdict::Dominated) {
      // Windows only move upward with k: g sits below every later class.
      return std::nullopt;
    }
    Expr dnext = derivative_expr(d, 1);
    if (is_zero(dnext)) return std::nullopt;
    Expr upper = normalize(pow(abs_e(dnext), mpq_class(-1, k + 1)));
    GrowthComparison at_upper = compare_growth_expr(g.expr, upper);
    if (at_upper.verdict == Verdict::Inconclusive)
      throw InconclusiveError("class index: comparison with upper endpoint undecided");
    if (at_upper.verdict == Verdict::Dominated) return k;
  }
  return std::nullopt;
}

namespace {

// Property Q: same growth rate, or the ratio of the larger to the smaller
// dominates some fractional power t^delta.
bool property_q(const Expr& a, const Expr& b) {
  GrowthComparison c = compare_growth_expr(a, b);
  if (c.verdict == Verdict::SameRate) return true;
  if (c.verdict == Verdict::Inconclusive)
    throw InconclusiveError("property Q comparison undecided");
  Expr big = c.verdict == Verdict::Dominates ? a : b;
  Expr small = c.verdict == Verdict::Dominates ? b : a;
  Expr ratio = nmul(big, npow(small, -1));
  // Dominates a fractional power iff the ratio still diverges after division
  // by t^(1/64).
  GrowthComparison frac = compare_growth_expr(ratio, npow(var_t(), mpq_class(1, 64)));
  if (frac.verdict == Verdict::Inconclusive)
    throw InconclusiveError("property Q fractional-power test undecided");
  return frac.verdict != Verdict::Dominated;
}

struct Candidate {
  mpq_class c;
  double value;
};

}  // namespace

WindowSelection find_window(const std::vector<LEFunction>& fs, const FindWindowOptions& opts) {
  if (fs.empty()) throw NoWindowFound("empty function list");
  // Rational exponent grid in (1/2, 1), descending.
  std::vector<Candidate> grid;
  for (int q = 2; q <= opts.max_exponent_den; ++q) {
    for (int p = q / 2 + 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      mpq_class c(p, q);
      if (c <= mpq_class(1, 2) || c >= 1) continue;
      grid.push_back({c, c.get_d()});
    }
  }
  std::sort(grid.begin(), grid.end(),
            [](const Candidate& a, const Candidate& b) { return a.value > b.value; });

  for (const Candidate& cand : grid) {
    LEFunction L = make_function(npow(var_t(), cand.c));
    std::vector<int> ks(fs.size(), 0);
    bool ok = true;
    for (size_t i = 0; i < fs.size() && ok; ++i) {
      auto k = class_index(L, fs[i]);
      if (!k || *k < opts.min_order) ok = false;
      else ks[i] = *k;
    }
    if (!ok) continue;
    if (opts.target_order &&
        *std::max_element(ks.begin(), ks.end()) != *opts.target_order)
      continue;

    // Window lower endpoints |g^(k_g)|^(-1/k_g).
    auto endpoint = [&](size_t i, int k) {
      return window_endpoint(fs[i].expr, k);
    };
    std::vector<Expr> lows(fs.size());
    for (size_t i = 0; i < fs.size(); ++i) lows[i] = endpoint(i, ks[i]);

    // Special function: the one whose endpoint has maximal growth.
    size_t special = 0;
    for (size_t i = 1; i < fs.size(); ++i) {
      GrowthComparison c = compare_growth_expr(lows[i], lows[special]);
      if (c.verdict == Verdict::Dominates) special = i;
    }

    // Check property Q of every endpoint against the special one; collect
    // failures for the case-b adjustment.
    std::vector<size_t> q_fail;
    bool undecided = false;
    for (size_t i = 0; i < fs.size(); ++i) {
      if (i == special) continue;
      try {
        if (!property_q(lows[special], lows[i])) q_fail.push_back(i);
      } catch (const InconclusiveError&) {
        undecided = true;
        break;
      }
    }
    if (undecided) continue;

    if (!q_fail.empty()) {
      // Case b: the failing function with the slowest endpoint becomes the
      // special one; other failures of different growth get their order
      // decremented, and the window function is re-chosen on the adjusted
      // order assignment.
      size_t gstar = q_fail[0];
      for (size_t i : q_fail) {
        GrowthComparison c = compare_growth_expr(lows[i], lows[gstar]);
        if (c.verdict == Verdict::Dominated) gstar = i;
      }
      std::vector<int> adjusted = ks;
      bool feasible = true;
      for (size_t i : q_fail) {
        if (i == gstar) continue;
        GrowthComparison same = compare_growth_expr(lows[i], lows[gstar]);
        if (same.verdict == Verdict::SameRate) continue;  // shared class: keep
        adjusted[i] -= 1;
        if (adjusted[i] < std::max(1, opts.min_order)) feasible = false;
      }
      if (!feasible) continue;
      // Find a (smaller) pure power matching the adjusted orders exactly.
      bool found = false;
      WindowSelection sel;
      for (const Candidate& c2 : grid) {
        if (c2.value > cand.value) continue;
        LEFunction L2 = make_function(npow(var_t(), c2.c));
        bool match = true;
        for (size_t i = 0; i < fs.size() && match; ++i) {
          auto k2 = class_index(L2, fs[i]);
          if (!k2 || *k2 != adjusted[i]) match = false;
        }
        if (!match) continue;
        // Verify the claim: every endpoint satisfies Q against the special.
        std::vector<Expr> lows2(fs.size());
        for (size_t i = 0; i < fs.size(); ++i) lows2[i] = endpoint(i, adjusted[i]);
        bool claim = true;
        for (size_t i = 0; i < fs.size() && claim; ++i) {
          if (i == gstar) continue;
          try {
            if (!property_q(lows2[gstar], lows2[i])) claim = false;
          } catch (const InconclusiveError&) {
            claim = false;
          }
        }
        if (!claim) break;  // adjustment cannot be certified: next outer c
        sel.L = L2;
        sel.exponent = c2.c;
        sel.orders = adjusted;
        sel.special = gstar;
        found = true;
        break;
      }
      if (found) return sel;
      continue;
    }

    WindowSelection sel;
    sel.L = L;
    sel.exponent = cand.c;
    sel.orders = ks;
    sel.special = special;
    return sel;
  }
  throw NoWindowFound("rational exponent grid exhausted");
}

TaylorPoly taylor_poly(const LEFunction& f, double r, int k, double L_at_r) {
  if (r < f.domain_floor) throw DomainError("taylor_poly: point below domain floor");
  if (k < 1) throw DomainError("taylor_poly: order must be >= 1");
  TaylorPoly out;
  BigFloat t(r, 256);
  Expr d = normalize(f.expr);
  mpz_class fact = 1;
  for (int j = 0; j <= k; ++j) {
    if (j > 0) {
      d = derivative_expr(d, 1);
      fact *= j;
    }
    BigFloat v = eval_expr(d, t) / BigFloat(mpq_class(fact), 256);
    out.coeffs.push_back(v.to_double());
  }
  Expr dk1 = derivative_expr(d, 1);
  mpz_class fact1 = fact * (k + 1);
  BigFloat rem = abs(eval_expr(dk1, t)) * pow(BigFloat(L_at_r, 256), BigFloat(k + 1L, 256)) /
                 BigFloat(mpq_class(fact1), 256);
  out.remainder_bound = rem.to_double();
  return out;
}

}  // namespace hardylab::lefun
