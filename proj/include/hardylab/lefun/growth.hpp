#pragma once

#include <optional>
#include <vector>

#include "hardylab/lefun/calculus.hpp"

namespace hardylab::lefun {

enum class Verdict { Dominates, Dominated, SameRate, Inconclusive };

struct GrowthComparison {
  Verdict verdict = Verdict::Inconclusive;
  double limit = 0.0;                           // SameRate: the limit of f/g
  std::optional<Scalar> exact_limit;            // when exactly representable
  std::vector<std::pair<double, double>> evidence;  // (t, log|f/g|) ladder
  bool structural = false;                      // decided by tier-1 rules
};

// Two-tier growth comparison at +infinity: structural rules on the canonical
// exp-log term calculus first, then a log-domain numeric ladder with trend
// detection.  Inconclusive is a first-class outcome.
GrowthComparison compare_growth(const LEFunction& f, const LEFunction& g);
GrowthComparison compare_growth_expr(const Expr& f, const Expr& g);

inline bool dominates(const GrowthComparison& c) { return c.verdict == Verdict::Dominates; }
inline bool dominated(const GrowthComparison& c) { return c.verdict == Verdict::Dominated; }
inline bool same_rate(const GrowthComparison& c) { return c.verdict == Verdict::SameRate; }
// f >= g up to constants: Dominates or SameRate.
inline bool at_least(const GrowthComparison& c) {
  return c.verdict == Verdict::Dominates || c.verdict == Verdict::SameRate;
}

struct GrowthDegree {
  int degree = 0;            // t^degree <= f < t^(degree+1)
  bool sub_fractional = false;  // f << t^delta for every delta > 0
};

// Unique d >= 0 with t^d <= f < t^(d+1); throws NotPolynomialGrowth if f
// exceeds t^32 or grows super-polynomially.
GrowthDegree growth_degree(const LEFunction& f);

// d such that t^d << f << t^(d+1) strictly on both sides; nullopt otherwise.
std::optional<int> is_strongly_nonpolynomial(const LEFunction& f);

// --- structural analysis interface used by the window/decompose machinery ---

// Limit classification of a single normalized term (product of atom powers).
enum class TermLimit { ToInfinity, ToZero, ToConstant, Unknown };

struct TermClass {
  TermLimit kind = TermLimit::Unknown;
  // Effective exponents of t, log t, log log t as exact scalars when
  // available (`exact` false means a numeric approximation had to be used).
  Scalar a, b, c;
  bool exact = true;
  double a_num = 0, b_num = 0, c_num = 0;
  // ToConstant: the limit value.
  double limit = 0;
  std::optional<Scalar> exact_limit;
  bool has_residual = false;  // surviving exp() factor beyond the log scale
};

// Structural classification of the limit of a term at +infinity.
TermClass classify_term(const Term& term);

// Leading term of a normalized expression (largest growth), with combined
// coefficient when several terms tie at the same rate.  nullopt when the
// expression is zero or the tournament was inconclusive.
std::optional<Term> leading_term(const Expr& normalized);

}  // namespace hardylab::lefun
