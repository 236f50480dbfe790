#pragma once

#include <optional>
#include <vector>

#include "hardylab/lefun/growth.hpp"
#include "hardylab/petlab/mpoly.hpp"

namespace hardylab::petlab {

enum class LimitClass { Zero, NonzeroConstant, FractionalPowerDominant };

// A polynomial coefficient that may vary with the family parameter N: a
// finite sum over basis functions b(N) of P_b(m) * b(N), where the P_b are
// polynomials in the symbolic shift variables introduced by vdC steps.
// With no shift variables this is a plain asymptotic coefficient
// sum_i scalar_i * b_i(N) with pairwise non-same-rate bases.
class AsymCoeff {
 public:
  AsymCoeff() = default;
  // scalar * basis(N); the basis is normalized and its growth must be
  // comparable with existing bases when combined.
  static AsymCoeff term(const Scalar& scalar, const lefun::Expr& basis);
  static AsymCoeff constant(const Scalar& scalar);
  static AsymCoeff constant(long v) { return constant(Scalar(v)); }

  bool is_zero() const { return parts_.empty(); }
  bool has_shift_vars() const;

  AsymCoeff& operator+=(const AsymCoeff& o);
  AsymCoeff& operator-=(const AsymCoeff& o);
  friend AsymCoeff operator+(AsymCoeff a, const AsymCoeff& b) { return a += b; }
  friend AsymCoeff operator-(AsymCoeff a, const AsymCoeff& b) { return a -= b; }
  AsymCoeff operator-() const;
  AsymCoeff scaled(const mpq_class& c) const;
  // product with a rational shift-variable polynomial (exact)
  AsymCoeff times(const MPoly& p) const;

  friend bool operator==(const AsymCoeff& a, const AsymCoeff& b);
  friend bool operator!=(const AsymCoeff& a, const AsymCoeff& b) { return !(a == b); }

  // Sorted by decreasing basis growth.  Requires no shift variables.
  struct TermView {
    Scalar scalar;
    lefun::Expr basis;
  };
  std::vector<TermView> terms() const;

  // Leading (fastest-growth) basis with its shift polynomial.
  struct LeadView {
    lefun::Expr basis;
    SPoly poly;
  };
  std::optional<LeadView> leading() const;

  // Limit classification of the coefficient sequence (shift-variable-free
  // coefficients only; symbolic coefficients classify their leading basis).
  LimitClass limit_class() const;
  // Good sequence: nonzero limit or divergence of the leading term.
  bool is_good_sequence() const { return !is_zero() && limit_class() != LimitClass::Zero; }

  double value_at(double N) const;  // numeric evaluation (m-free)

  const std::vector<std::pair<lefun::Expr, SPoly>>& parts() const { return parts_; }
  std::string str() const;
  // Canonical key: equal coefficients have equal keys.
  std::string key() const { return str(); }

 private:
  void insert(const lefun::Expr& basis, const SPoly& p);
  // (basis expr, shift polynomial), kept sorted by decreasing basis growth;
  // bases pairwise non-same-rate.
  std::vector<std::pair<lefun::Expr, SPoly>> parts_;
};

}  // namespace hardylab::petlab
