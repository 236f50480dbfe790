#pragma once

#include <set>
#include <string>
#include <vector>

#include "hardylab/petlab/coefficient.hpp"

namespace hardylab::petlab {

// A variable polynomial in the averaging variable n: coefficients indexed by
// degree, each an asymptotic coefficient in the family parameter N (possibly
// carrying symbolic shift variables).
class VarPoly {
 public:
  VarPoly() = default;
  explicit VarPoly(std::vector<AsymCoeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return degree() <= 0; }
  const AsymCoeff& coeff(size_t d) const;
  const AsymCoeff& leading_coeff() const;
  const std::vector<AsymCoeff>& coeffs() const { return coeffs_; }

  friend VarPoly operator-(const VarPoly& a, const VarPoly& b);
  friend bool operator==(const VarPoly& a, const VarPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // p(n + h) for an integer shift, exact binomial expansion.
  VarPoly shifted(long h) const;
  // p(n + m_var) with a symbolic shift variable.
  VarPoly shifted_sym(size_t var) const;

  std::string str() const;

 private:
  void trim();
  std::vector<AsymCoeff> coeffs_;
};

using PolyFamily = std::vector<VarPoly>;

// (d, w_d, ..., w_1): degree plus per-degree counts of distinct leading
// coefficients.  Ordered by degree, then lexicographically.
struct TypeVector {
  int d = 0;
  std::vector<long> w;  // w[0] = w_d, ..., w[d-1] = w_1

  friend bool operator==(const TypeVector& a, const TypeVector& b) {
    return a.d == b.d && a.w == b.w;
  }
  friend bool operator<(const TypeVector& a, const TypeVector& b);
  std::string str() const;
};

// Degrees of members and pairwise differences stable, leading coefficients
// good sequences.  Throws NotNice on violations detectable for m-free
// coefficients.
void check_nice(const PolyFamily& fam);

TypeVector family_type(const PolyFamily& fam);

struct LeadingVector {
  std::vector<AsymCoeff> entries;  // lead of p_i, then lead of p_i - p_j
};

// Leading vector corresponding to member `index` (0-based).
LeadingVector leading_vector(const PolyFamily& fam, size_t index);

// The van der Corput operation (p_pivot, h)* applied with a concrete integer
// shift: shifted differences then unshifted differences, constants removed.
struct VdcResult {
  PolyFamily family;
  std::vector<AsymCoeff> dropped_constants;
};
VdcResult vdc_apply(const PolyFamily& fam, size_t pivot, long h);

// Integer shifts h for which some candidate leading coefficient
// r*u_ii*h + u_ij degenerates; at most one per (i, j, r) triple.
std::set<long> bad_shifts(const PolyFamily& fam, size_t pivot);

enum class PivotCase { DistinctDegrees, DistinctLeaders, EqualLeaders };
struct PivotChoice {
  size_t index;
  PivotCase kind;
};

// Minimal-degree member, lowest index on ties (the type-reducing choice).
PivotChoice choose_pivot(const PolyFamily& fam);

}  // namespace hardylab::petlab
