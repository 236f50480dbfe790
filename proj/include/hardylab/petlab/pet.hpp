#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hardylab/petlab/family.hpp"

namespace hardylab::petlab {

// epsilon in {0,1}^s encoded as a bit mask (bit j = coordinate j).
using EpsMask = std::uint32_t;

struct VdCStep {
  size_t pivot = 0;
  PivotCase kind = PivotCase::DistinctDegrees;
  TypeVector type_before;
  TypeVector type_after;
  std::set<long> bad_shifts;
};

// Output of the PET type reduction: integers s, t, the error-offset set Y,
// and multilinear integer polynomials p_{eps,j} in t variables such that the
// bounding forms are A_eps(m) = sum_j p_{eps,j}(m) u_j over the original
// leading vector u_1..u_k, with conjugation flag |eps| mod 2.
struct ReductionCertificate {
  int s = 0;
  int t = 0;
  size_t k = 0;  // original family size (number of u-slots)
  std::set<long> Y;
  // p[eps][j] for eps in [0, 2^s), j in [0, k)
  std::vector<std::vector<MPoly>> p;
  std::vector<VdCStep> trace;

  const MPoly& poly(EpsMask eps, size_t j) const { return p[eps][j]; }
  int conj_parity(EpsMask eps) const { return __builtin_popcount(eps) & 1; }
};

// Lemma-form classification of one leading-vector entry after a vdC step.
struct FormMatch {
  enum Kind { OldEntry, ShiftMultiple, ShiftPlusOld } kind;
  size_t old_index = 0;  // index into the previous leading vector (forms 1, 3)
  int r = 0;             // multiplier of u_1 * h (forms 2, 3)
};

struct LemmaFormReport {
  std::vector<FormMatch> matches;  // one per new leading-vector entry
  std::vector<std::string> rendered;
};

// Classifies each entry of the leading vector of (p_pivot, h)*fam with a
// symbolic shift h against the three forms of the structure lemma.
// Throws FormViolation when an entry matches none.
LemmaFormReport lemma_form_check(const PolyFamily& fam, size_t pivot);

// Runs the full type reduction: symbolic vdC steps with a fresh shift
// variable each, down to the linear base case.  Throws NonTermination after
// 64 steps, FormViolation if the structure lemma fails.
ReductionCertificate pet_reduce(const PolyFamily& fam);

struct VerifyReport {
  bool nonconstant = false;          // (i)
  bool pairwise_distinct = false;    // (ii)
  bool additive = false;             // (iii)
  bool linearly_independent = false; // (iv)
  bool multilinear = false;
  bool ok() const {
    return nonconstant && pairwise_distinct && additive && linearly_independent &&
           multilinear;
  }
};

// Exact symbolic checks of the certificate invariants, with u_j treated as
// independent indeterminates.  Throws VerificationFailure naming the item.
VerifyReport verify_certificate(const ReductionCertificate& cert);
// Non-throwing variant used by negative-control tests.
VerifyReport verify_certificate_report(const ReductionCertificate& cert);

// JSON round-trip (integer coefficients, exact).
std::string certificate_to_json(const ReductionCertificate& cert);
ReductionCertificate certificate_from_json(const std::string& text);

}  // namespace hardylab::petlab
