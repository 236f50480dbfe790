#include "hardylab/petlab/family.hpp"

#include <algorithm>
#include <sstream>

#include "hardylab/errors.hpp"

namespace hardylab::petlab {

namespace {
const AsymCoeff kZero{};

mpz_class binom(long n, long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}
}  // namespace

void VarPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const AsymCoeff& VarPoly::coeff(size_t d) const {
  return d < coeffs_.size() ? coeffs_[d] : kZero;
}

const AsymCoeff& VarPoly::leading_coeff() const {
  if (coeffs_.empty()) return kZero;
  return coeffs_.back();
}

VarPoly operator-(const VarPoly& a, const VarPoly& b) {
  std::vector<AsymCoeff> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return VarPoly(std::move(c));
}

VarPoly VarPoly::shifted(long h) const {
  if (coeffs_.empty()) return {};
  std::vector<AsymCoeff> c(coeffs_.size());
  // (n+h)^i = sum_j C(i,j) h^(i-j) n^j
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    mpz_class hp = 1;
    for (size_t j = i + 1; j-- > 0;) {
      mpq_class factor = mpq_class(binom(i, j)) * mpq_class(hp);
      c[j] += coeffs_[i].scaled(factor);
      hp *= h;
    }
  }
  return VarPoly(std::move(c));
}

VarPoly VarPoly::shifted_sym(size_t var) const {
  if (coeffs_.empty()) return {};
  std::vector<AsymCoeff> c(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    for (size_t j = 0; j <= i; ++j) {
      // C(i,j) * m_var^(i-j)
      Monomial m;
      if (i > j) {
        m.assign(var + 1, 0);
        m[var] = static_cast<int>(i - j);
      }
      MPoly mono;
      mono.set(m, mpq_class(binom(i, j)));
      c[j] += coeffs_[i].times(mono);
    }
  }
  return VarPoly(std::move(c));
}

std::string VarPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    os << "[" << coeffs_[i].str() << "]";
    if (i == 1) os << "*n";
    if (i > 1) os << "*n^" << i;
    first = false;
  }
  if (first) return "0";
  return os.str();
}

bool operator<(const TypeVector& a, const TypeVector& b) {
  if (a.d != b.d) return a.d < b.d;
  // lexicographic on (w_d, ..., w_1); shorter padded with zeros cannot occur
  // for equal degrees.
  return a.w < b.w;
}

std::string TypeVector::str() const {
  std::ostringstream os;
  os << "(" << d;
  for (long x : w) os << ", " << x;
  os << ")";
  return os.str();
}

void check_nice(const PolyFamily& fam) {
  auto check_coeff = [](const AsymCoeff& c, const std::string& what) {
    if (c.is_zero()) return;
    if (c.has_shift_vars()) return;  // symbolic: nonzero for h outside the bad set
    if (c.limit_class() == LimitClass::Zero)
      throw NotNice(what + " has limit zero without vanishing: " + c.str());
  };
  bool symbolic = false;
  for (const auto& p : fam)
    for (const auto& c : p.coeffs())
      if (c.has_shift_vars()) symbolic = true;
  for (size_t i = 0; i < fam.size(); ++i) {
    if (fam[i].is_zero()) throw NotNice("zero member in family");
    check_coeff(fam[i].leading_coeff(), "leading coefficient");
    if (symbolic) continue;  // pairwise goodness holds generically
    for (size_t j = i + 1; j < fam.size(); ++j) {
      VarPoly diff = fam[i] - fam[j];
      if (!diff.is_zero()) check_coeff(diff.leading_coeff(), "difference leading coefficient");
    }
  }
}

TypeVector family_type(const PolyFamily& fam) {
  check_nice(fam);
  TypeVector tv;
  tv.d = 0;
  for (const auto& p : fam) tv.d = std::max(tv.d, p.degree());
  if (tv.d < 1) throw NotNice("family of constants has no type");
  tv.w.assign(tv.d, 0);
  std::vector<std::set<std::string>> distinct(tv.d + 1);
  for (const auto& p : fam) {
    int deg = p.degree();
    if (deg >= 1) distinct[deg].insert(p.leading_coeff().key());
  }
  for (int deg = tv.d; deg >= 1; --deg)
    tv.w[tv.d - deg] = static_cast<long>(distinct[deg].size());
  return tv;
}

LeadingVector leading_vector(const PolyFamily& fam, size_t index) {
  LeadingVector lv;
  lv.entries.push_back(fam[index].leading_coeff());
  for (size_t j = 0; j < fam.size(); ++j) {
    if (j == index) continue;
    VarPoly diff = fam[index] - fam[j];
    if (diff.is_constant())
      throw NotEssentiallyDistinct("members " + std::to_string(index) + " and " +
                                   std::to_string(j) + " differ by a constant");
    lv.entries.push_back(diff.leading_coeff());
  }
  return lv;
}

VdcResult vdc_apply(const PolyFamily& fam, size_t pivot, long h) {
  if (pivot >= fam.size()) throw EmptyFamily("pivot out of range");
  VdcResult out;
  const VarPoly& p = fam[pivot];
  auto push = [&](VarPoly q) {
    if (q.is_zero()) {
      out.dropped_constants.push_back(AsymCoeff{});
      return;
    }
    if (q.is_constant()) {
      out.dropped_constants.push_back(q.coeff(0));
      return;
    }
    out.family.push_back(std::move(q));
  };
  for (const auto& q : fam) push(q.shifted(h) - p);
  for (size_t i = 0; i < fam.size(); ++i) {
    if (i == pivot) continue;
    push(fam[i] - p);
  }
  // An all-constant outcome (single linear member) yields the empty family;
  // the dropped constants carry the residual for the caller's integral term.
  return out;
}

std::set<long> bad_shifts(const PolyFamily& fam, size_t pivot) {
  (void)pivot;  // the candidate scan ranges over all pairs
  std::set<long> bad;
  const size_t k = fam.size();
  // The shifted coefficient r*u_ii*h lives at degree deg(p_i) - 1; it can
  // cancel u_ij only when deg(p_i - p_j) is exactly deg(p_i) - 1, which
  // requires deg(p_j) == deg(p_i) with equal leading coefficients.  Group by
  // (degree, leading key) and scan within groups on the next coefficient.
  std::map<std::pair<int, std::string>, std::vector<size_t>> groups;
  for (size_t i = 0; i < k; ++i) {
    int d = fam[i].degree();
    if (d < 1) continue;
    groups[{d, fam[i].leading_coeff().key()}].push_back(i);
  }
  for (auto& [gk, members] : groups) {
    if (members.size() < 2) continue;
    int d = gk.first;
    const AsymCoeff& u = fam[members[0]].leading_coeff();
    auto lead_u = u.leading();
    if (!lead_u) continue;
    for (size_t a : members) {
      for (size_t b : members) {
        if (a == b) continue;
        // leading coefficient of p_a - p_b: the first differing coefficient
        // below degree d; the candidate needs it at degree d-1.
        AsymCoeff second = fam[a].coeff(d - 1) - fam[b].coeff(d - 1);
        if (second.is_zero()) continue;  // difference has lower degree
        auto lead_s = second.leading();
        if (!lead_s) continue;
        if (!lefun::equal(lead_u->basis, lead_s->basis)) continue;
        // r*h*S_u + S_s = 0 with r = d  =>  h = -lambda/r
        auto lambda = SPoly::proportional(lead_u->poly, lead_s->poly);
        if (!lambda) continue;
        mpq_class hq = -*lambda / d;
        if (hq.get_den() == 1) bad.insert(hq.get_num().get_si());
      }
    }
  }
  return bad;
}

PivotChoice choose_pivot(const PolyFamily& fam) {
  if (fam.empty()) throw EmptyFamily("empty family");
  size_t best = 0;
  for (size_t i = 1; i < fam.size(); ++i)
    if (fam[i].degree() < fam[best].degree()) best = i;
  int dmax = 0, dmin = fam[best].degree();
  for (const auto& p : fam) dmax = std::max(dmax, p.degree());
  if (dmin < dmax) return {best, PivotCase::DistinctDegrees};
  bool all_equal = true;
  for (size_t i = 1; i < fam.size() && all_equal; ++i)
    if (!(fam[i].leading_coeff() == fam[0].leading_coeff())) all_equal = false;
  if (all_equal) return {best, PivotCase::EqualLeaders};
  // All degrees equal with distinct leaders: the pivot's leading coefficient
  // must differ from the leading polynomial's, so that the new leading
  // polynomial p_1(t+h) - p_pivot(t) keeps maximal degree.  Lowest index
  // among the valid choices.
  for (size_t i = 0; i < fam.size(); ++i) {
    if (!(fam[i].leading_coeff() == fam[0].leading_coeff()))
      return {i, PivotCase::DistinctLeaders};
  }
  return {best, PivotCase::DistinctLeaders};  // unreachable
}

}  // namespace hardylab::petlab
