#include "hardylab/petlab/coefficient.hpp"

#include <sstream>

#include "hardylab/errors.hpp"

namespace hardylab::petlab {

using lefun::Expr;
using lefun::Verdict;

namespace {

// Strict growth order on normalized basis expressions (decreasing), with a
// cache: the basis universe of a computation is tiny while coefficient merges
// are extremely frequent.
bool basis_faster(const Expr& a, const Expr& b) {
  int c0 = lefun::compare(a, b);
  if (c0 == 0) return false;
  static std::map<std::pair<std::string, std::string>, int> cache;
  std::pair<std::string, std::string> key{lefun::to_string(a), lefun::to_string(b)};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second > 0;
  auto c = lefun::compare_growth_expr(a, b);
  int r;
  if (c.verdict == Verdict::Dominates)
    r = 1;
  else if (c.verdict == Verdict::Dominated)
    r = -1;
  else
    r = c0;  // same rate or undecided: structural order
  cache[key] = r;
  cache[{key.second, key.first}] = -r;
  return r > 0;
}

}  // namespace

AsymCoeff AsymCoeff::term(const Scalar& scalar, const Expr& basis) {
  AsymCoeff c;
  if (scalar.is_zero()) return c;
  Expr nb = lefun::normalize(basis);
  if (lefun::is_zero(nb)) return c;
  // Fold the basis' own scalar coefficient into the scalar.
  auto ts = lefun::to_terms(nb);
  if (ts.size() != 1)
    throw NotNice("coefficient basis must be a single term: " + lefun::to_string(nb));
  lefun::Term t = ts[0];
  auto prod = Scalar::mul(scalar, t.coeff);
  if (!prod) throw NotNice("coefficient scalar product not representable");
  t.coeff = Scalar(1L);
  c.insert(lefun::term_to_expr(t), SPoly(*prod));
  return c;
}

AsymCoeff AsymCoeff::constant(const Scalar& scalar) {
  AsymCoeff c;
  if (!scalar.is_zero()) c.insert(lefun::constant(1L), SPoly(scalar));
  return c;
}

bool AsymCoeff::has_shift_vars() const {
  for (auto& [b, p] : parts_)
    if (!p.is_constant()) return true;
  return false;
}

void AsymCoeff::insert(const Expr& basis, const SPoly& p) {
  if (p.is_zero()) return;
  for (auto it = parts_.begin(); it != parts_.end(); ++it) {
    if (lefun::equal(it->first, basis)) {
      it->second += p;
      if (it->second.is_zero()) parts_.erase(it);
      return;
    }
    if (basis_faster(basis, it->first)) {
      parts_.insert(it, {basis, p});
      return;
    }
  }
  parts_.push_back({basis, p});
}

bool operator==(const AsymCoeff& a, const AsymCoeff& b) {
  if (a.parts_.size() != b.parts_.size()) return false;
  for (size_t i = 0; i < a.parts_.size(); ++i) {
    if (!lefun::equal(a.parts_[i].first, b.parts_[i].first)) return false;
    if (!(a.parts_[i].second == b.parts_[i].second)) return false;
  }
  return true;
}

AsymCoeff& AsymCoeff::operator+=(const AsymCoeff& o) {
  for (auto& [b, p] : o.parts_) insert(b, p);
  return *this;
}

AsymCoeff& AsymCoeff::operator-=(const AsymCoeff& o) {
  for (auto& [b, p] : o.parts_) insert(b, -p);
  return *this;
}

AsymCoeff AsymCoeff::operator-() const {
  AsymCoeff r;
  for (auto& [b, p] : parts_) r.parts_.push_back({b, -p});
  return r;
}

AsymCoeff AsymCoeff::scaled(const mpq_class& c) const {
  AsymCoeff r;
  if (c == 0) return r;
  for (auto& [b, p] : parts_) r.parts_.push_back({b, p.scaled(Scalar(c))});
  return r;
}

AsymCoeff AsymCoeff::times(const MPoly& mp) const {
  AsymCoeff r;
  if (mp.is_zero()) return r;
  for (auto& [b, p] : parts_) {
    SPoly q = mul(p, mp);
    if (!q.is_zero()) r.parts_.push_back({b, q});
  }
  return r;
}

std::vector<AsymCoeff::TermView> AsymCoeff::terms() const {
  std::vector<TermView> out;
  for (auto& [b, p] : parts_) {
    if (!p.is_constant())
      throw NotNice("terms() on a coefficient with symbolic shift variables");
    out.push_back({p.constant_term(), b});
  }
  return out;
}

std::optional<AsymCoeff::LeadView> AsymCoeff::leading() const {
  if (parts_.empty()) return std::nullopt;
  return LeadView{parts_.front().first, parts_.front().second};
}

LimitClass AsymCoeff::limit_class() const {
  if (parts_.empty()) return LimitClass::Zero;
  const Expr& lead = parts_.front().first;
  auto c = lefun::compare_growth_expr(lead, lefun::constant(1L));
  if (c.verdict == Verdict::Dominates) return LimitClass::FractionalPowerDominant;
  if (c.verdict == Verdict::SameRate) return LimitClass::NonzeroConstant;
  if (c.verdict == Verdict::Dominated) return LimitClass::Zero;
  throw InconclusiveError("coefficient limit class undecided for basis " +
                          lefun::to_string(lead));
}

double AsymCoeff::value_at(double N) const {
  double v = 0;
  for (auto& [b, p] : parts_) {
    if (!p.is_constant())
      throw NotNice("value_at on a coefficient with symbolic shift variables");
    v += p.constant_term().to_double() *
         lefun::eval_expr(b, BigFloat(N, 128)).to_double();
  }
  return v;
}

std::string AsymCoeff::str() const {
  if (parts_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [b, p] : parts_) {
    if (!first) os << " + ";
    os << "(" << p.str() << ")";
    if (!lefun::is_one(b)) os << "*" << lefun::to_string(b);
    first = false;
  }
  return os.str();
}

}  // namespace hardylab::petlab
