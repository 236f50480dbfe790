#include "hardylab/petlab/mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace hardylab::petlab {

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

int mono_degree_in(const Monomial& m, size_t var) {
  return var < m.size() ? m[var] : 0;
}

std::string mono_str(const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << "*";
    os << "m" << (i + 1);
    if (m[i] != 1) os << "^" << m[i];
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

MPoly::MPoly(const mpq_class& c) {
  if (c != 0) terms_[{}] = c;
}

MPoly MPoly::variable(size_t var, const mpq_class& coeff) {
  MPoly p;
  if (coeff != 0) {
    Monomial m(var + 1, 0);
    m[var] = 1;
    p.terms_[m] = coeff;
  }
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

mpq_class MPoly::constant_term() const {
  auto it = terms_.find({});
  return it == terms_.end() ? mpq_class(0) : it->second;
}

int MPoly::degree_in(size_t var) const {
  int d = 0;
  for (auto& [m, c] : terms_) d = std::max(d, mono_degree_in(m, var));
  return d;
}

size_t MPoly::max_var() const {
  size_t n = 0;
  for (auto& [m, c] : terms_) n = std::max(n, m.size());
  return n;
}

bool MPoly::multilinear() const {
  for (auto& [m, c] : terms_)
    for (int e : m)
      if (e > 1) return false;
  return true;
}

void MPoly::trim(const Monomial& key) {
  auto it = terms_.find(key);
  if (it != terms_.end() && it->second == 0) terms_.erase(it);
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (auto& [m, c] : o.terms_) {
    terms_[m] += c;
    trim(m);
  }
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (auto& [m, c] : o.terms_) {
    terms_[m] -= c;
    trim(m);
  }
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  for (auto& [ma, ca] : a.terms_)
    for (auto& [mb, cb] : b.terms_) {
      Monomial m = mono_mul(ma, mb);
      r.terms_[m] += ca * cb;
      r.trim(m);
    }
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r;
  for (auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

MPoly MPoly::scaled(const mpq_class& c) const {
  MPoly r;
  if (c == 0) return r;
  for (auto& [m, q] : terms_) r.terms_[m] = q * c;
  return r;
}

MPoly MPoly::shifted_by(const Monomial& mono, const mpq_class& c) const {
  MPoly r;
  if (c == 0) return r;
  for (auto& [m, q] : terms_) r.terms_[mono_mul(m, mono)] = q * c;
  return r;
}

void MPoly::set(const Monomial& m, const mpq_class& c) {
  if (c == 0)
    terms_.erase(m);
  else
    terms_[m] = c;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : terms_) {
    if (!first) os << " + ";
    if (m.empty())
      os << c.get_str();
    else if (c == 1)
      os << mono_str(m);
    else
      os << c.get_str() << "*" << mono_str(m);
    first = false;
  }
  return os.str();
}

SPoly::SPoly(const Scalar& c) {
  if (!c.is_zero()) terms_[{}] = c;
}

SPoly SPoly::from_mpoly(const MPoly& p) {
  SPoly r;
  for (auto& [m, c] : p.terms()) r.terms_[m] = Scalar(c);
  return r;
}

bool SPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Scalar SPoly::constant_term() const {
  auto it = terms_.find({});
  return it == terms_.end() ? Scalar(0L) : it->second;
}

int SPoly::degree_in(size_t var) const {
  int d = 0;
  for (auto& [m, c] : terms_) d = std::max(d, mono_degree_in(m, var));
  return d;
}

SPoly& SPoly::operator+=(const SPoly& o) {
  for (auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

SPoly& SPoly::operator-=(const SPoly& o) {
  for (auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, -c);
    if (!inserted) {
      it->second = it->second - c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

SPoly SPoly::operator-() const {
  SPoly r;
  for (auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

SPoly SPoly::scaled(const Scalar& c) const {
  SPoly r;
  if (c.is_zero()) return r;
  for (auto& [m, q] : terms_) {
    auto p = Scalar::mul(q, c);
    if (!p)
      throw std::logic_error("scalar product outside the representable set");
    if (!p->is_zero()) r.terms_[m] = *p;
  }
  return r;
}

SPoly SPoly::shifted_by(const Monomial& mono, const mpq_class& c) const {
  SPoly r;
  if (c == 0) return r;
  for (auto& [m, q] : terms_) r.terms_[mono_mul(m, mono)] = q * c;
  return r;
}

SPoly mul(const SPoly& a, const MPoly& b) {
  SPoly r;
  for (auto& [mb, cb] : b.terms()) r += a.shifted_by(mb, cb);
  return r;
}

void SPoly::set(const Monomial& m, const Scalar& c) {
  if (c.is_zero())
    terms_.erase(m);
  else
    terms_[m] = c;
}

std::optional<mpq_class> SPoly::proportional(const SPoly& a, const SPoly& b) {
  if (a.is_zero()) return std::nullopt;
  if (b.is_zero()) return mpq_class(0);
  if (a.terms_.size() != b.terms_.size()) return std::nullopt;
  std::optional<mpq_class> lambda;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return std::nullopt;
    mpq_class q;
    if (Scalar::ratio(ib->second, ia->second, &q) != Scalar::RatioKind::Rational)
      return std::nullopt;
    if (!lambda)
      lambda = q;
    else if (*lambda != q)
      return std::nullopt;
  }
  return lambda;
}

std::string SPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : terms_) {
    if (!first) os << " + ";
    os << "(" << c.str() << ")";
    if (!m.empty()) os << "*" << mono_str(m);
    first = false;
  }
  return os.str();
}

}  // namespace hardylab::petlab
