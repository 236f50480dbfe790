#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "hardylab/scalar.hpp"

namespace hardylab::petlab {

// Monomial in shift variables m_1, m_2, ...: exponent vector with trailing
// zeros trimmed.  The empty vector is the constant monomial.
using Monomial = std::vector<int>;

Monomial mono_mul(const Monomial& a, const Monomial& b);
int mono_degree_in(const Monomial& m, size_t var);
std::string mono_str(const Monomial& m);

// Polynomial in the shift variables with exact rational coefficients.
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(const mpq_class& c);
  static MPoly variable(size_t var, const mpq_class& coeff = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  mpq_class constant_term() const;
  int degree_in(size_t var) const;
  size_t max_var() const;  // number of variables spanned (1-based index max)
  bool multilinear() const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly operator-() const;
  MPoly scaled(const mpq_class& c) const;
  // multiply by a single monomial
  MPoly shifted_by(const Monomial& m, const mpq_class& c) const;

  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  const std::map<Monomial, mpq_class>& terms() const { return terms_; }
  void set(const Monomial& m, const mpq_class& c);

  std::string str() const;

 private:
  void trim(const Monomial& key);
  std::map<Monomial, mpq_class> terms_;
};

// Polynomial in the shift variables with exact Scalar coefficients; used for
// canonical forms of coefficients over basis functions.
class SPoly {
 public:
  SPoly() = default;
  explicit SPoly(const Scalar& c);
  static SPoly from_mpoly(const MPoly& p);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  int degree_in(size_t var) const;

  SPoly& operator+=(const SPoly& o);
  SPoly& operator-=(const SPoly& o);
  friend SPoly operator+(SPoly a, const SPoly& b) { return a += b; }
  friend SPoly operator-(SPoly a, const SPoly& b) { return a -= b; }
  SPoly operator-() const;
  SPoly scaled(const Scalar& c) const;             // c rational or tagged
  SPoly shifted_by(const Monomial& m, const mpq_class& c) const;
  // product with a rational-coefficient polynomial
  friend SPoly mul(const SPoly& a, const MPoly& b);

  friend bool operator==(const SPoly& a, const SPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const SPoly& a, const SPoly& b) { return !(a == b); }

  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  void set(const Monomial& m, const Scalar& c);

  // If b == lambda * a for a rational lambda, returns it.
  static std::optional<mpq_class> proportional(const SPoly& a, const SPoly& b);

  std::string str() const;

 private:
  std::map<Monomial, Scalar> terms_;
};

}  // namespace hardylab::petlab
