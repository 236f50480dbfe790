#pragma once

#include <complex>
#include <map>
#include <vector>

#include "hardylab/ergolab/system.hpp"

namespace hardylab::ergolab {

using Complex = std::complex<double>;
// Frequency vectors carry exact integers; automorphism pullbacks grow them
// exponentially, hence arbitrary precision.
using FreqVec = std::vector<mpz_class>;

// Finite trigonometric polynomial f(x) = sum_k c_k e(k . x) on T^dim.
class CharacterObservable {
 public:
  CharacterObservable() = default;
  explicit CharacterObservable(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  bool empty() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  void add_term(FreqVec k, Complex c);
  // integral against Lebesgue measure: the zero-frequency coefficient, exact
  Complex integral() const;
  double sup_bound() const;  // sum |c_k| >= L-infinity norm

  CharacterObservable conj() const;
  friend CharacterObservable operator*(const CharacterObservable& a,
                                       const CharacterObservable& b);

  // e(k1 x1 + ... ) with coefficient 1
  static CharacterObservable character(int dim, FreqVec k);
  static CharacterObservable constant(int dim, Complex c);

  // f composed with T^m: rotation and skew product turn into phase shifts
  // and integer frequency maps; automorphisms pull frequencies back by the
  // transposed matrix power (exact).
  CharacterObservable shifted(const SystemSpec& sys, long m) const;

  // tensor \bar f (x) f(y) on the product torus
  static CharacterObservable tensor_conj(const CharacterObservable& f);

  const std::map<FreqVec, Complex>& terms() const { return terms_; }
  // evaluation at a point (for the pointwise mode)
  Complex eval(const Point& p) const;

 private:
  int dim_ = 1;
  std::map<FreqVec, Complex> terms_;
};

// The product system T x T of a base system (rotations and skew products).
SystemSpec tensor_system(const SystemSpec& sys);

}  // namespace hardylab::ergolab
