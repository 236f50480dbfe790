#pragma once

#include <gmpxx.h>

#include <array>
#include <optional>
#include <string>

#include "hardylab/bigfloat.hpp"

namespace hardylab {

// Exact scalar: a rational linear combination  q0 + q1*sqrt2 + q2*pi + q3*e.
// The four generators are pairwise Q-linearly independent, so component-wise
// equality is a sound equality test and all-components-zero is a sound zero
// test.  Whether pi and e admit a joint rational relation is open; ratio
// queries that would need it report "undecided" instead of guessing.
class Scalar {
 public:
  enum Tag { kOne = 0, kSqrt2 = 1, kPi = 2, kE = 3 };

  Scalar() = default;
  Scalar(const mpq_class& q) { c_[kOne] = q; }  // NOLINT: implicit by design
  Scalar(long n) { c_[kOne] = n; }              // NOLINT
  static Scalar irrational(Tag t, const mpq_class& mult = 1) {
    Scalar s;
    s.c_[t] = mult;
    return s;
  }

  bool is_zero() const {
    for (const auto& c : c_)
      if (c != 0) return false;
    return true;
  }
  bool is_rational() const { return c_[kSqrt2] == 0 && c_[kPi] == 0 && c_[kE] == 0; }
  const mpq_class& rational_part() const { return c_[kOne]; }
  mpq_class as_rational() const { return c_[kOne]; }  // valid when is_rational()

  // Exactly one non-rational generator, no rational part: c * tag.
  std::optional<std::pair<Tag, mpq_class>> single_tag() const {
    std::optional<std::pair<Tag, mpq_class>> found;
    for (int t = 0; t < 4; ++t) {
      if (c_[t] == 0) continue;
      if (found) return std::nullopt;
      found = {static_cast<Tag>(t), c_[t]};
    }
    return found;
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar r;
    for (int i = 0; i < 4; ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    Scalar r;
    for (int i = 0; i < 4; ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
  }
  Scalar operator-() const {
    Scalar r;
    for (int i = 0; i < 4; ++i) r.c_[i] = -c_[i];
    return r;
  }
  friend Scalar operator*(const Scalar& a, const mpq_class& q) {
    Scalar r;
    for (int i = 0; i < 4; ++i) r.c_[i] = a.c_[i] * q;
    return r;
  }
  friend Scalar operator*(const mpq_class& q, const Scalar& a) { return a * q; }

  // Product, defined when at least one factor is rational or both are pure
  // sqrt2 multiples (sqrt2 * sqrt2 = 2).  Returns nullopt otherwise.
  static std::optional<Scalar> mul(const Scalar& a, const Scalar& b) {
    if (a.is_rational()) return b * a.c_[kOne];
    if (b.is_rational()) return a * b.c_[kOne];
    auto ta = a.single_tag(), tb = b.single_tag();
    if (ta && tb && ta->first == kSqrt2 && tb->first == kSqrt2) {
      Scalar r;
      r.c_[kOne] = ta->second * tb->second * 2;
      return r;
    }
    return std::nullopt;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    for (int i = 0; i < 4; ++i)
      if (a.c_[i] != b.c_[i]) return false;
    return true;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Lexicographic order on components (for canonical sorting only).
  friend bool operator<(const Scalar& a, const Scalar& b) {
    for (int i = 0; i < 4; ++i) {
      int c = cmp(a.c_[i], b.c_[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }

  // a/b as an exact rational if the representation proves it; nullopt if the
  // ratio is provably irrational or (pi vs e) undecided.
  enum class RatioKind { Rational, Irrational, Undecided };
  static RatioKind ratio(const Scalar& a, const Scalar& b, mpq_class* out);

  BigFloat to_bigfloat(mpfr_prec_t prec) const {
    BigFloat r(c_[kOne], prec);
    if (c_[kSqrt2] != 0) r = r + BigFloat(c_[kSqrt2], prec) * BigFloat::sqrt2(prec);
    if (c_[kPi] != 0) r = r + BigFloat(c_[kPi], prec) * BigFloat::pi(prec);
    if (c_[kE] != 0) r = r + BigFloat(c_[kE], prec) * BigFloat::e(prec);
    return r;
  }
  double to_double() const { return to_bigfloat(128).to_double(); }
  // Sign is decidable numerically: a nonzero combination of 1, sqrt2, pi, e
  // with rational coefficients of height H is bounded away from 0 far beyond
  // 256-bit resolution for the coefficient sizes arising here.
  int sign() const {
    if (is_zero()) return 0;
    return to_bigfloat(256).sign();
  }

  std::string str() const;

 private:
  static int cmp(const mpq_class& a, const mpq_class& b) { return ::cmp(a, b); }
  std::array<mpq_class, 4> c_{0, 0, 0, 0};
};

}  // namespace hardylab
