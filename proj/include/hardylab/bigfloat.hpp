#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace hardylab {

// RAII wrapper around mpfr_t with value semantics.  Precision is carried
// per-value; binary operations compute at the max precision of the operands.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 128) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  BigFloat(double d, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, d, MPFR_RNDN); }
  BigFloat(long i, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, i, MPFR_RNDN); }
  BigFloat(const mpq_class& q, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }
  BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, 64); mpfr_swap(v_, o.v_); }
  BigFloat& operator=(BigFloat o) noexcept { mpfr_swap(v_, o.v_); return *this; }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_inf() const { return mpfr_inf_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }

  static BigFloat pi(mpfr_prec_t prec) { BigFloat r(prec); mpfr_const_pi(r.v_, MPFR_RNDN); return r; }
  static BigFloat e(mpfr_prec_t prec) {
    BigFloat one(1L, prec), r(prec);
    mpfr_exp(r.v_, one.v_, MPFR_RNDN);
    return r;
  }
  static BigFloat sqrt2(mpfr_prec_t prec) {
    BigFloat r(prec); mpfr_sqrt_ui(r.v_, 2, MPFR_RNDN); return r;
  }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.prec(), b.prec()));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.prec(), b.prec()));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.prec(), b.prec()));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.prec(), b.prec()));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  BigFloat operator-() const {
    BigFloat r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

  friend BigFloat abs(const BigFloat& a) {
    BigFloat r(a.prec());
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat log(const BigFloat& a) {
    BigFloat r(a.prec());
    mpfr_log(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat exp(const BigFloat& a) {
    BigFloat r(a.prec());
    mpfr_exp(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat pow(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.prec(), b.prec()));
    mpfr_pow(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat floor(const BigFloat& a) {
    BigFloat r(a.prec());
    mpfr_floor(r.v_, a.v_);
    return r;
  }
  friend BigFloat round_nearest(const BigFloat& a) {
    BigFloat r(a.prec());
    mpfr_round(r.v_, a.v_);
    return r;
  }

  long to_long() const { return mpfr_get_si(v_, MPFR_RNDZ); }
  std::string str(int digits = 20) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", digits, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }

 private:
  mpfr_t v_;
};

}  // namespace hardylab
