#include "hardylab/ergolab/observable.hpp"

#include <cmath>

#include "hardylab/errors.hpp"
#include "hardylab/lefun/calculus.hpp"

namespace hardylab::ergolab {

namespace {
constexpr double kDropTol = 0.0;  // keep all exact-coefficient terms
}

void CharacterObservable::add_term(FreqVec k, Complex c) {
  if (c == Complex{}) return;
  k.resize(dim_, mpz_class(0));
  auto [it, inserted] = terms_.try_emplace(std::move(k), c);
  if (!inserted) {
    it->second += c;
    if (std::abs(it->second) <= kDropTol) terms_.erase(it);
  }
}

Complex CharacterObservable::integral() const {
  FreqVec zero(dim_, mpz_class(0));
  auto it = terms_.find(zero);
  return it == terms_.end() ? Complex{} : it->second;
}

double CharacterObservable::sup_bound() const {
  double s = 0;
  for (auto& [k, c] : terms_) s += std::abs(c);
  return s;
}

CharacterObservable CharacterObservable::conj() const {
  CharacterObservable out(dim_);
  for (auto& [k, c] : terms_) {
    FreqVec nk(k.size());
    for (size_t i = 0; i < k.size(); ++i) nk[i] = -k[i];
    out.terms_[std::move(nk)] = std::conj(c);
  }
  return out;
}

CharacterObservable operator*(const CharacterObservable& a, const CharacterObservable& b) {
  CharacterObservable out(a.dim_);
  for (auto& [ka, ca] : a.terms_) {
    for (auto& [kb, cb] : b.terms_) {
      FreqVec k(ka.size());
      for (size_t i = 0; i < k.size(); ++i) k[i] = ka[i] + kb[i];
      out.add_term(std::move(k), ca * cb);
    }
  }
  return out;
}

CharacterObservable CharacterObservable::character(int dim, FreqVec k) {
  CharacterObservable f(dim);
  f.add_term(std::move(k), Complex{1.0, 0.0});
  return f;
}

CharacterObservable CharacterObservable::constant(int dim, Complex c) {
  CharacterObservable f(dim);
  f.add_term(FreqVec(dim, mpz_class(0)), c);
  return f;
}

namespace {

Complex unit_phase(const BigFloat& theta) {
  BigFloat f = mod1(theta);
  double t = f.to_double();
  return Complex{std::cos(2 * M_PI * t), std::sin(2 * M_PI * t)};
}

}  // namespace

CharacterObservable CharacterObservable::shifted(const SystemSpec& sys, long m) const {
  CharacterObservable out(dim_);
  const mpfr_prec_t prec = 256;
  if (auto* r = std::get_if<TorusRotation>(&sys.kind)) {
    // e(k.(x + m a)) = e(k.x) e(m k.a)
    for (auto& [k, c] : terms_) {
      BigFloat phase(0.0, prec);
      for (int i = 0; i < r->dim; ++i) {
        if (k[i] == 0) continue;
        BigFloat a = lefun::eval_expr(r->alpha[i], BigFloat(1.0, prec));
        phase = phase + BigFloat(mpq_class(k[i] * m), prec) * a;
      }
      out.add_term(k, c * unit_phase(phase));
    }
    return out;
  }
  if (auto* s = std::get_if<SkewProduct>(&sys.kind)) {
    // e(k1 x + k2 y) o T^m = e((k1 + 2 m k2) x + k2 y) e((k1 m + k2 m^2) a)
    BigFloat a = lefun::eval_expr(s->alpha, BigFloat(1.0, prec));
    for (auto& [k, c] : terms_) {
      mpz_class k1 = k[0], k2 = k[1];
      FreqVec nk = {k1 + 2 * m * k2, k2};
      mpz_class mult = k1 * m + k2 * mpz_class(m) * mpz_class(m);
      BigFloat phase = BigFloat(mpq_class(mult), prec) * a;
      out.add_term(std::move(nk), c * unit_phase(phase));
    }
    return out;
  }
  auto* A = std::get_if<ToralAutomorphism>(&sys.kind);
  // e(k . A^m x) = e(((A^T)^m k) . x): pull back by the transposed power.
  ToralAutomorphism At;
  At.a = {{{A->a[0][0], A->a[1][0]}, {A->a[0][1], A->a[1][1]}}};
  for (auto& [k, c] : terms_) {
    // exact mpz matrix power on the frequency vector
    RationalPoint unused{{0, 0}, 1};
    (void)unused;
    // reuse matrix power through automorphism_power is mod-q; do it directly
    mpz_class a(At.a[0][0]), b(At.a[0][1]), cc(At.a[1][0]), d(At.a[1][1]);
    // binary exponentiation on 2x2 mpz matrices
    mpz_class m00 = 1, m01 = 0, m10 = 0, m11 = 1;
    long e = m;
    mpz_class b00 = a, b01 = b, b10 = cc, b11 = d;
    if (e < 0) {
      long det = A->a[0][0] * A->a[1][1] - A->a[0][1] * A->a[1][0];
      mpz_class i00 = At.a[1][1] * det, i01 = -At.a[0][1] * det;
      mpz_class i10 = -At.a[1][0] * det, i11 = At.a[0][0] * det;
      b00 = i00; b01 = i01; b10 = i10; b11 = i11;
      e = -e;
    }
    while (e > 0) {
      if (e & 1) {
        mpz_class n00 = m00 * b00 + m01 * b10, n01 = m00 * b01 + m01 * b11;
        mpz_class n10 = m10 * b00 + m11 * b10, n11 = m10 * b01 + m11 * b11;
        m00 = n00; m01 = n01; m10 = n10; m11 = n11;
      }
      mpz_class n00 = b00 * b00 + b01 * b10, n01 = b00 * b01 + b01 * b11;
      mpz_class n10 = b10 * b00 + b11 * b10, n11 = b10 * b01 + b11 * b11;
      b00 = n00; b01 = n01; b10 = n10; b11 = n11;
      e >>= 1;
    }
    FreqVec nk = {m00 * k[0] + m01 * k[1], m10 * k[0] + m11 * k[1]};
    out.add_term(std::move(nk), c);
  }
  return out;
}

CharacterObservable CharacterObservable::tensor_conj(const CharacterObservable& f) {
  CharacterObservable out(2 * f.dim_);
  for (auto& [k1, c1] : f.terms_) {
    for (auto& [k2, c2] : f.terms_) {
      FreqVec k(2 * f.dim_);
      for (int i = 0; i < f.dim_; ++i) {
        k[i] = -k1[i];
        k[f.dim_ + i] = k2[i];
      }
      out.add_term(std::move(k), std::conj(c1) * c2);
    }
  }
  return out;
}

Complex CharacterObservable::eval(const Point& p) const {
  Complex v{};
  for (auto& [k, c] : terms_) {
    BigFloat phase(0.0, p.x.empty() ? 64 : p.x[0].prec());
    for (size_t i = 0; i < k.size(); ++i) {
      if (k[i] == 0) continue;
      phase = phase + BigFloat(mpq_class(k[i]), phase.prec()) * p.x[i];
    }
    v += c * unit_phase(phase);
  }
  return v;
}

SystemSpec tensor_system(const SystemSpec& sys) {
  if (auto* r = std::get_if<TorusRotation>(&sys.kind)) {
    std::vector<lefun::Expr> alpha = r->alpha;
    alpha.insert(alpha.end(), r->alpha.begin(), r->alpha.end());
    return make_rotation(std::move(alpha));
  }
  throw UnsupportedSystem("tensor system only supports rotations");
}

}  // namespace hardylab::ergolab
