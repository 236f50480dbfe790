#include "hardylab/ergolab/averages.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "hardylab/errors.hpp"
#include "hardylab/lefun/growth.hpp"

namespace hardylab::ergolab {

namespace {

// Neumaier-compensated complex accumulator.
struct Kahan {
  double sr = 0, cr = 0, si = 0, ci = 0;
  void add(Complex v) {
    auto acc = [](double& s, double& c, double x) {
      double t = s + x;
      if (std::abs(s) >= std::abs(x))
        c += (s - t) + x;
      else
        c += (x - t) + s;
      s = t;
    };
    acc(sr, cr, v.real());
    acc(si, ci, v.imag());
  }
  Complex value() const { return {sr + cr, si + ci}; }
};

constexpr long kBlock = 4096;

Complex phase_unit(double frac) {
  return {std::cos(2 * M_PI * frac), std::sin(2 * M_PI * frac)};
}

// alpha values of a rotation at 256 bits.
std::vector<BigFloat> rotation_alphas(const TorusRotation& r) {
  std::vector<BigFloat> a;
  for (const auto& e : r.alpha) a.push_back(lefun::eval_expr(e, BigFloat(1.0, 256)));
  return a;
}

double frac_to_double(const BigFloat& theta) { return mod1(theta).to_double(); }

}  // namespace

Complex multiple_average_pointwise(const SystemSpec& sys,
                                   const std::vector<CharacterObservable>& fs,
                                   const std::vector<IterateSequence>& as, long N,
                                   const Point& x, int threads) {
  if (fs.size() != as.size()) throw DomainError("function/iterate count mismatch");
  for (const auto& a : as)
    if (a.size() < N) throw DomainError("iterate sequence shorter than N");

  const long nblocks = (N + kBlock - 1) / kBlock;
  std::vector<Complex> block_sums(static_cast<size_t>(nblocks));

  auto run_block = [&](long b) {
    Kahan acc;
    long lo = b * kBlock + 1, hi = std::min(N, (b + 1) * kBlock);
    for (long n = lo; n <= hi; ++n) {
      Complex prod{1.0, 0.0};
      for (size_t i = 0; i < fs.size(); ++i) {
        Point y = power_map(sys, static_cast<long>(as[i].at(n)), x);
        prod *= fs[i].eval(y);
      }
      acc.add(prod);
    }
    block_sums[static_cast<size_t>(b)] = acc.value();
  };

  if (threads <= 1) {
    for (long b = 0; b < nblocks; ++b) run_block(b);
  } else {
    std::vector<std::thread> pool;
    std::atomic<long> next{0};
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (long b = next.fetch_add(1); b < nblocks; b = next.fetch_add(1)) run_block(b);
      });
    for (auto& th : pool) th.join();
  }
  // fixed sequential fold of the block sums: identical for any thread count
  Kahan total;
  for (Complex v : block_sums) total.add(v);
  return total.value() / static_cast<double>(N);
}

namespace {

// Frequency-coefficient expansion of (1/N) sum_n prod_i T^{v_i(n)} f_i.
std::map<FreqVec, Complex> average_spectrum(const SystemSpec& sys,
                                            const std::vector<CharacterObservable>& fs,
                                            const std::vector<IterateSequence>& as,
                                            long N) {
  const size_t k = fs.size();
  double terms = 1;
  for (const auto& f : fs) terms *= static_cast<double>(f.term_count());
  if (static_cast<double>(N) * static_cast<double>(N) * terms > 1e10)
    throw ComplexityRefusal("N^2 * term count exceeds 1e10");

  const int dim = sys.dim();
  std::map<FreqVec, Kahan> acc;

  if (auto* rot = std::get_if<TorusRotation>(&sys.kind)) {
    // e(k.(x + v a)) = e(k.x) e(v k.a): precompute k.a per term and walk n.
    auto alphas = rotation_alphas(*rot);
    struct TermData {
      FreqVec k;
      Complex c;
      BigFloat ka{256};
    };
    std::vector<std::vector<TermData>> tf(k);
    for (size_t i = 0; i < k; ++i) {
      for (auto& [kk, cc] : fs[i].terms()) {
        TermData td;
        td.k = kk;
        td.c = cc;
        BigFloat ka(0.0, 256);
        for (int jj = 0; jj < dim; ++jj)
          if (kk[jj] != 0) ka = ka + BigFloat(mpq_class(kk[jj]), 256) * alphas[jj];
        td.ka = mod1(ka);
        tf[i].push_back(std::move(td));
      }
    }
    // enumerate term combinations
    std::vector<size_t> idx(k, 0);
    for (;;) {
      FreqVec K(dim, mpz_class(0));
      Complex coeff{1.0, 0.0};
      for (size_t i = 0; i < k; ++i) {
        const TermData& td = tf[i][idx[i]];
        for (int jj = 0; jj < dim; ++jj) K[jj] += td.k[jj];
        coeff *= td.c;
      }
      Kahan& slot = acc[K];
      // phase(n) = sum_i v_i(n) * (k_i . a) mod 1, computed in double after
      // a high-precision reduction of (k_i . a)
      std::vector<double> ka(k);
      for (size_t i = 0; i < k; ++i) ka[i] = tf[i][idx[i]].ka.to_double();
      for (long n = 1; n <= N; ++n) {
        double ph = 0;
        for (size_t i = 0; i < k; ++i) {
          double p = std::fmod(static_cast<double>(as[i].at(n)) * ka[i], 1.0);
          ph += p;
        }
        slot.add(coeff * phase_unit(std::fmod(ph, 1.0)));
      }
      // next combination
      size_t pos = 0;
      while (pos < k) {
        if (++idx[pos] < tf[pos].size()) break;
        idx[pos] = 0;
        ++pos;
      }
      if (pos == k) break;
    }
  } else {
    // generic path: shift observables exactly per n (skew products and
    // automorphisms)
    for (long n = 1; n <= N; ++n) {
      CharacterObservable prod = CharacterObservable::constant(dim, {1.0, 0.0});
      for (size_t i = 0; i < k; ++i)
        prod = prod * fs[i].shifted(sys, static_cast<long>(as[i].at(n)));
      for (auto& [kk, cc] : prod.terms()) acc[kk].add(cc);
    }
  }

  std::map<FreqVec, Complex> out;
  for (auto& [kk, kh] : acc) out[kk] = kh.value() / static_cast<double>(N);
  return out;
}

}  // namespace

double multiple_average_L2(const SystemSpec& sys,
                           const std::vector<CharacterObservable>& fs,
                           const std::vector<IterateSequence>& as, long N) {
  if (fs.size() != as.size()) throw DomainError("function/iterate count mismatch");
  auto spectrum = average_spectrum(sys, fs, as, N);
  Complex target{1.0, 0.0};
  for (const auto& f : fs) target *= f.integral();
  const int dim = sys.dim();
  FreqVec zero(dim, mpz_class(0));
  double norm2 = 0;
  bool saw_zero = false;
  for (auto& [kk, cc] : spectrum) {
    if (kk == zero) {
      norm2 += std::norm(cc - target);
      saw_zero = true;
    } else {
      norm2 += std::norm(cc);
    }
  }
  if (!saw_zero) norm2 += std::norm(target);
  return std::sqrt(norm2);
}

Complex weyl_sum(const std::vector<IterateSequence>& as, const std::vector<mpq_class>& ts,
                 long N) {
  if (as.size() != ts.size()) throw DomainError("iterate/frequency count mismatch");
  bool all_zero = true;
  for (const auto& t : ts)
    if (t != 0) all_zero = false;
  if (all_zero) return {1.0, 0.0};
  Kahan acc;
  for (long n = 1; n <= N; ++n) {
    // exact rational phase: sum_i t_i v_i mod 1
    mpq_class ph = 0;
    for (size_t i = 0; i < ts.size(); ++i) {
      if (ts[i] == 0) continue;
      mpz_class v(as[i].at(n));
      mpz_class den = ts[i].get_den();
      mpz_class r = (v % den) * ts[i].get_num() % den;
      ph += mpq_class(r, den);
    }
    ph -= ph.get_num() / ph.get_den();  // integer part off (floor for >=0)
    double frac = ph.get_d();
    if (frac < 0) frac += 1.0;
    acc.add(phase_unit(frac));
  }
  return acc.value() / static_cast<double>(N);
}

IntervalCheck short_interval_double_average(const SystemSpec& sys,
                                            const std::vector<CharacterObservable>& fs,
                                            const std::vector<IterateSequence>& as, long R,
                                            const lefun::LEFunction& L, int d) {
  // 1 << L << t is a precondition of the double-averaging lemma.
  auto cl = lefun::compare_growth_expr(L.expr, lefun::constant(1L));
  auto cu = lefun::compare_growth_expr(L.expr, lefun::var_t());
  if (cl.verdict != lefun::Verdict::Dominates || cu.verdict != lefun::Verdict::Dominated)
    throw DomainError("window function must satisfy 1 << L << t");
  if (d < 1) throw DomainError("exponent d must be >= 1");

  auto* rot = std::get_if<TorusRotation>(&sys.kind);
  if (!rot) throw UnsupportedSystem("short-interval averaging is rotation-only");
  const int dim = rot->dim;
  auto alphas = rotation_alphas(*rot);

  // window end: n ranges to r + L(r); iterates must cover max index
  long maxL = static_cast<long>(
      std::floor(lefun::eval_expr(L.expr, BigFloat(static_cast<double>(R), 128)).to_double()));
  long maxN = R + maxL;
  for (const auto& a : as)
    if (a.size() < maxN) throw DomainError("iterate sequences must cover R + L(R)");

  // Enumerate term combinations: each yields a constant total frequency K and
  // an n-dependent phase; prefix sums give all window averages.
  const size_t k = fs.size();
  struct Combo {
    FreqVec K;
    Complex coeff;
    std::vector<double> ka;           // per function: (k_i . alpha) mod 1
    std::vector<Complex> prefix;      // prefix[n] = sum_{1<=j<=n} e(phase(j))
  };
  std::vector<Combo> combos;
  {
    std::vector<std::vector<std::pair<FreqVec, Complex>>> tf(k);
    for (size_t i = 0; i < k; ++i)
      for (auto& [kk, cc] : fs[i].terms()) tf[i].push_back({kk, cc});
    std::vector<size_t> idx(k, 0);
    for (;;) {
      Combo cb;
      cb.K.assign(dim, mpz_class(0));
      cb.coeff = {1.0, 0.0};
      cb.ka.resize(k);
      for (size_t i = 0; i < k; ++i) {
        auto& [kk, cc] = tf[i][idx[i]];
        for (int jj = 0; jj < dim; ++jj) cb.K[jj] += kk[jj];
        cb.coeff *= cc;
        BigFloat ka(0.0, 256);
        for (int jj = 0; jj < dim; ++jj)
          if (kk[jj] != 0) ka = ka + BigFloat(mpq_class(kk[jj]), 256) * alphas[jj];
        cb.ka[i] = frac_to_double(ka);
      }
      combos.push_back(std::move(cb));
      size_t pos = 0;
      while (pos < k) {
        if (++idx[pos] < tf[pos].size()) break;
        idx[pos] = 0;
        ++pos;
      }
      if (pos == k) break;
    }
  }
  for (auto& cb : combos) {
    cb.prefix.resize(static_cast<size_t>(maxN) + 1);
    cb.prefix[0] = {0.0, 0.0};
    Kahan acc;
    for (long n = 1; n <= maxN; ++n) {
      double ph = 0;
      for (size_t i = 0; i < k; ++i)
        ph += std::fmod(static_cast<double>(as[i].at(n)) * cb.ka[i], 1.0);
      acc.add(phase_unit(std::fmod(ph, 1.0)));
      cb.prefix[static_cast<size_t>(n)] = acc.value();
    }
  }

  // lhs: || E_{1<=n<=R} A_n ||_2 via Parseval over total frequencies
  std::map<FreqVec, Complex> lhs_coeffs;
  for (auto& cb : combos)
    lhs_coeffs[cb.K] += cb.coeff * (cb.prefix[static_cast<size_t>(R)]) /
                        static_cast<double>(R);
  double lhs2 = 0;
  for (auto& [K, c] : lhs_coeffs) lhs2 += std::norm(c);

  // rhs: E_r || E_{r<=n<=r+L(r)} A_n ||^d
  Kahan rsum;
  for (long r = 1; r <= R; ++r) {
    long Lr = static_cast<long>(std::floor(
        lefun::eval_expr(L.expr, BigFloat(static_cast<double>(r), 128)).to_double()));
    long hi = std::min(maxN, r + Lr);
    long len = hi - r + 1;
    std::map<FreqVec, Complex> wcoeffs;
    for (auto& cb : combos)
      wcoeffs[cb.K] += cb.coeff *
                       (cb.prefix[static_cast<size_t>(hi)] -
                        cb.prefix[static_cast<size_t>(r - 1)]) /
                       static_cast<double>(len);
    double w2 = 0;
    for (auto& [K, c] : wcoeffs) w2 += std::norm(c);
    rsum.add(std::pow(std::sqrt(w2), d));
  }

  IntervalCheck out;
  out.lhs = std::sqrt(lhs2);
  out.rhs = rsum.value().real() / static_cast<double>(R);
  return out;
}

double recurrence_average(const SystemSpec& sys, const Box& box,
                          const std::vector<IterateSequence>& as, long N) {
  auto* rot = std::get_if<TorusRotation>(&sys.kind);
  if (!rot) throw UnsupportedSystem("recurrence averages are rotation-only");
  const int dim = rot->dim;
  if (static_cast<int>(box.sides.size()) != dim)
    throw DomainError("box dimension mismatch");
  auto alphas = rotation_alphas(*rot);

  // per-dimension circular interval intersection of [lo, lo+len) and the
  // shifted copies [lo - v*alpha, ...)
  Kahan acc;
  for (long n = 1; n <= N; ++n) {
    double measure = 1.0;
    for (int jj = 0; jj < dim && measure > 0; ++jj) {
      double lo = box.sides[jj].first;
      double len = box.sides[jj].second;
      if (len >= 1.0) continue;  // whole circle in this coordinate
      // Collect arcs: base [0, len) after translating coordinates by lo; the
      // i-th shifted set is [ -v_i alpha, -v_i alpha + len ).
      // Intersect iteratively, carrying up to two arcs.
      struct Arc {
        double a, b;  // [a, b) with 0 <= a < b <= 1 after splitting
      };
      std::vector<Arc> current = {{0.0, len}};
      for (const auto& seq : as) {
        double shift =
            frac_to_double(BigFloat(mpq_class(-seq.at(n)), 256) * alphas[jj]);
        // shifted arc [shift, shift+len) mod 1, split at the wrap
        std::vector<Arc> other;
        double a = shift, b = shift + len;
        if (b <= 1.0) {
          other.push_back({a, b});
        } else {
          other.push_back({a, 1.0});
          other.push_back({0.0, b - 1.0});
        }
        std::vector<Arc> next;
        for (const Arc& u : current)
          for (const Arc& v : other) {
            double x = std::max(u.a, v.a), y = std::min(u.b, v.b);
            if (y > x) next.push_back({x, y});
          }
        current = std::move(next);
        if (current.empty()) break;
      }
      double m = 0;
      for (const Arc& u : current) m += u.b - u.a;
      measure *= m;
    }
    acc.add(Complex{measure, 0.0});
  }
  return acc.value().real() / static_cast<double>(N);
}

VdcSides vdc_inequality_sides(const std::vector<Complex>& u, long M) {
  const long N = static_cast<long>(u.size());
  if (M < 1 || M > N) throw DomainError("need 1 <= M <= N");
  Kahan s;
  for (Complex v : u) s.add(v);
  Complex S = s.value();
  VdcSides out;
  out.lhs = std::norm(S / static_cast<double>(N));
  double rhs = 0;
  for (long delta = -(M - 1); delta <= M - 1; ++delta) {
    Kahan corr;
    long lo = std::max(0L, -delta), hi = std::min(N - 1, N - 1 - delta);
    for (long n = lo; n <= hi; ++n)
      corr.add(u[static_cast<size_t>(n + delta)] * std::conj(u[static_cast<size_t>(n)]));
    rhs += static_cast<double>(M - std::abs(delta)) * std::abs(corr.value());
  }
  out.rhs = rhs * static_cast<double>(N + M - 1) /
            (static_cast<double>(N) * N * static_cast<double>(M) * M);
  return out;
}

}  // namespace hardylab::ergolab
