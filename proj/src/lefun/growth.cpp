#include "hardylab/lefun/growth.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "hardylab/errors.hpp"

namespace hardylab::lefun {

namespace {

// Exponent bookkeeping along the iterated-log chain t, log t, log log t, ...
constexpr int kLevels = 6;
constexpr double kNumEps = 1e-18;

struct LevelVec {
  std::array<Scalar, kLevels> v;
  std::array<double, kLevels> num{};
  std::array<bool, kLevels> is_exact;

  LevelVec() { is_exact.fill(true); }

  void add(int lvl, const Scalar& s) {
    v[lvl] = v[lvl] + s;
    num[lvl] += s.to_double();
  }
  void add_num(int lvl, double x) {
    is_exact[lvl] = false;
    num[lvl] += x;
  }
  // -1: provably zero; 0: unknown (numerically ambiguous); else the sign.
  int sign_at(int lvl, bool* decided) const {
    if (is_exact[lvl]) {
      *decided = true;
      return v[lvl].sign();
    }
    if (std::abs(num[lvl]) > kNumEps) {
      *decided = true;
      return num[lvl] > 0 ? 1 : -1;
    }
    *decided = false;
    return 0;
  }
};

// Chain level of an atom: t -> 0, log t -> 1, log log t -> 2, ...; -1 if the
// atom is not a pure iterated logarithm of t.
int chain_level(const Expr& atom) {
  if (atom->kind == Kind::Var) return 0;
  if (atom->kind == Kind::Log) {
    int inner = chain_level(atom->children[0]);
    if (inner >= 0 && inner + 1 < kLevels) return inner + 1;
  }
  return -1;
}

Term chain_term(int lvl) {
  Expr a = var_t();
  for (int i = 0; i < lvl; ++i) a = log_e(a);
  Term t;
  t.coeff = Scalar(1L);
  t.factors.push_back({a, 1});
  return t;
}

struct Cls {
  TermLimit kind = TermLimit::Unknown;
  LevelVec lv;
  int sign = 1;              // eventual sign; 0 = unknown
  double log_coeff = 0;      // log |multiplicative constant part|
  std::optional<Scalar> exact_coeff;  // constant part when exactly a Scalar
  bool unknown = false;
  bool has_residual = false;
  // Residual exp-scale summands (exp arguments not reducible to the chain),
  // each with the sign it diverges with.
  struct Resid {
    Term term;
    int sign;
  };
  std::vector<Resid> resid;
};

Cls classify_factors(const std::vector<Factor>& fs, int depth);
Cls classify_term_i(const Term& t, int depth);
Cls classify_ratio_i(const Term& a, const Term& b, int depth);

struct LeadInfo {
  Term term;
  double mult = 1.0;
  bool mult_exact = true;
};

std::optional<LeadInfo> leading_info(const Expr& normalized, int depth);

// Classification of the leading term of an expression, coefficient adjusted
// by the tie multiplier.
std::optional<Cls> classify_expr_lead(const Expr& e, int depth) {
  auto li = leading_info(e, depth);
  if (!li) return std::nullopt;
  Cls c = classify_term_i(li->term, depth);
  if (li->mult != 1.0) {
    c.log_coeff += std::log(std::abs(li->mult));
    if (li->mult < 0) c.sign = -c.sign;
    if (!li->mult_exact) c.exact_coeff.reset();
  }
  return c;
}

// Decide |term| -> infinity / 0 / constant by scanning scale components from
// the fastest down: residuals above t, then each chain level with residuals
// interleaved between consecutive levels.
void resolve_verdict(Cls& c, int depth) {
  if (c.unknown) {
    c.kind = TermLimit::Unknown;
    return;
  }
  // The log of a term is  log c + sum_k (level_k exponent) * L_{k+1} + sum
  // of residual exp-arguments.  Bucket each residual by the level scale it
  // beats: bucket k means the residual dominates L_{k+1}, i.e. it outranks
  // the level-k exponent contribution.
  auto& rs = c.resid;
  struct Placed {
    int bucket;
    Cls::Resid r;
  };
  std::vector<Placed> placed;
  for (auto& r : rs) {
    int bucket = kLevels;  // divergent but below every tracked scale
    for (int lvl = 1; lvl < kLevels; ++lvl) {
      Cls cmp = classify_ratio_i(r.term, chain_term(lvl), depth + 1);
      if (cmp.kind == TermLimit::Unknown) {
        c.kind = TermLimit::Unknown;
        return;
      }
      if (cmp.kind == TermLimit::ToInfinity) {
        bucket = lvl - 1;
        break;
      }
      if (cmp.kind == TermLimit::ToConstant) {
        // r ~ q * L_lvl: fold into the level-(lvl-1) exponent numerically.
        c.lv.add_num(lvl - 1, cmp.sign * std::exp(cmp.log_coeff));
        bucket = -1;
        break;
      }
    }
    if (bucket == -1) continue;
    placed.push_back({bucket, r});
  }
  // Walk scales from fastest to slowest.
  for (int scale = 0; scale <= kLevels; ++scale) {
    // Residuals sitting above level `scale`.
    std::vector<Cls::Resid*> here;
    for (auto& p : placed)
      if (p.bucket == scale) here.push_back(&p.r);
    if (!here.empty()) {
      // Dominant residual at this scale.
      Cls::Resid* dom = here[0];
      double coeff_sum = dom->sign;
      for (size_t i = 1; i < here.size(); ++i) {
        Cls cmp = classify_ratio_i(here[i]->term, dom->term, depth + 1);
        if (cmp.kind == TermLimit::ToInfinity) {
          dom = here[i];
          coeff_sum = dom->sign;
        } else if (cmp.kind == TermLimit::ToConstant) {
          coeff_sum += cmp.sign * std::exp(cmp.log_coeff) * here[i]->sign;
        } else if (cmp.kind == TermLimit::Unknown) {
          c.kind = TermLimit::Unknown;
          return;
        }
      }
      if (std::abs(coeff_sum) < 1e-12) {
        c.kind = TermLimit::Unknown;  // same-rate residual cancellation
        return;
      }
      c.has_residual = true;
      c.kind = coeff_sum > 0 ? TermLimit::ToInfinity : TermLimit::ToZero;
      return;
    }
    if (scale == kLevels) break;
    bool decided;
    int s = c.lv.sign_at(scale, &decided);
    if (!decided) {
      c.kind = TermLimit::Unknown;
      return;
    }
    if (s != 0) {
      c.kind = s > 0 ? TermLimit::ToInfinity : TermLimit::ToZero;
      return;
    }
  }
  c.kind = TermLimit::ToConstant;
}

Cls classify_factors(const std::vector<Factor>& fs, int depth) {
  Cls c;
  c.exact_coeff = Scalar(1L);
  if (depth > 40) {
    c.unknown = true;
    c.kind = TermLimit::Unknown;
    return c;
  }
  std::vector<std::pair<Expr, mpq_class>> exp_args;  // (argument, multiplicity)
  for (const auto& f : fs) {
    const Expr& atom = f.atom;
    int lvl = chain_level(atom);
    if (lvl >= 0) {
      c.lv.add(lvl, Scalar(f.exponent));
      continue;
    }
    switch (atom->kind) {
      case Kind::Const: {
        // Non-foldable constant atom (pi*e products and friends).
        double val = atom->value.to_double();
        if (val == 0) {
          c.unknown = true;
          break;
        }
        c.log_coeff += f.exponent.get_d() * std::log(std::abs(val));
        if (val < 0 && f.exponent.get_den() == 1 && f.exponent.get_num() % 2 != 0)
          c.sign = -c.sign;
        c.exact_coeff.reset();
        break;
      }
      case Kind::Exp: {
        if (atom->children[0]->kind == Kind::Const) {
          c.log_coeff += f.exponent.get_d() * atom->children[0]->value.to_double();
          c.exact_coeff.reset();
          break;
        }
        exp_args.push_back({atom->children[0], f.exponent});
        break;
      }
      case Kind::Log: {
        const Expr& arg = atom->children[0];
        if (arg->kind == Kind::Const) {
          double lv = std::log(arg->value.to_double());
          if (lv == 0) {
            c.unknown = true;
            break;
          }
          c.log_coeff += f.exponent.get_d() * std::log(std::abs(lv));
          if (lv < 0 && f.exponent.get_den() == 1 && f.exponent.get_num() % 2 != 0)
            c.sign = -c.sign;
          c.exact_coeff.reset();
          break;
        }
        auto lead = classify_expr_lead(arg, depth + 1);
        if (!lead || lead->kind == TermLimit::Unknown) {
          c.unknown = true;
          break;
        }
        if (lead->kind == TermLimit::ToConstant) {
          double L = lead->sign * std::exp(lead->log_coeff);
          if (std::abs(std::log(std::abs(L))) < 1e-15 || L <= 0) {
            c.unknown = true;  // log(arg) -> 0 or domain issue: no structural rate
            break;
          }
          double lg = std::log(L);
          c.log_coeff += f.exponent.get_d() * std::log(std::abs(lg));
          if (lg < 0 && f.exponent.get_den() == 1 && f.exponent.get_num() % 2 != 0)
            c.sign = -c.sign;
          c.exact_coeff.reset();
          break;
        }
        if (lead->kind == TermLimit::ToZero) {
          // log(arg) -> -inf at logarithmic scale of arg's decay.
          // |log(arg)| ~ |leading level exponent| * next-level chain.
          // Fall through to the divergent handling with flipped sign.
        }
        // arg -> infinity or 0: log|arg| ~ e_l * L_{l+1} where l is the
        // first nonzero level of arg (residual exp content dominates if any).
        if (lead->has_residual || !lead->resid.empty()) {
          c.unknown = true;  // log of exp-residual functions: out of calculus
          break;
        }
        int l = -1;
        double el = 0;
        for (int i = 0; i < kLevels; ++i) {
          bool decided;
          int s = lead->lv.sign_at(i, &decided);
          if (!decided) {
            c.unknown = true;
            break;
          }
          if (s != 0) {
            l = i;
            el = lead->lv.is_exact[i] ? lead->lv.v[i].to_double() : lead->lv.num[i];
            break;
          }
        }
        if (c.unknown) break;
        if (l < 0 || l + 1 >= kLevels) {
          c.unknown = true;
          break;
        }
        c.lv.add_num(l + 1, f.exponent.get_d());
        c.log_coeff += f.exponent.get_d() * std::log(std::abs(el));
        c.exact_coeff.reset();
        if (el < 0 && f.exponent.get_den() == 1 && f.exponent.get_num() % 2 != 0)
          c.sign = -c.sign;
        break;
      }
      case Kind::Abs:
      case Kind::Add: {
        const Expr& inner = atom->kind == Kind::Abs ? atom->children[0] : atom;
        auto lead = classify_expr_lead(inner, depth + 1);
        if (!lead || lead->kind == TermLimit::Unknown) {
          c.unknown = true;
          break;
        }
        double q = f.exponent.get_d();
        for (int i = 0; i < kLevels; ++i) {
          if (lead->lv.is_exact[i]) {
            if (lead->lv.v[i].is_zero()) continue;
            c.lv.add(i, lead->lv.v[i] * f.exponent);
          } else {
            c.lv.add_num(i, lead->lv.num[i] * q);
          }
        }
        for (auto& r : lead->resid) {
          Term scaled = r.term;
          scaled.coeff = scaled.coeff * f.exponent;
          c.resid.push_back({scaled, f.exponent < 0 ? -r.sign : r.sign});
        }
        c.log_coeff += q * lead->log_coeff;
        c.exact_coeff.reset();
        // |.|^q of the magnitude: sign positive for Abs; for Add atoms the
        // eventual sign follows the leading coefficient (integer exponents).
        if (atom->kind == Kind::Add && lead->sign < 0) {
          if (f.exponent.get_den() == 1) {
            if (f.exponent.get_num() % 2 != 0) c.sign = -c.sign;
          } else {
            c.unknown = true;  // fractional power of eventually negative base
          }
        }
        break;
      }
      default:
        c.unknown = true;
        break;
    }
    if (c.unknown) break;
  }

  if (!c.unknown && !exp_args.empty()) {
    // Combine all exp arguments symbolically so cancellations are exact.
    Expr w = constant(0L);
    for (auto& [arg, q] : exp_args) w = nadd(w, nmul(Scalar(q), arg));
    if (!is_zero(w)) {
      for (const Term& wt : to_terms(w)) {
        // Pure chain summand s*L_l: exp(s*L_l) = L_{l-1}^s.
        if (wt.factors.size() == 1 && wt.factors[0].exponent == 1) {
          int lvl = chain_level(wt.factors[0].atom);
          if (lvl >= 1) {
            c.lv.add(lvl - 1, wt.coeff);
            continue;
          }
          if (lvl == 0) {
            // exp(s*t): super-polynomial; treat as residual.
          }
        }
        if (wt.factors.empty()) {
          c.log_coeff += wt.coeff.to_double();
          c.exact_coeff.reset();
          continue;
        }
        Cls wc = classify_term_i(wt, depth + 1);
        if (wc.kind == TermLimit::Unknown || wc.sign == 0) {
          c.unknown = true;
          break;
        }
        if (wc.kind == TermLimit::ToZero) continue;  // exp(o(1)) -> 1
        if (wc.kind == TermLimit::ToConstant) {
          c.log_coeff += wc.sign * std::exp(wc.log_coeff);
          c.exact_coeff.reset();
          continue;
        }
        c.resid.push_back({wt, wc.sign});
      }
    }
  }

  resolve_verdict(c, depth);
  return c;
}

Cls classify_term_i(const Term& t, int depth) {
  Cls c = classify_factors(t.factors, depth);
  if (t.coeff.is_zero()) {
    c.kind = TermLimit::ToZero;
    return c;
  }
  double cv = t.coeff.to_double();
  c.log_coeff += std::log(std::abs(cv));
  if (cv < 0) c.sign = -c.sign;
  if (c.exact_coeff) {
    if (auto p = Scalar::mul(*c.exact_coeff, t.coeff))
      c.exact_coeff = *p;
    else
      c.exact_coeff.reset();
  }
  return c;
}

Cls classify_ratio_i(const Term& a, const Term& b, int depth) {
  // Merge factor maps: a minus b.
  std::map<Expr, mpq_class, bool (*)(const Expr&, const Expr&)> merged(
      [](const Expr& x, const Expr& y) { return compare(x, y) < 0; });
  for (const auto& f : a.factors) merged[f.atom] += f.exponent;
  for (const auto& f : b.factors) merged[f.atom] -= f.exponent;
  std::vector<Factor> fs;
  for (auto& [atom, e] : merged)
    if (e != 0) fs.push_back({atom, e});
  Cls c = classify_factors(fs, depth);
  double av = a.coeff.to_double(), bv = b.coeff.to_double();
  c.log_coeff += std::log(std::abs(av)) - std::log(std::abs(bv));
  if (av * bv < 0) c.sign = -c.sign;
  if (c.exact_coeff) {
    std::optional<Scalar> exact_ratio;
    if (b.coeff.is_rational()) {
      exact_ratio = a.coeff * (1 / b.coeff.as_rational());
    } else {
      mpq_class q;
      if (Scalar::ratio(a.coeff, b.coeff, &q) == Scalar::RatioKind::Rational)
        exact_ratio = Scalar(q);
    }
    if (exact_ratio) {
      if (auto p = Scalar::mul(*c.exact_coeff, *exact_ratio))
        c.exact_coeff = *p;
      else
        c.exact_coeff.reset();
    } else {
      c.exact_coeff.reset();
    }
  }
  return c;
}

std::optional<LeadInfo> leading_info(const Expr& normalized, int depth) {
  std::vector<Term> ts = to_terms(normalized);
  if (ts.empty()) return std::nullopt;
  LeadInfo li;
  li.term = ts[0];
  for (size_t i = 1; i < ts.size(); ++i) {
    Cls cmp = classify_ratio_i(li.term, ts[i], depth + 1);
    switch (cmp.kind) {
      case TermLimit::ToInfinity:
        break;  // champion stands
      case TermLimit::ToZero:
        li.term = ts[i];
        li.mult = 1.0;
        li.mult_exact = true;
        break;
      case TermLimit::ToConstant: {
        double L = cmp.sign * std::exp(cmp.log_coeff);
        li.mult += 1.0 / L;
        li.mult_exact = false;
        if (cmp.exact_coeff && cmp.exact_coeff->is_rational()) {
          // exact tie bookkeeping is possible but unnecessary: values only
          // feed SameRate limits, reported numerically
        }
        break;
      }
      case TermLimit::Unknown:
        return std::nullopt;
    }
  }
  if (std::abs(li.mult) < 1e-12) return std::nullopt;  // tie cancellation
  return li;
}

}  // namespace

TermClass classify_term(const Term& term) {
  Cls c = classify_term_i(term, 0);
  TermClass out;
  out.kind = c.kind;
  out.a = c.lv.v[0];
  out.b = c.lv.v[1];
  out.c = c.lv.v[2];
  out.exact = c.lv.is_exact[0] && c.lv.is_exact[1] && c.lv.is_exact[2];
  out.a_num = c.lv.is_exact[0] ? c.lv.v[0].to_double() : c.lv.num[0];
  out.b_num = c.lv.is_exact[1] ? c.lv.v[1].to_double() : c.lv.num[1];
  out.c_num = c.lv.is_exact[2] ? c.lv.v[2].to_double() : c.lv.num[2];
  out.limit = c.kind == TermLimit::ToConstant ? c.sign * std::exp(c.log_coeff) : 0.0;
  if (c.kind == TermLimit::ToConstant && c.exact_coeff) out.exact_limit = *c.exact_coeff;
  out.has_residual = !c.resid.empty();
  return out;
}

std::optional<Term> leading_term(const Expr& normalized) {
  auto li = leading_info(normalized, 0);
  if (!li) return std::nullopt;
  return li->term;
}

namespace {

// Numeric ladder fallback: log-domain samples with trend detection.
GrowthComparison ladder_compare(const Expr& f, const Expr& g, double floor_f, double floor_g) {
  GrowthComparison out;
  const double pts[4] = {1e3, 1e6, 1e9, 1e12};
  std::vector<double> lambda;
  double last_ratio_sign = 1;
  for (double p : pts) {
    if (p < floor_f || p < floor_g) continue;
    try {
      BigFloat t(p, 256);
      BigFloat vf = eval_expr(f, t), vg = eval_expr(g, t);
      if (vg.is_zero() || vf.is_zero()) continue;
      double lam = (log(abs(vf)) - log(abs(vg))).to_double();
      out.evidence.push_back({p, lam});
      lambda.push_back(lam);
      last_ratio_sign = vf.sign() * vg.sign();
    } catch (const DomainError&) {
      continue;
    }
  }
  if (lambda.size() < 3) {
    out.verdict = Verdict::Inconclusive;
    return out;
  }
  std::vector<double> d;
  for (size_t i = 1; i < lambda.size(); ++i) d.push_back(lambda[i] - lambda[i - 1]);
  double dl = d.back(), df = d.front();
  bool same_sign = true;
  for (double x : d)
    if (x * dl < 0) same_sign = false;
  // Converging differences: the ratio tends to a nonzero constant.
  if (std::abs(dl) < 0.02 && std::abs(dl) <= 0.25 * std::max(std::abs(df), 1e-12)) {
    out.verdict = Verdict::SameRate;
    out.limit = last_ratio_sign * std::exp(lambda.back());
    return out;
  }
  if (std::abs(dl) < 1e-9 && std::abs(df) < 1e-9) {
    out.verdict = Verdict::SameRate;
    out.limit = last_ratio_sign * std::exp(lambda.back());
    return out;
  }
  // Sustained monotone divergence.
  if (same_sign && std::abs(lambda.back()) > 3.0 && std::abs(dl) >= 0.8 * std::abs(df)) {
    out.verdict = dl > 0 ? Verdict::Dominates : Verdict::Dominated;
    return out;
  }
  out.verdict = Verdict::Inconclusive;
  return out;
}

void fill_evidence(GrowthComparison& out, const Expr& f, const Expr& g, double floor_f,
                   double floor_g) {
  if (!out.evidence.empty()) return;
  const double pts[4] = {1e3, 1e6, 1e9, 1e12};
  for (double p : pts) {
    if (p < floor_f || p < floor_g) continue;
    try {
      BigFloat t(p, 256);
      BigFloat vf = eval_expr(f, t), vg = eval_expr(g, t);
      if (vg.is_zero()) continue;
      out.evidence.push_back({p, (log(abs(vf)) - log(abs(vg))).to_double()});
    } catch (const DomainError&) {
      continue;
    }
  }
}

GrowthComparison compare_impl(const Expr& fraw, const Expr& graw, double floor_f,
                              double floor_g) {
  Expr f = normalize(fraw), g = normalize(graw);
  GrowthComparison out;
  if (is_zero(f) && is_zero(g)) {
    out.verdict = Verdict::Inconclusive;
    return out;
  }
  if (is_zero(f)) {
    out.verdict = Verdict::Dominated;
    out.structural = true;
    return out;
  }
  if (is_zero(g)) {
    out.verdict = Verdict::Dominates;
    out.structural = true;
    return out;
  }
  auto lf = leading_info(f, 0), lg = leading_info(g, 0);
  if (lf && lg) {
    Cls c = classify_ratio_i(lf->term, lg->term, 0);
    if (c.kind != TermLimit::Unknown) {
      double mult = lf->mult / lg->mult;
      switch (c.kind) {
        case TermLimit::ToInfinity:
          out.verdict = Verdict::Dominates;
          break;
        case TermLimit::ToZero:
          out.verdict = Verdict::Dominated;
          break;
        case TermLimit::ToConstant: {
          double L = c.sign * std::exp(c.log_coeff) * mult;
          out.verdict = Verdict::SameRate;
          out.limit = L;
          if (c.exact_coeff && lf->mult_exact && lg->mult_exact && lf->mult == 1.0 &&
              lg->mult == 1.0)
            out.exact_limit = *c.exact_coeff;
          break;
        }
        default:
          break;
      }
      out.structural = true;
      fill_evidence(out, f, g, floor_f, floor_g);
      return out;
    }
  }
  return ladder_compare(f, g, floor_f, floor_g);
}

}  // namespace

GrowthComparison compare_growth(const LEFunction& f, const LEFunction& g) {
  return compare_impl(f.expr, g.expr, f.domain_floor, g.domain_floor);
}

GrowthComparison compare_growth_expr(const Expr& f, const Expr& g) {
  return compare_impl(f, g, 0, 0);
}

GrowthDegree growth_degree(const LEFunction& f) {
  Expr e = normalize(f.expr);
  if (is_zero(e)) return {0, true};
  auto li = leading_info(e, 0);
  if (!li) throw InconclusiveError("leading term of " + to_string(e) + " undecided");
  Cls c = classify_term_i(li->term, 0);
  if (c.kind == TermLimit::Unknown)
    throw InconclusiveError("growth of " + to_string(e) + " undecided");
  // Residual exp arguments beyond the log t scale: the exp factor beats or
  // loses to every power of t outright.
  for (auto& r : c.resid) {
    Cls vs_t = classify_ratio_i(r.term, chain_term(1), 0);
    if (vs_t.kind == TermLimit::ToInfinity) {
      if (r.sign > 0)
        throw NotPolynomialGrowth("super-polynomial growth: " + to_string(e));
      return {0, true};  // decays below every fractional power
    }
  }
  double A = c.lv.is_exact[0] ? c.lv.v[0].to_double() : c.lv.num[0];
  if (A > 32.0001) throw NotPolynomialGrowth("exceeds t^32: " + to_string(e));
  GrowthDegree out;
  bool exactA = c.lv.is_exact[0];
  bool integerA = exactA && c.lv.v[0].is_rational() && c.lv.v[0].as_rational().get_den() == 1;
  if (integerA) {
    long n = c.lv.v[0].as_rational().get_num().get_si();
    if (n <= 0) {
      // degree-0 band or decaying: check divergence of the non-t part.
      out.degree = 0;
      out.sub_fractional = (n == 0);
      if (n < 0) out.sub_fractional = true;
      return out;
    }
    // f ~ t^n * (logs/residuals): f >= t^n iff the remaining part does not
    // decay faster than any constant... decide via the verdict of f / t^n.
    Term tn = chain_term(0);
    tn.factors[0].exponent = mpq_class(n);
    Cls rest = classify_ratio_i(li->term, tn, 0);
    if (rest.kind == TermLimit::ToZero)
      out.degree = static_cast<int>(n) - 1;
    else
      out.degree = static_cast<int>(n);
    return out;
  }
  if (A < -kNumEps) return {0, true};
  if (std::abs(A) <= kNumEps) {
    // sub-polynomial scale
    return {0, true};
  }
  out.degree = static_cast<int>(std::floor(A + 1e-12));
  out.sub_fractional = false;
  return out;
}

std::optional<int> is_strongly_nonpolynomial(const LEFunction& f) {
  GrowthDegree d = growth_degree(f);
  Expr lower = npow(var_t(), d.degree);
  Expr upper = npow(var_t(), d.degree + 1);
  GrowthComparison cl = compare_impl(f.expr, lower, f.domain_floor, 0);
  GrowthComparison cu = compare_impl(f.expr, upper, f.domain_floor, 0);
  if (cl.verdict == Verdict::Inconclusive || cu.verdict == Verdict::Inconclusive)
    throw InconclusiveError("strong non-polynomiality of " + to_string(f.expr) +
                            " undecided");
  if (cl.verdict == Verdict::Dominates && cu.verdict == Verdict::Dominated)
    return d.degree;
  return std::nullopt;
}

}  // namespace hardylab::lefun
