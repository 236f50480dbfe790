#include "hardylab/petlab/pet.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

#include "hardylab/errors.hpp"

namespace hardylab::petlab {

namespace {

// Leading-vector entries paired with their expansions over the original
// u-slots: entry value (exact coefficient) and sum_j slot[j] * u_j.
struct TrackedLV {
  std::vector<AsymCoeff> values;
  std::vector<std::vector<MPoly>> slots;  // [entry][orig index]
};

// Matches `entry` against the three lemma forms built from the previous
// leading vector `prev` (values + slot expansions), degree d, shift var.
// On success writes the slot expansion of the entry over the original u's.
FormMatch match_form_full(const AsymCoeff& entry, const TrackedLV& prev, int d, size_t var,
                          std::vector<MPoly>* slots_out) {
  const size_t n = prev.values.size();
  for (size_t i = 0; i < n; ++i) {
    if (entry == prev.values[i]) {
      *slots_out = prev.slots[i];
      return {FormMatch::OldEntry, i, 0};
    }
  }
  MPoly h = MPoly::variable(var);
  for (int r = 1; r <= d; ++r) {
    AsymCoeff cand = prev.values[0].times(h.scaled(r));
    if (entry == cand) {
      std::vector<MPoly> slots(prev.slots[0].size());
      for (size_t j = 0; j < slots.size(); ++j) slots[j] = prev.slots[0][j] * h.scaled(r);
      *slots_out = slots;
      return {FormMatch::ShiftMultiple, 0, r};
    }
    for (size_t i = 0; i < n; ++i) {
      AsymCoeff cand3 = cand + prev.values[i];
      if (entry == cand3) {
        std::vector<MPoly> slots(prev.slots[0].size());
        for (size_t j = 0; j < slots.size(); ++j)
          slots[j] = prev.slots[0][j] * h.scaled(r) + prev.slots[i][j];
        *slots_out = slots;
        return {FormMatch::ShiftPlusOld, i, r};
      }
    }
  }
  throw FormViolation("leading-vector entry matches no lemma form: " + entry.str());
}

// The vdC successor family with a symbolic shift variable, ordered with the
// new leading polynomial first, then by non-increasing degree (stable).
PolyFamily vdc_symbolic(const PolyFamily& fam, size_t pivot, size_t var) {
  const VarPoly& p = fam[pivot];
  PolyFamily out;
  auto push = [&](VarPoly q) {
    if (q.is_zero() || q.is_constant()) return;
    out.push_back(std::move(q));
  };
  for (const auto& q : fam) push(q.shifted_sym(var) - p);
  for (size_t i = 0; i < fam.size(); ++i) {
    if (i == pivot) continue;
    push(fam[i] - p);
  }
  if (out.empty()) throw EmptyFamily("symbolic vdC produced only constants");
  std::stable_sort(out.begin(), out.end(), [](const VarPoly& a, const VarPoly& b) {
    return a.degree() > b.degree();
  });
  return out;
}

std::string form_str(const FormMatch& m) {
  std::ostringstream os;
  switch (m.kind) {
    case FormMatch::OldEntry:
      os << "u_" << (m.old_index + 1);
      break;
    case FormMatch::ShiftMultiple:
      os << m.r << "*u_1*h";
      break;
    case FormMatch::ShiftPlusOld:
      os << m.r << "*u_1*h + u_" << (m.old_index + 1);
      break;
  }
  return os.str();
}

}  // namespace

LemmaFormReport lemma_form_check(const PolyFamily& fam, size_t pivot) {
  check_nice(fam);
  if (fam.empty()) throw EmptyFamily("empty family");
  int d = 0;
  for (const auto& q : fam) d = std::max(d, q.degree());
  // Previous leading vector with identity slots.
  TrackedLV prev;
  LeadingVector lv = leading_vector(fam, 0);
  prev.values = lv.entries;
  prev.slots.resize(lv.entries.size());
  for (size_t i = 0; i < lv.entries.size(); ++i) {
    prev.slots[i].assign(lv.entries.size(), MPoly{});
    prev.slots[i][i] = MPoly(1);
  }
  // Fresh symbolic shift: use a variable index beyond anything in fam.
  size_t var = 0;
  for (const auto& q : fam)
    for (const auto& c : q.coeffs())
      for (const auto& [b, sp] : c.parts())
        for (const auto& [mono, sc] : sp.terms()) var = std::max(var, mono.size());
  PolyFamily next = vdc_symbolic(fam, pivot, var);
  LeadingVector nlv = leading_vector(next, 0);
  LemmaFormReport rep;
  for (const auto& entry : nlv.entries) {
    std::vector<MPoly> slots;
    FormMatch m = match_form_full(entry, prev, d, var, &slots);
    rep.matches.push_back(m);
    rep.rendered.push_back(form_str(m));
  }
  return rep;
}

ReductionCertificate pet_reduce(const PolyFamily& fam_in) {
  if (fam_in.empty()) throw EmptyFamily("empty family");
  check_nice(fam_in);
  // Ordered: non-increasing degrees.
  for (size_t i = 1; i < fam_in.size(); ++i)
    if (fam_in[i].degree() > fam_in[i - 1].degree())
      throw NotNice("family must be ordered by non-increasing degree");
  for (const auto& p : fam_in)
    if (p.is_constant()) throw NotNice("family members must be non-constant");

  ReductionCertificate cert;
  cert.k = fam_in.size();

  PolyFamily fam = fam_in;
  // Tracked leading vector of the current family w.r.t. its first member.
  TrackedLV lv;
  {
    LeadingVector l0 = leading_vector(fam, 0);
    lv.values = l0.entries;
    lv.slots.resize(cert.k);
    for (size_t i = 0; i < cert.k; ++i) {
      lv.slots[i].assign(cert.k, MPoly{});
      lv.slots[i][i] = MPoly(1);
    }
  }

  size_t next_var = 0;
  int steps = 0;
  while (true) {
    int d = 0;
    for (const auto& q : fam) d = std::max(d, q.degree());
    if (d <= 1) break;
    if (++steps > 64) throw NonTermination("PET reduction exceeded 64 vdC steps");
    if (fam.size() > 600)
      throw NonTermination("PET family grew past 600 members (type chain too long)");

    TypeVector before = family_type(fam);
    PivotChoice pc = choose_pivot(fam);
    std::set<long> bad = bad_shifts(fam, pc.index);
    size_t var = next_var++;
    PolyFamily next = vdc_symbolic(fam, pc.index, var);

    // New leading vector, matched against the lemma forms to refresh slots.
    LeadingVector nlv = leading_vector(next, 0);
    TrackedLV nl;
    nl.values = nlv.entries;
    nl.slots.resize(nlv.entries.size());
    for (size_t e = 0; e < nlv.entries.size(); ++e) {
      FormMatch m = match_form_full(nlv.entries[e], lv, d, var, &nl.slots[e]);
      (void)m;
    }

    TypeVector after = family_type(next);
    if (!(after < before))
      throw NonTermination("type did not strictly decrease: " + before.str() + " -> " +
                           after.str());
    cert.trace.push_back({pc.index, pc.kind, before, after, bad});
    fam = std::move(next);
    lv = std::move(nl);
  }

  // Linear base case: s = number of linear members, one fresh variable each.
  const size_t kb = fam.size();
  if (kb > 16)
    throw NonTermination("linear base case with " + std::to_string(kb) +
                         " members: certificate cube 2^s too large");
  cert.s = static_cast<int>(kb);
  // Base leading vector (a_1, a_1 - a_2, ..., a_1 - a_k) was tracked in lv
  // for reduced families; for step-free linear families it is the identity.
  if (cert.trace.empty()) {
    LeadingVector l0 = leading_vector(fam, 0);
    lv.values = l0.entries;
    lv.slots.resize(l0.entries.size());
    for (size_t i = 0; i < l0.entries.size(); ++i) {
      lv.slots[i].assign(cert.k, MPoly{});
      lv.slots[i][i] = MPoly(1);
    }
  }
  if (lv.values.size() != kb)
    throw VerificationFailure("leading vector size mismatch at the base case");

  std::vector<size_t> base_vars(kb);
  for (size_t j = 0; j < kb; ++j) base_vars[j] = next_var++;
  cert.t = static_cast<int>(next_var);

  // A_eps(m) = sum_{j<kb} eps_j * m_{base_vars[j]} * U_j, expanded over the
  // original u-slots.
  const size_t ncubes = size_t{1} << kb;
  cert.p.assign(ncubes, std::vector<MPoly>(cert.k));
  for (EpsMask eps = 0; eps < ncubes; ++eps) {
    for (size_t j = 0; j < kb; ++j) {
      if (!(eps & (EpsMask{1} << j))) continue;
      MPoly mj = MPoly::variable(base_vars[j]);
      for (size_t slot = 0; slot < cert.k; ++slot)
        cert.p[eps][slot] += lv.slots[j][slot] * mj;
    }
  }

  // Error-offset alphabet: the linear induction accumulates {0,+-1} for the
  // first polynomial and {0,+-1,+-2} per additional one.
  long radius = kb == 0 ? 0 : 2 * static_cast<long>(kb) - 1;
  for (long y = -radius; y <= radius; ++y) cert.Y.insert(y);

  return cert;
}

namespace {

[[noreturn]] void vfail(const std::string& what) { throw VerificationFailure(what); }

bool nonconstant_in_m(const std::vector<MPoly>& peps) {
  for (const auto& q : peps)
    if (!q.is_constant()) return true;
  return false;
}

// Exact rank of the coefficient-vector matrix of the given polynomials.
bool linearly_independent(const std::vector<const MPoly*>& polys) {
  // Collect monomial support.
  std::vector<Monomial> support;
  for (const auto* p : polys)
    for (auto& [m, c] : p->terms()) {
      if (std::find(support.begin(), support.end(), m) == support.end())
        support.push_back(m);
    }
  std::vector<std::vector<mpq_class>> rows;
  for (const auto* p : polys) {
    std::vector<mpq_class> row(support.size(), 0);
    for (auto& [m, c] : p->terms()) {
      size_t idx = std::find(support.begin(), support.end(), m) - support.begin();
      row[idx] = c;
    }
    rows.push_back(std::move(row));
  }
  // Gaussian elimination over Q.
  size_t rank = 0;
  for (size_t col = 0; col < support.size() && rank < rows.size(); ++col) {
    size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      mpq_class f = rows[r][col] / rows[rank][col];
      for (size_t c = col; c < support.size(); ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank == polys.size();
}

VerifyReport verify_impl(const ReductionCertificate& cert, bool throwing) {
  VerifyReport rep;
  const size_t ncubes = size_t{1} << cert.s;
  if (cert.p.size() != ncubes) {
    if (throwing) vfail("certificate p-table size mismatch");
    return rep;
  }

  // multilinearity
  rep.multilinear = true;
  for (auto& row : cert.p)
    for (auto& q : row)
      if (!q.multilinear()) rep.multilinear = false;
  if (!rep.multilinear && throwing) vfail("a polynomial is not multilinear");

  // (i) nonconstant for eps != 0
  rep.nonconstant = true;
  for (EpsMask eps = 1; eps < ncubes; ++eps)
    if (!nonconstant_in_m(cert.p[eps])) rep.nonconstant = false;
  if (!rep.nonconstant && throwing) vfail("(i) some A_eps with eps != 0 is constant");

  // (ii) pairwise essentially distinct
  rep.pairwise_distinct = true;
  for (EpsMask a = 0; a < ncubes && rep.pairwise_distinct; ++a) {
    for (EpsMask b = a + 1; b < ncubes; ++b) {
      bool distinct = false;
      for (size_t j = 0; j < cert.k; ++j) {
        MPoly diff = cert.p[a][j] - cert.p[b][j];
        if (!diff.is_constant()) {
          distinct = true;
          break;
        }
      }
      if (!distinct) {
        rep.pairwise_distinct = false;
        break;
      }
    }
  }
  if (!rep.pairwise_distinct && throwing)
    vfail("(ii) two A_eps differ by a constant: not essentially distinct");

  // (iii) additivity when eps + eps' stays in the cube (disjoint supports)
  rep.additive = true;
  for (EpsMask a = 0; a < ncubes && rep.additive; ++a) {
    for (EpsMask b = 0; b < ncubes; ++b) {
      if (a & b) continue;
      EpsMask c = a | b;
      bool ok = true;
      for (size_t j = 0; j < cert.k; ++j)
        if (cert.p[a][j] + cert.p[b][j] != cert.p[c][j]) ok = false;
      if (!ok) {
        rep.additive = false;
        break;
      }
    }
  }
  if (!rep.additive && throwing) vfail("(iii) additivity A_eps + A_eps' = A_{eps+eps'} fails");

  // (iv) per eps: the nonzero p_{eps,j} are linearly independent over Q
  rep.linearly_independent = true;
  for (EpsMask eps = 0; eps < ncubes; ++eps) {
    std::vector<const MPoly*> nonzero;
    for (size_t j = 0; j < cert.k; ++j)
      if (!cert.p[eps][j].is_zero()) nonzero.push_back(&cert.p[eps][j]);
    if (!nonzero.empty() && !linearly_independent(nonzero))
      rep.linearly_independent = false;
  }
  if (!rep.linearly_independent && throwing)
    vfail("(iv) nonzero p_{eps,j} are linearly dependent for some eps");

  return rep;
}

}  // namespace

VerifyReport verify_certificate(const ReductionCertificate& cert) {
  return verify_impl(cert, true);
}

VerifyReport verify_certificate_report(const ReductionCertificate& cert) {
  return verify_impl(cert, false);
}

std::string certificate_to_json(const ReductionCertificate& cert) {
  nlohmann::json j;
  j["s"] = cert.s;
  j["t"] = cert.t;
  j["k"] = cert.k;
  j["Y"] = std::vector<long>(cert.Y.begin(), cert.Y.end());
  nlohmann::json parr = nlohmann::json::array();
  const size_t ncubes = size_t{1} << cert.s;
  for (EpsMask eps = 0; eps < ncubes; ++eps) {
    for (size_t jj = 0; jj < cert.k; ++jj) {
      if (cert.p[eps][jj].is_zero()) continue;
      nlohmann::json entry;
      std::vector<int> bits(cert.s);
      for (int b = 0; b < cert.s; ++b) bits[b] = (eps >> b) & 1;
      entry["epsilon"] = bits;
      entry["j"] = jj + 1;
      nlohmann::json monos = nlohmann::json::array();
      for (auto& [m, c] : cert.p[eps][jj].terms()) {
        nlohmann::json mono;
        std::vector<int> vars;
        for (size_t v = 0; v < m.size(); ++v)
          for (int rep = 0; rep < m[v]; ++rep) vars.push_back(static_cast<int>(v) + 1);
        mono["vars"] = vars;
        mono["coeff"] = c.get_str();
        monos.push_back(mono);
      }
      entry["monomials"] = monos;
      parr.push_back(entry);
    }
  }
  j["p"] = parr;
  nlohmann::json tarr = nlohmann::json::array();
  for (const auto& st : cert.trace) {
    nlohmann::json sj;
    sj["pivot"] = st.pivot + 1;
    sj["case"] = st.kind == PivotCase::DistinctDegrees  ? "a"
                 : st.kind == PivotCase::DistinctLeaders ? "b"
                                                          : "c";
    auto tv = [](const TypeVector& t) {
      std::vector<long> v;
      v.push_back(t.d);
      for (long w : t.w) v.push_back(w);
      return v;
    };
    sj["type_before"] = tv(st.type_before);
    sj["type_after"] = tv(st.type_after);
    sj["bad_shifts"] = std::vector<long>(st.bad_shifts.begin(), st.bad_shifts.end());
    tarr.push_back(sj);
  }
  j["trace"] = tarr;
  return j.dump(2);
}

ReductionCertificate certificate_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  ReductionCertificate cert;
  cert.s = j.at("s").get<int>();
  cert.t = j.at("t").get<int>();
  cert.k = j.at("k").get<size_t>();
  for (auto& y : j.at("Y")) cert.Y.insert(y.get<long>());
  const size_t ncubes = size_t{1} << cert.s;
  cert.p.assign(ncubes, std::vector<MPoly>(cert.k));
  for (auto& entry : j.at("p")) {
    EpsMask eps = 0;
    auto bits = entry.at("epsilon").get<std::vector<int>>();
    for (size_t b = 0; b < bits.size(); ++b)
      if (bits[b]) eps |= EpsMask{1} << b;
    size_t jj = entry.at("j").get<size_t>() - 1;
    MPoly poly;
    for (auto& mono : entry.at("monomials")) {
      Monomial m;
      for (auto& v : mono.at("vars")) {
        size_t var = v.get<size_t>() - 1;
        if (m.size() <= var) m.resize(var + 1, 0);
        m[var] += 1;
      }
      poly.set(m, mpq_class(mono.at("coeff").get<std::string>()));
    }
    cert.p[eps][jj] = poly;
  }
  if (j.contains("trace")) {
    for (auto& sj : j.at("trace")) {
      VdCStep st;
      st.pivot = sj.at("pivot").get<size_t>() - 1;
      std::string c = sj.at("case").get<std::string>();
      st.kind = c == "a"   ? PivotCase::DistinctDegrees
                : c == "b" ? PivotCase::DistinctLeaders
                           : PivotCase::EqualLeaders;
      auto tb = sj.at("type_before").get<std::vector<long>>();
      st.type_before.d = static_cast<int>(tb[0]);
      st.type_before.w.assign(tb.begin() + 1, tb.end());
      auto ta = sj.at("type_after").get<std::vector<long>>();
      st.type_after.d = static_cast<int>(ta[0]);
      st.type_after.w.assign(ta.begin() + 1, ta.end());
      for (auto& b : sj.at("bad_shifts")) st.bad_shifts.insert(b.get<long>());
      cert.trace.push_back(st);
    }
  }
  return cert;
}

}  // namespace hardylab::petlab
