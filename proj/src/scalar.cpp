#include "hardylab/scalar.hpp"

#include <sstream>

namespace hardylab {

Scalar::RatioKind Scalar::ratio(const Scalar& a, const Scalar& b, mpq_class* out) {
  // b assumed nonzero.  a = q*b iff all components are proportional.
  std::optional<mpq_class> q;
  bool proportional = true;
  for (int i = 0; i < 4; ++i) {
    if (b.c_[i] == 0) {
      if (a.c_[i] != 0) proportional = false;
      continue;
    }
    mpq_class r = a.c_[i] / b.c_[i];
    if (!q)
      q = r;
    else if (*q != r)
      proportional = false;
  }
  if (proportional && q) {
    if (out) *out = *q;
    return RatioKind::Rational;
  }
  // Not proportional.  If both are single-tag multiples the ratio is a ratio
  // of two distinct generators: all pairs are provably irrational except
  // (pi, e), which is an open problem.
  auto ta = a.single_tag(), tb = b.single_tag();
  if (ta && tb && ta->first != tb->first) {
    auto pi_e = [](Tag x, Tag y) {
      return (x == kPi && y == kE) || (x == kE && y == kPi);
    };
    if (pi_e(ta->first, tb->first)) return RatioKind::Undecided;
    return RatioKind::Irrational;
  }
  // Mixed combinations: rationality would require a linear relation among the
  // generators involving pi or e with other terms; treat sqrt2-only mixes as
  // irrational, anything involving pi or e as undecided.
  bool touches_pi_e = a.c_[kPi] != 0 || a.c_[kE] != 0 || b.c_[kPi] != 0 || b.c_[kE] != 0;
  return touches_pi_e ? RatioKind::Undecided : RatioKind::Irrational;
}

std::string Scalar::str() const {
  static const char* names[4] = {"", "sqrt2", "pi", "e"};
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < 4; ++i) {
    if (c_[i] == 0) continue;
    mpq_class c = c_[i];
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    if (i == 0) {
      os << c.get_str();
    } else {
      if (c == 1)
        os << names[i];
      else if (c == -1 && first)
        os << "-" << names[i];
      else
        os << c.get_str() << "*" << names[i];
    }
    first = false;
  }
  if (first) return "0";
  return os.str();
}

}  // namespace hardylab
