#include "hardylab/ergolab/iterate.hpp"

#include <cmath>

#include "hardylab/errors.hpp"

namespace hardylab::ergolab {

namespace {

// Certified floor of a(n): the 128-bit value is accepted unless it lies
// within 2^-40 of an integer; then a 256-bit evaluation must either agree
// bit-for-bit (exact values such as integer powers) or move the value away
// from the boundary.
long long certified_floor(const lefun::LEFunction& a, long n, long* escalations) {
  BigFloat v = lefun::eval_expr(a.expr, BigFloat(static_cast<double>(n), 128));
  BigFloat nearest = round_nearest(v);
  BigFloat dist = abs(v - nearest);
  const BigFloat thresh(std::ldexp(1.0, -40), 64);
  if (dist < thresh) {
    if (escalations) ++*escalations;
    BigFloat w = lefun::eval_expr(a.expr, BigFloat(static_cast<double>(n), 256));
    if (w == v) {
      // bit-identical across precisions: the value is exact
      return static_cast<long long>(floor(w).to_long());
    }
    BigFloat nearest2 = round_nearest(w);
    BigFloat dist2 = abs(w - nearest2);
    const BigFloat thresh2(std::ldexp(1.0, -100), 64);
    if (dist2 < thresh2)
      throw PrecisionExhausted("floor of a(" + std::to_string(n) +
                                   ") not certified at 256 bits",
                               n);
    return static_cast<long long>(floor(w).to_long());
  }
  return static_cast<long long>(floor(v).to_long());
}

}  // namespace

long long floor_iterate(const lefun::LEFunction& a, long n, long* escalations) {
  return certified_floor(a, n, escalations);
}

IterateSequence iterate_sequence(const lefun::LEFunction& a, long N) {
  if (N > 100000000L) throw ComplexityRefusal("iterate sequence beyond 1e8 entries");
  IterateSequence out;
  out.source = a;
  out.values.reserve(static_cast<size_t>(N));
  for (long n = 1; n <= N; ++n)
    out.values.push_back(certified_floor(a, n, &out.precision_log));
  return out;
}

}  // namespace hardylab::ergolab
