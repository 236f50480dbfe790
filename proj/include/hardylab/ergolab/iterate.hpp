#pragma once

#include <cstdint>
#include <vector>

#include "hardylab/lefun/calculus.hpp"

namespace hardylab::ergolab {

// floor(a(n)) for n = 1..N, with certified floors: near-integer values
// escalate from 128 to 256 fractional bits; values that remain ambiguous
// raise PrecisionExhausted with the offending n.
struct IterateSequence {
  lefun::LEFunction source;
  std::vector<long long> values;
  long precision_log = 0;  // number of near-integer escalations

  long long at(long n) const { return values[static_cast<size_t>(n - 1)]; }
  long size() const { return static_cast<long>(values.size()); }
};

IterateSequence iterate_sequence(const lefun::LEFunction& a, long N);

// floor(a(n)) for a single n at the given precision policy.
long long floor_iterate(const lefun::LEFunction& a, long n, long* escalations = nullptr);

}  // namespace hardylab::ergolab
