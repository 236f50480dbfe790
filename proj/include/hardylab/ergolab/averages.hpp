#pragma once

#include <complex>
#include <vector>

#include "hardylab/ergolab/iterate.hpp"
#include "hardylab/ergolab/observable.hpp"

namespace hardylab::ergolab {

// Orbit average (1/N) sum_n prod_i f_i(T^{a_i(n)} x) at a point, compensated
// summation over a fixed block-reduction tree (deterministic under any
// thread partition).
Complex multiple_average_pointwise(const SystemSpec& sys,
                                   const std::vector<CharacterObservable>& fs,
                                   const std::vector<IterateSequence>& as, long N,
                                   const Point& x, int threads = 1);

// || (1/N) sum_n prod_i T^{a_i(n)} f_i  -  prod_i integral(f_i) ||_{L^2(mu)}
// computed exactly in the character algebra: the average is expanded into
// its frequency coefficients (each phase a finite exact computation) and the
// norm follows by Parseval.
double multiple_average_L2(const SystemSpec& sys,
                           const std::vector<CharacterObservable>& fs,
                           const std::vector<IterateSequence>& as, long N);

// (1/N) sum_n e(t_1 floor(a_1(n)) + ... + t_k floor(a_k(n))), exact rational
// phase arithmetic when the t_i are rational.
Complex weyl_sum(const std::vector<IterateSequence>& as, const std::vector<mpq_class>& ts,
                 long N);

// Both sides of the short-interval double-averaging bound at finite R:
//   lhs = || E_{1<=n<=R} A_{R,n} ||,  rhs = E_{1<=r<=R} || E_{r<=n<=r+L(r)} A_{R,n} ||^d
// with A_{R,n} = prod_i T^{a_i(n)} f_i in exact-character L2 mode.
struct IntervalCheck {
  double lhs = 0.0;
  double rhs = 0.0;
};
IntervalCheck short_interval_double_average(const SystemSpec& sys,
                                            const std::vector<CharacterObservable>& fs,
                                            const std::vector<IterateSequence>& as, long R,
                                            const lefun::LEFunction& L, int d);

// (1/N) sum_n mu(A cap T^{-a_1(n)} A cap ... cap T^{-a_k(n)} A) for an
// axis-aligned box on a torus rotation, each summand an exact interval
// computation.
struct Box {
  std::vector<std::pair<double, double>> sides;  // [lo, lo+len) per axis
};
double recurrence_average(const SystemSpec& sys, const Box& box,
                          const std::vector<IterateSequence>& as, long N);

// Explicit finite van der Corput inequality, pre-squared form:
//   |E_n u_n|^2 <= (N+M-1)/(N^2 M^2) sum_{|d|<M} (M-|d|) |sum_n <u_{n+d}, u_n>|
struct VdcSides {
  double lhs = 0.0;
  double rhs = 0.0;
};
VdcSides vdc_inequality_sides(const std::vector<Complex>& u, long M);

}  // namespace hardylab::ergolab
