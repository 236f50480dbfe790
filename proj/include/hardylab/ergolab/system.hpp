#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hardylab/bigfloat.hpp"
#include "hardylab/lefun/expr.hpp"

namespace hardylab::ergolab {

// Rotation x -> x + alpha on T^dim.  The angles are constant expressions
// (e.g. sqrt2 - 1) evaluated at the working precision on demand.
struct TorusRotation {
  int dim = 1;
  std::vector<lefun::Expr> alpha;
};

// (x, y) -> (x + alpha, y + 2x + alpha) on T^2.
struct SkewProduct {
  lefun::Expr alpha;
};

// x -> A x mod 1 with an integer matrix, |det A| = 1.
struct ToralAutomorphism {
  std::array<std::array<long, 2>, 2> a{{{2, 1}, {1, 1}}};
};

struct SystemSpec {
  std::variant<TorusRotation, SkewProduct, ToralAutomorphism> kind;

  int dim() const;
  // Rotation: every angle passes the irrationality check (rational
  // reconstruction with denominator bound 1e6).
  bool ergodic_flag() const;
  // Automorphism: no eigenvalue on the unit circle (exact integer test).
  bool hyperbolic_flag() const;
};

SystemSpec make_rotation(std::vector<lefun::Expr> alpha);
SystemSpec make_skew(lefun::Expr alpha);
SystemSpec make_automorphism(long a, long b, long c, long d);

// A point of the torus with high-precision coordinates in [0, 1).
struct Point {
  std::vector<BigFloat> x;
};

Point zero_point(const SystemSpec& sys, mpfr_prec_t prec = 256);

// T^m x, exact closed forms: rotation x + m alpha, skew product
// (x + m alpha, y + 2 m x + m^2 alpha), automorphism by exact integer
// matrix power (O(log m)).
Point power_map(const SystemSpec& sys, long m, const Point& x);

// Exact rational orbit for automorphisms: points p/q with arithmetic mod q.
struct RationalPoint {
  std::array<long, 2> num;
  long den;
};
RationalPoint automorphism_power(const ToralAutomorphism& A, long m, const RationalPoint& p);

// mod-1 reduction into [0, 1)
BigFloat mod1(const BigFloat& v);

}  // namespace hardylab::ergolab
