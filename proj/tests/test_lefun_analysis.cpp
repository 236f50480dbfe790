#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hardylab/errors.hpp"
#include "hardylab/lefun/analysis.hpp"
#include "hardylab/xcli/parse.hpp"

using namespace hardylab;
using namespace hardylab::lefun;
using hardylab::xcli::parse_lefun;

TEST_CASE("decompose: worked example {t+t^{3/2}, t^2+t^{5/2}}") {
  auto d = decompose({parse_lefun("t + t^(3/2)"), parse_lefun("t^2 + t^(5/2)")});
  REQUIRE(d.g.size() == 2);
  CHECK(equal(d.g[0].expr, normalize(xcli::parse_expr("t^(3/2)"))));
  CHECK(equal(d.g[1].expr, normalize(xcli::parse_expr("t^(5/2)"))));
  REQUIRE(d.p.size() == 2);
  CHECK(equal(d.p[0], normalize(xcli::parse_expr("t"))));
  CHECK(equal(d.p[1], normalize(xcli::parse_expr("t^2"))));
  // identity coefficient pattern
  CHECK(d.c[0][0].value == doctest::Approx(1.0));
  CHECK(d.c[0][1].value == doctest::Approx(0.0));
  CHECK(d.c[1][0].value == doctest::Approx(0.0));
  CHECK(d.c[1][1].value == doctest::Approx(1.0));
  CHECK(d.residual_bound < 1e-20);
}

TEST_CASE("decompose: pure polynomial") {
  auto d = decompose({parse_lefun("t^2")});
  CHECK(d.g.empty());
  CHECK(equal(d.p[0], normalize(xcli::parse_expr("t^2"))));
}

TEST_CASE("decompose: shared basis with coefficients") {
  auto d = decompose({parse_lefun("t^(3/2) + 2*t^(5/2)"), parse_lefun("3*t^(5/2)")});
  REQUIRE(d.g.size() == 2);
  CHECK(d.c[0][0].value == doctest::Approx(1.0));
  CHECK(d.c[0][1].value == doctest::Approx(2.0));
  CHECK(d.c[1][0].value == doctest::Approx(0.0));
  CHECK(d.c[1][1].value == doctest::Approx(3.0));
  CHECK(is_zero(d.p[0]));
  CHECK(is_zero(d.p[1]));
  // exact coefficients available for term-structured input
  CHECK(d.c[0][1].is_exact);
  CHECK(d.c[0][1].exact.as_rational() == 2);
}

TEST_CASE("decompose: residual ladder non-increasing for vanishing residual") {
  auto d = decompose({parse_lefun("t^(3/2) + t^(-1)")});
  REQUIRE(d.residual_ladder.size() >= 3);
  for (size_t i = 1; i < d.residual_ladder.size(); ++i)
    CHECK(d.residual_ladder[i].second <= d.residual_ladder[i - 1].second + 1e-18);
  CHECK(d.residual_ladder.back().second < 1e-3);
}

TEST_CASE("decompose: sub-fractional divergent terms are kept as basis") {
  auto d = decompose({parse_lefun("t^2 + log(log(t))")});
  REQUIRE(d.g.size() == 1);
  CHECK(equal(d.g[0].expr, normalize(xcli::parse_expr("log(log(t))"))));
  CHECK(equal(d.p[0], normalize(xcli::parse_expr("t^2"))));
}

TEST_CASE("is_one_good: acceptance table") {
  CHECK(is_one_good(parse_lefun("t^(3/2)")).good);
  CHECK(is_one_good(parse_lefun("t*log(t)")).good);
  CHECK(is_one_good(parse_lefun("exp(sqrt(log(t)))")).good);
  CHECK(is_one_good(parse_lefun("exp(sqrt2*log(t))/log(t)^2")).good);
  auto r1 = is_one_good(parse_lefun("sqrt2*t^2"));
  CHECK(!r1.good);
  CHECK(r1.witness.find("t^2") != std::string::npos);
  auto r2 = is_one_good(parse_lefun("t^2 + log(log(t))"));
  CHECK(!r2.good);
  CHECK(r2.witness.find("t^2") != std::string::npos);
}

TEST_CASE("is_one_good: irrational coefficient ratios are good") {
  // t^2 + pi t: ratio pi/1 is irrational, so the polynomial is not a real
  // multiple of an integer polynomial.
  CHECK(is_one_good(parse_lefun("t^2 + pi*t")).good);
  CHECK(is_one_good(parse_lefun("sqrt2*t^2 + t")).good);
  // rational ratios stay bad
  CHECK(!is_one_good(parse_lefun("t^2/2 + t/3")).good);
  CHECK(!is_one_good(parse_lefun("pi*t^2 + 2*pi*t")).good);
}

TEST_CASE("is_one_good: constants and low-growth functions") {
  CHECK(!is_one_good(parse_lefun("5")).good);
  CHECK(!is_one_good(parse_lefun("log(log(t))")).good);
  // log^3 t dominates log t
  CHECK(is_one_good(parse_lefun("log(t)^3")).good);
  // a strongly non-polynomial term above any polynomial slot keeps the
  // function 1-good regardless of the slower parts
  CHECK(is_one_good(parse_lefun("t^(5/2) + log(log(t)) + t^2")).good);
}

TEST_CASE("is_one_good: pi/e ratio is undecided") {
  CHECK_THROWS_AS(is_one_good(parse_lefun("pi*t^2 + e*t")), IrrationalityUndecided);
}
