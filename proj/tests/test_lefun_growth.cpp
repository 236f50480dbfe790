#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hardylab/errors.hpp"
#include "hardylab/lefun/growth.hpp"
#include "hardylab/xcli/parse.hpp"

using namespace hardylab;
using namespace hardylab::lefun;
using hardylab::xcli::parse_lefun;

namespace {
GrowthComparison cmp(const char* f, const char* g) {
  return compare_growth(parse_lefun(f), parse_lefun(g));
}
}  // namespace

TEST_CASE("compare_growth frozen examples") {
  // t log t < t^{3/2}
  CHECK(cmp("t*log(t)", "t^(3/2)").verdict == Verdict::Dominated);
  // 2t^2 + t ~ t^2 with limit 2
  auto c = cmp("2*t^2 + t", "t^2");
  CHECK(c.verdict == Verdict::SameRate);
  CHECK(c.limit == doctest::Approx(2.0));
  // e^{sqrt(log t)} < t^{1/10}
  CHECK(cmp("exp(sqrt(log(t)))", "t^(1/10)").verdict == Verdict::Dominated);
}

TEST_CASE("compare_growth canonical ladder") {
  CHECK(cmp("t", "log(t)").verdict == Verdict::Dominates);
  CHECK(cmp("log(t)", "log(log(t))").verdict == Verdict::Dominates);
  CHECK(cmp("log(log(t))", "1").verdict == Verdict::Dominates);
  CHECK(cmp("t^(1/100)", "log(t)^100").verdict == Verdict::Dominates);
  CHECK(cmp("exp(sqrt(log(t)))", "log(t)^100").verdict == Verdict::Dominates);
  CHECK(cmp("t/log(t)", "t^(99/100)").verdict == Verdict::Dominates);
  CHECK(cmp("t/log(t)", "t").verdict == Verdict::Dominated);
  CHECK(cmp("t^(3/2)", "t*log(t)").verdict == Verdict::Dominates);
  // t^{sqrt2} between t^{1.4} and t^{1.5}
  CHECK(cmp("exp(sqrt2*log(t))", "t^(7/5)").verdict == Verdict::Dominates);
  CHECK(cmp("exp(sqrt2*log(t))", "t^(3/2)").verdict == Verdict::Dominated);
  // t^{sqrt2}/log^2 t below t^{sqrt2} but above t^{7/5}
  CHECK(cmp("exp(sqrt2*log(t))/log(t)^2", "t^(7/5)").verdict == Verdict::Dominates);
  // exp(sqrt(log log t)) is below log t
  CHECK(cmp("exp(sqrt(log(log(t))))", "log(t)").verdict == Verdict::Dominated);
  CHECK(cmp("exp(sqrt(log(log(t))))", "log(log(t))^10").verdict == Verdict::Dominates);
}

TEST_CASE("compare_growth antisymmetry on a corpus") {
  const char* corpus[] = {"t^(3/2)",
                          "t*log(t)",
                          "exp(sqrt(log(t)))",
                          "t^2 + t^(1/2)",
                          "log(t)^3",
                          "t^(5/2)",
                          "exp(sqrt2*log(t))/log(t)^2",
                          "t/log(t)",
                          "log(log(t))",
                          "t"};
  for (const char* a : corpus) {
    for (const char* b : corpus) {
      CAPTURE(a);
      CAPTURE(b);
      auto ab = cmp(a, b);
      auto ba = cmp(b, a);
      REQUIRE(ab.verdict != Verdict::Inconclusive);
      if (ab.verdict == Verdict::Dominates) CHECK(ba.verdict == Verdict::Dominated);
      if (ab.verdict == Verdict::Dominated) CHECK(ba.verdict == Verdict::Dominates);
      if (ab.verdict == Verdict::SameRate) {
        CHECK(ba.verdict == Verdict::SameRate);
        CHECK(ab.limit * ba.limit == doctest::Approx(1.0).epsilon(1e-6));
      }
    }
  }
}

TEST_CASE("SameRate limit is nonzero and evidence ladder is recorded") {
  auto c = cmp("3*t^2 + t*log(t)", "t^2");
  CHECK(c.verdict == Verdict::SameRate);
  CHECK(c.limit == doctest::Approx(3.0));
  CHECK(c.limit != 0.0);
  CHECK(c.evidence.size() >= 3);
  // evidence is (t, log|f/g|): converging towards log 3
  CHECK(c.evidence.back().second == doctest::Approx(std::log(3.0)).epsilon(1e-3));
}

TEST_CASE("growth_degree") {
  CHECK(growth_degree(parse_lefun("t^(5/2)")).degree == 2);
  CHECK(growth_degree(parse_lefun("t^2 + t^(1/2)")).degree == 2);
  auto d = growth_degree(parse_lefun("log(t)^3"));
  CHECK(d.degree == 0);
  CHECK(d.sub_fractional);
  auto e = growth_degree(parse_lefun("exp(sqrt(log(t)))"));
  CHECK(e.degree == 0);
  CHECK(e.sub_fractional);
  CHECK(!growth_degree(parse_lefun("t^(3/2)")).sub_fractional);
  CHECK(growth_degree(parse_lefun("t^2/log(t)")).degree == 1);
  CHECK(growth_degree(parse_lefun("t^2*log(t)")).degree == 2);
  CHECK_THROWS_AS(growth_degree(parse_lefun("exp(t)")), NotPolynomialGrowth);
  CHECK_THROWS_AS(growth_degree(parse_lefun("exp(log(t)^2)")), NotPolynomialGrowth);
  CHECK_THROWS_AS(growth_degree(parse_lefun("t^33")), NotPolynomialGrowth);
}

TEST_CASE("is_strongly_nonpolynomial frozen examples") {
  auto a = is_strongly_nonpolynomial(parse_lefun("t^(3/2)"));
  REQUIRE(a.has_value());
  CHECK(*a == 1);
  CHECK(!is_strongly_nonpolynomial(parse_lefun("t^2 + t^(1/2)")).has_value());
  auto b = is_strongly_nonpolynomial(parse_lefun("log(t)^3"));
  REQUIRE(b.has_value());
  CHECK(*b == 0);
  auto c = is_strongly_nonpolynomial(parse_lefun("t*log(t)"));
  REQUIRE(c.has_value());
  CHECK(*c == 1);
  auto d = is_strongly_nonpolynomial(parse_lefun("exp(sqrt2*log(t))/log(t)^2"));
  REQUIRE(d.has_value());
  CHECK(*d == 1);
  CHECK(!is_strongly_nonpolynomial(parse_lefun("t^2")).has_value());
  auto e = is_strongly_nonpolynomial(parse_lefun("log(log(t))"));
  REQUIRE(e.has_value());
  CHECK(*e == 0);
}
