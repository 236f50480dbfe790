#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hardylab/errors.hpp"
#include "hardylab/lefun/calculus.hpp"
#include "hardylab/xcli/parse.hpp"

using namespace hardylab;
using namespace hardylab::lefun;
using hardylab::xcli::parse_expr;
using hardylab::xcli::parse_lefun;

namespace {
double ev(const LEFunction& f, double t) { return eval(f, t).to_double(); }
}  // namespace

TEST_CASE("parsing basics") {
  auto f = parse_lefun("t^(3/2)");
  CHECK(f.domain_floor == doctest::Approx(0.0));
  CHECK(ev(f, 4.0) == doctest::Approx(8.0));

  auto g = parse_lefun("t*log(t) + log(t)^3");
  CHECK(ev(g, 100.0) == doctest::Approx(100.0 * std::log(100.0) + std::pow(std::log(100.0), 3)));

  auto h = parse_lefun("exp(sqrt(log(t)))");
  CHECK(h.domain_floor > 1.0);

  CHECK_THROWS_AS(parse_lefun("t +* 2"), ParseError);
  try {
    parse_lefun("t + (");
  } catch (const ParseError& e) {
    CHECK(e.offset >= 5);
  }
}

TEST_CASE("eval frozen examples") {
  // eval(t*log t, e) = e
  auto f = parse_lefun("t*log(t)");
  double euler = std::exp(1.0);
  CHECK(ev(f, euler) == doctest::Approx(euler).epsilon(1e-12));
  // eval(t^{3/2}, 4) = 8
  CHECK(ev(parse_lefun("t^(3/2)"), 4.0) == doctest::Approx(8.0).epsilon(1e-15));
  // eval(exp(sqrt(log t)), e) = e
  CHECK(ev(parse_lefun("exp(sqrt(log(t)))"), euler) == doctest::Approx(euler).epsilon(1e-12));
}

TEST_CASE("eval precision is at least 64 fractional bits") {
  auto f = parse_lefun("t*log(t)");
  BigFloat v = eval(f, BigFloat(1e6, 192));
  CHECK(v.prec() >= 128);
  // cross-check against a 512-bit evaluation
  BigFloat w = eval(f, BigFloat(1e6, 512));
  double diff = (v - w).to_double();
  CHECK(std::abs(diff) < 1e-25);
}

TEST_CASE("eval domain errors") {
  auto f = parse_lefun("log(t)");
  CHECK_THROWS_AS(eval(f, BigFloat(-3.0, 128)), DomainError);
  auto g = parse_lefun("t^(1/2)");
  CHECK_THROWS_AS(eval_expr(g.expr, BigFloat(-1.0, 128)), DomainError);
}

TEST_CASE("simplification is idempotent on a corpus") {
  const char* corpus[] = {
      "t^(3/2)",
      "t*log(t)",
      "exp(sqrt(log(t)))",
      "t^2 + t^(1/2)",
      "(t+1)*(t-1)",
      "t*log(t) + log(t)^3",
      "exp(sqrt2*log(t))/log(t)^2",
      "2*t^2 + t - t - t^2",
      "sqrt(t^3)",
      "log(t^2)",
      "log(exp(t))",
      "exp(log(t))",
      "t/t",
      "(t^(1/2))^3",
      "1/2*t + t/2",
      "pi*t + e*t^2",
      "log(2*t)",
      "t^2*t^(-1)",
  };
  for (const char* s : corpus) {
    CAPTURE(s);
    Expr e = normalize(parse_expr(s));
    Expr e2 = normalize(e);
    CHECK(equal(e, e2));
  }
}

TEST_CASE("normalization identities") {
  CHECK(equal(normalize(parse_expr("sqrt(t^3)")), normalize(parse_expr("t^(3/2)"))));
  CHECK(equal(normalize(parse_expr("log(t^2)")), normalize(parse_expr("2*log(t)"))));
  CHECK(equal(normalize(parse_expr("log(exp(t))")), normalize(parse_expr("t"))));
  CHECK(equal(normalize(parse_expr("exp(log(t))")), normalize(parse_expr("t"))));
  CHECK(equal(normalize(parse_expr("t/t")), constant(1L)));
  CHECK(equal(normalize(parse_expr("2*t^2 + t - t - t^2")), normalize(parse_expr("t^2"))));
  CHECK(is_zero(normalize(parse_expr("t - t"))));
  // exp splits over sums
  CHECK(equal(normalize(parse_expr("exp(log(t) + log(t))")), normalize(parse_expr("t^2"))));
  CHECK(equal(normalize(parse_expr("(t+1)^2")), normalize(parse_expr("t^2 + 2*t + 1"))));
}

TEST_CASE("parse/print round trip equals simplify") {
  const char* corpus[] = {
      "t^(3/2)", "t*log(t) + log(t)^3", "exp(sqrt(log(t)))",
      "t^2 + t^(1/2)", "exp(sqrt2*log(t))/log(t)^2", "3/2*t + pi",
      "t^(-2)", "2.5*t", "log(log(t))",
  };
  for (const char* s : corpus) {
    CAPTURE(s);
    Expr e = normalize(parse_expr(s));
    Expr round = normalize(parse_expr(to_string(e)));
    CHECK(equal(e, round));
  }
}

TEST_CASE("derivatives: frozen examples") {
  // d/dt t^{3/2} = (3/2) t^{1/2}
  Expr d1 = derivative_expr(parse_expr("t^(3/2)"), 1);
  CHECK(equal(d1, normalize(parse_expr("3/2*t^(1/2)"))));
  // d^2/dt^2 (t log t) = 1/t
  Expr d2 = derivative_expr(parse_expr("t*log(t)"), 2);
  CHECK(equal(d2, normalize(parse_expr("t^(-1)"))));
  // d/dt log^3 t = 3 log^2 t / t
  Expr d3 = derivative_expr(parse_expr("log(t)^3"), 1);
  CHECK(equal(d3, normalize(parse_expr("3*log(t)^2/t"))));
  // derivative(f, 0) == f
  Expr f = normalize(parse_expr("t*log(t)"));
  CHECK(equal(derivative_expr(f, 0), f));
}

TEST_CASE("derivative/eval consistency via central differences") {
  const char* corpus[] = {"t^(3/2)", "t*log(t)", "exp(sqrt(log(t)))", "t^2 + t^(1/2)",
                          "log(t)^3"};
  for (const char* s : corpus) {
    CAPTURE(s);
    auto f = parse_lefun(s);
    auto df = derivative(f, 1);
    double t0 = 1e6;
    double h = 1e-2;
    BigFloat num =
        (eval(f, BigFloat(t0 + h, 256)) - eval(f, BigFloat(t0 - h, 256))) /
        BigFloat(2 * h, 256);
    double sym = eval(df, BigFloat(t0, 256)).to_double();
    CHECK(num.to_double() == doctest::Approx(sym).epsilon(1e-6));
  }
}
