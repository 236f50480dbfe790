#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hardylab/errors.hpp"
#include "hardylab/lefun/window.hpp"
#include "hardylab/xcli/parse.hpp"

using namespace hardylab;
using namespace hardylab::lefun;
using hardylab::xcli::parse_lefun;

TEST_CASE("class_index: hand oracle for sqrt(t) in the chain of t^{3/2}") {
  // |f^(k)|^{-1/k} for f = t^{3/2} has exponent (k - 3/2)/k:
  //   k=1: -1/2, k=2: 1/4, k=3: 1/2, k=4: 5/8.
  // sqrt(t) sits at 1/2:  |f'''|^{-1/3} ~ t^{1/2} <= sqrt t < |f''''|^{-1/4} ~ t^{5/8}.
  auto k = class_index(parse_lefun("t^(1/2)"), parse_lefun("t^(3/2)"));
  REQUIRE(k.has_value());
  CHECK(*k == 3);
}

TEST_CASE("class_index: t/log t lies outside every class of t^{3/2}") {
  auto k = class_index(parse_lefun("t/log(t)"), parse_lefun("t^(3/2)"), 32);
  CHECK(!k.has_value());
}

TEST_CASE("class_index: powers near 1 land in some class") {
  auto k = class_index(parse_lefun("t^(9/10)"), parse_lefun("t^(3/2)"));
  REQUIRE(k.has_value());
  // (k - 3/2)/k <= 9/10 < (k - 1/2)/(k+1)  =>  k = 15
  CHECK(*k == 15);
}

TEST_CASE("class_index: sub-fractional base uses the same chain (S_sml)") {
  // f = log^3 t, g = t/log t is the canonical S_sml member example
  auto k = class_index(parse_lefun("t/log(t)"), parse_lefun("log(t)^3"), 16);
  CHECK(k.has_value());
}

TEST_CASE("window_class invariants (Prop growth shape)") {
  const char* corpus[] = {"t^(3/2)", "t*log(t)", "t^(5/2)", "t^2*log(t)"};
  for (const char* s : corpus) {
    CAPTURE(s);
    auto f = parse_lefun(s);
    int k0 = growth_degree(f).degree + 1;
    for (int k = k0; k < k0 + 3; ++k) {
      auto w = window_class(f, k);
      // 1 < lower < upper < t
      CHECK(compare_growth_expr(w.lower.expr, constant(1L)).verdict == Verdict::Dominates);
      CHECK(compare_growth_expr(w.lower.expr, w.upper.expr).verdict == Verdict::Dominated);
      CHECK(compare_growth_expr(w.upper.expr, var_t()).verdict == Verdict::Dominated);
    }
  }
}

TEST_CASE("Lemma basic: endpoints differ by at least t^{delta/k(k+1)}") {
  auto f = parse_lefun("t^(3/2)");  // delta = 1 works (f >> t)
  for (int k = 2; k <= 5; ++k) {
    auto w = window_class(f, k);
    Expr ratio = nmul(w.upper.expr, npow(w.lower.expr, -1));
    Expr gap = npow(var_t(), mpq_class(1, 2 * k * (k + 1)));
    CHECK(compare_growth_expr(ratio, gap).verdict == Verdict::Dominates);
  }
}

TEST_CASE("find_window: single function t^{3/2}") {
  auto sel = find_window({parse_lefun("t^(3/2)")}, {.min_order = 2});
  REQUIRE(sel.orders.size() == 1);
  int k = sel.orders[0];
  CHECK(k >= 2);
  // hand oracle on the exponent chain: (k-3/2)/k <= c < (k+1-3/2)/(k+1)
  double c = sel.exponent.get_d();
  CHECK(c >= (k - 1.5) / k - 1e-12);
  CHECK(c < (k + 1 - 1.5) / (k + 1));
}

TEST_CASE("find_window: t log t with target order 2 gives sqrt t < L < t^{2/3}") {
  FindWindowOptions opts;
  opts.min_order = 2;
  opts.target_order = 2;
  auto sel = find_window({parse_lefun("t*log(t)")}, opts);
  CHECK(sel.orders[0] == 2);
  double c = sel.exponent.get_d();
  CHECK(c > 0.5);
  CHECK(c < 2.0 / 3.0);
  // The window function itself obeys sqrt t < L < t^{2/3}.
  CHECK(compare_growth_expr(sel.L.expr, npow(var_t(), mpq_class(1, 2))).verdict ==
        Verdict::Dominates);
  CHECK(compare_growth_expr(sel.L.expr, npow(var_t(), mpq_class(2, 3))).verdict ==
        Verdict::Dominated);
}

TEST_CASE("find_window: common window for {t^{3/2}, t^{5/2}}") {
  std::vector<LEFunction> fs = {parse_lefun("t^(3/2)"), parse_lefun("t^(5/2)")};
  auto sel = find_window(fs, {.min_order = 2});
  // brute-force verification of both membership chains
  for (size_t i = 0; i < fs.size(); ++i) {
    auto k = class_index(sel.L, fs[i]);
    REQUIRE(k.has_value());
    CHECK(*k == sel.orders[i]);
  }
}

TEST_CASE("find_window: pair with logarithmic separation still admits a window") {
  std::vector<LEFunction> fs = {parse_lefun("t*log(t)"), parse_lefun("t*log(log(t))")};
  auto sel = find_window(fs, {.min_order = 2});
  for (size_t i = 0; i < fs.size(); ++i) {
    auto k = class_index(sel.L, fs[i]);
    REQUIRE(k.has_value());
    CHECK(*k == sel.orders[i]);
  }
}

TEST_CASE("taylor_poly: sqrt(t) to first order") {
  double r = 1e4;
  auto tp = taylor_poly(parse_lefun("t^(1/2)"), r, 1, std::pow(r, 0.6));
  REQUIRE(tp.coeffs.size() == 2);
  CHECK(tp.coeffs[0] == doctest::Approx(std::sqrt(r)));
  CHECK(tp.coeffs[1] == doctest::Approx(1.0 / (2 * std::sqrt(r))));
  // remainder ~ L^2 / (8 r^{3/2})
  CHECK(tp.remainder_bound ==
        doctest::Approx(std::pow(r, 1.2) / (8 * std::pow(r, 1.5))).epsilon(1e-9));
}

TEST_CASE("taylor_poly: t log t to second order") {
  double r = 1e5;
  auto tp = taylor_poly(parse_lefun("t*log(t)"), r, 2, std::pow(r, 0.6));
  REQUIRE(tp.coeffs.size() == 3);
  CHECK(tp.coeffs[0] == doctest::Approx(r * std::log(r)));
  CHECK(tp.coeffs[1] == doctest::Approx(std::log(r) + 1.0));
  CHECK(tp.coeffs[2] == doctest::Approx(1.0 / (2 * r)));
  // remainder ~ L^3/(6 r^2), vanishing as r grows with L = r^{3/5}
  CHECK(tp.remainder_bound == doctest::Approx(std::pow(r, 1.8) / (6 * r * r)).epsilon(1e-9));
}

TEST_CASE("taylor_poly: polynomials are their own expansion") {
  auto tp = taylor_poly(parse_lefun("t^2"), 50.0, 2, 10.0);
  REQUIRE(tp.coeffs.size() == 3);
  CHECK(tp.coeffs[0] == doctest::Approx(2500.0));
  CHECK(tp.coeffs[1] == doctest::Approx(100.0));
  CHECK(tp.coeffs[2] == doctest::Approx(1.0));
  CHECK(tp.remainder_bound == 0.0);
}
