#include "doctest.h"
#include "gen.hpp"

#include "polyalg/compose.hpp"
#include "polyalg/cubic.hpp"
#include "polyalg/errors.hpp"
#include "polyalg/quadratic.hpp"

#include <cmath>

using namespace polyalg;

namespace {
Rational r(long long p, long long q = 1) { return Rational(p, q); }
}  // namespace

TEST_CASE("boson x boson is the su(1,1) Schwinger rep") {
  auto b = to_ladder(boson_component(), 20);
  // Pi = (n_a - n_b)/2 = 1/2 fixes k = 1.
  auto comp = compose(b, b, r(1, 2), Coupling::Same, 0, 0);
  for (std::size_t n = 0; n < 8; ++n) {
    CHECK(comp.product_rep.raise_amps[n] == doctest::Approx(std::sqrt((n + 1.0) * (n + 2.0))));
  }
  auto fit = fit_order(comp);
  CHECK(fit.degree == 1);
  CHECK(fit.coeffs[1] == doctest::Approx(-2.0));
  CHECK(fit.residual < 1e-10);
}

TEST_CASE("boson x su(2) is quadratic") {
  auto comp = compose(to_ladder(boson_component(), 20), to_ladder(su2_component(r(9, 2))), r(9, 4),
                      Coupling::Same, 0, 1);
  CHECK(fit_order(comp).degree == 2);
}

TEST_CASE("su(1,1) x su(1,1) is cubic") {
  auto a = to_ladder(su11_component(r(1, 2)), 20);
  auto b = to_ladder(su11_component(r(3, 2)), 20);
  auto comp = compose(a, b, r(-1, 2), Coupling::Same, 1, 1);
  auto fit = fit_order(comp);
  CHECK(fit.degree == 3);
  CHECK(fit.residual < 1e-9);
}

TEST_CASE("the product reps agree with the class reps") {
  QuadLabel lab{r(3, 2), r(1, 4)};
  auto fz = factorization(QuadraticClass::QPlus11, lab);
  auto comp = compose(to_ladder(fz.lie, 16), to_ladder(fz.boson, 16), fz.value, fz.coupling);
  auto rep = build(QuadraticClass::QPlus11, lab, 10);
  CHECK(comp.product_rep.n0_start == rep.n0_start);
  for (std::size_t n = 0; n + 1 < 10; ++n) {
    CHECK(comp.product_rep.raise_amps[n] == doctest::Approx(rep.raise_amps[n]).epsilon(1e-12));
  }

  Labels clab{{"k1", r(1, 2)}, {"k2", r(3, 2)}, {"k", r(1)}};
  auto cf = factorization(CubicClass::CPlus11_11, clab);
  auto ccomp = compose(to_ladder(cf.a, 16), to_ladder(cf.b, 16), cf.value, cf.coupling);
  auto crep = build_cubic(CubicClass::CPlus11_11, clab, 10);
  CHECK(ccomp.product_rep.n0_start == crep.n0_start);
  for (std::size_t n = 0; n + 1 < 10; ++n) {
    CHECK(ccomp.product_rep.raise_amps[n] == doctest::Approx(crep.raise_amps[n]).epsilon(1e-10));
  }
}

TEST_CASE("quartic stretch: quadratic x su(1,1)") {
  auto q = build(QuadraticClass::QMinus11, {r(1, 2), r(23, 4)});
  auto s = to_ladder(su11_component(r(1)), 14);
  auto comp = compose(q, s, (q.n0_start - s.n0_start) / 2, Coupling::Same, 2, 1);
  auto fit = fit_order(comp);
  CHECK(fit.degree == 4);
  CHECK(fit.residual < 1e-9);
}

TEST_CASE("composition errors") {
  auto a = to_ladder(su2_component(r(1, 2)));
  auto b = to_ladder(su2_component(r(1, 2)));
  CHECK_THROWS_AS(compose(a, b, r(7), Coupling::Same), LabelError);
  auto comp = compose(a, b, r(0), Coupling::Same, 1, 1);
  CHECK_THROWS_AS(fit_order(comp), ShapeError);
}

TEST_CASE("property: exact composite brackets match the fitted ones") {
  testgen::Gen gen(61);
  for (int trial = 0; trial < 25; ++trial) {
    auto pickc = [&](int& order) {
      switch (gen.integer(0, 2)) {
        case 0: order = 0; return boson_component();
        case 1: order = 1; return su2_component(Rational(gen.integer(14, 20), 2));
        default: order = 1; return su11_component(gen.half(6));
      }
    };
    int oa = 0, ob = 0;
    auto ca = pickc(oa);
    auto cb = pickc(ob);
    Coupling cp = Coupling::Same;
    Rational value = (ca.x0 - cb.x0) / 2;
    auto exact = composite_bracket(ca, cb, cp, value);
    CHECK(exact.degree() <= oa + ob + 1);
    auto comp = compose(to_ladder(ca, 14), to_ladder(cb, 14), value, cp, oa, ob);
    auto fit = fit_order(comp, 1e-9);
    CHECK(fit.residual < 1e-9);
    auto ex = exact.to_doubles();
    for (std::size_t i = 0; i < ex.size(); ++i) {
      double got = i < fit.coeffs.size() ? fit.coeffs[i] : 0.0;
      CHECK(got == doctest::Approx(ex[i]).epsilon(1e-6).scale(1.0));
    }
  }
}
