#include "doctest.h"
#include "gen.hpp"

#include "polyalg/errors.hpp"
#include "polyalg/quadratic.hpp"
#include "polyalg/survey.hpp"

#include <cmath>

using namespace polyalg;
using QC = QuadraticClass;

namespace {
Rational r(long long p, long long q = 1) { return Rational(p, q); }
}  // namespace

TEST_CASE("class names round-trip") {
  for (auto c : kQuadraticClasses) CHECK(parse_quadratic_class(to_string(c)) == c);
  CHECK_THROWS_AS(parse_quadratic_class("qzero"), LabelError);
}

TEST_CASE("dimensions") {
  CHECK(dimension(QC::QMinus2, {r(1, 2), r(1, 4)}) == 2);
  CHECK(dimension(QC::QMinus2, {r(3, 2), r(-1, 4)}) == 2);
  CHECK(dimension(QC::QMinus11, {r(1, 2), r(3, 4)}) == 2);
  CHECK(dimension(QC::QPlus2, {r(1, 2), r(-1, 4)}) == 2);
  CHECK_FALSE(dimension(QC::QPlus11, {r(1, 2), r(1, 4)}).has_value());
  CHECK(dimension(QC::QMinus2, {r(2), r(3)}) == 5);  // 2l - j >= 0: 2j + 1
}

TEST_CASE("labels off the lattice are rejected") {
  CHECK_THROWS_AS(validate(QC::QMinus2, {r(1, 2), r(-3, 4)}), LabelError);  // j + 2l + 1 <= 0
  CHECK_THROWS_AS(validate(QC::QMinus11, {r(1, 2), r(1, 2)}), LabelError);
  CHECK_THROWS_AS(validate(QC::QPlus11, {r(1, 2), r(3, 4)}), LabelError);
  CHECK_THROWS_AS(build(QC::QPlus11, {r(1, 2), r(1, 4)}), std::invalid_argument);  // no cutoff
}

TEST_CASE("two-dimensional Q-(2) rep") {
  auto rep = build(QC::QMinus2, {r(1, 2), r(1, 4)});
  REQUIRE(rep.dim == 2);
  CHECK(rep.n0_diag[0] == doctest::Approx(-0.75));
  CHECK(rep.n0_diag[1] == doctest::Approx(0.25));
  CHECK(rep.raise_amps[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(rep.n0_start == r(-3, 4));
}

TEST_CASE("two-dimensional Q-(1,1) rep") {
  auto rep = build(QC::QMinus11, {r(1, 2), r(3, 4)});
  REQUIRE(rep.dim == 2);
  CHECK(rep.raise_amps[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(rep.n0_diag[0] == doctest::Approx(-0.25));
  CHECK(rep.n0_diag[1] == doctest::Approx(0.75));
}

TEST_CASE("truncated Q+(1,1) rep at k=1/2, l=1/4") {
  auto rep = build(QC::QPlus11, {r(1, 2), r(1, 4)}, 5);
  REQUIRE(rep.dim == 5);
  CHECK(rep.truncated);
  const double expected[] = {1.0, std::sqrt(8.0), std::sqrt(27.0), 8.0};
  for (int n = 0; n < 4; ++n) CHECK(rep.raise_amps[n] == doctest::Approx(expected[n]));
}

TEST_CASE("structure polynomials") {
  CHECK(structure_polynomial(QC::QMinus2, {r(1, 2), r(1, 4)}) ==
        Polynomial{r(17, 16), r(1, 2), r(-3)});
  CHECK(structure_polynomial(QC::QMinus11, {r(1), r(1)}) == Polynomial{-2, 1, 3});
  // -3x^2 - (2l+1)x - (K - l(l-1)) with K = 1/4, l = 1/4.
  CHECK(structure_polynomial(QC::QPlus11, {r(1, 2), r(1, 4)}) ==
        Polynomial{r(-7, 16), r(-3, 2), r(-3)});
  // 3x^2 + (2l+1)x - (J + l(l-1)) with J = 3/4, l = -1/4.
  CHECK(structure_polynomial(QC::QPlus2, {r(1, 2), r(-1, 4)}) ==
        Polynomial{r(-17, 16), r(1, 2), r(3)});
}

TEST_CASE("closure on the small reps") {
  auto rep = build(QC::QMinus2, {r(1, 2), r(1, 4)});
  auto rp = verify_closure(rep, structure_polynomial(QC::QMinus2, {r(1, 2), r(1, 4)}), 1e-12);
  CHECK(rp.passed());
  // Dim 30: diagonal entries reach (n+1)^3 ~ 2.7e4, so the bound is 1e-12
  // relative to that scale rather than absolute.
  auto big = build(QC::QPlus11, {r(1, 2), r(1, 4)}, 30);
  auto f = structure_polynomial(QC::QPlus11, {r(1, 2), r(1, 4)});
  double scale = 0.0;
  for (std::size_t i = 0; i < big.interior_rows(); ++i) {
    scale = std::max(scale, std::abs(f(big.n0_diag[i])));
  }
  auto rb = verify_closure(big, f, 1e-12 * scale);
  CHECK(rb.passed());
  CHECK(rb.checks.size() == 3);
}

TEST_CASE("Casimir closed forms at the worked labels") {
  // Q+(2), j=1/2, l=-1/4: (1-l)[j(j+1) - l(l+1)] = 75/64.
  auto qp = casimir_closed_forms(QC::QPlus2, {r(1, 2), r(-1, 4)});
  REQUIRE_FALSE(qp.empty());
  CHECK(qp[0].printed == r(75, 64));
  CHECK(qp[0].computed == r(75, 64));
  CHECK(qp[0].matches);
  CHECK(qp[0].operator_is_casimir);

  // Q-(2), j=1/2, l=1/4: (-4l^3 + 7l + 3)/4 = 75/64.
  bool saw = false;
  for (const auto& chk : casimir_closed_forms(QC::QMinus2, {r(1, 2), r(1, 4)})) {
    if (chk.printed == r(75, 64)) saw = true;
    CHECK(chk.operator_is_casimir);
  }
  CHECK(saw);

  // Q+(1,1), k=1/2, l=1/4: l(l - k^2) = 0; the literature operator gives
  // (k+l)(l-1)(k-l-1) = 27/64 on this rep.
  auto q11 = casimir_closed_forms(QC::QPlus11, {r(1, 2), r(1, 4)});
  REQUIRE_FALSE(q11.empty());
  CHECK(q11[0].printed == 0);
  CHECK(q11[0].computed == r(3, 4) * r(-3, 4) * r(-3, 4));
  CHECK_FALSE(q11[0].matches);
}

TEST_CASE("literature Casimir operators commute on every grid rep") {
  for (auto c : kQuadraticClasses) {
    for (const auto& lab : quadratic_label_grid(c, 2, 12)) {
      Polynomial h = printed_casimir_polynomial(c, lab);
      Polynomial g = antidifference(structure_polynomial(c, lab));
      CHECK((h - g.shift(-1)).degree() == 0);
    }
  }
}

TEST_CASE("factorization reproduces the class rep") {
  for (auto c : kQuadraticClasses) {
    for (const auto& lab : quadratic_label_grid(c, 2, 10)) {
      auto fz = factorization(c, lab);
      auto chain = composite_chain(fz.lie, fz.boson, fz.coupling, fz.value, 10);
      auto rep = build(c, lab, 10);
      REQUIRE(chain.radicands.size() + 1 >= std::min<std::size_t>(rep.dim, 10));
      CHECK(chain.x0 == rep.n0_start);
      for (std::size_t i = 0; i + 1 < rep.dim && i < chain.radicands.size(); ++i) {
        CHECK(std::sqrt(to_double(chain.radicands[i])) == doctest::Approx(rep.raise_amps[i]));
      }
    }
  }
}

TEST_CASE("property: random quadratic labels close and keep the Casimir") {
  testgen::Gen gen(21);
  int built = 0;
  for (int trial = 0; trial < 400 && built < 120; ++trial) {
    QC c = kQuadraticClasses[gen.integer(0, 3)];
    QuadLabel lab{gen.half(8), Rational(gen.integer(-60, 60), 4)};
    try {
      validate(c, lab);
    } catch (const LabelError&) {
      continue;
    }
    auto d = dimension(c, lab);
    if (d && *d > 40) continue;
    ++built;
    auto rep = build(c, lab, 25);
    auto f = structure_polynomial(c, lab);
    CHECK(verify_closure(rep, f, 1e-10).passed());
    CHECK(casimir_spread(rep, f) < 1e-10);
    auto cas = casimir_on_rep(rep, f);
    CHECK(cas[0] == doctest::Approx(to_double(casimir_value(c, lab))).epsilon(1e-12));
    for (std::size_t i = 0; i + 1 < rep.dim; ++i) {
      CHECK(rep.raise_amps[i] == rep.lower_amps[i]);
      CHECK(rep.raise_amps[i] >= 0.0);
      CHECK(rep.n0_diag[i + 1] - rep.n0_diag[i] == doctest::Approx(1.0));
    }
  }
  CHECK(built >= 60);
}
