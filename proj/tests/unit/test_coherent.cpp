#include "doctest.h"
#include "gen.hpp"

#include "polyalg/coherent.hpp"
#include "polyalg/errors.hpp"
#include "polyalg/hypergeom.hpp"
#include "polyalg/survey.hpp"

#include <cmath>

using namespace polyalg;
using QC = QuadraticClass;

namespace {
Rational r(long long p, long long q = 1) { return Rational(p, q); }

double norm(const CoherentState& s) {
  double n2 = 0.0;
  for (const auto& c : s.coefficients) n2 += std::norm(c);
  return std::sqrt(n2);
}
}  // namespace

TEST_CASE("BG state at alpha = 0 is the lowest state") {
  auto rep = build(QC::QPlus11, {r(1, 2), r(1, 4)}, 40);
  auto st = bg_state(rep, {0.0, 0.0}, 1e-14);
  REQUIRE_FALSE(st.coefficients.empty());
  CHECK(std::abs(st.coefficients[0] - Complex(1.0, 0.0)) < 1e-15);
  CHECK(norm(st) == doctest::Approx(1.0));
}

TEST_CASE("BG state at k=1/2, l=1/4, alpha=1 has c_n = 1/(n!)^(3/2)") {
  auto rep = build(QC::QPlus11, {r(1, 2), r(1, 4)}, 60);
  auto st = bg_state(rep, {1.0, 0.0}, 1e-15);
  double norm_sq_inv = hypergeom({{}, {1.0, 1.0}, 1.0});
  CHECK(st.norm_constant == doctest::Approx(1.0 / std::sqrt(norm_sq_inv)).epsilon(1e-13));
  double fact = 1.0;
  for (std::size_t n = 0; n < 6; ++n) {
    if (n > 0) fact *= static_cast<double>(n);
    CHECK(st.coefficients[n].real() ==
          doctest::Approx(st.norm_constant / std::pow(fact, 1.5)).epsilon(1e-13));
  }
  CHECK(bg_eigen_residual(rep, st) < 1e-13);
}

TEST_CASE("BG states need an infinite rep") {
  auto rep = build(QC::QMinus11, {r(1, 2), r(3, 4)});
  CHECK_THROWS_AS(bg_state(rep, {1.0, 0.0}, 1e-12), LabelError);
  auto shortrep = build(QC::QPlus11, {r(1, 2), r(1, 4)}, 3);
  CHECK_THROWS_AS(bg_state(shortrep, {5.0, 0.0}, 1e-14), ConvergenceError);
}

TEST_CASE("Perelomov states") {
  auto rep = build(QC::QMinus11, {r(1, 2), r(3, 4)});
  auto zero = perelomov_state(rep, {0.0, 0.0});
  CHECK(std::abs(zero.coefficients[0] - Complex(1.0, 0.0)) < 1e-15);
  auto one = perelomov_state(rep, {1.0, 0.0});
  REQUIRE(one.coefficients.size() == 2);
  CHECK(one.coefficients[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(one.coefficients[1].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(one.norm_constant == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("Perelomov series on a truncated rep diverges for large gamma") {
  auto rep = build(QC::QPlus11, {r(1, 2), r(1, 4)}, 20);
  CHECK_THROWS_AS(perelomov_state(rep, {2.0, 0.0}), ConvergenceError);
}

TEST_CASE("canonical conjugate of su(1,1) k=1") {
  auto rep = to_ladder(su11_component(1), 30);
  auto m = canonical_conjugate(rep, Polynomial{0, -2});
  CHECK(m.report.passed());
  for (int n = 0; n < 10; ++n) {
    CHECK(m.matrix(n + 1, n) == doctest::Approx(std::sqrt((n + 1.0) / (n + 2.0))));
  }
}

TEST_CASE("canonical conjugate on Q+(1,1) and the finite-rep pole") {
  QuadLabel lab{r(1, 2), r(1, 4)};
  auto rep = build(QC::QPlus11, lab, 30);
  auto m = canonical_conjugate(rep, structure_polynomial(QC::QPlus11, lab));
  CHECK(m.report.passed());
  CHECK(m.report.max_residual() < 1e-10);

  QuadLabel fin{r(1, 2), r(7, 4)};
  auto frep = build(QC::QMinus11, fin);
  CHECK_THROWS_AS(canonical_conjugate(frep, structure_polynomial(QC::QMinus11, fin)), PoleError);
  CHECK(canonical_conjugate(frep, structure_polynomial(QC::QMinus11, fin), 1e-10, true)
            .report.passed());
}

TEST_CASE("deformation maps") {
  QuadLabel lab{r(1, 2), r(3, 4)};
  auto rep = build(QC::QMinus11, lab);
  auto d = deformation_map(rep, structure_polynomial(QC::QMinus11, lab), -1);
  CHECK(d.report.passed());

  // su(1,1) onto itself: the map is the identity.
  auto su = to_ladder(su11_component(Rational(3, 2)), 12);
  auto id = deformation_map(su, Polynomial{0, -2}, -1);
  CHECK(id.report.passed());
  Eigen::MatrixXd low = lower_matrix(su);
  CHECK((id.matrix - low).topLeftCorner(11, 11).cwiseAbs().maxCoeff() < 1e-12);

  // A wrong epsilon on Q+(1,1) shows up on the vacuum row.
  QuadLabel inf{r(1, 2), r(1, 4)};
  auto irep = build(QC::QPlus11, inf, 20);
  auto f = structure_polynomial(QC::QPlus11, inf);
  CHECK(deformation_map(irep, f, -1).report.passed());
  CHECK_FALSE(deformation_map(irep, f, -1, 0.37).report.passed());
}

TEST_CASE("resolution of the identity for finite Q-(1,1) reps") {
  auto two = identity_check_finite(QuadLabel{r(1, 2), r(3, 4)}, 400);
  CHECK(two.deviation < 1e-6);
  CHECK(two.report.passed());
  CHECK(two.diagonal.size() == 2);
  auto three = identity_check_finite(QuadLabel{r(1), r(3, 2)}, 400);
  CHECK(three.deviation < 1e-6);
  CHECK(three.literature_prefactor_deviation > 1e-3);
  CHECK_THROWS_AS(identity_check_finite(QuadLabel{r(1, 2), r(1, 2)}, 50), LabelError);
}

TEST_CASE("property: BG residual over random alpha") {
  testgen::Gen gen(51);
  auto grid = quadratic_label_grid(QC::QPlus11, 3, 40);
  for (int trial = 0; trial < 40; ++trial) {
    const auto& lab = gen.pick(grid);
    auto rep = build(QC::QPlus11, lab, 150);
    Complex alpha(gen.real(-1.4, 1.4), gen.real(-1.4, 1.4));
    auto st = bg_state(rep, alpha, 1e-14);
    CHECK(bg_eigen_residual(rep, st) < 1e-8);
    CHECK(norm(st) == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("property: Perelomov states on finite reps are unit vectors") {
  testgen::Gen gen(52);
  for (auto c : {QC::QMinus2, QC::QPlus2, QC::QMinus11}) {
    auto grid = quadratic_label_grid(c, 3, 25);
    for (int trial = 0; trial < 15; ++trial) {
      auto rep = build(c, gen.pick(grid));
      Complex g(gen.real(-3, 3), gen.real(-3, 3));
      CHECK(std::abs(norm(perelomov_state(rep, g)) - 1.0) < 1e-14);
    }
  }
}
