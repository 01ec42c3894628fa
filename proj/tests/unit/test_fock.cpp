#include "doctest.h"
#include "gen.hpp"

#include "polyalg/errors.hpp"
#include "polyalg/fock.hpp"
#include "polyalg/survey.hpp"

#include <cmath>

using namespace polyalg;

namespace {
Rational r(long long p, long long q = 1) { return Rational(p, q); }
}  // namespace

TEST_CASE("fock indexing is colexicographic") {
  FockSpace s({3, 4});
  CHECK(s.size() == 12);
  CHECK(s.index({1, 0}) == 1);
  CHECK(s.index({0, 1}) == 3);
  CHECK(s.occupations(7) == std::vector<int>{1, 2});
  CHECK(s.contains({2, 3}));
  CHECK_FALSE(s.contains({3, 0}));
  CHECK(s.interior({1, 2}, 1));
  CHECK_FALSE(s.interior({2, 2}, 1));
}

TEST_CASE("mode operators") {
  FockSpace s = FockSpace::uniform(1, 6);
  CHECK(apply(Expr::a(0), s, s.index({0})).empty());
  auto up = apply(Expr::ad(0), s, s.index({2}));
  REQUIRE(up.size() == 1);
  CHECK(up[0].first == s.index({3}));
  CHECK(up[0].second == doctest::Approx(std::sqrt(3.0)));
  CHECK(apply(Expr::ad(0), s, s.index({5})).empty());  // pushed past the cutoff
}

TEST_CASE("canonical commutator holds away from the cutoff") {
  FockSpace s = FockSpace::uniform(2, 5);
  CHECK(canonical_commutator_residual(s) < 1e-14);
  auto a = mode_operator(s, 0, ModeKind::Annihilate).mat;
  auto ad = mode_operator(s, 0, ModeKind::Create).mat;
  Eigen::MatrixXd comm = Eigen::MatrixXd(a * ad - ad * a);
  // The top occupation of mode 0 sees a truncation artifact.
  CHECK(comm(s.index({4, 0}), s.index({4, 0})) == doctest::Approx(-4.0));
}

TEST_CASE("single-mode cubic boson on the vacuum") {
  FockSpace s = FockSpace::uniform(1, 8);
  auto out = apply(single_mode_cubic_realization().qplus, s, 0);
  REQUIRE(out.size() == 1);
  CHECK(out[0].first == 3);
  CHECK(out[0].second == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("Calogero C+ = J+^2/2 at j=1 maps |1,-1> to |1,1>") {
  // Schwinger: |j, m> = |j+m, j-m>.
  FockSpace s = FockSpace::uniform(2, 4);
  Expr jp = Expr::ad(0) * Expr::a(1);
  auto out = apply(jp * jp * 0.5, s, s.index({0, 2}));
  REQUIRE(out.size() == 1);
  CHECK(out[0].first == s.index({2, 0}));
  CHECK(out[0].second == doctest::Approx(1.0));
}

TEST_CASE("oracle equivalence at the worked labels") {
  {
    QuadLabel lab{r(1, 2), r(1, 4)};
    auto rep = build(QuadraticClass::QMinus2, lab);
    auto real = quadratic_realization(QuadraticClass::QMinus2, lab);
    auto space = FockSpace::uniform(3, levels_for(rep, real));
    auto rp = oracle_check(rep, real, space, 1e-12);
    CHECK(rp.passed());
  }
  {
    QuadLabel lab{r(1), r(3, 2)};
    auto rep = build(QuadraticClass::QMinus11, lab);
    CHECK(rep.dim == 3);
    auto real = quadratic_realization(QuadraticClass::QMinus11, lab);
    auto space = FockSpace::uniform(3, levels_for(rep, real));
    CHECK(oracle_check(rep, real, space, 1e-12).passed());
  }
  {
    Labels lab{{"k1", r(1, 2)}, {"k2", r(1, 2)}, {"k", r(3, 2)}};
    auto rep = build_cubic(CubicClass::CMinus11_11, lab);
    auto real = cubic_realization(CubicClass::CMinus11_11, lab);
    auto space = FockSpace::uniform(4, levels_for(rep, real));
    CHECK(oracle_check(rep, real, space, 1e-10).passed());
  }
}

TEST_CASE("an unrepresentable central value gives an empty subspace") {
  QuadLabel lab{r(1, 2), r(1, 4)};
  auto real = quadratic_realization(QuadraticClass::QMinus2, lab);
  real.constraints.front().value += 0.5;  // n0 + n1 = 3/2
  CHECK_THROWS_AS(constrained_subspace(FockSpace::uniform(3, 6), real, 1e-9), LabelError);
}

TEST_CASE("two-mode su(1,1) needs a half-integer Bargmann index") {
  CHECK_THROWS_AS(su11_pair(0, 1, r(3, 4)), LabelError);
  CHECK_NOTHROW(su11_pair(0, 1, r(3, 2)));
}

TEST_CASE("central elements commute with the generators") {
  QuadLabel lab{r(1), r(1, 2)};
  auto real = quadratic_realization(QuadraticClass::QMinus2, lab);
  CHECK(central_commutator_residual(FockSpace::uniform(3, 7), real) < 1e-12);
}

TEST_CASE("property: random quadratic labels match the three-mode oracle") {
  testgen::Gen gen(41);
  int checked = 0;
  for (auto c : kQuadraticClasses) {
    auto grid = quadratic_label_grid(c, 2, 10);
    for (int i = 0; i < 5; ++i) {
      const auto& lab = gen.pick(grid);
      auto rep = build(c, lab, 8);
      auto real = quadratic_realization(c, lab);
      auto space = FockSpace::uniform(3, levels_for(rep, real));
      auto rp = oracle_check(rep, real, space, 1e-10);
      CHECK_MESSAGE(rp.passed(), to_string(c) << " s=" << to_string(lab.s)
                                              << " l=" << to_string(lab.l));
      ++checked;
    }
  }
  CHECK(checked == 20);
}
