// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include "polyalg/analytic.hpp"
#include "polyalg/applications.hpp"
#include "polyalg/coherent.hpp"
#include "polyalg/compose.hpp"
#include "polyalg/cubic.hpp"
#include "polyalg/errors.hpp"
#include "polyalg/fock.hpp"
#include "polyalg/quadratic.hpp"
#include "polyalg/survey.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace polyalg;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Limits {
  double closure = 1e-10;
  double oracle = 1e-10;
  double casimir = 1e-10;
  double dicke = 1e-9;
  double bg = 1e-8;
  double perelomov_norm = 1e-14;
  double identity = 1e-6;
  double fit = 1e-9;
  double maps = 1e-10;
  double analytic = 1e-10;
};
const Limits kTol;

// Unbounded cubic reps are cut here; past roughly 20 states the bracket
// values pass 1e6 and double rounding alone approaches 1e-10.
constexpr long long kCubicCutoff = 16;

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

// Every `stride`-th element, so a long grid is sampled end to end.
template <class T>
std::vector<T> spread(const std::vector<T>& v, std::size_t count) {
  if (v.size() <= count) return v;
  std::vector<T> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(v[i * (v.size() - 1) / (count - 1)]);
  return out;
}

Outcome closure_suite() {
  Outcome o;
  double worst = 0.0;
  std::size_t quad_total = 0, cubic_total = 0;
  std::size_t min_quad = SIZE_MAX, min_cubic = SIZE_MAX;
  for (auto c : kQuadraticClasses) {
    auto grid = quadratic_label_grid(c, 4, 40);
    min_quad = std::min(min_quad, grid.size());
    quad_total += grid.size();
    for (const auto& lab : grid) {
      auto rep = build(c, lab, 30);
      auto r = verify_closure(rep, structure_polynomial(c, lab), kTol.closure);
      worst = std::max(worst, r.max_residual());
      if (!r.passed()) o.pass = false;
    }
  }
  for (auto c : kCubicClasses) {
    auto grid = cubic_label_grid(c, 40);
    min_cubic = std::min(min_cubic, grid.size());
    cubic_total += grid.size();
    for (const auto& lab : grid) {
      auto rep = build_cubic(c, lab, kCubicCutoff);
      auto r = verify_closure(rep, structure_polynomial_cubic(c, lab), kTol.closure);
      worst = std::max(worst, r.max_residual());
      if (!r.passed()) o.pass = false;
    }
  }
  if (min_quad < 50 || min_cubic < 30) o.pass = false;
  o.detail = std::to_string(quad_total) + " quadratic (min " + std::to_string(min_quad) +
             "/class), " + std::to_string(cubic_total) + " cubic (min " +
             std::to_string(min_cubic) + "/class), max residual " + sci(worst) + " <= " +
             sci(kTol.closure);
  return o;
}

Outcome oracle_suite() {
  Outcome o;
  double worst = 0.0;
  int count = 0;
  for (auto c : kQuadraticClasses) {
    for (const auto& lab : spread(quadratic_label_grid(c, 2, 20), 8)) {
      auto rep = build(c, lab, 12);
      auto r = quadratic_realization(c, lab);
      auto space = FockSpace::uniform(r.modes(), levels_for(rep, r));
      auto rep_check = oracle_check(rep, r, space, kTol.oracle);
      worst = std::max(worst, rep_check.max_residual());
      if (!rep_check.passed()) o.pass = false;
      ++count;
    }
  }
  const CubicClass four_mode[] = {CubicClass::CMinus11_11, CubicClass::CPlus11_11,
                                  CubicClass::CMinus2_2,   CubicClass::CPlus2_2,
                                  CubicClass::CMinus2_11,  CubicClass::CPlus2_11};
  for (auto c : four_mode) {
    // Bargmann indices off the half-integers have no two-mode realization.
    std::vector<std::pair<Labels, Realization>> realizable;
    for (const auto& lab : cubic_label_grid(c, 20)) {
      try {
        realizable.emplace_back(lab, cubic_realization(c, lab));
      } catch (const LabelError&) {
      }
    }
    for (const auto& [lab, r] : spread(realizable, 5)) {
      auto rep = build_cubic(c, lab, 8);
      auto space = FockSpace::uniform(r.modes(), levels_for(rep, r));
      auto rep_check = oracle_check(rep, r, space, kTol.oracle);
      worst = std::max(worst, rep_check.max_residual());
      if (!rep_check.passed()) o.pass = false;
      ++count;
    }
  }
  o.detail = std::to_string(count) + " reps against 3- and 4-mode oracles, max residual " +
             sci(worst) + " <= " + sci(kTol.oracle);
  return o;
}

Outcome casimir_suite() {
  Outcome o;
  double worst = 0.0;
  int reps = 0;
  std::set<std::string> mismatched;
  bool qplus2_exact = true;
  for (auto c : kQuadraticClasses) {
    for (const auto& lab : quadratic_label_grid(c, 4, 40)) {
      auto rep = build(c, lab, 30);
      worst = std::max(worst, casimir_spread(rep, structure_polynomial(c, lab)));
      ++reps;
      for (const auto& chk : casimir_closed_forms(c, lab)) {
        if (!chk.operator_is_casimir) mismatched.insert("casimir-operator:" + chk.name);
        if (!chk.matches) {
          mismatched.insert("casimir:" + chk.name);
          if (c == QuadraticClass::QPlus2) qplus2_exact = false;
        }
      }
    }
  }
  for (auto c : kCubicClasses) {
    for (const auto& lab : cubic_label_grid(c, 40)) {
      auto rep = build_cubic(c, lab, kCubicCutoff);
      worst = std::max(worst, casimir_spread(rep, structure_polynomial_cubic(c, lab)));
      ++reps;
    }
  }
  if (worst > kTol.casimir) o.pass = false;
  // Every mismatch has to be recorded; a silent one fails the criterion.
  auto ledger = discrepancy_ledger();
  std::set<std::string> ids;
  for (const auto& e : ledger) ids.insert(e.id);
  int unlogged = 0;
  for (const auto& id : mismatched) {
    if (!ids.count(id)) ++unlogged;
  }
  if (unlogged > 0 || !qplus2_exact) o.pass = false;
  o.detail = std::to_string(reps) + " reps, spread " + sci(worst) + " <= " + sci(kTol.casimir) +
             "; " + std::to_string(mismatched.size()) + " closed-form mismatches, " +
             std::to_string(unlogged) + " unlogged; ledger has " + std::to_string(ledger.size()) +
             " entries; Q+(2) form " + (qplus2_exact ? "exact" : "inexact");
  return o;
}

Outcome degeneracy_suite() {
  Outcome o;
  int bad = 0;
  for (long long N = 0; N <= 200; ++N) {
    if (!aniso_degeneracy(N).matches()) ++bad;
  }
  o.pass = bad == 0;
  o.detail = "N = 0..200, " + std::to_string(bad) + " mismatches (ordered, unordered, census)";
  return o;
}

Outcome dicke_suite() {
  Outcome o;
  double worst = 0.0;
  std::size_t blocks = 0;
  for (const Rational& j : {Rational(1, 2), Rational(1), Rational(3, 2)}) {
    auto s = dicke_spectrum(j, 4, 1.0, 0.7, std::nullopt, kTol.dicke);
    worst = std::max(worst, s.report.max_residual());
    blocks += s.spectrum.block_labels.size();
    if (!s.report.passed()) o.pass = false;
  }
  o.detail = std::to_string(blocks) + " blocks for j in {1/2, 1, 3/2}, l <= 4, max deviation " +
             sci(worst) + " <= " + sci(kTol.dicke);
  return o;
}

Outcome coherent_suite() {
  Outcome o;
  double bg_worst = 0.0, norm_worst = 0.0, id_worst = 0.0;
  int bg_count = 0, norm_count = 0, id_count = 0;
  const std::vector<Complex> alphas{{0.3, 0.0}, {1.0, 1.0}, {2.0, 0.0}, {0.0, -2.0}, {-1.2, 1.5}};
  for (const auto& lab : spread(quadratic_label_grid(QuadraticClass::QPlus11, 2, 40), 10)) {
    auto rep = build(QuadraticClass::QPlus11, lab, 200);
    for (auto a : alphas) {
      auto st = bg_state(rep, a, 1e-15);
      bg_worst = std::max(bg_worst, bg_eigen_residual(rep, st));
      ++bg_count;
    }
  }
  const std::vector<Complex> gammas{{0.2, 0.0}, {0.7, -0.4}, {-1.5, 0.5}, {0.0, 3.0}};
  for (auto c : {QuadraticClass::QMinus2, QuadraticClass::QPlus2, QuadraticClass::QMinus11}) {
    for (const auto& lab : spread(quadratic_label_grid(c, 3, 20), 10)) {
      auto rep = build(c, lab);
      for (auto g : gammas) {
        auto st = perelomov_state(rep, g);
        double n2 = 0.0;
        for (const auto& z : st.coefficients) n2 += std::norm(z);
        norm_worst = std::max(norm_worst, std::abs(std::sqrt(n2) - 1.0));
        ++norm_count;
      }
    }
  }
  for (const auto& lab : quadratic_label_grid(QuadraticClass::QMinus11, 3, 6)) {
    auto ic = identity_check_finite(lab, 96, kTol.identity);
    id_worst = std::max(id_worst, ic.deviation);
    ++id_count;
  }
  o.pass = bg_worst <= kTol.bg && norm_worst <= kTol.perelomov_norm && id_worst <= kTol.identity;
  o.detail = "BG " + std::to_string(bg_count) + " states " + sci(bg_worst) + " <= " +
             sci(kTol.bg) + "; Perelomov " + std::to_string(norm_count) + " norms " +
             sci(norm_worst) + " <= " + sci(kTol.perelomov_norm) + "; identity " +
             std::to_string(id_count) + " reps " + sci(id_worst) + " <= " + sci(kTol.identity);
  return o;
}

struct Factor {
  std::string name;
  LadderRep rep;
  int order;
};

Outcome composition_suite() {
  Outcome o;
  constexpr long long kStates = 12;
  std::vector<Factor> factors;
  factors.push_back({"boson", to_ladder(boson_component(), kStates), 0});
  factors.push_back({"su2", to_ladder(su2_component(Rational(11, 2))), 1});
  factors.push_back({"su11", to_ladder(su11_component(Rational(3, 4)), kStates), 1});
  factors.push_back({"qminus2", build(QuadraticClass::QMinus2, {Rational(11, 2), Rational(33, 4)}), 2});
  factors.push_back({"qplus2", build(QuadraticClass::QPlus2, {Rational(11, 2), Rational(-17, 4)}), 2});
  factors.push_back({"qminus11", build(QuadraticClass::QMinus11, {Rational(1, 2), Rational(23, 4)}), 2});
  factors.push_back({"qplus11", build(QuadraticClass::QPlus11, {Rational(3, 2), Rational(1, 4)}, kStates), 2});
  int pairs = 0, quartic = 0;
  double worst = 0.0;
  std::size_t smallest = SIZE_MAX;
  std::string failed;
  for (std::size_t a = 0; a < factors.size(); ++a) {
    for (std::size_t b = a; b < factors.size(); ++b) {
      const auto& L = factors[a];
      const auto& R = factors[b];
      // Pair index i with index i: Pi = (L0 - R0)/2 at the lowest states.
      Rational pi = (L.rep.n0_start - R.rep.n0_start) / 2;
      auto comp = compose(L.rep, R.rep, pi, Coupling::Same, L.order, R.order);
      smallest = std::min(smallest, comp.product_rep.dim);
      auto fit = fit_order(comp, kTol.fit);
      worst = std::max(worst, fit.residual);
      ++pairs;
      if (L.order + R.order + 1 == 4 && fit.degree == 4) ++quartic;
      if (fit.degree > L.order + R.order + 1 || fit.residual > kTol.fit ||
          comp.product_rep.dim < 8) {
        o.pass = false;
        failed += " " + L.name + "x" + R.name;
      }
    }
  }
  if (quartic == 0) o.pass = false;
  o.detail = std::to_string(pairs) + " pairs, min subspace dim " + std::to_string(smallest) +
             ", " + std::to_string(quartic) + " quartic, max residual " + sci(worst) + " <= " +
             sci(kTol.fit) + (failed.empty() ? "" : "; failed:" + failed);
  return o;
}

Outcome mapping_suite() {
  Outcome o;
  double worst = 0.0;
  struct Case {
    QuadraticClass c;
    QuadLabel lab;
  };
  // Q-(1,1) has 2l - k + 1 states; l = 59/4 with k = 1/2 gives 30.
  const std::vector<Case> cases{
      {QuadraticClass::QPlus11, {Rational(1, 2), Rational(-3, 4)}},
      {QuadraticClass::QPlus11, {Rational(3, 2), Rational(1, 4)}},
      {QuadraticClass::QMinus11, {Rational(1, 2), Rational(59, 4)}},
      {QuadraticClass::QMinus11, {Rational(3, 2), Rational(61, 4)}},
  };
  for (const auto& cs : cases) {
    auto rep = build(cs.c, cs.lab, 30);
    if (rep.dim != 30) o.pass = false;
    auto f = structure_polynomial(cs.c, cs.lab);
    const bool finite = !rep.truncated;
    auto conj = canonical_conjugate(rep, f, kTol.maps, finite);
    worst = std::max(worst, conj.report.max_residual());
    if (!conj.report.passed()) o.pass = false;
    for (int lambda : {1, -1}) {
      auto def = deformation_map(rep, f, lambda, std::nullopt, kTol.maps);
      worst = std::max(worst, def.report.max_residual());
      if (!def.report.passed()) o.pass = false;
    }
  }
  o.detail = std::to_string(cases.size()) + " dim-30 reps, conjugate and lambda = +-1 maps, max residual " +
             sci(worst) + " <= " + sci(kTol.maps);
  return o;
}

Outcome analytic_suite() {
  Outcome o;
  double worst = 0.0;
  int count = 0;
  for (auto c : kQuadraticClasses) {
    for (const auto& lab : spread(quadratic_label_grid(c, 3, 12), 12)) {
      auto rep = build(c, lab, 12);
      auto r = class_realization(c, lab, rep.dim);
      auto chk = analytic_check(r, rep, kTol.analytic);
      worst = std::max(worst, chk.max_residual());
      if (!chk.passed()) o.pass = false;
      ++count;
    }
  }
  std::string solved;
  for (const auto& e : discrepancy_ledger()) {
    if (e.id == "analytic:qminus2-qplus-z") solved = e.computed;
  }
  if (solved.empty()) o.pass = false;
  o.detail = std::to_string(count) + " reps, max residual " + sci(worst) + " <= " +
             sci(kTol.analytic) + "; solved Q-(2) z coefficient at j=1/2, l=1/4: " +
             (solved.empty() ? "missing" : solved);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "closure", 30, closure_suite},        {2, "oracle", 60, oracle_suite},
      {3, "casimir", 0, casimir_suite},         {4, "degeneracy", 1, degeneracy_suite},
      {5, "dicke", 10, dicke_suite},            {6, "coherent", 20, coherent_suite},
      {7, "composition", 30, composition_suite}, {8, "maps", 0, mapping_suite},
      {9, "analytic", 0, analytic_suite},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0 && secs > c.budget_s) {
      out.pass = false;
      out.detail += "; over the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget";
    }
    std::printf("[%s] %d %-11s %s (%.2f s)\n", out.pass ? "PASS" : "FAIL", c.id, c.name,
                out.detail.c_str(), secs);
    std::fflush(stdout);
    if (!out.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
