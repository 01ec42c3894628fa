#include "polyalg/survey.hpp"

#include "polyalg/analytic.hpp"
#include "polyalg/applications.hpp"
#include "polyalg/coherent.hpp"
#include "polyalg/errors.hpp"

#include <cmath>
#include <map>
#include <sstream>

namespace polyalg {

namespace {

std::vector<Rational> halves(const Rational& lo, const Rational& hi) {
  std::vector<Rational> out;
  for (Rational v = lo; v <= hi; v += Rational(1, 2)) out.push_back(v);
  return out;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

std::string label_text(const Labels& lab) {
  std::string s;
  for (const auto& [k, v] : lab) {
    if (!s.empty()) s += ", ";
    s += k + "=" + to_string(v);
  }
  return s;
}

std::string quad_text(QuadraticClass c, const QuadLabel& lab) {
  bool spin = c == QuadraticClass::QMinus2 || c == QuadraticClass::QPlus2;
  return to_string(c) + " " + (spin ? "j=" : "k=") + to_string(lab.s) + ", l=" + to_string(lab.l);
}

}  // namespace

std::vector<QuadLabel> quadratic_label_grid(QuadraticClass c, const Rational& s_max,
                                            long long max_dim) {
  std::vector<QuadLabel> out;
  for (const Rational& s : halves(Rational(1, 2), s_max)) {
    // l runs over the lattice fixed by the product construction.
    for (long long t = -2 * max_dim - 8; t <= 2 * max_dim + 8; ++t) {
      QuadLabel lab{s, (t - s) / 2};
      if (c == QuadraticClass::QMinus11 || c == QuadraticClass::QPlus11) lab.l = (t + s) / 2;
      try {
        auto d = dimension(c, lab);
        if (d && *d > max_dim) continue;
        // Keep the infinite class to the first few lattice points.
        if (!d && s - 2 * lab.l > 6) continue;
        out.push_back(lab);
      } catch (const LabelError&) {
      }
    }
  }
  return out;
}

std::vector<Labels> cubic_label_grid(CubicClass c, long long max_dim) {
  std::vector<Labels> bases;
  const std::vector<Rational> spins{Rational(1, 2), Rational(1), Rational(3, 2)};
  const std::vector<Rational> bargmann{Rational(1, 2), Rational(3, 4), Rational(1), Rational(3, 2)};
  switch (c) {
    case CubicClass::CMinus11_11:
    case CubicClass::CPlus11_11:
      for (auto& a : bargmann)
        for (auto& b : bargmann) bases.push_back({{"k1", a}, {"k2", b}});
      break;
    case CubicClass::CMinus2_2:
    case CubicClass::CPlus2_2:
      for (auto& a : spins)
        for (auto& b : spins) bases.push_back({{"j1", a}, {"j2", b}});
      break;
    case CubicClass::CMinus2_11:
    case CubicClass::CPlus2_11:
      for (auto& a : spins)
        for (auto& b : {Rational(1, 2), Rational(1), Rational(3, 2)}) {
          bases.push_back({{"j", a}, {"k1", b}});
        }
      break;
    default: {
      QuadraticClass q = (c == CubicClass::CPlusQm11_h || c == CubicClass::CMinusQm11_h)
                             ? QuadraticClass::QMinus11
                             : QuadraticClass::QPlus11;
      for (const auto& lab : quadratic_label_grid(q, 1, 4)) {
        bases.push_back({{"k1", lab.s}, {"l", lab.l}});
      }
      break;
    }
  }
  std::vector<Labels> out;
  for (auto base : bases) {
    base["k"] = 0;
    CubicFactorization fz;
    try {
      fz = factorization(c, base);
    } catch (const LabelError&) {
      continue;
    }
    const bool opposite = fz.coupling == Coupling::Opposite;
    const Rational start = opposite ? fz.a.x0 + fz.b.x0 : fz.a.x0 - fz.b.x0;
    for (long long t = opposite ? 0 : -6; t <= 6; ++t) {
      Labels lab = base;
      lab["k"] = (start + t) / 2;
      try {
        LadderRep rep = build_cubic(c, lab, 8);
        if (!rep.truncated && static_cast<long long>(rep.dim) > max_dim) continue;
        out.push_back(lab);
      } catch (const LabelError&) {
      }
    }
  }
  return out;
}

std::vector<LedgerEntry> discrepancy_ledger() {
  std::vector<LedgerEntry> out;
  auto add = [&](std::string id, std::string topic, std::string printed, std::string computed,
                 std::string resolution) {
    out.push_back({std::move(id), std::move(topic), std::move(printed), std::move(computed),
                   std::move(resolution)});
  };

  // Casimir closed forms over the closure grid, grouped by formula.
  struct Tally {
    std::string formula;
    int total = 0;
    int bad = 0;
    int not_casimir = 0;
    std::string example;
  };
  std::map<std::string, Tally> tallies;
  for (auto c : kQuadraticClasses) {
    for (const auto& lab : quadratic_label_grid(c, 4, 40)) {
      for (const auto& chk : casimir_closed_forms(c, lab)) {
        auto& t = tallies[chk.name];
        t.formula = chk.formula;
        ++t.total;
        if (!chk.operator_is_casimir) ++t.not_casimir;
        if (!chk.matches) {
          if (t.bad++ == 0) {
            t.example = quad_text(c, lab) + ": printed " + to_string(chk.printed) +
                        ", literature operator on the rep " + to_string(chk.computed) +
                        ", g(x0-1) " + to_string(chk.normalized);
          }
        }
      }
    }
  }
  for (const auto& [name, t] : tallies) {
    if (t.not_casimir > 0) {
      add("casimir-operator:" + name, "literature Casimir operator", t.formula,
          std::to_string(t.not_casimir) + " labels where it fails to commute with Q+-",
          "the normalized Casimir N+N- + g(N0-1) is used");
    }
    if (t.bad == 0) continue;
    add("casimir:" + name, "Casimir closed form", t.formula,
        std::to_string(t.bad) + "/" + std::to_string(t.total) + " grid labels differ; e.g. " +
            t.example,
        "the value of the Casimir operator on the rep is used");
  }

  // Q+(2) bracket: the l(l+1) form against the product construction.
  {
    QuadLabel lab{Rational(1, 2), Rational(-1, 4)};
    Polynomial exact = structure_polynomial(QuadraticClass::QPlus2, lab);
    const Rational& j = lab.s;
    const Rational& l = lab.l;
    Polynomial printed{-(j * (j + 1) + l * (l + 1)), 2 * l + 1, Rational(3)};
    if (printed != exact) {
      add("bracket:qplus2", "Q+(2) structure polynomial at j=1/2, l=-1/4",
          "3x^2 + (2l+1)x - (j(j+1) + l(l+1)) = " + printed.to_string(), exact.to_string(),
          "the constant carries l(l-1); the exact bracket is used");
    }
  }

  // Cubic brackets written in literature form.
  const std::vector<std::pair<CubicClass, Labels>> printed_cases{
      {CubicClass::CMinus11_11, {{"k1", Rational(1, 2)}, {"k2", Rational(1, 2)}, {"k", 1}}},
      {CubicClass::CMinus2_2, {{"j1", Rational(1, 2)}, {"j2", Rational(1, 2)}, {"k", 0}}},
      {CubicClass::CMinus2_11, {{"j", Rational(1, 2)}, {"k1", Rational(1, 2)}, {"k", 1}}},
  };
  for (const auto& [c, lab] : printed_cases) {
    auto pb = printed_bracket(c, lab);
    if (pb && !pb->matches) {
      add("bracket:" + to_string(c), to_string(c) + " bracket at " + label_text(lab),
          pb->formula + " = " + pb->printed.to_string(), pb->computed.to_string(),
          "the factor-Casimir bracket is used");
    }
  }
  {
    Labels lab{{"j1", Rational(1, 2)}, {"j2", Rational(1, 2)}, {"k", 0}};
    Polynomial p = structure_polynomial_cubic(CubicClass::CPlus2_2, lab);
    add("bracket:cplus2_2-degree", "cplus2_2 bracket degree", "-4 C0^2 (degree 2)",
        "degree " + std::to_string(p.degree()) + ": " + p.to_string(),
        "read as a cubic; confirmed by the fitted bracket");
  }
  {
    Labels lab{{"k1", Rational(1, 2)}, {"k2", Rational(1, 2)}, {"k", 1}};
    HiggsReduction h = higgs_reduction(lab);
    if (h.a != h.a_printed) {
      add("higgs:a", "Higgs reduction of cminus11_11 at k1=k2=1/2, k=1", "a = 2k^2 - k1(1-k1) = " +
              to_string(h.a_printed),
          "a = " + to_string(h.a), "a = 2k^2 - 2 k1(1-k1) from the exact bracket");
    }
  }

  // Differential realizations.
  {
    QuadLabel lab{Rational(1, 2), Rational(1, 4)};
    auto [b, cc] = solve_qminus2_qplus(lab);
    add("analytic:qminus2-qplus-z", "Q+ z coefficient of the Q-(2) realization at j=1/2, l=1/4",
        "2j(2l_j) (unreadable token)", fmt(cc),
        "solved so the realization reproduces the ladder matrices; z^2 d coefficient -" + fmt(b));
    QuadLabel big{Rational(3, 2), Rational(5, 4)};
    auto [b2, c2] = solve_qminus2_qplus(big);
    const double j = 1.5, l = 1.25;
    add("analytic:qminus2-qplus-general", "Q+ of the Q-(2) realization at j=3/2, l=5/4",
        "-(2l+3j+1) z^2 d = " + fmt(-(2 * l + 3 * j + 1)),
        "-(2l+3j-1) = " + fmt(-b2) + ", z coefficient 2j(2l+j) = " + fmt(c2),
        "least-squares solve against the ladder");
  }
  {
    QuadLabel lab{Rational(1, 2), Rational(-3, 4)};
    auto r = class_realization(QuadraticClass::QPlus2, lab, 0);
    const double j = 0.5, l = -0.75;
    add("analytic:qplus2-qminus-d", "Q- d coefficient of the Q+(2) realization at j=1/2, l=-3/4",
        "-(2l-j-1) = " + fmt(-(2 * l - j - 1)), fmt(r.solved.at(0).second),
        "-(2l+j-1) reproduces the ladder matrices");
  }

  // Coherent states.
  {
    QuadLabel lab{Rational(1, 2), Rational(3, 4)};
    IdentityCheck ic = identity_check_finite(lab, 200, 1e-6);
    add("identity:prefactor", "Q-(1,1) measure prefactor at k=1/2, l=3/4",
        "(2l-k+1)/(2l+k+1)", "(2l-k+1)/(2l+k); literature form off by " +
                                   fmt(ic.literature_prefactor_deviation),
        "prefactor fixed by the projector sum");
  }

  // Applications.
  {
    TrilinearAmplitudes t = trilinear_amplitudes(2);
    if (!t.printed_matches) {
      std::string p, o;
      for (std::size_t i = 0; i < t.oracle_raise.size(); ++i) {
        p += (i ? ", " : "") + fmt(t.printed_lower[i]);
        o += (i ? ", " : "") + fmt(t.oracle_lower[i]);
      }
      add("trilinear:amplitudes", "k=1/2 Q-(1,1) rep at epsilon=2, <n-1|Q-|n> for n=1,2",
          "sqrt((n+1)^2(eps-n)) = " + p, o + "; Q0 offset " + fmt(t.q0_offset),
          "the printed Q+ and Q- amplitudes are interchanged; oracle used");
    }
  }
  {
    CalogeroResult c = calogero_cubic(1);
    add("calogero:amplitude", "C+ = (J+)^2/2 amplitude at j=1, m=-1",
        "sqrt((j-m)(j+m+1)(j-1-m)(j+2+m)) = " + fmt(c.printed_raise.at(0)),
        fmt(c.oracle_raise.at(0)), "printed/oracle = " + fmt(c.amplitude_ratio) + "; oracle used");
  }
  {
    HahnResult h = hahn_invariants(HahnSource::calogero(1));
    add("hahn:calogero", "[Q3,Q1] for the Calogero invariants at j=1", h.printed_formula,
        "residual " + fmt(h.printed_residual), "reported only; the other two brackets hold");
    HahnResult s = hahn_invariants(
        HahnSource::singular_oscillator(Rational(3, 4), Rational(3, 4), Rational(7, 4)));
    add("hahn:singular", "[Q3,Q1] for the singular oscillator at k1=k2=3/4, k=7/4",
        s.printed_formula, "residual " + fmt(s.printed_residual),
        "reported only; k=2 is off the product lattice, so k=7/4 is used");
  }
  {
    SingleModeCubic s = single_mode_cubic(3);
    if (!s.printed_matches) {
      add("single-mode-cubic", "Q+ = (a^dagger)^3/sqrt(3) on |0>", "(n+1)sqrt(n+4) = " +
              fmt(s.printed_raise[0]),
          fmt(s.oracle_raise[0]) + "; bracket " + s.bracket.to_string(),
          "the identification with a Q+(1,1) rep is not adopted");
    }
  }
  {
    auto d = aniso_degeneracy(5);
    add("degeneracy:census", "degeneracy census over Q-(1,1) reps",
        "dim(k=1/2) + 2 x dims of the k<1/2 reps", "k>1/2 reps: census " +
                                                      std::to_string(d.census_count) +
                                                      " at N=5, enumeration " +
                                                      std::to_string(d.ordered_count),
        "read as k>1/2; no k<1/2 rep exists on the lattice");
  }
  return out;
}

}  // namespace polyalg
