#include "polyalg/cubic.hpp"

#include "polyalg/errors.hpp"
#include "polyalg/quadratic.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyalg {

std::string to_string(CubicClass c) {
  switch (c) {
    case CubicClass::CMinus11_11: return "cminus_11_11";
    case CubicClass::CPlus11_11: return "cplus_11_11";
    case CubicClass::CMinus2_2: return "cminus_2_2";
    case CubicClass::CPlus2_2: return "cplus_2_2";
    case CubicClass::CMinus2_11: return "cminus_2_11";
    case CubicClass::CPlus2_11: return "cplus_2_11";
    case CubicClass::CPlusQm11_h: return "cplus_qm11_h";
    case CubicClass::CMinusQm11_h: return "cminus_qm11_h";
    case CubicClass::CPlusQp11_h: return "cplus_qp11_h";
    case CubicClass::CMinusQp11_h: return "cminus_qp11_h";
  }
  return "?";
}

CubicClass parse_cubic_class(const std::string& name) {
  for (auto c : kCubicClasses) {
    if (to_string(c) == name) return c;
  }
  throw LabelError("unknown cubic class '" + name + "'");
}

std::vector<std::string> label_keys(CubicClass c) {
  switch (c) {
    case CubicClass::CMinus11_11:
    case CubicClass::CPlus11_11: return {"k1", "k2", "k"};
    case CubicClass::CMinus2_2:
    case CubicClass::CPlus2_2: return {"j1", "j2", "k"};
    case CubicClass::CMinus2_11:
    case CubicClass::CPlus2_11: return {"j", "k1", "k"};
    default: return {"k1", "l", "k"};
  }
}

namespace {

const Rational& get(const Labels& label, const std::string& key) {
  auto it = label.find(key);
  if (it == label.end()) throw LabelError("missing label '" + key + "'");
  return it->second;
}

bool is_minus(CubicClass c) {
  switch (c) {
    case CubicClass::CMinus11_11:
    case CubicClass::CMinus2_2:
    case CubicClass::CMinus2_11:
    case CubicClass::CMinusQm11_h:
    case CubicClass::CMinusQp11_h: return true;
    default: return false;
  }
}

}  // namespace

CubicFactorization factorization(CubicClass c, const Labels& label) {
  const Coupling cp = is_minus(c) ? Coupling::Opposite : Coupling::Same;
  const Rational& k = get(label, "k");
  switch (c) {
    case CubicClass::CMinus11_11:
    case CubicClass::CPlus11_11:
      return {su11_component(get(label, "k1")), su11_component(get(label, "k2")), cp, k};
    case CubicClass::CMinus2_2:
    case CubicClass::CPlus2_2:
      return {su2_component(get(label, "j1")), su2_component(get(label, "j2")), cp, k};
    case CubicClass::CMinus2_11:
    case CubicClass::CPlus2_11:
      return {su2_component(get(label, "j")), su11_component(get(label, "k1")), cp, k};
    case CubicClass::CPlusQm11_h:
    case CubicClass::CMinusQm11_h:
      return {quadratic_component(QuadraticClass::QMinus11, {get(label, "k1"), get(label, "l")}),
              boson_component(), cp, k};
    case CubicClass::CPlusQp11_h:
    case CubicClass::CMinusQp11_h:
      return {quadratic_component(QuadraticClass::QPlus11, {get(label, "k1"), get(label, "l")}),
              boson_component(), cp, k};
  }
  throw LabelError("unknown cubic class");
}

std::optional<long long> dimension_cubic(CubicClass c, const Labels& label) {
  auto fz = factorization(c, label);
  const auto& a = fz.a;
  const auto& b = fz.b;
  std::optional<Rational> len;
  if (fz.coupling == Coupling::Opposite) {
    Rational s = 2 * fz.value - a.x0 - b.x0;  // occupation sum
    Rational lo = b.top ? std::max(Rational(0), s - Rational(*b.top)) : Rational(0);
    Rational hi = a.top ? std::min(Rational(*a.top), s) : s;
    len = hi - lo + 1;
  } else {
    Rational d = 2 * fz.value - a.x0 + b.x0;  // occupation difference
    Rational b0 = std::max(Rational(0), -d);
    Rational a0 = b0 + d;
    if (a.top) len = Rational(*a.top) - a0 + 1;
    if (b.top) {
      Rational lb = Rational(*b.top) - b0 + 1;
      len = len ? std::min(*len, lb) : lb;
    }
  }
  if (!len) return std::nullopt;
  if (*len < 1 || !is_integer(*len)) {
    throw LabelError(to_string(c) + ": labels admit no unitary representation (dimension " +
                     to_string(*len) + ")");
  }
  return to_integer(*len);
}

LadderRep build_cubic(CubicClass c, const Labels& label, std::optional<long long> cutoff) {
  auto fz = factorization(c, label);
  auto chain = composite_chain(fz.a, fz.b, fz.coupling, fz.value, cutoff);
  return to_ladder(chain, label);
}

Polynomial structure_polynomial_cubic(CubicClass c, const Labels& label) {
  auto fz = factorization(c, label);
  return composite_bracket(fz.a, fz.b, fz.coupling, fz.value);
}

PolyFit fit_structure_cubic(CubicClass c, const Labels& label, long long cutoff, double tol) {
  auto s = bracket_samples(build_cubic(c, label, cutoff));
  int max_degree = std::min<int>(3, static_cast<int>(s.x.size()) - 1);
  if (max_degree < 0) throw ShapeError("no interior rows to fit");
  return minimal_degree_fit(s.x, s.y, max_degree, tol);
}

Rational casimir_value_cubic(CubicClass c, const Labels& label) {
  auto fz = factorization(c, label);
  auto chain = composite_chain(fz.a, fz.b, fz.coupling, fz.value, 1);
  return lowest_weight_casimir(chain.x0, structure_polynomial_cubic(c, label));
}

std::optional<PrintedBracket> printed_bracket(CubicClass c, const Labels& label) {
  const Rational& k = get(label, "k");
  PrintedBracket out;
  switch (c) {
    case CubicClass::CMinus11_11: {
      const Rational& k1 = get(label, "k1");
      const Rational& k2 = get(label, "k2");
      Rational c1 = k1 * (1 - k1), c2 = k2 * (1 - k2);
      Rational sigma = 2 * (c1 + c2), lambda = 2 * (c1 - c2);
      out.formula = "-4x^3 + (4K^2 - sigma)x + lambda K, sigma = 2(C1+C2), lambda = 2(C1-C2)";
      out.printed = Polynomial{lambda * k, 4 * k * k - sigma, 0, -4};
      break;
    }
    case CubicClass::CMinus2_2: {
      const Rational& j1 = get(label, "j1");
      const Rational& j2 = get(label, "j2");
      Rational c1 = j1 * (j1 + 1), c2 = j2 * (j2 + 1);
      Rational sigma = 2 * (c1 + c2), lambda = 2 * (c1 - c2);
      out.formula = "4x^3 - (4K^2 + sigma)x - lambda K, sigma = 2(C1+C2), lambda = 2(C1-C2)";
      out.printed = Polynomial{-lambda * k, -(4 * k * k + sigma), 0, 4};
      break;
    }
    case CubicClass::CMinus2_11: {
      const Rational& j = get(label, "j");
      const Rational& k1 = get(label, "k1");
      Rational jj = j * (j + 1), c1 = k1 * (1 - k1);
      out.formula = "4x^3 - 4K^2 x + 2(J + C1)";
      out.printed = Polynomial{2 * (jj + c1), -4 * k * k, 0, 4};
      break;
    }
    default: return std::nullopt;
  }
  out.computed = structure_polynomial_cubic(c, label);
  out.matches = out.printed == out.computed;
  return out;
}

HiggsReduction higgs_reduction(const Labels& label) {
  const Rational& k1 = get(label, "k1");
  const Rational& k2 = get(label, "k2");
  const Rational& k = get(label, "k");
  if (k1 != k2) throw std::invalid_argument("Higgs reduction needs k1 == k2");
  Polynomial p = structure_polynomial_cubic(CubicClass::CMinus11_11, label);
  HiggsReduction out;
  out.h = p.coefficient(3);
  out.a = p.coefficient(1) / 2;
  out.a_printed = 2 * k * k - k1 * (1 - k1);
  out.bracket_matches = p == Polynomial{0, 2 * out.a, 0, out.h} && out.h == -4;
  return out;
}

}  // namespace polyalg
