#include "polyalg/quadratic.hpp"

#include "polyalg/errors.hpp"

namespace polyalg {

std::string to_string(QuadraticClass c) {
  switch (c) {
    case QuadraticClass::QMinus2: return "qminus2";
    case QuadraticClass::QPlus2: return "qplus2";
    case QuadraticClass::QMinus11: return "qminus11";
    case QuadraticClass::QPlus11: return "qplus11";
  }
  return "?";
}

QuadraticClass parse_quadratic_class(const std::string& name) {
  for (auto c : kQuadraticClasses) {
    if (to_string(c) == name) return c;
  }
  throw LabelError("unknown quadratic class '" + name + "'");
}

namespace {

bool is_spin_class(QuadraticClass c) {
  return c == QuadraticClass::QMinus2 || c == QuadraticClass::QPlus2;
}

void require_natural(const Rational& v, const std::string& what) {
  if (!is_integer(v) || v < 0) {
    throw LabelError(what + " must be a nonnegative integer, got " + to_string(v));
  }
}

// Lowest N0 eigenvalue.
Rational lowest_q0(QuadraticClass c, const QuadLabel& lab) {
  if (is_spin_class(c)) return -lab.s - lab.l;
  return lab.s - lab.l;
}

// |<i+1|Q+|i>|^2 as printed for each class, with m = -j + i or n = i.
Rational radicand(QuadraticClass c, const QuadLabel& lab, long long i) {
  const Rational& s = lab.s;
  const Rational& l = lab.l;
  switch (c) {
    case QuadraticClass::QMinus2: {
      Rational m = -s + i;
      return (s - m) * (s + m + 1) * (2 * l - m);
    }
    case QuadraticClass::QPlus2: {
      Rational m = -s + i;
      return (s - m) * (s + m + 1) * (m - 2 * l + 1);
    }
    case QuadraticClass::QMinus11: {
      Rational n = i;
      return (n + 2 * s) * (n + 1) * (2 * l - s - n);
    }
    case QuadraticClass::QPlus11: {
      Rational n = i;
      return (n + 2 * s) * (n + 1) * (n + s - 2 * l + 1);
    }
  }
  return 0;
}

}  // namespace

void validate(QuadraticClass c, const QuadLabel& lab) {
  if (is_spin_class(c)) {
    if (lab.s <= 0 || !is_half_integer_lattice(lab.s)) {
      throw LabelError("j must be a positive half-integer, got " + to_string(lab.s));
    }
    if (c == QuadraticClass::QMinus2) {
      require_natural(2 * lab.l + lab.s, "2l+j");
    } else {
      require_natural(-lab.s - 2 * lab.l, "-j-2l");
    }
  } else {
    if (lab.s <= 0) throw LabelError("k must be positive, got " + to_string(lab.s));
    if (c == QuadraticClass::QMinus11) {
      require_natural(2 * lab.l - lab.s, "2l-k");
    } else {
      require_natural(lab.s - 2 * lab.l, "k-2l");
    }
  }
}

std::optional<long long> dimension(QuadraticClass c, const QuadLabel& lab) {
  validate(c, lab);
  switch (c) {
    case QuadraticClass::QMinus2:
      if (2 * lab.l - lab.s >= 0) return to_integer(2 * lab.s + 1);
      return to_integer(lab.s + 2 * lab.l + 1);
    case QuadraticClass::QPlus2: return to_integer(2 * lab.s + 1);
    case QuadraticClass::QMinus11: return to_integer(2 * lab.l - lab.s + 1);
    case QuadraticClass::QPlus11: return std::nullopt;
  }
  return std::nullopt;
}

LadderRep build(QuadraticClass c, const QuadLabel& lab, std::optional<long long> cutoff) {
  auto d = dimension(c, lab);
  bool truncated = false;
  long long n = 0;
  if (d) {
    n = *d;
  } else {
    if (!cutoff || *cutoff < 1) throw LabelError(to_string(c) + " is infinite; a cutoff is required");
    n = *cutoff;
    truncated = true;
  }
  std::vector<Rational> rad;
  rad.reserve(static_cast<std::size_t>(n));
  for (long long i = 0; i + 1 < n; ++i) rad.push_back(radicand(c, lab, i));
  Labels labels{{is_spin_class(c) ? "j" : "k", lab.s}, {"l", lab.l}};
  return ladder_from_radicands(lowest_q0(c, lab), rad, truncated, std::move(labels));
}

QuadraticFactorization factorization(QuadraticClass c, const QuadLabel& lab) {
  validate(c, lab);
  switch (c) {
    case QuadraticClass::QMinus2:
      return {su2_component(lab.s), boson_component(), Coupling::Opposite, lab.l};
    case QuadraticClass::QPlus2:
      return {su2_component(lab.s), boson_component(), Coupling::Same, lab.l};
    case QuadraticClass::QMinus11:
      return {su11_component(lab.s), boson_component(), Coupling::Opposite, lab.l};
    case QuadraticClass::QPlus11:
      return {su11_component(lab.s), boson_component(), Coupling::Same, lab.l};
  }
  throw LabelError("unknown quadratic class");
}

Polynomial structure_polynomial(QuadraticClass c, const QuadLabel& lab) {
  auto fz = factorization(c, lab);
  return composite_bracket(fz.lie, fz.boson, fz.coupling, fz.value);
}

Rational casimir_value(QuadraticClass c, const QuadLabel& lab) {
  return lowest_weight_casimir(lowest_q0(c, lab), structure_polynomial(c, lab));
}

LowestWeightComponent quadratic_component(QuadraticClass c, const QuadLabel& lab) {
  LowestWeightComponent comp;
  comp.name = to_string(c);
  comp.f = structure_polynomial(c, lab);
  comp.x0 = lowest_q0(c, lab);
  if (auto d = dimension(c, lab)) comp.top = *d - 1;
  return comp;
}

Polynomial printed_casimir_polynomial(QuadraticClass c, const QuadLabel& lab) {
  validate(c, lab);
  const Rational& l = lab.l;
  const Rational j2 = lab.s * (lab.s + 1);
  const Rational k2 = lab.s * (1 - lab.s);
  switch (c) {
    case QuadraticClass::QMinus2:
      return Polynomial{-(j2 + l * (l + 1)), j2 + l * l + 2 * l - 1, -(l - 2), Rational(-1)};
    case QuadraticClass::QPlus2:
      return Polynomial{j2 + l * (l - 1), -(j2 + l * l), l - 1, Rational(1)};
    case QuadraticClass::QMinus11:
      return Polynomial{-(k2 - l * (l + 1)), k2 - l * l - 2 * l + 1, l - 2, Rational(1)};
    case QuadraticClass::QPlus11:
      return Polynomial{k2 - l * (l - 1), -(k2 - l * l), -(l - 1), Rational(-1)};
  }
  return {};
}

std::vector<ClosedFormCheck> casimir_closed_forms(QuadraticClass c, const QuadLabel& lab) {
  const Rational normalized = casimir_value(c, lab);
  const Polynomial h = printed_casimir_polynomial(c, lab);
  const Rational computed = h(lowest_q0(c, lab));
  const Polynomial drift = h - antidifference(structure_polynomial(c, lab)).shift(-1);
  const bool is_casimir = drift.degree() == 0;
  const Rational& s = lab.s;
  const Rational& l = lab.l;
  const auto dim = dimension(c, lab);
  std::vector<ClosedFormCheck> out;
  auto add = [&](std::string name, std::string formula, const Rational& printed) {
    out.push_back({std::move(name), std::move(formula), printed, computed, normalized, is_casimir,
                   printed == computed});
  };
  switch (c) {
    case QuadraticClass::QMinus2:
      if (dim == 2 && 2 * l >= s) {
        add("qminus2-2dim-case1", "(-4l^3+7l+3)/4", (-4 * l * l * l + 7 * l + 3) / 4);
      }
      if (dim == 2 && 2 * l < s) {
        add("qminus2-2dim-case2", "(-3j^3+5j^2+11j+3)/8",
            (-3 * s * s * s + 5 * s * s + 11 * s + 3) / 8);
      }
      break;
    case QuadraticClass::QPlus2:
      add("qplus2", "(1-l)[j(j+1)-l(l+1)]", (1 - l) * (s * (s + 1) - l * (l + 1)));
      if (dim == 2) add("qplus2-2dim", "(4l^3-7l+3)/4", (4 * l * l * l - 7 * l + 3) / 4);
      break;
    case QuadraticClass::QMinus11:
      add("qminus11", "(l+1)[k(1-k)+l(l-1)]", (l + 1) * (s * (1 - s) + l * (l - 1)));
      if (dim == 2) {
        add("qminus11-2dim", "(-3k^3-5k^2+11k-3)/8",
            (-3 * s * s * s - 5 * s * s + 11 * s - 3) / 8);
      }
      break;
    case QuadraticClass::QPlus11:
      add("qplus11", "l(l-k^2)", l * (l - s * s));
      break;
  }
  return out;
}

}  // namespace polyalg
