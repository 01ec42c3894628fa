#pragma once

#include "polyalg/algebra.hpp"
#include "polyalg/ladder.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polyalg {

enum class QuadraticClass { QMinus2, QPlus2, QMinus11, QPlus11 };

inline constexpr QuadraticClass kQuadraticClasses[] = {
    QuadraticClass::QMinus2, QuadraticClass::QPlus2, QuadraticClass::QMinus11,
    QuadraticClass::QPlus11};

std::string to_string(QuadraticClass c);
// Accepts "qminus2", "qplus2", "qminus11", "qplus11"; throws LabelError otherwise.
QuadraticClass parse_quadratic_class(const std::string& name);

// s is j for the (2) classes and k for the (1,1) classes; l is the eigenvalue
// of the central element L.
struct QuadLabel {
  Rational s = 0;
  Rational l = 0;
};

// Throws LabelError when the label is off the class lattice.
void validate(QuadraticClass c, const QuadLabel& label);

// nullopt means infinite.
std::optional<long long> dimension(QuadraticClass c, const QuadLabel& label);

// cutoff is required for the infinite class and ignored otherwise.
LadderRep build(QuadraticClass c, const QuadLabel& label,
                std::optional<long long> cutoff = std::nullopt);

// [Q+,Q-] with L, J, K replaced by their eigenvalues.
Polynomial structure_polynomial(QuadraticClass c, const QuadLabel& label);

// The exact Casimir constant g(x0 - 1) of the lowest-weight rep.
Rational casimir_value(QuadraticClass c, const QuadLabel& label);

// The quadratic rep as an exact lowest-weight component (for composition).
LowestWeightComponent quadratic_component(QuadraticClass c, const QuadLabel& label);

// The product construction behind each class: su(2) or su(1,1) times a boson.
struct QuadraticFactorization {
  LowestWeightComponent lie;
  LowestWeightComponent boson;
  Coupling coupling;
  Rational value;
};
QuadraticFactorization factorization(QuadraticClass c, const QuadLabel& label);

// The literature Casimir of each class, written as Q+Q- + h(Q0); returns h.
Polynomial printed_casimir_polynomial(QuadraticClass c, const QuadLabel& label);

struct ClosedFormCheck {
  std::string name;
  std::string formula;
  Rational printed = 0;
  Rational computed = 0;        // h(x0): the literature Casimir on the lowest state
  Rational normalized = 0;      // casimir_value, g(x0 - 1)
  bool operator_is_casimir = false;  // h(x) - g(x-1) is constant
  bool matches = false;         // printed == computed
};

// Literature closed forms that apply at this label, compared with the
// literature Casimir evaluated on the rep.
std::vector<ClosedFormCheck> casimir_closed_forms(QuadraticClass c, const QuadLabel& label);

}  // namespace polyalg
