#pragma once

#include "polyalg/algebra.hpp"
#include "polyalg/fit.hpp"
#include "polyalg/ladder.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polyalg {

// Product of two lowest-weight algebras; "minus" couples A+ with B-, "plus"
// couples A+ with B+. The q-h classes pair a quadratic Q-(1,1) or Q+(1,1) with
// a boson mode.
enum class CubicClass {
  CMinus11_11,
  CPlus11_11,
  CMinus2_2,
  CPlus2_2,
  CMinus2_11,
  CPlus2_11,
  CPlusQm11_h,
  CMinusQm11_h,
  CPlusQp11_h,
  CMinusQp11_h,
};

inline constexpr CubicClass kCubicClasses[] = {
    CubicClass::CMinus11_11, CubicClass::CPlus11_11,  CubicClass::CMinus2_2,
    CubicClass::CPlus2_2,    CubicClass::CMinus2_11,  CubicClass::CPlus2_11,
    CubicClass::CPlusQm11_h, CubicClass::CMinusQm11_h, CubicClass::CPlusQp11_h,
    CubicClass::CMinusQp11_h};

std::string to_string(CubicClass c);
CubicClass parse_cubic_class(const std::string& name);

// Label keys the class needs, e.g. {"k1","k2","k"}.
std::vector<std::string> label_keys(CubicClass c);

// Throws LabelError when a required key is missing.
struct CubicFactorization {
  LowestWeightComponent a;
  LowestWeightComponent b;
  Coupling coupling;
  Rational value;
};
CubicFactorization factorization(CubicClass c, const Labels& label);

// Dimension rule evaluated on the labels (nullopt = infinite). It does not
// require the conserved value to sit on the product lattice; build_cubic does.
std::optional<long long> dimension_cubic(CubicClass c, const Labels& label);

LadderRep build_cubic(CubicClass c, const Labels& label,
                      std::optional<long long> cutoff = std::nullopt);

// Exact [C+,C-] in C0 from the factor Casimirs.
Polynomial structure_polynomial_cubic(CubicClass c, const Labels& label);

// Least-squares cross-check of the bracket diagonal of a built rep.
PolyFit fit_structure_cubic(CubicClass c, const Labels& label, long long cutoff, double tol);

Rational casimir_value_cubic(CubicClass c, const Labels& label);

// Cubic brackets in the literature form, for classes where one is known.
struct PrintedBracket {
  std::string formula;
  Polynomial printed;
  Polynomial computed;
  bool matches = false;
};
std::optional<PrintedBracket> printed_bracket(CubicClass c, const Labels& label);

// C-(11,11) with k1 == k2 reduces to [C+,C-] = h C0^3 + 2a C0.
struct HiggsReduction {
  Rational h = -4;
  Rational a = 0;          // from the exact bracket
  Rational a_printed = 0;  // 2k^2 - k1(1-k1)
  bool bracket_matches = false;
};
// Throws std::invalid_argument when k1 != k2.
HiggsReduction higgs_reduction(const Labels& label);

}  // namespace polyalg
