#pragma once

#include "polyalg/algebra.hpp"
#include "polyalg/fit.hpp"
#include "polyalg/ladder.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace polyalg {

struct ComposedAlgebra {
  LadderRep left;
  LadderRep right;
  int left_order = -1;  // degree of the factor's f, -1 when unknown
  int right_order = -1;
  Coupling coupling = Coupling::Same;
  Rational pi_value = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (left index, right index) per state
  LadderRep product_rep;
};

// Pi+ = L+ R+ (Same) or L+ R- (Opposite) on the tensor states whose conserved
// combination, (L0 - R0)/2 or (L0 + R0)/2, equals pi_value. The chain is
// marked truncated when it ends on a factor's truncation row; a chain whose
// lowest state would sit beyond a truncation throws ShapeError. An empty
// subspace throws LabelError.
ComposedAlgebra compose(const LadderRep& left, const LadderRep& right, const Rational& pi_value,
                        Coupling coupling = Coupling::Same, int left_order = -1,
                        int right_order = -1);

// Smallest-degree fit of diag([Pi+,Pi-]) against powers of Pi0, up to
// left_order + right_order + 1. Throws ShapeError with fewer than
// left_order + right_order + 3 interior rows.
PolyFit fit_order(const ComposedAlgebra& comp, double tol = 1e-9);

}  // namespace polyalg
