#pragma once

#include "polyalg/rational.hpp"

#include <cstddef>
#include <vector>

namespace polyalg {

struct HypergeomParams {
  std::vector<double> upper;
  std::vector<double> lower;
  double argument = 0.0;
};

// pFq by direct summation. Terminating series (an upper parameter is a
// nonpositive integer) are summed exactly in rational arithmetic; otherwise
// the sum stops once a term falls below tol relative to the partial sum.
// Throws ConvergenceError for p > q+1 without termination, for p = q+1 with
// |x| >= 1, or when max_terms is exhausted; LabelError when a lower
// parameter hits a nonpositive integer before termination.
double hypergeom(const HypergeomParams& params, std::size_t max_terms = 100000, double tol = 1e-16);

// Exact terminating pFq. Throws LabelError when the series does not terminate.
Rational hypergeom_exact(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                         const Rational& x);

// First n_terms terms of a possibly divergent series, with the last term kept
// as a formal tail indicator.
struct PartialSum {
  double value = 0.0;
  double last_term = 0.0;
};
PartialSum hypergeom_partial(const HypergeomParams& params, std::size_t n_terms);

}  // namespace polyalg
