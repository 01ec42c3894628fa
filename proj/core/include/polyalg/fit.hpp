#pragma once

#include "polyalg/ladder.hpp"

#include <vector>

namespace polyalg {

struct PolyFit {
  int degree = -1;
  std::vector<double> coeffs;  // lowest degree first
  double residual = 0.0;       // max |fit(x_i) - y_i|
};

// Least-squares fit of ys against 1, x, ..., x^degree. Throws ShapeError when
// there are fewer samples than unknowns.
PolyFit fit_polynomial(const std::vector<double>& xs, const std::vector<double>& ys, int degree);

// Smallest degree <= max_degree whose residual is <= tol; the max_degree fit
// is returned if none qualifies.
PolyFit minimal_degree_fit(const std::vector<double>& xs, const std::vector<double>& ys,
                           int max_degree, double tol);

struct BracketSamples {
  std::vector<double> x;  // N0 eigenvalue
  std::vector<double> y;  // ([N+,N-])_ii
};

// Diagonal of [N+,N-] over interior rows.
BracketSamples bracket_samples(const LadderRep& rep);

double eval(const std::vector<double>& coeffs, double x);

}  // namespace polyalg
