#include "polyalg/fit.hpp"

#include "polyalg/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace polyalg {

double eval(const std::vector<double>& coeffs, double x) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PolyFit fit_polynomial(const std::vector<double>& xs, const std::vector<double>& ys, int degree) {
  if (xs.size() != ys.size()) throw ShapeError("fit: x and y lengths differ");
  if (degree < 0) throw ShapeError("fit: negative degree");
  const auto n = static_cast<Eigen::Index>(xs.size());
  const Eigen::Index p = degree + 1;
  if (n < p) {
    throw ShapeError("fit: " + std::to_string(n) + " samples cannot resolve degree " +
                     std::to_string(degree));
  }
  // Center and scale x so the Vandermonde columns stay well conditioned.
  double lo = *std::min_element(xs.begin(), xs.end());
  double hi = *std::max_element(xs.begin(), xs.end());
  double mid = 0.5 * (lo + hi);
  double half = std::max(0.5 * (hi - lo), 1.0);

  Eigen::MatrixXd v(n, p);
  Eigen::VectorXd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double t = (xs[static_cast<std::size_t>(i)] - mid) / half;
    double pw = 1.0;
    for (Eigen::Index c = 0; c < p; ++c) {
      v(i, c) = pw;
      pw *= t;
    }
    rhs(i) = ys[static_cast<std::size_t>(i)];
  }
  Eigen::VectorXd sol = v.colPivHouseholderQr().solve(rhs);

  // Expand sum_c sol_c ((x - mid)/half)^c back to powers of x.
  std::vector<double> coeffs(static_cast<std::size_t>(p), 0.0);
  std::vector<double> basis{1.0};  // coefficients of ((x-mid)/half)^c
  for (Eigen::Index c = 0; c < p; ++c) {
    for (std::size_t k = 0; k < basis.size(); ++k) coeffs[k] += sol(c) * basis[k];
    std::vector<double> next(basis.size() + 1, 0.0);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      next[k + 1] += basis[k] / half;
      next[k] -= basis[k] * mid / half;
    }
    basis = std::move(next);
  }

  PolyFit out;
  out.degree = degree;
  double res = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    res = std::max(res, std::abs((v.row(i) * sol)(0) - rhs(i)));
  }
  out.residual = res;
  out.coeffs = std::move(coeffs);
  return out;
}

PolyFit minimal_degree_fit(const std::vector<double>& xs, const std::vector<double>& ys,
                           int max_degree, double tol) {
  PolyFit last;
  for (int d = 0; d <= max_degree; ++d) {
    last = fit_polynomial(xs, ys, d);
    if (last.residual <= tol) return last;
  }
  return last;
}

BracketSamples bracket_samples(const LadderRep& rep) {
  BracketSamples s;
  std::size_t rows = rep.interior_rows();
  for (std::size_t i = 0; i < rows; ++i) {
    double up = i == 0 ? 0.0 : rep.raise_amps[i - 1] * rep.lower_amps[i - 1];
    double down = i + 1 < rep.dim ? rep.lower_amps[i] * rep.raise_amps[i] : 0.0;
    s.x.push_back(rep.n0_diag[i]);
    s.y.push_back(up - down);
  }
  return s;
}

}  // namespace polyalg
