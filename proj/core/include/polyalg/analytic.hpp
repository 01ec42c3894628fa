#pragma once

#include "polyalg/cubic.hpp"
#include "polyalg/ladder.hpp"
#include "polyalg/quadratic.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace polyalg {

// coefficient * z^z_power * (d/dz)^d_order
struct DiffTerm {
  int z_power = 0;
  int d_order = 0;
  double coefficient = 0.0;
};

struct DiffOp {
  std::vector<DiffTerm> terms;
  // Throws std::invalid_argument on a negative power or d_order > 4.
  void validate() const;
};

// psi_n = z^n / sqrt(w_n); stored as log w_n.
struct WeightedBasis {
  std::vector<double> log_weights;
  std::size_t size() const { return log_weights.size(); }
};

// M[m,n] with op(psi_n) = sum_m M[m,n] psi_m, from z^p d^q z^n = n!/(n-q)! z^(n-q+p).
Eigen::MatrixXd apply(const DiffOp& op, const WeightedBasis& basis, std::size_t dim);
// The same with all weights 1 (plain monomial calculus).
Eigen::MatrixXd monomial_matrix(const DiffOp& op, std::size_t dim);

struct AnalyticRealization {
  std::string name;
  DiffOp q0;
  DiffOp qplus;
  DiffOp qminus;
  WeightedBasis basis;
  // Coefficients solved against the ladder rep, e.g. {"qplus_linear", ...}.
  std::vector<std::pair<std::string, double>> solved;
};

// Single-variable realizations with their weighted bases; `dim` sets the
// number of basis functions for infinite reps. The two su(2)-based classes
// carry corrected coefficients (see `solved`).
AnalyticRealization class_realization(QuadraticClass c, const QuadLabel& label, std::size_t dim);

// Q+ = z, Q0 = z d/dz + x0, Q- = sum_q a_q z^(q-1) d^q where
// sum_q a_q N(N-1)...(N-q+1) = g(x0-1) - g(x0-1+N). Works for any
// lowest-weight rep; weights are products of squared raising amplitudes.
AnalyticRealization lowest_weight_realization(const Polynomial& f, const Rational& x0,
                                              std::size_t dim, std::string name = "generic");
AnalyticRealization class_realization(CubicClass c, const Labels& label, std::size_t dim);

// Solves the Q+ coefficients (z^2 d/dz and z terms) of the Q-(2) realization
// z^3 d^2 - b z^2 d + c z against the rep; returns (b, c). With only two
// basis states b is held at its literature value 2l+3j+1 and only c is solved.
std::pair<double, double> solve_qminus2_qplus(const QuadLabel& label);

// Max-entry difference between the realization's matrices and the rep on
// interior rows.
VerificationReport analytic_check(const AnalyticRealization& r, const LadderRep& rep, double tol);

// [M0, M+-] -+ M+- in plain monomial calculus.
double commutator_residual(const AnalyticRealization& r, std::size_t dim);

// Coefficients of 0F2(-; 2k, k-2l+1; alpha z) fed to the raw Q-(1,1)+ Q-:
// returns max |(Q- c)_n - alpha c_n| / ||c|| over n < terms-1 and the tail
// bound |alpha c_{terms-1}| / ||c||.
struct OdeResidual {
  double residual = 0.0;
  double tail_bound = 0.0;
};
OdeResidual bg_ode_residual(const QuadLabel& label, double alpha, std::size_t terms);

}  // namespace polyalg
