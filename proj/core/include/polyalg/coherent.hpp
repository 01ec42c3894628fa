#pragma once

#include "polyalg/ladder.hpp"
#include "polyalg/polynomial.hpp"
#include "polyalg/quadratic.hpp"

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <vector>

namespace polyalg {

using Complex = std::complex<double>;

enum class CoherentKind { BarutGirardello, Perelomov };

struct CoherentState {
  CoherentKind kind = CoherentKind::BarutGirardello;
  Labels rep_labels;
  Complex parameter;
  std::vector<Complex> coefficients;  // normalized
  double norm_constant = 1.0;         // 1 / ||raw coefficients||, raw c_0 = 1
  std::size_t truncation = 0;         // number of coefficients kept
  double tail_bound = 0.0;
};

// Eigenvector of the lowering generator: c_{n+1} = alpha c_n / lower_amps[n],
// c_0 = 1, truncated once |alpha c_last| / ||c|| < tol. Needs a truncated
// (infinite) rep; throws LabelError on a finite rep and ConvergenceError when
// the rep runs out of rows first.
CoherentState bg_state(const LadderRep& rep, Complex alpha, double tol);

// ||N- psi - alpha psi|| / ||psi|| computed with the rep matrices.
double bg_eigen_residual(const LadderRep& rep, const CoherentState& state);

// exp(gamma N+) on the lowest state: c_n = gamma^n prod_{i<n} raise_amps[i] / n!.
// Throws ConvergenceError on a truncated rep whose term ratio is >= 1 at the
// cutoff (the series diverges or has not started to converge).
CoherentState perelomov_state(const LadderRep& rep, Complex gamma, double tol = 1e-16);

struct MapResult {
  Eigen::MatrixXd matrix;
  VerificationReport report;
  double parameter = 0.0;  // alpha for the conjugate, epsilon for the deformation
};

// P~+ = P+ F(C,P0), F = (P0 + alpha)/(C - g(P0)), alpha = 1 - x0, checked for
// [P-, P~+] = 1 on rows below the top. A finite rep has a pole on its top
// state; it throws PoleError unless top_as_boundary is set, in which case the
// top state is left out of P~+ and out of the check.
MapResult canonical_conjugate(const LadderRep& rep, const Polynomial& f, double tol = 1e-10,
                              bool top_as_boundary = false);

// P-bar = P- G(C,P0), G = (-lambda (P0^2 - P0) + epsilon)/(C - g(P0 - 1)),
// checked for [P+, P-bar] = 2 lambda P0 on rows below the top. epsilon
// defaults to lambda x0 (x0 - 1), the value that makes the vacuum row hold.
MapResult deformation_map(const LadderRep& rep, const Polynomial& f, int lambda,
                          std::optional<double> epsilon = std::nullopt, double tol = 1e-10);

// Resolution of the identity for the finite Q-(1,1) states
// |gamma> ~ sum_n gamma^(k-2l+n) sqrt((2l-k)!(k+2l-1-n)!/(n!(2l-k-n)!(2k-1)!)) |n>
// with measure (1/2pi) p Phi(k-2l;1-2l-k;r^2) Phi(2l-k+2;k+2l+1;-r^2) d(r^2) dtheta.
// p = (2l-k+1)/(2l+k) normalizes the measure; the literature prefactor
// (2l-k+1)/(2l+k+1) is evaluated alongside.
struct IdentityCheck {
  VerificationReport report;
  std::vector<double> diagonal;           // with p
  double deviation = 0.0;                 // max |diag - 1|
  double literature_prefactor_deviation = 0.0;
};
IdentityCheck identity_check_finite(const QuadLabel& label, std::size_t quadrature_points,
                                    double tol = 1e-6);
// Reads k and l from a finite Q-(1,1) rep built by `build`.
IdentityCheck identity_check_finite(const LadderRep& rep, std::size_t quadrature_points,
                                    double tol = 1e-6);

}  // namespace polyalg
