#pragma once

#include "polyalg/polynomial.hpp"
#include "polyalg/rational.hpp"

#include <Eigen/Dense>

#include <map>
#include <string>
#include <vector>

namespace polyalg {

using Labels = std::map<std::string, Rational>;

// A ladder representation: N0 diagonal with unit spacing, N+ one step up,
// N- one step down. raise_amps[i] = <i+1|N+|i>, lower_amps[i] = <i|N-|i+1>.
struct LadderRep {
  std::size_t dim = 0;
  Labels labels;
  Rational n0_start = 0;  // exact lowest N0 eigenvalue; n0_diag[i] = n0_start + i
  std::vector<double> n0_diag;
  std::vector<double> raise_amps;
  std::vector<double> lower_amps;
  bool truncated = false;  // last row sits on a cutoff of an infinite rep

  // Rows whose commutator stencil stays inside the representation.
  std::size_t interior_rows() const { return truncated && dim > 0 ? dim - 1 : dim; }
};

// Builds a rep from exact squared amplitudes; radicands[i] is |<i+1|N+|i>|^2.
// A negative radicand throws LabelError (label outside the unitary regime).
LadderRep ladder_from_radicands(const Rational& n0_start, const std::vector<Rational>& radicands,
                                bool truncated, Labels labels = {});

// Throws std::invalid_argument on any violated LadderRep invariant.
void validate(const LadderRep& rep);

Eigen::MatrixXd n0_matrix(const LadderRep& rep);
Eigen::MatrixXd raise_matrix(const LadderRep& rep);
Eigen::MatrixXd lower_matrix(const LadderRep& rep);

struct Check {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string note;
};

struct VerificationReport {
  std::string subject;
  std::vector<Check> checks;

  const Check& add(std::string name, double residual, double tolerance, std::string note = {});
  bool passed() const;
  double max_residual() const;
  void merge(const VerificationReport& other, const std::string& prefix = {});
};

// Max-entry norm of a matrix restricted to its first `rows` rows.
double max_abs_rows(const Eigen::MatrixXd& m, std::size_t rows);

// Diagonal of C = N+N- + g(N0 - 1), g = antidifference(f).
std::vector<double> casimir_on_rep(const LadderRep& rep, const Polynomial& f);

// Exact Casimir of a lowest-weight rep: g(n0_start - 1).
Rational lowest_weight_casimir(const Rational& n0_start, const Polynomial& f);

// [N0,N+] - N+, [N0,N-] + N-, [N+,N-] - f(N0) on interior rows, max-entry norm.
VerificationReport verify_closure(const LadderRep& rep, const Polynomial& f, double tol);

// Spread (max - min) of the Casimir diagonal over interior rows.
double casimir_spread(const LadderRep& rep, const Polynomial& f);

}  // namespace polyalg
