#include "polyalg/ladder.hpp"

#include "polyalg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace polyalg {

LadderRep ladder_from_radicands(const Rational& n0_start, const std::vector<Rational>& radicands,
                                bool truncated, Labels labels) {
  LadderRep rep;
  rep.dim = radicands.size() + 1;
  rep.labels = std::move(labels);
  rep.n0_start = n0_start;
  rep.truncated = truncated;
  double x0 = to_double(n0_start);
  for (std::size_t i = 0; i < rep.dim; ++i) rep.n0_diag.push_back(x0 + static_cast<double>(i));
  for (std::size_t i = 0; i < radicands.size(); ++i) {
    if (radicands[i] < 0) {
      throw LabelError("negative radicand " + to_string(radicands[i]) + " at index " +
                       std::to_string(i) + ": label outside the unitary regime");
    }
    double a = std::sqrt(to_double(radicands[i]));
    rep.raise_amps.push_back(a);
    rep.lower_amps.push_back(a);
  }
  return rep;
}

void validate(const LadderRep& rep) {
  if (rep.dim == 0) throw std::invalid_argument("ladder rep has dimension 0");
  if (rep.n0_diag.size() != rep.dim) throw std::invalid_argument("n0_diag length != dim");
  if (rep.raise_amps.size() + 1 != rep.dim || rep.lower_amps.size() + 1 != rep.dim) {
    throw std::invalid_argument("amplitude arrays must have length dim-1");
  }
  for (std::size_t i = 0; i + 1 < rep.dim; ++i) {
    if (std::abs(rep.n0_diag[i + 1] - rep.n0_diag[i] - 1.0) > 1e-12) {
      throw std::invalid_argument("n0_diag must increase with unit spacing");
    }
    if (rep.raise_amps[i] < 0 || rep.lower_amps[i] < 0) {
      throw std::invalid_argument("amplitudes must be nonnegative");
    }
    if (std::abs(rep.raise_amps[i] - rep.lower_amps[i]) > 1e-12 * (1.0 + rep.raise_amps[i])) {
      throw std::invalid_argument("raise_amps and lower_amps differ (N- is not the adjoint of N+)");
    }
  }
}

Eigen::MatrixXd n0_matrix(const LadderRep& rep) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rep.dim, rep.dim);
  for (std::size_t i = 0; i < rep.dim; ++i) m(i, i) = rep.n0_diag[i];
  return m;
}

Eigen::MatrixXd raise_matrix(const LadderRep& rep) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rep.dim, rep.dim);
  for (std::size_t i = 0; i + 1 < rep.dim; ++i) m(i + 1, i) = rep.raise_amps[i];
  return m;
}

Eigen::MatrixXd lower_matrix(const LadderRep& rep) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rep.dim, rep.dim);
  for (std::size_t i = 0; i + 1 < rep.dim; ++i) m(i, i + 1) = rep.lower_amps[i];
  return m;
}

const Check& VerificationReport::add(std::string name, double residual, double tolerance,
                                     std::string note) {
  Check c;
  c.name = std::move(name);
  c.residual = residual;
  c.tolerance = tolerance;
  c.passed = std::isfinite(residual) && residual <= tolerance;
  c.note = std::move(note);
  checks.push_back(std::move(c));
  return checks.back();
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

double VerificationReport::max_residual() const {
  double r = 0.0;
  for (const auto& c : checks) r = std::max(r, c.residual);
  return r;
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
  for (auto c : other.checks) {
    if (!prefix.empty()) c.name = prefix + c.name;
    checks.push_back(std::move(c));
  }
}

double max_abs_rows(const Eigen::MatrixXd& m, std::size_t rows) {
  rows = std::min<std::size_t>(rows, static_cast<std::size_t>(m.rows()));
  if (rows == 0 || m.cols() == 0) return 0.0;
  return m.topRows(static_cast<Eigen::Index>(rows)).cwiseAbs().maxCoeff();
}

std::vector<double> casimir_on_rep(const LadderRep& rep, const Polynomial& f) {
  Polynomial g = antidifference(f);
  std::vector<double> out(rep.dim);
  for (std::size_t i = 0; i < rep.dim; ++i) {
    double pp = i == 0 ? 0.0 : rep.raise_amps[i - 1] * rep.lower_amps[i - 1];
    out[i] = pp + g(rep.n0_diag[i] - 1.0);
  }
  return out;
}

Rational lowest_weight_casimir(const Rational& n0_start, const Polynomial& f) {
  return antidifference(f)(n0_start - 1);
}

VerificationReport verify_closure(const LadderRep& rep, const Polynomial& f, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  VerificationReport report;
  report.subject = "closure";
  const Eigen::MatrixXd n0 = n0_matrix(rep);
  const Eigen::MatrixXd np = raise_matrix(rep);
  const Eigen::MatrixXd nm = lower_matrix(rep);
  const std::size_t rows = rep.interior_rows();

  report.add("[N0,N+]-N+", max_abs_rows(n0 * np - np * n0 - np, rows), tol);
  report.add("[N0,N-]+N-", max_abs_rows(n0 * nm - nm * n0 + nm, rows), tol);

  Eigen::MatrixXd fn0 = Eigen::MatrixXd::Zero(rep.dim, rep.dim);
  for (std::size_t i = 0; i < rep.dim; ++i) fn0(i, i) = f(rep.n0_diag[i]);
  report.add("[N+,N-]-f(N0)", max_abs_rows(np * nm - nm * np - fn0, rows), tol);
  return report;
}

double casimir_spread(const LadderRep& rep, const Polynomial& f) {
  auto c = casimir_on_rep(rep, f);
  std::size_t rows = rep.interior_rows();
  if (rows == 0) return 0.0;
  auto [lo, hi] = std::minmax_element(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(rows));
  return *hi - *lo;
}

}  // namespace polyalg
