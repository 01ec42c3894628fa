#include "polyalg/analytic.hpp"

#include "polyalg/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace polyalg {

void DiffOp::validate() const {
  for (const auto& t : terms) {
    if (t.z_power < 0 || t.d_order < 0) throw std::invalid_argument("negative power in DiffOp");
    if (t.d_order > 4) throw std::invalid_argument("DiffOp derivative order above 4");
  }
}

namespace {

double falling(std::size_t n, int q) {
  double v = 1.0;
  for (int i = 0; i < q; ++i) v *= static_cast<double>(n) - i;
  return v;
}

Eigen::MatrixXd build(const DiffOp& op, const std::vector<double>* logw, std::size_t dim) {
  op.validate();
  const auto d = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  for (std::size_t n = 0; n < dim; ++n) {
    for (const auto& t : op.terms) {
      if (static_cast<int>(n) < t.d_order) continue;
      long long target = static_cast<long long>(n) - t.d_order + t.z_power;
      if (target < 0 || target >= static_cast<long long>(dim)) continue;
      double v = t.coefficient * falling(n, t.d_order);
      if (logw) v *= std::exp(0.5 * ((*logw)[static_cast<std::size_t>(target)] - (*logw)[n]));
      m(static_cast<Eigen::Index>(target), static_cast<Eigen::Index>(n)) += v;
    }
  }
  return m;
}

DiffOp euler(double shift) { return {{{1, 1, 1.0}, {0, 0, shift}}}; }

double lfact(double x) { return std::lgamma(x + 1.0); }

}  // namespace

Eigen::MatrixXd apply(const DiffOp& op, const WeightedBasis& basis, std::size_t dim) {
  if (dim > basis.size()) throw ShapeError("basis has fewer weights than the requested dim");
  return build(op, &basis.log_weights, dim);
}

Eigen::MatrixXd monomial_matrix(const DiffOp& op, std::size_t dim) { return build(op, nullptr, dim); }

std::pair<double, double> solve_qminus2_qplus(const QuadLabel& lab) {
  // Q+ z^n = (n(n-1) - b n + c) z^(n+1) must equal (2j-n)(2l+j-n) z^(n+1)
  // for n = 0..dim-2 to reproduce the rep in the psi- basis.
  const double j = to_double(lab.s);
  const double l = to_double(lab.l);
  auto dim = *dimension(QuadraticClass::QMinus2, lab);
  const double b_lit = 2 * l + 3 * j + 1;
  if (dim <= 2) {
    double target = 2 * j * (2 * l + j);  // n = 0
    return {b_lit, target};
  }
  const auto rows = static_cast<Eigen::Index>(dim - 1);
  Eigen::MatrixXd a(rows, 2);
  Eigen::VectorXd rhs(rows);
  for (Eigen::Index n = 0; n < rows; ++n) {
    double nn = static_cast<double>(n);
    a(n, 0) = -nn;
    a(n, 1) = 1.0;
    rhs(n) = (2 * j - nn) * (2 * l + j - nn) - nn * (nn - 1);
  }
  Eigen::Vector2d x = a.colPivHouseholderQr().solve(rhs);
  return {x(0), x(1)};
}

AnalyticRealization class_realization(QuadraticClass c, const QuadLabel& lab, std::size_t dim) {
  auto d = dimension(c, lab);
  if (d) dim = static_cast<std::size_t>(*d);
  if (dim == 0) throw ShapeError("realization needs dim >= 1");
  const double s = to_double(lab.s);
  const double l = to_double(lab.l);
  AnalyticRealization r;
  r.name = to_string(c);
  r.basis.log_weights.resize(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    double n = static_cast<double>(i);
    double lw = 0.0;
    switch (c) {
      case QuadraticClass::QMinus2: lw = lfact(n) + lfact(2 * s - n) + lfact(2 * l + s - n); break;
      case QuadraticClass::QPlus2: lw = lfact(n) + lfact(2 * s - n) + lfact(n - 2 * l - s); break;
      case QuadraticClass::QMinus11: lw = lfact(n + 2 * s - 1) + lfact(n) + lfact(2 * l - s - n); break;
      case QuadraticClass::QPlus11: lw = lfact(n + 2 * s - 1) + lfact(n) + lfact(n + s - 2 * l); break;
    }
    r.basis.log_weights[i] = lw;
  }
  switch (c) {
    case QuadraticClass::QMinus2: {
      auto [b, cc] = solve_qminus2_qplus(lab);
      r.q0 = euler(-s - l);
      r.qplus = {{{3, 2, 1.0}, {2, 1, -b}, {1, 0, cc}}};
      r.qminus = {{{0, 1, 1.0}}};
      r.solved = {{"qplus_z2d", -b}, {"qplus_z", cc}};
      break;
    }
    case QuadraticClass::QPlus2: {
      double lin = -(2 * l + s - 1);
      r.q0 = euler(-s - l);
      r.qplus = {{{2, 1, -1.0}, {1, 0, 2 * s}}};
      r.qminus = {{{1, 2, 1.0}, {0, 1, lin}}};
      r.solved = {{"qminus_d", lin}};
      break;
    }
    case QuadraticClass::QMinus11:
      r.q0 = euler(s - l);
      r.qplus = {{{2, 1, -1.0}, {1, 0, 2 * l - s}}};
      r.qminus = {{{1, 2, 1.0}, {0, 1, 2 * s}}};
      break;
    case QuadraticClass::QPlus11:
      r.q0 = euler(s - l);
      r.qplus = {{{1, 0, 1.0}}};
      r.qminus = {{{2, 3, 1.0}, {1, 2, 3 * s - 2 * l + 2}, {0, 1, 2 * s * s - 4 * s * l + 2 * s}}};
      break;
  }
  return r;
}

AnalyticRealization lowest_weight_realization(const Polynomial& f, const Rational& x0,
                                              std::size_t dim, std::string name) {
  if (dim == 0) throw ShapeError("realization needs dim >= 1");
  const Polynomial g = antidifference(f);
  // R(N) = g(x0-1) - g(x0-1+N): squared amplitude of Q- on z^N.
  Polynomial rn = Polynomial::constant(g(x0 - 1)) - g.shift(x0 - 1);
  auto a = falling_factorial_coefficients(rn);
  AnalyticRealization r;
  r.name = std::move(name);
  r.q0 = euler(to_double(x0));
  r.qplus = {{{1, 0, 1.0}}};
  for (std::size_t q = 1; q < a.size(); ++q) {
    if (a[q] != 0) {
      r.qminus.terms.push_back({static_cast<int>(q) - 1, static_cast<int>(q), to_double(a[q])});
    }
  }
  r.basis.log_weights.assign(dim, 0.0);
  for (std::size_t n = 1; n < dim; ++n) {
    Rational sq = rn(Rational(static_cast<long long>(n)));
    if (sq <= 0) throw LabelError("nonpositive squared amplitude inside the basis range");
    r.basis.log_weights[n] = r.basis.log_weights[n - 1] + std::log(to_double(sq));
  }
  return r;
}

AnalyticRealization class_realization(CubicClass c, const Labels& label, std::size_t dim) {
  auto fz = factorization(c, label);
  auto chain = composite_chain(fz.a, fz.b, fz.coupling, fz.value, static_cast<long long>(dim));
  return lowest_weight_realization(structure_polynomial_cubic(c, label), chain.x0,
                                   chain.a_index.size(), to_string(c));
}

VerificationReport analytic_check(const AnalyticRealization& r, const LadderRep& rep, double tol) {
  const std::size_t dim = rep.dim;
  const std::size_t rows = rep.interior_rows();
  VerificationReport report;
  report.subject = "analytic:" + r.name;
  report.add("Q0", max_abs_rows(apply(r.q0, r.basis, dim) - n0_matrix(rep), rows), tol);
  report.add("Q+", max_abs_rows(apply(r.qplus, r.basis, dim) - raise_matrix(rep), rows), tol);
  report.add("Q-", max_abs_rows(apply(r.qminus, r.basis, dim) - lower_matrix(rep), rows), tol);
  return report;
}

double commutator_residual(const AnalyticRealization& r, std::size_t dim) {
  // One extra row of headroom: the product spills past dim otherwise.
  std::size_t big = dim + 4;
  Eigen::MatrixXd m0 = monomial_matrix(r.q0, big);
  Eigen::MatrixXd mp = monomial_matrix(r.qplus, big);
  Eigen::MatrixXd mm = monomial_matrix(r.qminus, big);
  Eigen::MatrixXd rp = m0 * mp - mp * m0 - mp;
  Eigen::MatrixXd rm = m0 * mm - mm * m0 + mm;
  return std::max(max_abs_rows(rp, dim), max_abs_rows(rm, dim));
}

OdeResidual bg_ode_residual(const QuadLabel& lab, double alpha, std::size_t terms) {
  if (terms < 2) throw ShapeError("need at least two series terms");
  const double k = to_double(lab.s);
  const double l = to_double(lab.l);
  auto r = class_realization(QuadraticClass::QPlus11, lab, terms);
  Eigen::VectorXd c(static_cast<Eigen::Index>(terms));
  c(0) = 1.0;
  for (std::size_t n = 0; n + 1 < terms; ++n) {
    double nn = static_cast<double>(n);
    c(static_cast<Eigen::Index>(n + 1)) =
        c(static_cast<Eigen::Index>(n)) * alpha / ((nn + 1) * (2 * k + nn) * (k - 2 * l + 1 + nn));
  }
  Eigen::VectorXd qc = monomial_matrix(r.qminus, terms) * c;
  double norm = c.norm();
  OdeResidual out;
  for (std::size_t n = 0; n + 1 < terms; ++n) {
    auto i = static_cast<Eigen::Index>(n);
    out.residual = std::max(out.residual, std::abs(qc(i) - alpha * c(i)) / norm);
  }
  out.tail_bound = std::abs(alpha * c(static_cast<Eigen::Index>(terms - 1))) / norm;
  return out;
}

}  // namespace polyalg
