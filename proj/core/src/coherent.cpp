#include "polyalg/coherent.hpp"

#include "polyalg/errors.hpp"
#include "polyalg/hypergeom.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/hypergeometric_1F1.hpp>

#include <algorithm>
#include <cmath>

namespace polyalg {

namespace {

double norm_of(const std::vector<Complex>& c) {
  double s = 0.0;
  for (const auto& v : c) s += std::norm(v);
  return std::sqrt(s);
}

void normalize(CoherentState& st) {
  double n = norm_of(st.coefficients);
  st.norm_constant = 1.0 / n;
  for (auto& v : st.coefficients) v /= n;
}

Eigen::VectorXcd as_vector(const std::vector<Complex>& c, std::size_t dim) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < c.size() && i < dim; ++i) v(static_cast<Eigen::Index>(i)) = c[i];
  return v;
}

}  // namespace

CoherentState bg_state(const LadderRep& rep, Complex alpha, double tol) {
  if (!rep.truncated) {
    throw LabelError("Barut-Girardello states need an infinite (truncated) representation");
  }
  if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
  CoherentState st;
  st.kind = CoherentKind::BarutGirardello;
  st.rep_labels = rep.labels;
  st.parameter = alpha;
  st.coefficients.push_back(1.0);
  double sq = 1.0;
  for (std::size_t n = 0;; ++n) {
    double tail = std::abs(alpha * st.coefficients.back()) / std::sqrt(sq);
    if (tail < tol) {
      st.tail_bound = tail;
      break;
    }
    // The last row of a truncated rep is a boundary; its amplitude is unusable.
    if (n + 2 >= rep.dim) {
      throw ConvergenceError("BG series needs more rows than the truncated rep provides");
    }
    if (rep.lower_amps[n] <= 0.0) throw ConvergenceError("lowering amplitude vanishes");
    Complex next = alpha * st.coefficients.back() / rep.lower_amps[n];
    st.coefficients.push_back(next);
    sq += std::norm(next);
  }
  st.truncation = st.coefficients.size();
  normalize(st);
  return st;
}

double bg_eigen_residual(const LadderRep& rep, const CoherentState& st) {
  Eigen::VectorXcd v = as_vector(st.coefficients, rep.dim);
  Eigen::MatrixXcd lower = lower_matrix(rep).cast<Complex>();
  return (lower * v - st.parameter * v).norm() / v.norm();
}

CoherentState perelomov_state(const LadderRep& rep, Complex gamma, double tol) {
  CoherentState st;
  st.kind = CoherentKind::Perelomov;
  st.rep_labels = rep.labels;
  st.parameter = gamma;
  st.coefficients.push_back(1.0);
  if (!rep.truncated) {
    for (std::size_t n = 0; n + 1 < rep.dim; ++n) {
      st.coefficients.push_back(st.coefficients.back() * gamma * rep.raise_amps[n] /
                                static_cast<double>(n + 1));
    }
    st.truncation = st.coefficients.size();
    normalize(st);
    return st;
  }
  // Ratio test on the last usable amplitude of the truncation.
  if (rep.dim < 3) throw ConvergenceError("truncated rep too short for a ratio test");
  std::size_t last = rep.dim - 3;
  double ratio = std::abs(gamma) * rep.raise_amps[last] / static_cast<double>(last + 1);
  if (ratio >= 1.0) {
    throw ConvergenceError("Perelomov series diverges or is not yet converging at the cutoff");
  }
  double sq = 1.0;
  for (std::size_t n = 0; n + 2 < rep.dim; ++n) {
    Complex next = st.coefficients.back() * gamma * rep.raise_amps[n] / static_cast<double>(n + 1);
    st.coefficients.push_back(next);
    sq += std::norm(next);
    double r = std::abs(gamma) * rep.raise_amps[std::min(n + 1, last)] / static_cast<double>(n + 2);
    double tail = r < 1.0 ? std::abs(next) * r / (1.0 - r) / std::sqrt(sq) : 1.0;
    if (tail < tol) break;
  }
  double r = std::abs(gamma) * rep.raise_amps[last] / static_cast<double>(last + 1);
  st.tail_bound = std::abs(st.coefficients.back()) * r / (1.0 - r) / std::sqrt(sq);
  st.truncation = st.coefficients.size();
  normalize(st);
  return st;
}

MapResult canonical_conjugate(const LadderRep& rep, const Polynomial& f, double tol,
                              bool top_as_boundary) {
  const Polynomial g = antidifference(f);
  const double x0 = rep.n0_diag.front();
  const double c = g(x0 - 1.0);
  const double alpha = 1.0 - x0;
  const auto d = static_cast<Eigen::Index>(rep.dim);
  const std::size_t last = rep.dim - 1;
  Eigen::MatrixXd pt = Eigen::MatrixXd::Zero(d, d);
  for (std::size_t n = 0; n + 1 < rep.dim; ++n) {
    double x = rep.n0_diag[n];
    double den = c - g(x);
    if (std::abs(den) < 1e-12) throw PoleError("C - g(P0) vanishes on state " + std::to_string(n));
    pt(static_cast<Eigen::Index>(n + 1), static_cast<Eigen::Index>(n)) =
        rep.raise_amps[n] * (x + alpha) / den;
  }
  if (!rep.truncated && !top_as_boundary) {
    double den = c - g(rep.n0_diag[last]);
    if (std::abs(den) < 1e-12) {
      throw PoleError("F(C,P0) diverges on the highest state of a finite representation");
    }
  }
  Eigen::MatrixXd lower = lower_matrix(rep);
  Eigen::MatrixXd comm = lower * pt - pt * lower - Eigen::MatrixXd::Identity(d, d);
  MapResult out;
  out.matrix = pt;
  out.parameter = alpha;
  out.report.subject = "canonical_conjugate";
  out.report.add("[P-,P~+]-1", max_abs_rows(comm, last), tol, std::to_string(last) + " rows");
  return out;
}

MapResult deformation_map(const LadderRep& rep, const Polynomial& f, int lambda,
                          std::optional<double> epsilon, double tol) {
  if (lambda != 1 && lambda != -1) throw std::invalid_argument("lambda must be +1 or -1");
  const Polynomial g = antidifference(f);
  const double x0 = rep.n0_diag.front();
  const double c = g(x0 - 1.0);
  const double eps = epsilon.value_or(lambda * x0 * (x0 - 1.0));
  const auto d = static_cast<Eigen::Index>(rep.dim);
  Eigen::MatrixXd pbar = Eigen::MatrixXd::Zero(d, d);
  // The vacuum column stays zero: P- annihilates it before G's pole matters.
  for (std::size_t n = 1; n < rep.dim; ++n) {
    double x = rep.n0_diag[n];
    double den = c - g(x - 1.0);
    if (std::abs(den) < 1e-12) throw PoleError("C - g(P0-1) vanishes on state " + std::to_string(n));
    double gval = (-lambda * (x * x - x) + eps) / den;
    pbar(static_cast<Eigen::Index>(n - 1), static_cast<Eigen::Index>(n)) = rep.lower_amps[n - 1] * gval;
  }
  Eigen::MatrixXd raise = raise_matrix(rep);
  Eigen::MatrixXd target = 2.0 * lambda * n0_matrix(rep);
  Eigen::MatrixXd comm = raise * pbar - pbar * raise - target;
  const std::size_t rows = rep.dim - 1;
  MapResult out;
  out.matrix = pbar;
  out.parameter = eps;
  out.report.subject = "deformation_map";
  out.report.add("[P+,P-bar]-2*lambda*P0", max_abs_rows(comm, rows), tol,
                 std::to_string(rows) + " rows");
  return out;
}

IdentityCheck identity_check_finite(const QuadLabel& label, std::size_t quadrature_points,
                                    double tol) {
  validate(QuadraticClass::QMinus11, label);
  const double k = to_double(label.s);
  const double l = to_double(label.l);
  const long long m = to_integer(2 * label.l - label.s);
  const std::size_t dim = static_cast<std::size_t>(m + 1);

  // |N|^2 |gamma|^(2(k-2l+n)) = x^n / S(x), S(x) = sum_m w_m x^m.
  std::vector<double> w(dim);
  for (std::size_t n = 0; n < dim; ++n) {
    double nn = static_cast<double>(n);
    w[n] = std::exp(std::lgamma(m + 1.0) + std::lgamma(k + 2 * l - nn) - std::lgamma(nn + 1) -
                    std::lgamma(m - nn + 1) - std::lgamma(2 * k));
  }
  // Phi(k-2l; 1-2l-k; x) terminates after m+1 terms.
  std::vector<double> phi1(dim);
  {
    Rational a = label.s - 2 * label.l;
    Rational b = 1 - 2 * label.l - label.s;
    Rational term = 1;
    for (std::size_t n = 0; n < dim; ++n) {
      phi1[n] = to_double(term);
      if (n + 1 == dim) break;
      term = term * (a + static_cast<long long>(n)) / ((b + static_cast<long long>(n)) * (static_cast<long long>(n) + 1));
    }
  }
  auto poly = [](const std::vector<double>& c, double x) {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  };
  const double a2 = static_cast<double>(m) + 2.0;
  const double c2 = 2 * l + k + 1.0;
  const double pref = (2 * l - k + 1.0) / (2 * l + k);
  const double pref_lit = (2 * l - k + 1.0) / (2 * l + k + 1.0);

  // x = t/(1-t) maps [0,inf) to [0,1); the integrand stays bounded at t = 1.
  constexpr unsigned kNodes = 20;
  const std::size_t panels = std::max<std::size_t>(1, quadrature_points / kNodes);
  IdentityCheck out;
  out.diagonal.assign(dim, 0.0);
  for (std::size_t n = 0; n < dim; ++n) {
    auto integrand = [&](double t) {
      if (t >= 1.0) return 0.0;
      double x = t / (1.0 - t);
      double jac = 1.0 / ((1.0 - t) * (1.0 - t));
      double phi2 = boost::math::hypergeometric_1F1(a2, c2, -x);
      return w[n] * std::pow(x, static_cast<double>(n)) * poly(phi1, x) / poly(w, x) * phi2 * jac;
    };
    double sum = 0.0;
    for (std::size_t p = 0; p < panels; ++p) {
      double lo = static_cast<double>(p) / static_cast<double>(panels);
      double hi = static_cast<double>(p + 1) / static_cast<double>(panels);
      sum += boost::math::quadrature::gauss<double, kNodes>::integrate(integrand, lo, hi);
    }
    out.diagonal[n] = pref * sum;
  }
  double dev = 0.0;
  double dev_lit = 0.0;
  for (double v : out.diagonal) {
    dev = std::max(dev, std::abs(v - 1.0));
    dev_lit = std::max(dev_lit, std::abs(v * pref_lit / pref - 1.0));
  }
  out.deviation = dev;
  out.literature_prefactor_deviation = dev_lit;
  out.report.subject = "identity_check_finite";
  out.report.add("projector", dev, tol,
                 "literature prefactor deviation " + std::to_string(dev_lit));
  return out;
}

IdentityCheck identity_check_finite(const LadderRep& rep, std::size_t quadrature_points,
                                    double tol) {
  auto k = rep.labels.find("k");
  auto l = rep.labels.find("l");
  if (rep.truncated || k == rep.labels.end() || l == rep.labels.end()) {
    throw LabelError("identity check needs a finite Q-(1,1) rep labelled by k and l");
  }
  QuadLabel lab{k->second, l->second};
  if (dimension(QuadraticClass::QMinus11, lab) != static_cast<long long>(rep.dim)) {
    throw LabelError("rep dimension does not match the Q-(1,1) label");
  }
  return identity_check_finite(lab, quadrature_points, tol);
}

}  // namespace polyalg
