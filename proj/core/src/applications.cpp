#include "polyalg/applications.hpp"

#include "polyalg/algebra.hpp"
#include "polyalg/cubic.hpp"
#include "polyalg/errors.hpp"
#include "polyalg/fit.hpp"
#include "polyalg/fock.hpp"
#include "polyalg/quadratic.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace polyalg {

namespace {

std::vector<double> sorted_eigenvalues(const Eigen::MatrixXcd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& v = es.eigenvalues();
  return {v.data(), v.data() + v.size()};
}

double mean(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

// Adds one block to the spectrum and returns the aligned max deviation.
double add_block(BlockSpectrum& s, std::string label, std::vector<double> block,
                 std::vector<double> oracle) {
  double off = mean(oracle) - mean(block);
  double dev = 0.0;
  if (block.size() != oracle.size()) {
    dev = std::numeric_limits<double>::infinity();
  } else {
    for (std::size_t i = 0; i < block.size(); ++i) {
      dev = std::max(dev, std::abs(oracle[i] - off - block[i]));
    }
  }
  s.block_labels.push_back(std::move(label));
  s.eigenvalues.push_back(std::move(block));
  s.oracle_eigenvalues.push_back(std::move(oracle));
  s.offsets.push_back(off);
  return dev;
}

double max_abs(const Eigen::MatrixXd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

Eigen::MatrixXd comm(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) { return a * b - b * a; }

// Spin-j Schwinger pair on modes 0, 1: the states n0 + n1 = 2j, or every
// second one of them, ordered by J0.
struct SchwingerLadder {
  FockSpace space;
  std::vector<std::size_t> states;
};

SchwingerLadder schwinger_ladder(const Rational& j, int step) {
  if (j <= 0 || !is_half_integer_lattice(j)) {
    throw LabelError("spin must be a positive half-integer, got " + to_string(j));
  }
  int two_j = static_cast<int>(to_integer(2 * j, "2j"));
  SchwingerLadder out{FockSpace::uniform(2, two_j + 1), {}};
  for (int n0 = 0; n0 <= two_j; n0 += step) out.states.push_back(out.space.index({n0, two_j - n0}));
  return out;
}

const Expr& jplus_expr() {
  static const Expr e = Expr::ad(0) * Expr::a(1);
  return e;
}

const Expr& jzero_expr() {
  static const Expr e = 0.5 * (Expr::n(0) - Expr::n(1));
  return e;
}

}  // namespace

DegeneracyResult aniso_degeneracy(long long N) {
  if (N < 0) throw std::invalid_argument("N must be nonnegative");
  DegeneracyResult r;
  r.N = N;
  for (long long n3 = 0; 2 * n3 <= N; ++n3) {
    long long rest = N - 2 * n3;
    r.ordered_count += rest + 1;
    r.unordered_count += rest / 2 + 1;
  }
  const long long m = N / 4;
  switch (N % 4) {
    case 0: r.closed_form_ordered = (2 * m + 1) * (2 * m + 1); break;
    case 1: r.closed_form_ordered = (2 * m + 1) * (2 * m + 2); break;
    case 2: r.closed_form_ordered = 4 * (m + 1) * (m + 1); break;
    default: r.closed_form_ordered = 2 * (m + 1) * (2 * m + 3); break;
  }
  r.closed_form_unordered = N % 4 < 2 ? (m + 1) * (2 * m + 1) : (m + 1) * (2 * m + 3);

  const Rational l = Rational(N + 1) / 4;
  const Rational half = Rational(1, 2);
  for (Rational k = 2 * l; k >= half; k -= 1) {
    auto d = dimension(QuadraticClass::QMinus11, {k, l});
    r.census_count += (k == half ? 1 : 2) * *d;
  }
  return r;
}

VerificationReport quadratic_oscillator_check(double tol) {
  VerificationReport report;
  report.subject = "quadratic-oscillator";

  // Printed fermion bracket 1 - N/2 - 3N^2/2 on the 2x2 fermion.
  const Polynomial fermion{Rational(1), Rational(-1, 2), Rational(-3, 2)};
  Eigen::MatrixXd f = Eigen::MatrixXd::Zero(2, 2);
  f(0, 1) = 1.0;
  Eigen::MatrixXd fd = f.transpose();
  Eigen::MatrixXd target = Eigen::MatrixXd::Zero(2, 2);
  for (int n = 0; n < 2; ++n) target(n, n) = fermion(static_cast<double>(n));
  report.add("fermion [f,f+]", max_abs(f * fd - fd * f - target), tol);
  report.add("fermion f^2", max_abs(f * f), tol);

  // A = Q-/sqrt(D), D = L(L+1) - K, on Q-(1,1) reps; [A,A+] = -f(N + x0)/D.
  auto bracket_check = [&](const QuadLabel& lab, double scale) {
    LadderRep rep = build(QuadraticClass::QMinus11, lab);
    Rational d = lab.l * (lab.l + 1) - lab.s * (1 - lab.s);
    double dd = to_double(d) * scale;
    Eigen::MatrixXd a = lower_matrix(rep) / std::sqrt(dd);
    Eigen::MatrixXd ad = raise_matrix(rep) / std::sqrt(dd);
    Polynomial p = structure_polynomial(QuadraticClass::QMinus11, lab);
    Eigen::MatrixXd want = Eigen::MatrixXd::Zero(rep.dim, rep.dim);
    for (std::size_t i = 0; i < rep.dim; ++i) want(i, i) = -p(rep.n0_diag[i]) / dd;
    return std::make_pair(max_abs(a * ad - ad * a - want), (a * ad - ad * a).eval());
  };

  const QuadLabel k1l1{1, 1};
  auto [res11, br11] = bracket_check(k1l1, 1.0);
  report.add("k=1,l=1 [A,A+]", res11, tol);
  // At k = l = 1 the rep is two-dimensional, N0 starts at 0 and D = 2.
  double dev = 0.0;
  for (int n = 0; n < 2; ++n) dev = std::max(dev, std::abs(br11(n, n) - fermion(double(n))));
  report.add("k=1,l=1 matches fermion bracket", dev, tol);

  const QuadLabel big{1, 3};
  auto [res13, br13] = bracket_check(big, 1.0);
  report.add("k=1,l=3 [A,A+]", res13, tol);
  auto [res13b, br13b] = bracket_check(big, 2.0);
  (void)res13b;
  LadderRep rep = build(QuadraticClass::QMinus11, big);
  std::vector<double> xs(rep.n0_diag), y1, y2;
  for (std::size_t i = 0; i < rep.dim; ++i) {
    y1.push_back(br13(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)));
    y2.push_back(br13b(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)));
  }
  PolyFit f1 = fit_polynomial(xs, y1, 2);
  PolyFit f2 = fit_polynomial(xs, y2, 2);
  report.add("doubling D halves the quadratic coefficient",
             std::abs(f2.coeffs[2] / f1.coeffs[2] - 0.5), 1e-9);
  return report;
}

SpectrumResult dicke_spectrum(const Rational& j, const Rational& l_max, double omega, double kappa,
                              std::optional<int> photon_levels, double tol) {
  if (j <= 0 || !is_half_integer_lattice(j)) {
    throw LabelError("spin must be a positive half-integer, got " + to_string(j));
  }
  const Rational l_min = -j / 2;
  if (l_max < l_min) throw LabelError("l_max below the lowest block " + to_string(l_min));
  const int spins = static_cast<int>(to_integer(2 * j, "2j")) + 1;
  // Highest photon number in block l is 2l + j (at m = -j).
  Rational top = l_min;
  while (top + Rational(1, 2) <= l_max) top += Rational(1, 2);
  const int needed = static_cast<int>(to_integer(2 * top + j, "2l+j")) + 1;
  const int photons = photon_levels.value_or(needed);
  if (photons < needed) {
    throw ShapeError("photon cutoff " + std::to_string(photons) + " cannot hold block l=" +
                     to_string(top) + "; need " + std::to_string(needed));
  }

  // Dense H on spin (x) Fock, index = i + spins * n with m = -j + i.
  const int size = spins * photons;
  const double jd = to_double(j);
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(size, size);
  for (int n = 0; n < photons; ++n) {
    for (int i = 0; i < spins; ++i) {
      double m = -jd + i;
      int s = i + spins * n;
      h(s, s) = omega * (m + n);
      // J+ a: (i, n) -> (i+1, n-1)
      if (i + 1 < spins && n > 0) {
        double amp = std::sqrt((jd - m) * (jd + m + 1)) * std::sqrt(static_cast<double>(n));
        int t = (i + 1) + spins * (n - 1);
        h(t, s) += kappa * amp;
        h(s, t) += kappa * amp;
      }
    }
  }

  SpectrumResult out;
  out.report.subject = "dicke j=" + to_string(j);
  double worst = 0.0, worst_offset = 0.0;
  for (Rational l = l_min; l <= l_max; l += Rational(1, 2)) {
    std::vector<Eigen::Index> idx;
    for (int n = 0; n < photons; ++n) {
      for (int i = 0; i < spins; ++i) {
        if (Rational(-j + i + n) == 2 * l) idx.push_back(i + spins * n);
      }
    }
    Eigen::MatrixXcd ho(idx.size(), idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a) {
      for (std::size_t b = 0; b < idx.size(); ++b) ho(a, b) = h(idx[a], idx[b]);
    }
    LadderRep rep = build(QuadraticClass::QMinus2, {j, l});
    Eigen::MatrixXd hb = 2.0 * omega * to_double(l) * Eigen::MatrixXd::Identity(rep.dim, rep.dim) +
                         kappa * (raise_matrix(rep) + lower_matrix(rep));
    double dev = add_block(out.spectrum, "l=" + to_string(l), sorted_eigenvalues(hb.cast<Complex>()),
                           sorted_eigenvalues(ho));
    worst = std::max(worst, dev);
    worst_offset = std::max(worst_offset, std::abs(out.spectrum.offsets.back()));
  }
  out.report.add("block spectra vs dense oracle", worst, tol,
                 std::to_string(out.spectrum.block_labels.size()) + " blocks, max |offset| " +
                     std::to_string(worst_offset));
  return out;
}

SpectrumResult trilinear_spectrum(long long epsilon, double omega_a, Complex kappa, long long c_bc,
                                  double tol) {
  if (epsilon < 0) throw std::invalid_argument("epsilon must be nonnegative");
  if (c_bc < 0) throw std::invalid_argument("c_bc must be nonnegative (swap b and c)");
  if (c_bc > epsilon) throw LabelError("sector n_b - n_c = c_bc is empty for this epsilon");
  const QuadLabel lab{Rational(c_bc + 1, 2), Rational(2 * epsilon - c_bc + 1, 4)};
  LadderRep rep = build(QuadraticClass::QMinus11, lab);

  const int levels = static_cast<int>(epsilon) + 2;
  FockSpace space = FockSpace::uniform(3, levels);
  std::vector<std::size_t> sub;
  for (long long nb = c_bc; nb <= epsilon; ++nb) {
    sub.push_back(space.index({static_cast<int>(epsilon - nb), static_cast<int>(nb),
                               static_cast<int>(nb - c_bc)}));
  }
  Expr number = Expr::n(0) + 0.5 * (Expr::n(1) + Expr::n(2));
  Expr up = Expr::ad(1) * Expr::ad(2) * Expr::a(0);
  Expr down = Expr::ad(0) * Expr::a(1) * Expr::a(2);
  Eigen::MatrixXcd ho = omega_a * restrict(space, number, sub).cast<Complex>() +
                        kappa * restrict(space, up, sub).cast<Complex>() +
                        std::conj(kappa) * restrict(space, down, sub).cast<Complex>();

  const double diag = omega_a * (static_cast<double>(epsilon) - 0.5 * static_cast<double>(c_bc));
  Eigen::MatrixXcd hb = diag * Eigen::MatrixXcd::Identity(rep.dim, rep.dim) +
                        kappa * raise_matrix(rep).cast<Complex>() +
                        std::conj(kappa) * lower_matrix(rep).cast<Complex>();

  SpectrumResult out;
  out.report.subject = "trilinear";
  double dev = add_block(out.spectrum, "epsilon=" + std::to_string(epsilon),
                         sorted_eigenvalues(hb), sorted_eigenvalues(ho));
  out.report.add("block spectrum vs dense oracle", dev, tol,
                 "offset " + std::to_string(out.spectrum.offsets.back()));
  return out;
}

TrilinearAmplitudes trilinear_amplitudes(long long epsilon) {
  if (epsilon < 0) throw std::invalid_argument("epsilon must be nonnegative");
  LadderRep rep = build(QuadraticClass::QMinus11, {Rational(1, 2), Rational(2 * epsilon + 1, 4)});
  TrilinearAmplitudes t;
  const double e = static_cast<double>(epsilon);
  bool ok = true;
  for (long long n = 0; n < epsilon; ++n) {
    const double nd = static_cast<double>(n);
    t.printed_raise.push_back(std::sqrt(nd * nd * (e + 1 - nd)));
    t.oracle_raise.push_back(rep.raise_amps[static_cast<std::size_t>(n)]);
    t.printed_lower.push_back(std::sqrt((nd + 2) * (nd + 2) * (e - nd - 1)));
    t.oracle_lower.push_back(rep.lower_amps[static_cast<std::size_t>(n)]);
    ok = ok && std::abs(t.printed_raise.back() - t.oracle_raise.back()) < 1e-12 &&
         std::abs(t.printed_lower.back() - t.oracle_lower.back()) < 1e-12;
  }
  t.q0_offset = rep.n0_diag[0] + e / 2;
  t.printed_matches = ok && std::abs(t.q0_offset) < 1e-12;
  return t;
}

CalogeroResult calogero_cubic(const Rational& j, double tol) {
  SchwingerLadder ladder = schwinger_ladder(j, 2);
  const auto& sp = ladder.space;
  const auto& st = ladder.states;
  Eigen::MatrixXd c0 = restrict(sp, jzero_expr(), st);
  Eigen::MatrixXd cp = restrict(sp, 0.5 * (jplus_expr() * jplus_expr()), st);
  Eigen::MatrixXd cm = cp.transpose();
  const double cj = to_double(j * (j + 1));
  Eigen::MatrixXd want = -2.0 * c0 * c0 * c0 + (2.0 * cj - 1.0) * c0;

  CalogeroResult r;
  r.report.subject = "calogero j=" + to_string(j);
  r.report.add("[C0,C+]-2C+", max_abs(comm(c0, cp) - 2.0 * cp), tol);
  r.report.add("[C+,C-]+2C0^3-(2C(J)-1)C0", max_abs(comm(cp, cm) - want), tol);

  const double jd = to_double(j);
  for (std::size_t i = 0; i + 1 < st.size(); ++i) {
    double m = c0(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i));
    r.oracle_raise.push_back(cp(static_cast<Eigen::Index>(i + 1), static_cast<Eigen::Index>(i)));
    r.printed_raise.push_back(std::sqrt((jd - m) * (jd + m + 1) * (jd - 1 - m) * (jd + 2 + m)));
  }
  r.amplitude_ratio = r.oracle_raise.empty() ? std::numeric_limits<double>::quiet_NaN()
                                             : r.printed_raise[0] / r.oracle_raise[0];
  return r;
}

HahnSource HahnSource::calogero(const Rational& j) {
  HahnSource s;
  s.kind = Kind::Calogero;
  s.j = j;
  return s;
}

HahnSource HahnSource::singular_oscillator(const Rational& k1, const Rational& k2,
                                           const Rational& k) {
  HahnSource s;
  s.kind = Kind::SingularOscillator;
  s.k1 = k1;
  s.k2 = k2;
  s.k = k;
  return s;
}

HahnResult hahn_invariants(const HahnSource& source, double tol) {
  Eigen::MatrixXd c0, cp, cm;
  HahnResult r;
  if (source.kind == HahnSource::Kind::Calogero) {
    SchwingerLadder ladder = schwinger_ladder(source.j, 2);
    // Unit-step grading on the even ladder.
    c0 = 0.5 * restrict(ladder.space, jzero_expr(), ladder.states);
    cp = restrict(ladder.space, 0.5 * (jplus_expr() * jplus_expr()), ladder.states);
    cm = cp.transpose();
    r.g = std::sqrt((2.0 * to_double(source.j * (source.j + 1)) - 1.0) / 4.0);
    r.report.subject = "hahn calogero j=" + to_string(source.j);
  } else {
    LadderRep rep = build_cubic(CubicClass::CMinus11_11,
                                {{"k1", source.k1}, {"k2", source.k2}, {"k", source.k}});
    c0 = n0_matrix(rep);
    cp = raise_matrix(rep);
    cm = lower_matrix(rep);
    r.g = 1.0;
    r.report.subject = "hahn singular oscillator";
  }
  const Eigen::Index n = c0.rows();
  Eigen::MatrixXd q1 = 0.5 * (cp + cm) + r.g * c0 * c0;
  Eigen::MatrixXd q2 = c0;
  Eigen::MatrixXd q3 = 0.5 * (cm - cp);
  r.report.add("[Q1,Q2]-Q3", max_abs(comm(q1, q2) - q3), tol);
  r.report.add("[Q2,Q3]+Q1-gQ2^2", max_abs(comm(q2, q3) + q1 - r.g * q2 * q2), tol);

  Eigen::MatrixXd anti = q2 * q1 + q1 * q2;
  Eigen::MatrixXd printed;
  if (source.kind == HahnSource::Kind::Calogero) {
    r.printed_formula = "[Q3,Q1] = g{Q2,Q1} + Q2";
    printed = r.g * anti + q2;
  } else {
    // Potential strengths from the Bargmann indices, k_i = (1 + sqrt(1/4 + mu_i))/2.
    auto mu = [](const Rational& ki) { return to_double((2 * ki - 1) * (2 * ki - 1)) - 0.25; };
    double mu1 = mu(source.k1), mu2 = mu(source.k2), kk = to_double(source.k);
    r.printed_formula = "[Q3,Q1] = {Q2,Q1} + (3/4 - (mu1+mu2)/2 - 2K^2)Q2 + (mu2-mu1)K/2";
    printed = anti + (0.75 - 0.5 * (mu1 + mu2) - 2 * kk * kk) * q2 +
              0.5 * (mu2 - mu1) * kk * Eigen::MatrixXd::Identity(n, n);
  }
  r.printed_residual = max_abs(comm(q3, q1) - printed);
  return r;
}

QesPotential qes_potential(const Rational& k, const Rational& k1, double w) {
  QesPotential p;
  p.c0 = w * to_double(k);
  p.c2 = w * w / 8.0;
  p.cm2 = (4 * k1 * k1 - Rational(1, 4)) / 2;
  p.a1 = w / 2.0;
  p.am1 = Rational(1, 2) - 2 * k1;
  return p;
}

VerificationReport single_mode_su11_check(const Rational& k, long long dim, double tol) {
  if (k != Rational(1, 4) && k != Rational(3, 4)) {
    throw LabelError("one-mode su(1,1) carries only k = 1/4 and k = 3/4, got " + to_string(k));
  }
  if (dim < 2) throw LabelError("dim must be at least 2");
  const int parity = k == Rational(1, 4) ? 0 : 1;
  LowestWeightComponent comp = su11_component(k);
  LadderRep rep = to_ladder(comp, dim);

  Realization r;
  r.name = "one-mode su(1,1) k=" + to_string(k);
  r.q0 = 0.5 * Expr::n(0) + Expr::scalar(0.25);
  r.qplus = 0.5 * (Expr::ad(0) * Expr::ad(0));
  r.qminus = 0.5 * (Expr::a(0) * Expr::a(0));
  FockSpace space = FockSpace::uniform(1, static_cast<int>(2 * dim) + parity + r.margin() + 1);
  std::vector<std::size_t> sub;
  for (int n = parity; n < space.levels()[0]; n += 2) sub.push_back(space.index({n}));

  VerificationReport report = compare(rep, space, r, sub, tol);
  report.merge(verify_closure(rep, comp.f, tol), "closure ");
  return report;
}

SingleModeCubic single_mode_cubic(std::size_t states) {
  Realization r = single_mode_cubic_realization();
  FockSpace space = FockSpace::uniform(1, static_cast<int>(states) + 4);
  SingleModeCubic out;
  bool ok = true;
  for (std::size_t n = 0; n < states; ++n) {
    double amp = 0.0;
    for (auto [row, a] : apply(r.qplus, space, space.index({static_cast<int>(n)}))) {
      if (row == space.index({static_cast<int>(n) + 3})) amp = a;
    }
    const double nd = static_cast<double>(n);
    out.oracle_raise.push_back(amp);
    out.printed_raise.push_back((nd + 1) * std::sqrt(nd + 4));
    ok = ok && std::abs(amp - out.printed_raise.back()) < 1e-12;
  }
  out.printed_matches = ok;
  // [Q+,Q-] = (n(n-1)(n-2) - (n+1)(n+2)(n+3))/3 with n = 3 Q0.
  Polynomial n = Polynomial::monomial(1, 3);
  Polynomial one = Polynomial::constant(1);
  Polynomial lo = n * (n - one) * (n - 2 * one);
  Polynomial hi = (n + one) * (n + 2 * one) * (n + 3 * one);
  out.bracket = (lo - hi) * Rational(1, 3);
  return out;
}

}  // namespace polyalg
