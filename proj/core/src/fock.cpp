#include "polyalg/fock.hpp"

#include "polyalg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace polyalg {

FockSpace::FockSpace(std::vector<int> levels) : levels_(std::move(levels)) {
  if (levels_.empty()) throw ShapeError("Fock space needs at least one mode");
  for (int l : levels_) {
    if (l < 1) throw ShapeError("each mode needs at least one level");
    strides_.push_back(size_);
    size_ *= static_cast<std::size_t>(l);
  }
}

std::size_t FockSpace::index(const std::vector<int>& occ) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < levels_.size(); ++i) idx += strides_[i] * static_cast<std::size_t>(occ[i]);
  return idx;
}

std::vector<int> FockSpace::occupations(std::size_t index) const {
  std::vector<int> occ(levels_.size());
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    occ[i] = static_cast<int>(index % static_cast<std::size_t>(levels_[i]));
    index /= static_cast<std::size_t>(levels_[i]);
  }
  return occ;
}

bool FockSpace::contains(const std::vector<int>& occ) const {
  if (occ.size() != levels_.size()) return false;
  for (std::size_t i = 0; i < occ.size(); ++i) {
    if (occ[i] < 0 || occ[i] >= levels_[i]) return false;
  }
  return true;
}

bool FockSpace::interior(const std::vector<int>& occ, int margin) const {
  for (std::size_t i = 0; i < occ.size(); ++i) {
    if (occ[i] + margin > levels_[i] - 1) return false;
  }
  return true;
}

Expr Expr::scalar(double c) {
  Expr e;
  e.terms_.push_back({c, {}});
  return e;
}

Expr Expr::single(int mode, ModeKind kind) {
  Expr e;
  e.terms_.push_back({1.0, {{mode, kind}}});
  return e;
}

int Expr::max_mode() const {
  int m = -1;
  for (const auto& t : terms_) {
    for (const auto& f : t.factors) m = std::max(m, f.mode);
  }
  return m;
}

int Expr::reach() const {
  int r = 0;
  for (const auto& t : terms_) {
    std::map<int, int> count;
    for (const auto& f : t.factors) {
      if (f.kind != ModeKind::Number) r = std::max(r, ++count[f.mode]);
    }
  }
  return r;
}

Expr& Expr::operator+=(const Expr& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  return *this;
}

Expr operator*(const Expr& x, const Expr& y) {
  Expr out;
  for (const auto& tx : x.terms_) {
    for (const auto& ty : y.terms_) {
      Term t{tx.coef * ty.coef, tx.factors};
      t.factors.insert(t.factors.end(), ty.factors.begin(), ty.factors.end());
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

Expr operator*(Expr x, double c) {
  for (auto& t : x.terms_) t.coef *= c;
  return x;
}

std::vector<std::pair<std::size_t, double>> apply(const Expr& expr, const FockSpace& space,
                                                  std::size_t column) {
  const std::vector<int> start = space.occupations(column);
  std::map<std::size_t, double> acc;
  for (const auto& t : expr.terms()) {
    std::vector<int> occ = start;
    double amp = t.coef;
    for (auto it = t.factors.rbegin(); it != t.factors.rend() && amp != 0.0; ++it) {
      if (it->mode < 0 || it->mode >= space.modes()) throw ShapeError("expression mode out of range");
      int& n = occ[static_cast<std::size_t>(it->mode)];
      switch (it->kind) {
        case ModeKind::Annihilate:
          amp = n == 0 ? 0.0 : amp * std::sqrt(static_cast<double>(n));
          --n;
          break;
        case ModeKind::Create:
          // a^dagger annihilates the top kept level.
          if (n + 1 >= space.levels()[static_cast<std::size_t>(it->mode)]) {
            amp = 0.0;
          } else {
            amp *= std::sqrt(static_cast<double>(n + 1));
            ++n;
          }
          break;
        case ModeKind::Number: amp *= static_cast<double>(n); break;
      }
    }
    if (amp != 0.0) acc[space.index(occ)] += amp;
  }
  std::vector<std::pair<std::size_t, double>> out;
  for (const auto& [i, v] : acc) {
    if (v != 0.0) out.emplace_back(i, v);
  }
  return out;
}

FockOperator to_operator(const FockSpace& space, const Expr& expr) {
  std::vector<Eigen::Triplet<double>> trip;
  for (std::size_t col = 0; col < space.size(); ++col) {
    for (const auto& [row, v] : apply(expr, space, col)) {
      trip.emplace_back(static_cast<int>(row), static_cast<int>(col), v);
    }
  }
  const auto n = static_cast<Eigen::Index>(space.size());
  SparseMatrix m(n, n);
  m.setFromTriplets(trip.begin(), trip.end());
  return {space, std::move(m)};
}

FockOperator mode_operator(const FockSpace& space, int mode, ModeKind kind) {
  if (mode < 0 || mode >= space.modes()) throw ShapeError("mode index out of range");
  Expr e = kind == ModeKind::Annihilate ? Expr::a(mode)
           : kind == ModeKind::Create   ? Expr::ad(mode)
                                        : Expr::n(mode);
  return to_operator(space, e);
}

int Realization::modes() const {
  int m = std::max({q0.max_mode(), qplus.max_mode(), qminus.max_mode()});
  for (const auto& c : constraints) m = std::max(m, c.op.max_mode());
  return m + 1;
}

int Realization::margin() const { return std::max({qplus.reach(), qminus.reach(), 1}); }

RealizedOps realize(const FockSpace& space, const Realization& r) {
  if (r.modes() > space.modes()) throw ShapeError("realization uses more modes than the space has");
  RealizedOps ops{to_operator(space, r.q0), to_operator(space, r.qplus),
                  to_operator(space, r.qminus), {}};
  for (const auto& c : r.constraints) ops.central.push_back(to_operator(space, c.op));
  return ops;
}

namespace {

double diagonal_value(const Expr& e, const FockSpace& space, std::size_t idx) {
  double v = 0.0;
  for (const auto& [row, amp] : apply(e, space, idx)) {
    if (row != idx) throw ShapeError("constraint operator is not diagonal in the Fock basis");
    v += amp;
  }
  return v;
}

std::vector<std::size_t> filter_and_order(const FockSpace& space,
                                          const std::vector<const Constraint*>& cons, double tol,
                                          const Expr& order_by) {
  std::vector<std::pair<double, std::size_t>> hits;
  for (std::size_t idx = 0; idx < space.size(); ++idx) {
    bool ok = true;
    for (const auto* c : cons) {
      if (std::abs(diagonal_value(c->op, space, idx) - c->value) > tol) {
        ok = false;
        break;
      }
    }
    if (ok) hits.emplace_back(diagonal_value(order_by, space, idx), idx);
  }
  if (hits.empty()) throw LabelError("constrained subspace is empty");
  std::stable_sort(hits.begin(), hits.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<std::size_t> out;
  out.reserve(hits.size());
  for (const auto& h : hits) out.push_back(h.second);
  return out;
}

}  // namespace

std::vector<std::size_t> constrained_subspace(const FockSpace& space, const Expr& constraint,
                                              double value, double tol, const Expr& order_by) {
  Constraint c{"constraint", constraint, value};
  return filter_and_order(space, {&c}, tol, order_by);
}

std::vector<std::size_t> constrained_subspace(const FockSpace& space, const Realization& r,
                                              double tol) {
  std::vector<const Constraint*> cons;
  for (const auto& c : r.constraints) cons.push_back(&c);
  return filter_and_order(space, cons, tol, r.q0);
}

Eigen::MatrixXd restrict(const FockSpace& space, const Expr& expr,
                         const std::vector<std::size_t>& subspace) {
  const auto n = static_cast<Eigen::Index>(subspace.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  std::map<std::size_t, Eigen::Index> pos;
  for (Eigen::Index i = 0; i < n; ++i) pos[subspace[static_cast<std::size_t>(i)]] = i;
  for (Eigen::Index c = 0; c < n; ++c) {
    for (const auto& [row, v] : apply(expr, space, subspace[static_cast<std::size_t>(c)])) {
      auto it = pos.find(row);
      if (it != pos.end()) m(it->second, c) += v;
    }
  }
  return m;
}

Eigen::MatrixXd restrict(const FockOperator& op, const std::vector<std::size_t>& subspace) {
  const auto n = static_cast<Eigen::Index>(subspace.size());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      m(i, j) = op.mat.coeff(static_cast<Eigen::Index>(subspace[static_cast<std::size_t>(i)]),
                             static_cast<Eigen::Index>(subspace[static_cast<std::size_t>(j)]));
    }
  }
  return m;
}

VerificationReport compare(const LadderRep& rep, const FockSpace& space, const Realization& r,
                           const std::vector<std::size_t>& subspace, double tol) {
  if (!rep.truncated && subspace.size() != rep.dim) {
    throw ShapeError("finite rep has dim " + std::to_string(rep.dim) + " but the subspace has " +
                     std::to_string(subspace.size()) + " states");
  }
  // Leading subspace states with headroom below every cutoff.
  const int margin = r.margin();
  std::size_t fock_ok = 0;
  while (fock_ok < subspace.size() && space.interior(space.occupations(subspace[fock_ok]), margin)) {
    ++fock_ok;
  }
  const std::size_t m = std::min(rep.dim, fock_ok);
  std::size_t rows = m;
  if (m < rep.dim || rep.truncated) rows = m == 0 ? 0 : m - 1;
  if (rows == 0) throw ShapeError("no interior rows to compare; raise the Fock cutoffs");

  std::vector<std::size_t> sub(subspace.begin(), subspace.begin() + static_cast<std::ptrdiff_t>(m));
  auto block = [&](const Eigen::MatrixXd& full) {
    return full.topLeftCorner(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m)).eval();
  };
  Eigen::MatrixXd d0 = restrict(space, r.q0, sub) - block(n0_matrix(rep));
  Eigen::MatrixXd dp = restrict(space, r.qplus, sub) - block(raise_matrix(rep));
  Eigen::MatrixXd dm = restrict(space, r.qminus, sub) - block(lower_matrix(rep));

  VerificationReport report;
  report.subject = "oracle:" + r.name;
  const std::string note = std::to_string(rows) + " rows";
  report.add("Q0", max_abs_rows(d0, rows), tol, note);
  report.add("Q+", max_abs_rows(dp, rows), tol, note);
  report.add("Q-", max_abs_rows(dm, rows), tol, note);
  return report;
}

VerificationReport oracle_check(const LadderRep& rep, const Realization& r,
                                const FockSpace& space, double tol) {
  auto sub = constrained_subspace(space, r, 1e-9);
  return compare(rep, space, r, sub, tol);
}

double canonical_commutator_residual(const FockSpace& space, int margin) {
  double worst = 0.0;
  for (int i = 0; i < space.modes(); ++i) {
    for (int j = 0; j < space.modes(); ++j) {
      Expr comm = Expr::a(i) * Expr::ad(j) - Expr::ad(j) * Expr::a(i);
      if (i == j) comm = comm - Expr::scalar(1.0);
      for (std::size_t col = 0; col < space.size(); ++col) {
        if (!space.interior(space.occupations(col), margin)) continue;
        for (const auto& [row, v] : apply(comm, space, col)) {
          (void)row;
          worst = std::max(worst, std::abs(v));
        }
      }
    }
  }
  return worst;
}

double central_commutator_residual(const FockSpace& space, const Realization& r) {
  const int margin = r.margin() + 1;
  double worst = 0.0;
  for (const auto& c : r.constraints) {
    for (const Expr* g : {&r.q0, &r.qplus, &r.qminus}) {
      Expr comm = c.op * *g - *g * c.op;
      for (std::size_t col = 0; col < space.size(); ++col) {
        if (!space.interior(space.occupations(col), margin)) continue;
        for (const auto& [row, v] : apply(comm, space, col)) {
          (void)row;
          worst = std::max(worst, std::abs(v));
        }
      }
    }
  }
  return worst;
}

Block boson_block(int mode) { return {Expr::ad(mode), Expr::a(mode), Expr::n(mode), {}}; }

Block su11_pair(int p, int q, const Rational& k) {
  if (k <= 0 || !is_integer(2 * k)) {
    throw LabelError("two-mode su(1,1) needs k in {1/2, 1, 3/2, ...}, got " + to_string(k));
  }
  Block b;
  b.plus = Expr::ad(p) * Expr::ad(q);
  b.minus = Expr::a(p) * Expr::a(q);
  b.zero = (Expr::n(p) + Expr::n(q) + Expr::scalar(1.0)) * 0.5;
  b.constraints.push_back({"su11 index", Expr::n(p) - Expr::n(q), to_double(2 * k - 1)});
  return b;
}

Block su2_pair(int p, int q, const Rational& j) {
  Block b;
  b.plus = Expr::ad(p) * Expr::a(q);
  b.minus = Expr::ad(q) * Expr::a(p);
  b.zero = (Expr::n(p) - Expr::n(q)) * 0.5;
  b.constraints.push_back({"su2 spin", Expr::n(p) + Expr::n(q), to_double(2 * j)});
  return b;
}

Block combine(const Block& a, const Block& b, Coupling coupling, const Rational& value,
              const std::string& name) {
  Block out;
  out.constraints = a.constraints;
  out.constraints.insert(out.constraints.end(), b.constraints.begin(), b.constraints.end());
  if (coupling == Coupling::Same) {
    out.plus = a.plus * b.plus;
    out.minus = a.minus * b.minus;
    out.zero = (a.zero + b.zero) * 0.5;
    out.constraints.push_back({name, (a.zero - b.zero) * 0.5, to_double(value)});
  } else {
    out.plus = a.plus * b.minus;
    out.minus = a.minus * b.plus;
    out.zero = (a.zero - b.zero) * 0.5;
    out.constraints.push_back({name, (a.zero + b.zero) * 0.5, to_double(value)});
  }
  return out;
}

Realization to_realization(std::string name, const Block& b) {
  return {std::move(name), b.zero, b.plus, b.minus, b.constraints};
}

Realization quadratic_realization(QuadraticClass c, const QuadLabel& lab) {
  validate(c, lab);
  const bool spin = c == QuadraticClass::QMinus2 || c == QuadraticClass::QPlus2;
  const bool minus = c == QuadraticClass::QMinus2 || c == QuadraticClass::QMinus11;
  Block lie = spin ? su2_pair(0, 1, lab.s) : su11_pair(0, 1, lab.s);
  Block q = combine(lie, boson_block(2), minus ? Coupling::Opposite : Coupling::Same, lab.l, "L");
  return to_realization(to_string(c), q);
}

Realization cubic_realization(CubicClass c, const Labels& label) {
  auto fz = factorization(c, label);  // validates labels
  auto get = [&](const char* key) { return label.at(key); };
  Block a;
  Block b;
  switch (c) {
    case CubicClass::CMinus11_11:
    case CubicClass::CPlus11_11:
      a = su11_pair(0, 1, get("k1"));
      b = su11_pair(2, 3, get("k2"));
      break;
    case CubicClass::CMinus2_2:
    case CubicClass::CPlus2_2:
      a = su2_pair(0, 1, get("j1"));
      b = su2_pair(2, 3, get("j2"));
      break;
    case CubicClass::CMinus2_11:
    case CubicClass::CPlus2_11:
      a = su2_pair(0, 1, get("j"));
      b = su11_pair(2, 3, get("k1"));
      break;
    case CubicClass::CPlusQm11_h:
    case CubicClass::CMinusQm11_h:
      a = combine(su11_pair(0, 1, get("k1")), boson_block(2), Coupling::Opposite, get("l"), "L");
      b = boson_block(3);
      break;
    case CubicClass::CPlusQp11_h:
    case CubicClass::CMinusQp11_h:
      a = combine(su11_pair(0, 1, get("k1")), boson_block(2), Coupling::Same, get("l"), "L");
      b = boson_block(3);
      break;
  }
  return to_realization(to_string(c), combine(a, b, fz.coupling, fz.value, "K"));
}

Realization su11_squared_realization(const Rational& k) {
  Block p = su11_pair(0, 1, k);
  return {"su11_squared", p.zero * 0.5, p.plus * p.plus, p.minus * p.minus, p.constraints};
}

Realization su2_squared_realization(const Rational& j) {
  Block p = su2_pair(0, 1, j);
  return {"su2_squared", p.zero * 0.5, p.plus * p.plus, p.minus * p.minus, p.constraints};
}

Realization shared_boson_realization(bool create_pair, const Rational& k, const Rational& value) {
  Block p = su11_pair(0, 1, k);
  Expr half_n2 = Expr::n(2) * 0.5;
  Realization r;
  r.constraints = p.constraints;
  if (create_pair) {
    r.name = "shared_boson_create";
    r.qplus = p.plus * Expr::ad(2) * Expr::ad(2);
    r.qminus = p.minus * Expr::a(2) * Expr::a(2);
    r.q0 = (p.zero + half_n2) * 0.5;
    r.constraints.push_back({"K", (p.zero - half_n2) * 0.5, to_double(value)});
  } else {
    r.name = "shared_boson_annihilate";
    r.qplus = p.plus * Expr::a(2) * Expr::a(2);
    r.qminus = p.minus * Expr::ad(2) * Expr::ad(2);
    r.q0 = (p.zero - half_n2) * 0.5;
    r.constraints.push_back({"K", (p.zero + half_n2) * 0.5, to_double(value)});
  }
  return r;
}

Realization single_mode_cubic_realization() {
  const double s = 1.0 / std::sqrt(3.0);
  Expr up = Expr::ad(0) * Expr::ad(0) * Expr::ad(0) * s;
  Expr down = Expr::a(0) * Expr::a(0) * Expr::a(0) * s;
  return {"single_mode_cubic", Expr::n(0) * (1.0 / 3.0), up, down, {}};
}

int levels_for(const LadderRep& rep, const Realization& r) {
  const int margin = r.margin();
  const int modes = r.modes();
  for (int levels = margin + 2;; levels += 2) {
    FockSpace space = FockSpace::uniform(modes, levels);
    std::vector<std::size_t> sub;
    try {
      sub = constrained_subspace(space, r, 1e-9);
    } catch (const LabelError&) {
      if (levels > 4 * static_cast<int>(rep.dim) + 64) throw;
      continue;
    }
    std::size_t ok = 0;
    while (ok < sub.size() && space.interior(space.occupations(sub[ok]), margin)) ++ok;
    bool complete = rep.truncated ? ok >= rep.dim : (ok >= rep.dim && sub.size() == rep.dim);
    if (complete) return levels;
    if (levels > 4 * static_cast<int>(rep.dim) + 64) {
      throw ShapeError("could not find Fock cutoffs holding the representation");
    }
  }
}

}  // namespace polyalg
