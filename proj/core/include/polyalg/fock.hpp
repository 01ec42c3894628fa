#pragma once

#include "polyalg/algebra.hpp"
#include "polyalg/cubic.hpp"
#include "polyalg/ladder.hpp"
#include "polyalg/quadratic.hpp"

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace polyalg {

// Truncated multi-mode Fock space. levels[i] is the number of occupation
// states kept for mode i (occupations 0..levels[i]-1). Basis order is
// colexicographic: mode 0 varies fastest.
class FockSpace {
 public:
  explicit FockSpace(std::vector<int> levels);
  static FockSpace uniform(int modes, int levels) {
    return FockSpace(std::vector<int>(static_cast<std::size_t>(modes), levels));
  }

  int modes() const { return static_cast<int>(levels_.size()); }
  const std::vector<int>& levels() const { return levels_; }
  std::size_t size() const { return size_; }

  std::size_t index(const std::vector<int>& occ) const;
  std::vector<int> occupations(std::size_t index) const;
  bool contains(const std::vector<int>& occ) const;

  // Every occupation leaves `margin` levels of headroom below the cutoff.
  bool interior(const std::vector<int>& occ, int margin) const;

 private:
  std::vector<int> levels_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
};

enum class ModeKind { Annihilate, Create, Number };

struct Factor {
  int mode = 0;
  ModeKind kind = ModeKind::Number;
};

// coef * f_1 f_2 ... f_n, the rightmost factor acting first.
struct Term {
  double coef = 1.0;
  std::vector<Factor> factors;
};

// A sum of boson monomials.
class Expr {
 public:
  Expr() = default;
  static Expr scalar(double c);
  static Expr a(int mode) { return single(mode, ModeKind::Annihilate); }
  static Expr ad(int mode) { return single(mode, ModeKind::Create); }
  static Expr n(int mode) { return single(mode, ModeKind::Number); }

  const std::vector<Term>& terms() const { return terms_; }
  int max_mode() const;
  // Largest number of ladder factors on a single mode in any term.
  int reach() const;

  Expr& operator+=(const Expr& o);
  friend Expr operator+(Expr x, const Expr& y) { return x += y; }
  friend Expr operator-(Expr x, const Expr& y) { return x += y * -1.0; }
  friend Expr operator*(const Expr& x, const Expr& y);
  friend Expr operator*(Expr x, double c);
  friend Expr operator*(double c, Expr x) { return std::move(x) * c; }

 private:
  static Expr single(int mode, ModeKind kind);
  std::vector<Term> terms_;
};

// Action of expr on one basis state: (target index, amplitude) pairs, merged.
std::vector<std::pair<std::size_t, double>> apply(const Expr& expr, const FockSpace& space,
                                                  std::size_t column);

using SparseMatrix = Eigen::SparseMatrix<double>;

struct FockOperator {
  FockSpace space;
  SparseMatrix mat;
};

FockOperator mode_operator(const FockSpace& space, int mode, ModeKind kind);
FockOperator to_operator(const FockSpace& space, const Expr& expr);

struct Constraint {
  std::string name;
  Expr op;  // diagonal in the Fock basis
  double value = 0.0;
};

struct Realization {
  std::string name;
  Expr q0;
  Expr qplus;
  Expr qminus;
  std::vector<Constraint> constraints;
  int modes() const;
  // Headroom needed so one generator never touches the cutoff.
  int margin() const;
};

struct RealizedOps {
  FockOperator q0;
  FockOperator qplus;
  FockOperator qminus;
  std::vector<FockOperator> central;
};

RealizedOps realize(const FockSpace& space, const Realization& r);

// Basis indices where the diagonal constraint equals value within tol,
// ordered by the diagonal of order_by. Throws LabelError when empty.
std::vector<std::size_t> constrained_subspace(const FockSpace& space, const Expr& constraint,
                                              double value, double tol, const Expr& order_by);
// Intersection over all constraints of r, ordered by q0.
std::vector<std::size_t> constrained_subspace(const FockSpace& space, const Realization& r,
                                              double tol);

// Dense block of expr on the subspace (rows and columns in subspace order).
Eigen::MatrixXd restrict(const FockSpace& space, const Expr& expr,
                         const std::vector<std::size_t>& subspace);
Eigen::MatrixXd restrict(const FockOperator& op, const std::vector<std::size_t>& subspace);

// Matrix elements of rep against the oracle on rows that are interior both
// for the rep and for the Fock truncation. Throws ShapeError when a finite
// rep and the subspace differ in size.
VerificationReport compare(const LadderRep& rep, const FockSpace& space, const Realization& r,
                           const std::vector<std::size_t>& subspace, double tol);

// Builds the realization's subspace and compares in one step.
VerificationReport oracle_check(const LadderRep& rep, const Realization& r,
                                const FockSpace& space, double tol);

// [a_i, a_j^dagger] - delta_ij on states with headroom `margin`.
double canonical_commutator_residual(const FockSpace& space, int margin = 1);
// Max |[central, generator]| over interior states of the subspace-free space.
double central_commutator_residual(const FockSpace& space, const Realization& r);

// Building blocks: raising, lowering and diagonal part of a rank-one
// algebra realized on boson modes, plus the constraints that fix its irrep.
struct Block {
  Expr plus;
  Expr minus;
  Expr zero;
  std::vector<Constraint> constraints;
};

Block boson_block(int mode);
// K+ = a_p^dagger a_q^dagger, K0 = (n_p + n_q + 1)/2, Bargmann index k fixed
// by n_p - n_q = 2k - 1. Throws LabelError unless 2k is a positive integer.
Block su11_pair(int p, int q, const Rational& k);
// J+ = a_p^dagger a_q, J0 = (n_p - n_q)/2, spin j fixed by n_p + n_q = 2j.
Block su2_pair(int p, int q, const Rational& j);
Block combine(const Block& a, const Block& b, Coupling coupling, const Rational& value,
              const std::string& name);

Realization to_realization(std::string name, const Block& b);

// Three modes: Schwinger pair on 0,1 and a boson on 2.
Realization quadratic_realization(QuadraticClass c, const QuadLabel& label);
// Four modes: two Schwinger pairs, or a three-mode quadratic plus a boson.
Realization cubic_realization(CubicClass c, const Labels& label);

// Cubic constructions with no ladder class of their own.
Realization su11_squared_realization(const Rational& k);  // C+ = K+^2, C0 = K0/2
Realization su2_squared_realization(const Rational& j);   // C+ = J+^2, C0 = J0/2
// C+ = a0^dagger a1^dagger (a2^dagger)^2 when create_pair, else a0^dagger a1^dagger a2^2;
// `value` fixes the conserved combination of K0 and n2.
Realization shared_boson_realization(bool create_pair, const Rational& k, const Rational& value);
// Q+ = (a^dagger)^3 / sqrt(3), Q0 = n / 3.
Realization single_mode_cubic_realization();

// Sufficient uniform level count for a finite rep of the realization.
int levels_for(const LadderRep& rep, const Realization& r);

}  // namespace polyalg
