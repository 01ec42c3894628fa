#include "polyalg/compose.hpp"

#include "polyalg/errors.hpp"

#include <algorithm>

namespace polyalg {

ComposedAlgebra compose(const LadderRep& left, const LadderRep& right, const Rational& pi_value,
                        Coupling coupling, int left_order, int right_order) {
  validate(left);
  validate(right);
  ComposedAlgebra out{left, right, left_order, right_order, coupling, pi_value, {}, {}};
  const auto top_l = static_cast<long long>(left.dim) - 1;
  const auto top_r = static_cast<long long>(right.dim) - 1;
  long long a0 = 0;
  long long b0 = 0;
  long long len = 0;
  bool hit_truncation = false;
  if (coupling == Coupling::Same) {
    Rational d = 2 * pi_value - left.n0_start + right.n0_start;
    if (!is_integer(d)) throw LabelError("pi value is off the product lattice");
    long long di = to_integer(d);
    b0 = std::max(0LL, -di);
    a0 = b0 + di;
    long long len_l = top_l - a0 + 1;
    long long len_r = top_r - b0 + 1;
    len = std::min(len_l, len_r);
    if (len <= 0) throw LabelError("empty subspace for pi value " + to_string(pi_value));
    hit_truncation = (left.truncated && len_l == len) || (right.truncated && len_r == len);
  } else {
    Rational s = 2 * pi_value - left.n0_start - right.n0_start;
    if (!is_integer(s) || s < 0) throw LabelError("pi value gives no occupation sum in the product");
    long long si = to_integer(s);
    if (right.truncated && si > top_r) {
      throw ShapeError("lowest product state lies beyond the right factor's truncation");
    }
    long long lo = std::max(0LL, si - top_r);
    long long hi = std::min(top_l, si);
    if (lo > hi) throw LabelError("empty subspace for pi value " + to_string(pi_value));
    a0 = lo;
    b0 = si - lo;
    len = hi - lo + 1;
    hit_truncation = left.truncated && hi == top_l;
  }
  const int sign = coupling == Coupling::Same ? 1 : -1;
  LadderRep& p = out.product_rep;
  p.dim = static_cast<std::size_t>(len);
  p.truncated = hit_truncation;
  p.labels = {{"pi", pi_value}};
  for (long long i = 0; i < len; ++i) {
    auto a = static_cast<std::size_t>(a0 + i);
    auto b = static_cast<std::size_t>(b0 + sign * i);
    out.pairs.emplace_back(a, b);
    double x = coupling == Coupling::Same ? 0.5 * (left.n0_diag[a] + right.n0_diag[b])
                                          : 0.5 * (left.n0_diag[a] - right.n0_diag[b]);
    p.n0_diag.push_back(x);
    if (i + 1 < len) {
      double up = coupling == Coupling::Same ? left.raise_amps[a] * right.raise_amps[b]
                                             : left.raise_amps[a] * right.lower_amps[b - 1];
      double down = coupling == Coupling::Same ? left.lower_amps[a] * right.lower_amps[b]
                                               : left.lower_amps[a] * right.raise_amps[b - 1];
      p.raise_amps.push_back(up);
      p.lower_amps.push_back(down);
    }
  }
  Rational la = left.n0_start + a0;
  Rational rb = right.n0_start + b0;
  p.n0_start = coupling == Coupling::Same ? (la + rb) / 2 : (la - rb) / 2;
  return out;
}

PolyFit fit_order(const ComposedAlgebra& comp, double tol) {
  auto s = bracket_samples(comp.product_rep);
  const int samples = static_cast<int>(s.x.size());
  int max_degree = samples - 1;
  if (comp.left_order >= 0 && comp.right_order >= 0) {
    max_degree = comp.left_order + comp.right_order + 1;
    if (samples < max_degree + 2) {
      throw ShapeError("fit_order is underdetermined: " + std::to_string(samples) +
                       " interior rows for degree " + std::to_string(max_degree));
    }
  }
  if (max_degree < 0) throw ShapeError("no interior rows to fit");
  return minimal_degree_fit(s.x, s.y, max_degree, tol);
}

}  // namespace polyalg
