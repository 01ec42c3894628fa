#include "polyalg/algebra.hpp"

#include "polyalg/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyalg {

void validate(const AlgebraSpec& spec) {
  if (spec.order < 0 || spec.order != spec.f.degree()) {
    throw std::invalid_argument("algebra order " + std::to_string(spec.order) +
                                " does not match deg f = " + std::to_string(spec.f.degree()));
  }
}

AlgebraSpec heisenberg() { return {"heisenberg", 0, Polynomial{1}, {}}; }

AlgebraSpec su2(const Rational& j) { return {"su2", 1, Polynomial{0, 2}, {{"J", j * (j + 1)}}}; }

AlgebraSpec su11(const Rational& k) {
  return {"su11", 1, Polynomial{0, -2}, {{"K", k * (1 - k)}}};
}

Rational LowestWeightComponent::casimir() const { return g()(x0 - 1); }

Rational LowestWeightComponent::raise_sq(long long n) const {
  Polynomial gg = g();
  return gg(x0 - 1) - gg(x0 + n);
}

std::optional<long long> LowestWeightComponent::dim() const {
  if (!top) return std::nullopt;
  return *top + 1;
}

LowestWeightComponent boson_component() { return {"boson", Polynomial{-1}, 0, std::nullopt}; }

LowestWeightComponent su2_component(const Rational& j) {
  if (j < 0 || !is_half_integer_lattice(j)) {
    throw LabelError("su(2) spin j must be a nonnegative half-integer, got " + to_string(j));
  }
  return {"su2", Polynomial{0, 2}, -j, to_integer(2 * j, "2j")};
}

LowestWeightComponent su11_component(const Rational& k) {
  if (k <= 0) throw LabelError("su(1,1) Bargmann index k must be positive, got " + to_string(k));
  return {"su11", Polynomial{0, -2}, k, std::nullopt};
}

std::string to_string(Coupling c) { return c == Coupling::Same ? "same" : "opposite"; }

namespace {

struct Range {
  long long a0 = 0;
  long long b0 = 0;
  std::optional<long long> length;  // number of chain states; nullopt when unbounded
};

Range chain_range(const LowestWeightComponent& a, const LowestWeightComponent& b,
                  Coupling coupling, const Rational& value) {
  Range r;
  if (coupling == Coupling::Same) {
    Rational d = 2 * value - a.x0 + b.x0;
    if (!is_integer(d)) {
      throw LabelError("value " + to_string(value) + " is off the lattice of the product space");
    }
    long long di = to_integer(d, "index offset");
    r.b0 = std::max(0LL, -di);
    r.a0 = r.b0 + di;
    std::optional<long long> len;
    if (a.top) len = *a.top - r.a0 + 1;
    if (b.top) len = len ? std::min(*len, *b.top - r.b0 + 1) : *b.top - r.b0 + 1;
    if (len && *len <= 0) throw LabelError("empty subspace for value " + to_string(value));
    r.length = len;
  } else {
    Rational s = 2 * value - a.x0 - b.x0;
    if (!is_integer(s) || s < 0) {
      throw LabelError("value " + to_string(value) +
                       " gives no nonnegative integer occupation sum in the product space");
    }
    long long si = to_integer(s, "occupation sum");
    long long lo = b.top ? std::max(0LL, si - *b.top) : 0;
    long long hi = a.top ? std::min(*a.top, si) : si;
    if (lo > hi) throw LabelError("empty subspace for value " + to_string(value));
    r.a0 = lo;
    r.b0 = si - lo;
    r.length = hi - lo + 1;
  }
  return r;
}

}  // namespace

std::optional<long long> composite_dim(const LowestWeightComponent& a,
                                       const LowestWeightComponent& b, Coupling coupling,
                                       const Rational& value) {
  return chain_range(a, b, coupling, value).length;
}

CompositeChain composite_chain(const LowestWeightComponent& a, const LowestWeightComponent& b,
                               Coupling coupling, const Rational& value,
                               std::optional<long long> cutoff) {
  Range r = chain_range(a, b, coupling, value);
  CompositeChain out;
  long long len = 0;
  if (r.length) {
    len = *r.length;
  } else {
    if (!cutoff || *cutoff < 1) throw LabelError("infinite representation requires a cutoff");
    len = *cutoff;
    out.truncated = true;
  }
  const Polynomial ga = a.g();
  const Polynomial gb = b.g();
  const Rational ca = ga(a.x0 - 1);
  const Rational cb = gb(b.x0 - 1);
  const int sign = coupling == Coupling::Same ? 1 : -1;
  for (long long i = 0; i < len; ++i) {
    long long ai = r.a0 + i;
    long long bi = r.b0 + sign * i;
    out.a_index.push_back(ai);
    out.b_index.push_back(bi);
    if (i + 1 < len) {
      Rational ra = ca - ga(a.x0 + ai);
      // Same: B raises from bi. Opposite: B lowers from bi, i.e. raise from bi-1.
      Rational rb = coupling == Coupling::Same ? cb - gb(b.x0 + bi) : cb - gb(b.x0 + bi - 1);
      out.radicands.push_back(ra * rb);
    }
  }
  Rational a0 = a.x0 + r.a0;
  Rational b0 = b.x0 + r.b0;
  out.x0 = coupling == Coupling::Same ? (a0 + b0) / 2 : (a0 - b0) / 2;
  return out;
}

Polynomial composite_bracket(const LowestWeightComponent& a, const LowestWeightComponent& b,
                             Coupling coupling, const Rational& value) {
  const Polynomial ga = a.g();
  const Polynomial gb = b.g();
  const Polynomial ca = Polynomial::constant(ga(a.x0 - 1));
  const Polynomial cb = Polynomial::constant(gb(b.x0 - 1));
  // A0 and B0 as affine functions of Pi0 = x.
  const Polynomial a0 = Polynomial{value, 1};
  const Polynomial b0 = coupling == Coupling::Same ? Polynomial{-value, 1} : Polynomial{value, -1};
  auto at = [](const Polynomial& p, const Polynomial& arg, const Rational& shift) {
    return p.compose_affine(arg.coefficient(1), arg.coefficient(0) + shift);
  };
  Polynomial a_pm = ca - at(ga, a0, -1);  // A+A-
  Polynomial a_mp = ca - at(ga, a0, 0);   // A-A+
  Polynomial b_pm = cb - at(gb, b0, -1);
  Polynomial b_mp = cb - at(gb, b0, 0);
  if (coupling == Coupling::Same) return a_pm * b_pm - a_mp * b_mp;
  return a_pm * b_mp - a_mp * b_pm;
}

LadderRep to_ladder(const CompositeChain& chain, Labels labels) {
  return ladder_from_radicands(chain.x0, chain.radicands, chain.truncated, std::move(labels));
}

LadderRep to_ladder(const LowestWeightComponent& c, std::optional<long long> cutoff) {
  long long n = 0;
  bool truncated = false;
  if (c.top) {
    n = *c.top + 1;
  } else {
    if (!cutoff || *cutoff < 1) throw LabelError(c.name + " is unbounded; a cutoff is required");
    n = *cutoff;
    truncated = true;
  }
  std::vector<Rational> rad;
  for (long long i = 0; i + 1 < n; ++i) rad.push_back(c.raise_sq(i));
  return ladder_from_radicands(c.x0, rad, truncated, {{"x0", c.x0}});
}

}  // namespace polyalg
