#pragma once

#include "polyalg/ladder.hpp"
#include "polyalg/polynomial.hpp"
#include "polyalg/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace polyalg {

// [N0,N+-] = +-N+-, [N+,N-] = f(N0).
struct AlgebraSpec {
  std::string name;
  int order = 0;
  Polynomial f;
  std::map<std::string, Rational> central_values;
};

// Throws std::invalid_argument when order != f.degree().
void validate(const AlgebraSpec& spec);

// N+ = a, N- = a^dagger, N0 = -N: f = 1.
AlgebraSpec heisenberg();
// f = 2x, J = j(j+1).
AlgebraSpec su2(const Rational& j);
// f = -2x, K = k(1-k).
AlgebraSpec su11(const Rational& k);

// A lowest-weight ladder rep known exactly: N0 starts at x0 and
// |<n+1|N+|n>|^2 = g(x0-1) - g(x0+n), g = antidifference(f).
struct LowestWeightComponent {
  std::string name;
  Polynomial f;
  Rational x0 = 0;
  std::optional<long long> top;  // largest index n, nullopt when unbounded

  Polynomial g() const { return antidifference(f); }
  Rational casimir() const;
  Rational raise_sq(long long n) const;
  std::optional<long long> dim() const;
};

// N+ = a^dagger, N0 = number operator: f = -1, casimir 1.
LowestWeightComponent boson_component();
LowestWeightComponent su2_component(const Rational& j);
LowestWeightComponent su11_component(const Rational& k);

enum class Coupling {
  Same,      // Pi+ = A+ B+, Pi = (A0 - B0)/2 fixed, Pi0 = (A0 + B0)/2
  Opposite,  // Pi+ = A+ B-, K = (A0 + B0)/2 fixed, Pi0 = (A0 - B0)/2
};

std::string to_string(Coupling c);

// The irreducible chain of the product generators on the subspace where the
// conserved combination equals `value`.
struct CompositeChain {
  Rational x0 = 0;
  std::vector<long long> a_index;  // component-A ladder index per chain state
  std::vector<long long> b_index;
  std::vector<Rational> radicands;  // |<i+1|Pi+|i>|^2
  bool truncated = false;
};

// Throws LabelError when the conserved value is off the component lattice or
// the subspace is empty; an unbounded chain needs a cutoff.
CompositeChain composite_chain(const LowestWeightComponent& a, const LowestWeightComponent& b,
                               Coupling coupling, const Rational& value,
                               std::optional<long long> cutoff = std::nullopt);

std::optional<long long> composite_dim(const LowestWeightComponent& a,
                                       const LowestWeightComponent& b, Coupling coupling,
                                       const Rational& value);

// Exact [Pi+,Pi-] as a polynomial in Pi0 from the component Casimirs.
Polynomial composite_bracket(const LowestWeightComponent& a, const LowestWeightComponent& b,
                             Coupling coupling, const Rational& value);

LadderRep to_ladder(const CompositeChain& chain, Labels labels = {});
// The component's own rep; an unbounded component needs a cutoff.
LadderRep to_ladder(const LowestWeightComponent& c, std::optional<long long> cutoff = std::nullopt);

}  // namespace polyalg
