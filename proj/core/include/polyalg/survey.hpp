#pragma once

#include "polyalg/cubic.hpp"
#include "polyalg/quadratic.hpp"

#include <string>
#include <vector>

namespace polyalg {

// Valid labels with s in {1/2, 1, ..., s_max} and at most max_dim states
// (infinite classes included).
std::vector<QuadLabel> quadratic_label_grid(QuadraticClass c, const Rational& s_max,
                                            long long max_dim);

// Valid labels over a small set of factor labels; the conserved value runs
// over the product lattice. Finite reps above max_dim are skipped.
std::vector<Labels> cubic_label_grid(CubicClass c, long long max_dim);

// One place where a literature formula disagrees with the computed value.
struct LedgerEntry {
  std::string id;
  std::string topic;
  std::string printed;
  std::string computed;
  std::string resolution;
};

// Recomputes every known mismatch from the library; nothing is hard-coded
// except the printed formulas themselves.
std::vector<LedgerEntry> discrepancy_ledger();

}  // namespace polyalg
