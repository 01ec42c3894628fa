#pragma once

#include <stdexcept>
#include <string>

namespace polyalg {

// A representation label outside the allowed lattice or unitary regime.
class LabelError : public std::invalid_argument {
 public:
  explicit LabelError(const std::string& what) : std::invalid_argument(what) {}
};

// A denominator of a map F or G vanishes on a basis state.
class PoleError : public std::domain_error {
 public:
  explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

// A series or truncation does not settle within the available terms.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Operand shapes do not line up (subspace smaller than a rep, etc.).
class ShapeError : public std::invalid_argument {
 public:
  explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace polyalg
