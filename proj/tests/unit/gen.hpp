#pragma once

#include "polyalg/rational.hpp"

#include <cstdint>
#include <vector>

namespace testgen {

// splitmix64; fixed seeds keep failures reproducible.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : s_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi].
  long long integer(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  double real(double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // p/q with |p| <= num_max and 1 <= q <= den_max.
  polyalg::Rational rational(long long num_max, long long den_max) {
    return polyalg::Rational(integer(-num_max, num_max), integer(1, den_max));
  }

  // One of 1/2, 1, 3/2, ..., top/2.
  polyalg::Rational half(long long top) { return polyalg::Rational(integer(1, top), 2); }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(integer(0, static_cast<long long>(v.size()) - 1))];
  }

 private:
  std::uint64_t s_;
};

}  // namespace testgen
