#include "polyalg/hypergeom.hpp"

#include "polyalg/errors.hpp"

#include <cmath>
#include <optional>

namespace polyalg {

namespace {

// Index at which (a)_m first vanishes, i.e. -a when a is a nonpositive integer.
std::optional<long long> vanishing_index(double a) {
  if (a <= 0 && std::floor(a) == a) return static_cast<long long>(-a);
  return std::nullopt;
}

std::optional<long long> termination(const std::vector<double>& upper) {
  std::optional<long long> t;
  for (double a : upper) {
    if (auto v = vanishing_index(a); v && (!t || *v < *t)) t = v;
  }
  return t;
}

void check_lower(const std::vector<double>& lower, std::optional<long long> stop) {
  for (double b : lower) {
    auto v = vanishing_index(b);
    // The term with index m carries (b)_m, which vanishes once m > -b.
    if (v && (!stop || *v < *stop)) {
      throw LabelError("lower parameter " + std::to_string(b) +
                       " is a nonpositive integer reached before the series terminates");
    }
  }
}

Rational exact_from_double(double v) { return Rational(v); }

}  // namespace

Rational hypergeom_exact(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                         const Rational& x) {
  std::optional<long long> stop;
  for (const auto& a : upper) {
    if (a <= 0 && is_integer(a)) {
      long long v = to_integer(-a);
      if (!stop || v < *stop) stop = v;
    }
  }
  if (!stop) throw LabelError("series does not terminate");
  Rational term = 1;
  Rational sum = 1;
  for (long long m = 0; m < *stop; ++m) {
    Rational num = 1;
    Rational den = m + 1;
    for (const auto& a : upper) num *= a + m;
    for (const auto& b : lower) den *= b + m;
    if (den == 0) throw LabelError("lower parameter hits zero before termination");
    term = term * num / den * x;
    sum += term;
  }
  return sum;
}

double hypergeom(const HypergeomParams& p, std::size_t max_terms, double tol) {
  auto stop = termination(p.upper);
  check_lower(p.lower, stop);
  if (stop) {
    std::vector<Rational> up;
    std::vector<Rational> lo;
    for (double a : p.upper) up.push_back(exact_from_double(a));
    for (double b : p.lower) lo.push_back(exact_from_double(b));
    return to_double(hypergeom_exact(up, lo, exact_from_double(p.argument)));
  }
  const std::size_t pp = p.upper.size();
  const std::size_t qq = p.lower.size();
  if (pp > qq + 1 && p.argument != 0.0) {
    throw ConvergenceError("pFq with p > q+1 diverges unless it terminates");
  }
  if (pp == qq + 1 && std::abs(p.argument) >= 1.0) {
    throw ConvergenceError("pFq with p = q+1 needs |x| < 1");
  }
  double term = 1.0;
  double sum = 1.0;
  for (std::size_t m = 0; m < max_terms; ++m) {
    double md = static_cast<double>(m);
    double ratio = p.argument / (md + 1.0);
    for (double a : p.upper) ratio *= a + md;
    for (double b : p.lower) ratio /= b + md;
    term *= ratio;
    sum += term;
    // Past the peak the ratio is below 1/2, so the tail is bounded by the term.
    if (std::abs(term) <= tol * std::abs(sum) && std::abs(ratio) < 0.5) return sum;
    if (term == 0.0) return sum;
  }
  throw ConvergenceError("hypergeometric series did not settle within max_terms");
}

PartialSum hypergeom_partial(const HypergeomParams& p, std::size_t n_terms) {
  PartialSum out;
  if (n_terms == 0) return out;
  double term = 1.0;
  out.value = 1.0;
  out.last_term = 1.0;
  for (std::size_t m = 0; m + 1 < n_terms; ++m) {
    double md = static_cast<double>(m);
    double ratio = p.argument / (md + 1.0);
    for (double a : p.upper) ratio *= a + md;
    for (double b : p.lower) {
      if (b + md == 0.0) throw LabelError("lower parameter hits zero");
      ratio /= b + md;
    }
    term *= ratio;
    out.value += term;
    out.last_term = term;
  }
  return out;
}

}  // namespace polyalg
