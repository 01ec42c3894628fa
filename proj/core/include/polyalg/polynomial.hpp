#pragma once

#include "polyalg/rational.hpp"

#include <string>
#include <vector>

namespace polyalg {

// Univariate polynomial with exact rational coefficients, lowest degree first.
// The zero polynomial is stored as the single coefficient 0.
class Polynomial {
 public:
  Polynomial();
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(int degree, const Rational& c = 1);
  static Polynomial identity() { return monomial(1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int power) const;

  Rational operator()(const Rational& x) const;
  double operator()(double x) const;
  std::vector<double> to_doubles() const;

  // p(a*x + b)
  Polynomial compose_affine(const Rational& a, const Rational& b) const;
  // p(x + s)
  Polynomial shift(const Rational& s) const { return compose_affine(1, s); }

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(const Polynomial& a) { return a * Rational(-1); }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Human-readable, highest degree first, e.g. "-3*x^2 + 1/2*x + 17/16".
  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

// g with g(x) - g(x-1) = f(x) identically and g(0) = 0.
Polynomial antidifference(const Polynomial& f);

// Coefficients a_q of p(n) = sum_q a_q * n(n-1)...(n-q+1).
std::vector<Rational> falling_factorial_coefficients(const Polynomial& p);

}  // namespace polyalg
