#include "polyalg/polynomial.hpp"

#include <sstream>

namespace polyalg {

Polynomial::Polynomial() : coeffs_{Rational(0)} {}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(int degree, const Rational& c) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
  v.back() = c;
  return Polynomial(std::move(v));
}

void Polynomial::normalize() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(Rational(0));
}

Rational Polynomial::coefficient(int power) const {
  if (power < 0 || power > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(power)];
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_double(*it);
  return acc;
}

std::vector<double> Polynomial::to_doubles() const {
  std::vector<double> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(to_double(c));
  return out;
}

Polynomial Polynomial::compose_affine(const Rational& a, const Rational& b) const {
  Polynomial lin{b, a};
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= lin;
    acc += Polynomial::constant(*it);
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  for (auto& v : coeffs_) v *= c;
  normalize();
  return *this;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int p = degree(); p >= 0; --p) {
    Rational c = coeffs_[static_cast<std::size_t>(p)];
    if (c == 0) continue;
    bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool unit = (mag == 1);
    if (p == 0 || !unit) os << polyalg::to_string(mag);
    if (p > 0) {
      if (!unit) os << "*";
      os << var;
      if (p > 1) os << "^" << p;
    }
  }
  return os.str();
}

Polynomial antidifference(const Polynomial& f) {
  // Peel off the leading term: c x^p is the leading part of
  // (c/(p+1)) * (x^{p+1} - (x-1)^{p+1}); the remainder has lower degree.
  Polynomial g;
  Polynomial rest = f;
  while (!rest.is_zero()) {
    int p = rest.degree();
    Rational c = rest.coefficient(p) / (p + 1);
    Polynomial term = Polynomial::monomial(p + 1, c);
    g += term;
    rest -= term - term.shift(-1);
  }
  return g;
}

std::vector<Rational> falling_factorial_coefficients(const Polynomial& p) {
  // Newton forward differences at 0: a_q = Delta^q p(0) / q!.
  int d = p.degree();
  std::vector<Rational> values;
  for (int n = 0; n <= d; ++n) values.push_back(p(Rational(n)));
  std::vector<Rational> out;
  Rational fact = 1;
  for (int q = 0; q <= d; ++q) {
    if (q > 0) fact *= q;
    out.push_back(values[0] / fact);
    for (std::size_t i = 0; i + 1 < values.size(); ++i) values[i] = values[i + 1] - values[i];
    values.pop_back();
  }
  return out;
}

}  // namespace polyalg
