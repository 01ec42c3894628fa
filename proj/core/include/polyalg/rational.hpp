#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace polyalg {

// Expression templates off: keeps `auto` and ?: on rationals well-typed.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

// Accepts "p/q", plain integers and terminating decimals ("0.25").
Rational parse_rational(const std::string& text);

// Canonical "p/q" form, or "p" when the denominator is 1.
std::string to_string(const Rational& r);

double to_double(const Rational& r);
bool is_integer(const Rational& r);

// Throws LabelError when r is not an integer or does not fit in a long long.
long long to_integer(const Rational& r, const std::string& what = "value");

// True when 2r is an integer.
bool is_half_integer_lattice(const Rational& r);

}  // namespace polyalg
