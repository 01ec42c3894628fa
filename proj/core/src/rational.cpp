#include "polyalg/rational.hpp"

#include "polyalg/errors.hpp"

#include <cctype>
#include <limits>

namespace polyalg {

namespace {

using boost::multiprecision::cpp_int;

cpp_int parse_int(const std::string& s, const std::string& whole) {
  if (s.empty()) throw LabelError("cannot parse rational '" + whole + "'");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw LabelError("cannot parse rational '" + whole + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw LabelError("cannot parse rational '" + whole + "'");
    }
  }
  cpp_int v(s[0] == '+' ? s.substr(1) : s);
  return v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  }
  auto slash = t.find('/');
  if (slash != std::string::npos) {
    cpp_int p = parse_int(t.substr(0, slash), text);
    cpp_int q = parse_int(t.substr(slash + 1), text);
    if (q == 0) throw LabelError("zero denominator in '" + text + "'");
    return Rational(p, q);
  }
  auto dot = t.find('.');
  if (dot != std::string::npos) {
    std::string ip = t.substr(0, dot);
    std::string fp = t.substr(dot + 1);
    bool neg = !ip.empty() && ip[0] == '-';
    if (ip.empty() || ip == "-" || ip == "+") ip += "0";
    if (fp.empty()) fp = "0";
    cpp_int whole = parse_int(ip, text);
    cpp_int frac = parse_int(fp, text);
    cpp_int scale = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
    Rational r(frac, scale);
    return neg ? Rational(whole) - r : Rational(whole) + r;
  }
  return Rational(parse_int(t, text));
}

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

bool is_integer(const Rational& r) { return denominator(r) == 1; }

long long to_integer(const Rational& r, const std::string& what) {
  if (!is_integer(r)) throw LabelError(what + " must be an integer, got " + to_string(r));
  const cpp_int& n = numerator(r);
  if (n > std::numeric_limits<long long>::max() || n < std::numeric_limits<long long>::min()) {
    throw LabelError(what + " out of range");
  }
  return n.convert_to<long long>();
}

bool is_half_integer_lattice(const Rational& r) { return is_integer(r * 2); }

}  // namespace polyalg
