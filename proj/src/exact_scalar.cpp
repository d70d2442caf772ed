#include "cosphere/exact_scalar.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cosphere {

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  rat += o.rat;
  irr += o.irr;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  rat -= o.rat;
  irr -= o.irr;
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  // (a + b*s)(c + d*s) = ac + 2bd + (ad + bc)*s   with s^2 = 2
  BigRat a = std::move(rat);
  BigRat b = std::move(irr);
  rat = a * o.rat + 2 * b * o.irr;
  irr = a * o.irr + b * o.rat;
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
  if (o.is_zero()) throw std::domain_error("ExactScalar: division by zero");
  // 1/(c + d*s) = (c - d*s) / (c^2 - 2 d^2); the denominator cannot vanish
  // for nonzero (c, d) because sqrt(2) is irrational.
  BigRat den = o.rat * o.rat - 2 * o.irr * o.irr;
  BigRat a = std::move(rat);
  BigRat b = std::move(irr);
  rat = (a * o.rat - 2 * b * o.irr) / den;
  irr = (b * o.rat - a * o.irr) / den;
  return *this;
}

ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
  ExactScalar r = a;
  return r *= b;
}
ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) {
  ExactScalar r = a;
  return r /= b;
}

int sign(const ExactScalar& x) {
  int sa = x.rat.sign();
  int sb = x.irr.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Coefficients of opposite sign: compare rat^2 against 2*irr^2.
  BigRat d = x.rat * x.rat - 2 * x.irr * x.irr;
  return sa > 0 ? d.sign() : -d.sign();
}

namespace {

std::string format_rat(const BigRat& q) {
  std::ostringstream os;
  os << numerator(q);
  if (denominator(q) != 1) os << '/' << denominator(q);
  return os.str();
}

// Parses [-]digits[/digits] starting at pos; advances pos.
BigRat parse_rat(const std::string& s, size_t& pos) {
  bool negative = false;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
    negative = s[pos] == '-';
    ++pos;
  }
  size_t numstart = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == numstart)
    throw std::invalid_argument("ExactScalar: expected number in '" + s + "'");
  BigInt num(s.substr(numstart, pos - numstart));
  if (negative) num = -num;
  BigInt den = 1;
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    size_t denstart = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == denstart)
      throw std::invalid_argument("ExactScalar: expected denominator in '" + s + "'");
    den = BigInt(s.substr(denstart, pos - denstart));
    if (den <= 0)
      throw std::invalid_argument("ExactScalar: denominator must be positive in '" + s + "'");
  }
  return BigRat(num, den);
}

}  // namespace

std::string format(const ExactScalar& x) {
  if (x.irr.is_zero()) return format_rat(x.rat);
  std::string out = format_rat(x.rat);
  out += x.irr.sign() < 0 ? '-' : '+';
  out += format_rat(boost::multiprecision::abs(x.irr));
  out += "*sqrt2";
  return out;
}

ExactScalar parse_exact_scalar(const std::string& text) {
  size_t pos = 0;
  BigRat rat = parse_rat(text, pos);
  if (pos == text.size()) return ExactScalar(rat);
  if (text[pos] != '+' && text[pos] != '-')
    throw std::invalid_argument("ExactScalar: malformed value '" + text + "'");
  BigRat irr = parse_rat(text, pos);
  const std::string suffix = "*sqrt2";
  if (text.compare(pos, std::string::npos, suffix) != 0)
    throw std::invalid_argument("ExactScalar: expected '*sqrt2' in '" + text + "'");
  return ExactScalar(rat, irr);
}

std::string to_decimal_string(const ExactScalar& x, unsigned digits) {
  using Dec = boost::multiprecision::cpp_dec_float_50;
  Dec rat = Dec(numerator(x.rat)) / Dec(denominator(x.rat));
  Dec irr = Dec(numerator(x.irr)) / Dec(denominator(x.irr));
  Dec v = rat + irr * sqrt(Dec(2));
  std::ostringstream os;
  os << std::setprecision(static_cast<int>(digits)) << v;
  return os.str();
}

double to_double(const ExactScalar& x) {
  return x.rat.convert_to<double>() + x.irr.convert_to<double>() * 1.4142135623730951;
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& x) {
  return os << format(x);
}

}  // namespace cosphere
