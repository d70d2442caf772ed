#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>

namespace cosphere {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Element of the quadratic field Q(sqrt(2)), stored as rat + irr*sqrt(2).
/// The rational coefficients are always in lowest terms (the underlying
/// rational type canonicalizes), so representation is unique and equality
/// is structural. Closed under +, -, *, and / by nonzero values, which is
/// enough for every coordinate that appears in the three cuboid aspect
/// ratios handled here.
struct ExactScalar {
  BigRat rat;  // coefficient of 1
  BigRat irr;  // coefficient of sqrt(2)

  ExactScalar() = default;
  ExactScalar(long v) : rat(v) {}  // NOLINT: implicit by design
  ExactScalar(BigRat r) : rat(std::move(r)) {}
  ExactScalar(BigRat r, BigRat i) : rat(std::move(r)), irr(std::move(i)) {}

  static ExactScalar sqrt2() { return {BigRat(0), BigRat(1)}; }

  bool is_zero() const { return rat.is_zero() && irr.is_zero(); }
  bool is_rational() const { return irr.is_zero(); }

  ExactScalar operator-() const { return {-rat, -irr}; }

  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o);

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.rat == b.rat && a.irr == b.irr;
  }
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) {
    return !(a == b);
  }
};

ExactScalar operator+(ExactScalar a, const ExactScalar& b);
ExactScalar operator-(ExactScalar a, const ExactScalar& b);
ExactScalar operator*(const ExactScalar& a, const ExactScalar& b);

/// Exact field division. Throws std::domain_error if b == 0.
ExactScalar operator/(const ExactScalar& a, const ExactScalar& b);

/// Exact sign of rat + irr*sqrt(2) in {-1, 0, +1}, computed without any
/// floating point: when the coefficients disagree in sign the comparison
/// reduces to rat^2 vs 2*irr^2.
int sign(const ExactScalar& x);

inline bool operator<(const ExactScalar& a, const ExactScalar& b) {
  return sign(a - b) < 0;
}
inline bool operator>(const ExactScalar& a, const ExactScalar& b) {
  return sign(a - b) > 0;
}
inline bool operator<=(const ExactScalar& a, const ExactScalar& b) {
  return sign(a - b) <= 0;
}
inline bool operator>=(const ExactScalar& a, const ExactScalar& b) {
  return sign(a - b) >= 0;
}

/// Total order usable as a map key (lexicographic on the coefficient pair;
/// not the numeric order).
struct ExactScalarKeyLess {
  bool operator()(const ExactScalar& a, const ExactScalar& b) const {
    if (a.rat != b.rat) return a.rat < b.rat;
    return a.irr < b.irr;
  }
};

/// Textual form used in config files and exports: `p/q` when the sqrt(2)
/// coefficient is zero, `p/q+r/s*sqrt2` (or `-r/s`) otherwise; no spaces,
/// denominators omitted when 1.
std::string format(const ExactScalar& x);

/// Inverse of format(). Also accepts integers without an explicit
/// denominator. Throws std::invalid_argument on malformed input.
ExactScalar parse_exact_scalar(const std::string& text);

/// Decimal rendering with sqrt(2) expanded, rounded to `digits`
/// significant digits. Used by the mesh exporters.
std::string to_decimal_string(const ExactScalar& x, unsigned digits);

double to_double(const ExactScalar& x);

std::ostream& operator<<(std::ostream& os, const ExactScalar& x);

}  // namespace cosphere
