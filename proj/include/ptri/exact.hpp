#pragma once

// Exact arbitrary-precision integer, rational and quadratic-surd arithmetic.
//
// Every length that appears in this library is a single canonical surd
// q*sqrt(s) with q a nonnegative rational and s a squarefree positive
// integer; the value is rational exactly when s == 1. No floating point
// is used anywhere, including decimal rendering.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace ptri {

using Int = boost::multiprecision::cpp_int;

// Always reduced: den >= 1, gcd(|num|, den) == 1, zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rational& r) { return boost::multiprecision::denominator(r); }

// gcd with the usual convention gcd(a, 0) = a; gcd(0, 0) is rejected.
Int gcd(const Int& a, const Int& b);

// Floor of the square root, integer Newton iteration only.
Int isqrt(const Int& n);

// (true, r) with r*r == n, or (false, nullopt).
std::pair<bool, std::optional<Int>> is_perfect_square(const Int& n);

// n = s * f^2, deterministic, with s squarefree whenever every repeated
// prime factor of n is below the trial-division bound (10^6) or the
// undivided cofactor is a perfect square. That covers all n < 10^12
// exactly; larger inputs still satisfy n == s * f^2 and still terminate
// quickly, but a square of a huge prime hidden in a larger composite
// cofactor may be left inside s.
std::pair<Int, Int> squarefree_decompose(const Int& n);

enum class Classification { Integer, HalfOddInteger, NonIntegerRational, Irrational };

std::string to_string(Classification c);

// Canonical value coeff * sqrt(radicand), radicand squarefree >= 1.
// Zero is 0*sqrt(1). Construction canonicalizes; coeff must be >= 0.
class Surd {
 public:
  Surd() : coeff_(0), radicand_(1) {}
  Surd(Rational coeff, Int radicand);

  static Surd from_rational(const Rational& r);

  const Rational& coeff() const { return coeff_; }
  const Int& radicand() const { return radicand_; }

  bool is_zero() const { return coeff_ == 0; }
  bool is_rational() const { return radicand_ == 1; }

  // Exact square; a surd squared is always rational.
  Rational squared() const;

  // As a rational when radicand == 1; throws otherwise.
  Rational as_rational() const;

  // Truncated decimal expansion with exactly `digits` digits after the
  // point, via integer long division (round toward zero).
  std::string decimal(unsigned digits = 12) const;

  friend bool operator==(const Surd& a, const Surd& b) {
    return a.coeff_ == b.coeff_ && a.radicand_ == b.radicand_;
  }
  friend bool operator!=(const Surd& a, const Surd& b) { return !(a == b); }

 private:
  Rational coeff_;
  Int radicand_;
};

// Canonical surd equal to sqrt(x) for x >= 0.
Surd sqrt_of_rational(const Rational& x);

// c * v for c >= 0.
Surd surd_scale(const Rational& c, const Surd& v);

Classification classify(const Surd& v);

// Truncated decimal expansion of a rational (round toward zero).
std::string rational_decimal(const Rational& r, unsigned digits = 12);

// "35", "35/3"
std::string to_string(const Rational& r);

// "35", "35/3", "(3/2)*sqrt(5)"
std::string to_string(const Surd& v);

struct NthPowerDecomposition {
  Int delta;  // gcd(a, b)
  Int c1;     // a = delta * c1^n
  Int d1;     // b = delta * d1^n
};

// Given a/b = c^n/d^n exactly, splits a and b as delta times coprime
// n-th powers: a = delta*c1^n, b = delta*d1^n with gcd(c1, d1) = 1.
NthPowerDecomposition nth_power_decompose(const Int& a, const Int& b, const Int& c,
                                          const Int& d, unsigned n);

}  // namespace ptri
