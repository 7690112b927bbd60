#include "ptri/exact.hpp"

#include <cmath>
#include <cstdint>

namespace ptri {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::domain_error(msg);
}

// Trial division stops here so the split terminates fast on any input; a
// cofactor with no factor below the bound is then folded in whole (or, when
// it is a perfect square, its root goes to the square part). Exact for all
// n below kTrialBound^2 = 10^12, which covers every value this library
// canonicalizes at desk scale.
constexpr std::uint64_t kTrialBound = 1'000'000;

// Squarefree split by trial division, in native words when the value fits.
std::pair<std::uint64_t, std::uint64_t> squarefree_u64(std::uint64_t n) {
  std::uint64_t s = 1, f = 1;
  for (std::uint64_t p = 2; p <= kTrialBound && p * p <= n; p += (p == 2) ? 1 : 2) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (unsigned i = 0; i + 1 < e; i += 2) f *= p;
    if (e % 2 == 1) s *= p;
  }
  if (n > 1) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    // Settle double rounding with division so nothing overflows near 2^64.
    while (r > 1 && r > n / r) --r;
    while (r + 1 <= n / (r + 1)) ++r;
    if (r * r == n) {
      f *= r;
      n = 1;
    }
  }
  return {s * n, f};
}

}  // namespace

Int gcd(const Int& a, const Int& b) {
  require(a >= 0 && b >= 0, "gcd: arguments must be nonnegative");
  require(a != 0 || b != 0, "gcd(0, 0) is undefined");
  return boost::multiprecision::gcd(a, b);
}

Int isqrt(const Int& n) {
  require(n >= 0, "isqrt: negative argument");
  if (n == 0) return 0;
  // Newton: x <- (x + n/x) / 2, seeded above the root.
  Int x = Int(1) << (static_cast<unsigned>(boost::multiprecision::msb(n)) / 2 + 1);
  Int y = (x + n / x) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return x;
}

std::pair<bool, std::optional<Int>> is_perfect_square(const Int& n) {
  require(n >= 1, "is_perfect_square: argument must be positive");
  Int r = isqrt(n);
  if (r * r == n) return {true, r};
  return {false, std::nullopt};
}

std::pair<Int, Int> squarefree_decompose(const Int& n) {
  require(n >= 1, "squarefree_decompose: argument must be positive");
  if (n <= Int(UINT64_MAX)) {
    auto [s, f] = squarefree_u64(static_cast<std::uint64_t>(n));
    return {Int(s), Int(f)};
  }
  Int rest = n, s = 1, f = 1;
  for (Int p = 2; p <= kTrialBound && p * p <= rest; p += (p == 2) ? 1 : 2) {
    if (rest % p != 0) continue;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (unsigned i = 0; i + 1 < e; i += 2) f *= p;
    if (e % 2 == 1) s *= p;
  }
  if (rest > 1) {
    Int r = isqrt(rest);
    if (r * r == rest) {
      f *= r;
      rest = 1;
    }
  }
  return {s * rest, f};
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::Integer: return "Integer";
    case Classification::HalfOddInteger: return "HalfOddInteger";
    case Classification::NonIntegerRational: return "NonIntegerRational";
    case Classification::Irrational: return "Irrational";
  }
  throw std::logic_error("unreachable classification");
}

Surd::Surd(Rational coeff, Int radicand) : coeff_(std::move(coeff)), radicand_(std::move(radicand)) {
  require(coeff_ >= 0, "Surd: negative coefficient");
  require(radicand_ >= 1, "Surd: radicand must be positive");
  if (coeff_ == 0) {
    radicand_ = 1;
    return;
  }
  auto [s, f] = squarefree_decompose(radicand_);
  coeff_ *= Rational(f);
  radicand_ = s;
}

Surd Surd::from_rational(const Rational& r) {
  require(r >= 0, "Surd: negative value");
  return Surd(r, 1);
}

Rational Surd::squared() const { return coeff_ * coeff_ * Rational(radicand_); }

Rational Surd::as_rational() const {
  require(radicand_ == 1, "Surd: irrational value has no rational form");
  return coeff_;
}

std::string Surd::decimal(unsigned digits) const {
  // floor(p*sqrt(rad)/q * 10^d) = floor(isqrt(p^2 * rad * 10^(2d)) / q).
  Int p = num(coeff_), q = den(coeff_);
  Int pow10 = boost::multiprecision::pow(Int(10), digits);
  Int w = isqrt(p * p * radicand_ * pow10 * pow10) / q;
  Int ip = w / pow10, frac = w % pow10;
  std::string out = ip.str();
  if (digits == 0) return out;
  std::string fs = frac.str();
  return out + "." + std::string(digits - fs.size(), '0') + fs;
}

Surd sqrt_of_rational(const Rational& x) {
  require(x >= 0, "sqrt_of_rational: negative argument");
  if (x == 0) return Surd();
  auto [s1, f1] = squarefree_decompose(num(x));
  auto [s2, f2] = squarefree_decompose(den(x));
  // sqrt(s1 f1^2 / (s2 f2^2)) = (f1 / (f2 s2)) * sqrt(s1 s2); s1 s2 is
  // squarefree because numerator and denominator are coprime.
  return Surd(Rational(f1, f2 * s2), s1 * s2);
}

Surd surd_scale(const Rational& c, const Surd& v) {
  if (c < 0) throw std::domain_error("surd_scale: negative scalar");
  if (c == 0 || v.is_zero()) return Surd();
  return Surd(c * v.coeff(), v.radicand());
}

Classification classify(const Surd& v) {
  if (v.radicand() > 1) return Classification::Irrational;
  const Rational& c = v.coeff();
  if (den(c) == 1) return Classification::Integer;
  if (den(c) == 2 && num(c) % 2 != 0) return Classification::HalfOddInteger;
  return Classification::NonIntegerRational;
}

std::string rational_decimal(const Rational& r, unsigned digits) {
  Int pow10 = boost::multiprecision::pow(Int(10), digits);
  Int a = num(r), q = den(r);
  bool neg = a < 0;
  if (neg) a = -a;
  Int w = a * pow10 / q;
  Int ip = w / pow10, frac = w % pow10;
  std::string out = (neg && w != 0 ? "-" : "") + ip.str();
  if (digits == 0) return out;
  std::string fs = frac.str();
  return out + "." + std::string(digits - fs.size(), '0') + fs;
}

std::string to_string(const Rational& r) {
  if (den(r) == 1) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

std::string to_string(const Surd& v) {
  if (v.is_rational()) return to_string(v.coeff());
  std::string c = to_string(v.coeff());
  if (c.find('/') != std::string::npos) c = "(" + c + ")";
  return c + "*sqrt(" + v.radicand().str() + ")";
}

NthPowerDecomposition nth_power_decompose(const Int& a, const Int& b, const Int& c,
                                          const Int& d, unsigned n) {
  require(a >= 1 && b >= 1 && c >= 1 && d >= 1, "nth_power_decompose: arguments must be positive");
  require(n >= 1, "nth_power_decompose: exponent must be positive");
  Int cn = boost::multiprecision::pow(c, n);
  Int dn = boost::multiprecision::pow(d, n);
  require(a * dn == b * cn, "nth_power_decompose: a/b != c^n/d^n");
  Int delta = gcd(a, b);
  Int g = gcd(c, d);
  NthPowerDecomposition out{delta, c / g, d / g};
  if (delta * boost::multiprecision::pow(out.c1, n) != a ||
      delta * boost::multiprecision::pow(out.d1, n) != b) {
    throw std::logic_error("nth_power_decompose: postcondition failed");
  }
  return out;
}

}  // namespace ptri
