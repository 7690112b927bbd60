#pragma once

// Pythagorean triples through the classical parametrization
//
//   beta = delta*2mn,  gamma = delta*(m^2 - n^2),  alpha = delta*(m^2 + n^2)
//
// with m > n >= 1, gcd(m, n) = 1 and m + n odd. beta is always the even
// leg and gamma the delta*(m^2 - n^2) leg; every element subscript
// downstream relies on this fixed labeling.

#include "ptri/exact.hpp"

#include <string>
#include <vector>

namespace ptri {

struct TripleParams {
  Int delta;
  Int m;
  Int n;

  friend bool operator==(const TripleParams&, const TripleParams&) = default;
};

struct Triple {
  Int alpha;  // hypotenuse
  Int beta;   // even leg
  Int gamma;  // odd-leg-times-delta

  friend bool operator==(const Triple&, const Triple&) = default;
};

// Empty when (delta, m, n) is admissible; otherwise one entry per violated
// condition. Non-positive inputs are a domain error, not a violation.
std::vector<std::string> validate_params(const Int& delta, const Int& m, const Int& n);

bool params_valid(const TripleParams& p);

Triple generate(const TripleParams& p);

// Sides in any order; the hypotenuse is inferred as the maximum.
TripleParams decompose(const Int& a, const Int& b, const Int& c);

// All primitive (m, n) with n < m <= m_max, in (m, n) ascending order.
std::vector<std::pair<Int, Int>> enumerate_params(const Int& m_max);

}  // namespace ptri
