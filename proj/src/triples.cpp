#include "ptri/triples.hpp"

#include <algorithm>
#include <stdexcept>

namespace ptri {

std::vector<std::string> validate_params(const Int& delta, const Int& m, const Int& n) {
  if (delta < 1 || m < 1 || n < 1) {
    throw std::domain_error("validate_params: delta, m, n must be positive");
  }
  std::vector<std::string> violations;
  if (m <= n) violations.push_back("order: m > n required");
  if (gcd(m, n) != 1) violations.push_back("coprimality: gcd(m, n) = 1 required");
  if ((m + n) % 2 == 0) violations.push_back("parity: m + n must be odd");
  return violations;
}

bool params_valid(const TripleParams& p) {
  return validate_params(p.delta, p.m, p.n).empty();
}

Triple generate(const TripleParams& p) {
  auto violations = validate_params(p.delta, p.m, p.n);
  if (!violations.empty()) {
    std::string msg = "generate: invalid params:";
    for (const auto& v : violations) msg += " [" + v + "]";
    throw std::domain_error(msg);
  }
  Triple t{p.delta * (p.m * p.m + p.n * p.n), p.delta * 2 * p.m * p.n,
           p.delta * (p.m * p.m - p.n * p.n)};
  if (t.beta * t.beta + t.gamma * t.gamma != t.alpha * t.alpha) {
    throw std::logic_error("generate: postcondition beta^2 + gamma^2 = alpha^2 failed");
  }
  return t;
}

TripleParams decompose(const Int& a, const Int& b, const Int& c) {
  if (a < 1 || b < 1 || c < 1) throw std::domain_error("decompose: sides must be positive");
  Int hyp = std::max({a, b, c});
  Int leg1 = a, leg2 = b;
  if (hyp == a) {
    leg1 = b;
    leg2 = c;
  } else if (hyp == b) {
    leg1 = a;
    leg2 = c;
  } else {
    leg1 = a;
    leg2 = b;
  }
  if (leg1 * leg1 + leg2 * leg2 != hyp * hyp) {
    throw std::domain_error("decompose: not a Pythagorean triple");
  }
  Int delta = gcd(gcd(hyp, leg1), leg2);
  Int alpha = hyp / delta;
  Int l1 = leg1 / delta, l2 = leg2 / delta;
  // The primitive reduct has exactly one odd leg; alpha +- odd leg are
  // both even and their halves are the squares m^2, n^2.
  Int odd_leg = (l1 % 2 != 0) ? l1 : l2;
  if (odd_leg % 2 == 0) {
    throw std::logic_error("decompose: primitive reduct has no odd leg");
  }
  auto [ok_m, m] = is_perfect_square((alpha + odd_leg) / 2);
  auto [ok_n, n] = is_perfect_square((alpha - odd_leg) / 2);
  if (!ok_m || !ok_n) {
    throw std::logic_error("decompose: interior square roots not exact");
  }
  TripleParams p{delta, *m, *n};
  if (generate(p) != Triple{hyp, delta * 2 * *m * *n, delta * odd_leg}) {
    throw std::logic_error("decompose: round-trip failed");
  }
  return p;
}

std::vector<std::pair<Int, Int>> enumerate_params(const Int& m_max) {
  if (m_max < 2) throw std::domain_error("enumerate_params: m_max must be at least 2");
  std::vector<std::pair<Int, Int>> out;
  for (Int m = 2; m <= m_max; ++m) {
    for (Int n = 1; n < m; ++n) {
      if (gcd(m, n) == 1 && (m + n) % 2 == 1) out.emplace_back(m, n);
    }
  }
  return out;
}

}  // namespace ptri
