#include "ptri/diophantine.hpp"

#include <stdexcept>

namespace ptri {

std::string to_string(QuarticId eq) {
  switch (eq) {
    case QuarticId::A: return "x^4 - x^2*y^2 + y^4 = z^2";
    case QuarticId::B: return "x^4 + 14*x^2*y^2 + y^4 = z^2";
  }
  throw std::logic_error("unreachable quartic id");
}

std::string to_string(Regime regime) {
  switch (regime) {
    case Regime::MixedParityCoprime: return "coprime, opposite parity";
    case Regime::BothOddCoprime: return "coprime, both odd";
    case Regime::Unconstrained: return "unconstrained";
  }
  throw std::logic_error("unreachable regime");
}

Int quartic_value(QuarticId eq, const Int& x, const Int& y) {
  Int xx = x * x, yy = y * y;
  // A's value is (x^2 - y^2)^2 + (xy)^2 > 0, so both forms are positive.
  if (eq == QuarticId::A) return xx * xx - xx * yy + yy * yy;
  return xx * xx + 14 * xx * yy + yy * yy;
}

bool regime_admits(Regime regime, const Int& x, const Int& y) {
  switch (regime) {
    case Regime::MixedParityCoprime: return gcd(x, y) == 1 && (x + y) % 2 == 1;
    case Regime::BothOddCoprime: return gcd(x, y) == 1 && x % 2 == 1 && y % 2 == 1;
    case Regime::Unconstrained: return true;
  }
  throw std::logic_error("unreachable regime");
}

std::vector<QuarticSolution> search_quartic(QuarticId eq, Regime regime, const Int& bound) {
  if (bound < 1) throw std::domain_error("search_quartic: bound must be >= 1");
  std::vector<QuarticSolution> out;
  for (Int x = 1; x <= bound; ++x) {
    for (Int y = 1; y <= bound; ++y) {
      if (!regime_admits(regime, x, y)) continue;
      Int value = quartic_value(eq, x, y);
      auto [square, root] = is_perfect_square(value);
      if (square) out.push_back({x, y, *root});
    }
  }
  return out;
}

std::vector<MedianSquareHit> median_radicand_scan(const Int& m_max, bool primitive_filter) {
  if (m_max < (primitive_filter ? 2 : 1)) {
    throw std::domain_error("median_radicand_scan: m_max too small");
  }
  std::vector<MedianSquareHit> out;
  for (Int m = 1; m <= m_max; ++m) {
    for (Int n = 1; n <= m; ++n) {
      if (primitive_filter && !params_valid({1, m, n})) continue;
      Int mm = m * m, nn = n * n;
      Int beta_radicand = mm * mm + nn * nn - mm * nn;
      Int gamma_radicand = mm * mm + nn * nn + 14 * mm * nn;
      if (auto [square, root] = is_perfect_square(beta_radicand); square) {
        out.push_back({m, n, ElementId::MuBeta, beta_radicand, *root});
      }
      if (auto [square, root] = is_perfect_square(gamma_radicand); square) {
        out.push_back({m, n, ElementId::MuGamma, gamma_radicand, *root});
      }
    }
  }
  return out;
}

}  // namespace ptri
