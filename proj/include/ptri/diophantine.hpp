#pragma once

#include <vector>

#include "ptri/elements.hpp"
#include "ptri/exact.hpp"

namespace ptri {

// The two quartic forms whose square values are searched for:
//   A: x^4 -  x^2 y^2 + y^4 = z^2
//   B: x^4 + 14 x^2 y^2 + y^4 = z^2
enum class QuarticId { A, B };

enum class Regime { MixedParityCoprime, BothOddCoprime, Unconstrained };

std::string to_string(QuarticId eq);
std::string to_string(Regime regime);

struct QuarticSolution {
  Int x, y, z;
  bool operator==(const QuarticSolution&) const = default;
};

// Value of the chosen quartic form at (x, y).
Int quartic_value(QuarticId eq, const Int& x, const Int& y);

// True iff (x, y) is admitted by the regime's side conditions.
bool regime_admits(Regime regime, const Int& x, const Int& y);

// Exhaustive scan of the box 1 <= x, y <= bound in lexicographic (x, y)
// order, keeping the admitted pairs whose quartic value is a perfect square.
// Requires bound >= 1.
std::vector<QuarticSolution> search_quartic(QuarticId eq, Regime regime, const Int& bound);

// One parameter pair whose median radicand turned out to be a perfect
// square. `id` is MuBeta or MuGamma; `root` is the integer square root of
// the radicand value m^4 + n^4 -+ ... evaluated before square-free reduction.
struct MedianSquareHit {
  Int m, n;
  ElementId id = ElementId::MuBeta;
  Int radicand, root;
  bool operator==(const MedianSquareHit&) const = default;
};

// Scans the median radicands m^4 + n^4 - m^2 n^2 and m^4 + n^4 + 14 m^2 n^2
// for perfect squares. With the primitive filter on (the default), only
// valid generator pairs (n < m, coprime, opposite parity) are scanned and
// m_max must be >= 2; with the filter off every pair 1 <= n <= m <= m_max is
// scanned (diagnostic mode, admitting e.g. the both-odd pair (1, 1)).
std::vector<MedianSquareHit> median_radicand_scan(const Int& m_max, bool primitive_filter = true);

}  // namespace ptri
