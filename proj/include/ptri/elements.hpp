#pragma once

// The seventeen secondary elements of a Pythagorean triangle: circumradius
// and inradius, the three heights, internal and external bisectors, the
// exradii and the medians. Two independent computation paths are provided:
//
//   secondary_elements  - the general triangle formulas, evaluated exactly
//                         (the normative path);
//   closed_forms        - closed expressions in (delta, m, n) that must
//                         agree with the normative path element by element.
//
// Sides follow the fixed labeling of the parametrization: alpha is the
// hypotenuse, beta the even leg, gamma the delta*(m^2 - n^2) leg; an
// element subscripted x belongs to side x / the vertex opposite it.

#include "ptri/exact.hpp"
#include "ptri/triples.hpp"

#include <array>
#include <cstddef>
#include <string_view>

namespace ptri {

enum class ElementId : std::size_t {
  R,
  Rho,
  HAlpha,
  HBeta,
  HGamma,
  DeltaAlpha,
  DeltaBeta,
  DeltaGamma,
  DAlpha,
  DBeta,
  DGamma,
  RhoAlpha,
  RhoBeta,
  RhoGamma,
  MuAlpha,
  MuBeta,
  MuGamma,
};

inline constexpr std::size_t kElementCount = 17;

// Ascii names in canonical report order.
extern const std::array<std::string_view, kElementCount> kElementNames;

std::string_view element_name(ElementId id);

struct ElementReport {
  TripleParams params;
  Triple triple;
  Rational s;     // semiperimeter
  Rational area;  // exact; beta*gamma/2 for a right triangle
  std::array<Surd, kElementCount> values;

  const Surd& value(ElementId id) const { return values[static_cast<std::size_t>(id)]; }
  Surd& value(ElementId id) { return values[static_cast<std::size_t>(id)]; }
  Classification classification(ElementId id) const { return classify(value(id)); }

  const Surd& circumradius() const { return value(ElementId::R); }
  const Surd& inradius() const { return value(ElementId::Rho); }
  const Surd& delta_beta() const { return value(ElementId::DeltaBeta); }
  const Surd& d_beta() const { return value(ElementId::DBeta); }
};

// Normative path: semiperimeter and area, then the general formulas with
// exact rational prefactors and sqrt_of_rational for the radicals.
ElementReport secondary_elements(const TripleParams& params);

// Closed forms in (delta, m, n). Equals secondary_elements exactly.
ElementReport closed_forms(const TripleParams& params);

// ---- General integer-sided triangles --------------------------------
//
// Needed beyond the Pythagorean case (e.g. Kersey's family of rational
// right triangles is checked through these). Sides are labeled by the
// opposite vertex: a = |BC|, b = |CA|, c = |AB|.

struct TriangleSides {
  Int a, b, c;
};

enum class Vertex { A, B, C };

// Throws if sides are non-positive or violate the strict triangle
// inequality.
void validate_triangle(const TriangleSides& t);

Rational semiperimeter(const TriangleSides& t);

// Heron's expression s(s-a)(s-b)(s-c), exact.
Rational area_squared(const TriangleSides& t);

Surd triangle_area(const TriangleSides& t);

Surd internal_bisector(const TriangleSides& t, Vertex from);

// Undefined when the two adjacent sides are equal (the bisector is
// parallel to the opposite side); that case is a domain error.
Surd external_bisector(const TriangleSides& t, Vertex from);

}  // namespace ptri
