#include "ptri/elements.hpp"

#include <stdexcept>

namespace ptri {

const std::array<std::string_view, kElementCount> kElementNames = {
    "R",       "rho",       "h_alpha",   "h_beta",    "h_gamma",  "delta_alpha",
    "delta_beta", "delta_gamma", "d_alpha", "d_beta",  "d_gamma",  "rho_alpha",
    "rho_beta",   "rho_gamma",   "mu_alpha", "mu_beta", "mu_gamma",
};

std::string_view element_name(ElementId id) {
  return kElementNames[static_cast<std::size_t>(id)];
}

void validate_triangle(const TriangleSides& t) {
  if (t.a < 1 || t.b < 1 || t.c < 1) {
    throw std::domain_error("triangle: sides must be positive");
  }
  if (t.a + t.b <= t.c || t.b + t.c <= t.a || t.a + t.c <= t.b) {
    throw std::domain_error("triangle: strict triangle inequality violated");
  }
}

Rational semiperimeter(const TriangleSides& t) {
  validate_triangle(t);
  return Rational(t.a + t.b + t.c, 2);
}

Rational area_squared(const TriangleSides& t) {
  Rational s = semiperimeter(t);
  return s * (s - Rational(t.a)) * (s - Rational(t.b)) * (s - Rational(t.c));
}

Surd triangle_area(const TriangleSides& t) { return sqrt_of_rational(area_squared(t)); }

namespace {

// Adjacent sides (u, v) and the opposite side w, as seen from a vertex.
struct VertexSides {
  Int u, v, w;
};

VertexSides sides_at(const TriangleSides& t, Vertex from) {
  switch (from) {
    case Vertex::A: return {t.b, t.c, t.a};
    case Vertex::B: return {t.a, t.c, t.b};
    case Vertex::C: return {t.a, t.b, t.c};
  }
  throw std::logic_error("unreachable vertex");
}

}  // namespace

Surd internal_bisector(const TriangleSides& t, Vertex from) {
  validate_triangle(t);
  auto [u, v, w] = sides_at(t, from);
  Rational s = semiperimeter(t);
  Rational prefactor = Rational(2 * u * v, u + v);
  return surd_scale(prefactor, sqrt_of_rational(s * (s - Rational(w)) / Rational(u * v)));
}

Surd external_bisector(const TriangleSides& t, Vertex from) {
  validate_triangle(t);
  auto [u, v, w] = sides_at(t, from);
  if (u == v) {
    throw std::domain_error("external_bisector: undefined for equal adjacent sides");
  }
  Rational s = semiperimeter(t);
  Rational prefactor = Rational(2 * u * v, boost::multiprecision::abs(u - v));
  return surd_scale(prefactor,
                    sqrt_of_rational((s - Rational(u)) * (s - Rational(v)) / Rational(u * v)));
}

namespace {

void check_report(const ElementReport& r) {
  using E = ElementId;
  for (const Surd& v : r.values) {
    if (v.is_zero()) throw std::logic_error("element report: zero element value");
  }
  const Int &alpha = r.triple.alpha, &beta = r.triple.beta, &gamma = r.triple.gamma;
  if (alpha == beta || alpha == gamma || beta == gamma) {
    throw std::logic_error("element report: Pythagorean triangle cannot be isosceles");
  }
  bool ok = r.value(E::HBeta) == Surd::from_rational(Rational(gamma)) &&
            r.value(E::HGamma) == Surd::from_rational(Rational(beta)) &&
            r.value(E::MuAlpha) == r.value(E::R) &&
            r.value(E::Rho) == Surd::from_rational(r.s - Rational(alpha));
  // Classical cross-checks: exradii sum and Heron's product.
  Rational four_r_plus_rho = Rational(4) * r.value(E::R).as_rational() + r.value(E::Rho).as_rational();
  Rational exradius_sum = r.value(E::RhoAlpha).as_rational() + r.value(E::RhoBeta).as_rational() +
                          r.value(E::RhoGamma).as_rational();
  Rational exradius_product = r.value(E::Rho).as_rational() * r.value(E::RhoAlpha).as_rational() *
                              r.value(E::RhoBeta).as_rational() * r.value(E::RhoGamma).as_rational();
  ok = ok && exradius_sum == four_r_plus_rho && r.area * r.area == exradius_product;
  if (!ok) throw std::logic_error("element report: identity cross-check failed");
}

}  // namespace

ElementReport secondary_elements(const TripleParams& params) {
  using E = ElementId;
  ElementReport r;
  r.params = params;
  r.triple = generate(params);
  const Int &alpha = r.triple.alpha, &beta = r.triple.beta, &gamma = r.triple.gamma;
  TriangleSides t{alpha, beta, gamma};
  r.s = semiperimeter(t);
  r.area = Rational(beta * gamma, 2);
  if (r.area * r.area != area_squared(t)) {
    throw std::logic_error("secondary_elements: right-triangle area disagrees with Heron");
  }

  r.value(E::R) = Surd::from_rational(Rational(alpha * beta * gamma) / (Rational(4) * r.area));
  r.value(E::Rho) = Surd::from_rational(r.area / r.s);

  r.value(E::HAlpha) = Surd::from_rational(Rational(2) * r.area / Rational(alpha));
  r.value(E::HBeta) = Surd::from_rational(Rational(2) * r.area / Rational(beta));
  r.value(E::HGamma) = Surd::from_rational(Rational(2) * r.area / Rational(gamma));

  r.value(E::DeltaAlpha) = internal_bisector(t, Vertex::A);
  r.value(E::DeltaBeta) = internal_bisector(t, Vertex::B);
  r.value(E::DeltaGamma) = internal_bisector(t, Vertex::C);

  r.value(E::DAlpha) = external_bisector(t, Vertex::A);
  r.value(E::DBeta) = external_bisector(t, Vertex::B);
  r.value(E::DGamma) = external_bisector(t, Vertex::C);

  r.value(E::RhoAlpha) = Surd::from_rational(r.area / (r.s - Rational(alpha)));
  r.value(E::RhoBeta) = Surd::from_rational(r.area / (r.s - Rational(beta)));
  r.value(E::RhoGamma) = Surd::from_rational(r.area / (r.s - Rational(gamma)));

  auto median = [](const Int& opp, const Int& s1, const Int& s2) {
    return surd_scale(Rational(1, 2), sqrt_of_rational(Rational(2 * (s1 * s1 + s2 * s2) - opp * opp)));
  };
  r.value(E::MuAlpha) = median(alpha, beta, gamma);
  r.value(E::MuBeta) = median(beta, alpha, gamma);
  r.value(E::MuGamma) = median(gamma, alpha, beta);

  check_report(r);
  return r;
}

ElementReport closed_forms(const TripleParams& params) {
  using E = ElementId;
  ElementReport r;
  r.params = params;
  r.triple = generate(params);
  const Int &delta = params.delta, &m = params.m, &n = params.n;
  Int mm = m * m, nn = n * n;
  Int sum = mm + nn, diff = mm - nn, twomn = 2 * m * n;
  r.s = Rational(r.triple.alpha + r.triple.beta + r.triple.gamma, 2);
  r.area = Rational(r.triple.beta * r.triple.gamma, 2);

  r.value(E::R) = Surd::from_rational(Rational(delta * sum, 2));
  r.value(E::Rho) = Surd::from_rational(Rational(delta * n * (m - n)));

  r.value(E::HAlpha) = Surd::from_rational(Rational(delta * twomn * diff, sum));
  r.value(E::HBeta) = Surd::from_rational(Rational(delta * diff));
  r.value(E::HGamma) = Surd::from_rational(Rational(delta * twomn));

  r.value(E::DeltaAlpha) =
      surd_scale(Rational(2 * delta * twomn * diff, twomn + diff), sqrt_of_rational(Rational(1, 2)));
  r.value(E::DeltaBeta) = surd_scale(Rational(delta * diff, m), sqrt_of_rational(Rational(sum)));
  r.value(E::DeltaGamma) =
      surd_scale(Rational(2 * delta * twomn, 2 * (m + n)), sqrt_of_rational(Rational(2 * sum)));

  r.value(E::DAlpha) =
      surd_scale(Rational(2 * delta * twomn * diff, boost::multiprecision::abs(twomn - diff)),
                 sqrt_of_rational(Rational(1, 2)));
  r.value(E::DBeta) = surd_scale(Rational(delta * diff, n), sqrt_of_rational(Rational(sum)));
  r.value(E::DGamma) =
      surd_scale(Rational(2 * delta * twomn * sum, m - n), sqrt_of_rational(Rational(1, 2 * sum)));

  r.value(E::RhoAlpha) = Surd::from_rational(Rational(delta * m * (m + n)));
  r.value(E::RhoBeta) = Surd::from_rational(Rational(delta * n * (m + n)));
  r.value(E::RhoGamma) = Surd::from_rational(Rational(delta * m * (m - n)));

  r.value(E::MuAlpha) = Surd::from_rational(Rational(delta * sum, 2));
  r.value(E::MuBeta) =
      surd_scale(Rational(delta), sqrt_of_rational(Rational(mm * mm + nn * nn - mm * nn)));
  r.value(E::MuGamma) =
      surd_scale(Rational(delta, 2), sqrt_of_rational(Rational(mm * mm + nn * nn + 14 * mm * nn)));

  check_report(r);
  return r;
}

}  // namespace ptri
