// Tests for the seventeen secondary elements: frozen fixtures, agreement of
// the closed forms with the general formulas, an independent coordinate-
// geometry oracle for the six bisectors, classification structure over a
// parameter survey, and the general-triangle bisector helpers.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ptri/elements.hpp"
#include "support/coordinate_oracle.hpp"

#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

using namespace ptri;

namespace {

Surd rat(const Int& num, const Int& den = 1) {
  return Surd::from_rational(Rational(num, den));
}

std::vector<TripleParams> survey(const Int& m_max) {
  std::vector<TripleParams> out;
  for (const auto& [m, n] : enumerate_params(m_max)) {
    for (Int delta = 1; delta <= 3; ++delta) out.push_back({delta, m, n});
  }
  return out;
}

}  // namespace

TEST_CASE("element names in canonical report order") {
  const std::array<std::string_view, kElementCount> expected = {
      "R",        "rho",       "h_alpha",   "h_beta",   "h_gamma",
      "delta_alpha", "delta_beta", "delta_gamma", "d_alpha", "d_beta",
      "d_gamma",  "rho_alpha", "rho_beta",  "rho_gamma", "mu_alpha",
      "mu_beta",  "mu_gamma"};
  CHECK(kElementNames == expected);
  CHECK(element_name(ElementId::DeltaBeta) == "delta_beta");
  CHECK(element_name(ElementId::MuGamma) == "mu_gamma");
}

TEST_CASE("full element table for the (3, 4, 5) triangle") {
  ElementReport r = secondary_elements({1, 2, 1});
  CHECK(r.triple == Triple{5, 4, 3});
  CHECK(r.s == Rational(6));
  CHECK(r.area == Rational(6));

  CHECK(r.value(ElementId::R) == rat(5, 2));
  CHECK(r.value(ElementId::Rho) == rat(1));
  CHECK(r.value(ElementId::HAlpha) == rat(12, 5));
  CHECK(r.value(ElementId::HBeta) == rat(3));
  CHECK(r.value(ElementId::HGamma) == rat(4));
  CHECK(r.value(ElementId::DeltaAlpha) == Surd(Rational(12, 7), 2));
  CHECK(r.value(ElementId::DeltaBeta) == Surd(Rational(3, 2), 5));
  CHECK(r.value(ElementId::DeltaGamma) == Surd(Rational(4, 3), 10));
  CHECK(r.value(ElementId::DAlpha) == Surd(Rational(12), 2));
  CHECK(r.value(ElementId::DBeta) == Surd(Rational(3), 5));
  CHECK(r.value(ElementId::DGamma) == Surd(Rational(4), 10));
  CHECK(r.value(ElementId::RhoAlpha) == rat(6));
  CHECK(r.value(ElementId::RhoBeta) == rat(3));
  CHECK(r.value(ElementId::RhoGamma) == rat(2));
  CHECK(r.value(ElementId::MuAlpha) == rat(5, 2));
  CHECK(r.value(ElementId::MuBeta) == Surd(Rational(1), 13));
  CHECK(r.value(ElementId::MuGamma) == Surd(Rational(1, 2), 73));

  CHECK(r.classification(ElementId::R) == Classification::HalfOddInteger);
  CHECK(r.classification(ElementId::Rho) == Classification::Integer);
  CHECK(r.classification(ElementId::HAlpha) == Classification::NonIntegerRational);
  CHECK(r.classification(ElementId::DeltaBeta) == Classification::Irrational);
}

TEST_CASE("bisector values on the scaled (28, 96, 100) triangle and its quarter") {
  ElementReport big = secondary_elements({4, 4, 3});
  CHECK(big.triple == Triple{100, 96, 28});
  CHECK(big.delta_beta() == rat(35));
  CHECK(big.classification(ElementId::DeltaBeta) == Classification::Integer);
  CHECK(big.d_beta() == rat(140, 3));
  CHECK(big.classification(ElementId::DBeta) == Classification::NonIntegerRational);

  ElementReport prim = secondary_elements({1, 4, 3});
  CHECK(prim.triple == Triple{25, 24, 7});
  CHECK(prim.delta_beta() == rat(35, 4));
  CHECK(prim.d_beta() == rat(35, 3));
}

TEST_CASE("secondary_elements rejects invalid parameters") {
  CHECK_THROWS_AS(secondary_elements({1, 3, 1}), std::domain_error);
  CHECK_THROWS_AS(secondary_elements({1, 1, 2}), std::domain_error);
  CHECK_THROWS_AS(closed_forms({1, 4, 2}), std::domain_error);
}

TEST_CASE("closed forms equal the general formulas across the survey") {
  for (const auto& p : survey(50)) {
    ElementReport general = secondary_elements(p);
    ElementReport closed = closed_forms(p);
    CHECK(general.triple == closed.triple);
    CHECK(general.s == closed.s);
    CHECK(general.area == closed.area);
    for (std::size_t i = 0; i < kElementCount; ++i) {
      CHECK(general.values[i] == closed.values[i]);
    }
  }
}

TEST_CASE("coordinate-geometry oracle confirms all six bisectors") {
  // Exhaustively on a small window, then on a random sample of the wider
  // survey.
  auto check_params = [](const TripleParams& p) {
    ElementReport r = secondary_elements(p);
    testing::BisectorSet oracle = testing::coordinate_bisectors(r.triple);
    CHECK(r.value(ElementId::DeltaAlpha) == oracle.delta_alpha);
    CHECK(r.value(ElementId::DeltaBeta) == oracle.delta_beta);
    CHECK(r.value(ElementId::DeltaGamma) == oracle.delta_gamma);
    CHECK(r.value(ElementId::DAlpha) == oracle.d_alpha);
    CHECK(r.value(ElementId::DBeta) == oracle.d_beta);
    CHECK(r.value(ElementId::DGamma) == oracle.d_gamma);
  };

  for (const auto& p : survey(20)) check_params(p);

  std::vector<TripleParams> wide = survey(50);
  std::mt19937 rng(424243);
  std::uniform_int_distribution<std::size_t> pick(0, wide.size() - 1);
  for (int i = 0; i < 200; ++i) check_params(wide[pick(rng)]);
}

TEST_CASE("general-triangle bisectors on a scalene non-right triangle") {
  TriangleSides t{13, 14, 15};
  CHECK(semiperimeter(t) == Rational(21));
  CHECK(area_squared(t) == Rational(84 * 84));
  CHECK(triangle_area(t) == Surd::from_rational(Rational(84)));

  // t_a^2 = b*c*((b+c)^2 - a^2) / (b+c)^2
  CHECK(internal_bisector(t, Vertex::A).squared() == Rational(141120, 841));
  // e_a^2 = b*c*(a^2 - (b-c)^2) / (b-c)^2 = 35280 = 84^2 * 5
  CHECK(external_bisector(t, Vertex::A) == Surd(Rational(84), 5));
}

TEST_CASE("external bisector undefined when adjacent sides are equal") {
  TriangleSides t{5, 5, 6};
  CHECK(internal_bisector(t, Vertex::C) == Surd::from_rational(Rational(4)));
  CHECK_THROWS_AS(external_bisector(t, Vertex::C), std::domain_error);
  CHECK_NOTHROW(external_bisector(t, Vertex::A));
}

TEST_CASE("degenerate or impossible side triples are rejected") {
  CHECK_THROWS_AS(validate_triangle({1, 2, 3}), std::domain_error);
  CHECK_THROWS_AS(validate_triangle({1, 1, 5}), std::domain_error);
  CHECK_THROWS_AS(validate_triangle({0, 3, 4}), std::domain_error);
  CHECK_THROWS_AS(internal_bisector({1, 2, 3}, Vertex::B), std::domain_error);
}

TEST_CASE("classification structure across the survey") {
  for (const auto& p : survey(50)) {
    ElementReport r = secondary_elements(p);
    const Int sum_sq = p.m * p.m + p.n * p.n;

    for (ElementId id : {ElementId::Rho, ElementId::HBeta, ElementId::HGamma,
                         ElementId::RhoAlpha, ElementId::RhoBeta, ElementId::RhoGamma}) {
      CHECK(r.classification(id) == Classification::Integer);
    }
    for (ElementId id : {ElementId::DeltaAlpha, ElementId::DeltaGamma, ElementId::DAlpha,
                         ElementId::DGamma, ElementId::MuBeta, ElementId::MuGamma}) {
      CHECK(r.classification(id) == Classification::Irrational);
    }
    Classification even_odd = (p.delta % 2 == 0) ? Classification::Integer
                                                 : Classification::HalfOddInteger;
    CHECK(r.classification(ElementId::R) == even_odd);
    CHECK(r.classification(ElementId::MuAlpha) == even_odd);

    Classification h_alpha = (p.delta % sum_sq == 0) ? Classification::Integer
                                                     : Classification::NonIntegerRational;
    CHECK(r.classification(ElementId::HAlpha) == h_alpha);

    bool hyp_param_square = is_perfect_square(sum_sq).first;
    CHECK(r.value(ElementId::DeltaBeta).is_rational() == hyp_param_square);
    CHECK(r.value(ElementId::DBeta).is_rational() == hyp_param_square);
  }
}

TEST_CASE("cross identities among the elements") {
  for (const auto& p : survey(20)) {
    ElementReport r = secondary_elements(p);
    CHECK(r.value(ElementId::Rho).as_rational() == r.s - Rational(r.triple.alpha));
    CHECK(r.value(ElementId::RhoAlpha).as_rational() + r.value(ElementId::RhoBeta).as_rational() +
              r.value(ElementId::RhoGamma).as_rational() ==
          Rational(4) * r.value(ElementId::R).as_rational() +
              r.value(ElementId::Rho).as_rational());
    CHECK(r.area * r.area == r.value(ElementId::Rho).as_rational() *
                                 r.value(ElementId::RhoAlpha).as_rational() *
                                 r.value(ElementId::RhoBeta).as_rational() *
                                 r.value(ElementId::RhoGamma).as_rational());
    CHECK(r.value(ElementId::HBeta).as_rational() == Rational(r.triple.gamma));
    CHECK(r.value(ElementId::HGamma).as_rational() == Rational(r.triple.beta));
    CHECK(r.value(ElementId::MuAlpha) == r.value(ElementId::R));
  }
}

TEST_CASE("right-triangle bisector identity |AD| = h*(p^2 - b^2)") {
  // For a right triangle with legs b, p and hypotenuse h, the triangle with
  //   |BC| = 2*b*p^2,  |CA| = p*(p^2 + b^2),  |AB| = p*(p^2 - b^2)
  // has internal bisector from A of length exactly h*(p^2 - b^2) whenever
  // p > b; with p < b the third side is non-positive and the construction
  // must be rejected.
  auto run_case = [](const Int& leg1, const Int& leg2, const Int& h) {
    REQUIRE(leg1 * leg1 + leg2 * leg2 == h * h);
    for (const auto& [p, b] :
         {std::pair<Int, Int>{leg1, leg2}, std::pair<Int, Int>{leg2, leg1}}) {
      Int pp = p * p, bb = b * b;
      if (p > b) {
        TriangleSides t{2 * b * pp, p * (pp + bb), p * (pp - bb)};
        CHECK(internal_bisector(t, Vertex::A) ==
              Surd::from_rational(Rational(h * (pp - bb))));
      } else {
        CHECK_THROWS_AS(internal_bisector({2 * b * pp, p * (pp + bb), p * (pp - bb)}, Vertex::A),
                        std::domain_error);
      }
    }
  };

  // The classical instance: (b, p) = (3, 4) gives sides (96, 100, 28) and
  // bisector 35.
  {
    TriangleSides t{96, 100, 28};
    CHECK(internal_bisector(t, Vertex::A) == Surd::from_rational(Rational(35)));
  }

  int covered = 0;
  for (const auto& [m, n] : enumerate_params(9)) {
    Triple t = generate({1, m, n});
    if (t.alpha > 100) continue;
    run_case(t.beta, t.gamma, t.alpha);
    ++covered;
  }
  CHECK(covered >= 16);  // all primitive right triangles with hypotenuse <= 100
  run_case(6, 8, 10);    // a non-primitive instance behaves the same
}
