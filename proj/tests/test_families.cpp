// Tests for the five bisector families: member construction, rejection
// reasons, enumeration order, the rational bisector values, and coverage of
// all qualifying (m, n) pairs in a finite window.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ptri/elements.hpp"
#include "ptri/families.hpp"
#include "ptri/triples.hpp"

#include <algorithm>
#include <stdexcept>
#include <variant>
#include <vector>

using namespace ptri;

namespace {

FamilyMember member(int family, const Int& k, const Int& l) {
  FamilyResult res = family_generate(family, k, l);
  REQUIRE(std::holds_alternative<FamilyMember>(res));
  return std::get<FamilyMember>(res);
}

FamilyRejection rejection(int family, const Int& k, const Int& l) {
  FamilyResult res = family_generate(family, k, l);
  REQUIRE(std::holds_alternative<FamilyRejection>(res));
  return std::get<FamilyRejection>(res);
}

}  // namespace

TEST_CASE("family member fixtures") {
  FamilyMember f1 = member(1, 6, 1);
  CHECK(f1.m == 1225);
  CHECK(f1.n == 888);
  CHECK(f1.root == 1513);
  REQUIRE(f1.t.has_value());
  CHECK(*f1.t == 35);

  FamilyMember f2 = member(2, 4, 5);
  CHECK(f2.m == 1600);
  CHECK(f2.n == 399);
  CHECK(f2.root == 1649);
  CHECK(*f2.t == 40);

  FamilyMember f2min = member(2, 1, 1);
  CHECK(f2min.m == 4);
  CHECK(f2min.n == 3);
  CHECK(f2min.root == 5);
  CHECK(*f2min.t == 2);

  FamilyMember f3 = member(3, 3, 2);
  CHECK(f3.m == 144);
  CHECK(f3.n == 17);
  CHECK(f3.root == 145);
  CHECK(*f3.t == 12);

  FamilyMember f4 = member(4, 4, 1);
  CHECK(f4.m == 15);
  CHECK(f4.n == 8);
  CHECK(f4.root == 17);
  CHECK_FALSE(f4.t.has_value());

  FamilyMember f5 = member(5, 2, 1);
  CHECK(f5.m == 4);
  CHECK(f5.n == 3);
  CHECK(f5.root == 5);
  CHECK_FALSE(f5.t.has_value());
}

TEST_CASE("members always define valid primitive parameters with square certificates") {
  for (int family = 1; family <= 5; ++family) {
    for (const auto& mem : family_enumerate(family, 8)) {
      CHECK(params_valid({1, mem.m, mem.n}));
      CHECK(mem.root * mem.root == mem.m * mem.m + mem.n * mem.n);
      if (family <= 3) {
        REQUIRE(mem.t.has_value());
        CHECK((*mem.t) * (*mem.t) == mem.m);
      } else {
        CHECK_FALSE(mem.t.has_value());
      }
    }
  }
}

TEST_CASE("rejection carries every failed side condition") {
  FamilyRejection r41 = rejection(4, 2, 1);
  REQUIRE(r41.reasons.size() == 1);
  CHECK(r41.reasons[0] == "m=3 < n=4 (m > n required)");

  FamilyRejection r1 = rejection(1, 2, 1);
  REQUIRE(r1.reasons.size() == 1);
  CHECK(r1.reasons[0] == "m=9 < n=40 (m > n required)");

  FamilyRejection r2 = rejection(2, 1, 2);
  CHECK(std::count(r2.reasons.begin(), r2.reasons.end(), "l must be odd") == 1);
  CHECK(std::count(r2.reasons.begin(), r2.reasons.end(), "2k^2 > l^2 required") == 1);

  FamilyRejection r5 = rejection(5, 1, 2);
  REQUIRE(r5.reasons.size() == 1);
  CHECK(r5.reasons[0] == "K > L required");

  FamilyRejection parity = rejection(4, 3, 1);
  CHECK(std::count(parity.reasons.begin(), parity.reasons.end(), "K + L must be odd") == 1);

  FamilyRejection common = rejection(4, 6, 3);
  CHECK(std::count(common.reasons.begin(), common.reasons.end(), "gcd(K, L) = 1 required") == 1);
}

TEST_CASE("family_generate rejects bad family ids and non-positive generators") {
  CHECK_THROWS_AS(family_generate(0, 2, 1), std::domain_error);
  CHECK_THROWS_AS(family_generate(6, 2, 1), std::domain_error);
  CHECK_THROWS_AS(family_generate(1, 0, 1), std::domain_error);
  CHECK_THROWS_AS(family_generate(1, 2, -1), std::domain_error);
  CHECK_THROWS_AS(family_enumerate(7, 3), std::domain_error);
  CHECK_THROWS_AS(family_enumerate(1, 0), std::domain_error);
}

TEST_CASE("enumeration is ordered by (k + l, k, l) and respects the bound") {
  auto kl = [](const std::vector<FamilyMember>& ms) {
    std::vector<std::pair<Int, Int>> out;
    for (const auto& m : ms) out.emplace_back(m.k, m.l);
    return out;
  };
  using Pairs = std::vector<std::pair<Int, Int>>;

  CHECK(kl(family_enumerate(1, 6)) == Pairs{{6, 1}});
  CHECK(kl(family_enumerate(3, 5)) == Pairs{{3, 2}, {5, 3}});
  CHECK(kl(family_enumerate(4, 1)).empty());
  CHECK(kl(family_enumerate(4, 2)).empty());
  CHECK(kl(family_enumerate(4, 8)) ==
        Pairs{{4, 1}, {5, 2}, {6, 1}, {7, 2}, {8, 1}, {8, 3}});
  CHECK(kl(family_enumerate(5, 4)) == Pairs{{2, 1}, {3, 2}, {4, 3}});

  FamilyEnumeration full = family_enumerate_full(4, 2);
  CHECK(full.members.empty());
  // (1, 1), (1, 2), (2, 1), (2, 2) all fail some condition.
  CHECK(full.rejections.size() == 4);
  bool has_21 = false;
  for (const auto& r : full.rejections) {
    if (r.k == 2 && r.l == 1) {
      has_21 = true;
      REQUIRE(r.reasons.size() == 1);
      CHECK(r.reasons[0] == "m=3 < n=4 (m > n required)");
    }
  }
  CHECK(has_21);
}

TEST_CASE("rational bisector values of the flagship members") {
  CHECK(delta_beta_value(member(1, 6, 1), 1) == Rational(1077378553, 1225));
  CHECK(delta_beta_value(member(1, 6, 1), 1225) == Rational(1077378553));
  CHECK(delta_beta_value(member(2, 4, 5), 1) == Rational(3958917551, 1600));
  CHECK(delta_beta_value(member(2, 1, 1), 1) == Rational(35, 4));
  CHECK(delta_beta_value(member(3, 3, 2), 1) == Rational(2964815, 144));
  CHECK(d_beta_value(member(4, 4, 1), 1) == Rational(2737, 8));
  CHECK(d_beta_value(member(5, 2, 1), 1) == Rational(35, 3));
  CHECK(d_beta_value(member(5, 2, 1), 3) == Rational(35));
}

TEST_CASE("bisector value helpers reject the wrong family and bad delta") {
  CHECK_THROWS_AS(delta_beta_value(member(4, 4, 1), 1), std::domain_error);
  CHECK_THROWS_AS(delta_beta_value(member(5, 2, 1), 1), std::domain_error);
  CHECK_THROWS_AS(d_beta_value(member(1, 6, 1), 1), std::domain_error);
  CHECK_THROWS_AS(d_beta_value(member(2, 1, 1), 1), std::domain_error);
  CHECK_THROWS_AS(delta_beta_value(member(1, 6, 1), 0), std::domain_error);
  CHECK_THROWS_AS(d_beta_value(member(5, 2, 1), -2), std::domain_error);
}

TEST_CASE("family bisector values equal the element-level bisectors exactly") {
  for (int family = 1; family <= 3; ++family) {
    for (const auto& mem : family_enumerate(family, 6)) {
      for (Int delta : {Int(1), Int(2), Int(7)}) {
        ElementReport r = secondary_elements({delta, mem.m, mem.n});
        REQUIRE(r.delta_beta().is_rational());
        CHECK(r.delta_beta().as_rational() == delta_beta_value(mem, delta));
      }
    }
  }
  for (int family = 4; family <= 5; ++family) {
    for (const auto& mem : family_enumerate(family, 8)) {
      for (Int delta : {Int(1), Int(2), Int(7)}) {
        ElementReport r = secondary_elements({delta, mem.m, mem.n});
        REQUIRE(r.d_beta().is_rational());
        CHECK(r.d_beta().as_rational() == d_beta_value(mem, delta));
      }
    }
  }
}

TEST_CASE("families cover every qualifying parameter pair with m <= 50") {
  // Internal-bisector condition: m a perfect square and m^2 + n^2 a perfect
  // square. In the window m <= 50 the only instance is (4, 3), which family
  // 2 produces from generators (1, 1).
  std::vector<std::pair<Int, Int>> internal_hits;
  std::vector<std::pair<Int, Int>> external_hits;
  for (const auto& [m, n] : enumerate_params(50)) {
    bool m_square = is_perfect_square(m).first;
    bool hyp_square = is_perfect_square(m * m + n * n).first;
    if (m_square && hyp_square) internal_hits.emplace_back(m, n);
    if (hyp_square) external_hits.emplace_back(m, n);
  }
  CHECK(internal_hits == std::vector<std::pair<Int, Int>>{{4, 3}});

  FamilyMember f2min = member(2, 1, 1);
  CHECK(f2min.m == 4);
  CHECK(f2min.n == 3);

  // External-bisector condition: m^2 + n^2 a perfect square. Families 4 and
  // 5 together must produce every such pair.
  CHECK(external_hits.size() == 8);
  std::vector<std::pair<Int, Int>> produced;
  for (int family : {4, 5}) {
    for (const auto& mem : family_enumerate(family, 10)) {
      produced.emplace_back(mem.m, mem.n);
    }
  }
  for (const auto& hit : external_hits) {
    CHECK(std::count(produced.begin(), produced.end(), hit) == 1);
  }
}

TEST_CASE("smallest member parameter m per family in a finite window") {
  auto min_m = [](int family, const Int& bound) {
    Int best = -1;
    for (const auto& mem : family_enumerate(family, bound)) {
      if (best < 0 || mem.m < best) best = mem.m;
    }
    return best;
  };
  // Families 1 and 3: every member with larger generators has m beyond the
  // window minimum, because m grows with (k, l).
  CHECK(min_m(1, 8) == 1225);
  CHECK(min_m(3, 8) == 144);
  // Family 2: m = 4k^2l^2 >= 4 and (1, 1) attains it, so 4 is global.
  CHECK(min_m(2, 8) == 4);
  // Family 4: smallest is m = 15 from (4, 1).
  CHECK(min_m(4, 13) == 15);
  // Family 5: m = 2KL >= 4 and (2, 1) attains it, so 4 is global.
  CHECK(min_m(5, 8) == 4);
}
