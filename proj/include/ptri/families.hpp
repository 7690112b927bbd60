#pragma once

// The five two-parameter families of Pythagorean triangles with a rational
// bisector of the angle opposite the even leg: families 1-3 give a rational
// internal bisector delta_beta (m a square and m^2 + n^2 a square), families
// 4-5 a rational external bisector d_beta (m^2 + n^2 a square).
//
// delta is not part of a family member; families parametrize shapes and
// delta scales them.

#include "ptri/exact.hpp"

#include <string>
#include <variant>
#include <vector>

namespace ptri {

struct FamilyMember {
  int family;  // 1..5
  Int k, l;    // generator pair; named (K, L) for families 4-5
  Int m, n;
  Int root;               // z for families 1-3 (z^2 = m^2+n^2), w for 4-5
  std::optional<Int> t;   // families 1-3 only, t^2 = m
};

struct FamilyRejection {
  int family;
  Int k, l;
  std::vector<std::string> reasons;  // every failed side condition
};

using FamilyResult = std::variant<FamilyMember, FamilyRejection>;

FamilyResult family_generate(int family, const Int& k, const Int& l);

// All accepted members with max(k, l) <= gen_bound, ordered by
// (k + l, k, l) ascending.
std::vector<FamilyMember> family_enumerate(int family, const Int& gen_bound);

// As family_enumerate but also carrying the rejected generator pairs.
struct FamilyEnumeration {
  std::vector<FamilyMember> members;
  std::vector<FamilyRejection> rejections;
};
FamilyEnumeration family_enumerate_full(int family, const Int& gen_bound);

// delta * z * (m^2 - n^2) / m in lowest terms; families 1-3. Equals the
// internal bisector delta_beta of (delta, m, n) exactly.
Rational delta_beta_value(const FamilyMember& member, const Int& delta);

// delta * w * (m^2 - n^2) / n in lowest terms; families 4-5. Equals the
// external bisector d_beta of (delta, m, n) exactly.
Rational d_beta_value(const FamilyMember& member, const Int& delta);

}  // namespace ptri
