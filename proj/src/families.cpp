#include "ptri/families.hpp"

#include "ptri/triples.hpp"

#include <stdexcept>

namespace ptri {

namespace {

struct Candidate {
  Int m, n, root;
  std::optional<Int> t;
  std::vector<std::string> reasons;  // side conditions failed so far
};

Candidate build_candidate(int family, const Int& k, const Int& l) {
  Candidate c;
  Int kk = k * k, ll = l * l;
  switch (family) {
    case 1:
      // m = (k^2 - l^2)^2, n = 4kl(k^2 + l^2), z = k^4 + l^4 + 6k^2l^2.
      c.m = (kk - ll) * (kk - ll);
      c.n = 4 * k * l * (kk + ll);
      c.root = kk * kk + ll * ll + 6 * kk * ll;
      c.t = kk - ll;
      if (gcd(k, l) != 1) c.reasons.push_back("gcd(k, l) = 1 required");
      if (k <= l) c.reasons.push_back("k > l required");
      if ((k + l) % 2 == 0) c.reasons.push_back("k + l must be odd");
      break;
    case 2:
      // m = 4k^2l^2, n = 4k^4 - l^4, z = 4k^4 + l^4.
      c.m = 4 * kk * ll;
      c.n = 4 * kk * kk - ll * ll;
      c.root = 4 * kk * kk + ll * ll;
      c.t = 2 * k * l;
      if (gcd(k, l) != 1) c.reasons.push_back("gcd(k, l) = 1 required");
      if (l % 2 == 0) c.reasons.push_back("l must be odd");
      if (2 * kk <= ll) c.reasons.push_back("2k^2 > l^2 required");
      break;
    case 3:
      // m = 4k^2l^2, n = k^4 - 4l^4, z = k^4 + 4l^4.
      c.m = 4 * kk * ll;
      c.n = kk * kk - 4 * ll * ll;
      c.root = kk * kk + 4 * ll * ll;
      c.t = 2 * k * l;
      if (gcd(k, l) != 1) c.reasons.push_back("gcd(k, l) = 1 required");
      if (k % 2 == 0) c.reasons.push_back("k must be odd");
      if (kk <= 2 * ll) c.reasons.push_back("k^2 > 2l^2 required");
      break;
    case 4:
      // m = K^2 - L^2, n = 2KL, w = K^2 + L^2.
      c.m = kk - ll;
      c.n = 2 * k * l;
      c.root = kk + ll;
      if (gcd(k, l) != 1) c.reasons.push_back("gcd(K, L) = 1 required");
      if (k <= l) c.reasons.push_back("K > L required");
      if ((k + l) % 2 == 0) c.reasons.push_back("K + L must be odd");
      break;
    case 5:
      // m = 2KL, n = K^2 - L^2, w = K^2 + L^2.
      c.m = 2 * k * l;
      c.n = kk - ll;
      c.root = kk + ll;
      if (gcd(k, l) != 1) c.reasons.push_back("gcd(K, L) = 1 required");
      if (k <= l) c.reasons.push_back("K > L required");
      if ((k + l) % 2 == 0) c.reasons.push_back("K + L must be odd");
      break;
    default:
      throw std::domain_error("family id must be in 1..5");
  }
  if (c.m <= c.n) {
    c.reasons.push_back("m=" + c.m.str() + " < n=" + c.n.str() + " (m > n required)");
  }
  return c;
}

void assert_member(const FamilyMember& mem) {
  bool ok = mem.m > mem.n && gcd(mem.m, mem.n) == 1 && (mem.m + mem.n) % 2 == 1 &&
            mem.root * mem.root == mem.m * mem.m + mem.n * mem.n;
  if (mem.t) ok = ok && (*mem.t) * (*mem.t) == mem.m;
  if (!ok) throw std::logic_error("family member invariant failed");
}

}  // namespace

FamilyResult family_generate(int family, const Int& k, const Int& l) {
  if (family < 1 || family > 5) throw std::domain_error("family id must be in 1..5");
  if (k < 1 || l < 1) throw std::domain_error("family generators must be positive");
  Candidate c = build_candidate(family, k, l);
  if (!c.reasons.empty()) {
    return FamilyRejection{family, k, l, std::move(c.reasons)};
  }
  FamilyMember mem{family, k, l, c.m, c.n, c.root, c.t};
  assert_member(mem);
  return mem;
}

FamilyEnumeration family_enumerate_full(int family, const Int& gen_bound) {
  if (family < 1 || family > 5) throw std::domain_error("family id must be in 1..5");
  if (gen_bound < 1) throw std::domain_error("gen_bound must be positive");
  FamilyEnumeration out;
  // (k + l, k, l) ascending.
  for (Int sum = 2; sum <= 2 * gen_bound; ++sum) {
    for (Int k = 1; k <= gen_bound && k < sum; ++k) {
      Int l = sum - k;
      if (l > gen_bound) continue;
      FamilyResult res = family_generate(family, k, l);
      if (auto* mem = std::get_if<FamilyMember>(&res)) {
        out.members.push_back(*mem);
      } else {
        out.rejections.push_back(std::get<FamilyRejection>(res));
      }
    }
  }
  return out;
}

std::vector<FamilyMember> family_enumerate(int family, const Int& gen_bound) {
  return family_enumerate_full(family, gen_bound).members;
}

Rational delta_beta_value(const FamilyMember& member, const Int& delta) {
  if (member.family < 1 || member.family > 3) {
    throw std::domain_error("delta_beta_value: internal-bisector families are 1..3");
  }
  if (delta < 1) throw std::domain_error("delta_beta_value: delta must be positive");
  return Rational(delta * member.root * (member.m * member.m - member.n * member.n), member.m);
}

Rational d_beta_value(const FamilyMember& member, const Int& delta) {
  if (member.family < 4 || member.family > 5) {
    throw std::domain_error("d_beta_value: external-bisector families are 4..5");
  }
  if (delta < 1) throw std::domain_error("d_beta_value: delta must be positive");
  return Rational(delta * member.root * (member.m * member.m - member.n * member.n), member.n);
}

}  // namespace ptri
