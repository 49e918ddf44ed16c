#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "extiso/finring.hpp"
#include "extiso/oracle.hpp"

using namespace extiso;

namespace {

StructuredRing end_of(std::vector<long long> factors) {
  return end_ring(abstract_decomposition(std::move(factors))).ring;
}

StructuredRing group_ring_c2(long long n) {
  StructuredRing r;
  r.factors = {n, n};
  r.alpha = {{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}};
  r.one = {1, 0};
  r.validate();
  return r;
}

StructuredRing upper_triangular_f2(int n) {
  std::vector<std::pair<int, int>> basis;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) basis.push_back({i, j});
  int t = static_cast<int>(basis.size());
  StructuredRing r;
  r.factors.assign(t, 2);
  r.alpha.assign(t, std::vector<Coord>(t, Coord(t, 0)));
  for (int a = 0; a < t; ++a)
    for (int b = 0; b < t; ++b) {
      auto [i, j] = basis[a];
      auto [k, l] = basis[b];
      if (j != k) continue;
      for (int c = 0; c < t; ++c)
        if (basis[c] == std::make_pair(i, l)) r.alpha[a][b][c] = 1;
    }
  r.one.assign(t, 0);
  for (int c = 0; c < t; ++c)
    if (basis[c].first == basis[c].second) r.one[c] = 1;
  r.validate();
  return r;
}

bool invertible(const StructuredRing& r, const Coord& x) {
  for (long long i = 0; i < r.size(); ++i) {
    Coord y = r.element_of(i);
    if (r.mul(x, y) == r.reduce(r.one) && r.mul(y, x) == r.reduce(r.one)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("unit group orders match the exhaustive count") {
  struct Case {
    std::string name;
    StructuredRing r;
  };
  std::vector<Case> cases = {
      {"end_z5", end_of({5})},        {"end_z8", end_of({8})},
      {"end_z12", end_of({12})},      {"end_z16", end_of({16})},
      {"end_z2z2", end_of({2, 2})},   {"end_z2z4", end_of({2, 4})},
      {"end_z2z2z2", end_of({2, 2, 2})}, {"end_z3z3", end_of({3, 3})},
      {"z4c2", group_ring_c2(4)},     {"z2c2", group_ring_c2(2)},
      {"ut2f2", upper_triangular_f2(2)}, {"ut3f2", upper_triangular_f2(3)},
      {"z27", end_of({27})},          {"z81", end_of({81})},
  };
  for (auto& c : cases) {
    CAPTURE(c.name);
    auto u = unit_group(c.r);
    CHECK(u.order == oracle::unit_count(c.r));
    REQUIRE(u.chain.has_value());
    CHECK(u.chain->order() == u.order);
    for (const Coord& g : u.generators) CHECK(invertible(c.r, g));
    // an independently rebuilt chain over the generator permutations agrees
    std::vector<Perm> perms;
    for (const Coord& g : u.generators)
      perms.push_back(right_multiplication_perm(c.r, g));
    CHECK(StabChain::build(static_cast<int>(c.r.size()), perms).order() == u.order);
  }
}

TEST_CASE("frozen unit counts for endomorphism rings") {
  CHECK(unit_group(end_of({5})).order == 4);
  CHECK(unit_group(end_of({8})).order == 4);
  CHECK(unit_group(end_of({12})).order == 4);
  CHECK(unit_group(end_of({16})).order == 8);
  CHECK(unit_group(end_of({2, 2})).order == 6);
  CHECK(unit_group(end_of({2, 4})).order == 8);
  CHECK(unit_group(end_of({2, 2, 2})).order == 168);
  CHECK(unit_group(end_of({3, 3})).order == 48);
  CHECK(unit_group(group_ring_c2(4)).order == 8);
  CHECK(unit_group(upper_triangular_f2(3)).order == 8);
}

TEST_CASE("large rings get the exact order without a chain") {
  auto big = end_of({2, 2, 2, 2});
  CHECK(big.size() == 65536);
  auto u = unit_group(big);
  CHECK(!u.chain.has_value());
  CHECK(u.order == 20160);  // |GL4(2)|
  CHECK_THROWS_AS(oracle::unit_count(big), SizeGuardError);
}

TEST_CASE("right multiplication permutations compose like the ring") {
  auto r = end_of({6});
  std::vector<Coord> units;
  for (long long i = 0; i < r.size(); ++i)
    if (invertible(r, r.element_of(i))) units.push_back(r.element_of(i));
  CHECK(units.size() == 2);
  for (const Coord& u : units)
    for (const Coord& v : units) {
      Perm lhs = right_multiplication_perm(r, u) * right_multiplication_perm(r, v);
      Perm rhs = right_multiplication_perm(r, r.mul(u, v));
      CHECK(lhs == rhs);
    }
  // the permutation realizes x -> x * u on element ranks
  for (const Coord& u : units) {
    Perm p = right_multiplication_perm(r, u);
    for (long long i = 0; i < r.size(); ++i)
      CHECK(p[static_cast<int>(i)] == r.rank_of(r.mul(r.element_of(i), u)));
  }
}

TEST_CASE("unit group of a field is cyclic of order q minus one") {
  StructuredRing f4;
  f4.factors = {2, 2};
  f4.alpha = {{{1, 0}, {0, 1}}, {{0, 1}, {1, 1}}};
  f4.one = {1, 0};
  f4.validate();
  auto u = unit_group(f4);
  CHECK(u.order == 3);
  CHECK(u.order == oracle::unit_count(f4));
}
