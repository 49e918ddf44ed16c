#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <vector>

#include "extiso/finfield.hpp"

using namespace extiso;
using poly::P;

namespace {

// closure of the generated matrix group, element count only
size_t matrix_group_order(const std::vector<FqMat>& gens, const Fq& k, int n) {
  std::set<FqMat> seen;
  std::vector<FqMat> frontier{fq_identity(n, k)};
  seen.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<FqMat> next;
    for (const auto& m : frontier)
      for (const auto& g : gens) {
        FqMat p = fq_mat_mul(m, g, k);
        if (seen.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace

TEST_CASE("polynomial arithmetic over small prime fields") {
  CHECK(poly::deg({}) == -1);
  CHECK(poly::deg({0, 0, 1}) == 2);
  CHECK(poly::trim({1, 2, 0, 0}) == P({1, 2}));
  CHECK(poly::add({1, 1}, {2, 2}, 3) == P({}));
  CHECK(poly::sub({1}, {2}, 3) == P({2}));
  CHECK(poly::mul({1, 1}, {1, 1}, 2) == P({1, 0, 1}));
  CHECK(poly::scale({1, 2}, 2, 3) == P({2, 1}));
  CHECK(poly::monic({2, 2}, 3) == P({1, 1}));
  CHECK(poly::eval({1, 1, 1}, 2, 3) == 1);

  auto [q, r] = poly::divmod({1, 2, 0, 1}, {2, 1}, 3);
  CHECK(q == P({0, 1, 1}));
  CHECK(r == P({1}));

  CHECK(poly::gcd({2, 0, 1}, {1, 1, 1}, 3) == P({2, 1}));
  CHECK(poly::deriv({1, 0, 1, 0, 1}, 2) == P({}));
  CHECK(poly::deriv({1, 1, 1}, 3) == P({1, 2}));
  CHECK(poly::pow_mod({0, 1}, 4, {1, 1, 1}, 2) == P({0, 1}));
}

TEST_CASE("factorization into monic irreducibles") {
  auto sorted = [](std::vector<std::pair<P, int>> f) {
    std::sort(f.begin(), f.end());
    return f;
  };
  // x^2 + 1 = (x+1)^2 over F2
  CHECK(sorted(poly::factor({1, 0, 1}, 2)) ==
        std::vector<std::pair<P, int>>({{{1, 1}, 2}}));
  // x^2 + 1 irreducible over F3
  CHECK(sorted(poly::factor({1, 0, 1}, 3)) ==
        std::vector<std::pair<P, int>>({{{1, 0, 1}, 1}}));
  // x^3 - x = x(x+1)(x+2) over F3
  CHECK(sorted(poly::factor({0, 2, 0, 1}, 3)) ==
        std::vector<std::pair<P, int>>({{{0, 1}, 1}, {{1, 1}, 1}, {{2, 1}, 1}}));
  // (x+1)^2 (x^2+x+1) over F2
  CHECK(sorted(poly::factor({1, 1, 0, 1, 1}, 2)) ==
        std::vector<std::pair<P, int>>({{{1, 1}, 2}, {{1, 1, 1}, 1}}));

  CHECK(poly::is_irreducible({1, 1, 1}, 2));
  CHECK(!poly::is_irreducible({1, 0, 1}, 2));
  CHECK(poly::is_irreducible({1, 1, 0, 1}, 2));
  CHECK(poly::is_irreducible({1, 0, 1}, 3));

  // factors multiply back to the input, over a small random-ish sweep
  for (long long p : {2, 3, 5}) {
    for (long long seed = 0; seed < 40; ++seed) {
      P f;
      long long v = seed * 2654435761LL % (p * p * p * p);
      for (int i = 0; i < 4; ++i) {
        f.push_back(v % p);
        v /= p;
      }
      f.push_back(1);  // monic degree 4
      auto fac = poly::factor(f, p);
      P prod{1};
      for (auto& [g, m] : fac) {
        CHECK(poly::is_irreducible(g, p));
        for (int i = 0; i < m; ++i) prod = poly::mul(prod, g, p);
      }
      CHECK(prod == f);
    }
  }
}

TEST_CASE("field construction and arithmetic in F4") {
  auto d = make_field(2, 2);
  CHECK(d.q() == 4);
  CHECK(d.min_poly == P({1, 1, 1}));
  Fq k{d};
  Fq::El x = {0, 1};
  CHECK(k.mul(x, x) == Fq::El({1, 1}));
  CHECK(k.mul(x, {1, 1}) == k.one());
  CHECK(k.inv(x) == Fq::El({1, 1}));
  CHECK(k.element_order(x) == 3);
  CHECK(k.pow(x, 3) == k.one());
  CHECK(k.add(x, x) == k.zero());
  CHECK(k.sub(k.zero(), x) == k.neg(x));
  CHECK(k.from_int(5) == k.one());
}

TEST_CASE("field constructions stay consistent for several p and f") {
  for (auto [p, f] : std::vector<std::pair<long long, int>>{
           {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}}) {
    auto d = make_field(p, f);
    CHECK(poly::is_irreducible(d.min_poly, p));
    CHECK(poly::deg(d.min_poly) == f);
    CHECK(d.min_poly.back() == 1);
    Fq k{d};
    // inverses work everywhere off zero
    for (long long r = 1; r < d.q(); ++r) {
      Fq::El a(f);
      long long v = r;
      for (int i = 0; i < f; ++i) {
        a[i] = v % p;
        v /= p;
      }
      CHECK(k.mul(a, k.inv(a)) == k.one());
      long long o = k.element_order(a);
      CHECK((d.q() - 1) % o == 0);
    }
  }
}

TEST_CASE("unit generators have full multiplicative order") {
  CHECK(field_unit_generator(make_field(2, 1)) == Fq::El({1}));
  CHECK(field_unit_generator(make_field(5, 1)) == Fq::El({2}));
  CHECK(field_unit_generator(make_field(2, 2)) == Fq::El({0, 1}));
  for (auto [p, f] : std::vector<std::pair<long long, int>>{
           {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}, {7, 1}}) {
    auto d = make_field(p, f);
    Fq k{d};
    CHECK(k.element_order(field_unit_generator(d)) == d.q() - 1);
  }
}

TEST_CASE("matrix helpers and general linear group orders") {
  auto f2 = make_field(2, 1);
  Fq k{f2};
  FqMat m = {{k.one(), k.one()}, {k.zero(), k.one()}};
  CHECK(fq_mat_mul(m, m, k) == fq_identity(2, k));

  // |GL_n(q)| = prod (q^n - q^i)
  auto gl_order = [&](int n, long long p, int f) {
    auto d = make_field(p, f);
    Fq kk{d};
    return matrix_group_order(gl_generators(n, d), kk, n);
  };
  CHECK(gl_order(1, 5, 1) == 4);
  CHECK(gl_order(2, 2, 1) == 6);
  CHECK(gl_order(2, 3, 1) == 48);
  CHECK(gl_order(2, 2, 2) == 180);
  CHECK(gl_order(3, 2, 1) == 168);
  CHECK(gl_order(1, 2, 2) == 3);
}
