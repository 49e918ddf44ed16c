#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <vector>

#include "extiso/zlinalg.hpp"

using namespace extiso;
using zlinalg::QuotientStructure;
using zlinalg::SmithForm;

namespace {

IntMat mat(int r, int c, std::initializer_list<long long> vals) {
  IntMat m(r, c);
  auto it = vals.begin();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = to_int(*it++);
  return m;
}

IntVec vec(std::initializer_list<long long> vals) {
  IntVec v(static_cast<int>(vals.size()));
  int i = 0;
  for (long long x : vals) v[i++] = to_int(x);
  return v;
}

// cofactor expansion, independent of the Bareiss code under test
Int det_oracle(const IntMat& a) {
  int n = static_cast<int>(a.rows());
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Int acc = 0;
  for (int j = 0; j < n; ++j) {
    IntMat sub(n - 1, n - 1);
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c)
        if (c != j) sub(r - 1, cc++) = a(r, c);
    }
    Int term = a(0, j) * det_oracle(sub);
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

// gcd of all k x k minors; 0 when every minor vanishes
Int minor_gcd(const IntMat& a, int k) {
  int r = static_cast<int>(a.rows()), c = static_cast<int>(a.cols());
  std::vector<int> rows(k), cols(k);
  Int g = 0;
  std::iota(rows.begin(), rows.end(), 0);
  while (true) {
    std::iota(cols.begin(), cols.end(), 0);
    while (true) {
      IntMat sub(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub(i, j) = a(rows[i], cols[j]);
      Int d = det_oracle(sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      int p = k - 1;
      while (p >= 0 && cols[p] == c - k + p) --p;
      if (p < 0) break;
      ++cols[p];
      for (int q = p + 1; q < k; ++q) cols[q] = cols[q - 1] + 1;
    }
    int p = k - 1;
    while (p >= 0 && rows[p] == r - k + p) --p;
    if (p < 0) break;
    ++rows[p];
    for (int q = p + 1; q < k; ++q) rows[q] = rows[q - 1] + 1;
  }
  return g;
}

void check_smith_properties(const IntMat& a, const SmithForm& f) {
  REQUIRE(f.u.rows() == a.rows());
  REQUIRE(f.v.rows() == a.cols());
  IntMat prod = f.u * a * f.v;
  CHECK(prod == f.s);
  Int du = det_oracle(f.u);
  Int dv = det_oracle(f.v);
  CHECK((du == 1 || du == -1));
  CHECK((dv == 1 || dv == -1));
  CHECK(IntMat(f.u * f.u_inv) == IntMat(IntMat::Identity(a.rows(), a.rows())));
  CHECK(IntMat(f.v * f.v_inv) == IntMat(IntMat::Identity(a.cols(), a.cols())));
  int m = static_cast<int>(std::min(a.rows(), a.cols()));
  for (int i = 0; i < static_cast<int>(f.s.rows()); ++i)
    for (int j = 0; j < static_cast<int>(f.s.cols()); ++j)
      if (i != j) CHECK(f.s(i, j) == 0);
  for (int i = 0; i < m; ++i) CHECK(f.s(i, i) >= 0);
  for (int i = 0; i + 1 < m; ++i) {
    if (f.s(i + 1, i + 1) != 0) {
      CHECK(f.s(i, i) != 0);
      CHECK(f.s(i + 1, i + 1) % f.s(i, i) == 0);
    }
  }
}

}  // namespace

TEST_CASE("smith normal form of a worked 2x2 example") {
  IntMat a = mat(2, 2, {2, 4, 6, 8});
  auto f = zlinalg::smith_normal_form(a);
  check_smith_properties(a, f);
  // minor gcds: d1 = gcd(2,4,6,8) = 2, d2 = |det| = 8, so factors 2 and 8/2
  CHECK(f.s(0, 0) == 2);
  CHECK(f.s(1, 1) == 4);
  CHECK(f.rank() == 2);
}

TEST_CASE("smith normal form frozen small cases") {
  struct Case {
    IntMat a;
    std::vector<long long> diag;
  };
  std::vector<Case> cases;
  cases.push_back({mat(2, 2, {1, 2, 3, 4}), {1, 2}});
  cases.push_back({mat(2, 2, {2, 0, 0, 3}), {1, 6}});
  cases.push_back({mat(2, 2, {4, 6, 6, 9}), {1, 0}});
  cases.push_back({mat(1, 1, {-5}), {5}});
  cases.push_back({mat(2, 2, {0, 0, 0, 0}), {0, 0}});
  cases.push_back({mat(2, 3, {2, 4, 6, 8, 10, 12}), {2, 6}});
  for (auto& c : cases) {
    auto f = zlinalg::smith_normal_form(c.a);
    check_smith_properties(c.a, f);
    for (size_t i = 0; i < c.diag.size(); ++i)
      CHECK(f.s(static_cast<int>(i), static_cast<int>(i)) == to_int(c.diag[i]));
  }
}

TEST_CASE("smith invariant factors match the minor-gcd oracle") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> dim(1, 4), entry(-9, 9);
  for (int trial = 0; trial < 60; ++trial) {
    int r = dim(rng), c = dim(rng);
    IntMat a(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) a(i, j) = entry(rng);
    auto f = zlinalg::smith_normal_form(a);
    check_smith_properties(a, f);
    Int prev = 1;
    for (int k = 1; k <= std::min(r, c); ++k) {
      Int dk = minor_gcd(a, k);
      Int expect = 0;
      if (dk != 0 && prev != 0) expect = dk / prev;
      CHECK(f.s(k - 1, k - 1) == expect);
      prev = dk;
      if (dk == 0) prev = 0;
    }
  }
}

TEST_CASE("smith normal form property sweep over random matrices") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> dim(1, 6), entry(-9, 9);
  for (int trial = 0; trial < 1000; ++trial) {
    int r = dim(rng), c = dim(rng);
    IntMat a(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) a(i, j) = entry(rng);
    auto f = zlinalg::smith_normal_form(a);
    check_smith_properties(a, f);
  }
}

TEST_CASE("determinant agrees with cofactor expansion") {
  CHECK(zlinalg::determinant(mat(2, 2, {2, 4, 6, 8})) == -8);
  CHECK(zlinalg::determinant(mat(1, 1, {7})) == 7);
  CHECK(zlinalg::determinant(IntMat(IntMat::Identity(4, 4))) == 1);
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> dim(1, 5), entry(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    int n = dim(rng);
    IntMat a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = entry(rng);
    CHECK(zlinalg::determinant(a) == det_oracle(a));
  }
}

TEST_CASE("integer linear solve") {
  auto s = zlinalg::solve(mat(1, 1, {2}), vec({4}));
  REQUIRE(s.has_value());
  CHECK(s->particular[0] == 2);
  CHECK(s->nullspace.cols() == 0);

  CHECK(!zlinalg::solve(mat(1, 1, {2}), vec({3})).has_value());
  CHECK(!zlinalg::solve(mat(2, 1, {1, 1}), vec({1, 2})).has_value());

  auto t = zlinalg::solve(mat(1, 2, {1, 1}), vec({5}));
  REQUIRE(t.has_value());
  CHECK(t->particular[0] + t->particular[1] == 5);
  REQUIRE(t->nullspace.cols() == 1);
  CHECK(t->nullspace(0, 0) + t->nullspace(1, 0) == 0);
  CHECK(t->nullspace(0, 0) != 0);

  auto z = zlinalg::solve(mat(1, 1, {0}), vec({0}));
  REQUIRE(z.has_value());
  CHECK(z->particular[0] == 0);
  REQUIRE(z->nullspace.cols() == 1);
  Int e = z->nullspace(0, 0);
  CHECK((e == 1 || e == -1));

  auto u = zlinalg::solve(mat(2, 2, {2, 0, 0, 3}), vec({2, 3}));
  REQUIRE(u.has_value());
  CHECK(u->particular == vec({1, 1}));
  CHECK(u->nullspace.cols() == 0);
}

TEST_CASE("random consistent systems always solve") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> dim(1, 4), entry(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    int r = dim(rng), c = dim(rng);
    IntMat a(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) a(i, j) = entry(rng);
    IntVec x0(c);
    for (int j = 0; j < c; ++j) x0[j] = entry(rng);
    IntVec b = a * x0;
    auto s = zlinalg::solve(a, b);
    REQUIRE(s.has_value());
    CHECK(IntVec(a * s->particular) == b);
    for (int j = 0; j < s->nullspace.cols(); ++j)
      CHECK(IntVec(a * s->nullspace.col(j)).isZero());
  }
}

TEST_CASE("congruence solve: chinese remainder") {
  auto s = zlinalg::solve_mod(mat(2, 1, {1, 1}), vec({1, 2}), {Int(2), Int(3)});
  REQUIRE(s.has_value());
  Int x = s->particular[0];
  CHECK(((x % 2) + 2) % 2 == 1);
  CHECK(((x % 3) + 3) % 3 == 2);
  REQUIRE(s->nullspace.cols() == 1);
  Int step = s->nullspace(0, 0);
  if (step < 0) step = -step;
  CHECK(step == 6);
}

TEST_CASE("congruence solve: unsolvable and vacuous rows") {
  CHECK(!zlinalg::solve_mod(mat(2, 1, {1, 1}), vec({0, 1}), {Int(2), Int(2)}).has_value());

  auto v = zlinalg::solve_mod(mat(1, 1, {7}), vec({3}), {Int(1)});
  REQUIRE(v.has_value());
  REQUIRE(v->nullspace.cols() == 1);
  Int step = v->nullspace(0, 0);
  if (step < 0) step = -step;
  CHECK(step == 1);

  // 2x == 2 (mod 4) has the odd numbers as solutions
  auto w = zlinalg::solve_mod(mat(1, 1, {2}), vec({2}), {Int(4)});
  REQUIRE(w.has_value());
  CHECK(((w->particular[0] % 2) + 2) % 2 == 1);
  REQUIRE(w->nullspace.cols() == 1);
  Int step2 = w->nullspace(0, 0);
  if (step2 < 0) step2 = -step2;
  CHECK(step2 == 2);
}

TEST_CASE("lattice quotient structure") {
  auto q = zlinalg::quotient_structure(2, mat(2, 2, {2, 0, 0, 4}));
  REQUIRE(q.factors.size() == 2);
  CHECK(q.factors[0] == 2);
  CHECK(q.factors[1] == 4);

  auto reduce = [&](IntVec t) {
    for (size_t i = 0; i < q.factors.size(); ++i) {
      t[static_cast<int>(i)] %= q.factors[i];
      if (t[static_cast<int>(i)] < 0) t[static_cast<int>(i)] += q.factors[i];
    }
    return t;
  };
  // project(lift(t)) == t for every quotient tuple
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 4; ++b) {
      IntVec t = vec({a, b});
      IntVec back = reduce(q.project * (q.lift * t));
      CHECK(back == t);
    }
  // project is additive and respects the lattice exactly
  auto project = [&](const IntVec& x) { return IntVec(reduce(q.project * x)); };
  for (int x0 = 0; x0 < 2; ++x0)
    for (int x1 = 0; x1 < 4; ++x1)
      for (int y0 = 0; y0 < 2; ++y0)
        for (int y1 = 0; y1 < 4; ++y1) {
          IntVec x = vec({x0, x1}), y = vec({y0, y1});
          CHECK(project(IntVec(x + y)) == reduce(IntVec(project(x) + project(y))));
          bool same = project(x) == project(y);
          Int d0 = x[0] - y[0], d1 = x[1] - y[1];
          bool in_lattice = (d0 % 2 == 0) && (d1 % 4 == 0);
          CHECK(same == in_lattice);
        }
}

TEST_CASE("lattice quotient edge shapes") {
  auto unit = zlinalg::quotient_structure(2, mat(2, 2, {1, 0, 0, 1}));
  CHECK(unit.factors.empty());

  auto one = zlinalg::quotient_structure(1, mat(1, 1, {2}));
  REQUIRE(one.factors.size() == 1);
  CHECK(one.factors[0] == 2);

  auto skew = zlinalg::quotient_structure(2, mat(2, 2, {2, 0, 2, 4}));
  REQUIRE(skew.factors.size() == 2);
  CHECK(skew.factors[0] == 2);
  CHECK(skew.factors[1] == 4);

  CHECK_THROWS_AS(zlinalg::quotient_structure(2, mat(2, 1, {2, 0})), UnsupportedShapeError);
}
