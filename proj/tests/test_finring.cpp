#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "extiso/finring.hpp"

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

StructuredRing upper_triangular_2x2_f2() {
  // basis E11, E12, E22
  StructuredRing r;
  r.factors = {2, 2, 2};
  r.alpha = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 0}},
             {{0, 0, 0}, {0, 0, 0}, {0, 1, 0}},
             {{0, 0, 0}, {0, 0, 0}, {0, 0, 1}}};
  r.one = {1, 0, 1};
  r.validate();
  return r;
}

StructuredRing f2_plus_f2() {
  StructuredRing r;
  r.factors = {2, 2};
  r.alpha = {{{1, 0}, {0, 0}}, {{0, 0}, {0, 1}}};
  r.one = {1, 1};
  r.validate();
  return r;
}

StructuredRing f4_ring() {
  // x^2 = x + 1 over F2
  StructuredRing r;
  r.factors = {2, 2};
  r.alpha = {{{1, 0}, {0, 1}}, {{0, 1}, {1, 1}}};
  r.one = {1, 0};
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

// quasi-regularity: x lies in the radical iff 1 - yx is a unit for every y
std::set<Coord> radical_oracle(const StructuredRing& r) {
  std::set<Coord> out;
  for (long long i = 0; i < r.size(); ++i) {
    Coord x = r.element_of(i);
    bool in = true;
    for (long long j = 0; j < r.size() && in; ++j) {
      Coord y = r.element_of(j);
      if (!invertible(r, r.sub(r.one, r.mul(y, x)))) in = false;
    }
    if (in) out.insert(r.reduce(x));
  }
  return out;
}

std::set<Coord> additive_span(const StructuredRing& r, const std::vector<Coord>& gens) {
  std::set<Coord> seen{r.zero()};
  std::vector<Coord> frontier{r.zero()};
  while (!frontier.empty()) {
    std::vector<Coord> next;
    for (const Coord& x : frontier)
      for (const Coord& g : gens) {
        Coord s = r.add(x, g);
        if (seen.insert(s).second) next.push_back(s);
      }
    frontier = std::move(next);
  }
  return seen;
}

mpz_class generated_unit_count(const StructuredRing& r, const std::vector<Coord>& gens) {
  std::vector<Perm> perms;
  for (const Coord& g : gens) perms.push_back(right_multiplication_perm(r, g));
  return StabChain::build(static_cast<int>(r.size()), perms).order();
}

}  // namespace

TEST_CASE("ring validation catches broken structure constants") {
  StructuredRing bad;
  bad.factors = {2};
  bad.alpha = {{{0}}};
  bad.one = {1};
  CHECK_THROWS_AS(bad.validate(), TableError);  // 1*1 would be 0

  StructuredRing shape;
  shape.factors = {2, 2};
  shape.alpha = {{{1, 0}}};
  shape.one = {1, 0};
  CHECK_THROWS_AS(shape.validate(), TableError);
}

TEST_CASE("coordinate arithmetic and the left action matrix") {
  auto r = group_ring_c2(4);
  CHECK(r.size() == 16);
  CHECK(r.is_zero(r.zero()));
  CHECK(r.add({3, 2}, {1, 2}) == Coord({0, 0}));
  CHECK(r.sub({0, 0}, {1, 3}) == Coord({3, 1}));
  CHECK(r.neg({1, 3}) == Coord({3, 1}));
  CHECK(r.scale(3, {2, 1}) == Coord({2, 3}));
  // (1 + g)(1 - g) = 1 - g^2 = 0
  CHECK(r.mul({1, 1}, {1, 3}) == r.zero());

  for (long long i = 0; i < r.size(); ++i) {
    Coord x = r.element_of(i);
    CHECK(r.rank_of(x) == i);
    MatI64 l = r.left_action_matrix(x);
    for (long long j = 0; j < r.size(); ++j) {
      Coord y = r.element_of(j);
      Coord want = r.mul(x, y);
      for (int c = 0; c < r.t(); ++c) {
        long long got = 0;
        for (int d = 0; d < r.t(); ++d) got += l(c, d) * y[d];
        CHECK(((got - want[c]) % r.factors[c] + r.factors[c]) % r.factors[c] == 0);
      }
    }
  }
}

TEST_CASE("ring file io round trip") {
  for (auto r : {end_of({2, 4}), group_ring_c2(4), upper_triangular_2x2_f2()}) {
    auto back = ring_from_json_text(ring_to_json_text(r));
    CHECK(back.factors == r.factors);
    CHECK(back.alpha == r.alpha);
    CHECK(back.one == r.one);
    back.validate();
  }
  CHECK_THROWS_AS(ring_from_json_text("{}"), FormatError);
  CHECK_THROWS_AS(ring_from_json_text("not json"), FormatError);
  CHECK_THROWS_AS(ring_from_json_text(R"({"invariant_factors":[2],"one":[1]})"), FormatError);
  CHECK_THROWS_AS(
      ring_from_json_text(R"({"invariant_factors":[2],"one":[1,0],"alpha":[[[1]]]})"),
      FormatError);
}

TEST_CASE("module block io round trip") {
  auto r = group_ring_c2(4);
  RModule m;
  m.module = abstract_decomposition({4});
  MatI64 ident(1, 1), invert(1, 1);
  ident(0, 0) = 1;
  invert(0, 0) = 3;
  m.actions = {ident, invert};
  validate_module(r, m);

  auto text = ring_with_module_to_json_text(r, m);
  auto r2 = ring_from_json_text(text);
  CHECK(r2.factors == r.factors);
  auto m2 = module_from_json_text(text);
  REQUIRE(m2.has_value());
  CHECK(m2->module.factors == std::vector<long long>({4}));
  REQUIRE(m2->actions.size() == 2);
  CHECK(m2->actions[0] == ident);
  CHECK(m2->actions[1] == invert);

  CHECK(!module_from_json_text(ring_to_json_text(r)).has_value());

  RModule broken = m;
  broken.actions.pop_back();
  CHECK_THROWS_AS(validate_module(r, broken), TableError);
}

TEST_CASE("endomorphism ring of an abelian group") {
  auto dec = abstract_decomposition({2, 4});
  auto er = end_ring(dec);
  // |End(Z2 x Z4)| = gcd(2,2) gcd(2,4) gcd(4,2) gcd(4,4)
  CHECK(er.ring.size() == 32);
  er.ring.validate();
  REQUIRE(er.gen_matrices.size() == static_cast<size_t>(er.ring.t()));
  CHECK(er.module_factors == dec.factors);

  // identity of the ring acts as the identity matrix
  MatI64 one_m = er.action_matrix(er.ring.reduce(er.ring.one));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(((one_m(i, j) - (i == j ? 1 : 0)) % dec.factors[i]) == 0);

  // mul(x, y) acts as "x first, then y"
  for (long long i = 0; i < er.ring.size(); ++i)
    for (long long j = 0; j < er.ring.size(); ++j) {
      Coord x = er.ring.element_of(i), y = er.ring.element_of(j);
      MatI64 lhs = er.action_matrix(er.ring.mul(x, y));
      MatI64 rhs = er.action_matrix(y) * er.action_matrix(x);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          CHECK(((lhs(a, b) - rhs(a, b)) % dec.factors[a] + dec.factors[a]) %
                    dec.factors[a] ==
                0);
    }

  // the generating family e_i -> a spans the whole ring additively
  // nonzero images a with order(a) | n_i: 3 maps out of e_0, 7 out of e_1
  auto gens = end_ring_generators(dec);
  CHECK(gens.size() == 10);
  std::set<std::vector<long long>> span;
  std::vector<std::vector<long long>> frontier;
  auto flat = [&](const MatI64& m) {
    std::vector<long long> v;
    for (int a = 0; a < m.rows(); ++a)
      for (int b = 0; b < m.cols(); ++b)
        v.push_back(((m(a, b) % dec.factors[a]) + dec.factors[a]) % dec.factors[a]);
    return v;
  };
  span.insert(flat(MatI64::Zero(2, 2)));
  frontier.push_back(*span.begin());
  while (!frontier.empty()) {
    auto cur = frontier.back();
    frontier.pop_back();
    for (auto& g : gens) {
      auto gv = flat(g.matrix);
      auto next = cur;
      for (size_t p = 0; p < next.size(); ++p)
        next[p] = (next[p] + gv[p]) % dec.factors[p / 2];
      if (span.insert(next).second) frontier.push_back(next);
    }
  }
  CHECK(span.size() == 32);
}

TEST_CASE("commutant rings") {
  // everything commutes in End(Z4)
  auto z4 = abstract_decomposition({4});
  MatI64 inv3(1, 1);
  inv3(0, 0) = 3;
  auto full = commutant_ring(z4, {inv3});
  CHECK(full.ring.size() == 4);

  // commutant of the swap on Z2 x Z2 is F2[swap], order 4
  auto z2z2 = abstract_decomposition({2, 2});
  MatI64 swap(2, 2);
  swap << 0, 1, 1, 0;
  auto c = commutant_ring(z2z2, {swap});
  CHECK(c.ring.size() == 4);
  c.ring.validate();
  for (const auto& m : c.gen_matrices) {
    MatI64 a = m * swap, b = swap * m;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) CHECK((a(i, j) - b(i, j)) % 2 == 0);
  }

  // no actors: the commutant is all of End
  auto whole = commutant_ring(z2z2, {});
  CHECK(whole.ring.size() == 16);
}

TEST_CASE("prime components split by additive order") {
  auto z6 = end_of({6});
  auto comps = prime_components(z6);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].p == 2);
  CHECK(comps[1].p == 3);
  CHECK(comps[0].ring.factors == std::vector<long long>({2}));
  CHECK(comps[1].ring.factors == std::vector<long long>({3}));
  CHECK(comps[0].lambda == 3);
  CHECK(comps[1].lambda == 4);
  for (auto& pc : comps) pc.ring.validate();

  // embed(restrict(x)) is the lambda-projection, and the projections sum to x
  for (long long i = 0; i < z6.size(); ++i) {
    Coord x = z6.element_of(i);
    Coord total = z6.zero();
    for (auto& pc : comps) {
      Coord proj = pc.embed(pc.restrict(x));
      CHECK(proj == z6.scale(pc.lambda, x));
      total = z6.add(total, proj);
    }
    CHECK(total == z6.reduce(x));
  }

  // restriction respects multiplication
  for (auto& pc : comps)
    for (long long i = 0; i < z6.size(); ++i)
      for (long long j = 0; j < z6.size(); ++j) {
        Coord x = z6.element_of(i), y = z6.element_of(j);
        Coord lhs = pc.restrict(z6.mul(z6.scale(pc.lambda, x), z6.scale(pc.lambda, y)));
        Coord rhs = pc.ring.mul(pc.restrict(x), pc.restrict(y));
        CHECK(lhs == rhs);
      }

  auto z12 = end_of({12});
  auto c12 = prime_components(z12);
  REQUIRE(c12.size() == 2);
  CHECK(c12[0].ring.factors == std::vector<long long>({4}));
  CHECK(c12[1].ring.factors == std::vector<long long>({3}));

  // a ring of prime power size has itself as the single component
  auto z8 = end_of({8});
  auto c8 = prime_components(z8);
  REQUIRE(c8.size() == 1);
  CHECK(c8[0].ring.factors == std::vector<long long>({8}));
  CHECK(c8[0].lambda % 8 == 1);
}

TEST_CASE("quotient rings") {
  auto z8 = end_of({8});
  auto q = quotient_ring(z8, {{4}});
  CHECK(q.ring.factors == std::vector<long long>({4}));
  q.ring.validate();
  for (long long i = 0; i < z8.size(); ++i)
    for (long long j = 0; j < z8.size(); ++j) {
      Coord x = z8.element_of(i), y = z8.element_of(j);
      Coord lhs = q.project_elem(z8, z8.mul(x, y));
      Coord rhs = q.ring.mul(q.project_elem(z8, x), q.project_elem(z8, y));
      CHECK(lhs == rhs);
    }
  // lift is a section of project
  for (long long i = 0; i < q.ring.size(); ++i) {
    Coord xb = q.ring.element_of(i);
    CHECK(q.project_elem(z8, q.lift_elem(xb)) == q.ring.reduce(xb));
  }

  // quotient by the radical of the triangular ring is F2 + F2
  auto ut = upper_triangular_2x2_f2();
  auto rad = jacobson_radical(ut);
  auto qr = quotient_ring(ut, rad);
  CHECK(qr.ring.size() == 4);
  CHECK(additive_span(qr.ring, jacobson_radical(qr.ring)).size() == 1);
}

TEST_CASE("jacobson radical matches the quasi-regularity oracle") {
  struct Case {
    const char* name;
    StructuredRing r;
    size_t expect;
  };
  std::vector<Case> cases;
  cases.push_back({"z4", end_of({4}), 2});
  cases.push_back({"z8", end_of({8}), 4});
  cases.push_back({"z9", end_of({9}), 3});
  cases.push_back({"f4", f4_ring(), 1});
  cases.push_back({"ut2f2", upper_triangular_2x2_f2(), 2});
  cases.push_back({"m2f2", end_of({2, 2}), 1});
  cases.push_back({"end_z2z4", end_of({2, 4}), 0});  // size filled below
  cases.back().expect = additive_span(cases.back().r, {}).size();  // placeholder
  for (auto& c : cases) {
    if (std::string(c.name) == "end_z2z4") {
      auto want = radical_oracle(c.r);
      auto got = additive_span(c.r, jacobson_radical(c.r));
      CHECK(std::set<Coord>(got.begin(), got.end()) == want);
      continue;
    }
    CAPTURE(c.name);
    auto want = radical_oracle(c.r);
    CHECK(want.size() == c.expect);
    auto got = additive_span(c.r, jacobson_radical(c.r));
    CHECK(std::set<Coord>(got.begin(), got.end()) == want);
  }
  CHECK_THROWS_AS(jacobson_radical(end_of({6})), NotPrimePowerError);
}

TEST_CASE("unipotent generators produce a group of the radical's size") {
  for (auto r : {end_of({2}), end_of({4}), end_of({8}), end_of({16}), end_of({3}),
                 end_of({9}), end_of({27}), end_of({81}), upper_triangular_2x2_f2()}) {
    auto rad = jacobson_radical(r);
    auto jsize = additive_span(r, rad).size();
    auto ugens = unipotent_generators(r, rad);
    CHECK(generated_unit_count(r, ugens) == jsize);
    for (const auto& u : ugens) CHECK(invertible(r, u));
  }
  // the radical lattice must be nilpotent
  auto f2f2 = f2_plus_f2();
  CHECK_THROWS_AS(unipotent_generators(f2f2, {{1, 0}}), NotNilpotentError);
}

TEST_CASE("wedderburn decomposition of small semisimple algebras") {
  auto field_cases = [&](const StructuredRing& r, std::vector<std::pair<int, long long>> want) {
    auto w = wedderburn(r);
    std::vector<std::pair<int, long long>> got;
    for (auto& c : w.components) got.push_back({c.n, c.field.q()});
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
    return w;
  };

  field_cases(end_of({2}), {{1, 2}});
  field_cases(f4_ring(), {{1, 4}});
  field_cases(f2_plus_f2(), {{1, 2}, {1, 2}});
  auto wm2 = field_cases(end_of({2, 2}), {{2, 2}});
  field_cases(end_of({3, 3}), {{2, 3}});

  // prime components of F2 + F3 feed wedderburn one prime at a time
  auto z6 = end_of({6});
  std::vector<std::pair<int, long long>> parts;
  for (auto& pc : prime_components(z6)) {
    auto w = wedderburn(pc.ring);
    for (auto& c : w.components) parts.push_back({c.n, c.field.q()});
  }
  std::sort(parts.begin(), parts.end());
  CHECK(parts == std::vector<std::pair<int, long long>>({{1, 2}, {1, 3}}));

  CHECK_THROWS_AS(wedderburn(end_of({4})), TableError);
  CHECK_THROWS_AS(wedderburn(upper_triangular_2x2_f2()), NotSemisimpleError);
}

TEST_CASE("matrix units and idempotents of the wedderburn components") {
  for (auto r : {end_of({2, 2}), end_of({3, 3}), f2_plus_f2(), f4_ring()}) {
    auto w = wedderburn(r);
    Coord idsum = r.zero();
    for (auto& c : w.components) {
      const Coord& e = c.central_idempotent;
      CHECK(r.mul(e, e) == r.reduce(e));
      for (long long i = 0; i < r.size(); ++i) {
        Coord x = r.element_of(i);
        CHECK(r.mul(e, x) == r.mul(x, e));
      }
      idsum = r.add(idsum, e);
      // E_ij E_kl = delta_jk E_il, exhaustively
      int n = c.n;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) {
              Coord prod = r.mul(c.units[i][j], c.units[k][l]);
              Coord want = j == k ? r.reduce(c.units[i][l]) : r.zero();
              CHECK(prod == want);
            }
    }
    CHECK(idsum == r.reduce(r.one));

    // matrix image round trip on every element of every component
    for (auto& c : w.components) {
      for (long long i = 0; i < r.size(); ++i) {
        Coord x = r.mul(r.element_of(i), c.central_idempotent);
        auto m = c.to_matrix(r, x);
        CHECK(c.from_matrix(r, m) == r.reduce(x));
      }
    }
  }
}
