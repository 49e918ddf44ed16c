#include <algorithm>

#include "extiso/finring.hpp"

namespace extiso {

namespace {

constexpr long long kChainDegreeLimit = 4096;

mpz_class gl_order(int n, long long q) {
  // prod_{i<n} (q^n - q^i)
  mpz_class qn = 1;
  for (int i = 0; i < n; ++i) qn *= q;
  mpz_class out = 1, qi = 1;
  for (int i = 0; i < n; ++i) {
    out *= qn - qi;
    qi *= q;
  }
  return out;
}

}  // namespace

UnitGroupData unit_group(const StructuredRing& r) {
  UnitGroupData out;
  out.order = 1;
  Coord one = r.reduce(r.one);
  long long total = r.size();

  auto comps = prime_components(r);
  for (const auto& comp : comps) {
    std::vector<Coord> comp_gens;
    auto rad = jacobson_radical(comp.ring);
    QuotientRing qr = quotient_ring(comp.ring, rad);
    WedderburnDecomposition wd = wedderburn(qr.ring);
    Coord qone = qr.ring.reduce(qr.ring.one);
    for (const auto& c : wd.components) {
      for (const FqMat& gm : gl_generators(c.n, c.field)) {
        Coord xbar = c.from_matrix(qr.ring, gm);
        // adjust to the identity outside this simple component
        Coord ubar = qr.ring.add(xbar, qr.ring.sub(qone, c.central_idempotent));
        comp_gens.push_back(comp.ring.reduce(qr.lift_elem(ubar)));
      }
      out.order *= gl_order(c.n, c.field.q());
    }
    for (Coord& u : unipotent_generators(comp.ring, rad)) comp_gens.push_back(std::move(u));
    out.order *= comp.ring.size() / qr.ring.size();  // |1 + J| = |J|

    Coord onep = comp.embed(comp.ring.reduce(comp.ring.one));
    for (const Coord& up : comp_gens) {
      Coord u = r.add(comp.embed(up), r.sub(one, onep));
      if (u != one && std::find(out.generators.begin(), out.generators.end(), u) ==
                          out.generators.end())
        out.generators.push_back(u);
    }
  }

  if (total <= kChainDegreeLimit) {
    std::vector<Perm> perms;
    for (const Coord& u : out.generators) perms.push_back(right_multiplication_perm(r, u));
    out.chain = StabChain::build(static_cast<int>(total), perms);
    if (out.chain->order() != out.order)
      throw TableError("unit group order mismatch between chain and structure");
  }
  return out;
}

}  // namespace extiso
