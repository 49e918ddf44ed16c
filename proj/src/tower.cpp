#include "extiso/tower.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "extiso/abelian.hpp"

namespace extiso {

namespace {

bool is_cyclic_table(const GroupTable& g) {
  for (int x = 0; x < g.n; ++x)
    if (g.order_of(x) == g.n) return true;
  return false;
}

void verify_witness(const GroupTable& g, const NormalWitness& w) {
  if (w.tower.empty() || w.tower.front().elements.size() != static_cast<size_t>(g.n))
    throw TableError("witness tower does not start at the whole group");
  if (w.tower.back().elements != w.subgroup.elements)
    throw TableError("witness tower does not end at its subgroup");
  if (w.kinds.size() + 1 != w.tower.size())
    throw TableError("witness tags do not match the tower length");
  if (!w.subgroup.is_abelian() || !is_normal(g, w.subgroup))
    throw TableError("witness bottom is not abelian normal");
  for (size_t i = 0; i + 1 < w.tower.size(); ++i) {
    SubTable st = sub_table(w.tower[i]);
    std::vector<int> inner;
    inner.reserve(w.tower[i + 1].elements.size());
    for (int x : w.tower[i + 1].elements) {
      if (st.from_parent[x] < 0) throw TableError("tower level is not nested");
      inner.push_back(st.from_parent[x]);
    }
    Subgroup s{&st.table, inner};
    if (!is_normal(st.table, s))
      throw TableError("tower level is not normal in its predecessor");
    QuotientData q = quotient(st.table, s);
    bool ok = w.kinds[i] == FactorKind::cyclic ? is_cyclic_table(*q.group)
                                               : is_simple(*q.group);
    if (!ok) throw TableError("tower factor has the wrong kind");
  }
}

}  // namespace

std::vector<Subgroup> cyclic_quotient_normals(const GroupTable& g) {
  Subgroup derived = derived_subgroup(g);
  QuotientData q = quotient(g, derived);
  AbelianDecomposition dec = decompose(whole_group(*q.group));
  long long e = dec.factors.empty() ? 1 : dec.factors.back();

  std::vector<Subgroup> out;
  std::set<std::vector<int>> seen;
  for (const auto& hom : all_homs_to_cyclic(dec.factors, e)) {
    // kernel of the composite G -> G/[G,G] -> Z_e
    std::vector<char> in_kernel(q.group->n, 0);
    for (int y = 0; y < q.group->n; ++y) {
      const auto& c = dec.coords_of[dec.position_of_element(y)];
      long long v = 0;
      for (size_t j = 0; j < hom.size(); ++j) v = (v + hom[j] * c[j]) % e;
      in_kernel[y] = v == 0;
    }
    std::vector<int> elems;
    for (int x = 0; x < g.n; ++x)
      if (in_kernel[q.coset_of[x]]) elems.push_back(x);
    if (seen.insert(elems).second) out.push_back(Subgroup{&g, std::move(elems)});
  }
  return out;
}

std::vector<Subgroup> simple_quotient_normals(const GroupTable& g) {
  std::vector<Subgroup> out;
  for (Subgroup& n : all_normal_subgroups(g)) {
    QuotientData q = quotient(g, n);
    if (is_simple(*q.group)) out.push_back(std::move(n));
  }
  return out;
}

std::vector<NormalWitness> tower_normals(const GroupTable& g, int k) {
  if (k < 1) throw UnsupportedShapeError("tower depth must be at least 1");

  // one level of candidates; cyclic listed first so prime-order quotients
  // keep the cyclic tag after deduplication
  std::vector<std::pair<Subgroup, FactorKind>> level;
  std::set<std::vector<int>> level_seen;
  for (Subgroup& s : cyclic_quotient_normals(g))
    if (level_seen.insert(s.elements).second)
      level.emplace_back(std::move(s), FactorKind::cyclic);
  for (Subgroup& s : simple_quotient_normals(g))
    if (level_seen.insert(s.elements).second)
      level.emplace_back(std::move(s), FactorKind::simple);

  std::vector<NormalWitness> out;
  std::set<std::vector<int>> seen;
  auto add = [&](NormalWitness w) {
    if (!seen.insert(w.subgroup.elements).second) return;
    verify_witness(g, w);
    out.push_back(std::move(w));
  };

  for (auto& [n1, kind] : level) {
    if (k == 1) {
      if (!n1.is_abelian()) continue;
      NormalWitness w;
      w.subgroup = n1;
      w.tower = {whole_group(g), n1};
      w.kinds = {kind};
      add(std::move(w));
    } else {
      SubTable st = sub_table(n1);
      for (NormalWitness& sub : tower_normals(st.table, k - 1)) {
        NormalWitness w;
        w.kinds = {kind};
        w.kinds.insert(w.kinds.end(), sub.kinds.begin(), sub.kinds.end());
        w.tower = {whole_group(g)};
        for (const Subgroup& lvl : sub.tower) {
          std::vector<int> mapped;
          mapped.reserve(lvl.elements.size());
          for (int x : lvl.elements) mapped.push_back(st.to_parent[x]);
          w.tower.push_back(Subgroup{&g, std::move(mapped)});
        }
        w.subgroup = w.tower.back();
        // only the bottom needs normality in the whole group
        if (!is_normal(g, w.subgroup)) continue;
        add(std::move(w));
      }
    }
  }
  return out;
}

namespace {

// All isomorphisms between the quotient tables, enumerated through images of
// one generating tuple with element-order pruning.
std::vector<std::vector<int>> quotient_isomorphisms(const GroupTable& h, const GroupTable& h0,
                                                    const std::vector<int>& hgens) {
  std::vector<std::vector<int>> out;
  if (h.n != h0.n) return out;
  int m = static_cast<int>(hgens.size());
  if (m == 0) {
    if (h.n == 1) out.push_back({h0.identity});
    return out;
  }
  std::vector<std::vector<int>> pools(m);
  for (int i = 0; i < m; ++i) {
    int ord = h.order_of(hgens[i]);
    for (int y = 0; y < h0.n; ++y)
      if (h0.order_of(y) == ord) pools[i].push_back(y);
    if (pools[i].empty()) return out;
  }
  std::vector<int> idx(m, 0);
  std::vector<char> hit(h0.n);
  for (;;) {
    std::vector<int> images(m);
    for (int i = 0; i < m; ++i) images[i] = pools[i][idx[i]];
    if (auto full = hom_from_generator_images(h, h0, hgens, images)) {
      std::fill(hit.begin(), hit.end(), 0);
      bool bij = true;
      for (int v : *full) {
        if (hit[v]) {
          bij = false;
          break;
        }
        hit[v] = 1;
      }
      if (bij) out.push_back(std::move(*full));
    }
    int i = m - 1;
    while (i >= 0 && ++idx[i] == static_cast<int>(pools[i].size())) idx[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

}  // namespace

StabChain automorphism_group(const GroupTable& g, int k, bool min_gens) {
  auto ws = tower_normals(g, k);
  if (ws.empty())
    throw UnsupportedShapeError("no abelian normal subgroup carries a tower of this depth");
  const Subgroup& a = ws[0].subgroup;
  StabChain aut0 = aut0_generators(g, a);
  std::vector<Perm> gens = aut0.strong_generators();

  AbelianDecomposition dec = decompose(a);
  QuotientData q = quotient(g, a);
  int kk = min_gens ? minimal_generating_size(*q.group) : 2 * k;
  auto hgens = first_generating_tuple(*q.group, kk);
  if (!hgens)
    throw NotGeneratingError("quotient needs more generators than the tower bound allows");

  long cosets = 0;
  for (const NormalWitness& w0 : ws) {
    const Subgroup& a0 = w0.subgroup;
    if (a0.size() != a.size() || decompose(a0).factors != dec.factors) continue;
    QuotientData q0 = quotient(g, a0);
    for (auto& images : quotient_isomorphisms(*q.group, *q0.group, *hgens)) {
      GroupHom psi{q.group.get(), q0.group.get(), std::move(images)};
      IsomorphismCoset ext = extend_quotient_isomorphism(g, g, a, a0, psi, kk);
      if (ext.representative) {
        ++cosets;
        Perm p;
        p.img = std::move(ext.representative->images);
        gens.push_back(std::move(p));
      }
    }
  }

  StabChain out = StabChain::build(g.n, gens);
  if (out.order() != aut0.order() * cosets)
    throw TableError("automorphism group order disagrees with the coset decomposition");
  return out;
}

IsomorphismCoset isomorphism_test(const GroupTable& g, const GroupTable& g0, int k,
                                  bool min_gens) {
  auto ws = tower_normals(g, k);
  if (ws.empty())
    throw UnsupportedShapeError("no abelian normal subgroup carries a tower of this depth");
  IsomorphismCoset out{automorphism_group(g, k, min_gens), std::nullopt};
  if (g.n != g0.n) return out;

  const Subgroup& a = ws[0].subgroup;
  AbelianDecomposition dec = decompose(a);
  QuotientData q = quotient(g, a);
  int kk = min_gens ? minimal_generating_size(*q.group) : 2 * k;
  auto hgens = first_generating_tuple(*q.group, kk);
  if (!hgens)
    throw NotGeneratingError("quotient needs more generators than the tower bound allows");

  for (const NormalWitness& w0 : tower_normals(g0, k)) {
    const Subgroup& a0 = w0.subgroup;
    if (a0.size() != a.size() || decompose(a0).factors != dec.factors) continue;
    QuotientData q0 = quotient(g0, a0);
    for (auto& images : quotient_isomorphisms(*q.group, *q0.group, *hgens)) {
      GroupHom psi{q.group.get(), q0.group.get(), std::move(images)};
      IsomorphismCoset ext = extend_quotient_isomorphism(g, g0, a, a0, psi, kk);
      if (ext.representative) {
        out.representative = std::move(ext.representative);
        return out;
      }
    }
  }
  return out;
}

}  // namespace extiso
