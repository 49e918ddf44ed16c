#include "extiso/extension.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "extiso/finring.hpp"
#include "extiso/modiso.hpp"

namespace extiso {

namespace {

Word word_inverse(const Word& w) {
  Word out;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.emplace_back(it->first, -it->second);
  return out;
}

Word word_concat(const Word& x, const Word& y) {
  Word out = x;
  out.letters.insert(out.letters.end(), y.letters.begin(), y.letters.end());
  return out;
}

}  // namespace

Presentation quotient_presentation(const QuotientData& q, const std::vector<int>& gens,
                                   bool reverse_scan) {
  const GroupTable& h = *q.group;
  Presentation p;
  p.k = static_cast<int>(gens.size());
  for (int x : gens)
    if (x < 0 || x >= h.n) throw TableError("quotient_presentation: generator out of range");

  // word table grown by right multiplication, so word_for[y] * gens[i]
  // evaluates to y * gens[i]
  std::vector<char> seen(h.n, 0);
  p.word_for.assign(h.n, Word{});
  std::vector<int> queue{h.identity};
  seen[h.identity] = 1;
  for (size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (int ii = 0; ii < p.k; ++ii) {
      int i = reverse_scan ? p.k - 1 - ii : ii;
      int y = h.mul(x, gens[i]);
      if (!seen[y]) {
        seen[y] = 1;
        p.word_for[y] = p.word_for[x];
        p.word_for[y].letters.emplace_back(i, 1);
        queue.push_back(y);
      }
    }
  }
  if (static_cast<int>(queue.size()) != h.n)
    throw NotGeneratingError("quotient_presentation: generators do not generate the quotient");

  p.relators.reserve(static_cast<size_t>(h.n) * h.n);
  for (int x = 0; x < h.n; ++x)
    for (int y = 0; y < h.n; ++y)
      p.relators.push_back(word_concat(word_concat(p.word_for[x], p.word_for[y]),
                                       word_inverse(p.word_for[h.mul(x, y)])));
  return p;
}

RelatorValues relator_values(const Presentation& p, const std::vector<int>& gs,
                             const Subgroup& a) {
  const GroupTable& g = *a.parent;
  if (static_cast<int>(gs.size()) != p.k)
    throw TableError("relator_values: generator count mismatch");
  RelatorValues rv;
  for (const Word& w : p.relators) {
    if (std::find(rv.words.begin(), rv.words.end(), w) != rv.words.end()) continue;
    int v = evaluate_word(w, g, gs);
    if (!a.contains(v))
      throw RelatorOutsideKernelError("relator value " + std::to_string(v) +
                                      " lies outside the subgroup");
    rv.words.push_back(w);
    rv.values.push_back(v);
  }
  return rv;
}

namespace {

// Everything the source side contributes: quotient, word table, relator
// values, transversal elements v_h(gs), and the corrections a_i with
// gs[i] = v_{h_i}(gs) a_i. The a_i join the relator values as constraint
// points; they are the identity whenever the word for h_i is the letter x_i.
struct SourceData {
  QuotientData q;
  AbelianDecomposition dec;
  std::vector<int> gs;
  Presentation pres;
  RelatorValues rv;
  std::vector<int> vh;
  std::vector<int> extras;
};

SourceData make_source(const GroupTable& g, const Subgroup& a, std::vector<int> gs,
                       bool reverse_scan = false) {
  SourceData s;
  s.q = quotient(g, a);
  s.dec = decompose(a);
  s.gs = std::move(gs);
  std::vector<int> hgens(s.gs.size());
  for (size_t i = 0; i < s.gs.size(); ++i) hgens[i] = s.q.coset_of[s.gs[i]];
  s.pres = quotient_presentation(s.q, hgens, reverse_scan);
  s.rv = relator_values(s.pres, s.gs, a);
  s.vh.resize(s.q.group->n);
  for (int h = 0; h < s.q.group->n; ++h) s.vh[h] = evaluate_word(s.pres.word_for[h], g, s.gs);
  s.extras.resize(s.gs.size());
  for (size_t i = 0; i < s.gs.size(); ++i) {
    int h = s.q.coset_of[s.gs[i]];
    s.extras[i] = g.mul(g.inv(s.vh[h]), s.gs[i]);
    if (!a.contains(s.extras[i]))
      throw TableError("generator correction escaped the subgroup");
  }
  return s;
}

StructuredRing group_ring(const GroupTable& h, long long n) {
  StructuredRing r;
  r.factors.assign(h.n, n);
  r.alpha.assign(h.n, std::vector<Coord>(h.n));
  for (int i = 0; i < h.n; ++i)
    for (int j = 0; j < h.n; ++j) {
      Coord c(h.n, 0);
      c[h.mul(i, j)] = 1;
      r.alpha[i][j] = std::move(c);
    }
  r.one = Coord(h.n, 0);
  r.one[h.identity] = 1;
  return r;
}

// Conjugation by lift[h] as a matrix on dec coordinates, one per coset.
// Conjugating by anything in the same coset gives the same matrix because
// the subgroup is abelian.
std::vector<MatI64> conjugation_actions(const GroupTable& g, const AbelianDecomposition& dec,
                                        const std::vector<int>& lift) {
  int k = dec.t();
  std::vector<MatI64> out;
  out.reserve(lift.size());
  for (int v : lift) {
    MatI64 m(k, k);
    for (int j = 0; j < k; ++j) {
      int img = g.conj(dec.generator_elements[j], v);
      int pos = dec.position_of_element(img);
      if (pos < 0) throw TableError("conjugation left the subgroup");
      for (int i = 0; i < k; ++i) m(i, j) = dec.coords_of[pos][i];
    }
    out.push_back(std::move(m));
  }
  return out;
}

Perm matrix_perm(const AbelianDecomposition& dec, const MatI64& m) {
  int sz = static_cast<int>(dec.elements.size());
  int k = dec.t();
  Perm p = Perm::identity(sz);
  std::vector<long long> img(k);
  for (int pos = 0; pos < sz; ++pos) {
    const auto& c = dec.coords_of[pos];
    for (int i = 0; i < k; ++i) {
      long long v = 0;
      for (int j = 0; j < k; ++j) v = (v + m(i, j) * c[j]) % dec.factors[i];
      img[i] = v;
    }
    p.img[pos] = dec.position_of_coords(img);
  }
  return p;
}

// The full automorphism group of the module, acting on its points: units of
// the commutant of the given action matrices.
struct ModuleAutos {
  EndRing end;
  StabChain chain;
};

ModuleAutos module_automorphisms(const AbelianDecomposition& dec,
                                 const std::vector<MatI64>& actions) {
  ModuleAutos out;
  out.end = commutant_ring(dec, actions);
  UnitGroupData u = unit_group(out.end.ring);
  std::vector<Perm> perms;
  perms.reserve(u.generators.size());
  for (const Coord& gen : u.generators)
    perms.push_back(matrix_perm(dec, out.end.action_matrix(gen)));
  out.chain = StabChain::build(static_cast<int>(dec.elements.size()), perms);
  return out;
}

int mu_position(const AbelianDecomposition& dec, const AbelianDecomposition& dec0,
                const MatI64& mu, int elem) {
  int pos = dec.position_of_element(elem);
  if (pos < 0) throw TableError("tuple point escaped the subgroup");
  std::vector<long long> img(dec0.t());
  for (int i = 0; i < dec0.t(); ++i) {
    long long v = 0;
    for (int j = 0; j < dec.t(); ++j)
      v = (v + mu(i, j) % dec0.factors[i] * dec.coords_of[pos][j]) % dec0.factors[i];
    img[i] = v;
  }
  return dec0.position_of_coords(img);
}

std::function<int(int)> make_phi(const AbelianDecomposition& dec,
                                 const AbelianDecomposition& dec0, MatI64 mu, Perm theta) {
  return [&dec, &dec0, mu = std::move(mu), theta = std::move(theta)](int ax) {
    int p0 = mu_position(dec, dec0, mu, ax);
    return dec0.elements[theta.img[p0]];
  };
}

// phi for the in-place case: mu is the identity and theta permutes dec's own
// points
std::function<int(int)> perm_phi(const AbelianDecomposition& dec, Perm theta) {
  return [&dec, theta = std::move(theta)](int ax) {
    int pos = dec.position_of_element(ax);
    if (pos < 0) throw TableError("element escaped the subgroup during assembly");
    return dec.elements[theta.img[pos]];
  };
}

std::vector<int> assemble_images(const GroupTable& g, const GroupTable& g0,
                                 const SourceData& s, const std::vector<int>& vh0,
                                 const std::function<int(int)>& phi) {
  std::vector<int> images(g.n);
  for (int x = 0; x < g.n; ++x) {
    int h = s.q.coset_of[x];
    int ax = g.mul(g.inv(s.vh[h]), x);
    images[x] = g0.mul(vh0[h], phi(ax));
  }
  return images;
}

bool valid_isomorphism(const GroupTable& g, const GroupTable& g0, const std::vector<int>& im,
                       const Subgroup& a, const Subgroup& a0) {
  if (g.n != g0.n) return false;
  std::vector<char> hit(g0.n, 0);
  for (int x = 0; x < g.n; ++x) {
    if (im[x] < 0 || im[x] >= g0.n || hit[im[x]]) return false;
    hit[im[x]] = 1;
  }
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y)
      if (im[g.mul(x, y)] != g0.mul(im[x], im[y])) return false;
  for (int x : a.elements)
    if (!a0.contains(im[x])) return false;
  return true;
}

// Relator values and corrections re-evaluated at a candidate target tuple;
// nullopt when some value leaves the target subgroup (the candidate cannot
// carry the extension structure).
struct TargetEval {
  std::vector<int> vh0;
  std::vector<int> uvals;
  std::vector<int> extras;
};

std::optional<TargetEval> eval_target(const GroupTable& g0, const Subgroup& a0,
                                      const SourceData& s, const std::vector<int>& gs0) {
  TargetEval t;
  t.vh0.resize(s.q.group->n);
  for (int h = 0; h < s.q.group->n; ++h)
    t.vh0[h] = evaluate_word(s.pres.word_for[h], g0, gs0);
  t.uvals.reserve(s.rv.words.size());
  for (const Word& w : s.rv.words) {
    int v = evaluate_word(w, g0, gs0);
    if (!a0.contains(v)) return std::nullopt;
    t.uvals.push_back(v);
  }
  t.extras.resize(gs0.size());
  for (size_t i = 0; i < gs0.size(); ++i) {
    int h = s.q.coset_of[s.gs[i]];
    t.extras[i] = g0.mul(g0.inv(t.vh0[h]), gs0[i]);
    if (!a0.contains(t.extras[i])) return std::nullopt;
  }
  return t;
}

std::vector<int> constraint_points(const AbelianDecomposition& dec, const std::vector<int>& uvals,
                                   const std::vector<int>& extras) {
  std::vector<int> pts;
  pts.reserve(uvals.size() + extras.size());
  for (int v : uvals) pts.push_back(dec.position_of_element(v));
  for (int v : extras) pts.push_back(dec.position_of_element(v));
  return pts;
}

}  // namespace

std::optional<GroupHom> assemble_isomorphism(const GroupTable& g, const GroupTable& g0,
                                             const Subgroup& a, const Subgroup& a0,
                                             const Presentation& p,
                                             const std::vector<int>& gs,
                                             const std::vector<int>& gs0,
                                             const std::vector<int>& phi) {
  if (static_cast<int>(phi.size()) != a.size())
    throw TableError("assemble_isomorphism: phi has the wrong length");
  if (static_cast<int>(gs.size()) != p.k || gs0.size() != gs.size())
    throw TableError("assemble_isomorphism: generator tuples do not match the presentation");
  QuotientData q = quotient(g, a);
  if (static_cast<int>(p.word_for.size()) != q.group->n)
    throw TableError("assemble_isomorphism: presentation does not match the quotient");
  std::vector<int> vh(q.group->n), vh0(q.group->n);
  for (int h = 0; h < q.group->n; ++h) {
    vh[h] = evaluate_word(p.word_for[h], g, gs);
    if (q.coset_of[vh[h]] != h)
      throw TableError("assemble_isomorphism: word table does not hit its coset");
    vh0[h] = evaluate_word(p.word_for[h], g0, gs0);
  }
  std::vector<int> im(g.n);
  for (int x = 0; x < g.n; ++x) {
    int h = q.coset_of[x];
    int ax = g.mul(g.inv(vh[h]), x);
    int pos = a.position_of(ax);
    if (pos < 0) throw TableError("assemble_isomorphism: decomposition escaped the subgroup");
    im[x] = g0.mul(vh0[h], phi[pos]);
  }
  if (!valid_isomorphism(g, g0, im, a, a0)) return std::nullopt;
  return GroupHom{&g, &g0, im};
}

StabChain stabilizer_with_fixed_generators(const GroupTable& g, const Subgroup& a,
                                           const std::vector<int>& gs) {
  if (a.size() <= 1) return StabChain::build(g.n, {});
  SourceData s = make_source(g, a, gs);
  auto actions = conjugation_actions(g, s.dec, s.vh);
  ModuleAutos ma = module_automorphisms(s.dec, actions);
  std::vector<int> pts = constraint_points(s.dec, s.rv.values, s.extras);
  StabChain c = pointwise_stabilizer(ma.chain, pts);

  std::vector<Perm> lifted;
  for (const Perm& th : c.strong_generators()) {
    auto im = assemble_images(g, g, s, s.vh, perm_phi(s.dec, th));
    if (!valid_isomorphism(g, g, im, a, a))
      throw TableError("lifted stabilizer generator is not an automorphism");
    Perm p;
    p.img = std::move(im);
    lifted.push_back(std::move(p));
  }
  StabChain out = StabChain::build(g.n, lifted);
  if (out.order() != c.order())
    throw TableError("stabilizer lift changed the group order");
  return out;
}

StabChain aut0_generators(const GroupTable& g, const Subgroup& a) {
  if (a.size() <= 1) return StabChain::build(g.n, {});
  QuotientData q = quotient(g, a);
  int k = minimal_generating_size(*q.group);
  auto hgens = first_generating_tuple(*q.group, k);
  std::vector<int> gs(k);
  for (int i = 0; i < k; ++i) gs[i] = q.reps[(*hgens)[i]];
  SourceData s = make_source(g, a, gs);
  auto actions = conjugation_actions(g, s.dec, s.vh);
  ModuleAutos ma = module_automorphisms(s.dec, actions);
  std::vector<int> pts = constraint_points(s.dec, s.rv.values, s.extras);
  StabChain c = pointwise_stabilizer(ma.chain, pts);

  std::vector<Perm> gens;
  for (const Perm& th : c.strong_generators()) {
    auto im = assemble_images(g, g, s, s.vh, perm_phi(s.dec, th));
    if (!valid_isomorphism(g, g, im, a, a))
      throw TableError("lifted stabilizer generator is not an automorphism");
    Perm p;
    p.img = std::move(im);
    gens.push_back(std::move(p));
  }

  // sweep every tuple with gs0[i] in the coset of gs[i]; each realizable
  // tuple contributes one coset of the fixed-generator stabilizer
  std::vector<std::vector<int>> pools(k);
  for (int i = 0; i < k; ++i) {
    int h = s.q.coset_of[s.gs[i]];
    for (int x = 0; x < g.n; ++x)
      if (s.q.coset_of[x] == h) pools[i].push_back(x);
  }
  long long realizable = 0;
  std::vector<int> idxs(k, 0);
  for (;;) {
    std::vector<int> cand(k);
    for (int i = 0; i < k; ++i) cand[i] = pools[i][idxs[i]];
    auto te = eval_target(g, a, s, cand);
    if (!te) throw TableError("coset candidate left the subgroup unexpectedly");
    std::vector<int> dst = constraint_points(s.dec, te->uvals, te->extras);
    if (auto th = transporter(ma.chain, pts, dst)) {
      ++realizable;
      auto im = assemble_images(g, g, s, te->vh0, perm_phi(s.dec, *th));
      if (!valid_isomorphism(g, g, im, a, a))
        throw TableError("assembled coset representative failed verification");
      Perm p;
      p.img = std::move(im);
      gens.push_back(std::move(p));
    }
    int i = k - 1;
    while (i >= 0 && ++idxs[i] == static_cast<int>(pools[i].size())) idxs[i--] = 0;
    if (i < 0) break;
  }

  StabChain out = StabChain::build(g.n, gens);
  if (out.order() != c.order() * realizable)
    throw TableError("automorphism group order disagrees with the coset count");
  return out;
}

std::optional<GroupHom> isomorphism_with_prescribed_images(
    const GroupTable& g, const GroupTable& g0, const Subgroup& a, const Subgroup& a0,
    const std::vector<int>& gs, const std::vector<int>& gs0) {
  if (gs.size() != gs0.size())
    throw TableError("isomorphism_with_prescribed_images: tuple length mismatch");
  if (g.n != g0.n || a.size() != a0.size()) return std::nullopt;
  for (int x : gs0)
    if (x < 0 || x >= g0.n) throw TableError("prescribed image out of range");
  AbelianDecomposition dec0 = decompose(a0);
  SourceData s = make_source(g, a, gs);
  if (s.dec.factors != dec0.factors) return std::nullopt;

  QuotientData q0 = quotient(g0, a0);
  std::vector<int> hgens0(gs0.size());
  for (size_t i = 0; i < gs0.size(); ++i) hgens0[i] = q0.coset_of[gs0[i]];
  if (subgroup_generated(*q0.group, hgens0).size() != q0.group->n) return std::nullopt;
  auto te = eval_target(g0, a0, s, gs0);
  if (!te) return std::nullopt;

  auto actions = conjugation_actions(g, s.dec, s.vh);
  auto actions0 = conjugation_actions(g0, dec0, te->vh0);
  StructuredRing r = group_ring(*s.q.group, g.n);
  auto mu = module_isomorphism(r, RModule{s.dec, actions}, RModule{dec0, actions0});
  if (!mu) return std::nullopt;

  ModuleAutos ma = module_automorphisms(dec0, actions0);
  std::vector<int> src;
  for (int v : s.rv.values) src.push_back(mu_position(s.dec, dec0, *mu, v));
  for (int v : s.extras) src.push_back(mu_position(s.dec, dec0, *mu, v));
  std::vector<int> dst = constraint_points(dec0, te->uvals, te->extras);
  auto th = transporter(ma.chain, src, dst);
  if (!th) return std::nullopt;

  auto im = assemble_images(g, g0, s, te->vh0, make_phi(s.dec, dec0, *mu, *th));
  if (!valid_isomorphism(g, g0, im, a, a0))
    throw TableError("assembled isomorphism failed verification");
  for (size_t i = 0; i < gs.size(); ++i)
    if (im[gs[i]] != gs0[i])
      throw TableError("assembled isomorphism missed a prescribed image");
  return GroupHom{&g, &g0, im};
}

IsomorphismCoset extend_quotient_isomorphism(const GroupTable& g, const GroupTable& g0,
                                             const Subgroup& a, const Subgroup& a0,
                                             const GroupHom& psi, int k) {
  IsomorphismCoset out{aut0_generators(g, a), std::nullopt};
  if (g.n != g0.n || a.size() != a0.size()) return out;

  QuotientData q = quotient(g, a);
  QuotientData q0 = quotient(g0, a0);
  if (static_cast<int>(psi.images.size()) != q.group->n || q.group->n != q0.group->n)
    throw TableError("extend_quotient_isomorphism: psi has the wrong shape");
  GroupHom psic{q.group.get(), q0.group.get(), psi.images};
  HomCheck hc = check_hom(psic);
  if (!hc.is_hom || !hc.bijective)
    throw TableError("extend_quotient_isomorphism: psi is not a quotient isomorphism");

  AbelianDecomposition dec0 = decompose(a0);
  auto hgens = first_generating_tuple(*q.group, k);
  if (!hgens)
    throw NotGeneratingError("extend_quotient_isomorphism: quotient needs more generators");
  std::vector<int> gs(k);
  for (int i = 0; i < k; ++i) gs[i] = q.reps[(*hgens)[i]];
  SourceData s = make_source(g, a, gs);
  if (s.dec.factors != dec0.factors) return out;

  // baseline lifts fix the target module structure; any other candidate in
  // the same cosets acts identically on a0
  std::vector<int> gs0_base(k);
  for (int i = 0; i < k; ++i) gs0_base[i] = q0.reps[psi.images[(*hgens)[i]]];
  std::vector<int> vh0_base(s.q.group->n);
  for (int h = 0; h < s.q.group->n; ++h)
    vh0_base[h] = evaluate_word(s.pres.word_for[h], g0, gs0_base);

  auto actions = conjugation_actions(g, s.dec, s.vh);
  auto actions0 = conjugation_actions(g0, dec0, vh0_base);
  StructuredRing r = group_ring(*s.q.group, g.n);
  auto mu = module_isomorphism(r, RModule{s.dec, actions}, RModule{dec0, actions0});
  if (!mu) return out;

  ModuleAutos ma = module_automorphisms(dec0, actions0);
  std::vector<int> src;
  for (int v : s.rv.values) src.push_back(mu_position(s.dec, dec0, *mu, v));
  for (int v : s.extras) src.push_back(mu_position(s.dec, dec0, *mu, v));

  std::vector<std::vector<int>> pools(k);
  for (int i = 0; i < k; ++i) {
    int c0 = psi.images[(*hgens)[i]];
    for (int x = 0; x < g0.n; ++x)
      if (q0.coset_of[x] == c0) pools[i].push_back(x);
  }
  std::vector<int> idxs(k, 0);
  for (;;) {
    std::vector<int> cand(k);
    for (int i = 0; i < k; ++i) cand[i] = pools[i][idxs[i]];
    if (auto te = eval_target(g0, a0, s, cand)) {
      std::vector<int> dst = constraint_points(dec0, te->uvals, te->extras);
      if (auto th = transporter(ma.chain, src, dst)) {
        auto im = assemble_images(g, g0, s, te->vh0, make_phi(s.dec, dec0, *mu, *th));
        if (!valid_isomorphism(g, g0, im, a, a0))
          throw TableError("assembled isomorphism failed verification");
        for (int x = 0; x < g.n; ++x)
          if (q0.coset_of[im[x]] != psi.images[q.coset_of[x]])
            throw TableError("assembled isomorphism does not induce psi");
        out.representative = GroupHom{&g, &g0, im};
        return out;
      }
    }
    int i = k - 1;
    while (i >= 0 && ++idxs[i] == static_cast<int>(pools[i].size())) idxs[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

}  // namespace extiso
