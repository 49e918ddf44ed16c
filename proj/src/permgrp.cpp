#include "extiso/permgrp.hpp"

#include <algorithm>
#include <functional>

namespace extiso {

Perm Perm::identity(int n) {
  Perm p;
  p.img.resize(n);
  for (int i = 0; i < n; ++i) p.img[i] = i;
  return p;
}

bool Perm::is_identity() const {
  for (size_t i = 0; i < img.size(); ++i)
    if (img[i] != static_cast<int>(i)) return false;
  return true;
}

Perm Perm::operator*(const Perm& o) const {
  Perm p;
  p.img.resize(img.size());
  for (size_t i = 0; i < img.size(); ++i) p.img[i] = o.img[img[i]];
  return p;
}

Perm Perm::inverse() const {
  Perm p;
  p.img.resize(img.size());
  for (size_t i = 0; i < img.size(); ++i) p.img[img[i]] = static_cast<int>(i);
  return p;
}

namespace {

void recompute_orbit(StabChain::Level& lv, int degree) {
  lv.orbit.clear();
  lv.parent.assign(degree, -1);
  lv.via.assign(degree, -1);
  lv.orbit.push_back(lv.beta);
  std::vector<char> seen(degree, 0);
  seen[lv.beta] = 1;
  for (size_t head = 0; head < lv.orbit.size(); ++head) {
    int x = lv.orbit[head];
    for (size_t s = 0; s < lv.gens.size(); ++s) {
      int y = lv.gens[s].img[x];
      if (!seen[y]) {
        seen[y] = 1;
        lv.parent[y] = x;
        lv.via[y] = static_cast<int>(s);
        lv.orbit.push_back(y);
      }
    }
  }
}

std::pair<Perm, int> strip_from(const StabChain& c, Perm p, int from) {
  for (int l = from; l < static_cast<int>(c.levels.size()); ++l) {
    int delta = p.img[c.levels[l].beta];
    if (!c.in_orbit(l, delta)) return {p, l};
    p = p * c.transversal(l, delta).inverse();
  }
  return {p, static_cast<int>(c.levels.size())};
}

int first_moved(const Perm& g) {
  for (int x = 0; x < g.degree(); ++x)
    if (g.img[x] != x) return x;
  return -1;
}

}  // namespace

bool StabChain::in_orbit(int level, int point) const {
  const Level& lv = levels[level];
  return point == lv.beta || lv.parent[point] >= 0;
}

Perm StabChain::transversal(int level, int point) const {
  const Level& lv = levels[level];
  std::vector<int> path;  // generator indices from point back to beta
  int x = point;
  while (x != lv.beta) {
    path.push_back(lv.via[x]);
    x = lv.parent[x];
  }
  Perm u = Perm::identity(degree);
  for (auto it = path.rbegin(); it != path.rend(); ++it) u = u * lv.gens[*it];
  return u;
}

StabChain StabChain::build(int degree, const std::vector<Perm>& gens,
                           const std::vector<int>& forced_base) {
  StabChain c;
  c.degree = degree;
  for (int b : forced_base) {
    Level lv;
    lv.beta = b;
    c.levels.push_back(lv);
  }
  // Level i keeps every known generator fixing base[0..i-1] pointwise, so an
  // incoming generator lands on levels 0..dropout.
  auto insert_gen = [&](const Perm& g) {
    size_t l = 0;
    while (l < c.levels.size() && g.img[c.levels[l].beta] == c.levels[l].beta) ++l;
    if (l == c.levels.size()) {
      Level lv;
      lv.beta = first_moved(g);
      c.levels.push_back(lv);
    }
    for (size_t i = 0; i <= l; ++i) c.levels[i].gens.push_back(g);
    return l;
  };
  for (const Perm& g : gens)
    if (!g.is_identity()) insert_gen(g);
  if (c.levels.empty()) return c;
  for (auto& lv : c.levels) recompute_orbit(lv, degree);

  int i = static_cast<int>(c.levels.size()) - 1;
  while (i >= 0) {
    recompute_orbit(c.levels[i], degree);
    bool descended = false;
    const std::vector<int> orbit_snapshot = c.levels[i].orbit;
    const size_t gen_count = c.levels[i].gens.size();
    for (size_t oi = 0; oi < orbit_snapshot.size() && !descended; ++oi) {
      int delta = orbit_snapshot[oi];
      Perm u = c.transversal(i, delta);
      for (size_t si = 0; si < gen_count && !descended; ++si) {
        Perm s = c.levels[i].gens[si];
        Perm schreier = u * s * c.transversal(i, s.img[delta]).inverse();
        if (schreier.is_identity()) continue;
        auto [h, j] = strip_from(c, schreier, i + 1);
        if (h.is_identity()) continue;
        size_t dropout = insert_gen(h);
        (void)j;
        recompute_orbit(c.levels[dropout], degree);
        i = static_cast<int>(dropout);
        descended = true;
      }
    }
    if (!descended) --i;
  }
  return c;
}

mpz_class StabChain::order() const {
  mpz_class o = 1;
  for (const auto& lv : levels) o *= static_cast<long>(lv.orbit.size());
  return o;
}

bool StabChain::contains(const Perm& p) const {
  if (p.is_identity()) return true;
  if (levels.empty()) return false;
  auto [h, j] = strip_from(*this, p, 0);
  (void)j;
  return h.is_identity();
}

std::vector<Perm> StabChain::strong_generators() const {
  std::vector<Perm> out;
  for (const auto& lv : levels)
    for (const Perm& g : lv.gens)
      if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  return out;
}

std::vector<Perm> StabChain::elements(size_t limit) const {
  mpz_class cap(static_cast<unsigned long>(limit));
  if (order() > cap) throw ResourceLimitError("group too large to enumerate: " + order().get_str());
  std::vector<Perm> out{Perm::identity(degree)};
  // strip factors an element as t_deep * ... * t_0
  for (int l = static_cast<int>(levels.size()) - 1; l >= 0; --l) {
    std::vector<Perm> next;
    next.reserve(out.size() * levels[l].orbit.size());
    for (const Perm& head : out)
      for (int pt : levels[l].orbit) next.push_back(head * transversal(l, pt));
    out = std::move(next);
  }
  return out;
}

StabChain pointwise_stabilizer(const StabChain& g, const std::vector<int>& pts) {
  std::vector<int> forced;
  for (int p : pts)
    if (std::find(forced.begin(), forced.end(), p) == forced.end()) forced.push_back(p);
  StabChain full = StabChain::build(g.degree, g.strong_generators(), forced);
  StabChain out;
  out.degree = g.degree;
  for (size_t l = forced.size(); l < full.levels.size(); ++l) out.levels.push_back(full.levels[l]);
  return out;
}

std::optional<Perm> transporter(const StabChain& g, const std::vector<int>& src,
                                const std::vector<int>& dst) {
  if (src.size() != dst.size()) throw UnsupportedShapeError("transporter: tuple length mismatch");
  std::vector<int> s2, d2;
  for (size_t i = 0; i < src.size(); ++i) {
    bool dup = false;
    for (size_t j = 0; j < s2.size(); ++j)
      if (s2[j] == src[i]) {
        if (d2[j] != dst[i]) return std::nullopt;  // contradictory constraints
        dup = true;
        break;
      }
    if (!dup) {
      s2.push_back(src[i]);
      d2.push_back(dst[i]);
    }
  }
  if (s2.empty()) return Perm::identity(g.degree);
  StabChain c = StabChain::build(g.degree, g.strong_generators(), s2);
  std::function<std::optional<Perm>(size_t, std::vector<int>)> go =
      [&](size_t l, std::vector<int> tgt) -> std::optional<Perm> {
    if (l == s2.size()) return Perm::identity(g.degree);
    int delta = tgt[l];
    if (!c.in_orbit(static_cast<int>(l), delta)) return std::nullopt;
    Perm u = c.transversal(static_cast<int>(l), delta);
    Perm uinv = u.inverse();
    for (size_t j = l + 1; j < tgt.size(); ++j) tgt[j] = uinv.img[tgt[j]];
    auto rest = go(l + 1, std::move(tgt));
    if (!rest) return std::nullopt;
    return *rest * u;
  };
  return go(0, d2);
}

std::vector<Perm> reduce_generators(int degree, const std::vector<Perm>& gens) {
  std::vector<Perm> kept;
  StabChain c = StabChain::build(degree, {});
  for (const Perm& g : gens) {
    if (g.is_identity() || c.contains(g)) continue;
    kept.push_back(g);
    c = StabChain::build(degree, kept);
  }
  return kept;
}

}  // namespace extiso
