#include <algorithm>
#include <tuple>

#include "extiso/finring.hpp"
#include "fp_linalg.hpp"

namespace extiso {

namespace {

Coord unit_coord(int t, int c) {
  Coord e(t, 0);
  e[c] = 1;
  return e;
}

// echelonized subspace of F_p^n that remembers a basis
struct FpSpan {
  long long p = 2;
  int n = 0;
  fp::Mat rows;             // reduced echelon, leading entry 1
  std::vector<int> pivots;  // pivot column per row

  fp::Vec residue(fp::Vec v) const {
    for (size_t r = 0; r < rows.size(); ++r) {
      long long f = mod_ll(v[pivots[r]], p);
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) v[j] = mod_ll(v[j] - f * rows[r][j], p);
    }
    return v;
  }
  bool contains(const fp::Vec& v) const {
    fp::Vec r = residue(v);
    return std::all_of(r.begin(), r.end(), [](long long x) { return x == 0; });
  }
  bool add(const fp::Vec& v) {
    fp::Vec r = residue(v);
    int piv = -1;
    for (int j = 0; j < n; ++j)
      if (r[j] != 0) {
        piv = j;
        break;
      }
    if (piv < 0) return false;
    long long iv = fp::inv_mod(r[piv], p);
    for (int j = 0; j < n; ++j) r[j] = r[j] * iv % p;
    for (size_t rr = 0; rr < rows.size(); ++rr) {
      long long f = rows[rr][piv];
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) rows[rr][j] = mod_ll(rows[rr][j] - f * r[j], p);
    }
    rows.push_back(std::move(r));
    pivots.push_back(piv);
    return true;
  }
  int dim() const { return static_cast<int>(rows.size()); }
};

Coord pow_pos(const StructuredRing& r, Coord x, long long e) {
  // e >= 1
  Coord acc;
  bool have = false;
  while (e > 0) {
    if (e & 1) {
      acc = have ? r.mul(acc, x) : x;
      have = true;
    }
    e >>= 1;
    if (e > 0) x = r.mul(x, x);
  }
  return acc;
}

// minimal monic f with f(x) = 0, constant term acting on the identity e
poly::P min_poly_rel(const StructuredRing& r, const Coord& x, const Coord& e, long long p) {
  int n = r.t();
  std::vector<Coord> powers{e};
  FpSpan sp{p, n};
  sp.add(e);
  Coord cur = e;
  for (int d = 1; d <= n + 1; ++d) {
    cur = r.mul(cur, x);
    if (sp.contains(cur)) {
      // cur == sum a_j * powers[j]
      fp::Mat sys(n, fp::Vec(d));
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < n; ++k) sys[k][j] = powers[j][k];
      auto a = fp::solve(sys, cur, p);
      if (!a) throw TableError("minimal polynomial: dependency lost");
      poly::P f(d + 1, 0);
      f[d] = 1;
      for (int j = 0; j < d; ++j) f[j] = mod_ll(-(*a)[j], p);
      return f;
    }
    sp.add(cur);
    powers.push_back(cur);
  }
  throw TableError("minimal polynomial: no dependency found");
}

Coord eval_poly_at(const StructuredRing& r, const poly::P& f, const Coord& x, const Coord& e) {
  Coord acc = r.zero();
  for (int s = poly::deg(f); s >= 0; --s) acc = r.add(r.mul(acc, x), r.scale(f[s], e));
  return acc;
}

// u*a + v*b == gcd(a, b) (monic)
std::tuple<poly::P, poly::P, poly::P> poly_egcd(poly::P a, poly::P b, long long p) {
  poly::P u0{1}, v0{}, u1{}, v1{1};
  while (poly::deg(b) >= 0) {
    auto [q, rem] = poly::divmod(a, b, p);
    a = std::move(b);
    b = std::move(rem);
    poly::P nu = poly::sub(u0, poly::mul(q, u1, p), p);
    poly::P nv = poly::sub(v0, poly::mul(q, v1, p), p);
    u0 = std::move(u1);
    v0 = std::move(v1);
    u1 = std::move(nu);
    v1 = std::move(nv);
  }
  if (poly::deg(a) < 0) throw TableError("polynomial gcd of zero inputs");
  long long lead = a[poly::deg(a)];
  long long iv = fp::inv_mod(lead, p);
  return {poly::scale(a, iv, p), poly::scale(u0, iv, p), poly::scale(v0, iv, p)};
}

struct ComponentBuilder {
  const StructuredRing& r;
  long long p;
  int n;

  std::vector<Coord> corner_basis(const Coord& e) const {
    FpSpan sp{p, n};
    std::vector<Coord> basis;
    for (int j = 0; j < n; ++j) {
      Coord v = r.mul(r.mul(e, unit_coord(n, j)), e);
      if (sp.add(v)) basis.push_back(sp.rows.back());
    }
    return basis;
  }

  // smallest idempotent reachable below start whose corner is f-dimensional
  Coord shrink_to_primitive(Coord e, int f) const {
    for (;;) {
      std::vector<Coord> basis = corner_basis(e);
      int d = static_cast<int>(basis.size());
      if (d == f) return e;
      bool progressed = false;
      long long sweep = 1;
      for (int i = 0; i < d && sweep <= (1 << 20); ++i) sweep *= p;
      for (long long rank = 1; rank < sweep; ++rank) {
        Coord x = r.zero();
        long long rr = rank;
        for (int i = 0; i < d; ++i) {
          long long digit = rr % p;
          rr /= p;
          if (digit != 0) x = r.add(x, r.scale(digit, basis[i]));
        }
        poly::P mp = min_poly_rel(r, x, e, p);
        auto fac = poly::factor(mp, p);
        if (fac.size() == 1 && fac[0].second == 1) continue;  // x generates a field
        if (fac.size() >= 2) {
          // split off the first primary block
          poly::P f1{1};
          for (int s = 0; s < fac[0].second; ++s) f1 = poly::mul(f1, fac[0].first, p);
          poly::P f2 = poly::divmod(mp, f1, p).first;
          auto [g, u, v] = poly_egcd(f1, f2, p);
          if (poly::deg(g) != 0) throw TableError("primary blocks are not coprime");
          // (v*f2)(x) is 1 on the f1 block and 0 elsewhere
          poly::P w = poly::divmod(poly::mul(v, f2, p), mp, p).second;
          Coord enew = eval_poly_at(r, w, x, e);
          if (r.is_zero(enew) || enew == e) throw TableError("degenerate idempotent split");
          e = std::move(enew);
        } else {
          // single repeated factor: f1(x) is nilpotent, shrink via its annihilator
          Coord z = eval_poly_at(r, fac[0].first, x, e);
          fp::Mat m(n, fp::Vec(d));
          for (int i = 0; i < d; ++i) {
            Coord zi = r.mul(z, basis[i]);
            for (int k = 0; k < n; ++k) m[k][i] = zi[k];
          }
          fp::Mat ker = fp::kernel(m, p);
          std::vector<Coord> lbasis;
          for (const auto& a : ker) {
            Coord w = r.zero();
            for (int i = 0; i < d; ++i)
              if (a[i] != 0) w = r.add(w, r.scale(a[i], basis[i]));
            lbasis.push_back(std::move(w));
          }
          if (lbasis.empty()) throw TableError("nilpotent with trivial annihilator");
          int ll = static_cast<int>(lbasis.size());
          fp::Mat sys(n * ll, fp::Vec(ll));
          fp::Vec rhs(n * ll);
          for (int j = 0; j < ll; ++j)
            for (int i = 0; i < ll; ++i) {
              Coord prod = r.mul(lbasis[i], lbasis[j]);
              for (int k = 0; k < n; ++k) sys[j * n + k][i] = prod[k];
            }
          for (int j = 0; j < ll; ++j)
            for (int k = 0; k < n; ++k) rhs[j * n + k] = lbasis[j][k];
          auto a = fp::solve(sys, rhs, p);
          if (!a) throw TableError("annihilator has no left identity");
          Coord w = r.zero();
          for (int i = 0; i < ll; ++i)
            if ((*a)[i] != 0) w = r.add(w, r.scale((*a)[i], lbasis[i]));
          if (r.is_zero(w) || w == e) throw TableError("degenerate annihilator idempotent");
          e = std::move(w);
        }
        progressed = true;
        break;
      }
      if (!progressed) throw ResourceLimitError("no splitting element found in corner sweep");
    }
  }
};

}  // namespace

FqMat MatrixRingIso::to_matrix(const StructuredRing& rbar, const Coord& x) const {
  Fq fq{field};
  int k = n;
  int f = field.f;
  int t = rbar.t();
  FqMat m(k, std::vector<Fq::El>(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      Coord comp = rbar.mul(rbar.mul(units[0][a], x), units[b][0]);
      Fq::El c(f, 0);
      for (int s = 0; s < f; ++s) {
        long long acc = 0;
        for (int col = 0; col < t; ++col) acc += field_solver(s, col) * comp[col];
        c[s] = mod_ll(acc, field.p);
      }
      m[a][b] = std::move(c);
    }
  return m;
}

Coord MatrixRingIso::from_matrix(const StructuredRing& rbar, const FqMat& m) const {
  int k = n;
  int f = field.f;
  Coord x = rbar.zero();
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      Coord lift = rbar.zero();
      for (int s = 0; s < f; ++s)
        if (m[a][b][s] != 0) lift = rbar.add(lift, rbar.scale(m[a][b][s], field_power_basis[s]));
      x = rbar.add(x, rbar.mul(rbar.mul(units[a][0], lift), units[0][b]));
    }
  return x;
}

WedderburnDecomposition wedderburn(const StructuredRing& rbar) {
  WedderburnDecomposition out;
  int n = rbar.t();
  if (n == 0) return out;
  long long p = rbar.factors[0];
  if (!is_prime_ll(p)) throw TableError("expected an algebra over a prime field");
  for (long long m : rbar.factors)
    if (m != p) throw TableError("expected equal prime additive orders");
  {
    auto rad = jacobson_radical(rbar);
    if (!rad.empty()) throw NotSemisimpleError("algebra has a nonzero radical");
  }
  Coord one = rbar.reduce(rbar.one);

  // center: x with e_c x == x e_c for every generator
  fp::Mat sys;
  for (int c = 0; c < n; ++c)
    for (int k = 0; k < n; ++k) {
      fp::Vec row(n);
      for (int j = 0; j < n; ++j) row[j] = mod_ll(rbar.alpha[c][j][k] - rbar.alpha[j][c][k], p);
      sys.push_back(std::move(row));
    }
  fp::Mat zbasis = fp::kernel(sys, p);
  int zdim = static_cast<int>(zbasis.size());

  // subspace of the center fixed by x -> x^p; it is spanned by the
  // primitive central idempotents
  fp::Mat zmat(n, fp::Vec(zdim));
  for (int j = 0; j < zdim; ++j)
    for (int k = 0; k < n; ++k) zmat[k][j] = zbasis[j][k];
  fp::Mat frob_rows(zdim, fp::Vec(zdim));
  for (int j = 0; j < zdim; ++j) {
    Coord zp = pow_pos(rbar, zbasis[j], p);
    auto c = fp::solve(zmat, zp, p);
    if (!c) throw TableError("Frobenius left the center");
    for (int i = 0; i < zdim; ++i) frob_rows[i][j] = mod_ll((*c)[i] - (i == j ? 1 : 0), p);
  }
  fp::Mat fixed = fp::kernel(frob_rows, p);
  std::vector<Coord> fvecs;
  for (const auto& c : fixed) {
    Coord v = rbar.zero();
    for (int j = 0; j < zdim; ++j)
      if (c[j] != 0) v = rbar.add(v, rbar.scale(c[j], zbasis[j]));
    fvecs.push_back(std::move(v));
  }

  // split 1 into primitive central idempotents by eigenvalues
  std::vector<Coord> idems{one};
  for (const Coord& y : fvecs) {
    std::vector<Coord> next;
    for (const Coord& e : idems) {
      Coord z = rbar.mul(y, e);
      poly::P mp = min_poly_rel(rbar, z, e, p);
      std::vector<long long> roots;
      for (long long c = 0; c < p; ++c)
        if (poly::eval(mp, c, p) == 0) roots.push_back(c);
      if (static_cast<int>(roots.size()) != poly::deg(mp))
        throw TableError("center element failed to split over the prime field");
      if (roots.size() <= 1) {
        next.push_back(e);
        continue;
      }
      for (long long c : roots) {
        Coord ec = e;
        for (long long c2 : roots) {
          if (c2 == c) continue;
          Coord factor = rbar.sub(z, rbar.scale(c2, e));
          ec = rbar.scale(fp::inv_mod(mod_ll(c - c2, p), p), rbar.mul(ec, factor));
        }
        if (!rbar.is_zero(ec)) next.push_back(std::move(ec));
      }
    }
    idems = std::move(next);
  }

  ComponentBuilder cb{rbar, p, n};
  int dims_total = 0;
  for (const Coord& eps : idems) {
    // f = dimension of this component's center
    FpSpan zslice{p, n};
    for (const auto& zb : zbasis) zslice.add(rbar.mul(zb, eps));
    int f = zslice.dim();
    // component dimension k^2 f
    FpSpan cspan{p, n};
    for (int j = 0; j < n; ++j) cspan.add(rbar.mul(eps, unit_coord(n, j)));
    int sdim = cspan.dim();
    if (f <= 0 || sdim % f != 0) throw TableError("component dimension is not a multiple of f");
    int ksq = sdim / f;
    int k = 0;
    while ((k + 1) * (k + 1) <= ksq) ++k;
    if (k * k != ksq) throw TableError("component dimension is not k^2 f");
    dims_total += sdim;

    // orthogonal primitive idempotents summing to eps
    std::vector<Coord> prims;
    Coord rem = eps;
    for (int i = 0; i < k; ++i) {
      Coord e = (i + 1 == k) ? rem : cb.shrink_to_primitive(rem, f);
      prims.push_back(e);
      rem = rbar.sub(rem, e);
    }
    if (!rbar.is_zero(rem)) throw TableError("idempotent peel did not exhaust the component");

    MatrixRingIso iso;
    iso.n = k;
    iso.central_idempotent = eps;
    iso.field = make_field(p, f);

    // D = corner of the first primitive idempotent, a field of size p^f
    std::vector<Coord> dbasis = cb.corner_basis(prims[0]);
    if (static_cast<int>(dbasis.size()) != f) throw TableError("primitive corner is not f-dimensional");
    auto d_inverse = [&](const Coord& d) {
      fp::Mat dsys(n, fp::Vec(f));
      for (int i = 0; i < f; ++i) {
        Coord di = rbar.mul(d, dbasis[i]);
        for (int kk = 0; kk < n; ++kk) dsys[kk][i] = di[kk];
      }
      auto a = fp::solve(dsys, prims[0], p);
      if (!a) throw TableError("corner element is not invertible");
      Coord y = rbar.zero();
      for (int i = 0; i < f; ++i)
        if ((*a)[i] != 0) y = rbar.add(y, rbar.scale((*a)[i], dbasis[i]));
      return y;
    };

    // connecting elements through the first idempotent
    std::vector<Coord> ei0(k), e0i(k);
    ei0[0] = prims[0];
    e0i[0] = prims[0];
    for (int i = 1; i < k; ++i) {
      FpSpan pi0{p, n}, p0i{p, n};
      Coord v, w;
      bool got_v = false, got_w = false;
      for (int j = 0; j < n && !(got_v && got_w); ++j) {
        Coord cand = rbar.mul(rbar.mul(prims[i], unit_coord(n, j)), prims[0]);
        if (!got_v && pi0.add(cand)) {
          v = pi0.rows.back();
          got_v = true;
        }
        cand = rbar.mul(rbar.mul(prims[0], unit_coord(n, j)), prims[i]);
        if (!got_w && p0i.add(cand)) {
          w = p0i.rows.back();
          got_w = true;
        }
      }
      if (!got_v || !got_w) throw TableError("connecting spaces are empty");
      Coord d = rbar.mul(w, v);
      ei0[i] = v;
      e0i[i] = rbar.mul(d_inverse(d), w);
    }
    iso.units.assign(k, std::vector<Coord>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        iso.units[i][j] = i == 0 ? e0i[j] : (j == 0 ? ei0[i] : rbar.mul(ei0[i], e0i[j]));

    // canonical generator of D matching make_field's minimal polynomial
    iso.field_power_basis.assign(f, rbar.zero());
    iso.field_power_basis[0] = prims[0];
    if (f > 1) {
      Coord zeta;
      bool found = false;
      long long total = 1;
      for (int i = 0; i < f; ++i) total *= p;
      for (long long rank = 1; rank < total && !found; ++rank) {
        Coord cand = rbar.zero();
        long long rr = rank;
        for (int i = 0; i < f; ++i) {
          long long digit = rr % p;
          rr /= p;
          if (digit != 0) cand = rbar.add(cand, rbar.scale(digit, dbasis[i]));
        }
        if (min_poly_rel(rbar, cand, prims[0], p) == iso.field.min_poly) {
          zeta = std::move(cand);
          found = true;
        }
      }
      if (!found) throw TableError("no field generator with the canonical minimal polynomial");
      for (int s = 1; s < f; ++s) iso.field_power_basis[s] = rbar.mul(iso.field_power_basis[s - 1], zeta);
    }

    // left inverse of the power-basis coordinate matrix
    {
      FpSpan rowspan{p, f};
      std::vector<int> chosen;
      for (int row = 0; row < n && static_cast<int>(chosen.size()) < f; ++row) {
        fp::Vec v(f);
        for (int s = 0; s < f; ++s) v[s] = iso.field_power_basis[s][row];
        if (rowspan.add(v)) chosen.push_back(row);
      }
      if (static_cast<int>(chosen.size()) != f) throw TableError("power basis rows are dependent");
      fp::Mat aug(f, fp::Vec(2 * f, 0));
      for (int i = 0; i < f; ++i) {
        for (int s = 0; s < f; ++s) aug[i][s] = iso.field_power_basis[s][chosen[i]];
        aug[i][f + i] = 1;
      }
      fp::rref(aug, p);
      iso.field_solver = MatI64::Zero(f, n);
      for (int s = 0; s < f; ++s)
        for (int i = 0; i < f; ++i) iso.field_solver(s, chosen[i]) = aug[s][f + i];
    }
    out.components.push_back(std::move(iso));
  }
  if (dims_total != n) throw TableError("component dimensions do not fill the algebra");

  std::sort(out.components.begin(), out.components.end(),
            [](const MatrixRingIso& a, const MatrixRingIso& b) {
              if (a.n != b.n) return a.n < b.n;
              if (a.field.f != b.field.f) return a.field.f < b.field.f;
              return a.central_idempotent < b.central_idempotent;
            });
  return out;
}

}  // namespace extiso
