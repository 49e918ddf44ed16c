#include "extiso/finfield.hpp"

#include <algorithm>

namespace extiso {

namespace poly {

P trim(P a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

int deg(const P& a) { return static_cast<int>(a.size()) - 1; }

P add(const P& a, const P& b, long long p) {
  P r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    long long v = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
    r[i] = mod_ll(v, p);
  }
  return trim(r);
}

P sub(const P& a, const P& b, long long p) {
  P r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    long long v = (i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0);
    r[i] = mod_ll(v, p);
  }
  return trim(r);
}

P mul(const P& a, const P& b, long long p) {
  if (a.empty() || b.empty()) return {};
  P r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = mod_ll(r[i + j] + a[i] * b[j], p);
  return trim(r);
}

P scale(const P& a, long long c, long long p) {
  P r = a;
  for (auto& v : r) v = mod_ll(v * c, p);
  return trim(r);
}

P monic(const P& a, long long p) {
  if (a.empty()) return a;
  return scale(a, extiso::pow_mod(a.back(), p - 2, p), p);
}

std::pair<P, P> divmod(const P& a, const P& b, long long p) {
  if (b.empty()) throw UnsupportedShapeError("polynomial division by zero");
  P rem = a, quot;
  long long lead_inv = extiso::pow_mod(b.back(), p - 2, p);
  while (deg(rem) >= deg(b)) {
    int shift = deg(rem) - deg(b);
    long long c = mod_ll(rem.back() * lead_inv, p);
    if (static_cast<int>(quot.size()) < shift + 1) quot.resize(shift + 1, 0);
    quot[shift] = c;
    for (size_t i = 0; i < b.size(); ++i)
      rem[i + shift] = mod_ll(rem[i + shift] - c * b[i], p);
    rem = trim(rem);
  }
  return {trim(quot), rem};
}

P gcd(P a, P b, long long p) {
  while (!b.empty()) {
    P r = divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

P deriv(const P& a, long long p) {
  P r;
  for (size_t i = 1; i < a.size(); ++i) r.push_back(mod_ll(a[i] * static_cast<long long>(i), p));
  return trim(r);
}

P pow_mod(P base, long long e, const P& mod, long long p) {
  P r{1};
  base = divmod(base, mod, p).second;
  while (e > 0) {
    if (e & 1) r = divmod(mul(r, base, p), mod, p).second;
    base = divmod(mul(base, base, p), mod, p).second;
    e >>= 1;
  }
  return r;
}

long long eval(const P& a, long long x, long long p) {
  long long r = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) r = mod_ll(r * x + *it, p);
  return r;
}

namespace {

// one monic irreducible factor of a squarefree, nonconstant u
P irreducible_factor_squarefree(P u, long long p) {
  P xq{0, 1};  // will hold x^(p^d) mod u
  for (int d = 1; 2 * d <= deg(u); ++d) {
    xq = pow_mod(xq, p, u, p);
    P g = gcd(sub(xq, P{0, 1}, p), u, p);
    if (deg(g) == 0) continue;
    // g collects every irreducible factor of degree d
    u = g;
    while (deg(u) > d) {
      // split via the Berlekamp subalgebra of u
      int m = deg(u);
      // rows of Q - I: image of x^{ip} - x^i mod u
      std::vector<P> rows(m);
      for (int i = 0; i < m; ++i) {
        P xi(static_cast<size_t>(i) + 1, 0);
        xi[i] = 1;
        rows[i] = sub(pow_mod(xi, p, u, p), xi, p);
      }
      // kernel vector independent of (1,0,...,0) gives a splitting element
      // gaussian elimination over F_p on the m x m matrix rows[i][j]
      std::vector<std::vector<long long>> mat(m, std::vector<long long>(m, 0));
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m && j <= deg(rows[i]); ++j) mat[i][j] = rows[i][j];
      // transpose so kernel vectors are coefficient vectors of polynomials
      std::vector<std::vector<long long>> a(m, std::vector<long long>(m));
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) a[j][i] = mat[i][j];
      std::vector<int> pivot_col(m, -1);
      int rank = 0;
      for (int col = 0; col < m && rank < m; ++col) {
        int pr = -1;
        for (int r = rank; r < m; ++r)
          if (a[r][col] != 0) {
            pr = r;
            break;
          }
        if (pr < 0) continue;
        std::swap(a[rank], a[pr]);
        long long inv = extiso::pow_mod(a[rank][col], p - 2, p);
        for (int j = 0; j < m; ++j) a[rank][j] = mod_ll(a[rank][j] * inv, p);
        for (int r = 0; r < m; ++r)
          if (r != rank && a[r][col] != 0) {
            long long c = a[r][col];
            for (int j = 0; j < m; ++j) a[r][j] = mod_ll(a[r][j] - c * a[rank][j], p);
          }
        pivot_col[rank] = col;
        ++rank;
      }
      P splitter;
      for (int col = 0; col < m && splitter.empty(); ++col) {
        bool is_pivot = false;
        for (int r = 0; r < rank; ++r) is_pivot = is_pivot || pivot_col[r] == col;
        if (is_pivot || col == 0) continue;  // col 0 is the constants direction
        P v(m, 0);
        v[col] = 1;
        for (int r = 0; r < rank; ++r) v[pivot_col[r]] = mod_ll(-a[r][col], p);
        splitter = trim(v);
      }
      if (splitter.empty())
        throw UnsupportedShapeError("berlekamp: no splitting element found");
      bool split_done = false;
      for (long long c = 0; c < p && !split_done; ++c) {
        P g2 = gcd(sub(splitter, P{c}, p), u, p);
        if (deg(g2) > 0 && deg(g2) < deg(u)) {
          u = g2;
          split_done = true;
        }
      }
      if (!split_done) throw UnsupportedShapeError("berlekamp: splitting failed");
    }
    return monic(u, p);
  }
  return monic(u, p);  // u itself is irreducible
}

P frobenius_root(const P& f, long long p) {
  // f(x) = g(x^p) with g's coefficients equal to f's (c^p = c in F_p)
  P g;
  for (size_t i = 0; i < f.size(); i += p) g.push_back(f[i]);
  return trim(g);
}

P one_irreducible_factor(P f, long long p) {
  for (;;) {
    P df = deriv(f, p);
    if (df.empty()) {
      f = frobenius_root(f, p);
      continue;
    }
    P g = gcd(f, df, p);
    P u = divmod(f, g, p).first;  // squarefree, nonconstant
    return irreducible_factor_squarefree(u, p);
  }
}

}  // namespace

std::vector<std::pair<P, int>> factor(const P& f_in, long long p) {
  P f = monic(trim(f_in), p);
  if (deg(f) < 1) return {};
  std::vector<std::pair<P, int>> out;
  while (deg(f) > 0) {
    P q = one_irreducible_factor(f, p);
    int mult = 0;
    for (;;) {
      auto [quot, rem] = divmod(f, q, p);
      if (!rem.empty()) break;
      f = quot;
      ++mult;
    }
    out.push_back({q, mult});
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_irreducible(const P& f, long long p) {
  if (deg(f) < 1) return false;
  auto fs = factor(f, p);
  return fs.size() == 1 && fs[0].second == 1 && deg(fs[0].first) == deg(f);
}

}  // namespace poly

long long FiniteFieldDesc::q() const {
  long long r = 1;
  for (int i = 0; i < f; ++i) r *= p;
  return r;
}

Fq::El Fq::one() const {
  El e(d.f, 0);
  e[0] = 1;
  return e;
}

Fq::El Fq::from_int(long long c) const {
  El e(d.f, 0);
  e[0] = mod_ll(c, d.p);
  return e;
}

bool Fq::is_zero(const El& a) const {
  for (long long v : a)
    if (v != 0) return false;
  return true;
}

Fq::El Fq::add(const El& a, const El& b) const {
  El r(d.f);
  for (int i = 0; i < d.f; ++i) r[i] = mod_ll(a[i] + b[i], d.p);
  return r;
}

Fq::El Fq::sub(const El& a, const El& b) const {
  El r(d.f);
  for (int i = 0; i < d.f; ++i) r[i] = mod_ll(a[i] - b[i], d.p);
  return r;
}

Fq::El Fq::neg(const El& a) const {
  El r(d.f);
  for (int i = 0; i < d.f; ++i) r[i] = mod_ll(-a[i], d.p);
  return r;
}

Fq::El Fq::mul(const El& a, const El& b) const {
  poly::P prod = poly::mul(poly::trim(a), poly::trim(b), d.p);
  poly::P rem = poly::divmod(prod, d.min_poly, d.p).second;
  rem.resize(d.f, 0);
  return rem;
}

Fq::El Fq::inv(const El& a) const {
  if (is_zero(a)) throw UnsupportedShapeError("field inverse of zero");
  // extended euclid in F_p[x]
  poly::P r0 = d.min_poly, r1 = poly::trim(a);
  poly::P s0{}, s1{1};
  while (!r1.empty()) {
    auto [q, r2] = poly::divmod(r0, r1, d.p);
    poly::P s2 = poly::sub(s0, poly::mul(q, s1, d.p), d.p);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 = gcd (a constant, since min_poly is irreducible)
  long long cinv = pow_mod(r0[0], d.p - 2, d.p);
  poly::P out = poly::scale(s0, cinv, d.p);
  out.resize(d.f, 0);
  return out;
}

Fq::El Fq::pow(El a, long long e) const {
  El r = one();
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

long long Fq::element_order(const El& a) const {
  if (is_zero(a)) throw UnsupportedShapeError("order of zero");
  long long ord = 1;
  El x = a;
  while (!(x == one())) {
    x = mul(x, a);
    ++ord;
  }
  return ord;
}

FiniteFieldDesc make_field(long long p, int f) {
  if (!is_prime_ll(p)) throw UnsupportedShapeError("field characteristic must be prime");
  if (f == 1) return FiniteFieldDesc{p, 1, {0, 1}};
  // odometer over lower coefficients of x^f + c_{f-1}x^{f-1} + ... + c_0
  std::vector<long long> c(f, 0);
  for (;;) {
    poly::P cand(c.begin(), c.end());
    cand.push_back(1);
    if (poly::is_irreducible(cand, p)) return FiniteFieldDesc{p, f, cand};
    int i = 0;
    while (i < f && c[i] == p - 1) c[i++] = 0;
    if (i == f) throw UnsupportedShapeError("no irreducible polynomial found");
    ++c[i];
  }
}

Fq::El field_unit_generator(const FiniteFieldDesc& d) {
  Fq k{d};
  const long long q = d.q();
  for (long long r = 1; r < q; ++r) {
    Fq::El e(d.f);
    long long x = r;
    for (int i = 0; i < d.f; ++i) {
      e[i] = x % d.p;
      x /= d.p;
    }
    if (k.element_order(e) == q - 1) return e;
  }
  throw UnsupportedShapeError("no multiplicative generator found");
}

FqMat fq_identity(int n, const Fq& k) {
  FqMat m(n, std::vector<Fq::El>(n, k.zero()));
  for (int i = 0; i < n; ++i) m[i][i] = k.one();
  return m;
}

FqMat fq_mat_mul(const FqMat& a, const FqMat& b, const Fq& k) {
  const int n = static_cast<int>(a.size());
  FqMat r(n, std::vector<Fq::El>(n, k.zero()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Fq::El acc = k.zero();
      for (int l = 0; l < n; ++l) acc = k.add(acc, k.mul(a[i][l], b[l][j]));
      r[i][j] = acc;
    }
  return r;
}

std::vector<FqMat> gl_generators(int n, const FiniteFieldDesc& d) {
  Fq k{d};
  std::vector<FqMat> gens;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int b = 0; b < d.f; ++b) {
        FqMat m = fq_identity(n, k);
        Fq::El alpha = k.zero();
        alpha[b] = 1;
        m[i][j] = alpha;
        gens.push_back(m);
      }
    }
  if (d.q() > 2) {
    FqMat m = fq_identity(n, k);
    m[0][0] = field_unit_generator(d);
    gens.push_back(m);
  }
  return gens;
}

}  // namespace extiso
