#include "extiso/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace extiso::oracle {

namespace {

void guard_size(long long n, long long cap, const char* what) {
  if (n > cap)
    throw SizeGuardError(std::string(what) + ": size " + std::to_string(n) +
                         " exceeds the oracle guard " + std::to_string(cap));
}

}  // namespace

std::vector<std::vector<int>> all_isomorphisms(const GroupTable& g, const GroupTable& g0,
                                               int size_guard) {
  guard_size(g.n, size_guard, "all_isomorphisms");
  guard_size(g0.n, size_guard, "all_isomorphisms");
  std::vector<std::vector<int>> out;
  if (g.n != g0.n) return out;

  int m = minimal_generating_size(g);
  auto gens = first_generating_tuple(g, m);
  if (!gens) throw TableError("minimal generating tuple not found");
  if (m == 0) {
    out.push_back({g0.identity});
    return out;
  }

  std::vector<std::vector<int>> pools(m);
  for (int i = 0; i < m; ++i) {
    int ord = g.order_of((*gens)[i]);
    for (int y = 0; y < g0.n; ++y)
      if (g0.order_of(y) == ord) pools[i].push_back(y);
    if (pools[i].empty()) return out;
  }

  std::vector<int> idx(m, 0);
  std::vector<char> hit(g0.n);
  for (;;) {
    std::vector<int> images(m);
    for (int i = 0; i < m; ++i) images[i] = pools[i][idx[i]];
    if (auto full = hom_from_generator_images(g, g0, *gens, images)) {
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
  std::sort(out.begin(), out.end());
  return out;
}

long long automorphism_order(const GroupTable& g, int size_guard) {
  return static_cast<long long>(all_isomorphisms(g, g, size_guard).size());
}

std::vector<std::vector<int>> all_aut0(const GroupTable& g, const Subgroup& a,
                                       int size_guard) {
  QuotientData q = quotient(g, a);
  std::vector<std::vector<int>> out;
  for (auto& im : all_isomorphisms(g, g, size_guard)) {
    bool ok = true;
    for (int x = 0; x < g.n && ok; ++x) ok = q.coset_of[im[x]] == q.coset_of[x];
    if (ok) out.push_back(std::move(im));
  }
  return out;
}

std::vector<std::vector<int>> isomorphisms_with_images(const GroupTable& g,
                                                       const GroupTable& g0,
                                                       const std::vector<int>& points,
                                                       const std::vector<int>& images,
                                                       int size_guard) {
  if (points.size() != images.size())
    throw TableError("prescribed point and image lists differ in length");
  std::vector<std::vector<int>> out;
  for (auto& im : all_isomorphisms(g, g0, size_guard)) {
    bool ok = true;
    for (size_t i = 0; i < points.size() && ok; ++i) ok = im[points[i]] == images[i];
    if (ok) out.push_back(std::move(im));
  }
  return out;
}

long long unit_count(const StructuredRing& r, long long size_guard) {
  long long total = r.size();
  guard_size(total, size_guard, "unit_count");
  std::vector<Coord> elems;
  elems.reserve(total);
  for (long long rank = 0; rank < total; ++rank) elems.push_back(r.element_of(rank));
  Coord one = r.reduce(r.one);
  long long count = 0;
  for (const Coord& x : elems)
    for (const Coord& y : elems)
      if (r.mul(x, y) == one && r.mul(y, x) == one) {
        ++count;
        break;
      }
  return count;
}

std::vector<MatI64> all_module_isomorphisms(const RModule& a, const RModule& a0,
                                            long long size_guard) {
  if (a.actions.size() != a0.actions.size())
    throw TableError("module action counts differ");
  std::vector<MatI64> out;
  if (a.module.size() != a0.module.size()) return out;
  const auto& n = a.module.factors;
  const auto& n0 = a0.module.factors;
  int k = static_cast<int>(n.size());
  int k0 = static_cast<int>(n0.size());
  if (k == 0) {
    out.push_back(MatI64(0, 0));
    return out;
  }

  // entry (i,j) ranges over multiples of n0_i / gcd(n0_i, n_j); anything else
  // is not a well-defined additive map
  MatI64 step(k0, k), cnt(k0, k);
  long long candidates = 1;
  for (int i = 0; i < k0; ++i)
    for (int j = 0; j < k; ++j) {
      long long gg = std::gcd(n0[i], n[j]);
      step(i, j) = n0[i] / gg;
      cnt(i, j) = gg;
      if (candidates > size_guard / gg)
        throw SizeGuardError("all_module_isomorphisms: candidate count exceeds the guard");
      candidates *= gg;
    }

  int mcount = static_cast<int>(a.actions.size());
  long long asize = a.module.size();
  auto accept = [&](const MatI64& m) {
    for (int c = 0; c < mcount; ++c) {
      MatI64 lhs = m * a.actions[c];
      MatI64 rhs = a0.actions[c] * m;
      for (int i = 0; i < k0; ++i)
        for (int j = 0; j < k; ++j)
          if (mod_ll(lhs(i, j) - rhs(i, j), n0[i]) != 0) return false;
    }
    for (long long rank = 1; rank < asize; ++rank) {
      long long rr = rank;
      std::vector<long long> x(k);
      for (int j = 0; j < k; ++j) {
        x[j] = rr % n[j];
        rr /= n[j];
      }
      bool zero = true;
      for (int i = 0; i < k0 && zero; ++i) {
        long long v = 0;
        for (int j = 0; j < k; ++j) v += m(i, j) * x[j];
        zero = mod_ll(v, n0[i]) == 0;
      }
      if (zero) return false;
    }
    return true;
  };

  std::vector<long long> digits(static_cast<size_t>(k0) * k, 0);
  for (;;) {
    MatI64 m(k0, k);
    for (int i = 0; i < k0; ++i)
      for (int j = 0; j < k; ++j) m(i, j) = digits[i * k + j] * step(i, j);
    if (accept(m)) out.push_back(std::move(m));
    int t = k0 * k - 1;
    while (t >= 0 && ++digits[t] == cnt(t / k, t % k)) digits[t--] = 0;
    if (t < 0) break;
  }
  return out;
}

}  // namespace extiso::oracle
