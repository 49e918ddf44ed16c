#include "extiso/abelian.hpp"

#include <numeric>

#include "extiso/zlinalg.hpp"

namespace extiso {

long long AbelianDecomposition::size() const {
  long long s = 1;
  for (long long f : factors) s *= f;
  return s;
}

std::vector<long long> AbelianDecomposition::reduce(std::vector<long long> coords) const {
  for (int i = 0; i < t(); ++i) coords[i] = mod_ll(coords[i], factors[i]);
  return coords;
}

long long AbelianDecomposition::rank_of(const std::vector<long long>& coords) const {
  long long r = 0, w = 1;
  for (int i = 0; i < t(); ++i) {
    r += mod_ll(coords[i], factors[i]) * w;
    w *= factors[i];
  }
  return r;
}

int AbelianDecomposition::position_of_coords(const std::vector<long long>& coords) const {
  return position_of_rank[rank_of(coords)];
}

int AbelianDecomposition::position_of_element(int parent_element) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), parent_element);
  if (it == elements.end() || *it != parent_element) return -1;
  return static_cast<int>(it - elements.begin());
}

AbelianDecomposition decompose(const Subgroup& a) {
  if (!a.is_abelian()) throw UnsupportedShapeError("decompose: subgroup is not abelian");
  const GroupTable& g = *a.parent;
  const int n = a.size();

  // any generating set works; the relation lattice determines the factors
  std::vector<int> gens;
  {
    std::vector<char> span(g.n, 0);
    span[g.identity] = 1;
    int covered = 1;
    auto close = [&]() {
      std::vector<int> queue;
      for (int x : a.elements)
        if (span[x]) queue.push_back(x);
      for (size_t head = 0; head < queue.size(); ++head)
        for (int s : gens) {
          int y = g.mul(queue[head], s);
          if (!span[y]) {
            span[y] = 1;
            ++covered;
            queue.push_back(y);
          }
        }
    };
    for (int x : a.elements) {
      if (covered == n) break;
      if (span[x]) continue;
      gens.push_back(x);
      close();
    }
  }
  const int s = static_cast<int>(gens.size());

  // BFS word for every element, then Schreier relations give the kernel
  std::vector<std::vector<long long>> word(n);
  std::vector<int> order_bfs;
  {
    std::vector<char> seen(n, 0);
    int idpos = a.position_of(g.identity);
    word[idpos] = std::vector<long long>(s, 0);
    seen[idpos] = 1;
    order_bfs.push_back(idpos);
    for (size_t head = 0; head < order_bfs.size(); ++head) {
      int pos = order_bfs[head];
      for (int i = 0; i < s; ++i) {
        int ypos = a.position_of(g.mul(a.elements[pos], gens[i]));
        if (!seen[ypos]) {
          seen[ypos] = 1;
          word[ypos] = word[pos];
          word[ypos][i] += 1;
          order_bfs.push_back(ypos);
        }
      }
    }
  }
  std::vector<std::vector<long long>> rels;
  for (int pos = 0; pos < n; ++pos)
    for (int i = 0; i < s; ++i) {
      int ypos = a.position_of(g.mul(a.elements[pos], gens[i]));
      std::vector<long long> r = word[pos];
      r[i] += 1;
      for (int j = 0; j < s; ++j) r[j] -= word[ypos][j];
      bool nz = false;
      for (long long v : r) nz = nz || v != 0;
      if (nz) rels.push_back(std::move(r));
    }

  IntMat lat(s, rels.size());
  for (size_t c = 0; c < rels.size(); ++c)
    for (int r = 0; r < s; ++r) lat(r, c) = to_int(rels[c][r]);
  auto q = zlinalg::quotient_structure(s, lat);

  AbelianDecomposition dec;
  dec.parent = &g;
  dec.elements = a.elements;
  for (const Int& f : q.factors) dec.factors.push_back(to_ll(f));
  const int t = dec.t();
  dec.coords_of.resize(n);
  for (int pos = 0; pos < n; ++pos) {
    std::vector<long long> c(t, 0);
    for (int i = 0; i < t; ++i) {
      Int v = 0;
      for (int j = 0; j < s; ++j) v += q.project(i, j) * word[pos][j];
      c[i] = mod_ll(to_ll(v % to_int(dec.factors[i])), dec.factors[i]);
    }
    dec.coords_of[pos] = c;
  }
  dec.position_of_rank.assign(dec.size(), -1);
  for (int pos = 0; pos < n; ++pos) {
    long long r = dec.rank_of(dec.coords_of[pos]);
    if (dec.position_of_rank[r] != -1)
      throw UnsupportedShapeError("decompose: coordinate map is not injective");
    dec.position_of_rank[r] = pos;
  }
  for (int i = 0; i < t; ++i) {
    // evaluate the lift word to get a concrete generator per factor
    int x = g.identity;
    for (int j = 0; j < s; ++j) {
      Int e = q.lift(j, i);
      Int m = ((e % Int(g.order_of(gens[j]))) + g.order_of(gens[j])) % g.order_of(gens[j]);
      long long reps = to_ll(m);
      for (long long rpt = 0; rpt < reps; ++rpt) x = g.mul(x, gens[j]);
    }
    dec.generator_elements.push_back(x);
  }
  return dec;
}

AbelianDecomposition abstract_decomposition(std::vector<long long> factors) {
  AbelianDecomposition dec;
  dec.factors = std::move(factors);
  const long long n = dec.size();
  dec.coords_of.resize(n);
  dec.position_of_rank.resize(n);
  for (long long r = 0; r < n; ++r) {
    long long x = r;
    std::vector<long long> c(dec.t());
    for (int i = 0; i < dec.t(); ++i) {
      c[i] = x % dec.factors[i];
      x /= dec.factors[i];
    }
    dec.coords_of[r] = c;
    dec.position_of_rank[r] = static_cast<int>(r);
  }
  return dec;
}

std::vector<std::vector<long long>> all_homs_to_cyclic(const std::vector<long long>& factors,
                                                       long long e) {
  std::vector<long long> steps, counts;
  for (long long f : factors) {
    long long g = std::gcd(f, e);
    steps.push_back(e / g);
    counts.push_back(g);
  }
  std::vector<std::vector<long long>> out;
  std::vector<long long> pick(factors.size(), 0);
  for (;;) {
    std::vector<long long> images(factors.size());
    for (size_t i = 0; i < factors.size(); ++i) images[i] = pick[i] * steps[i] % std::max(e, 1LL);
    out.push_back(images);
    int i = static_cast<int>(factors.size()) - 1;
    while (i >= 0 && pick[i] == counts[i] - 1) pick[i--] = 0;
    if (i < 0) break;
    ++pick[i];
  }
  return out;
}

}  // namespace extiso
