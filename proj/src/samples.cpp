#include "extiso/samples.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace extiso::samples {

GroupTable cyclic(int n) {
  std::vector<int> tab(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) tab[x * n + y] = (x + y) % n;
  return GroupTable::from_table(n, std::move(tab));
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  const int n = a.n * b.n;
  std::vector<int> tab(static_cast<size_t>(n) * n);
  auto id = [&](int x, int y) { return x * b.n + y; };
  for (int x1 = 0; x1 < a.n; ++x1)
    for (int y1 = 0; y1 < b.n; ++y1)
      for (int x2 = 0; x2 < a.n; ++x2)
        for (int y2 = 0; y2 < b.n; ++y2)
          tab[id(x1, y1) * n + id(x2, y2)] = id(a.mul(x1, x2), b.mul(y1, y2));
  return GroupTable::from_table(n, std::move(tab));
}

GroupTable dihedral(int n) {
  const int m = 2 * n;
  std::vector<int> tab(static_cast<size_t>(m) * m);
  auto id = [&](int j, int i) { return j * n + i; };
  for (int a = 0; a < 2; ++a)
    for (int i = 0; i < n; ++i)
      for (int b = 0; b < 2; ++b)
        for (int j = 0; j < n; ++j) {
          // (s^a r^i)(s^b r^j) = s^{a+b} r^{i(-1)^b + j}
          int ii = (b ? (n - i) % n : i);
          tab[id(a, i) * m + id(b, j)] = id((a + b) % 2, (ii + j) % n);
        }
  return GroupTable::from_table(m, std::move(tab));
}

GroupTable dicyclic(int n) {
  const int m = 4 * n;
  // element e*2n + i is b^e a^i, 0 <= i < 2n, e in {0,1}
  auto id = [&](int e, int i) { return e * 2 * n + i; };
  std::vector<int> tab(static_cast<size_t>(m) * m);
  for (int e1 = 0; e1 < 2; ++e1)
    for (int i1 = 0; i1 < 2 * n; ++i1)
      for (int e2 = 0; e2 < 2; ++e2)
        for (int i2 = 0; i2 < 2 * n; ++i2) {
          // a^i b = b a^{-i}; b^2 = a^n
          int e = (e1 + e2) % 2;
          int i;
          if (e2 == 0) {
            i = (i1 + i2) % (2 * n);
          } else {
            i = ((2 * n - i1) % (2 * n) + i2) % (2 * n);  // b a^{i1} = a^{-i1} b
            if (e1 == 1) i = (i + n) % (2 * n);           // b^2 = a^n
          }
          tab[id(e1, i1) * m + id(e2, i2)] = id(e, i);
        }
  return GroupTable::from_table(m, std::move(tab));
}

namespace {

GroupTable from_two_relator_16(int twist) {
  // <r, s | r^8 = s^2 = e, s r s = r^twist>, element j*8+i = s^j r^i
  const int m = 16;
  auto id = [&](int j, int i) { return j * 8 + i; };
  std::vector<int> tab(static_cast<size_t>(m) * m);
  for (int a = 0; a < 2; ++a)
    for (int i = 0; i < 8; ++i)
      for (int b = 0; b < 2; ++b)
        for (int j = 0; j < 8; ++j) {
          int ii = (b ? (i * twist) % 8 : i);
          tab[id(a, i) * m + id(b, j)] = id((a + b) % 2, (ii + j) % 8);
        }
  return GroupTable::from_table(m, std::move(tab));
}

GroupTable perm_group_table(const std::vector<std::vector<int>>& gens, int degree) {
  // closure of generator permutations under composition
  std::vector<std::vector<int>> elems;
  std::map<std::vector<int>, int> index;
  std::vector<int> idp(degree);
  for (int i = 0; i < degree; ++i) idp[i] = i;
  elems.push_back(idp);
  index[idp] = 0;
  for (size_t head = 0; head < elems.size(); ++head)
    for (const auto& s : gens) {
      std::vector<int> prod(degree);
      for (int i = 0; i < degree; ++i) prod[i] = s[elems[head][i]];
      if (index.emplace(prod, elems.size()).second) elems.push_back(prod);
    }
  const int n = static_cast<int>(elems.size());
  std::vector<int> tab(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      std::vector<int> prod(degree);
      for (int i = 0; i < degree; ++i) prod[i] = elems[y][elems[x][i]];
      tab[x * n + y] = index.at(prod);
    }
  return GroupTable::from_table(n, std::move(tab));
}

}  // namespace

GroupTable symmetric4() { return perm_group_table({{1, 0, 2, 3}, {1, 2, 3, 0}}, 4); }

GroupTable alternating4() { return perm_group_table({{1, 2, 0, 3}, {0, 2, 3, 1}}, 4); }

GroupTable semidihedral16() { return from_two_relator_16(3); }

GroupTable modular16() { return from_two_relator_16(5); }

GroupTable abelian_of(const std::vector<int>& invariant_factors) {
  GroupTable g = cyclic(1);
  for (int f : invariant_factors) g = direct_product(g, cyclic(f));
  return g;
}

GroupTable relabel(const GroupTable& g, const std::vector<int>& sigma) {
  const int n = g.n;
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[sigma[i]] = i;
  std::vector<int> tab(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) tab[x * n + y] = sigma[g.mul(inv[x], inv[y])];
  return GroupTable::from_table(n, std::move(tab));
}

std::vector<int> mixing_permutation(int n, unsigned seed) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::mt19937 rng(seed);
  // explicit Fisher-Yates: std::shuffle is not reproducible across libraries
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(rng() % static_cast<unsigned>(i + 1));
    std::swap(p[i], p[j]);
  }
  return p;
}

std::vector<std::pair<std::string, GroupTable>> corpus() {
  std::vector<std::pair<std::string, GroupTable>> out;
  const std::vector<std::pair<std::string, std::vector<int>>> ab = {
      {"z1", {}},          {"z2", {2}},         {"z3", {3}},
      {"z4", {4}},         {"z2x2", {2, 2}},    {"z5", {5}},
      {"z6", {6}},         {"z7", {7}},         {"z8", {8}},
      {"z2x4", {2, 4}},    {"z2x2x2", {2, 2, 2}}, {"z9", {9}},
      {"z3x3", {3, 3}},    {"z10", {10}},       {"z11", {11}},
      {"z12", {12}},       {"z2x6", {2, 6}},    {"z13", {13}},
      {"z14", {14}},       {"z15", {15}},       {"z16", {16}},
      {"z2x8", {2, 8}},    {"z4x4", {4, 4}},    {"z2x2x4", {2, 2, 4}},
      {"z2x2x2x2", {2, 2, 2, 2}},
  };
  for (const auto& [name, fs] : ab) out.push_back({name, abelian_of(fs)});
  out.push_back({"s3", dihedral(3)});
  out.push_back({"d4", dihedral(4)});
  out.push_back({"q8", dicyclic(2)});
  out.push_back({"d5", dihedral(5)});
  out.push_back({"d6", dihedral(6)});
  out.push_back({"dic3", dicyclic(3)});
  out.push_back({"a4", alternating4()});
  out.push_back({"d7", dihedral(7)});
  out.push_back({"d8", dihedral(8)});
  out.push_back({"q16", dicyclic(4)});
  out.push_back({"sd16", semidihedral16()});
  out.push_back({"m16", modular16()});
  // relabeled copies keep the pair sweep honest
  out.push_back({"d4_mixed", relabel(dihedral(4), mixing_permutation(8, 101))});
  out.push_back({"q8_mixed", relabel(dicyclic(2), mixing_permutation(8, 202))});
  out.push_back({"z2x4_mixed", relabel(abelian_of({2, 4}), mixing_permutation(8, 303))});
  out.push_back({"z12_mixed", relabel(abelian_of({12}), mixing_permutation(12, 404))});
  out.push_back({"a4_mixed", relabel(alternating4(), mixing_permutation(12, 505))});
  return out;
}

}  // namespace extiso::samples
