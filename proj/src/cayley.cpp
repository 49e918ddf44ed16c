#include "extiso/cayley.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace extiso {

int GroupTable::order_of(int x) const {
  int ord = 1, y = x;
  while (y != identity) {
    y = mul(y, x);
    ++ord;
  }
  return ord;
}

bool GroupTable::is_abelian() const {
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (mul(x, y) != mul(y, x)) return false;
  return true;
}

GroupTable GroupTable::from_table(int n, std::vector<int> tab) {
  if (n <= 0) throw TableError("group order must be positive");
  if (static_cast<int>(tab.size()) != n * n) throw TableError("table size is not n*n");
  for (int v : tab)
    if (v < 0 || v >= n) throw TableError("table entry out of range: " + std::to_string(v));
  GroupTable g;
  g.n = n;
  g.tab = std::move(tab);
  int id = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = g.mul(e, x) == x && g.mul(x, e) == x;
    if (ok) {
      id = e;
      break;
    }
  }
  if (id < 0) throw TableError("no identity element");
  g.identity = id;
  g.inverse.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      if (g.mul(x, y) == id && g.mul(y, x) == id) {
        g.inverse[x] = y;
        break;
      }
    if (g.inverse[x] < 0) throw TableError("no inverse for element " + std::to_string(x));
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z)))
          throw TableError("associativity fails at (" + std::to_string(x) + "," +
                           std::to_string(y) + "," + std::to_string(z) + ")");
  return g;
}

GroupTable read_gtab(std::istream& in) {
  int n;
  if (!(in >> n)) throw FormatError("gtab: missing order line");
  if (n <= 0) throw FormatError("gtab: order must be positive");
  std::vector<int> tab(static_cast<size_t>(n) * n);
  for (auto& v : tab) {
    if (!(in >> v)) throw FormatError("gtab: truncated table");
    if (v < 1 || v > n) throw FormatError("gtab: entry out of range: " + std::to_string(v));
    v -= 1;  // file is 1-based
  }
  return GroupTable::from_table(n, std::move(tab));
}

GroupTable read_gtab_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return read_gtab(in);
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  } catch (const TableError& e) {
    throw TableError(path + ": " + e.what());
  }
}

void write_gtab(std::ostream& out, const GroupTable& g) {
  out << g.n << "\n";
  for (int x = 0; x < g.n; ++x) {
    for (int y = 0; y < g.n; ++y) out << (y ? " " : "") << g.mul(x, y) + 1;
    out << "\n";
  }
}

bool Subgroup::contains(int x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

int Subgroup::position_of(int x) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), x);
  if (it == elements.end() || *it != x) return -1;
  return static_cast<int>(it - elements.begin());
}

bool Subgroup::is_abelian() const {
  for (size_t i = 0; i < elements.size(); ++i)
    for (size_t j = i + 1; j < elements.size(); ++j)
      if (parent->mul(elements[i], elements[j]) != parent->mul(elements[j], elements[i]))
        return false;
  return true;
}

Subgroup subgroup_generated(const GroupTable& g, std::vector<int> gens) {
  std::vector<char> in(g.n, 0);
  std::vector<int> queue;
  auto push = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      queue.push_back(x);
    }
  };
  push(g.identity);
  for (int x : gens) push(x);
  for (size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (int s : gens) {
      push(g.mul(x, s));
      push(g.mul(x, g.inv(s)));
    }
  }
  Subgroup out;
  out.parent = &g;
  for (int x = 0; x < g.n; ++x)
    if (in[x]) out.elements.push_back(x);
  return out;
}

Subgroup normal_closure(const GroupTable& g, const std::vector<int>& gens) {
  std::vector<int> closed = gens;
  std::set<int> seen(gens.begin(), gens.end());
  for (size_t head = 0; head < closed.size(); ++head)
    for (int c = 0; c < g.n; ++c) {
      int y = g.conj(closed[head], c);
      if (seen.insert(y).second) closed.push_back(y);
    }
  return subgroup_generated(g, closed);
}

Subgroup trivial_subgroup(const GroupTable& g) { return Subgroup{&g, {g.identity}}; }

Subgroup whole_group(const GroupTable& g) {
  Subgroup s;
  s.parent = &g;
  s.elements.resize(g.n);
  for (int i = 0; i < g.n; ++i) s.elements[i] = i;
  return s;
}

Subgroup derived_subgroup(const GroupTable& g) {
  std::vector<int> comms;
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y)
      comms.push_back(g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y)));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return subgroup_generated(g, comms);
}

bool is_normal(const GroupTable& g, const Subgroup& a) {
  for (int x : a.elements)
    for (int c = 0; c < g.n; ++c)
      if (!a.contains(g.conj(x, c))) return false;
  return true;
}

SubTable sub_table(const Subgroup& a) {
  SubTable st;
  st.to_parent = a.elements;
  st.from_parent.assign(a.parent->n, -1);
  const int m = a.size();
  for (int i = 0; i < m; ++i) st.from_parent[a.elements[i]] = i;
  std::vector<int> tab(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int p = a.parent->mul(a.elements[i], a.elements[j]);
      int q = st.from_parent[p];
      if (q < 0) throw TableError("subset is not closed under multiplication");
      tab[i * m + j] = q;
    }
  st.table = GroupTable::from_table(m, std::move(tab));
  return st;
}

HomCheck check_hom(const GroupHom& h) {
  HomCheck out;
  const GroupTable& g = *h.source;
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y)
      if (h.images[g.mul(x, y)] != h.target->mul(h.images[x], h.images[y])) {
        out.witness = {x, y};
        return out;
      }
  out.is_hom = true;
  if (g.n == h.target->n) {
    std::vector<char> hit(g.n, 0);
    out.bijective = true;
    for (int x = 0; x < g.n; ++x) {
      if (hit[h.images[x]]) {
        out.bijective = false;
        break;
      }
      hit[h.images[x]] = 1;
    }
  }
  return out;
}

std::optional<std::vector<int>> hom_from_generator_images(const GroupTable& g,
                                                          const GroupTable& h,
                                                          const std::vector<int>& gens,
                                                          const std::vector<int>& images) {
  std::vector<int> img(g.n, -1);
  img[g.identity] = h.identity;
  std::vector<int> queue{g.identity};
  for (size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (size_t s = 0; s < gens.size(); ++s) {
      int y = g.mul(x, gens[s]);
      int iy = h.mul(img[x], images[s]);
      if (img[y] < 0) {
        img[y] = iy;
        queue.push_back(y);
      } else if (img[y] != iy) {
        return std::nullopt;
      }
    }
  }
  for (int x = 0; x < g.n; ++x)
    if (img[x] < 0) return std::nullopt;  // gens do not generate g
  // BFS consistency does not imply multiplicativity; verify in full.
  GroupHom hom{&g, &h, img};
  if (!check_hom(hom).is_hom) return std::nullopt;
  return img;
}

QuotientData quotient(const GroupTable& g, const Subgroup& a) {
  if (!is_normal(g, a)) throw UnsupportedShapeError("quotient by a non-normal subgroup");
  QuotientData q;
  q.coset_of.assign(g.n, -1);
  for (int x = 0; x < g.n; ++x) {
    if (q.coset_of[x] >= 0) continue;
    int c = static_cast<int>(q.reps.size());
    q.reps.push_back(x);  // least element first in ascending scan
    for (int h : a.elements) q.coset_of[g.mul(x, h)] = c;
  }
  const int m = static_cast<int>(q.reps.size());
  std::vector<int> tab(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) tab[i * m + j] = q.coset_of[g.mul(q.reps[i], q.reps[j])];
  q.group = std::make_shared<GroupTable>(GroupTable::from_table(m, std::move(tab)));
  return q;
}

std::vector<Subgroup> all_normal_subgroups(const GroupTable& g) {
  std::set<std::vector<int>> seen;
  std::vector<Subgroup> out;
  auto add = [&](Subgroup s) {
    if (seen.insert(s.elements).second) out.push_back(std::move(s));
  };
  add(trivial_subgroup(g));
  for (int x = 0; x < g.n; ++x) add(normal_closure(g, {x}));
  // join-closure: every normal subgroup is a join of single-element closures
  for (size_t i = 0; i < out.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      std::vector<int> un = out[i].elements;
      un.insert(un.end(), out[j].elements.begin(), out[j].elements.end());
      add(subgroup_generated(g, un));
    }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
    return a.elements < b.elements;
  });
  return out;
}

bool is_simple(const GroupTable& g) {
  if (g.n <= 1) return false;
  return all_normal_subgroups(g).size() == 2;
}

int evaluate_word(const Word& w, const GroupTable& g, const std::vector<int>& gens) {
  int x = g.identity;
  for (auto [idx, e] : w.letters) x = g.mul(x, e > 0 ? gens[idx] : g.inv(gens[idx]));
  return x;
}

std::optional<std::vector<int>> first_generating_tuple(const GroupTable& g, int m) {
  std::vector<int> tup(m, 0);
  for (;;) {
    if (subgroup_generated(g, tup).size() == g.n) return tup;
    int i = m - 1;
    while (i >= 0 && tup[i] == g.n - 1) tup[i--] = 0;
    if (i < 0) return std::nullopt;
    ++tup[i];
  }
}

int minimal_generating_size(const GroupTable& g) {
  for (int m = 0;; ++m)
    if (first_generating_tuple(g, m)) return m;
}

}  // namespace extiso
