#pragma once

#include <array>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "extiso/numeric.hpp"

namespace extiso {

// Finite group as a full multiplication table, elements 0..n-1.
struct GroupTable {
  int n = 0;
  std::vector<int> tab;  // tab[x*n + y] = x*y
  int identity = 0;
  std::vector<int> inverse;

  int mul(int x, int y) const { return tab[x * n + y]; }
  int inv(int x) const { return inverse[x]; }
  int conj(int x, int g) const { return mul(mul(inv(g), x), g); }  // x^g
  int order_of(int x) const;
  bool is_abelian() const;

  // Validates closure, identity, inverses and associativity; failure messages
  // carry witnesses.
  static GroupTable from_table(int n, std::vector<int> tab);
};

GroupTable read_gtab(std::istream& in);
GroupTable read_gtab_file(const std::string& path);
void write_gtab(std::ostream& out, const GroupTable& g);

// Sorted element subset of a parent table, always containing the identity.
struct Subgroup {
  const GroupTable* parent = nullptr;
  std::vector<int> elements;  // ascending

  int size() const { return static_cast<int>(elements.size()); }
  bool contains(int x) const;
  int position_of(int x) const;  // index into elements, or -1
  bool is_abelian() const;
};

Subgroup subgroup_generated(const GroupTable& g, std::vector<int> gens);
Subgroup normal_closure(const GroupTable& g, const std::vector<int>& gens);
Subgroup trivial_subgroup(const GroupTable& g);
Subgroup whole_group(const GroupTable& g);
Subgroup derived_subgroup(const GroupTable& g);
bool is_normal(const GroupTable& g, const Subgroup& a);

// Standalone table of a subgroup; element i is to_parent[i].
struct SubTable {
  GroupTable table;
  std::vector<int> to_parent;
  std::vector<int> from_parent;  // parent element -> position, or -1
};
SubTable sub_table(const Subgroup& a);

struct GroupHom {
  const GroupTable* source = nullptr;
  const GroupTable* target = nullptr;
  std::vector<int> images;
  int operator()(int x) const { return images[x]; }
};

struct HomCheck {
  bool is_hom = false;
  bool bijective = false;
  std::array<int, 2> witness{-1, -1};  // multiplicativity failure pair
};
HomCheck check_hom(const GroupHom& h);

// Full image array determined by generator images, or nullopt when the
// asserted images are inconsistent or not bijective where required.
// gens must generate the source.
std::optional<std::vector<int>> hom_from_generator_images(const GroupTable& g,
                                                          const GroupTable& h,
                                                          const std::vector<int>& gens,
                                                          const std::vector<int>& images);

// Quotient by a normal subgroup. Cosets are numbered by their least element.
struct QuotientData {
  std::shared_ptr<GroupTable> group;
  std::vector<int> coset_of;  // parent element -> coset index
  std::vector<int> reps;      // coset index -> least element
};
QuotientData quotient(const GroupTable& g, const Subgroup& a);

std::vector<Subgroup> all_normal_subgroups(const GroupTable& g);
bool is_simple(const GroupTable& g);

// Words in k generators; letters are (generator index, +1/-1).
struct Word {
  std::vector<std::pair<int, int>> letters;
  bool operator==(const Word&) const = default;
};
int evaluate_word(const Word& w, const GroupTable& g, const std::vector<int>& gens);

std::optional<std::vector<int>> first_generating_tuple(const GroupTable& g, int m);
int minimal_generating_size(const GroupTable& g);

}  // namespace extiso
