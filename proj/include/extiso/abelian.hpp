#pragma once

#include <vector>

#include "extiso/cayley.hpp"
#include "extiso/numeric.hpp"

namespace extiso {

// Invariant-factor coordinates for a finite abelian group. When built from a
// subgroup of a Cayley table the decomposition is linked back to concrete
// elements; abstract decompositions index elements by mixed-radix rank.
struct AbelianDecomposition {
  std::vector<long long> factors;  // ascending, each > 1, each divides the next

  const GroupTable* parent = nullptr;
  std::vector<int> elements;                       // sorted subgroup elements
  std::vector<std::vector<long long>> coords_of;   // position -> coordinates
  std::vector<int> position_of_rank;               // mixed-radix rank -> position
  std::vector<int> generator_elements;             // parent element per factor

  int t() const { return static_cast<int>(factors.size()); }
  long long size() const;
  std::vector<long long> reduce(std::vector<long long> coords) const;
  long long rank_of(const std::vector<long long>& coords) const;
  int position_of_coords(const std::vector<long long>& coords) const;
  int position_of_element(int parent_element) const;
};

// Throws UnsupportedShapeError when the subgroup is not abelian.
AbelianDecomposition decompose(const Subgroup& a);
AbelianDecomposition abstract_decomposition(std::vector<long long> factors);

// Images of the invariant-factor generators under every homomorphism to Z_e.
std::vector<std::vector<long long>> all_homs_to_cyclic(const std::vector<long long>& factors,
                                                       long long e);

}  // namespace extiso
