#pragma once

#include <vector>

#include "extiso/cayley.hpp"
#include "extiso/extension.hpp"

namespace extiso {

// Normal A <= G with G/A cyclic, as kernels of the homomorphisms from the
// abelianization to one cyclic group of exponent order. G itself is included
// (trivial quotient), first in the list.
std::vector<Subgroup> cyclic_quotient_normals(const GroupTable& g);

// Normal A <= G whose quotient is simple, prime-order quotients included.
std::vector<Subgroup> simple_quotient_normals(const GroupTable& g);

enum class FactorKind { cyclic, simple };

// Chain G = N_0 |> N_1 |> ... |> N_k = subgroup with every factor cyclic or
// simple, the bottom abelian and normal in G. Intermediate levels are only
// normal in their predecessor.
struct NormalWitness {
  Subgroup subgroup;
  std::vector<Subgroup> tower;   // tower[0] is the whole group
  std::vector<FactorKind> kinds; // kinds[i] tags tower[i] / tower[i+1]
};

// All abelian normal subgroups admitting a depth-k witness, one witness per
// subgroup (first construction wins; cyclic tags preferred over simple for
// prime-order factors). Every witness is re-verified level by level.
std::vector<NormalWitness> tower_normals(const GroupTable& g, int k);

// Complete isomorphism set g -> g0 as an Aut(g)-coset, driven by the first
// depth-k witness of g. Throws UnsupportedShapeError when g has no witness.
// The quotient map search uses generating tuples of size 2k (the tower
// bound); min_gens switches to the minimal generating size instead.
IsomorphismCoset isomorphism_test(const GroupTable& g, const GroupTable& g0, int k,
                                  bool min_gens = false);

// Aut(g) assembled from the trivial-quotient-action subgroup and one
// representative per realizable (image subgroup, quotient map) pair.
StabChain automorphism_group(const GroupTable& g, int k, bool min_gens = false);

}  // namespace extiso
