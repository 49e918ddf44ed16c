#pragma once

#include <vector>

#include "extiso/cayley.hpp"
#include "extiso/finring.hpp"

namespace extiso::oracle {

// Exhaustive reference computations, shipped so the structured algorithms can
// be confirmed independently on small inputs. Deliberately dumb; every routine
// throws SizeGuardError past its cap.

// Every isomorphism g -> g0 as a full image array, sorted lexicographically.
std::vector<std::vector<int>> all_isomorphisms(const GroupTable& g, const GroupTable& g0,
                                               int size_guard = 16);

long long automorphism_order(const GroupTable& g, int size_guard = 16);

// Automorphisms of g that fix every coset of the normal subgroup a.
std::vector<std::vector<int>> all_aut0(const GroupTable& g, const Subgroup& a,
                                       int size_guard = 16);

// Isomorphisms g -> g0 sending points[i] to images[i].
std::vector<std::vector<int>> isomorphisms_with_images(const GroupTable& g,
                                                       const GroupTable& g0,
                                                       const std::vector<int>& points,
                                                       const std::vector<int>& images,
                                                       int size_guard = 16);

// Units of r counted by trial inversion against every other element.
long long unit_count(const StructuredRing& r, long long size_guard = 4096);

// Module isomorphisms a -> a0 as coordinate matrices, found by sweeping every
// additive map and filtering for intertwining and bijectivity. The guard caps
// the number of candidate matrices.
std::vector<MatI64> all_module_isomorphisms(const RModule& a, const RModule& a0,
                                            long long size_guard = 1 << 20);

}  // namespace extiso::oracle
