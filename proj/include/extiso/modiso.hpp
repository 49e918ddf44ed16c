#pragma once

#include <optional>

#include "extiso/finring.hpp"

namespace extiso {

// Isomorphism of modules over the same structured ring, returned as a
// coordinate matrix m: the element with coordinate column x maps to m * x,
// entries reduced mod the factor moduli of a0. nullopt means no module
// isomorphism exists.
//
// The hom group is computed as a lattice quotient; candidates are drawn
// first from single generators and signed sums of two generators, then by
// full enumeration. A full sweep over more than `cap` homs raises
// ResourceLimitError instead of guessing.
std::optional<MatI64> module_isomorphism(const StructuredRing& ring,
                                         const RModule& a, const RModule& a0,
                                         long long cap = 1000000);

}  // namespace extiso
