#pragma once

#include <optional>
#include <vector>

#include "extiso/abelian.hpp"
#include "extiso/cayley.hpp"
#include "extiso/permgrp.hpp"

namespace extiso {

// Presentation of a quotient group read off its Cayley table: one relator
// v_{h1} v_{h2} v_{h1 h2}^{-1} per ordered pair, plus a word expressing every
// element in the chosen generators.
struct Presentation {
  int k = 0;
  std::vector<Word> relators;  // |H|^2 entries, row-major over pairs
  std::vector<Word> word_for;  // element -> word evaluating to it
};

// gens are elements of q.group and must generate it (NotGeneratingError).
// reverse_scan grows the word table visiting generators in the opposite
// order; the alternative table is equally valid and exists to exercise
// independence of the word choice.
Presentation quotient_presentation(const QuotientData& q, const std::vector<int>& gens,
                                   bool reverse_scan = false);

// Relator words with syntactic duplicates collapsed (first occurrence kept),
// evaluated at gs in the parent group of a. A value outside a raises
// RelatorOutsideKernelError.
struct RelatorValues {
  std::vector<Word> words;
  std::vector<int> values;
};
RelatorValues relator_values(const Presentation& p, const std::vector<int>& gs,
                             const Subgroup& a);

// Coset of isomorphisms g -> g0 inducing a fixed quotient map: the chain
// generates the stabilizer (automorphisms of g fixing a setwise and the
// quotient pointwise) on g's elements; representative absent means the coset
// is empty.
struct IsomorphismCoset {
  StabChain stabilizer;
  std::optional<GroupHom> representative;
};

// The unique map sending v_h(gs) x to v_h(gs0) phi(x), decomposed along p's
// word table; nullopt when that map fails the full isomorphism check. phi
// maps positions in a.elements to elements of g0 and must send a onto a0 for
// the result to survive verification.
std::optional<GroupHom> assemble_isomorphism(const GroupTable& g, const GroupTable& g0,
                                             const Subgroup& a, const Subgroup& a0,
                                             const Presentation& p,
                                             const std::vector<int>& gs,
                                             const std::vector<int>& gs0,
                                             const std::vector<int>& phi);

// Isomorphism g -> g0 carrying a onto a0 with every gs[i] -> gs0[i], when one
// exists. Cosets of gs must generate g/a.
std::optional<GroupHom> isomorphism_with_prescribed_images(
    const GroupTable& g, const GroupTable& g0, const Subgroup& a, const Subgroup& a0,
    const std::vector<int>& gs, const std::vector<int>& gs0);

// All isomorphisms g -> g0 that map a onto a0 and induce psi on the
// quotients, as stabilizer + representative. psi is read through its images
// over the canonical quotient numbering (cosets ordered by least element);
// g/a must be generated by k elements.
IsomorphismCoset extend_quotient_isomorphism(const GroupTable& g, const GroupTable& g0,
                                             const Subgroup& a, const Subgroup& a0,
                                             const GroupHom& psi, int k);

// Automorphisms of g fixing a setwise, the quotient g/a pointwise, and every
// gs[i]; returned as a chain on g's elements. Cosets of gs must generate g/a.
StabChain stabilizer_with_fixed_generators(const GroupTable& g, const Subgroup& a,
                                           const std::vector<int>& gs);

// Automorphisms of g fixing a setwise and acting trivially on g/a.
StabChain aut0_generators(const GroupTable& g, const Subgroup& a);

}  // namespace extiso
