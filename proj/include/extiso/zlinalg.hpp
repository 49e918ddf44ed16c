#pragma once

#include <optional>
#include <vector>

#include "extiso/numeric.hpp"

namespace extiso::zlinalg {

// u * a * v == s with u, v unimodular; u_inv, v_inv are their inverses.
// Diagonal of s: d_1 | d_2 | ... | d_r, all positive, rest zero.
struct SmithForm {
  IntMat s, u, v, u_inv, v_inv;
  int rank() const;
};

SmithForm smith_normal_form(const IntMat& a);

Int determinant(IntMat a);  // Bareiss, exact

// Solution set of a*x = b: particular + integer span of nullspace columns.
struct LinearSolution {
  IntVec particular;
  IntMat nullspace;  // columns generate the solution lattice of a*x = 0
};

std::optional<LinearSolution> solve(const IntMat& a, const IntVec& b);

// Row-wise congruence system: (a*x)_i == b_i (mod row_moduli[i]).
// Moduli must be >= 1; modulus 1 makes a row vacuous.
std::optional<LinearSolution> solve_mod(const IntMat& a, const IntVec& b,
                                        const std::vector<Int>& row_moduli);

// Z^s modulo the column span of lattice_gens, as invariant factors > 1.
// project: quotient coordinates of a point (reduce mod factors afterwards);
// lift: a representative in Z^s of each cyclic factor's generator.
// Throws UnsupportedShapeError when the quotient is infinite.
struct QuotientStructure {
  std::vector<Int> factors;
  IntMat project;  // r x s
  IntMat lift;     // s x r
};

QuotientStructure quotient_structure(int s, const IntMat& lattice_gens);

}  // namespace extiso::zlinalg
