#pragma once

#include <string>
#include <utility>
#include <vector>

#include "extiso/cayley.hpp"

namespace extiso::samples {

GroupTable cyclic(int n);
GroupTable direct_product(const GroupTable& a, const GroupTable& b);
// order 2n; element j*n+i is s^j r^i with r^n = s^2 = e, s r s = r^-1
GroupTable dihedral(int n);
// order 4n; <a, b | a^{2n} = e, b^2 = a^n, b a b^-1 = a^-1>; dicyclic(2) = Q8
GroupTable dicyclic(int n);
GroupTable symmetric4();
GroupTable alternating4();
GroupTable semidihedral16();  // <r, s | r^8, s^2, s r s = r^3>
GroupTable modular16();       // <r, s | r^8, s^2, s r s = r^5>
GroupTable abelian_of(const std::vector<int>& invariant_factors);

// Conjugated copy: element x of g becomes sigma[x].
GroupTable relabel(const GroupTable& g, const std::vector<int>& sigma);
std::vector<int> mixing_permutation(int n, unsigned seed);  // deterministic

// The acceptance corpus: every abelian group of order <= 16 plus the small
// nonabelian families, each with a stable name.
std::vector<std::pair<std::string, GroupTable>> corpus();

}  // namespace extiso::samples
