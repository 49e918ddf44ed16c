#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "extiso/abelian.hpp"
#include "extiso/finfield.hpp"
#include "extiso/numeric.hpp"
#include "extiso/permgrp.hpp"

namespace extiso {

using Coord = std::vector<long long>;

// Finite ring presented by structure constants on a direct sum of cyclic
// additive groups Z_{m_1} + ... + Z_{m_t}. Multiplication convention
// throughout: mul(x, y) means "apply x, then y" wherever the ring acts.
struct StructuredRing {
  std::vector<long long> factors;        // additive orders, each > 1
  std::vector<std::vector<Coord>> alpha;  // alpha[i][j] = e_i * e_j
  Coord one;

  int t() const { return static_cast<int>(factors.size()); }
  long long size() const;
  Coord zero() const { return Coord(t(), 0); }
  Coord reduce(Coord x) const;
  Coord add(const Coord& x, const Coord& y) const;
  Coord sub(const Coord& x, const Coord& y) const;
  Coord neg(const Coord& x) const;
  Coord scale(long long c, const Coord& x) const;
  Coord mul(const Coord& x, const Coord& y) const;
  bool is_zero(const Coord& x) const;
  // matrix L with L * coords(y) == coords(mul(x, y)) mod factors
  MatI64 left_action_matrix(const Coord& x) const;
  long long rank_of(const Coord& x) const;  // mixed radix element index
  Coord element_of(long long rank) const;

  // Distributivity holds by construction; checks associativity on all
  // generator triples, unit laws, and structure-constant well-formedness.
  void validate() const;  // throws TableError
};

// File keys: invariant_factors, one, alpha; an optional beta block carries a
// module action (its own invariant_factors plus one matrix per ring
// generator). The ring readers ignore beta; the module readers return nullopt
// when it is absent.
StructuredRing ring_from_json_text(const std::string& text);
StructuredRing ring_from_file(const std::string& path);
std::string ring_to_json_text(const StructuredRing& r);

// Module over a StructuredRing: an abelian group with one action matrix per
// ring additive generator (a ring element acts by the matching integer
// combination of these matrices).
struct RModule {
  AbelianDecomposition module;
  std::vector<MatI64> actions;
};
void validate_module(const StructuredRing& r, const RModule& m);  // throws TableError

std::optional<RModule> module_from_json_text(const std::string& text);
std::optional<RModule> module_from_file(const std::string& path);
std::string ring_with_module_to_json_text(const StructuredRing& r, const RModule& m);

// Subring of End(A) with its embedding: generator c of the abstract ring acts
// on A-coordinates by gen_matrices[c].
struct EndRing {
  StructuredRing ring;
  std::vector<MatI64> gen_matrices;
  std::vector<long long> module_factors;       // row moduli of the matrices
  MatI64 action_matrix(const Coord& x) const;  // on module coordinates
};

// All endomorphisms of A (basis maps e_j -> (n_i/gcd) e_i).
EndRing end_ring(const AbelianDecomposition& a);
// Additive generating family f_{i,a}: e_i -> a over a with order(a) | n_i.
struct EndGenerator {
  int i;
  std::vector<long long> image;  // coordinates of a
  MatI64 matrix;
};
std::vector<EndGenerator> end_ring_generators(const AbelianDecomposition& a);

// {theta in End(A) : theta commutes with every actor matrix}.
EndRing commutant_ring(const AbelianDecomposition& a, const std::vector<MatI64>& actors);

// Restriction of R to the elements of additive order a power of p, one
// component per prime dividing |R|; embed() sends component elements back.
struct PrimeComponent {
  long long p = 0;
  StructuredRing ring;
  std::vector<int> kept;              // ambient factor index per component factor
  std::vector<long long> multiplier;  // ambient generator scale per kept factor
  std::vector<long long> ambient_factors;
  long long lambda = 0;  // scalar multiplication by lambda projects onto the component
  Coord embed(const Coord& x) const;
  Coord restrict(const Coord& ambient_x) const;
};
std::vector<PrimeComponent> prime_components(const StructuredRing& r);

// Quotient of the additive group by an ideal lattice, with induced ring
// structure (callers pass genuine two-sided ideals).
struct QuotientRing {
  StructuredRing ring;
  MatI64 project;  // quotient coords of an ambient element (mod factors)
  MatI64 lift;     // ambient representative per quotient generator
  Coord project_elem(const StructuredRing& ambient, const Coord& x) const;
  Coord lift_elem(const Coord& xbar) const;
};
QuotientRing quotient_ring(const StructuredRing& r, const std::vector<Coord>& ideal_gens);

// Jacobson radical of a ring of prime-power size p^s, returned as additive
// generators (includes the p*e_i span). Throws NotPrimePowerError otherwise.
std::vector<Coord> jacobson_radical(const StructuredRing& r);

// Generators of the group 1 + J; throws NotNilpotentError when the given
// lattice is not a nilpotent ideal. |<result>| == |J|.
std::vector<Coord> unipotent_generators(const StructuredRing& r,
                                        const std::vector<Coord>& radical_gens);

// Semisimple algebra over F_p decomposed into matrix rings over finite fields.
struct MatrixRingIso {
  FiniteFieldDesc field;
  int n = 0;
  Coord central_idempotent;                 // epsilon_i
  std::vector<std::vector<Coord>> units;    // E[i][j], matrix units
  std::vector<Coord> field_power_basis;     // 1, zeta, ..., zeta^{f-1} in E11 corner
  MatI64 field_solver;                      // F_p solve: corner coords -> power basis
  FqMat to_matrix(const StructuredRing& rbar, const Coord& x) const;
  Coord from_matrix(const StructuredRing& rbar, const FqMat& m) const;
};
struct WedderburnDecomposition {
  std::vector<MatrixRingIso> components;
};
// Pre: all additive factors equal a prime p and the radical vanishes.
WedderburnDecomposition wedderburn(const StructuredRing& rbar);  // NotSemisimpleError

struct UnitGroupData {
  std::vector<Coord> generators;
  mpz_class order;  // exact: |1+J| * product of |GL_n(q)| per component
  // Faithful action x -> mul(x, u) on all ring elements, materialized when
  // the ring is small enough to use as a permutation domain (<= 4096).
  std::optional<StabChain> chain;
};
UnitGroupData unit_group(const StructuredRing& r);

Perm right_multiplication_perm(const StructuredRing& r, const Coord& u);

}  // namespace extiso
