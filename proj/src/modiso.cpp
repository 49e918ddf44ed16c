#include "extiso/modiso.hpp"

#include <vector>

#include "extiso/zlinalg.hpp"
#include "zutil.hpp"

namespace extiso {

namespace {

constexpr long long kPointwiseLimit = 1 << 22;

// an additive map is injective iff its kernel is trivial; with equal factor
// lists injective means bijective
bool has_trivial_kernel(const MatI64& m, const std::vector<long long>& n) {
  int k = static_cast<int>(n.size());
  long long size = 1;
  for (long long f : n) size *= f;
  std::vector<long long> x(k);
  for (long long r = 1; r < size; ++r) {
    long long rr = r;
    for (int i = 0; i < k; ++i) {
      x[i] = rr % n[i];
      rr /= n[i];
    }
    bool zero = true;
    for (int i = 0; i < k && zero; ++i) {
      long long v = 0;
      for (int j = 0; j < k; ++j) v = (v + m(i, j) % n[i] * (x[j] % n[i])) % n[i];
      if (v != 0) zero = false;
    }
    if (zero) return false;
  }
  return true;
}

}  // namespace

std::optional<MatI64> module_isomorphism(const StructuredRing& ring,
                                         const RModule& a, const RModule& a0,
                                         long long cap) {
  if (static_cast<int>(a.actions.size()) != ring.t() ||
      static_cast<int>(a0.actions.size()) != ring.t())
    throw TableError("module_isomorphism: modules are not over the given ring");
  if (a.module.factors != a0.module.factors) return std::nullopt;
  const auto& n = a.module.factors;
  int k = a.module.t();
  if (k == 0) return MatI64(0, 0);
  if (a.module.size() > kPointwiseLimit)
    throw ResourceLimitError("module_isomorphism: module too large for pointwise checks");

  // unknowns: the k x k coordinate matrix of a candidate hom a -> a0
  int unknowns = k * k;
  auto idx = [&](int i, int j) { return i * k + j; };
  int nrows = unknowns * (1 + ring.t());
  IntMat sys = IntMat::Zero(nrows, unknowns);
  std::vector<Int> moduli(nrows);
  int row = 0;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      sys(row, idx(i, j)) = to_int(n[j]);
      moduli[row] = to_int(n[i]);
      ++row;
    }
  // intertwining with each ring generator: M * C_c == C0_c * M row by row
  for (int c = 0; c < ring.t(); ++c) {
    const MatI64& mc = a.actions[c];
    const MatI64& mc0 = a0.actions[c];
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        for (int l = 0; l < k; ++l) {
          sys(row, idx(i, l)) += mc(l, j);
          sys(row, idx(l, j)) -= mc0(i, l);
        }
        moduli[row] = to_int(n[i]);
        ++row;
      }
  }

  auto sol = zlinalg::solve_mod(sys, IntVec::Zero(nrows), moduli);
  if (!sol) throw TableError("module_isomorphism: homogeneous system reported unsolvable");
  IntMat lat = sol->nullspace;
  zutil::LatticeSolver solver(lat);

  // hom group = solution lattice / coordinate moduli lattice
  IntMat inner = IntMat::Zero(lat.cols(), unknowns);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      IntVec v = IntVec::Zero(unknowns);
      v[idx(i, j)] = to_int(n[i]);
      auto y = solver.solve(v);
      if (!y) throw TableError("module_isomorphism: modulus lattice escaped the solution lattice");
      inner.col(idx(i, j)) = *y;
    }
  auto q = zlinalg::quotient_structure(static_cast<int>(lat.cols()), inner);
  int t = static_cast<int>(q.factors.size());

  auto unflatten = [&](const IntVec& flat) {
    MatI64 m(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        Int v = flat[idx(i, j)] % n[i];
        if (v < 0) v += n[i];
        m(i, j) = to_ll(v);
      }
    return m;
  };
  std::vector<MatI64> gens(t);
  for (int c = 0; c < t; ++c) gens[c] = unflatten(lat * q.lift.col(c));

  auto accept = [&](const MatI64& raw) -> std::optional<MatI64> {
    MatI64 m = zutil::reduce_rows(raw, n);
    if (!has_trivial_kernel(m, n)) return std::nullopt;
    // the lattice rows already enforce intertwining; re-verify on every
    // element before handing the map out
    long long size = a.module.size();
    std::vector<long long> x(k), mx(k);
    for (long long r = 0; r < size; ++r) {
      long long rr = r;
      for (int i = 0; i < k; ++i) {
        x[i] = rr % n[i];
        rr /= n[i];
      }
      for (int i = 0; i < k; ++i) {
        long long v = 0;
        for (int j = 0; j < k; ++j) v = (v + m(i, j) * x[j]) % n[i];
        mx[i] = v;
      }
      for (int c = 0; c < ring.t(); ++c) {
        for (int i = 0; i < k; ++i) {
          long long lhs = 0, rhs = 0;
          for (int j = 0; j < k; ++j) {
            long long cx = 0;
            for (int l = 0; l < k; ++l) cx = (cx + a.actions[c](j, l) * x[l]) % n[j];
            lhs = (lhs + m(i, j) * cx) % n[i];
            rhs = (rhs + a0.actions[c](i, j) * mx[j]) % n[i];
          }
          if (lhs != rhs)
            throw TableError("module_isomorphism: accepted map failed the intertwining sweep");
        }
      }
    }
    return m;
  };

  // small combinations first: single generators and signed pairs
  for (int c = 0; c < t; ++c)
    for (int s : {1, -1})
      if (auto r = accept(s * gens[c])) return r;
  for (int c = 0; c < t; ++c)
    for (int d = c + 1; d < t; ++d)
      for (int sc : {1, -1})
        for (int sd : {1, -1})
          if (auto r = accept(sc * gens[c] + sd * gens[d])) return r;

  Int total = 1;
  for (int c = 0; c < t; ++c) total *= q.factors[c];
  if (total > cap)
    throw ResourceLimitError("module_isomorphism: hom group has " + total.get_str() +
                             " elements, over the enumeration cap");

  std::vector<long long> coef(t, 0), ord(t);
  for (int c = 0; c < t; ++c) ord[c] = to_ll(q.factors[c]);
  while (true) {
    MatI64 m = MatI64::Zero(k, k);
    for (int c = 0; c < t; ++c)
      if (coef[c] != 0) m += coef[c] * gens[c];
    if (auto r = accept(m)) return r;
    int pos = t - 1;
    while (pos >= 0 && ++coef[pos] == ord[pos]) {
      coef[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return std::nullopt;
}

}  // namespace extiso
