#pragma once

// Internal helpers shared by the ring and module code. Not part of the
// public headers.

#include <optional>

#include "extiso/zlinalg.hpp"

namespace extiso::zutil {

// Repeated exact solves against one integer matrix.
struct LatticeSolver {
  zlinalg::SmithForm f;
  int rows, cols;
  explicit LatticeSolver(const IntMat& m)
      : f(zlinalg::smith_normal_form(m)),
        rows(static_cast<int>(m.rows())),
        cols(static_cast<int>(m.cols())) {}

  std::optional<IntVec> solve(const IntVec& b) const {
    IntVec ub = f.u * b;
    IntVec z = IntVec::Zero(cols);
    int r = f.rank();
    for (int i = 0; i < rows; ++i) {
      if (i < r) {
        if (ub[i] % f.s(i, i) != 0) return std::nullopt;
        z[i] = ub[i] / f.s(i, i);
      } else if (ub[i] != 0) {
        return std::nullopt;
      }
    }
    return f.v * z;
  }
};

// entry (i, j) taken mod row_moduli[i]
inline MatI64 reduce_rows(MatI64 m, const std::vector<long long>& row_moduli) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = mod_ll(m(i, j), row_moduli[i]);
  return m;
}

inline IntVec flatten(const MatI64& m) {
  IntVec v(m.rows() * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = to_int(m(i, j));
  return v;
}

}  // namespace extiso::zutil
