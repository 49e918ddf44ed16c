#include "extiso/zlinalg.hpp"

namespace extiso::zlinalg {

namespace {

struct Worker {
  IntMat s, u, v, u_inv, v_inv;

  explicit Worker(const IntMat& a)
      : s(a),
        u(IntMat::Identity(a.rows(), a.rows())),
        v(IntMat::Identity(a.cols(), a.cols())),
        u_inv(IntMat::Identity(a.rows(), a.rows())),
        v_inv(IntMat::Identity(a.cols(), a.cols())) {}

  void swap_rows(int i, int j) {
    if (i == j) return;
    s.row(i).swap(s.row(j));
    u.row(i).swap(u.row(j));
    u_inv.col(i).swap(u_inv.col(j));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    s.col(i).swap(s.col(j));
    v.col(i).swap(v.col(j));
    v_inv.row(i).swap(v_inv.row(j));
  }
  // row i -= q * row j
  void row_sub(int i, int j, const Int& q) {
    if (q == 0) return;
    s.row(i) -= q * s.row(j);
    u.row(i) -= q * u.row(j);
    v_inv_noop();
    u_inv.col(j) += q * u_inv.col(i);
  }
  // col i -= q * col j
  void col_sub(int i, int j, const Int& q) {
    if (q == 0) return;
    s.col(i) -= q * s.col(j);
    v.col(i) -= q * v.col(j);
    v_inv.row(j) += q * v_inv.row(i);
  }
  // row i += row j (used to pull non-divisible entries into the pivot row)
  void row_add(int i, int j) {
    s.row(i) += s.row(j);
    u.row(i) += u.row(j);
    u_inv.col(j) -= u_inv.col(i);
  }
  void negate_row(int i) {
    s.row(i) = -s.row(i);
    u.row(i) = -u.row(i);
    u_inv.col(i) = -u_inv.col(i);
  }
  void v_inv_noop() {}
};

}  // namespace

int SmithForm::rank() const {
  int r = 0;
  int m = static_cast<int>(std::min(s.rows(), s.cols()));
  while (r < m && s(r, r) != 0) ++r;
  return r;
}

SmithForm smith_normal_form(const IntMat& a) {
  Worker w(a);
  const int m = static_cast<int>(a.rows()), n = static_cast<int>(a.cols());
  const int steps = std::min(m, n);
  for (int t = 0; t < steps; ++t) {
    for (;;) {
      // least |entry| pivot in the trailing block; ties by row, then column
      int pi = -1, pj = -1;
      Int best = 0;
      for (int i = t; i < m; ++i)
        for (int j = t; j < n; ++j) {
          if (w.s(i, j) == 0) continue;
          Int mag = abs(w.s(i, j));
          if (pi < 0 || mag < best) {
            best = mag;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) {
        t = steps;  // trailing block is zero; done
        break;
      }
      w.swap_rows(t, pi);
      w.swap_cols(t, pj);
      const Int p = w.s(t, t);
      bool clean = true;
      for (int i = t + 1; i < m; ++i) {
        if (w.s(i, t) == 0) continue;
        w.row_sub(i, t, round_div(w.s(i, t), p));
        if (w.s(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        if (w.s(t, j) == 0) continue;
        w.col_sub(j, t, round_div(w.s(t, j), p));
        if (w.s(t, j) != 0) clean = false;
      }
      if (!clean) continue;  // smaller remainders exist; re-pick pivot
      // pivot must divide the whole trailing block
      int bi = -1, bj = -1;
      for (int i = t + 1; i < m && bi < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (w.s(i, j) % p != 0) {
            bi = i;
            bj = j;
            break;
          }
      if (bi >= 0) {
        w.row_add(t, bi);
        continue;
      }
      if (w.s(t, t) < 0) w.negate_row(t);
      break;
    }
    if (t >= steps) break;
  }
  return SmithForm{w.s, w.u, w.v, w.u_inv, w.v_inv};
}

Int determinant(IntMat a) {
  const int n = static_cast<int>(a.rows());
  if (n != a.cols()) throw UnsupportedShapeError("determinant of non-square matrix");
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      a.row(k).swap(a.row(piv));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int num = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        a(i, j) = num / prev;  // exact (Bareiss)
      }
    for (int i = k + 1; i < n; ++i) a(i, k) = 0;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::optional<LinearSolution> solve(const IntMat& a, const IntVec& b) {
  SmithForm f = smith_normal_form(a);
  const int m = static_cast<int>(a.rows()), n = static_cast<int>(a.cols());
  const int r = f.rank();
  IntVec c = f.u * b;
  IntVec y = IntVec::Zero(n);
  for (int i = 0; i < r; ++i) {
    if (c(i) % f.s(i, i) != 0) return std::nullopt;
    y(i) = c(i) / f.s(i, i);
  }
  for (int i = r; i < m; ++i)
    if (c(i) != 0) return std::nullopt;
  LinearSolution out;
  out.particular = f.v * y;
  out.nullspace = f.v.rightCols(n - r);
  return out;
}

std::optional<LinearSolution> solve_mod(const IntMat& a, const IntVec& b,
                                        const std::vector<Int>& row_moduli) {
  const int m = static_cast<int>(a.rows()), n = static_cast<int>(a.cols());
  if (static_cast<int>(row_moduli.size()) != m)
    throw UnsupportedShapeError("solve_mod: modulus count != row count");
  IntMat ext(m, n + m);
  ext.leftCols(n) = a;
  ext.rightCols(m).setZero();
  for (int i = 0; i < m; ++i) {
    if (row_moduli[i] < 1) throw UnsupportedShapeError("solve_mod: modulus must be >= 1");
    ext(i, n + i) = row_moduli[i];
  }
  auto sol = solve(ext, b);
  if (!sol) return std::nullopt;
  LinearSolution out;
  out.particular = sol->particular.head(n);
  // project slack components away, normalize and drop zero columns
  std::vector<IntVec> cols;
  for (int j = 0; j < sol->nullspace.cols(); ++j) {
    IntVec c = sol->nullspace.col(j).head(n);
    int lead = -1;
    for (int i = 0; i < n; ++i)
      if (c(i) != 0) {
        lead = i;
        break;
      }
    if (lead < 0) continue;
    if (c(lead) < 0) c = -c;
    cols.push_back(c);
  }
  out.nullspace.resize(n, cols.size());
  for (size_t j = 0; j < cols.size(); ++j) out.nullspace.col(j) = cols[j];
  return out;
}

QuotientStructure quotient_structure(int s, const IntMat& lattice_gens) {
  if (lattice_gens.rows() != s) throw UnsupportedShapeError("quotient_structure: bad generator height");
  SmithForm f = smith_normal_form(lattice_gens);
  const int r = f.rank();
  if (r < s) throw UnsupportedShapeError("quotient_structure: quotient is infinite");
  QuotientStructure q;
  std::vector<int> kept;
  for (int i = 0; i < s; ++i)
    if (f.s(i, i) > 1) kept.push_back(i);
  q.project.resize(kept.size(), s);
  q.lift.resize(s, kept.size());
  for (size_t k = 0; k < kept.size(); ++k) {
    q.factors.push_back(f.s(kept[k], kept[k]));
    q.project.row(k) = f.u.row(kept[k]);
    q.lift.col(k) = f.u_inv.col(kept[k]);
  }
  return q;
}

}  // namespace extiso::zlinalg
