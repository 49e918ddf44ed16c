#pragma once

// Dense linear algebra over F_p for the small dimensions the ring layer
// works with. Internal to the library.

#include <optional>
#include <vector>

#include "extiso/numeric.hpp"

namespace extiso::fp {

using Vec = std::vector<long long>;
using Mat = std::vector<Vec>;  // rows, entries in [0, p)

inline long long inv_mod(long long a, long long p) { return pow_mod(a, p - 2, p); }

// In-place reduced row echelon form; returns the pivot column of each
// surviving row. Zero rows are removed.
inline std::vector<int> rref(Mat& m, long long p) {
  std::vector<int> pivots;
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] % p != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(m[r], m[sel]);
    long long iv = inv_mod(mod_ll(m[r][c], p), p);
    for (int j = 0; j < cols; ++j) m[r][j] = mod_ll(m[r][j], p) * iv % p;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      long long f = mod_ll(m[i][c], p);
      if (f == 0) continue;
      for (int j = 0; j < cols; ++j) m[i][j] = mod_ll(m[i][j] - f * m[r][j], p);
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

inline int rank(Mat m, long long p) { return static_cast<int>(rref(m, p).size()); }

// Basis of {x : m*x == 0 over F_p}; x indexed by columns of m.
inline Mat kernel(Mat m, long long p) {
  int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  std::vector<int> pivots = rref(m, p);
  std::vector<int> pivot_of_col(cols, -1);
  for (int r = 0; r < static_cast<int>(pivots.size()); ++r) pivot_of_col[pivots[r]] = r;
  Mat basis;
  for (int c = 0; c < cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    Vec x(cols, 0);
    x[c] = 1;
    for (int r = 0; r < static_cast<int>(pivots.size()); ++r)
      x[pivots[r]] = mod_ll(-m[r][c], p);
    basis.push_back(std::move(x));
  }
  return basis;
}

inline std::optional<Vec> solve(const Mat& m, const Vec& b, long long p) {
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  Mat aug(rows, Vec(cols + 1));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) aug[i][j] = mod_ll(m[i][j], p);
    aug[i][cols] = mod_ll(b[i], p);
  }
  std::vector<int> pivots = rref(aug, p);
  Vec x(cols, 0);
  for (int r = 0; r < static_cast<int>(pivots.size()); ++r) {
    if (pivots[r] == cols) return std::nullopt;  // inconsistent row
    x[pivots[r]] = aug[r][cols];
  }
  return x;
}

// Do the rows of sub span the row vector v?
inline bool in_row_span(Mat sub, const Vec& v, long long p) {
  int r0 = rank(sub, p);
  sub.push_back(v);
  return rank(std::move(sub), p) == r0;
}

}  // namespace extiso::fp
