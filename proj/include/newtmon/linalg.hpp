#pragma once

#include "newtmon/vec.hpp"

#include <optional>
#include <vector>

namespace newtmon {

using RatMatrix = std::vector<RatVec>;  // row-major
using IntMatrix = std::vector<IntVec>;  // row-major

inline RatMatrix to_rat_matrix(const IntMatrix& m) {
  RatMatrix r;
  r.reserve(m.size());
  for (const auto& row : m) r.push_back(to_rat(row));
  return r;
}

// In-place fraction-based Gaussian elimination to row echelon form.
// Returns the pivot columns.
inline std::vector<int> row_echelon(RatMatrix& a) {
  std::vector<int> pivots;
  if (a.empty()) return pivots;
  size_t rows = a.size(), cols = a[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Rat inv = Rat(1) / a[r][c];
    for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

inline int rank_of(const IntMatrix& m) {
  if (m.empty()) return 0;
  RatMatrix a = to_rat_matrix(m);
  return static_cast<int>(row_echelon(a).size());
}

// Solve sum_i x_i * rows[i] = target over Q.  Returns one solution (free
// variables set to zero) or nullopt.
inline std::optional<RatVec> solve_combination(const IntMatrix& rows, const IntVec& target) {
  size_t k = rows.size();
  size_t n = target.size();
  // Transposed system: columns are the rows, augmented with target.
  RatMatrix a(n, RatVec(k + 1));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < k; ++j) a[i][j] = Rat(rows[j][i]);
    a[i][k] = Rat(target[i]);
  }
  std::vector<int> pivots = row_echelon(a);
  RatVec x(k, Rat(0));
  size_t r = 0;
  for (int c : pivots) {
    if (c == static_cast<int>(k)) return std::nullopt;  // inconsistent
    x[c] = a[r][k];
    ++r;
  }
  return x;
}

// Basis of { x in Q^n : a * x = 0 } for the row-major matrix a, denominators
// cleared so the basis vectors are primitive integer vectors.
inline IntMatrix kernel_basis(const IntMatrix& a, int n) {
  RatMatrix m = to_rat_matrix(a);
  if (m.empty()) m.push_back(RatVec(n, Rat(0)));
  std::vector<int> pivots = row_echelon(m);
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;
  IntMatrix basis;
  for (int fc = 0; fc < n; ++fc) {
    if (is_pivot[fc]) continue;
    RatVec v(n, Rat(0));
    v[fc] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][fc];
    Int den = 1;
    for (const Rat& q : v) den = lcm(den, denominator(q));
    IntVec iv(n);
    for (int i = 0; i < n; ++i) iv[i] = numerator(v[i] * Rat(den));
    basis.push_back(primitive(iv));
  }
  return basis;
}

// Column-style Hermite reduction of a (rows m x cols n), tracking a unimodular
// U (n x n) with  a_reduced = a * U.  Returns the number of pivot columns.
inline int column_hnf(IntMatrix& a, IntMatrix& u) {
  size_t rows = a.size();
  size_t cols = rows ? u.size() : 0;
  if (rows == 0) return 0;
  cols = a[0].size();
  auto col_combine = [&](size_t j1, size_t j2, const Int& p, const Int& q, const Int& r,
                         const Int& s) {
    // (col j1, col j2) <- (p*c1 + q*c2, r*c1 + s*c2)
    for (size_t i = 0; i < rows; ++i) {
      Int c1 = a[i][j1], c2 = a[i][j2];
      a[i][j1] = p * c1 + q * c2;
      a[i][j2] = r * c1 + s * c2;
    }
    for (size_t i = 0; i < u.size(); ++i) {
      Int c1 = u[i][j1], c2 = u[i][j2];
      u[i][j1] = p * c1 + q * c2;
      u[i][j2] = r * c1 + s * c2;
    }
  };
  auto col_negate = [&](size_t j) {
    for (size_t i = 0; i < rows; ++i) a[i][j] = -a[i][j];
    for (size_t i = 0; i < u.size(); ++i) u[i][j] = -u[i][j];
  };
  size_t piv = 0;
  for (size_t i = 0; i < rows && piv < cols; ++i) {
    for (size_t j = piv + 1; j < cols; ++j) {
      if (a[i][j] == 0) continue;
      if (a[i][piv] == 0) {
        col_combine(piv, j, 0, 1, 1, 0);  // swap
        continue;
      }
      // Extended gcd combine.
      Int x = a[i][piv], y = a[i][j];
      Int old_r = x, r = y, old_s = 1, s = 0, old_t = 0, t = 1;
      while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
      }
      // old_r = gcd = old_s*x + old_t*y
      col_combine(piv, j, old_s, old_t, -(y / old_r), x / old_r);
    }
    if (a[i][piv] != 0) {
      if (a[i][piv] < 0) col_negate(piv);
      ++piv;
    }
  }
  return static_cast<int>(piv);
}

// One rational solution of A z = b (free variables set to zero), or nullopt.
inline std::optional<RatVec> solve_linear_system(const RatMatrix& a, const RatVec& b) {
  size_t rows = a.size();
  size_t cols = rows ? a[0].size() : 0;
  RatMatrix aug(rows, RatVec(cols + 1));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols] = b[i];
  }
  std::vector<int> pivots = row_echelon(aug);
  RatVec z(cols, Rat(0));
  size_t r = 0;
  for (int c : pivots) {
    if (c == static_cast<int>(cols)) return std::nullopt;
    z[c] = aug[r][cols];
    ++r;
  }
  return z;
}

// Basis of the integer kernel { x in Z^n : a * x = 0 }.  Kernels of integer
// linear maps are saturated lattices, so this basis is saturated.
inline IntMatrix integer_kernel(IntMatrix a, int n) {
  if (a.empty()) a.push_back(IntVec(n, 0));
  IntMatrix u(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) u[i][i] = 1;
  int piv = column_hnf(a, u);
  IntMatrix basis;
  for (int j = piv; j < n; ++j) {
    IntVec col(n);
    for (int i = 0; i < n; ++i) col[i] = u[i][j];
    basis.push_back(col);
  }
  return basis;
}

// One integer solution x of  rows * x = target  (rows: k x n), or nullopt.
// Requires the row lattice of `rows` to be saturated for solvability whenever
// a rational solution exists; callers use it with saturated frame bases.
inline std::optional<IntVec> integer_solve(const IntMatrix& rows, const IntVec& target) {
  if (rows.empty()) {
    return is_zero(target) ? std::optional<IntVec>(IntVec{}) : std::nullopt;
  }
  size_t k = rows.size();
  size_t n = rows[0].size();
  IntMatrix a(k, IntVec(n));
  for (size_t i = 0; i < k; ++i) a[i] = rows[i];
  IntMatrix u(n, IntVec(n, 0));
  for (size_t i = 0; i < n; ++i) u[i][i] = 1;
  column_hnf(a, u);
  // a*u is in column echelon form; solve by forward substitution in the
  // reduced columns, then map back through u.
  IntVec y(n, 0);
  IntVec rem = target;
  for (size_t j = 0; j < n; ++j) {
    // first nonzero row of column j
    size_t i = 0;
    while (i < k && a[i][j] == 0) ++i;
    if (i == k) continue;
    if (rem[i] % a[i][j] != 0) return std::nullopt;
    Int c = rem[i] / a[i][j];
    y[j] = c;
    for (size_t t = 0; t < k; ++t) rem[t] -= c * a[t][j];
  }
  if (!is_zero(rem)) return std::nullopt;
  IntVec x(n, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) x[i] += u[i][j] * y[j];
  return x;
}

// Determinant of a square integer matrix via rational elimination.
inline Int int_det(IntMatrix m) {
  size_t n = m.size();
  RatMatrix a = to_rat_matrix(m);
  Rat det = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) { std::swap(a[p], a[c]); det = -det; }
    det *= a[c][c];
    Rat inv = Rat(1) / a[c][c];
    for (size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Rat f = a[i][c] * inv;
      for (size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return numerator(det);  // exact: integer matrix determinant
}

// gcd of all k x k minors equals 1  <=>  the rows form a saturated lattice
// basis (all elementary divisors are 1).
inline bool rows_are_saturated_basis(const IntMatrix& rows) {
  if (rows.empty()) return true;
  size_t k = rows.size(), n = rows[0].size();
  if (k > n) return false;
  std::vector<int> idx(k);
  for (size_t i = 0; i < k; ++i) idx[i] = static_cast<int>(i);
  Int g = 0;
  while (true) {
    IntMatrix sub(k, IntVec(k));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) sub[i][j] = rows[i][idx[j]];
    g = gcd(g, int_det(sub));
    if (g == 1) return true;
    // next combination
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && idx[i] == static_cast<int>(n - k + i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return g == 1;
}

}  // namespace newtmon
