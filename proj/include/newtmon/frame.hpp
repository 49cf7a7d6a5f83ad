#pragma once

#include "newtmon/linalg.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace newtmon {

// An affine lattice frame: base point plus a basis of the saturated lattice
// Z^n  intersect  span_Q(directions).  Coordinates of any lattice point of the
// affine span are integers.
struct AffineLatticeFrame {
  IntVec base;
  IntMatrix basis;  // rows, each in Z^n
  int dim = 0;
  int ambient = 0;

  IntVec from_frame(const IntVec& c) const {
    IntVec v = base;
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < ambient; ++j) v[j] += c[i] * basis[i][j];
    return v;
  }

  // Frame coordinates of an ambient point; nullopt when the point is outside
  // the affine span.  Lattice points of the span always get integer coords.
  std::optional<IntVec> to_frame(const IntVec& v) const {
    auto q = solve_combination(basis, vec_sub(v, base));
    if (!q) return std::nullopt;
    IntVec c(dim);
    for (int i = 0; i < dim; ++i) {
      if (denominator((*q)[i]) != 1)
        throw std::logic_error("lattice frame: non-integral coordinate for a lattice point");
      c[i] = numerator((*q)[i]);
    }
    return c;
  }

  std::optional<RatVec> to_frame_rat(const RatVec& x) const {
    // Solve sum c_i basis_i = x - base over Q.
    size_t n = ambient;
    RatMatrix a(n, RatVec(dim + 1));
    for (size_t i = 0; i < n; ++i) {
      for (int j = 0; j < dim; ++j) a[i][j] = Rat(basis[j][i]);
      a[i][dim] = x[i] - Rat(base[i]);
    }
    std::vector<int> pivots = row_echelon(a);
    RatVec c(dim, Rat(0));
    size_t r = 0;
    for (int p : pivots) {
      if (p == dim) return std::nullopt;
      c[p] = a[r][dim];
      ++r;
    }
    return c;
  }
};

// Saturated frame of the affine span of `points` (plus optional directions).
// The basis is a lattice basis of Z^n  intersect  lin(points - points[0]);
// saturation is certified by the unit-elementary-divisor check.
inline AffineLatticeFrame lattice_frame(const std::vector<IntVec>& points,
                                        const std::vector<IntVec>& directions = {}) {
  if (points.empty()) throw std::invalid_argument("lattice_frame: no points");
  int n = static_cast<int>(points[0].size());
  AffineLatticeFrame f;
  f.ambient = n;
  f.base = points[0];
  IntMatrix dirs;
  for (size_t i = 1; i < points.size(); ++i) dirs.push_back(vec_sub(points[i], f.base));
  for (const auto& d : directions) dirs.push_back(d);
  // Saturation via double kernel: the integer kernel of the orthogonal
  // complement of span(dirs) is exactly Z^n cap span(dirs).
  IntMatrix ortho = kernel_basis(dirs, n);
  f.basis = integer_kernel(ortho, n);
  f.dim = static_cast<int>(f.basis.size());
  if (!rows_are_saturated_basis(f.basis))
    throw std::logic_error("lattice_frame: basis failed the saturation check");
  return f;
}

inline AffineLatticeFrame standard_frame(int n) {
  AffineLatticeFrame f;
  f.ambient = n;
  f.dim = n;
  f.base = zero_vector(n);
  for (int i = 0; i < n; ++i) f.basis.push_back(unit_vector(n, i));
  return f;
}

// Frame of the linear subspace { x : <alpha, x> = 0 } (base at the origin).
inline AffineLatticeFrame hyperplane_frame(const IntVec& alpha) {
  int n = static_cast<int>(alpha.size());
  AffineLatticeFrame f;
  f.ambient = n;
  f.base = zero_vector(n);
  f.basis = integer_kernel(IntMatrix{alpha}, n);
  f.dim = static_cast<int>(f.basis.size());
  return f;
}

}  // namespace newtmon
