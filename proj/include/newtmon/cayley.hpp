#pragma once

#include "newtmon/newton.hpp"

#include <vector>

namespace newtmon {

// One compact face gamma of Gamma_+(f) together with its Cayley data: the
// matched faces gamma(P), gamma(Q), the cell box = conv(gamma(P) u gamma(Q)),
// the lattice distance d between the two parallel face hyperplanes, the
// dimension s of the minimal coordinate subspace containing gamma, and
// m = s - dim gamma - 1.  The height of a lattice point of Aff(box) above the
// gamma(Q)-side hyperplane is <alpha, v - q0>.
struct CayleyCell {
  Polyhedron gamma, faceP, faceQ, box;
  Int d;
  int s = 0;
  int m = 0;
  IntVec alpha;  // ambient lift of the primitive height functional
  IntVec q0;     // base vertex on the gamma(Q) side

  Int height(const IntVec& v) const { return dot(alpha, vec_sub(v, q0)); }
};

inline std::vector<CayleyCell> cayley_cells(const MeroPair& pair) {
  if (pair.mode != Mode::local)
    throw std::invalid_argument("cayley_cells: defined for local mode");
  std::vector<CayleyCell> out;
  const Polyhedron& F = pair.gF;
  for (int i = 0; i < F.face_count(); ++i) {
    if (F.face(i).dim < 0 || !F.face(i).rays.empty()) continue;  // compact faces only
    CayleyCell c;
    c.gamma = F.face_polyhedron(i);
    auto [fp, fq] = face_decompose(F, c.gamma, pair.gP, pair.gQ);
    c.faceP = fp;
    c.faceQ = fq;
    std::vector<IntVec> pts = fp.vertices();
    pts.insert(pts.end(), fq.vertices().begin(), fq.vertices().end());
    c.box = convex_hull(pts);
    if (c.box.dim() != c.gamma.dim() + 1)
      throw hypothesis_error(
          "cayley_cells: dim box != dim gamma + 1; proper containment violated");
    // Height functional: primitive in the dual of Z^n cap L(box), vanishing
    // on the direction space of gamma, positive on the P side.
    c.q0 = fq.vertices()[0];
    AffineLatticeFrame fr = c.box.frame();
    IntMatrix gamma_dirs;  // directions of Aff(gamma) = dirs of faceP + dirs of faceQ
    auto push_dirs = [&](const Polyhedron& face) {
      for (size_t k = 1; k < face.vertices().size(); ++k)
        gamma_dirs.push_back(vec_sub(face.vertices()[k], face.vertices()[0]));
    };
    push_dirs(fp);
    push_dirs(fq);
    // Express the directions in frame coordinates and take the kernel functional.
    IntMatrix dirs_in_frame;
    AffineLatticeFrame lin = fr;
    lin.base = zero_vector(fr.ambient);
    for (const auto& d0 : gamma_dirs) {
      auto cc = lin.to_frame(d0);
      if (!cc) throw std::logic_error("cayley_cells: direction outside box span");
      dirs_in_frame.push_back(*cc);
    }
    if (dirs_in_frame.empty()) dirs_in_frame.push_back(zero_vector(fr.dim));
    IntMatrix kern = kernel_basis(dirs_in_frame, fr.dim);
    if (kern.size() != 1) throw std::logic_error("cayley_cells: height functional not unique");
    IntVec alpha_frame = kern[0];
    // Lift to an ambient integer functional agreeing on the frame lattice.
    auto lifted = integer_solve(fr.basis, alpha_frame);
    if (!lifted) throw std::logic_error("cayley_cells: height functional lift failed");
    c.alpha = *lifted;
    Int dP_side = dot(c.alpha, vec_sub(fp.vertices()[0], c.q0));
    if (dP_side < 0) {
      c.alpha = vec_scale(-1, c.alpha);
      dP_side = -dP_side;
    }
    c.d = dP_side;
    if (c.d <= 0) throw hypothesis_error("cayley_cells: non-positive lattice distance");
    // Minimal coordinate subspace containing gamma.
    std::vector<bool> used(pair.n, false);
    for (const auto& v : c.gamma.vertices())
      for (int j = 0; j < pair.n; ++j)
        if (v[j] != 0) used[j] = true;
    c.s = static_cast<int>(std::count(used.begin(), used.end(), true));
    c.m = c.s - c.gamma.dim() - 1;
    if (c.m < 0) throw hypothesis_error("cayley_cells: m_gamma < 0");
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace newtmon
