#pragma once

#include "newtmon/vec.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace newtmon {

// A sparse polynomial with nonnegative exponents and nonzero rational
// coefficients.  Every computed invariant downstream depends only on the
// support; coefficients are stored and echoed.
struct SparsePolynomial {
  int n = 0;
  std::map<IntVec, Rat> terms;

  SparsePolynomial() = default;
  SparsePolynomial(int nvars, std::map<IntVec, Rat> t) : n(nvars), terms(std::move(t)) {
    validate();
  }

  void validate() const {
    if (terms.empty()) throw std::invalid_argument("zero polynomial");
    for (const auto& [e, c] : terms) {
      if (static_cast<int>(e.size()) != n)
        throw std::invalid_argument("polynomial term has wrong arity");
      if (c == 0) throw std::invalid_argument("zero coefficient stored");
      for (const auto& x : e)
        if (x < 0) throw std::invalid_argument("negative exponent");
    }
  }

  static SparsePolynomial constant(int nvars, const Rat& c = Rat(1)) {
    return SparsePolynomial(nvars, {{zero_vector(nvars), c}});
  }

  std::vector<IntVec> support() const {
    std::vector<IntVec> s;
    s.reserve(terms.size());
    for (const auto& [e, c] : terms) s.push_back(e);
    return s;
  }

  bool is_constant() const {
    return terms.size() == 1 && is_zero(terms.begin()->first);
  }

  bool is_monomial() const { return terms.size() == 1; }

  // Restriction to the coordinate subspace R^S: keep terms supported inside S
  // and compress them to |S| coordinates.  Empty restriction gives nullopt.
  std::optional<SparsePolynomial> restrict(const std::vector<int>& S) const {
    std::map<IntVec, Rat> out;
    for (const auto& [e, c] : terms) {
      bool inside = true;
      for (int i = 0; i < n && inside; ++i) {
        if (e[i] == 0) continue;
        if (std::find(S.begin(), S.end(), i) == S.end()) inside = false;
      }
      if (!inside) continue;
      IntVec comp(S.size());
      for (size_t j = 0; j < S.size(); ++j) comp[j] = e[S[j]];
      out[comp] = c;
    }
    if (out.empty()) return std::nullopt;
    return SparsePolynomial(static_cast<int>(S.size()), out);
  }

  std::string str() const;
};

enum class Mode { local, infinity };

// Convenient: the Newton polyhedron touches every coordinate axis.
// Local mode accepts any axis point including the origin (a constant term lies
// on all axes); at infinity a strictly positive pure power is required per
// axis, so that the Newton polytope at infinity is full-dimensional.
inline bool is_convenient(const SparsePolynomial& g, Mode mode = Mode::local) {
  for (int i = 0; i < g.n; ++i) {
    bool hit = false;
    for (const auto& [e, c] : g.terms) {
      bool on_axis = true;
      for (int j = 0; j < g.n; ++j)
        if (j != i && e[j] != 0) { on_axis = false; break; }
      if (on_axis && (mode == Mode::local || e[i] > 0)) { hit = true; break; }
    }
    if (!hit) return false;
  }
  return true;
}

inline std::string SparsePolynomial::str() const {
  auto var_name = [&](int i) {
    static const char* xyzw[] = {"x", "y", "z", "w"};
    if (n <= 4) return std::string(xyzw[i]);
    return "x" + std::to_string(i + 1);
  };
  std::string s;
  for (const auto& [e, c] : terms) {
    Rat coeff = c;
    if (s.empty()) {
      if (coeff < 0) { s += "-"; coeff = -coeff; }
    } else {
      s += (coeff < 0) ? " - " : " + ";
      if (coeff < 0) coeff = -coeff;
    }
    std::string mono;
    for (int i = 0; i < n; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_name(i);
      if (e[i] != 1) mono += "^" + e[i].str();
    }
    if (mono.empty()) {
      s += rat_str(coeff);
    } else if (coeff == 1) {
      s += mono;
    } else {
      s += rat_str(coeff) + "*" + mono;
    }
  }
  return s;
}

}  // namespace newtmon
