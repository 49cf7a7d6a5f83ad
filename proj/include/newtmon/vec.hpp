#pragma once

#include "newtmon/numbers.hpp"

#include <algorithm>
#include <vector>

namespace newtmon {

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline IntVec vec_add(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline IntVec vec_sub(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline IntVec vec_scale(const Int& c, const IntVec& a) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat dot_qi(const RatVec& a, const IntVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
  return s;
}

inline Rat dot_qq(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero(const IntVec& a) {
  return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

inline Int content(const IntVec& a) {
  Int g = 0;
  for (const Int& x : a) g = gcd(g, x);
  return g;
}

// Divide out the gcd of the entries; the zero vector is returned unchanged.
inline IntVec primitive(IntVec a) {
  Int g = content(a);
  if (g > 1)
    for (Int& x : a) x /= g;
  return a;
}

inline IntVec unit_vector(int n, int i) {
  IntVec e(n, 0);
  e[i] = 1;
  return e;
}

inline IntVec zero_vector(int n) { return IntVec(n, 0); }

inline RatVec to_rat(const IntVec& a) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = Rat(a[i]);
  return r;
}

// x/m as a rational vector.
inline RatVec vec_div(const IntVec& a, const Int& m) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = Rat(a[i]) / Rat(m);
  return r;
}

inline bool lex_less(const IntVec& a, const IntVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline std::string vec_str(const IntVec& a) {
  std::string s = "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += a[i].str();
  }
  return s + ")";
}

}  // namespace newtmon
