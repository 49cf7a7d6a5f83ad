#pragma once

#include "newtmon/numbers.hpp"

#include <map>
#include <string>
#include <utility>

namespace newtmon {

// Univariate integer polynomial in canonical sparse form.
struct UniPoly {
  std::map<int, Int> c;  // degree -> nonzero coefficient

  UniPoly() = default;
  static UniPoly constant(const Int& v) {
    UniPoly p;
    if (v != 0) p.c[0] = v;
    return p;
  }
  static UniPoly monomial(int deg, const Int& v) {
    UniPoly p;
    if (v != 0) p.c[deg] = v;
    return p;
  }

  bool is_zero() const { return c.empty(); }
  int degree() const { return c.empty() ? -1 : c.rbegin()->first; }
  Int coeff(int d) const {
    auto it = c.find(d);
    return it == c.end() ? Int(0) : it->second;
  }
  void add(int d, const Int& v) {
    if (v == 0) return;
    auto it = c.find(d);
    if (it == c.end()) {
      c[d] = v;
    } else {
      it->second += v;
      if (it->second == 0) c.erase(it);
    }
  }

  UniPoly operator+(const UniPoly& o) const {
    UniPoly r = *this;
    for (const auto& [d, v] : o.c) r.add(d, v);
    return r;
  }
  UniPoly operator-(const UniPoly& o) const {
    UniPoly r = *this;
    for (const auto& [d, v] : o.c) r.add(d, -v);
    return r;
  }
  UniPoly operator*(const UniPoly& o) const {
    UniPoly r;
    for (const auto& [d1, v1] : c)
      for (const auto& [d2, v2] : o.c) r.add(d1 + d2, v1 * v2);
    return r;
  }
  UniPoly scale(const Int& s) const {
    UniPoly r;
    for (const auto& [d, v] : c) r.add(d, s * v);
    return r;
  }
  bool operator==(const UniPoly& o) const { return c == o.c; }

  Int eval(const Int& x) const {
    Int r = 0;
    for (const auto& [d, v] : c) {
      Int p = 1;
      for (int i = 0; i < d; ++i) p *= x;
      r += v * p;
    }
    return r;
  }
  Int eval_one() const {
    Int r = 0;
    for (const auto& [d, v] : c) r += v;
    return r;
  }

  // t^span * p(1/t); requires deg p <= span.
  UniPoly reverse(int span) const {
    if (degree() > span) throw std::logic_error("UniPoly::reverse span too small");
    UniPoly r;
    for (const auto& [d, v] : c) r.add(span - d, v);
    return r;
  }

  bool is_palindromic(int span) const {
    if (degree() > span) return false;
    for (const auto& [d, v] : c)
      if (coeff(span - d) != v) return false;
    return true;
  }

  std::string str(const std::string& var = "t") const {
    if (c.empty()) return "0";
    std::string s;
    for (const auto& [d, v] : c) {
      Int a = v;
      if (s.empty()) {
        if (a < 0) { s += "-"; a = -a; }
      } else {
        s += (a < 0) ? " - " : " + ";
        if (a < 0) a = -a;
      }
      if (d == 0) {
        s += a.str();
      } else {
        if (a != 1) s += a.str() + "*";
        s += var;
        if (d != 1) s += "^" + std::to_string(d);
      }
    }
    return s;
  }
};

// (t - 1)^k
inline UniPoly t_minus_one_pow(int k) {
  UniPoly r = UniPoly::constant(1);
  UniPoly b;
  b.add(1, 1);
  b.add(0, -1);
  for (int i = 0; i < k; ++i) r = r * b;
  return r;
}

// (1 - t)^k
inline UniPoly one_minus_t_pow(int k) {
  UniPoly r = UniPoly::constant(1);
  UniPoly b;
  b.add(0, 1);
  b.add(1, -1);
  for (int i = 0; i < k; ++i) r = r * b;
  return r;
}

// Integer Laurent polynomial in two variables u, v.
struct LaurentBiPoly {
  std::map<std::pair<int, int>, Int> c;  // (deg_u, deg_v) -> coefficient

  bool is_zero() const { return c.empty(); }
  Int coeff(int p, int q) const {
    auto it = c.find({p, q});
    return it == c.end() ? Int(0) : it->second;
  }
  void add(int p, int q, const Int& v) {
    if (v == 0) return;
    auto key = std::make_pair(p, q);
    auto it = c.find(key);
    if (it == c.end()) {
      c[key] = v;
    } else {
      it->second += v;
      if (it->second == 0) c.erase(it);
    }
  }
  LaurentBiPoly operator+(const LaurentBiPoly& o) const {
    LaurentBiPoly r = *this;
    for (const auto& [k, v] : o.c) r.add(k.first, k.second, v);
    return r;
  }
  LaurentBiPoly operator*(const LaurentBiPoly& o) const {
    LaurentBiPoly r;
    for (const auto& [k1, v1] : c)
      for (const auto& [k2, v2] : o.c)
        r.add(k1.first + k2.first, k1.second + k2.second, v1 * v2);
    return r;
  }
  LaurentBiPoly scale(const Int& s) const {
    LaurentBiPoly r;
    for (const auto& [k, v] : c) r.add(k.first, k.second, s * v);
    return r;
  }
  bool operator==(const LaurentBiPoly& o) const { return c == o.c; }

  bool has_negative_degrees() const {
    for (const auto& [k, v] : c)
      if (k.first < 0 || k.second < 0) return true;
    return false;
  }

  // x^k -> u^k v^{-k}
  static LaurentBiPoly from_uni_u_over_v(const UniPoly& p) {
    LaurentBiPoly r;
    for (const auto& [d, v] : p.c) r.add(d, -d, v);
    return r;
  }
  // x^k -> (uv)^k
  static LaurentBiPoly from_uni_uv(const UniPoly& p) {
    LaurentBiPoly r;
    for (const auto& [d, v] : p.c) r.add(d, d, v);
    return r;
  }

  LaurentBiPoly shift(int du, int dv) const {
    LaurentBiPoly r;
    for (const auto& [k, v] : c) r.add(k.first + du, k.second + dv, v);
    return r;
  }

  // Exact division by uv; throws when a monomial misses a u or v factor.
  LaurentBiPoly divide_by_uv() const {
    for (const auto& [k, v] : c)
      if (k.first < 1 || k.second < 1)
        throw hypothesis_error("bivariate polynomial is not divisible by uv");
    return shift(-1, -1);
  }

  // Specialize v = u.
  UniPoly collapse_v_to_u() const {
    UniPoly r;
    for (const auto& [k, v] : c) {
      if (k.first + k.second < 0) throw std::logic_error("collapse to negative degree");
      r.add(k.first + k.second, v);
    }
    return r;
  }

  UniPoly specialize_v(const Int& value) const {
    UniPoly r;
    for (const auto& [k, v] : c) {
      if (k.second < 0) throw std::logic_error("specialize_v on negative degree");
      Int p = 1;
      for (int i = 0; i < k.second; ++i) p *= value;
      r.add(k.first, v * p);
    }
    return r;
  }

  std::string str() const {
    if (c.empty()) return "0";
    std::string s;
    for (const auto& [k, v] : c) {
      Int a = v;
      if (s.empty()) {
        if (a < 0) { s += "-"; a = -a; }
      } else {
        s += (a < 0) ? " - " : " + ";
        if (a < 0) a = -a;
      }
      std::string mono;
      if (k.first != 0) mono += "u" + (k.first != 1 ? "^" + std::to_string(k.first) : "");
      if (k.second != 0) {
        if (!mono.empty()) mono += "*";
        mono += "v" + (k.second != 1 ? "^" + std::to_string(k.second) : "");
      }
      if (mono.empty()) s += a.str();
      else if (a == 1) s += mono;
      else s += a.str() + "*" + mono;
    }
    return s;
  }
};

// Puiseux polynomial: finitely many terms c_alpha * t^alpha with exact
// rational exponents.
struct PuiseuxPolynomial {
  std::map<Rat, Int> terms;

  bool is_zero() const { return terms.empty(); }
  void add(const Rat& e, const Int& v) {
    if (v == 0) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
      terms[e] = v;
    } else {
      it->second += v;
      if (it->second == 0) terms.erase(it);
    }
  }
  PuiseuxPolynomial operator+(const PuiseuxPolynomial& o) const {
    PuiseuxPolynomial r = *this;
    for (const auto& [e, v] : o.terms) r.add(e, v);
    return r;
  }
  bool operator==(const PuiseuxPolynomial& o) const { return terms == o.terms; }

  Int coeff(const Rat& e) const {
    auto it = terms.find(e);
    return it == terms.end() ? Int(0) : it->second;
  }

  Int total_mass() const {
    Int s = 0;
    for (const auto& [e, v] : terms) s += v;
    return s;
  }

  // t^n * p(1/t)
  PuiseuxPolynomial reflect(const Rat& n) const {
    PuiseuxPolynomial r;
    for (const auto& [e, v] : terms) r.add(n - e, v);
    return r;
  }

  std::string str() const {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [e, v] : terms) {
      Int a = v;
      if (s.empty()) {
        if (a < 0) { s += "-"; a = -a; }
      } else {
        s += (a < 0) ? " - " : " + ";
        if (a < 0) a = -a;
      }
      if (a != 1) s += a.str() + "*";
      s += "t^{" + rat_str(e) + "}";
    }
    return s;
  }

  static PuiseuxPolynomial parse(const std::string& text);
};

inline PuiseuxPolynomial PuiseuxPolynomial::parse(const std::string& text) {
  PuiseuxPolynomial out;
  size_t pos = 0;
  auto skip_ws = [&] { while (pos < text.size() && isspace((unsigned char)text[pos])) ++pos; };
  auto read_int = [&]() {
    size_t start = pos;
    if (pos < text.size() && text[pos] == '-') ++pos;
    while (pos < text.size() && isdigit((unsigned char)text[pos])) ++pos;
    if (pos == start) throw std::invalid_argument("puiseux parse: expected integer");
    return Int(text.substr(start, pos - start));
  };
  skip_ws();
  if (text.substr(pos) == "0") return out;
  bool first = true;
  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size()) break;
    int sign = 1;
    if (text[pos] == '+') { ++pos; skip_ws(); }
    else if (text[pos] == '-') { sign = -1; ++pos; skip_ws(); }
    else if (!first) throw std::invalid_argument("puiseux parse: expected sign");
    Int coeff = 1;
    if (isdigit((unsigned char)text[pos])) {
      coeff = read_int();
      skip_ws();
      if (pos < text.size() && text[pos] == '*') { ++pos; skip_ws(); }
    }
    if (pos >= text.size() || text[pos] != 't')
      throw std::invalid_argument("puiseux parse: expected t");
    ++pos;
    if (pos + 1 >= text.size() || text[pos] != '^' || text[pos + 1] != '{')
      throw std::invalid_argument("puiseux parse: expected ^{...}");
    pos += 2;
    Int num = read_int();
    Int den = 1;
    if (pos < text.size() && text[pos] == '/') { ++pos; den = read_int(); }
    if (pos >= text.size() || text[pos] != '}')
      throw std::invalid_argument("puiseux parse: expected }");
    ++pos;
    out.add(Rat(num) / Rat(den), sign * coeff);
    first = false;
    skip_ws();
  }
  return out;
}

}  // namespace newtmon
