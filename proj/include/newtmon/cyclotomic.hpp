#pragma once

#include "newtmon/numbers.hpp"

#include <map>
#include <string>

namespace newtmon {

// A formal product  prod_d (1 - t^d)^{e_d}  with integer exponents; the empty
// product is the constant 1.
struct CyclotomicProduct {
  std::map<Int, Int> factors;  // d -> e_d, no zero exponents stored

  void mul(const Int& d, const Int& e) {
    if (e == 0) return;
    auto it = factors.find(d);
    if (it == factors.end()) {
      factors[d] = e;
    } else {
      it->second += e;
      if (it->second == 0) factors.erase(it);
    }
  }

  CyclotomicProduct operator*(const CyclotomicProduct& o) const {
    CyclotomicProduct r = *this;
    for (const auto& [d, e] : o.factors) r.mul(d, e);
    return r;
  }

  bool operator==(const CyclotomicProduct& o) const { return factors == o.factors; }

  // Order of vanishing at a root of unity lambda != 1:  each factor 1 - t^d
  // has a simple zero at lambda exactly when ord(lambda) | d.
  Int order_at(const RootOfUnity& lambda) const {
    if (lambda.is_one()) {
      Int s = 0;
      for (const auto& [d, e] : factors) s += e;
      return s;
    }
    Int s = 0;
    for (const auto& [d, e] : factors)
      if (d % lambda.order() == 0) s += e;
    return s;
  }

  // Degree of the rational function, sum of d*e_d.
  Int degree() const {
    Int s = 0;
    for (const auto& [d, e] : factors) s += d * e;
    return s;
  }

  std::string str() const {
    if (factors.empty()) return "1";
    std::string s;
    for (const auto& [d, e] : factors) {
      s += "(1-t";
      if (d != 1) s += "^" + d.str();
      s += ")";
      if (e != 1) s += "^{" + e.str() + "}";
    }
    return s;
  }

  static CyclotomicProduct parse(const std::string& text);
};

inline CyclotomicProduct CyclotomicProduct::parse(const std::string& text) {
  CyclotomicProduct out;
  size_t pos = 0;
  auto skip_ws = [&] { while (pos < text.size() && isspace((unsigned char)text[pos])) ++pos; };
  auto expect = [&](char c) {
    if (pos >= text.size() || text[pos] != c)
      throw std::invalid_argument("cyclotomic parse error at " + std::to_string(pos));
    ++pos;
  };
  auto read_int = [&]() {
    skip_ws();
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && isdigit((unsigned char)text[pos])) ++pos;
    if (pos == start) throw std::invalid_argument("cyclotomic parse: expected integer");
    return Int(text.substr(start, pos - start));
  };
  skip_ws();
  if (text.substr(pos) == "1") return out;
  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size()) break;
    expect('(');
    expect('1');
    skip_ws();
    expect('-');
    skip_ws();
    expect('t');
    Int d = 1;
    if (pos < text.size() && text[pos] == '^') { ++pos; d = read_int(); }
    skip_ws();
    expect(')');
    Int e = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip_ws();
      expect('{');
      e = read_int();
      skip_ws();
      expect('}');
    }
    out.mul(d, e);
    skip_ws();
  }
  return out;
}

}  // namespace newtmon
