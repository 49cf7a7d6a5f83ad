#pragma once

#include "newtmon/sparse_poly.hpp"

#include <cctype>
#include <string>

namespace newtmon {

// Recursive-descent parser for the polynomial grammar: a sum of terms; each
// term is an optional rational coefficient (`p/q` or integer) with
// `*`-separated or juxtaposed variable powers.  Variables are x,y,z,w or
// x1..xn.  Whitespace is insignificant.
class PolynomialParser {
 public:
  PolynomialParser(const std::string& text, int n) : s_(text), n_(n) {}

  SparsePolynomial parse() {
    std::map<IntVec, Rat> terms;
    skip_ws();
    bool first = true;
    while (true) {
      int sign = 1;
      skip_ws();
      if (pos_ >= s_.size()) {
        if (first) fail("empty polynomial");
        break;
      }
      char c = s_[pos_];
      if (c == '+' || c == '-') {
        if (first) {
          if (c == '-') sign = -1;
          ++pos_;
        } else {
          sign = (c == '-') ? -1 : 1;
          ++pos_;
        }
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto [e, coeff] = parse_term();
      coeff *= sign;
      auto it = terms.find(e);
      if (it == terms.end()) {
        terms[e] = coeff;
      } else {
        it->second += coeff;
        if (it->second == 0) terms.erase(it);
      }
      first = false;
      skip_ws();
      if (pos_ >= s_.size()) break;
      if (s_[pos_] != '+' && s_[pos_] != '-') fail("unexpected character");
    }
    if (terms.empty()) fail("zero polynomial");
    return SparsePolynomial(n_, terms);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("polynomial syntax error at position " +
                                std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  Int parse_integer() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a number");
    return Int(s_.substr(start, pos_ - start));
  }

  // variable -> index, or -1 if not a variable at current position
  int parse_variable() {
    skip_ws();
    if (pos_ >= s_.size()) return -1;
    char c = s_[pos_];
    int idx = -1;
    size_t save = pos_;
    if (c == 'x' && pos_ + 1 < s_.size() &&
        std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
      ++pos_;
      Int k = parse_integer();
      if (k < 1) fail("variable index must be >= 1");
      idx = to_int(k) - 1;
    } else if (c == 'x' || c == 'y' || c == 'z' || c == 'w') {
      idx = (c == 'x') ? 0 : (c == 'y') ? 1 : (c == 'z') ? 2 : 3;
      ++pos_;
    } else {
      return -1;
    }
    if (idx >= n_) {
      pos_ = save;
      fail("unknown variable for the declared arity");
    }
    return idx;
  }

  std::pair<IntVec, Rat> parse_term() {
    Rat coeff = 1;
    IntVec e = zero_vector(n_);
    bool saw_factor = false;
    skip_ws();
    // optional leading coefficient
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      Int num = parse_integer();
      Int den = 1;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        den = parse_integer();
        if (den == 0) fail("zero denominator");
      }
      coeff = Rat(num) / Rat(den);
      saw_factor = true;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '*') { ++pos_; }
    }
    while (true) {
      skip_ws();
      int idx = parse_variable();
      if (idx < 0) break;
      Int exp = 1;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '-') fail("negative exponent");
        exp = parse_integer();
      }
      e[idx] += exp;
      saw_factor = true;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '*') { ++pos_; continue; }
      // juxtaposition: continue if the next char could start a variable
    }
    if (!saw_factor) fail("expected a term");
    return {e, coeff};
  }

  std::string s_;
  size_t pos_ = 0;
  int n_;
};

inline SparsePolynomial parse_polynomial(const std::string& text, int n) {
  return PolynomialParser(text, n).parse();
}

}  // namespace newtmon
