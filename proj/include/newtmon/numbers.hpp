#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace newtmon {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Diagnostic for a violated mathematical hypothesis (as opposed to a malformed
// input, which raises std::invalid_argument).
class hypothesis_error : public std::runtime_error {
 public:
  explicit hypothesis_error(const std::string& what) : std::runtime_error(what) {}
};

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline Int numerator(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rat& q) { return boost::multiprecision::denominator(q); }

inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

inline Int rat_floor(const Rat& q) { return floor_div(numerator(q), denominator(q)); }
inline Int rat_ceil(const Rat& q) { return ceil_div(numerator(q), denominator(q)); }

// Fractional part in [0,1).
inline Rat frac_part(const Rat& q) { return q - Rat(rat_floor(q)); }

inline int to_int(const Int& v) { return static_cast<int>(v); }

inline Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline Int binomial(const Int& n, int k) {
  if (k < 0) return 0;
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - (i - 1);
    r /= i;
  }
  return r;
}

// A root of unity exp(2*pi*i*k/d) stored as the reduced fraction k/d in Q/Z,
// with 0 <= k < d and gcd(k,d) = 1.  lambda = 1 is 0/1.
struct RootOfUnity {
  Int k = 0;
  Int d = 1;

  RootOfUnity() = default;
  RootOfUnity(Int num, Int den) {
    if (den == 0) throw std::invalid_argument("root of unity: zero denominator");
    if (den < 0) { den = -den; num = -num; }
    num %= den;
    if (num < 0) num += den;
    Int g = newtmon::gcd(num, den);
    k = num / g;
    d = den / g;
  }
  static RootOfUnity from_fraction(const Rat& q) {
    Rat f = frac_part(q);
    return RootOfUnity(numerator(f), denominator(f));
  }

  bool is_one() const { return k == 0; }
  // Multiplicative order of the root.
  const Int& order() const { return d; }
  RootOfUnity conjugate() const { return RootOfUnity(d - k, d); }
  Rat fraction() const { return Rat(k) / Rat(d); }

  bool operator==(const RootOfUnity& o) const { return k == o.k && d == o.d; }
  bool operator!=(const RootOfUnity& o) const { return !(*this == o); }
  bool operator<(const RootOfUnity& o) const {
    return k * o.d < o.k * d;  // order by angle
  }

  std::string str() const {
    return k.str() + "/" + d.str();
  }
};

inline std::string rat_str(const Rat& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace newtmon
