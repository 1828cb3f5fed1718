#pragma once

// Exact scalar types. Every computation in the library runs over these; there
// is no floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <string>
#include <utility>

namespace mukai {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int abs(Int const& x) { return x < 0 ? Int(-x) : x; }

inline Int gcd(Int a, Int b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    Int t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

struct ExtendedGcd {
  Int g;  // non-negative
  Int x;
  Int y;  // a*x + b*y == g
};

inline ExtendedGcd extended_gcd(Int const& a, Int const& b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

// Floor division and the matching non-negative remainder.
inline Int floor_div(Int const& a, Int const& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int mod(Int const& a, Int const& m) {
  Int r = a % m;
  if (r < 0) r += abs(m);
  return r;
}

inline bool is_integral(Rational const& q) {
  return boost::multiprecision::denominator(q) == 1;
}

inline Int to_int(Rational const& q) { return boost::multiprecision::numerator(q); }

inline std::string to_string(Int const& x) { return x.str(); }

inline std::string to_string(Rational const& q) {
  auto const den = boost::multiprecision::denominator(q);
  if (den == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + den.str();
}

Rational parse_rational(std::string const& text);

inline bool fits_int64(Int const& x) {
  return x >= std::numeric_limits<std::int64_t>::min() &&
         x <= std::numeric_limits<std::int64_t>::max();
}

inline int sign(Int const& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }
inline int sign(Rational const& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

}  // namespace mukai
