#include "mukai/matrix.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace mukai {

Rational parse_rational(std::string const& text) {
  auto const slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(text));
    Int const num(text.substr(0, slash));
    Int const den(text.substr(slash + 1));
    if (den == 0) throw PreconditionError("zero denominator in rational '" + text + "'");
    return Rational(num, den);
  } catch (std::runtime_error const&) {
    throw PreconditionError("malformed rational '" + text + "'");
  }
}

RationalMatrix to_rational(IntMatrix const& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

RationalVector to_rational(Vector const& v) { return RationalVector(v.begin(), v.end()); }

IntMatrix to_integral(RationalMatrix const& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!is_integral(m(i, j)))
        throw IntegralityError("non-integral entry " + to_string(m(i, j)));
      out(i, j) = to_int(m(i, j));
    }
  return out;
}

Vector to_integral(RationalVector const& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!is_integral(v[i])) throw IntegralityError("non-integral entry " + to_string(v[i]));
    out[i] = to_int(v[i]);
  }
  return out;
}

Int determinant(IntMatrix const& input) {
  if (!input.is_square()) throw PreconditionError("determinant of non-square matrix");
  std::size_t const n = input.rows();
  if (n == 0) return 1;
  IntMatrix a = input;
  Int prev = 1;
  int sgn = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sgn * a(n - 1, n - 1);
}

Rational determinant(RationalMatrix const& input) {
  if (!input.is_square()) throw PreconditionError("determinant of non-square matrix");
  std::size_t const n = input.rows();
  RationalMatrix a = input;
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational const f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

std::optional<RationalMatrix> inverse(RationalMatrix const& input) {
  if (!input.is_square()) throw PreconditionError("inverse of non-square matrix");
  std::size_t const n = input.rows();
  RationalMatrix a = input;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(k, j), a(p, j));
        std::swap(inv(k, j), inv(p, j));
      }
    }
    Rational const pivot = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= pivot;
      inv(k, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      Rational const f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

std::optional<RationalVector> solve(RationalMatrix const& a, RationalVector const& b) {
  auto inv = inverse(a);
  if (!inv) return std::nullopt;
  return *inv * b;
}

std::size_t rank(RationalMatrix const& input) {
  RationalMatrix a = input;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(p, j));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Rational const f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

Int dot(std::span<Int const> a, std::span<Int const> b) {
  if (a.size() != b.size()) throw PreconditionError("dot product dimension mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

Int content(Vector const& v) {
  Int g = 0;
  for (auto const& x : v) {
    if (x != 0) g = gcd(g, x);
    if (g == 1) break;
  }
  return g;
}

Vector add(Vector const& a, Vector const& b) {
  if (a.size() != b.size()) throw PreconditionError("vector dimension mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vector subtract(Vector const& a, Vector const& b) {
  if (a.size() != b.size()) throw PreconditionError("vector dimension mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vector scale(Int const& s, Vector const& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

Vector negate(Vector const& v) { return scale(Int(-1), v); }

bool is_zero(Vector const& v) {
  return std::all_of(v.begin(), v.end(), [](Int const& x) { return x == 0; });
}

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector e(n);
  e.at(i) = 1;
  return e;
}

}  // namespace mukai
