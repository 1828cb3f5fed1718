#include "mukai/elliptic.hpp"

namespace mukai {
namespace {

void check_pair(Vector const& v) {
  if (v.size() != 2) throw PreconditionError("elliptic classes have two coordinates");
}

void check_primitive(Vector const& v) {
  check_pair(v);
  if (content(v) != 1) throw PreconditionError("elliptic: v must be primitive and nonzero");
}

}  // namespace

Int even_pairing(Vector const& x, Vector const& y) {
  check_pair(x);
  check_pair(y);
  return y[0] * x[1] - x[0] * y[1];
}

Int odd_pairing(Vector const& x, Vector const& y) {
  check_pair(x);
  check_pair(y);
  return x[0] * y[1] - x[1] * y[0];
}

IntMatrix transvection_power(Vector const& v, Int const& k) {
  check_primitive(v);
  // columns: images of (1,0) and (0,1); ((1,0),v) = -v1, ((0,1),v) = v0
  IntMatrix m = IntMatrix::identity(2);
  Int const pe[2] = {-v[1], v[0]};
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t i = 0; i < 2; ++i) m(i, j) += k * pe[j] * v[i];
  return m;
}

IntMatrix transvection(Vector const& v) { return transvection_power(v, 1); }

bool is_sl2(IntMatrix const& m) { return m.rows() == 2 && m.cols() == 2 && determinant(m) == 1; }

EvenStabilizer::EvenStabilizer(Vector v) : v_(std::move(v)), generator_(transvection(v_)) {
  // (u, v) = v0 u1 - u0 v1 = 1
  auto const eg = extended_gcd(v_[0], -v_[1]);
  unit_ = {eg.y, eg.x};
  if (even_pairing(unit_, v_) != 1) throw VerificationError("EvenStabilizer: no dual unit");
}

std::optional<Int> EvenStabilizer::is_power(IntMatrix const& m) const {
  if (m.rows() != 2 || m.cols() != 2) throw PreconditionError("is_power: expected a 2x2 matrix");
  if (m * v_ != v_) throw PreconditionError("is_power: matrix does not fix v");
  // tau_v^k u = u + k v
  Vector const d = subtract(m * unit_, unit_);
  Int k;
  if (v_[0] != 0) {
    if (d[0] % v_[0] != 0) return std::nullopt;
    k = d[0] / v_[0];
  } else {
    if (d[1] % v_[1] != 0) return std::nullopt;
    k = d[1] / v_[1];
  }
  if (transvection_power(v_, k) != m) return std::nullopt;
  return k;
}

}  // namespace mukai
