#pragma once

#include <optional>

#include "mukai/matrix.hpp"

namespace mukai {

// Even part (r, d) = (rank, degree) and odd part in H^1 of an elliptic curve.
struct EllipticClass {
  Vector even = Vector(2);
  Vector odd = Vector(2);
};

// ((r',d'),(r'',d'')) -> r'' d' - r' d''
Int even_pairing(Vector const& x, Vector const& y);
// Standard symplectic form on H^1: x0 y1 - x1 y0.
Int odd_pairing(Vector const& x, Vector const& y);

// w -> w + (w,v) v for primitive v.
IntMatrix transvection(Vector const& v);
IntMatrix transvection_power(Vector const& v, Int const& k);

bool is_sl2(IntMatrix const& m);

class EvenStabilizer {
 public:
  explicit EvenStabilizer(Vector v);

  Vector const& v() const { return v_; }
  IntMatrix const& generator() const { return generator_; }

  // k with m = tau_v^k, or nullopt. Throws PreconditionError unless m is 2x2
  // and fixes v.
  std::optional<Int> is_power(IntMatrix const& m) const;

 private:
  Vector v_;
  IntMatrix generator_;
  Vector unit_;  // (unit_, v) = 1
};

}  // namespace mukai
