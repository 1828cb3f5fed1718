#pragma once

#include <cstdint>
#include <random>

#include "mukai/lattice.hpp"

namespace mukai {

// Seeded generator whose draws do not depend on the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return uniform(0, 1) == 1; }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// A small random vector y of an even lattice plus a completion inside one of
// its hyperbolic planes (e,f), avoided by y: x = y + e + t f with (x,x) = norm.
// Primitive because of the unit e-coefficient. The lattice needs at least one
// hyperbolic plane and an even Gram. spread bounds |coordinates| of y.
Vector random_vector_with_norm(Lattice const& lattice, Int const& norm, Rng& rng, int spread = 2);

// Uniformly random coordinates in [-spread, spread].
Vector random_vector(std::size_t rank, Rng& rng, int spread);

}  // namespace mukai
