#pragma once

#include "mukai/lattice.hpp"

namespace mukai {

// 64 unless MUKAI_SEARCH_RADIUS holds a positive integer.
int default_search_radius();

// Gram [[norm1, b], [b, norm2]] of a rank 2 sublattice.
struct Rank2Gram {
  Int norm1;
  Int b;
  Int norm2;
};

// Some l2 with (l1,l2) = b, (l2,l2) = norm2 and span{l1,l2} primitive of rank
// 2. Tries, in order: a completion inside l1's own plane (l1 isotropic), a
// completion in a hyperbolic plane missing l1, an isometry of L moving l1 to
// e1 + (l1^2/2) f1 (even lattices with two hyperbolic planes and enough
// unimodular room), and finally an ordered search with coefficients bounded
// by radius. Throws WitnessNotFound when all of these come back empty.
Vector embed_rank2(Lattice const& lattice, Vector const& l1, Rank2Gram const& target,
                   int radius = default_search_radius());

// Is span{a, b} a primitive sublattice of rank 2?
bool is_primitive_pair(Vector const& a, Vector const& b);

// Some y with (x, y) = 1, if the functional (x, .) is surjective.
std::optional<Vector> dual_unit(Lattice const& lattice, Vector const& x);

// L0 = L1 + L2 with L1^2 = L2^2 = 2a^2 m - 2 and L1.L2 = 1 + 2a^2 m for
// a = r/2; both primitive. Classes live in the K3 lattice.
struct SplitPair {
  Vector l1;
  Vector l2;
};
SplitPair split_even_rank(Int const& m, Vector const& l0, Int const& r, int radius = default_search_radius());

// Primitive L2 with L2^2 = 2m - 2 and L1.L2 = 1 + 2am, for primitive L1 with
// L1^2 = 2a^2 m - 2.
Vector extend_by_one(Int const& m, Vector const& l1, Int const& a, int radius = default_search_radius());

}  // namespace mukai
