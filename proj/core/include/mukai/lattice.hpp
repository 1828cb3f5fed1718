#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mukai/matrix.hpp"

namespace mukai {

// Building blocks for lattices. K3 and Mukai expand into atomic blocks:
//   K3    = E8(-1) + E8(-1) + U + U + U                       (rank 22)
//   Mukai = K3 + H, H spanned by (1,0,0),(0,0,1) with Gram [[0,-1],[-1,0]]
//                                                            (rank 24)
enum class BlockKind { kHyperbolic, kE8Minus, kMukaiHyperbolic, kDiagonal };

struct BlockSpec {
  std::string name;            // "U", "E8_minus", "K3", "Mukai" or "diag"
  std::vector<Int> diagonal;   // only for "diag"

  static BlockSpec parse(std::string const& text);  // e.g. "diag(2,-2)"
  std::string to_string() const;
};

struct Block {
  BlockKind kind;
  std::size_t offset;
  std::size_t size;
};

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t null = 0;
  bool operator==(Signature const&) const = default;
};

// An integral symmetric bilinear form on Z^rank given by its Gram matrix.
// Immutable after construction.
class Lattice {
 public:
  Lattice(IntMatrix gram, std::vector<std::string> labels, std::vector<Block> blocks = {},
          std::vector<BlockSpec> spec = {}, std::string id = {});

  std::size_t rank() const { return gram_.rows(); }
  IntMatrix const& gram() const { return gram_; }
  std::vector<std::string> const& labels() const { return labels_; }
  std::vector<Block> const& blocks() const { return blocks_; }
  std::vector<BlockSpec> const& spec() const { return spec_; }
  std::string const& id() const { return id_; }

  Int pair(Vector const& x, Vector const& y) const;
  Int norm(Vector const& x) const { return pair(x, x); }
  // G x: the functional (x, .) in coordinates.
  Vector dual_coordinates(Vector const& x) const;
  Rational pair(RationalVector const& x, RationalVector const& y) const;

  bool is_even() const;
  bool is_nondegenerate() const { return gram_inverse_.has_value(); }
  bool is_unimodular() const;
  Int determinant() const { return det_; }
  Signature signature() const;
  std::optional<RationalMatrix> const& gram_inverse() const { return gram_inverse_; }

  // Indices of the atomic hyperbolic planes (e, f) in block order.
  std::vector<std::pair<std::size_t, std::size_t>> hyperbolic_planes() const;

 private:
  IntMatrix gram_;
  std::vector<std::string> labels_;
  std::vector<Block> blocks_;
  std::vector<BlockSpec> spec_;
  std::string id_;
  Int det_;
  std::optional<RationalMatrix> gram_inverse_;
};

using LatticePtr = std::shared_ptr<Lattice const>;

// Fixed E8(-1) Gram: negative of the E8 Cartan matrix in Bourbaki labeling
// (chain 1-3-4-5-6-7-8 with node 2 attached to node 4).
IntMatrix e8_minus_gram();

LatticePtr build_lattice(std::vector<BlockSpec> const& spec, std::string id = {});
LatticePtr k3_lattice();     // shared instance, id "k3"
LatticePtr mukai_lattice();  // shared instance, id "mukai"

// Coordinate offsets in the standard K3 / Mukai bases.
namespace k3_index {
inline constexpr std::size_t kE8First = 0;
inline constexpr std::size_t kE8Second = 8;
inline constexpr std::size_t kU1 = 16;  // e1 = 16, f1 = 17
inline constexpr std::size_t kU2 = 18;
inline constexpr std::size_t kU3 = 20;
inline constexpr std::size_t kRank = 22;
}  // namespace k3_index
namespace mukai_index {
inline constexpr std::size_t kRankCoord = 22;  // (1,0,0)
inline constexpr std::size_t kPointCoord = 23; // (0,0,1)
inline constexpr std::size_t kRank = 24;
}  // namespace mukai_index

Int pair(Lattice const& lattice, Vector const& x, Vector const& y);

// gcd of coordinates is 1. Throws PreconditionError for the zero vector.
bool is_primitive(Lattice const& lattice, Vector const& x);

struct IsometryCheck {
  bool is_isometry = false;
  Int det = 0;
};
IsometryCheck check_isometry(Lattice const& lattice, IntMatrix const& m);

struct Complement {
  IntMatrix basis;  // columns, in ambient coordinates
  LatticePtr lattice;
};
// Saturated integral kernel {x : (x, s) = 0 for all s in S}, in Hermite form.
Complement orthogonal_complement(Lattice const& lattice, std::vector<Vector> const& vectors);

struct DiscGroup {
  std::vector<Int> elementary_divisors;  // d_1 | d_2 | ..., all > 1
  std::vector<RationalVector> lifts;     // generator lifts in L (x) Q
  std::vector<Rational> q_values;        // q(lift) mod 2 (even) or mod 1 (odd)
  bool even = true;

  Int order() const;
  bool is_cyclic() const { return elementary_divisors.size() <= 1; }
};
DiscGroup discriminant_group(Lattice const& lattice);

// Reduce a rational into [0, modulus).
Rational reduce_mod(Rational const& q, Int const& modulus);

// An isometry of a fixed lattice: M^T G M = G, det = +-1.
class Isometry {
 public:
  // Throws PreconditionError unless matrix is an isometry of lattice.
  Isometry(LatticePtr lattice, IntMatrix matrix);
  static Isometry identity(LatticePtr lattice);
  static Isometry minus_identity(LatticePtr lattice);

  LatticePtr const& lattice() const { return lattice_; }
  IntMatrix const& matrix() const { return matrix_; }
  std::size_t rank() const { return matrix_.rows(); }

  Vector operator()(Vector const& x) const { return matrix_ * x; }
  // (*this) o rhs
  Isometry operator*(Isometry const& rhs) const;
  Isometry inverse() const;
  Isometry negated() const;
  Int determinant() const;
  bool operator==(Isometry const& rhs) const { return matrix_ == rhs.matrix_; }
  bool is_identity() const { return matrix_.is_identity(); }

 private:
  struct Unchecked {};
  Isometry(LatticePtr lattice, IntMatrix matrix, Unchecked);

  LatticePtr lattice_;
  IntMatrix matrix_;
};

// Inverse of an isometry matrix via G^-1 M^T G.
IntMatrix isometry_inverse(Lattice const& lattice, IntMatrix const& m);

}  // namespace mukai
