#pragma once

#include "mukai/lattice.hpp"

namespace mukai {

enum class ReflectionMode {
  kPlusMinusTwo,  // rho_u(w) = (-2/(u,u)) w + (w,u) u, requires (u,u) = +-2
  kGeneral,       // w - 2 (w,u)/(u,u) u, integrality checked
};

// Throws PreconditionError for (u,u) = 0 or a non-+-2 vector in the default
// mode, IntegralityError when the general formula leaves the lattice.
Isometry reflection(LatticePtr lattice, Vector const& u, ReflectionMode mode = ReflectionMode::kPlusMinusTwo);

// The reflection fixing u-perp pointwise and sending u to -u.
inline Isometry true_reflection(LatticePtr lattice, Vector const& u) {
  return reflection(std::move(lattice), u, ReflectionMode::kGeneral);
}

// tau_u(w) = w + (u,w) u. For a -2 vector this is the true reflection.
Isometry tau(LatticePtr lattice, Vector const& u);

// m <- tau_u * m, as an O(n^2) rank-one update.
void apply_tau_left(Lattice const& lattice, Vector const& u, IntMatrix& m);

// An ordered basis of a maximal positive definite subspace.
class ReferenceOrientation {
 public:
  // Throws PreconditionError unless the vectors have a positive definite Gram
  // and their count is the positive index of the lattice.
  ReferenceOrientation(LatticePtr lattice, std::vector<RationalVector> vectors);

  LatticePtr const& lattice() const { return lattice_; }
  std::vector<RationalVector> const& vectors() const { return vectors_; }

 private:
  LatticePtr lattice_;
  std::vector<RationalVector> vectors_;
};

// {e1+f1, e2+f2, e3+f3, (1,0,-1)} on the Mukai lattice.
ReferenceOrientation const& default_mukai_reference();

// {e1+f1, e2+f2, e3+f3} placed on the K3 coordinates 0..21 of a lattice whose
// first 22 basis vectors are the standard K3 basis.
ReferenceOrientation k3_block_reference(LatticePtr lattice);

// 0 if g preserves the orientation of positive definite subspaces, else 1.
int orientation_char(ReferenceOrientation const& ref, Isometry const& g);

// cov: the orientation character on the Mukai lattice.
int covariance(Isometry const& g);

}  // namespace mukai
