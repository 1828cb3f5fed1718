#include "mukai/characters.hpp"

#include "mukai/mukai_ring.hpp"

namespace mukai {

Isometry reflection(LatticePtr lattice, Vector const& u, ReflectionMode mode) {
  if (!lattice) throw PreconditionError("reflection: null lattice");
  Lattice const& l = *lattice;
  Int const uu = l.norm(u);
  if (uu == 0) throw PreconditionError("reflection in an isotropic vector");
  Vector const gu = l.dual_coordinates(u);
  std::size_t const n = l.rank();
  IntMatrix m(n, n);
  if (mode == ReflectionMode::kPlusMinusTwo) {
    if (uu != 2 && uu != -2) throw PreconditionError("rho_u needs (u,u) = +-2, got " + to_string(uu));
    Int const scalar = -2 / uu;  // -+1
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = scalar;
      for (std::size_t j = 0; j < n; ++j)
        if (u[i] != 0 && gu[j] != 0) m(i, j) += u[i] * gu[j];
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
      for (std::size_t j = 0; j < n; ++j) {
        if (u[i] == 0 || gu[j] == 0) continue;
        Int const num = 2 * u[i] * gu[j];
        if (num % uu != 0)
          throw IntegralityError("reflection in a vector of norm " + to_string(uu) + " is not integral");
        m(i, j) -= num / uu;
      }
    }
  }
  return Isometry(std::move(lattice), std::move(m));
}

Isometry tau(LatticePtr lattice, Vector const& u) {
  IntMatrix m = IntMatrix::identity(lattice->rank());
  apply_tau_left(*lattice, u, m);
  return Isometry(std::move(lattice), std::move(m));
}

void apply_tau_left(Lattice const& lattice, Vector const& u, IntMatrix& m) {
  // tau_u M = M + u (G u)^T M
  Vector const gu = lattice.dual_coordinates(u);
  std::size_t const n = m.rows();
  Vector row(m.cols());
  for (std::size_t k = 0; k < n; ++k) {
    if (gu[k] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(k, j) != 0) row[j] += gu[k] * m(k, j);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (row[j] != 0) m(i, j) += u[i] * row[j];
  }
}

ReferenceOrientation::ReferenceOrientation(LatticePtr lattice, std::vector<RationalVector> vectors)
    : lattice_(std::move(lattice)), vectors_(std::move(vectors)) {
  if (!lattice_) throw PreconditionError("reference orientation: null lattice");
  std::size_t const k = vectors_.size();
  if (k != lattice_->signature().positive)
    throw PreconditionError("reference orientation must span a maximal positive subspace");
  RationalMatrix gram(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) gram(i, j) = lattice_->pair(vectors_[i], vectors_[j]);
  // Sylvester: all leading principal minors positive.
  for (std::size_t s = 1; s <= k; ++s) {
    RationalMatrix minor(s, s);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) minor(i, j) = gram(i, j);
    if (determinant(minor) <= 0) throw PreconditionError("reference vectors are not positive definite");
  }
}

namespace {

RationalVector hyperbolic_sum(std::size_t rank, std::size_t e) {
  RationalVector x(rank);
  x[e] = 1;
  x[e + 1] = 1;
  return x;
}

}  // namespace

ReferenceOrientation const& default_mukai_reference() {
  static ReferenceOrientation const ref = [] {
    auto const n = mukai_index::kRank;
    std::vector<RationalVector> vs{hyperbolic_sum(n, k3_index::kU1), hyperbolic_sum(n, k3_index::kU2),
                                   hyperbolic_sum(n, k3_index::kU3)};
    vs.push_back(to_rational(mukai_vector(1, -1).coords()));
    return ReferenceOrientation(mukai_lattice(), std::move(vs));
  }();
  return ref;
}

ReferenceOrientation k3_block_reference(LatticePtr lattice) {
  auto const n = lattice->rank();
  if (n < k3_index::kRank) throw PreconditionError("lattice too small for a K3 block reference");
  std::vector<RationalVector> vs{hyperbolic_sum(n, k3_index::kU1), hyperbolic_sum(n, k3_index::kU2),
                                 hyperbolic_sum(n, k3_index::kU3)};
  return ReferenceOrientation(std::move(lattice), std::move(vs));
}

int orientation_char(ReferenceOrientation const& ref, Isometry const& g) {
  Lattice const& l = *ref.lattice();
  if (g.rank() != l.rank()) throw PreconditionError("orientation_char: rank mismatch");
  // det(P o g | span) has the sign of det[(ref_i, g ref_j)], since the Gram
  // of the reference vectors is positive definite.
  auto const& vs = ref.vectors();
  std::size_t const k = vs.size();
  RationalMatrix const gm = to_rational(g.matrix());
  RationalMatrix b(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    RationalVector const image = gm * vs[j];
    for (std::size_t i = 0; i < k; ++i) b(i, j) = l.pair(vs[i], image);
  }
  Rational const det = determinant(b);
  if (det == 0) throw VerificationError("orientation_char: degenerate projection");
  return det > 0 ? 0 : 1;
}

int covariance(Isometry const& g) { return orientation_char(default_mukai_reference(), g); }

}  // namespace mukai
