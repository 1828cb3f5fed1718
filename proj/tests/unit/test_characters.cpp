#include <gtest/gtest.h>

#include "mukai/mukai.hpp"
#include "support/oracles.hpp"

using namespace mukai;

namespace {

// A positive definite frame that is not the default one: the image of the
// default frame under a random product of reflections.
ReferenceOrientation moved_reference(Isometry const& h) {
  std::vector<RationalVector> vs;
  for (auto const& x : default_mukai_reference().vectors()) vs.push_back(to_rational(h.matrix()) * x);
  return ReferenceOrientation(mukai_lattice(), vs);
}

}  // namespace

TEST(Characters, ReflectionExamples) {
  auto const L = mukai_lattice();
  Isometry const t = reflection(L, mukai_vector(1, 1).coords());
  EXPECT_EQ(t(mukai_vector(1, 0).coords()), mukai_vector(0, -1).coords());
  Isometry const s = true_reflection(L, mukai_vector(1, -1).coords());
  EXPECT_EQ(s(mukai_vector(1, 0).coords()), mukai_vector(0, 1).coords());
}

TEST(Characters, ReflectionsMatchRationalFormula) {
  auto const L = mukai_lattice();
  Rng rng(1);
  for (int trial = 0; trial < 40; ++trial) {
    Int const norm = trial % 2 ? 2 : -2;
    Vector const u = random_vector_with_norm(*L, norm, rng);
    RationalMatrix const expected = oracle::reflection_q(oracle::mukai_literal(), u);
    EXPECT_EQ(to_rational(true_reflection(L, u).matrix()), expected);
    // rho_u = -sigma_u for +2, sigma_u for -2.
    Isometry const rho = reflection(L, u);
    EXPECT_EQ(to_rational(norm == 2 ? rho.negated().matrix() : rho.matrix()), expected);
    if (norm == -2) EXPECT_EQ(tau(L, u).matrix(), rho.matrix());
  }
}

TEST(Characters, ReflectionPreconditions) {
  auto const L = mukai_lattice();
  Vector isotropic(24);
  isotropic[16] = 1;
  EXPECT_THROW(reflection(L, isotropic), PreconditionError);
  Vector four(24);
  four[16] = 1;
  four[17] = 2;
  EXPECT_THROW(reflection(L, four), PreconditionError);
  // w - 2(w,u)/4 u is not integral for this primitive u.
  EXPECT_THROW(true_reflection(L, four), IntegralityError);
}

TEST(Characters, FiberSquareReflection) {
  for (Int n : {2, 3, 5}) {
    auto const L = build_lattice({BlockSpec::parse("K3"), BlockSpec::parse("diag(" + to_string(Int(2 - 2 * n)) + ")")});
    Vector delta(23);
    delta[22] = 1;
    Isometry const r = true_reflection(L, delta);
    EXPECT_EQ(r(delta), negate(delta));
    for (std::size_t i = 0; i < 22; ++i) EXPECT_EQ(r(unit_vector(23, i)), unit_vector(23, i));
  }
}

TEST(Characters, ApplyTauLeftIsMatrixProduct) {
  auto const L = mukai_lattice();
  Rng rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    Vector const u = random_vector_with_norm(*L, -2, rng);
    Vector const x = random_vector_with_norm(*L, 2, rng);
    IntMatrix m = reflection(L, x).matrix();
    IntMatrix const expected = tau(L, u).matrix() * m;
    apply_tau_left(*L, u, m);
    EXPECT_EQ(m, expected);
  }
}

TEST(Characters, CharacterTable) {
  auto const L = mukai_lattice();
  EXPECT_EQ(covariance(Isometry::minus_identity(L)), 0);
  EXPECT_EQ(covariance(duality_isometry()), 1);
  EXPECT_EQ(duality_isometry().determinant(), 1);  // -1 on 22 coordinates
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Vector const plus = random_vector_with_norm(*L, 2, rng, 3);
    Vector const minus = random_vector_with_norm(*L, -2, rng, 3);
    Isometry const rp = reflection(L, plus), rm = reflection(L, minus);
    EXPECT_EQ(covariance(rp), 1);
    EXPECT_EQ(covariance(rm), 0);
    EXPECT_EQ(rp.determinant(), -1);
    EXPECT_EQ(rm.determinant(), -1);
    EXPECT_EQ(oracle::det_bareiss(rp.matrix()), -1);
  }
}

TEST(Characters, CharacterIsAHomomorphismIndependentOfTheFrame) {
  auto const L = mukai_lattice();
  Rng rng(4);
  auto random_reflection = [&] {
    return reflection(L, random_vector_with_norm(*L, rng.coin() ? 2 : -2, rng));
  };
  for (int trial = 0; trial < 20; ++trial) {
    Isometry const g = random_reflection() * random_reflection();
    Isometry const h = random_reflection() * random_reflection() * random_reflection();
    EXPECT_EQ(covariance(g * h), (covariance(g) + covariance(h)) % 2);
    ReferenceOrientation const other = moved_reference(random_reflection() * random_reflection());
    EXPECT_EQ(orientation_char(other, g), covariance(g));
    EXPECT_EQ(orientation_char(other, h), covariance(h));
  }
}

TEST(Characters, ReferenceValidation) {
  auto const L = mukai_lattice();
  std::vector<RationalVector> three(default_mukai_reference().vectors().begin(),
                                    default_mukai_reference().vectors().begin() + 3);
  EXPECT_THROW(ReferenceOrientation(L, three), PreconditionError);
  auto bad = default_mukai_reference().vectors();
  bad[3] = to_rational(mukai_vector(1, 1).coords());  // negative
  EXPECT_THROW(ReferenceOrientation(L, bad), PreconditionError);
}

TEST(Characters, K3BlockCharacter) {
  auto const k3 = k3_lattice();
  ReferenceOrientation const ref = k3_block_reference(k3);
  EXPECT_EQ(orientation_char(ref, Isometry::minus_identity(k3)), 1);  // -I_3
  Vector e1f1(22);
  e1f1[16] = 1;
  e1f1[17] = 1;
  EXPECT_EQ(orientation_char(ref, true_reflection(k3, e1f1)), 1);
  EXPECT_EQ(orientation_char(ref, reflection(k3, e1f1)), 0);  // -sigma
  Vector root(22);
  root[0] = 1;
  EXPECT_EQ(orientation_char(ref, reflection(k3, root)), 0);
}
