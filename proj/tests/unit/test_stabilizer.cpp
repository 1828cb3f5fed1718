#include <gtest/gtest.h>

#include "mukai/mukai.hpp"
#include "support/oracles.hpp"

using namespace mukai;

namespace {

Vector k3_class(std::initializer_list<std::pair<std::size_t, int>> entries) {
  Vector c(22);
  for (auto const& [i, x] : entries) c[i] = x;
  return c;
}

constexpr std::size_t e1 = k3_index::kU1, f1 = k3_index::kU1 + 1;

std::int64_t as_i64(Int const& x) { return x.convert_to<std::int64_t>(); }

// In v-perp for m = 6: u = 3y + w with y in U1, y^2 = 2. u^2 = 6 and the true
// reflection is integral; it sends w/12 to 5 w/12.
Isometry odd_unit_reflection(VPerpModel const& model) {
  Vector u(23);
  u[e1] = 3;
  u[f1] = 3;
  u[22] = 1;
  return true_reflection(model.lattice(), u);
}

}  // namespace

TEST(Stabilizer, ModelExamples) {
  VPerpModel const m1(1);
  EXPECT_EQ(m1.lattice()->gram(), oracle::block_sum({oracle::k3_literal(), IntMatrix{{-2}}}));
  EXPECT_EQ(m1.smith_disc().elementary_divisors, std::vector<Int>{2});
  EXPECT_EQ(mukai_pairing(m1.v(), m1.v()), 2);

  VPerpModel const m3(3);
  EXPECT_EQ(m3.smith_disc().elementary_divisors, std::vector<Int>{6});
  EXPECT_EQ(m3.disc().q_generator(), Rational(11, 6));
  EXPECT_EQ(m3.lattice()->signature(), (Signature{3, 20, 0}));
  EXPECT_THROW(VPerpModel(0), PreconditionError);
}

TEST(Stabilizer, DiscriminantFormOfGenerator) {
  for (Int m = 1; m <= 50; ++m) {
    VPerpModel const model(m);
    EXPECT_TRUE(model.smith_disc().is_cyclic());
    EXPECT_EQ(model.smith_disc().order(), 2 * m);
    EXPECT_EQ(model.disc().q_generator(), reduce_mod(Rational(-1, 2 * m), 2));
  }
}

TEST(Stabilizer, ModelCoordinatesRoundTrip) {
  VPerpModel const model(4);
  Rng rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    Vector y = random_vector(23, rng, 4);
    MukaiVector const x = model.from_vperp(y);
    EXPECT_TRUE(model.contains(x));
    EXPECT_EQ(model.to_vperp(x), y);
    EXPECT_EQ(x.coords(), model.embedding() * y);
  }
  EXPECT_THROW(model.to_vperp(mukai_vector(1, 0)), PreconditionError);
}

TEST(Stabilizer, DiscActionExamples) {
  for (Int m : {1, 2, 3, 6}) {
    VPerpModel const model(m);
    EXPECT_EQ(disc_action(model, Isometry::identity(model.lattice())), 1);
    EXPECT_EQ(disc_action(model, Isometry::minus_identity(model.lattice())), mod(Int(-1), 2 * m));
    GeneratorFamily const family(m);
    Isometry const t(mukai_lattice(), letter_matrix(family.canonical_tau()));
    EXPECT_EQ(disc_action(model, model.restrict(t)), 1);
  }
}

TEST(Stabilizer, DiscActionMatchesBruteForce) {
  Rng rng(2);
  for (Int m : {2, 3, 5, 6}) {
    VPerpModel const model(m);
    GeneratorFamily const family(m);
    for (int trial = 0; trial < 10; ++trial) {
      Isometry g = model.restrict(Isometry(mukai_lattice(), family.sample_word(rng, 3).product()));
      if (rng.coin()) g = g.negated();
      if (m == 6 && rng.coin()) g = g * odd_unit_reflection(model);
      EXPECT_EQ(as_i64(disc_action(model, g)), oracle::disc_unit(g.matrix(), as_i64(m)));
    }
  }
}

TEST(Stabilizer, InGammaVExamples) {
  VPerpModel const m1(1), m2(2), m6(6);
  EXPECT_EQ(in_gamma_v(m1, Isometry::minus_identity(m1.lattice())), GammaVStatus::kInGammaV);
  EXPECT_EQ(in_gamma_v(m2, Isometry::minus_identity(m2.lattice())), GammaVStatus::kExtendsSendingVToMinusV);

  Isometry const g = odd_unit_reflection(m6);
  EXPECT_EQ(disc_action(m6, g), 5);
  EXPECT_EQ(oracle::disc_unit(g.matrix(), 6), 5);
  EXPECT_EQ(in_gamma_v(m6, g), GammaVStatus::kDoesNotExtend);
  EXPECT_EQ(disc_action(m6, g.negated()), 7);
  EXPECT_EQ(in_gamma_v(m6, g.negated()), GammaVStatus::kDoesNotExtend);
  EXPECT_FALSE(m6.extend(g, 1).has_value());
  EXPECT_FALSE(m6.extend(g, -1).has_value());
  EXPECT_FALSE(w_membership(m6, g));
  EXPECT_FALSE(w_membership(m6, g.negated()));
}

TEST(Stabilizer, ExtendInvertsRestrict) {
  Rng rng(3);
  for (Int m : {1, 2, 3}) {
    VPerpModel const model(m);
    GeneratorFamily const family(m);
    for (int trial = 0; trial < 5; ++trial) {
      Isometry const g(mukai_lattice(), family.sample_word(rng, 4).product());
      auto const back = model.extend(model.restrict(g), 1);
      ASSERT_TRUE(back.has_value());
      EXPECT_EQ(*back, g);
    }
  }
}

TEST(Stabilizer, WMembershipExamples) {
  Rng rng(4);
  for (Int m : {1, 2, 3, 4}) {
    VPerpModel const model(m);
    for (int trial = 0; trial < 5; ++trial) {
      Vector const u = random_vector_with_norm(*model.lattice(), -2, rng);
      EXPECT_TRUE(w_membership(model, reflection(model.lattice(), u)));
      // A +2 reflection reverses the positive orientation; a pair of them does not.
      Vector const p = random_vector_with_norm(*model.lattice(), 2, rng);
      Vector const q = random_vector_with_norm(*model.lattice(), 2, rng);
      Isometry const sp = true_reflection(model.lattice(), p);
      EXPECT_FALSE(w_membership(model, sp));
      EXPECT_TRUE(w_membership(model, sp * true_reflection(model.lattice(), q)));
    }
    EXPECT_FALSE(w_membership(model, Isometry::minus_identity(model.lattice())));
  }
}

TEST(Stabilizer, ClassifyExamples) {
  VPerpModel const m1(1), m3(3), m5(5);
  EXPECT_EQ(classify_minus2(m1, mukai_vector(1, 1)), Minus2Class::kAPlus);
  MukaiVector const five(1, k3_class({{e1, 2}, {f1, 2}}), 5);
  EXPECT_EQ(mukai_pairing(five, five), -2);
  EXPECT_EQ(classify_minus2(m5, five), Minus2Class::kAPlus);
  MukaiVector const three(1, negate(k3_class({{e1, 1}, {f1, 2}})), 3);
  EXPECT_EQ(mukai_pairing(three, three), -2);
  EXPECT_EQ(classify_minus2(m3, three), Minus2Class::kAMinus);
  EXPECT_THROW(classify_minus2(m3, mukai_vector(1, 1)), PreconditionError);
}

TEST(Stabilizer, AplusWitnessExamples) {
  EXPECT_EQ(aplus_witness(5), MukaiVector(1, k3_class({{e1, 2}, {f1, 2}}), 5));
  EXPECT_EQ(aplus_witness(1), MukaiVector(1, k3_class({{e1, 2}}), 1));
  EXPECT_FALSE(aplus_witness(3).has_value());
  for (Int m = 1; m <= 40; ++m) {
    auto const w = aplus_witness(m);
    EXPECT_EQ(w.has_value(), m % 4 == 1);
    if (w) {
      EXPECT_EQ(mukai_pairing(*w, *w), -2);
      EXPECT_EQ(classify_minus2(VPerpModel(m), *w), Minus2Class::kAPlus);
    }
  }
}

TEST(Stabilizer, DiscOrderExamples) {
  auto check = [](std::int64_t m, Int order, int rho, Int index) {
    DiscOrder const d = disc_group_order(m);
    EXPECT_EQ(d.order, order) << m;
    EXPECT_EQ(d.rho, rho) << m;
    EXPECT_EQ(d.index, index) << m;
  };
  check(1, 1, 0, 1);
  check(6, 4, 2, 4);
  check(8, 2, 1, 2);
}

TEST(Stabilizer, DiscOrderAgreesWithEnumeration) {
  for (std::int64_t m = 1; m <= 600; ++m) {
    DiscOrder const d = disc_group_order(m);
    EXPECT_EQ(d.order, oracle::units_squaring_to_one(m)) << m;
    EXPECT_EQ(d.rho, oracle::distinct_primes(m)) << m;
  }
}

TEST(Stabilizer, Minus2VectorsOfSmallCoordinatesSplitByParity) {
  // Every -2 vector of 3U + <w> with |coordinates| <= 2 is in A+ only if all
  // its K3 coordinates are even; cross-check the classifier on all of them.
  for (Int m : {1, 3, 5}) {
    VPerpModel const model(m);
    std::int64_t const mm = as_i64(m);
    int seen = 0;
    for (int a1 = -2; a1 <= 2; ++a1)
      for (int b1 = -2; b1 <= 2; ++b1)
        for (int a2 = -2; a2 <= 2; ++a2)
          for (int b2 = -2; b2 <= 2; ++b2)
            for (int r = -2; r <= 2; ++r) {
              // a3 = 1, solve for b3.
              std::int64_t const rest = 2 * mm * r * r - 2 - 2 * (a1 * b1 + a2 * b2);
              if (rest % 2) continue;
              std::int64_t const b3 = rest / 2;
              Vector c = k3_class({{16, a1}, {17, b1}, {18, a2}, {19, b2}, {20, 1}});
              c[21] = b3;
              MukaiVector const v0(r, c, r * m);
              ASSERT_EQ(mukai_pairing(v0, v0), -2);
              EXPECT_EQ(classify_minus2(model, v0), Minus2Class::kAMinus);  // a3 odd
              ++seen;
            }
    EXPECT_GT(seen, 0);
  }
}

TEST(Stabilizer, DistinctPrimeCount) {
  for (std::int64_t m = 1; m <= 2000; ++m) EXPECT_EQ(distinct_prime_count(m), oracle::distinct_primes(m));
}
