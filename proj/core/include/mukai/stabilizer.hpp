#pragma once

#include <optional>
#include <string_view>

#include "mukai/characters.hpp"
#include "mukai/mukai_ring.hpp"
#include "mukai/sampling.hpp"

namespace mukai {

// q(k) = -k^2/2m mod 2 on Z/2m.
struct DiscForm {
  Int modulus;  // 2m
  Rational q(Int const& k) const;
  Rational q_generator() const { return q(1); }
};

// v = (1,0,-m). v-perp has basis: the 22 K3 basis vectors, then w = (1,0,m);
// its Gram is K3 + <-2m>. A Mukai vector (r, c, rm) has coordinates (c, r).
class VPerpModel {
 public:
  explicit VPerpModel(Int m);

  Int const& m() const { return m_; }
  LatticePtr const& lattice() const { return lattice_; }
  MukaiVector v() const { return mukai_vector(1, -m_); }
  MukaiVector w() const { return mukai_vector(1, m_); }
  IntMatrix const& embedding() const { return embedding_; }  // 24 x 23, columns = basis
  DiscForm const& disc() const { return disc_; }
  DiscGroup const& smith_disc() const { return smith_disc_; }
  RationalVector const& disc_generator() const { return generator_; }  // w / 2m
  ReferenceOrientation const& reference() const { return reference_; }

  bool contains(MukaiVector const& x) const { return mukai_pairing(x, v()) == 0; }
  Vector to_vperp(MukaiVector const& x) const;  // PreconditionError unless in v-perp
  MukaiVector from_vperp(Vector const& y) const;

  // g must send v to +-v.
  Isometry restrict(Isometry const& g) const;
  // The isometry of the Mukai lattice acting as g on v-perp and by sign on v,
  // when it is integral.
  std::optional<Isometry> extend(Isometry const& g, int sign) const;

 private:
  Int m_;
  LatticePtr lattice_;
  IntMatrix embedding_;
  DiscGroup smith_disc_;
  DiscForm disc_;
  RationalVector generator_;
  ReferenceOrientation reference_;
};

// u in [0, 2m) with g(x) = u x on the discriminant group.
Int disc_action(VPerpModel const& model, Isometry const& g);

enum class GammaVStatus { kInGammaV, kExtendsSendingVToMinusV, kDoesNotExtend };
std::string_view to_string(GammaVStatus s);
GammaVStatus in_gamma_v(VPerpModel const& model, Isometry const& g);

bool w_membership(VPerpModel const& model, Isometry const& g);

enum class Minus2Class { kAPlus, kAMinus };
std::string_view to_string(Minus2Class c);
Minus2Class classify_minus2(VPerpModel const& model, MukaiVector const& v0);

// (1, 2 L0, m) with L0 = e1 + (m-1)/4 f1 when m = 1 mod 4.
std::optional<MukaiVector> aplus_witness(Int const& m);

struct DiscOrder {
  Int order;
  int rho = 0;
  Int index;
};
DiscOrder disc_group_order(std::int64_t m);

int distinct_prime_count(std::int64_t m);

}  // namespace mukai
