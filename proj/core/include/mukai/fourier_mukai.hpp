#pragma once

#include <optional>
#include <string_view>

#include "mukai/stabilizer.hpp"
#include "mukai/verification.hpp"

namespace mukai {

enum class Provenance { kShift, kSpherical, kSigmaU0, kEllipticPhi, kComposite };
std::string_view to_string(Provenance p);

// An isometry of the Mukai lattice induced by a derived equivalence.
struct FMIsometry {
  Isometry isometry;
  Provenance provenance;
  std::optional<MukaiVector> spherical;  // v0 for kSpherical

  FMIsometry operator*(FMIsometry const& rhs) const;  // always kComposite
};

// w -> w + (v0,w) v0 for a -2 vector v0.
FMIsometry spherical_reflection(MukaiVector const& v0);
FMIsometry shift_isometry();
// w -> w - (w,u0) u0 with u0 = (1,0,-1).
FMIsometry sigma_u0();

// -(sigma_{u0} o tau_{v0}) = D with v0 = (1,0,1), plus commutativity.
Verification verify_sigma_tau_duality();

// The isometry acting on Lambda = span{(1,0,0), sigma, f, (0,0,1)} by
//   [[0,-1,0,0],[1,0,0,0],[1,-1,0,-1],[1,-1,1,0]]   (columns = images)
// and by -1 on Lambda-perp. f = e3, sigma = f3 - e3.
struct EllipticPhi {
  FMIsometry phi;
  Int n;
  Vector sigma;  // K3 coordinates
  Vector f;
  Vector beta;   // beta _|_ {sigma, f}, beta^2 = 2n - 4
  Vector alpha;  // sigma + (2-n) f - beta
  Verification verification;
};

IntMatrix phi_lambda_matrix();
EllipticPhi elliptic_phi(Int const& n);

// (-1)^cov(g) g restricted to v-perp. g must fix v.
Isometry mon_twist(VPerpModel const& model, Isometry const& g);

}  // namespace mukai
