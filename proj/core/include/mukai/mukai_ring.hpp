#pragma once

#include <string_view>

#include "mukai/lattice.hpp"

namespace mukai {

// (r, c, s) in H^0 + H^2 + H^4 of a K3 surface; c lives in the K3 lattice.
struct MukaiVector {
  Int r = 0;
  Vector c = Vector(k3_index::kRank);
  Int s = 0;

  MukaiVector() = default;
  MukaiVector(Int r_, Vector c_, Int s_);

  // Coordinates in the Mukai lattice basis [K3 ..., (1,0,0), (0,0,1)].
  static MukaiVector from_coords(Vector const& coords);
  Vector coords() const;

  bool is_zero() const;
  MukaiVector operator-() const;
  MukaiVector operator+(MukaiVector const& rhs) const;
  bool operator==(MukaiVector const&) const = default;
};

MukaiVector mukai_vector(Int r, Int s);  // c = 0

// K3 intersection form on the middle component.
Int k3_dot(Vector const& a, Vector const& b);
Rational k3_dot(RationalVector const& a, RationalVector const& b);

// <(r,c,s),(r',c',s')> = c.c' - r s' - r' s
Int mukai_pairing(MukaiVector const& x, MukaiVector const& y);
MukaiVector dualize(MukaiVector const& x);

// Matrix of D on the Mukai lattice.
Isometry duality_isometry();

// Truncated total cohomology of a surface with rational coefficients.
struct GradedSurfaceClass {
  Rational deg0 = 0;
  RationalVector deg2 = RationalVector(k3_index::kRank);
  Rational deg4 = 0;

  GradedSurfaceClass() = default;
  GradedSurfaceClass(Rational d0, RationalVector d2, Rational d4);
  static GradedSurfaceClass from(MukaiVector const& v);

  bool operator==(GradedSurfaceClass const&) const = default;
  GradedSurfaceClass operator+(GradedSurfaceClass const& rhs) const;
};

// Throws IntegralityError if some component is fractional.
MukaiVector to_mukai_vector(GradedSurfaceClass const& x);

GradedSurfaceClass dualize(GradedSurfaceClass const& x);
GradedSurfaceClass cup(GradedSurfaceClass const& x, GradedSurfaceClass const& y);
GradedSurfaceClass exp_class(Vector const& line);  // (1, l, l^2/2)
GradedSurfaceClass sqrt_todd();                    // (1, 0, 1)

// (r, a1, a2) -> 1 + a1 + (a1^2/2 - a2). Requires an integral rank.
GradedSurfaceClass ch_to_chern(GradedSurfaceClass const& ch);

// Like ch_to_chern, but reports a fractional c2 instead of returning it.
GradedSurfaceClass ch_to_chern_integral(GradedSurfaceClass const& ch);

GradedSurfaceClass twist_by_line(GradedSurfaceClass const& x, Vector const& line);

enum class Effectivity { kEffective, kNotEffective, kIndeterminate };
std::string_view to_string(Effectivity e);

Effectivity effectivity_numeric(MukaiVector const& v);

}  // namespace mukai
