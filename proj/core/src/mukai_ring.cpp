#include "mukai/mukai_ring.hpp"

namespace mukai {
namespace {

void check_k3_length(std::size_t n) {
  if (n != k3_index::kRank) throw PreconditionError("middle component must have 22 entries");
}

}  // namespace

MukaiVector::MukaiVector(Int r_, Vector c_, Int s_) : r(std::move(r_)), c(std::move(c_)), s(std::move(s_)) {
  check_k3_length(c.size());
}

MukaiVector MukaiVector::from_coords(Vector const& coords) {
  if (coords.size() != mukai_index::kRank) throw PreconditionError("Mukai vector needs 24 coordinates");
  return {coords[mukai_index::kRankCoord], Vector(coords.begin(), coords.begin() + k3_index::kRank),
          coords[mukai_index::kPointCoord]};
}

Vector MukaiVector::coords() const {
  Vector out(c);
  out.push_back(r);
  out.push_back(s);
  return out;
}

bool MukaiVector::is_zero() const { return r == 0 && s == 0 && mukai::is_zero(c); }

MukaiVector MukaiVector::operator-() const { return {-r, negate(c), -s}; }

MukaiVector MukaiVector::operator+(MukaiVector const& rhs) const {
  return {r + rhs.r, add(c, rhs.c), s + rhs.s};
}

MukaiVector mukai_vector(Int r, Int s) { return {std::move(r), Vector(k3_index::kRank), std::move(s)}; }

Int k3_dot(Vector const& a, Vector const& b) {
  check_k3_length(a.size());
  check_k3_length(b.size());
  return k3_lattice()->pair(a, b);
}

Rational k3_dot(RationalVector const& a, RationalVector const& b) {
  check_k3_length(a.size());
  check_k3_length(b.size());
  return k3_lattice()->pair(a, b);
}

Int mukai_pairing(MukaiVector const& x, MukaiVector const& y) {
  return k3_dot(x.c, y.c) - x.r * y.s - y.r * x.s;
}

MukaiVector dualize(MukaiVector const& x) { return {x.r, negate(x.c), x.s}; }

Isometry duality_isometry() {
  IntMatrix m = IntMatrix::identity(mukai_index::kRank);
  for (std::size_t i = 0; i < k3_index::kRank; ++i) m(i, i) = -1;
  return Isometry(mukai_lattice(), std::move(m));
}

GradedSurfaceClass::GradedSurfaceClass(Rational d0, RationalVector d2, Rational d4)
    : deg0(std::move(d0)), deg2(std::move(d2)), deg4(std::move(d4)) {
  check_k3_length(deg2.size());
}

GradedSurfaceClass GradedSurfaceClass::from(MukaiVector const& v) {
  return {Rational(v.r), to_rational(v.c), Rational(v.s)};
}

GradedSurfaceClass GradedSurfaceClass::operator+(GradedSurfaceClass const& rhs) const {
  RationalVector d2(deg2);
  for (std::size_t i = 0; i < d2.size(); ++i) d2[i] += rhs.deg2[i];
  return {deg0 + rhs.deg0, std::move(d2), deg4 + rhs.deg4};
}

MukaiVector to_mukai_vector(GradedSurfaceClass const& x) {
  if (!is_integral(x.deg0) || !is_integral(x.deg4))
    throw IntegralityError("class has fractional degree 0 or 4 component");
  return {to_int(x.deg0), to_integral(x.deg2), to_int(x.deg4)};
}

GradedSurfaceClass dualize(GradedSurfaceClass const& x) {
  RationalVector d2(x.deg2);
  for (auto& a : d2) a = -a;
  return {x.deg0, std::move(d2), x.deg4};
}

GradedSurfaceClass cup(GradedSurfaceClass const& x, GradedSurfaceClass const& y) {
  RationalVector d2(k3_index::kRank);
  for (std::size_t i = 0; i < d2.size(); ++i) d2[i] = x.deg0 * y.deg2[i] + y.deg0 * x.deg2[i];
  return {x.deg0 * y.deg0, std::move(d2), x.deg0 * y.deg4 + x.deg4 * y.deg0 + k3_dot(x.deg2, y.deg2)};
}

GradedSurfaceClass exp_class(Vector const& line) {
  check_k3_length(line.size());
  return {Rational(1), to_rational(line), Rational(k3_dot(line, line), 2)};
}

GradedSurfaceClass sqrt_todd() { return {Rational(1), RationalVector(k3_index::kRank), Rational(1)}; }

GradedSurfaceClass ch_to_chern(GradedSurfaceClass const& ch) {
  if (!is_integral(ch.deg0)) throw IntegralityError("ch_to_chern: rank " + to_string(ch.deg0) + " is not integral");
  return {Rational(1), ch.deg2, k3_dot(ch.deg2, ch.deg2) / 2 - ch.deg4};
}

GradedSurfaceClass ch_to_chern_integral(GradedSurfaceClass const& ch) {
  GradedSurfaceClass out = ch_to_chern(ch);
  for (auto const& a : out.deg2)
    if (!is_integral(a)) throw IntegralityError("c1 is not integral: " + to_string(a));
  if (!is_integral(out.deg4)) throw IntegralityError("c2 is not integral: " + to_string(out.deg4));
  return out;
}

GradedSurfaceClass twist_by_line(GradedSurfaceClass const& x, Vector const& line) {
  return cup(x, exp_class(line));
}

std::string_view to_string(Effectivity e) {
  switch (e) {
    case Effectivity::kEffective:
      return "Effective";
    case Effectivity::kNotEffective:
      return "NotEffective";
    case Effectivity::kIndeterminate:
      return "Indeterminate";
  }
  return "?";
}

Effectivity effectivity_numeric(MukaiVector const& v) {
  if (v.is_zero()) throw PreconditionError("effectivity of the zero vector");
  if (mukai_pairing(v, v) < -2 || v.r < 0) return Effectivity::kNotEffective;
  if (v.r > 0) return Effectivity::kEffective;
  if (!mukai::is_zero(v.c)) return Effectivity::kIndeterminate;
  return v.r + v.s > 0 ? Effectivity::kEffective : Effectivity::kNotEffective;
}

}  // namespace mukai
