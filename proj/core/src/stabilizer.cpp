#include "mukai/stabilizer.hpp"

namespace mukai {

Rational DiscForm::q(Int const& k) const { return reduce_mod(Rational(-k * k, modulus), 2); }

namespace {

LatticePtr vperp_lattice(Int const& m) {
  BlockSpec rest{"diag", {Int(-2 * m)}};
  return build_lattice({BlockSpec{"K3", {}}, rest}, "vperp(" + to_string(m) + ")");
}

Int require_m(Int const& m) {
  if (m < 1) throw PreconditionError("m must be at least 1, got " + to_string(m));
  return m;
}

}  // namespace

VPerpModel::VPerpModel(Int m)
    : m_(require_m(m)),
      lattice_(vperp_lattice(m_)),
      embedding_(mukai_index::kRank, k3_index::kRank + 1),
      smith_disc_(discriminant_group(*lattice_)),
      disc_{2 * m_},
      generator_(k3_index::kRank + 1),
      reference_(k3_block_reference(lattice_)) {
  for (std::size_t i = 0; i < k3_index::kRank; ++i) embedding_(i, i) = 1;
  embedding_(mukai_index::kRankCoord, k3_index::kRank) = 1;
  embedding_(mukai_index::kPointCoord, k3_index::kRank) = m_;
  if (embedding_.transpose() * mukai_lattice()->gram() * embedding_ != lattice_->gram())
    throw VerificationError("v-perp basis does not have Gram K3 + <-2m>");

  Int const two_m = 2 * m_;
  generator_[k3_index::kRank] = Rational(1, two_m);
  if (smith_disc_.elementary_divisors.size() != 1 || smith_disc_.elementary_divisors[0] != two_m)
    throw VerificationError("discriminant group of v-perp is not Z/2m");
  // The Smith generator is a unit multiple u of w/2m; q must match -u^2/2m.
  RationalVector const& raw = smith_disc_.lifts[0];
  std::optional<Int> unit;
  for (Int u = 1; u < two_m; ++u) {
    bool integral = true;
    for (std::size_t i = 0; i < raw.size() && integral; ++i)
      integral = is_integral(raw[i] - Rational(u) * generator_[i]);
    if (integral) {
      unit = u;
      break;
    }
  }
  if (!unit || gcd(*unit, two_m) != 1 || smith_disc_.q_values[0] != disc_.q(*unit))
    throw VerificationError("Smith generator of v-perp disagrees with w/2m");
  if (reduce_mod(lattice_->pair(generator_, generator_), 2) != disc_.q_generator())
    throw VerificationError("q(w/2m) != -1/2m");
}

Vector VPerpModel::to_vperp(MukaiVector const& x) const {
  if (x.s != x.r * m_) throw PreconditionError("vector is not orthogonal to v = (1,0,-m)");
  Vector y(x.c);
  y.push_back(x.r);
  return y;
}

MukaiVector VPerpModel::from_vperp(Vector const& y) const {
  if (y.size() != k3_index::kRank + 1) throw PreconditionError("v-perp vectors have 23 coordinates");
  Int const r = y.back();
  return {r, Vector(y.begin(), y.end() - 1), r * m_};
}

Isometry VPerpModel::restrict(Isometry const& g) const {
  if (g.rank() != mukai_index::kRank) throw PreconditionError("restrict: expected an isometry of the Mukai lattice");
  Vector const gv = g(v().coords());
  if (gv != v().coords() && gv != negate(v().coords()))
    throw PreconditionError("restrict: isometry does not preserve v-perp");
  std::size_t const n = k3_index::kRank + 1;
  IntMatrix out(n, n);
  for (std::size_t j = 0; j < n; ++j)
    out.set_column(j, to_vperp(MukaiVector::from_coords(g(embedding_.column(j)))));
  return Isometry(lattice_, std::move(out));
}

std::optional<Isometry> VPerpModel::extend(Isometry const& g, int sign) const {
  if (g.rank() != k3_index::kRank + 1) throw PreconditionError("extend: expected an isometry of v-perp");
  if (sign != 1 && sign != -1) throw PreconditionError("extend: sign must be +-1");
  std::size_t const n = mukai_index::kRank;
  IntMatrix basis(n, n), image(n, n);
  IntMatrix const moved = embedding_ * g.matrix();
  Vector const vc = v().coords();
  for (std::size_t j = 0; j + 1 < n; ++j) {
    basis.set_column(j, embedding_.column(j));
    image.set_column(j, moved.column(j));
  }
  basis.set_column(n - 1, vc);
  image.set_column(n - 1, sign == 1 ? vc : negate(vc));
  auto const inv = inverse(to_rational(basis));
  if (!inv) throw VerificationError("extend: v-perp and v do not span");
  RationalMatrix const m = to_rational(image) * *inv;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!is_integral(m(i, j))) return std::nullopt;
  return Isometry(mukai_lattice(), to_integral(m));
}

Int disc_action(VPerpModel const& model, Isometry const& g) {
  std::size_t const wi = k3_index::kRank;
  if (g.rank() != wi + 1) throw PreconditionError("disc_action: expected an isometry of v-perp");
  Int const two_m = 2 * model.m();
  for (std::size_t i = 0; i < wi; ++i)
    if (g.matrix()(i, wi) % two_m != 0) throw VerificationError("disc_action: g(w/2m) is not a multiple of w/2m");
  Int const u = mod(g.matrix()(wi, wi), two_m);
  if (mod(u * u, 2 * two_m) != 1 % (2 * two_m)) throw VerificationError("disc_action: u^2 != 1 mod 4m");
  return u;
}

std::string_view to_string(GammaVStatus s) {
  switch (s) {
    case GammaVStatus::kInGammaV:
      return "InGammaV";
    case GammaVStatus::kExtendsSendingVToMinusV:
      return "ExtendsSendingVToMinusV";
    case GammaVStatus::kDoesNotExtend:
      return "DoesNotExtend";
  }
  return "?";
}

GammaVStatus in_gamma_v(VPerpModel const& model, Isometry const& g) {
  Int const u = disc_action(model, g);
  Int const two_m = 2 * model.m();
  if (u == mod(Int(1), two_m)) return GammaVStatus::kInGammaV;
  if (u == mod(Int(-1), two_m)) return GammaVStatus::kExtendsSendingVToMinusV;
  return GammaVStatus::kDoesNotExtend;
}

bool w_membership(VPerpModel const& model, Isometry const& g) {
  if (orientation_char(model.reference(), g) != 0) return false;
  return in_gamma_v(model, g) != GammaVStatus::kDoesNotExtend;
}

std::string_view to_string(Minus2Class c) { return c == Minus2Class::kAPlus ? "APlus" : "AMinus"; }

Minus2Class classify_minus2(VPerpModel const& model, MukaiVector const& v0) {
  if (mukai_pairing(v0, v0) != -2 || !model.contains(v0))
    throw PreconditionError("classify_minus2: not a -2 vector of v-perp");
  for (auto const& x : v0.c)
    if (x % 2 != 0) return Minus2Class::kAMinus;
  return Minus2Class::kAPlus;
}

std::optional<MukaiVector> aplus_witness(Int const& m) {
  require_m(m);
  if (mod(m, 4) != 1) return std::nullopt;
  Vector l0(k3_index::kRank);
  l0[k3_index::kU1] = 1;
  l0[k3_index::kU1 + 1] = (m - 1) / 4;
  MukaiVector v0{1, scale(2, l0), m};
  VPerpModel const model(m);
  if (mukai_pairing(v0, v0) != -2 || classify_minus2(model, v0) != Minus2Class::kAPlus)
    throw VerificationError("aplus_witness: construction fails");
  return v0;
}

int distinct_prime_count(std::int64_t m) {
  int count = 0;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    ++count;
    while (m % p == 0) m /= p;
  }
  if (m > 1) ++count;
  return count;
}

DiscOrder disc_group_order(std::int64_t m) {
  if (m < 1) throw PreconditionError("disc_group_order: m must be at least 1");
  auto const four_m = static_cast<__int128>(4) * m;
  std::int64_t count = 0;
  for (std::int64_t u = 0; u < 2 * m; ++u)
    if ((static_cast<__int128>(u) * u) % four_m == 1) ++count;
  DiscOrder out{Int(count), distinct_prime_count(m), Int(count)};
  if (out.order != (Int(1) << out.rho)) throw VerificationError("disc_group_order: order != 2^rho");
  return out;
}

}  // namespace mukai
