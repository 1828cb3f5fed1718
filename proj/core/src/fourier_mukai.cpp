#include "mukai/fourier_mukai.hpp"

#include "mukai/embedding.hpp"

namespace mukai {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::kShift:
      return "Shift";
    case Provenance::kSpherical:
      return "Spherical";
    case Provenance::kSigmaU0:
      return "SigmaU0";
    case Provenance::kEllipticPhi:
      return "EllipticPhi";
    case Provenance::kComposite:
      return "Composite";
  }
  return "?";
}

FMIsometry FMIsometry::operator*(FMIsometry const& rhs) const {
  return {isometry * rhs.isometry, Provenance::kComposite, std::nullopt};
}

FMIsometry spherical_reflection(MukaiVector const& v0) {
  if (mukai_pairing(v0, v0) != -2) throw PreconditionError("spherical_reflection: v0 must be a -2 vector");
  return {tau(mukai_lattice(), v0.coords()), Provenance::kSpherical, v0};
}

FMIsometry shift_isometry() { return {Isometry::minus_identity(mukai_lattice()), Provenance::kShift, std::nullopt}; }

FMIsometry sigma_u0() {
  // (u0,u0) = 2, so w - (w,u0) u0 is the true reflection in u0.
  return {true_reflection(mukai_lattice(), mukai_vector(1, -1).coords()), Provenance::kSigmaU0, std::nullopt};
}

Verification verify_sigma_tau_duality() {
  Verification out;
  IntMatrix const sigma = sigma_u0().isometry.matrix();
  IntMatrix const t = spherical_reflection(mukai_vector(1, 1)).isometry.matrix();
  IntMatrix const d = duality_isometry().matrix();
  Vector const one = mukai_vector(1, 0).coords();
  out.add("tau_v0(1,0,0) = (0,0,-1)", t * one == mukai_vector(0, -1).coords());
  out.add("sigma_u0(1,0,0) = (0,0,1)", sigma * one == mukai_vector(0, 1).coords());
  out.add("-(sigma_u0 tau_v0)(1,0,0) = (1,0,0)", -(sigma * t) * one == one);
  out.add("-(sigma_u0 tau_v0) = D", -(sigma * t) == d);
  out.add("sigma_u0 tau_v0 = tau_v0 sigma_u0", sigma * t == t * sigma);
  return out;
}

IntMatrix phi_lambda_matrix() {
  return IntMatrix{{0, -1, 0, 0}, {1, 0, 0, 0}, {1, -1, 0, -1}, {1, -1, 1, 0}};
}

EllipticPhi elliptic_phi(Int const& n) {
  if (n < 2) throw PreconditionError("elliptic_phi: n must be at least 2");
  auto const k3 = k3_lattice();
  auto const mukai = mukai_lattice();
  Vector f(k3_index::kRank);
  f[k3_index::kU3] = 1;
  Vector const sigma = embed_rank2(*k3, f, {0, 1, -2});
  Vector const beta = embed_rank2(*k3, f, {0, 0, 2 * n - 4});

  Verification ver;
  ver.add("sigma^2 = -2, f^2 = 0, sigma.f = 1", k3->norm(sigma) == -2 && k3->norm(f) == 0 && k3->pair(sigma, f) == 1);
  if (!ver.ok()) throw PreconditionError("elliptic_phi: designated classes have the wrong Gram");

  auto lift = [](Vector const& c) { return MukaiVector{0, c, 0}.coords(); };
  std::vector<Vector> const lambda{mukai_vector(1, 0).coords(), lift(sigma), lift(f), mukai_vector(0, 1).coords()};
  IntMatrix const p = phi_lambda_matrix();
  IntMatrix lambda_gram(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) lambda_gram(i, j) = mukai->pair(lambda[i], lambda[j]);
  ver.add("matrix preserves the Gram of Lambda", p.transpose() * lambda_gram * p == lambda_gram);

  // Solve M B = B' with B = [Lambda | Lambda-perp] and B' = [phi(Lambda) | -Lambda-perp].
  Complement const perp = orthogonal_complement(*mukai, lambda);
  std::size_t const rank = mukai->rank();
  IntMatrix basis(rank, rank), image(rank, rank);
  for (std::size_t j = 0; j < 4; ++j) {
    basis.set_column(j, lambda[j]);
    Vector img(rank);
    for (std::size_t i = 0; i < 4; ++i) img = add(img, scale(p(i, j), lambda[i]));
    image.set_column(j, img);
  }
  if (perp.basis.cols() != rank - 4) throw VerificationError("elliptic_phi: Lambda-perp has the wrong rank");
  for (std::size_t j = 0; j < perp.basis.cols(); ++j) {
    basis.set_column(4 + j, perp.basis.column(j));
    image.set_column(4 + j, negate(perp.basis.column(j)));
  }
  auto const inv = inverse(to_rational(basis));
  if (!inv) throw VerificationError("elliptic_phi: Lambda + Lambda-perp is degenerate");
  Isometry const phi(mukai, to_integral(to_rational(image) * *inv));

  Vector alpha = subtract(add(sigma, scale(2 - n, f)), beta);
  ver.add("beta is orthogonal to sigma and f, beta^2 = 2n-4",
          k3->pair(beta, sigma) == 0 && k3->pair(beta, f) == 0 && k3->norm(beta) == 2 * n - 4);
  MukaiVector const hilb{1, Vector(k3_index::kRank), 1 - n};
  MukaiVector const target{0, add(sigma, scale(n, f)), 1};
  ver.add("phi(1,0,1-n) = (0,sigma+nf,1)", phi(hilb.coords()) == target.coords());
  MukaiVector const x{1, subtract(beta, f), n - 1};
  MukaiVector const y{0, alpha, 0};
  ver.add("phi(1,beta-f,n-1) = (0,alpha,0)", phi(x.coords()) == y.coords());
  ver.add("(1,beta-f,n-1) and (0,alpha,0) are -2 vectors", mukai_pairing(x, x) == -2 && mukai_pairing(y, y) == -2);
  Isometry const g = true_reflection(mukai, x.coords());
  Isometry const rho = true_reflection(mukai, y.coords());
  ver.add("phi g phi^-1 = rho", phi * g * phi.inverse() == rho);

  return {{phi, Provenance::kEllipticPhi, std::nullopt}, n, sigma, f, beta, std::move(alpha), std::move(ver)};
}

Isometry mon_twist(VPerpModel const& model, Isometry const& g) {
  Vector const v = model.v().coords();
  if (g.rank() != mukai_index::kRank || g(v) != v) throw PreconditionError("mon_twist: g must fix v");
  Isometry const twisted = covariance(g) == 1 ? g.negated() : g;
  Isometry out = model.restrict(twisted);
  if (orientation_char(model.reference(), out) != 0)
    throw VerificationError("mon_twist: image is not orientation preserving");
  return out;
}

}  // namespace mukai
