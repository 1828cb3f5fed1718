#include "mukai/embedding.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <string>

#include "mukai/normal_form.hpp"

namespace mukai {

int default_search_radius() {
  if (char const* env = std::getenv("MUKAI_SEARCH_RADIUS")) {
    try {
      int const r = std::stoi(env);
      if (r > 0) return r;
    } catch (std::exception const&) {
    }
  }
  return 64;
}

bool is_primitive_pair(Vector const& a, Vector const& b) {
  if (a.size() != b.size()) throw PreconditionError("is_primitive_pair: dimension mismatch");
  IntMatrix m = IntMatrix::from_columns({a, b}, a.size());
  auto const divisors = smith_normal_form(m).elementary_divisors();
  return divisors.size() == 2 && divisors[0] == 1 && divisors[1] == 1;
}

std::optional<Vector> dual_unit(Lattice const& lattice, Vector const& x) {
  Vector const g = lattice.dual_coordinates(x);
  Vector y(g.size());
  Int d = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] == 0) continue;
    auto const eg = extended_gcd(d, g[i]);
    for (auto& c : y) c *= eg.x;
    y[i] += eg.y;
    d = eg.g;
    if (d == 1) break;
  }
  if (d != 1) return std::nullopt;
  return y;
}

namespace {

struct Plane {
  std::size_t e;
  std::size_t f;
};

bool satisfies(Lattice const& l, Vector const& l1, Vector const& l2, Rank2Gram const& t) {
  return l.pair(l1, l2) == t.b && l.norm(l2) == t.norm2 && is_primitive_pair(l1, l2);
}

std::optional<Vector> same_plane(Lattice const& l, Vector const& l1, Rank2Gram const& t) {
  if (t.norm1 != 0 || t.b == 0) return std::nullopt;
  auto const y0 = dual_unit(l, l1);
  if (!y0) return std::nullopt;
  Int const num = t.norm2 - t.b * t.b * l.norm(*y0);
  if (num % (2 * t.b) != 0) return std::nullopt;
  Vector l2 = add(scale(t.b, *y0), scale(num / (2 * t.b), l1));
  if (!satisfies(l, l1, l2, t)) return std::nullopt;
  return l2;
}

std::optional<Vector> disjoint_plane(Lattice const& l, Vector const& l1, Rank2Gram const& t) {
  auto const y0 = dual_unit(l, l1);
  if (!y0) return std::nullopt;
  Int const num = t.norm2 - t.b * t.b * l.norm(*y0);
  if (num % 2 != 0) return std::nullopt;
  for (auto const& [e, f] : l.hyperbolic_planes()) {
    if (l1[e] != 0 || l1[f] != 0 || (*y0)[e] != 0 || (*y0)[f] != 0) continue;
    Vector l2 = scale(t.b, *y0);
    l2[e] += 1;
    l2[f] += num / 2;
    if (satisfies(l, l1, l2, t)) return l2;
  }
  return std::nullopt;
}

// E(x) = x + (e,x) a - (a,x) e - (a,a)/2 (e,x) e for isotropic e and a _|_ e.
IntMatrix eichler(Lattice const& l, Vector const& e, Vector const& a) {
  std::size_t const n = l.rank();
  Vector const ge = l.dual_coordinates(e);
  Vector const ga = l.dual_coordinates(a);
  Int const half = l.norm(a) / 2;
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) += a[i] * ge[j] - e[i] * ga[j] - half * e[i] * ge[j];
  return m;
}

// The 2x2 matrix [[c_e1, c_e2], [-c_f2, c_f1]] has determinant x^2/2 on
// U + U, so X -> A X B with det(A) det(B) = 1 is an isometry.
IntMatrix plane_pair_isometry(std::size_t n, Plane p1, Plane p2, IntMatrix const& a, IntMatrix const& b) {
  std::array<std::size_t, 4> const idx{p1.e, p1.f, p2.e, p2.f};
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t k = 0; k < 4; ++k) {
    Vector c(4);
    c[k] = 1;
    IntMatrix x{{c[0], c[2]}, {-c[3], c[1]}};
    IntMatrix const y = a * x * b;
    Vector const image{y(0, 0), y(1, 1), y(0, 1), -y(1, 0)};
    for (std::size_t i = 0; i < 4; ++i) m(idx[i], idx[k]) = image[i];
  }
  return m;
}

// Brings the U1 + U2 part of x to g e1 + h f1 and returns the isometry used.
IntMatrix diagonalize_planes(Lattice const& l, Vector const& x, Plane p1, Plane p2) {
  IntMatrix const xm{{x[p1.e], x[p2.e]}, {-x[p2.f], x[p1.f]}};
  SmithForm snf = smith_normal_form(xm);
  if (determinant(snf.left) * determinant(snf.right) < 0) {
    for (std::size_t j = 0; j < 2; ++j) snf.left(1, j) = -snf.left(1, j);
  }
  return plane_pair_isometry(l.rank(), p1, p2, snf.left, snf.right);
}

std::optional<Vector> standardized(Lattice const& l, Vector const& l1, Rank2Gram const& t) {
  auto const planes = l.hyperbolic_planes();
  if (planes.size() < 2 || !l.is_even() || !l.is_nondegenerate() || t.norm2 % 2 != 0) return std::nullopt;
  Plane const p1{planes[0].first, planes[0].second};
  Plane const p2{planes[1].first, planes[1].second};
  std::size_t const n = l.rank();
  auto in_planes = [&](std::size_t i) { return i == p1.e || i == p1.f || i == p2.e || i == p2.f; };
  auto rest_of = [&](Vector const& x) {
    Vector r(x);
    for (std::size_t i = 0; i < n; ++i)
      if (in_planes(i)) r[i] = 0;
    return r;
  };

  IntMatrix total = diagonalize_planes(l, l1, p1, p2);
  Vector x = total * l1;
  if (x[p1.e] != 1) {
    Vector const r = rest_of(x);
    auto a = dual_unit(l, r);
    Int const g = x[p1.e];
    if (!a) {
      // (., r) reaches only multiples of its content; that must be prime to g.
      Vector const gr = l.dual_coordinates(r);
      Int const k = content(gr);
      if (k == 0 || gcd(k, g) != 1) return std::nullopt;
      Vector scaled(gr.size());
      for (std::size_t i = 0; i < n; ++i) scaled[i] = gr[i] / k;
      // Solve (a, r) = k inside the rest: a = G^-1 applied coordinatewise is
      // not integral in general, so use the Bezout vector of the functional.
      Vector y(n);
      Int d = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (scaled[i] == 0) continue;
        auto const eg = extended_gcd(d, scaled[i]);
        for (auto& c : y) c *= eg.x;
        y[i] += eg.y;
        d = eg.g;
      }
      a = rest_of(y);
      if (l.pair(*a, r) != k) return std::nullopt;
    } else {
      a = rest_of(*a);
      if (l.pair(*a, r) != 1) return std::nullopt;
    }
    IntMatrix const e = eichler(l, unit_vector(n, p2.f), *a);
    total = e * total;
    x = total * l1;
    IntMatrix const again = diagonalize_planes(l, x, p1, p2);
    total = again * total;
    x = total * l1;
    if (x[p1.e] != 1) return std::nullopt;
  }
  Vector const r = rest_of(x);
  if (!is_zero(r)) {
    total = eichler(l, unit_vector(n, p1.f), negate(r)) * total;
    x = total * l1;
  }
  if (x[p1.e] != 1 || x[p1.f] * 2 != t.norm1 || !is_zero(rest_of(x)) || x[p2.e] != 0 || x[p2.f] != 0)
    throw VerificationError("embed_rank2: standardization did not reach e1 + a f1");
  Vector image(n);
  image[p1.f] = t.b;
  image[p2.e] = 1;
  image[p2.f] = t.norm2 / 2;
  Vector l2 = isometry_inverse(l, total) * image;
  if (!satisfies(l, l1, l2, t)) throw VerificationError("embed_rank2: standardized witness fails");
  return l2;
}

std::optional<Vector> enumerate(Lattice const& l, Vector const& l1, Rank2Gram const& t, int radius) {
  std::vector<std::size_t> coords;
  for (auto const& [e, f] : l.hyperbolic_planes()) {
    coords.push_back(e);
    coords.push_back(f);
  }
  for (std::size_t i = 0; i < l.rank(); ++i)
    if (std::find(coords.begin(), coords.end(), i) == coords.end()) coords.push_back(i);
  coords.resize(std::min<std::size_t>(4, coords.size()));
  std::size_t const k = coords.size();

  Vector const g1 = l.dual_coordinates(l1);
  std::vector<std::int64_t> lin(k);
  std::vector<std::vector<std::int64_t>> quad(k, std::vector<std::int64_t>(k));
  for (std::size_t i = 0; i < k; ++i) {
    if (!fits_int64(g1[coords[i]])) return std::nullopt;
    lin[i] = static_cast<std::int64_t>(g1[coords[i]]);
    for (std::size_t j = 0; j < k; ++j) quad[i][j] = static_cast<std::int64_t>(l.gram()(coords[i], coords[j]));
  }
  if (!fits_int64(t.b) || !fits_int64(t.norm2)) return std::nullopt;
  auto const b = static_cast<__int128>(static_cast<std::int64_t>(t.b));
  auto const norm2 = static_cast<__int128>(static_cast<std::int64_t>(t.norm2));

  std::vector<std::int64_t> x(k);
  auto test = [&]() -> std::optional<Vector> {
    __int128 p = 0;
    for (std::size_t i = 0; i < k; ++i) p += static_cast<__int128>(lin[i]) * x[i];
    if (p != b) return std::nullopt;
    __int128 q = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) q += static_cast<__int128>(quad[i][j]) * x[i] * x[j];
    if (q != norm2) return std::nullopt;
    Vector l2(l.rank());
    for (std::size_t i = 0; i < k; ++i) l2[coords[i]] = x[i];
    if (!is_primitive_pair(l1, l2)) return std::nullopt;
    return l2;
  };
  // Shells of growing max-norm; inside a shell, the first coordinate of
  // absolute value s is at position p.
  for (std::int64_t s = 1; s <= radius; ++s) {
    for (std::size_t p = 0; p < k; ++p) {
      for (std::int64_t sign : {-1, 1}) {
        // odometer over x[0..p) in [-(s-1), s-1] and x(p..k) in [-s, s]
        for (std::size_t i = 0; i < k; ++i) x[i] = i < p ? -(s - 1) : -s;
        x[p] = sign * s;
        while (true) {
          if (auto hit = test()) return hit;
          std::size_t i = 0;
          for (; i < k; ++i) {
            if (i == p) continue;
            std::int64_t const hi = i < p ? s - 1 : s;
            if (x[i] < hi) {
              ++x[i];
              break;
            }
            x[i] = i < p ? -(s - 1) : -s;
          }
          if (i == k) break;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Vector embed_rank2(Lattice const& lattice, Vector const& l1, Rank2Gram const& target, int radius) {
  if (l1.size() != lattice.rank()) throw PreconditionError("embed_rank2: dimension mismatch");
  if (!is_primitive(lattice, l1)) throw PreconditionError("embed_rank2: l1 must be primitive");
  if (lattice.norm(l1) != target.norm1)
    throw PreconditionError("embed_rank2: (l1,l1) = " + to_string(lattice.norm(l1)) + " but target says " +
                            to_string(target.norm1));
  if (auto l2 = same_plane(lattice, l1, target)) return *l2;
  if (auto l2 = disjoint_plane(lattice, l1, target)) return *l2;
  if (auto l2 = standardized(lattice, l1, target)) return *l2;
  if (auto l2 = enumerate(lattice, l1, target, radius)) return *l2;
  throw WitnessNotFound("embed_rank2: no witness for Gram [[" + to_string(target.norm1) + "," +
                            to_string(target.b) + "],[" + to_string(target.b) + "," + to_string(target.norm2) + "]]",
                        radius);
}

SplitPair split_even_rank(Int const& m, Vector const& l0, Int const& r, int radius) {
  auto const k3 = k3_lattice();
  if (m < 1) throw PreconditionError("split_even_rank: m must be positive");
  if (r < 2 || r % 2 != 0) throw PreconditionError("split_even_rank: r must be even and at least 2");
  Int const r2m = r * r * m;
  if (k3->norm(l0) != 2 * r2m - 2) throw PreconditionError("split_even_rank: L0^2 must be 2 r^2 m - 2");
  Int const i = content(l0);
  Vector prim(l0.size());
  for (std::size_t k = 0; k < l0.size(); ++k) prim[k] = l0[k] / i;
  Int const d = (r2m - 1) / (i * i);
  if (d * i * i != r2m - 1) throw VerificationError("split_even_rank: i^2 does not divide r^2 m - 1");
  Vector l1 = embed_rank2(*k3, prim, {2 * d, i * d, (r2m - 4) / 2}, radius);
  Vector l2 = subtract(l0, l1);
  Int const a = r / 2;
  if (k3->norm(l1) != 2 * a * a * m - 2 || k3->norm(l2) != 2 * a * a * m - 2 || k3->pair(l1, l2) != 1 + 2 * a * a * m ||
      content(l1) != 1 || content(l2) != 1)
    throw VerificationError("split_even_rank: conditions fail");
  return {std::move(l1), std::move(l2)};
}

Vector extend_by_one(Int const& m, Vector const& l1, Int const& a, int radius) {
  auto const k3 = k3_lattice();
  if (m < 1 || a < 1) throw PreconditionError("extend_by_one: m and a must be positive");
  if (k3->norm(l1) != 2 * a * a * m - 2) throw PreconditionError("extend_by_one: L1^2 must be 2 a^2 m - 2");
  if (!is_primitive(*k3, l1)) throw PreconditionError("extend_by_one: L1 must be primitive");
  return embed_rank2(*k3, l1, {2 * a * a * m - 2, 1 + 2 * a * m, 2 * m - 2}, radius);
}

}  // namespace mukai
