#include "mukai/sampling.hpp"

namespace mukai {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw PreconditionError("Rng::uniform: empty range");
  auto const span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  // Rejection sampling keeps the draw unbiased.
  std::uint64_t const limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

Vector random_vector(std::size_t rank, Rng& rng, int spread) {
  Vector v(rank);
  for (auto& x : v) x = rng.uniform(-spread, spread);
  return v;
}

Vector random_vector_with_norm(Lattice const& lattice, Int const& norm, Rng& rng, int spread) {
  auto const planes = lattice.hyperbolic_planes();
  if (planes.empty()) throw PreconditionError("random_vector_with_norm: no hyperbolic plane");
  if (!lattice.is_even() || norm % 2 != 0) throw PreconditionError("random_vector_with_norm: needs even norms");
  auto const [e, f] = planes[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(planes.size()) - 1))];
  Vector x(lattice.rank());
  // Sparse support keeps the entries of products manageable.
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i == e || i == f) continue;
    if (rng.uniform(0, 3) == 0) x[i] = rng.uniform(-spread, spread);
  }
  Int const rest = lattice.norm(x);
  x[e] = 1;
  x[f] = (norm - rest) / 2;
  return x;
}

}  // namespace mukai
