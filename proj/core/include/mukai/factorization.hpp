#pragma once

#include <variant>

#include "mukai/embedding.hpp"
#include "mukai/stabilizer.hpp"
#include "mukai/verification.hpp"

namespace mukai {

// A Gamma_0 element: an isometry of the K3 block, extended by the identity on
// span{(1,0,0), (0,0,1)}.
struct Gamma0Letter {
  IntMatrix k3_matrix;  // 22 x 22
  bool operator==(Gamma0Letter const&) const = default;
};

// tau_{v0} for a -2 vector v0 in v-perp.
struct TauLetter {
  MukaiVector v0;
  bool operator==(TauLetter const&) const = default;
};

using Letter = std::variant<Gamma0Letter, TauLetter>;

IntMatrix letter_matrix(Letter const& letter);  // 24 x 24
IntMatrix extend_k3_matrix(IntMatrix const& k3_matrix);

// Product letters[0] * letters[1] * ... (leftmost applied last).
struct GeneratorWord {
  Int m;
  std::vector<Letter> letters;

  IntMatrix product() const;
  std::size_t tau_count() const;
};

// Rejects letters that violate the invariants: Gamma0 matrices must be K3
// isometries, Tau vectors must be -2 vectors in v-perp.
void validate(GeneratorWord const& word);

struct FactorOptions {
  bool normalize = false;
  int radius = default_search_radius();
};

// Writes g in Gamma_v as a generator word. Throws NotInGammaV unless g is an
// isometry fixing v, WitnessNotFound when an embedding search gives up.
GeneratorWord factor(VPerpModel const& model, Isometry const& g, FactorOptions const& options = {});

// Rewrites every Tau letter into letters of the form tau_{(1,-L,m)} with L
// primitive (and Gamma0 letters for rank 0).
GeneratorWord normalize(GeneratorWord const& word, int radius = default_search_radius());

// True when every Tau letter has rank 1 and a primitive middle component.
bool is_normalized(GeneratorWord const& word);

struct Sym3Report {
  Verification verification;
  MukaiVector v0;
};
// v1 = (a,-L1,am), v2 = (b,-L2,bm) with (v1,v2) = 1.
Sym3Report sym3_triple(Int const& m, MukaiVector const& v1, MukaiVector const& v2);

// Random generators of Gamma_v: Gamma0 letters are true reflections in random
// +-2 vectors of the K3 lattice; Tau letters are tau_{(1,-L,m)} with random
// primitive L of square 2m - 2.
class GeneratorFamily {
 public:
  explicit GeneratorFamily(Int m) : m_(std::move(m)) {}

  Int const& m() const { return m_; }
  // tau_{(1,-L,m)} for L = e1 + (m-1) f1.
  TauLetter canonical_tau() const;
  Gamma0Letter sample_gamma0(Rng& rng, int norm) const;  // norm = +-2
  Gamma0Letter sample_gamma0(Rng& rng) const;
  TauLetter sample_tau(Rng& rng) const;
  // tau_{(a,-L,am)} with random primitive L of square 2a^2 m - 2, a != 0.
  TauLetter sample_tau_of_rank(Rng& rng, Int const& a) const;
  Letter sample(Rng& rng) const;
  GeneratorWord sample_word(Rng& rng, std::size_t length) const;

 private:
  Int m_;
};

}  // namespace mukai
