#include "mukai/factorization.hpp"

#include <map>
#include <set>

namespace mukai {
namespace {

constexpr std::size_t kK3 = k3_index::kRank;
constexpr std::size_t kMukai = mukai_index::kRank;

IntMatrix k3_block(IntMatrix const& m) {
  IntMatrix out(kK3, kK3);
  for (std::size_t i = 0; i < kK3; ++i)
    for (std::size_t j = 0; j < kK3; ++j) out(i, j) = m(i, j);
  return out;
}

// m <- m * tau_u, as a rank-one update.
void apply_tau_right(Lattice const& lattice, Vector const& u, IntMatrix& m) {
  // M tau_u = M + (M u) (G u)^T
  Vector const mu = m * u;
  Vector const gu = lattice.dual_coordinates(u);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (mu[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (gu[j] != 0) m(i, j) += mu[i] * gu[j];
  }
}

MukaiVector checked_minus2(VPerpModel const& model, MukaiVector const& u, char const* where) {
  if (mukai_pairing(u, u) != -2 || !model.contains(u))
    throw VerificationError(std::string(where) + ": constructed vector is not a -2 vector of v-perp");
  return u;
}

Vector divide(Vector const& v, Int const& k) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / k;
  return out;
}

}  // namespace

IntMatrix extend_k3_matrix(IntMatrix const& k3_matrix) {
  if (k3_matrix.rows() != kK3 || k3_matrix.cols() != kK3) throw PreconditionError("Gamma0 letter needs a 22x22 matrix");
  IntMatrix out = IntMatrix::identity(kMukai);
  for (std::size_t i = 0; i < kK3; ++i)
    for (std::size_t j = 0; j < kK3; ++j) out(i, j) = k3_matrix(i, j);
  return out;
}

IntMatrix letter_matrix(Letter const& letter) {
  if (auto const* g = std::get_if<Gamma0Letter>(&letter)) return extend_k3_matrix(g->k3_matrix);
  IntMatrix m = IntMatrix::identity(kMukai);
  apply_tau_left(*mukai_lattice(), std::get<TauLetter>(letter).v0.coords(), m);
  return m;
}

IntMatrix GeneratorWord::product() const {
  IntMatrix p = IntMatrix::identity(kMukai);
  auto const& l = *mukai_lattice();
  for (auto const& letter : letters) {
    if (auto const* t = std::get_if<TauLetter>(&letter))
      apply_tau_right(l, t->v0.coords(), p);
    else
      p = p * letter_matrix(letter);
  }
  return p;
}

std::size_t GeneratorWord::tau_count() const {
  std::size_t n = 0;
  for (auto const& l : letters) n += std::holds_alternative<TauLetter>(l);
  return n;
}

void validate(GeneratorWord const& word) {
  VPerpModel const model(word.m);
  for (auto const& letter : word.letters) {
    if (auto const* g = std::get_if<Gamma0Letter>(&letter)) {
      if (!check_isometry(*k3_lattice(), g->k3_matrix).is_isometry)
        throw PreconditionError("Gamma0 letter is not an isometry of the K3 lattice");
    } else {
      auto const& v0 = std::get<TauLetter>(letter).v0;
      if (mukai_pairing(v0, v0) != -2 || !model.contains(v0))
        throw PreconditionError("Tau letter is not a -2 vector of v-perp");
    }
  }
}

GeneratorWord factor(VPerpModel const& model, Isometry const& g, FactorOptions const& options) {
  if (g.rank() != kMukai || g.lattice()->gram() != mukai_lattice()->gram())
    throw NotInGammaV("factor: not an isometry of the Mukai lattice");
  Int const& m = model.m();
  Vector const v = model.v().coords();
  Vector const w = model.w().coords();
  if (g(v) != v) throw NotInGammaV("factor: isometry does not fix v = (1,0,-m)");

  auto const k3 = k3_lattice();
  auto const& mukai = *mukai_lattice();
  Int const two_m = 2 * m;
  GeneratorWord word{m, {}};
  IntMatrix cur = g.matrix();
  auto apply = [&](MukaiVector const& u) {
    apply_tau_left(mukai, u.coords(), cur);
    // tau is even in u; report the representative of positive rank.
    word.letters.push_back(TauLetter{u.r < 0 ? -u : u});
  };

  // Each pass either terminates or moves g(w) closer to w; four passes suffice.
  for (int pass = 0;; ++pass) {
    if (pass > 8) throw VerificationError("factor: reduction did not terminate");
    Vector const gw = cur * w;
    if (gw == w) {
      IntMatrix const block = k3_block(cur);
      if (extend_k3_matrix(block) != cur) throw VerificationError("factor: fixed part is not block diagonal");
      if (!block.is_identity()) word.letters.push_back(Gamma0Letter{block});
      break;
    }
    if (gw == negate(w)) {
      if (m != 1) throw VerificationError("factor: g(w) = -w with m != 1");
      Vector e1(kK3);
      e1[k3_index::kU1] = 1;
      apply(checked_minus2(model, {1, e1, 1}, "factor"));
      continue;
    }
    MukaiVector const image = MukaiVector::from_coords(gw);
    Int const k = content(image.c);
    if (k == 0 || k % two_m != 0 || (image.r - 1) % two_m != 0)
      throw VerificationError("factor: g(w) is not of the form (1,0,m) + 2m(rho, cL, m rho)");
    Vector const line = divide(image.c, k);
    Int const c = k / two_m;
    Int const rho = (image.r - 1) / two_m;
    Int const line_sq = k3->norm(line);
    if (c != 1) {
      auto const eg = extended_gcd(c, image.r);
      if (eg.g != 1) throw VerificationError("factor: gcd(c, r) != 1");
      // b c - a r = 1 with |a| minimal.
      Int a = mod(-eg.y, c);
      if (abs(a - c) < a) a -= c;
      Int const b = (1 + a * image.r) / c;
      Vector const big_a = embed_rank2(*k3, line, {line_sq, b, 2 * a * a * m - 2}, options.radius);
      apply(checked_minus2(model, {a, big_a, a * m}, "factor"));
    } else if (rho == -1) {
      apply(checked_minus2(model, {-1, line, -m}, "factor"));
    } else {
      Vector const big_a = embed_rank2(*k3, line, {line_sq, two_m * rho - rho, two_m - 2}, options.radius);
      apply(checked_minus2(model, {1, big_a, m}, "factor"));
    }
  }
  if (word.product() != g.matrix()) throw VerificationError("factor: word product differs from g");
  if (options.normalize) return normalize(word, options.radius);
  return word;
}

namespace {

class Normalizer {
 public:
  Normalizer(VPerpModel const& model, int radius) : model_(model), radius_(radius) {}

  std::vector<Letter> const& expand(MukaiVector v0, int depth = 0) {
    if (v0.r < 0) v0 = -v0;
    Vector const key = v0.coords();
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    if (depth > 256) throw VerificationError("normalize: recursion too deep");
    std::vector<Letter> out;
    Int const& m = model_.m();
    auto const k3 = k3_lattice();
    Vector const l0 = negate(v0.c);  // v0 = (r, -L0, rm)
    auto append = [&](std::vector<Letter> const& part) { out.insert(out.end(), part.begin(), part.end()); };

    if (v0.r == 0) {
      out.push_back(Gamma0Letter{k3_block(letter_matrix(TauLetter{v0}))});
    } else if (content(l0) != 1 && v0.r % 2 != 0) {
      // Odd rank with a divisible class: refactor tau_{v0} itself, whose word
      // only uses primitive classes.
      Isometry const t(mukai_lattice(), letter_matrix(TauLetter{v0}));
      GeneratorWord const sub = factor(model_, t, {false, radius_});
      for (auto const& letter : sub.letters) {
        if (auto const* tl = std::get_if<TauLetter>(&letter)) {
          if (tl->v0 == v0 || tl->v0 == -v0) throw VerificationError("normalize: refactoring is stuck");
          append(expand(tl->v0, depth + 1));
        } else {
          out.push_back(letter);
        }
      }
    } else if (v0.r == 1) {
      out.push_back(TauLetter{v0});
    } else if (v0.r % 2 == 0) {
      SplitPair const split = split_even_rank(m, l0, v0.r, radius_);
      Int const a = v0.r / 2;
      MukaiVector const v1{a, negate(split.l1), a * m};
      MukaiVector const v2{a, negate(split.l2), a * m};
      if (v1 + v2 != v0) throw VerificationError("normalize: split does not add up");
      // tau_{v0} = tau_{v1} tau_{v2} tau_{v1}
      std::vector<Letter> const first = expand(v1, depth + 1);
      append(first);
      append(expand(v2, depth + 1));
      append(first);
    } else {
      Vector const l2 = extend_by_one(m, l0, v0.r, radius_);
      MukaiVector const v2{1, negate(l2), m};
      MukaiVector const w0 = v0 + v2;
      if (mukai_pairing(v0, v2) != 1 || mukai_pairing(w0, w0) != -2)
        throw VerificationError("normalize: extension by one fails");
      // tau_{v0} = tau_{v2} tau_{w0} tau_{v2}
      std::vector<Letter> const side = expand(v2, depth + 1);
      append(side);
      append(expand(w0, depth + 1));
      append(side);
    }
    return cache_.emplace(key, std::move(out)).first->second;
  }

 private:
  VPerpModel const& model_;
  int radius_;
  std::map<Vector, std::vector<Letter>> cache_;
};

}  // namespace

GeneratorWord normalize(GeneratorWord const& word, int radius) {
  VPerpModel const model(word.m);
  Normalizer normalizer(model, radius);
  GeneratorWord out{word.m, {}};
  for (auto const& letter : word.letters) {
    if (auto const* t = std::get_if<TauLetter>(&letter)) {
      auto const& part = normalizer.expand(t->v0);
      out.letters.insert(out.letters.end(), part.begin(), part.end());
    } else {
      out.letters.push_back(letter);
    }
  }
  if (out.product() != word.product()) throw VerificationError("normalize: product changed");
  return out;
}

bool is_normalized(GeneratorWord const& word) {
  for (auto const& letter : word.letters) {
    auto const* t = std::get_if<TauLetter>(&letter);
    if (!t) continue;
    if (t->v0.r != 1 || content(t->v0.c) != 1 || t->v0.s != word.m) return false;
  }
  return true;
}

Sym3Report sym3_triple(Int const& m, MukaiVector const& v1, MukaiVector const& v2) {
  VPerpModel const model(m);
  for (auto const* x : {&v1, &v2})
    if (mukai_pairing(*x, *x) != -2 || !model.contains(*x))
      throw PreconditionError("sym3_triple: inputs must be -2 vectors of v-perp");
  if (mukai_pairing(v1, v2) != 1) throw PreconditionError("sym3_triple: (v1,v2) must be 1");

  auto const lattice = mukai_lattice();
  MukaiVector const v0 = v1 + v2;
  Sym3Report report{{}, v0};
  auto& ver = report.verification;
  ver.add("(v1,v2) = 1", true);
  ver.add("v0 = v1 + v2 is a -2 vector", mukai_pairing(v0, v0) == -2);
  ver.add("v0 is orthogonal to v", model.contains(v0));
  IntMatrix const t0 = letter_matrix(TauLetter{v0});
  IntMatrix const t1 = letter_matrix(TauLetter{v1});
  IntMatrix const t2 = letter_matrix(TauLetter{v2});
  ver.add("tau_v1(v2) = v0", t1 * v2.coords() == v0.coords());
  ver.add("tau_v2(v1) = v0", t2 * v1.coords() == v0.coords());
  ver.add("tau_v0 = tau_v1 tau_v2 tau_v1", t1 * t2 * t1 == t0);
  ver.add("tau_v0 = tau_v2 tau_v1 tau_v2", t2 * t1 * t2 == t0);
  Vector const vc = model.v().coords();
  ver.add("tau_v0, tau_v1, tau_v2 fix v", t0 * vc == vc && t1 * vc == vc && t2 * vc == vc);

  std::set<std::vector<Int>> seen{IntMatrix::identity(kMukai).data()};
  std::vector<IntMatrix> frontier{IntMatrix::identity(kMukai)};
  while (!frontier.empty() && seen.size() <= 6) {
    std::vector<IntMatrix> next;
    for (auto const& x : frontier)
      for (auto const* gen : {&t1, &t2}) {
        IntMatrix y = x * *gen;
        if (seen.insert(y.data()).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  ver.add("<tau_v1, tau_v2> has order 6", seen.size() == 6);
  return report;
}

TauLetter GeneratorFamily::canonical_tau() const {
  Vector l(kK3);
  l[k3_index::kU1] = 1;
  l[k3_index::kU1 + 1] = m_ - 1;
  return TauLetter{{1, negate(l), m_}};
}

namespace {

template <class L>
L checked_letter(L letter, Int const& m) {
  Vector const v = mukai_vector(1, -m).coords();
  if (letter_matrix(letter) * v != v) throw VerificationError("sampled generator does not fix v");
  return letter;
}

}  // namespace

Gamma0Letter GeneratorFamily::sample_gamma0(Rng& rng, int norm) const {
  if (norm != 2 && norm != -2) throw PreconditionError("sample_gamma0: norm must be +-2");
  auto const k3 = k3_lattice();
  Vector const u = random_vector_with_norm(*k3, norm, rng);
  return checked_letter(Gamma0Letter{true_reflection(k3, u).matrix()}, m_);
}

Gamma0Letter GeneratorFamily::sample_gamma0(Rng& rng) const { return sample_gamma0(rng, rng.coin() ? 2 : -2); }

TauLetter GeneratorFamily::sample_tau(Rng& rng) const {
  Vector const l = random_vector_with_norm(*k3_lattice(), 2 * m_ - 2, rng);
  return checked_letter(TauLetter{{1, negate(l), m_}}, m_);
}

TauLetter GeneratorFamily::sample_tau_of_rank(Rng& rng, Int const& a) const {
  if (a == 0) throw PreconditionError("sample_tau_of_rank: rank must be nonzero");
  Vector const l = random_vector_with_norm(*k3_lattice(), 2 * a * a * m_ - 2, rng);
  return checked_letter(TauLetter{{a, negate(l), a * m_}}, m_);
}

Letter GeneratorFamily::sample(Rng& rng) const {
  if (rng.coin()) return sample_gamma0(rng);
  return sample_tau(rng);
}

GeneratorWord GeneratorFamily::sample_word(Rng& rng, std::size_t length) const {
  GeneratorWord word{m_, {}};
  for (std::size_t i = 0; i < length; ++i) word.letters.push_back(sample(rng));
  return word;
}

}  // namespace mukai
