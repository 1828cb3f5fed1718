#include "mukai/lattice.hpp"

#include <cctype>
#include <sstream>
#include <utility>

#include "mukai/normal_form.hpp"

namespace mukai {

BlockSpec BlockSpec::parse(std::string const& raw) {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  if (text == "U" || text == "E8_minus" || text == "K3" || text == "Mukai") return {text, {}};
  if (text.rfind("diag(", 0) == 0 && text.back() == ')') {
    BlockSpec spec{"diag", {}};
    std::string body = text.substr(5, text.size() - 6);
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        spec.diagonal.emplace_back(item);
      } catch (std::runtime_error const&) {
        throw PreconditionError("bad diag entry '" + item + "'");
      }
    }
    if (spec.diagonal.empty()) throw PreconditionError("empty diag block");
    return spec;
  }
  throw PreconditionError("unknown block name '" + raw + "'");
}

std::string BlockSpec::to_string() const {
  if (name != "diag") return name;
  std::string out = "diag(";
  for (std::size_t i = 0; i < diagonal.size(); ++i) {
    if (i) out += ",";
    out += diagonal[i].str();
  }
  return out + ")";
}

Lattice::Lattice(IntMatrix gram, std::vector<std::string> labels, std::vector<Block> blocks,
                 std::vector<BlockSpec> spec, std::string id)
    : gram_(std::move(gram)),
      labels_(std::move(labels)),
      blocks_(std::move(blocks)),
      spec_(std::move(spec)),
      id_(std::move(id)) {
  if (!gram_.is_square() || gram_.rows() == 0) throw PreconditionError("Gram matrix must be square and nonempty");
  if (!gram_.is_symmetric()) throw PreconditionError("Gram matrix must be symmetric");
  if (labels_.empty()) {
    for (std::size_t i = 0; i < rank(); ++i) labels_.push_back("b" + std::to_string(i));
  }
  if (labels_.size() != rank()) throw PreconditionError("label count must equal rank");
  det_ = mukai::determinant(gram_);
  if (det_ != 0) gram_inverse_ = inverse(to_rational(gram_));
}

Int Lattice::pair(Vector const& x, Vector const& y) const {
  if (x.size() != rank() || y.size() != rank()) throw PreconditionError("pair: dimension mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j)
      if (y[j] != 0 && gram_(i, j) != 0) s += x[i] * gram_(i, j) * y[j];
  }
  return s;
}

Rational Lattice::pair(RationalVector const& x, RationalVector const& y) const {
  if (x.size() != rank() || y.size() != rank()) throw PreconditionError("pair: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j)
      if (y[j] != 0 && gram_(i, j) != 0) s += x[i] * Rational(gram_(i, j)) * y[j];
  }
  return s;
}

Vector Lattice::dual_coordinates(Vector const& x) const { return gram_ * x; }

bool Lattice::is_even() const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (gram_(i, i) % 2 != 0) return false;
  return true;
}

bool Lattice::is_unimodular() const { return det_ == 1 || det_ == -1; }

Signature Lattice::signature() const {
  // Congruence diagonalization over Q.
  RationalMatrix a = to_rational(gram_);
  std::size_t const n = rank();
  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t j = k + 1;
      while (j < n && a(j, j) == 0) ++j;
      if (j < n) {
        for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(j, c));
        for (std::size_t r = 0; r < n; ++r) std::swap(a(r, k), a(r, j));
      } else {
        j = k + 1;
        while (j < n && a(k, j) == 0) ++j;
        if (j == n) {
          ++sig.null;
          continue;
        }
        // e_k += e_j makes the pivot 2 a(k,j) != 0.
        for (std::size_t c = 0; c < n; ++c) a(k, c) += a(j, c);
        for (std::size_t r = 0; r < n; ++r) a(r, k) += a(r, j);
      }
    }
    Rational const pivot = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational const f = a(i, k) / pivot;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      a(i, k) = 0;
      a(k, i) = 0;
    }
    if (pivot > 0)
      ++sig.positive;
    else
      ++sig.negative;
  }
  return sig;
}

std::vector<std::pair<std::size_t, std::size_t>> Lattice::hyperbolic_planes() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (auto const& b : blocks_)
    if (b.kind == BlockKind::kHyperbolic) out.emplace_back(b.offset, b.offset + 1);
  return out;
}

IntMatrix e8_minus_gram() {
  static constexpr int kEdges[][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
  IntMatrix g(8, 8);
  for (std::size_t i = 0; i < 8; ++i) g(i, i) = -2;
  for (auto const& e : kEdges) {
    g(e[0] - 1, e[1] - 1) = 1;
    g(e[1] - 1, e[0] - 1) = 1;
  }
  return g;
}

namespace {

struct Assembler {
  std::vector<IntMatrix> grams;
  std::vector<std::string> labels;
  std::vector<Block> blocks;
  std::size_t offset = 0;
  int u_count = 0;
  int e8_count = 0;

  void add(BlockKind kind, IntMatrix gram, std::vector<std::string> block_labels) {
    blocks.push_back({kind, offset, gram.rows()});
    offset += gram.rows();
    for (auto& l : block_labels) labels.push_back(std::move(l));
    grams.push_back(std::move(gram));
  }
  void add_u() {
    ++u_count;
    auto const k = std::to_string(u_count);
    add(BlockKind::kHyperbolic, IntMatrix{{0, 1}, {1, 0}}, {"e" + k, "f" + k});
  }
  void add_e8() {
    ++e8_count;
    std::vector<std::string> l;
    for (int i = 1; i <= 8; ++i) l.push_back("E8_" + std::to_string(e8_count) + "_" + std::to_string(i));
    add(BlockKind::kE8Minus, e8_minus_gram(), std::move(l));
  }
  void add_k3() {
    add_e8();
    add_e8();
    add_u();
    add_u();
    add_u();
  }
  void add_mukai_h() {
    add(BlockKind::kMukaiHyperbolic, IntMatrix{{0, -1}, {-1, 0}}, {"(1,0,0)", "(0,0,1)"});
  }
  void add_diag(std::vector<Int> const& d) {
    IntMatrix g(d.size(), d.size());
    std::vector<std::string> l;
    for (std::size_t i = 0; i < d.size(); ++i) {
      g(i, i) = d[i];
      l.push_back("<" + d[i].str() + ">");
    }
    add(BlockKind::kDiagonal, std::move(g), std::move(l));
  }

  IntMatrix gram() const {
    IntMatrix out(offset, offset);
    std::size_t o = 0;
    for (auto const& g : grams) {
      for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) out(o + i, o + j) = g(i, j);
      o += g.rows();
    }
    return out;
  }
};

}  // namespace

LatticePtr build_lattice(std::vector<BlockSpec> const& spec, std::string id) {
  if (spec.empty()) throw PreconditionError("lattice spec must be nonempty");
  Assembler a;
  for (auto const& b : spec) {
    if (b.name == "U")
      a.add_u();
    else if (b.name == "E8_minus")
      a.add_e8();
    else if (b.name == "K3")
      a.add_k3();
    else if (b.name == "Mukai") {
      a.add_k3();
      a.add_mukai_h();
    } else if (b.name == "diag")
      a.add_diag(b.diagonal);
    else
      throw PreconditionError("unknown block name '" + b.name + "'");
  }
  return std::make_shared<Lattice const>(a.gram(), a.labels, a.blocks, spec, std::move(id));
}

LatticePtr k3_lattice() {
  static LatticePtr const instance = build_lattice({BlockSpec{"K3", {}}}, "k3");
  return instance;
}

LatticePtr mukai_lattice() {
  static LatticePtr const instance = build_lattice({BlockSpec{"Mukai", {}}}, "mukai");
  return instance;
}

Int pair(Lattice const& lattice, Vector const& x, Vector const& y) { return lattice.pair(x, y); }

bool is_primitive(Lattice const& lattice, Vector const& x) {
  if (x.size() != lattice.rank()) throw PreconditionError("is_primitive: dimension mismatch");
  Int const c = content(x);
  if (c == 0) throw PreconditionError("is_primitive: zero vector");
  return c == 1;
}

IsometryCheck check_isometry(Lattice const& lattice, IntMatrix const& m) {
  if (!m.is_square() || m.rows() != lattice.rank())
    throw PreconditionError("check_isometry: matrix must be rank x rank");
  IsometryCheck out;
  out.det = determinant(m);
  out.is_isometry = (out.det == 1 || out.det == -1) && m.transpose() * lattice.gram() * m == lattice.gram();
  return out;
}

Complement orthogonal_complement(Lattice const& lattice, std::vector<Vector> const& vectors) {
  std::size_t const n = lattice.rank();
  IntMatrix basis;
  if (vectors.empty()) {
    basis = IntMatrix::identity(n);
  } else {
    IntMatrix a(vectors.size(), n);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      Vector const g = lattice.dual_coordinates(vectors[i]);
      for (std::size_t j = 0; j < n; ++j) a(i, j) = g[j];
    }
    basis = hermite_column_basis(integer_kernel(a));
  }
  IntMatrix const gram = basis.transpose() * lattice.gram() * basis;
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < basis.cols(); ++j) labels.push_back("k" + std::to_string(j));
  return {basis, std::make_shared<Lattice const>(gram, labels)};
}

Int DiscGroup::order() const {
  Int o = 1;
  for (auto const& d : elementary_divisors) o *= d;
  return o;
}

Rational reduce_mod(Rational const& q, Int const& modulus) {
  Int const num = boost::multiprecision::numerator(q);
  Int const den = boost::multiprecision::denominator(q);
  Int const period = modulus * den;
  return Rational(mod(num, period), den);
}

DiscGroup discriminant_group(Lattice const& lattice) {
  if (!lattice.is_nondegenerate()) throw PreconditionError("discriminant_group: degenerate Gram");
  // U G V = D, so G^-1 = V D^-1 U and (column i of V) / d_i generate L*/L.
  SmithForm const snf = smith_normal_form(lattice.gram());
  DiscGroup out;
  out.even = lattice.is_even();
  Int const modulus = out.even ? 2 : 1;
  for (std::size_t i = 0; i < lattice.rank(); ++i) {
    Int const d = snf.diagonal(i, i);
    if (d == 1) continue;
    RationalVector lift(lattice.rank());
    for (std::size_t k = 0; k < lattice.rank(); ++k) lift[k] = Rational(snf.right(k, i), d);
    Rational const q = lattice.pair(lift, lift);
    out.elementary_divisors.push_back(d);
    out.q_values.push_back(reduce_mod(q, modulus));
    out.lifts.push_back(std::move(lift));
  }
  return out;
}

IntMatrix isometry_inverse(Lattice const& lattice, IntMatrix const& m) {
  auto const& ginv = lattice.gram_inverse();
  if (!ginv) throw PreconditionError("isometry_inverse: degenerate lattice");
  RationalMatrix const inv = *ginv * to_rational(m.transpose() * lattice.gram());
  return to_integral(inv);
}

Isometry::Isometry(LatticePtr lattice, IntMatrix matrix) : lattice_(std::move(lattice)), matrix_(std::move(matrix)) {
  if (!lattice_) throw PreconditionError("Isometry: null lattice");
  if (!check_isometry(*lattice_, matrix_).is_isometry) throw PreconditionError("matrix is not an isometry");
}

Isometry::Isometry(LatticePtr lattice, IntMatrix matrix, Unchecked)
    : lattice_(std::move(lattice)), matrix_(std::move(matrix)) {}

Isometry Isometry::identity(LatticePtr lattice) {
  auto const n = lattice->rank();
  return Isometry(std::move(lattice), IntMatrix::identity(n), Unchecked{});
}

Isometry Isometry::minus_identity(LatticePtr lattice) {
  auto const n = lattice->rank();
  return Isometry(std::move(lattice), -IntMatrix::identity(n), Unchecked{});
}

Isometry Isometry::operator*(Isometry const& rhs) const {
  if (lattice_ != rhs.lattice_ && lattice_->gram() != rhs.lattice_->gram())
    throw PreconditionError("composing isometries of different lattices");
  return Isometry(lattice_, matrix_ * rhs.matrix_, Unchecked{});
}

Isometry Isometry::inverse() const {
  return Isometry(lattice_, isometry_inverse(*lattice_, matrix_), Unchecked{});
}

Isometry Isometry::negated() const { return Isometry(lattice_, -matrix_, Unchecked{}); }

Int Isometry::determinant() const { return mukai::determinant(matrix_); }

}  // namespace mukai
