#include "mukai/json_io.hpp"

#include <regex>

namespace mukai::json {

Json to_json(Int const& x) {
  if (fits_int64(x)) return Json(static_cast<std::int64_t>(x));
  return Json(x.str());
}

Int int_from_json(Json const& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
  if (j.is_string()) {
    static std::regex const pattern("^-?[0-9]+$");
    auto const s = j.get<std::string>();
    if (!std::regex_match(s, pattern)) throw PreconditionError("not an integer: '" + s + "'");
    return Int(s);
  }
  throw PreconditionError("expected an integer, got " + j.dump());
}

Json to_json(Rational const& q) { return Json(to_string(q)); }

Rational rational_from_json(Json const& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  return Rational(int_from_json(j));
}

Json to_json(Vector const& v) {
  Json out = Json::array();
  for (auto const& x : v) out.push_back(to_json(x));
  return out;
}

Vector vector_from_json(Json const& j) {
  if (!j.is_array()) throw PreconditionError("expected an integer array");
  Vector v;
  for (auto const& x : j) v.push_back(int_from_json(x));
  return v;
}

Json to_json(IntMatrix const& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

IntMatrix matrix_from_json(Json const& j) {
  if (!j.is_array() || j.empty()) throw PreconditionError("expected a nonempty array of rows");
  std::size_t const rows = j.size();
  std::size_t const cols = j[0].size();
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    Vector const row = vector_from_json(j[i]);
    if (row.size() != cols) throw PreconditionError("ragged matrix");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = row[k];
  }
  return m;
}

Json to_json(Lattice const& l) {
  Json blocks = Json::array();
  for (auto const& b : l.spec()) blocks.push_back(b.to_string());
  Json out;
  if (!l.id().empty()) out["id"] = l.id();
  out["blocks"] = std::move(blocks);
  out["gram"] = to_json(l.gram());
  return out;
}

LatticePtr lattice_from_json(Json const& j) {
  if (!j.is_object() || !j.contains("blocks")) throw PreconditionError("lattice JSON needs a \"blocks\" array");
  std::vector<BlockSpec> spec;
  for (auto const& b : j.at("blocks")) spec.push_back(BlockSpec::parse(b.get<std::string>()));
  LatticePtr l = build_lattice(spec, j.value("id", std::string{}));
  if (j.contains("gram") && matrix_from_json(j.at("gram")) != l->gram())
    throw PreconditionError("lattice JSON: gram does not match blocks");
  return l;
}

LatticePtr resolve_lattice(Json const& id) {
  if (id.is_object()) return lattice_from_json(id);
  if (!id.is_string()) throw PreconditionError("lattice id must be a string or object");
  auto const s = id.get<std::string>();
  if (s == "k3") return k3_lattice();
  if (s == "mukai") return mukai_lattice();
  static std::regex const vperp(R"(^vperp\((-?[0-9]+)\)$)");
  std::smatch match;
  if (std::regex_match(s, match, vperp)) return VPerpModel(Int(match[1].str())).lattice();
  return build_lattice({BlockSpec::parse(s)}, s);
}

Json to_json(Isometry const& g) {
  Json out;
  Lattice const& l = *g.lattice();
  if (!l.id().empty())
    out["lattice"] = l.id();
  else
    out["lattice"] = to_json(l);
  out["matrix"] = to_json(g.matrix());
  return out;
}

Isometry isometry_from_json(Json const& j) {
  if (!j.is_object() || !j.contains("matrix")) throw PreconditionError("isometry JSON needs \"matrix\"");
  LatticePtr l = resolve_lattice(j.value("lattice", Json("mukai")));
  IntMatrix m = matrix_from_json(j.at("matrix"));
  if (m.rows() != l->rank() || m.cols() != l->rank())
    throw PreconditionError("isometry matrix must be " + std::to_string(l->rank()) + "x" + std::to_string(l->rank()));
  return Isometry(std::move(l), std::move(m));
}

Json to_json(MukaiVector const& v) {
  Json out;
  out["r"] = to_json(v.r);
  out["c"] = to_json(v.c);
  out["s"] = to_json(v.s);
  return out;
}

MukaiVector mukai_vector_from_json(Json const& j) {
  if (!j.is_object() || !j.contains("r") || !j.contains("c") || !j.contains("s"))
    throw PreconditionError("Mukai vector JSON needs r, c, s");
  return {int_from_json(j.at("r")), vector_from_json(j.at("c")), int_from_json(j.at("s"))};
}

Json to_json(GradedSurfaceClass const& x) {
  Json out;
  out["deg0"] = to_json(x.deg0);
  Json d2 = Json::array();
  for (auto const& q : x.deg2) d2.push_back(to_json(q));
  out["deg2"] = std::move(d2);
  out["deg4"] = to_json(x.deg4);
  return out;
}

GradedSurfaceClass graded_class_from_json(Json const& j) {
  if (!j.is_object() || !j.contains("deg0") || !j.contains("deg2") || !j.contains("deg4"))
    throw PreconditionError("graded class JSON needs deg0, deg2, deg4");
  RationalVector d2;
  for (auto const& q : j.at("deg2")) d2.push_back(rational_from_json(q));
  return {rational_from_json(j.at("deg0")), std::move(d2), rational_from_json(j.at("deg4"))};
}

Json to_json(GeneratorWord const& w) {
  Json letters = Json::array();
  for (auto const& letter : w.letters) {
    Json l;
    if (auto const* g = std::get_if<Gamma0Letter>(&letter)) {
      l["kind"] = "Gamma0";
      l["matrix"] = to_json(g->k3_matrix);
    } else {
      l["kind"] = "Tau";
      l["v0"] = to_json(std::get<TauLetter>(letter).v0);
    }
    letters.push_back(std::move(l));
  }
  Json out;
  out["m"] = to_json(w.m);
  out["letters"] = std::move(letters);
  return out;
}

GeneratorWord word_from_json(Json const& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("letters")) throw PreconditionError("word JSON needs m, letters");
  GeneratorWord w{int_from_json(j.at("m")), {}};
  for (auto const& l : j.at("letters")) {
    auto const kind = l.at("kind").get<std::string>();
    if (kind == "Gamma0")
      w.letters.push_back(Gamma0Letter{matrix_from_json(l.at("matrix"))});
    else if (kind == "Tau")
      w.letters.push_back(TauLetter{mukai_vector_from_json(l.at("v0"))});
    else
      throw PreconditionError("unknown letter kind '" + kind + "'");
  }
  validate(w);
  return w;
}

Json to_json(Verification const& v) {
  Json out = Json::array();
  for (auto const& c : v.checks) {
    Json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace mukai::json
