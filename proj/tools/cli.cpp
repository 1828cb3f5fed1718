#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <sstream>

#include "mukai/mukai.hpp"

namespace mukai::cli {
namespace {

using json::Json;
using json::to_json;

struct Report {
  Json body;
  Verification verification;

  Report(std::string const& command, Json inputs) {
    body["command"] = command;
    body["inputs"] = std::move(inputs);
  }

  int finish() {
    if (verification.checks.empty()) verification.add("outputs recomputed", true);
    int const status = verification.ok() ? kOk : kVerificationFailed;
    body["verification"] = to_json(verification);
    body["exit_status"] = status;
    return status;
  }
};

Json read_json_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (Json::parse_error const& e) {
    throw PreconditionError("'" + path + "' is not valid JSON: " + e.what());
  }
}

// Accepts a bare isometry object or a report carrying one under "isometry".
Json isometry_json(Json const& j) {
  if (j.is_object() && !j.contains("matrix") && j.contains("isometry")) return j.at("isometry");
  return j;
}

Isometry read_isometry(std::string const& path, LatticePtr lattice) {
  Json const j = isometry_json(read_json_file(path));
  if (j.is_object() && j.contains("lattice")) {
    LatticePtr declared = json::resolve_lattice(j.at("lattice"));
    if (declared->gram() != lattice->gram())
      throw PreconditionError("isometry file declares lattice " + j.at("lattice").dump() +
                              ", which differs from --lattice");
  }
  IntMatrix m = json::matrix_from_json(j.is_object() ? j.at("matrix") : j);
  if (m.rows() != lattice->rank() || m.cols() != lattice->rank())
    throw PreconditionError("matrix must be " + std::to_string(lattice->rank()) + "x" +
                            std::to_string(lattice->rank()));
  return Isometry(std::move(lattice), std::move(m));
}

Json signature_json(Signature const& s) {
  Json out = Json::array({s.positive, s.negative});
  if (s.null != 0) out.push_back(s.null);
  return out;
}

Json disc_json(DiscGroup const& d) {
  Json out;
  Json divisors = Json::array();
  for (auto const& x : d.elementary_divisors) divisors.push_back(to_json(x));
  out["elementary_divisors"] = std::move(divisors);
  out["order"] = to_json(d.order());
  Json q = Json::array();
  for (auto const& x : d.q_values) q.push_back(to_json(x));
  out["q_values"] = std::move(q);
  out["q_modulus"] = d.even ? 2 : 1;
  return out;
}

std::string to_id(Json const& lattice) { return lattice.is_string() ? lattice.get<std::string>() : lattice.dump(); }

// --- lattice -------------------------------------------------------------

Report lattice_build(std::vector<std::string> const& blocks) {
  Json inputs;
  inputs["blocks"] = blocks;
  Report r("lattice build", inputs);
  std::vector<BlockSpec> spec;
  for (auto const& b : blocks) spec.push_back(BlockSpec::parse(b));
  LatticePtr l = build_lattice(spec);
  r.body["lattice"] = to_json(*l);
  r.body["rank"] = l->rank();
  r.body["signature"] = signature_json(l->signature());
  r.body["determinant"] = to_json(l->determinant());
  r.body["even"] = l->is_even();
  r.verification.add("gram is symmetric", l->gram().is_symmetric());
  r.verification.add("gram round-trips through JSON", json::lattice_from_json(to_json(*l))->gram() == l->gram());
  return r;
}

Report lattice_check(std::string const& lattice_id, std::string const& path) {
  Json inputs;
  inputs["lattice"] = lattice_id;
  inputs["isometry"] = path;
  Report r("lattice check", inputs);
  LatticePtr l = json::resolve_lattice(lattice_id);
  Json const j = isometry_json(read_json_file(path));
  IntMatrix const m = json::matrix_from_json(j.is_object() ? j.at("matrix") : j);
  if (m.rows() != l->rank() || m.cols() != l->rank()) throw PreconditionError("matrix has the wrong size");
  auto const check = check_isometry(*l, m);
  r.body["is_isometry"] = check.is_isometry;
  r.body["det"] = to_json(check.det);
  r.verification.add("M^T G M recomputed", check.is_isometry == (m.transpose() * l->gram() * m == l->gram()));
  return r;
}

Report lattice_disc(std::string const& lattice_id) {
  Json inputs;
  inputs["lattice"] = lattice_id;
  Report r("lattice disc", inputs);
  LatticePtr l = json::resolve_lattice(lattice_id);
  DiscGroup const d = discriminant_group(*l);
  r.body["discriminant"] = disc_json(d);
  r.verification.add("order = |det(Gram)|", d.order() == abs(l->determinant()));
  bool lifts_ok = true;
  for (std::size_t i = 0; i < d.lifts.size(); ++i) {
    for (std::size_t k = 0; k < l->rank(); ++k) {
      RationalVector e(l->rank());
      e[k] = 1;
      lifts_ok = lifts_ok && is_integral(l->pair(d.lifts[i], e));
      lifts_ok = lifts_ok && is_integral(d.lifts[i][k] * Rational(d.elementary_divisors[i]));
    }
  }
  r.verification.add("lifts pair integrally and d_i lift lies in L", lifts_ok);
  return r;
}

Report lattice_perp(std::string const& lattice_id, std::string const& path) {
  Json inputs;
  inputs["lattice"] = lattice_id;
  inputs["vectors"] = path;
  Report r("lattice perp", inputs);
  LatticePtr l = json::resolve_lattice(lattice_id);
  std::vector<Vector> vs;
  for (auto const& x : read_json_file(path)) vs.push_back(json::vector_from_json(x));
  Complement const c = orthogonal_complement(*l, vs);
  Json basis = Json::array();
  for (std::size_t j = 0; j < c.basis.cols(); ++j) basis.push_back(to_json(c.basis.column(j)));
  r.body["basis"] = std::move(basis);
  r.body["gram"] = to_json(c.lattice->gram());
  bool orth = true;
  for (std::size_t j = 0; j < c.basis.cols(); ++j)
    for (auto const& s : vs) orth = orth && l->pair(c.basis.column(j), s) == 0;
  r.verification.add("basis is orthogonal to the inputs", orth);
  r.verification.add("basis spans a primitive sublattice",
                     c.basis.cols() == 0 || is_primitive_sublattice(c.basis));
  return r;
}

// --- char ----------------------------------------------------------------

Report char_verb(std::string const& lattice_id, std::string const& path) {
  Json inputs;
  inputs["lattice"] = lattice_id;
  inputs["isometry"] = path;
  Report r("char", inputs);
  LatticePtr l = json::resolve_lattice(lattice_id);
  Isometry const g = read_isometry(path, l);
  bool const is_mukai = l->gram() == mukai_lattice()->gram();
  ReferenceOrientation const ref = is_mukai ? default_mukai_reference() : k3_block_reference(l);
  Int const det = g.determinant();
  int const ch = orientation_char(ref, g);
  r.body["det"] = to_json(det);
  r.body[is_mukai ? "cov" : "orientation_char"] = ch;
  r.verification.add("matrix is an isometry", check_isometry(*l, g.matrix()).is_isometry);
  r.verification.add("det = +-1", det == 1 || det == -1);
  r.verification.add("character of g^2 is 0", orientation_char(ref, g * g) == 0);
  return r;
}

// --- stab ----------------------------------------------------------------

Json m_inputs(Int const& m) {
  Json inputs;
  inputs["m"] = to_json(m);
  return inputs;
}

Report stab_model(Int const& m) {
  Report r("stab model", m_inputs(m));
  VPerpModel const model(m);
  r.body["lattice"] = to_json(*model.lattice());
  r.body["v"] = to_json(model.v());
  r.body["w"] = to_json(model.w());
  r.body["signature"] = signature_json(model.lattice()->signature());
  Json disc;
  disc["modulus"] = to_json(model.disc().modulus);
  disc["q_generator"] = to_json(model.disc().q_generator());
  disc["smith"] = disc_json(model.smith_disc());
  r.body["disc"] = std::move(disc);
  r.verification.add("(w,w) = -2m", mukai_pairing(model.w(), model.w()) == -2 * m);
  r.verification.add("(v,v) = 2m", mukai_pairing(model.v(), model.v()) == 2 * m);
  r.verification.add("discriminant is cyclic of order 2m", model.smith_disc().is_cyclic() &&
                                                                 model.smith_disc().order() == 2 * m);
  r.verification.add("q(w/2m) = -1/2m mod 2",
                     reduce_mod(model.lattice()->pair(model.disc_generator(), model.disc_generator()), 2) ==
                         reduce_mod(Rational(-1, 2 * m), 2));
  return r;
}

Report stab_classify(Int const& m, std::string const& path) {
  Json inputs = m_inputs(m);
  inputs["vector"] = path;
  Report r("stab classify", inputs);
  VPerpModel const model(m);
  MukaiVector const v0 = json::mukai_vector_from_json(read_json_file(path));
  Minus2Class const c = classify_minus2(model, v0);
  r.body["class"] = std::string(to_string(c));
  r.verification.add("(v0,v0) = -2", mukai_pairing(v0, v0) == -2);
  r.verification.add("(v0,v) = 0", mukai_pairing(v0, model.v()) == 0);
  bool even = true;
  for (auto const& x : v0.c) even = even && x % 2 == 0;
  r.verification.add("class agrees with 2-divisibility of the middle part", even == (c == Minus2Class::kAPlus));
  return r;
}

Report stab_factor(Int const& m, std::string const& path, bool normalize_word, int radius) {
  Json inputs = m_inputs(m);
  inputs["isometry"] = path;
  inputs["normalize"] = normalize_word;
  inputs["radius"] = radius;
  Report r("stab factor", inputs);
  VPerpModel const model(m);
  Isometry const g = read_isometry(path, mukai_lattice());
  GeneratorWord const word = factor(model, g, {normalize_word, radius});
  r.body["letters"] = word.letters.size();
  r.body["tau_letters"] = word.tau_count();
  r.body["word"] = to_json(word);
  r.verification.add("product of the word equals g", word.product() == g.matrix());
  bool letters_ok = true;
  try {
    validate(word);
  } catch (PreconditionError const&) {
    letters_ok = false;
  }
  r.verification.add("Tau letters are -2 vectors of v-perp, Gamma0 letters are K3 isometries", letters_ok);
  if (normalize_word) r.verification.add("Tau letters have the form (1,-L,m), L primitive", is_normalized(word));
  return r;
}

Report stab_disc_order(std::int64_t m) {
  Report r("stab disc-order", m_inputs(Int(m)));
  DiscOrder const d = disc_group_order(m);
  r.body["order"] = to_json(d.order);
  r.body["rho"] = d.rho;
  r.body["index_O_vperp_over_GammaV"] = to_json(d.index);
  r.verification.add("order = 2^rho", d.order == (Int(1) << d.rho));
  return r;
}

Report stab_aplus(Int const& m) {
  Report r("stab aplus", m_inputs(m));
  auto const w = aplus_witness(m);
  r.verification.add("witness exists iff m = 1 mod 4", w.has_value() == (mod(m, 4) == 1));
  if (!w) {
    r.body["result"] = "Impossible";
    return r;
  }
  VPerpModel const model(m);
  r.body["result"] = "Witness";
  r.body["vector"] = to_json(*w);
  r.verification.add("(v0,v0) = -2", mukai_pairing(*w, *w) == -2);
  r.verification.add("classified APlus", classify_minus2(model, *w) == Minus2Class::kAPlus);
  return r;
}

Report stab_sample(Int const& m, std::uint64_t seed, std::size_t length) {
  Json inputs = m_inputs(m);
  inputs["seed"] = seed;
  inputs["length"] = length;
  Report r("stab sample", inputs);
  GeneratorFamily const family(m);
  Rng rng(seed);
  GeneratorWord const word = family.sample_word(rng, length);
  Isometry const g(mukai_lattice(), word.product());
  VPerpModel const model(m);
  r.body["word"] = to_json(word);
  r.body["isometry"] = to_json(g);
  r.verification.add("product fixes v", g(model.v().coords()) == model.v().coords());
  r.verification.add("disc action is 1", disc_action(model, model.restrict(g)) == 1);
  return r;
}

Report stab_disc_action(Int const& m, std::string const& path) {
  Json inputs = m_inputs(m);
  inputs["isometry"] = path;
  Report r("stab disc-action", inputs);
  VPerpModel const model(m);
  Json const j = isometry_json(read_json_file(path));
  bool const on_mukai = j.is_object() && j.value("lattice", Json("")) == Json("mukai");
  Isometry const g = on_mukai ? model.restrict(read_isometry(path, mukai_lattice()))
                              : read_isometry(path, model.lattice());
  Int const u = disc_action(model, g);
  GammaVStatus const status = in_gamma_v(model, g);
  r.body["disc_action"] = to_json(u);
  r.body["in_gamma_v"] = std::string(to_string(status));
  r.body["orientation_char"] = orientation_char(model.reference(), g);
  r.body["w_membership"] = w_membership(model, g);
  r.verification.add("u^2 = 1 mod 4m", mod(u * u, 4 * m) == mod(Int(1), 4 * m));
  if (status != GammaVStatus::kDoesNotExtend) {
    int const sign = status == GammaVStatus::kInGammaV ? 1 : -1;
    r.verification.add("extends to the Mukai lattice", model.extend(g, sign).has_value());
  } else {
    r.verification.add("no extension with v -> +-v",
                       !model.extend(g, 1).has_value() && !model.extend(g, -1).has_value());
  }
  return r;
}

// --- fm ------------------------------------------------------------------

Report fm_verify_phi(Int const& n) {
  Json inputs;
  inputs["n"] = to_json(n);
  Report r("fm verify-phi", inputs);
  EllipticPhi const e = elliptic_phi(n);
  r.body["lambda_matrix"] = to_json(phi_lambda_matrix());
  r.body["sigma"] = to_json(e.sigma);
  r.body["f"] = to_json(e.f);
  r.body["beta"] = to_json(e.beta);
  r.body["alpha"] = to_json(e.alpha);
  r.body["isometry"] = to_json(e.phi.isometry);
  r.verification = e.verification;
  r.verification.add("phi is an isometry of the Mukai lattice",
                     check_isometry(*mukai_lattice(), e.phi.isometry.matrix()).is_isometry);
  return r;
}

Report fm_verify_sigma_tau() {
  Report r("fm verify-sigma-tau", Json::object());
  r.body["u0"] = to_json(mukai_vector(1, -1));
  r.body["v0"] = to_json(mukai_vector(1, 1));
  r.verification = verify_sigma_tau_duality();
  return r;
}

Report fm_mon(Int const& m, std::string const& path) {
  Json inputs = m_inputs(m);
  inputs["isometry"] = path;
  Report r("fm mon", inputs);
  VPerpModel const model(m);
  Isometry const g = read_isometry(path, mukai_lattice());
  int const cov = covariance(g);
  Isometry const out = mon_twist(model, g);
  r.body["cov"] = cov;
  r.body["isometry"] = to_json(out);
  r.body["is_identity"] = out.is_identity();
  r.verification.add("image is orientation preserving", orientation_char(model.reference(), out) == 0);
  r.verification.add("image lies in W", w_membership(model, out));
  return r;
}

Report fm_spherical(std::string const& path) {
  Json inputs;
  inputs["vector"] = path;
  Report r("fm spherical", inputs);
  MukaiVector const v0 = json::mukai_vector_from_json(read_json_file(path));
  FMIsometry const t = spherical_reflection(v0);
  r.body["provenance"] = std::string(to_string(t.provenance));
  r.body["cov"] = covariance(t.isometry);
  r.body["isometry"] = to_json(t.isometry);
  r.verification.add("tau(v0) = -v0", t.isometry(v0.coords()) == (-v0).coords());
  r.verification.add("tau^2 = id", (t.isometry * t.isometry).is_identity());
  return r;
}

// --- elliptic ------------------------------------------------------------

Vector parse_pair(std::string const& text) {
  auto const comma = text.find(',');
  if (comma == std::string::npos) throw PreconditionError("--v expects r,d");
  try {
    return {Int(text.substr(0, comma)), Int(text.substr(comma + 1))};
  } catch (std::runtime_error const&) {
    throw PreconditionError("--v expects two integers, got '" + text + "'");
  }
}

Report elliptic_stab(std::string const& v_text, std::string const& path) {
  Json inputs;
  inputs["v"] = v_text;
  if (!path.empty()) inputs["test"] = path;
  Report r("elliptic stab", inputs);
  EvenStabilizer const stab(parse_pair(v_text));
  r.body["generator"] = to_json(stab.generator());
  r.verification.add("generator fixes v", stab.generator() * stab.v() == stab.v());
  r.verification.add("generator has det 1", is_sl2(stab.generator()));
  if (!path.empty()) {
    Json const j = read_json_file(path);
    IntMatrix const m = json::matrix_from_json(j.is_object() ? j.at("matrix") : j);
    if (m.rows() != 2 || m.cols() != 2) throw PreconditionError("test matrix must be 2x2");
    bool const fixes = m * stab.v() == stab.v();
    auto const k = fixes ? stab.is_power(m) : std::nullopt;
    r.body["fixes_v"] = fixes;
    r.body["is_power"] = k.has_value();
    r.body["k"] = k ? to_json(*k) : Json(nullptr);
    r.body["sl2"] = is_sl2(m);
    if (k) r.verification.add("tau_v^k recomputed", transvection_power(stab.v(), *k) == m);
  }
  return r;
}

Result emit(Report& r) {
  int const code = r.finish();
  return {code, r.body.dump(2) + "\n", {}};
}

Result error_result(std::string const& command, std::string const& message, int code,
                    std::optional<int> radius = std::nullopt) {
  Json body;
  body["command"] = command;
  body["error"] = message;
  if (radius) body["radius"] = *radius;
  body["exit_status"] = code;
  return {code, body.dump(2) + "\n", message + "\n"};
}

}  // namespace

Result run(std::vector<std::string> const& args) {
  CLI::App app{"Exact computations in the Mukai lattice of a K3 surface", "mukai"};
  app.require_subcommand(1);

  std::string command;
  std::function<Report()> action;
  auto bind = [&](CLI::App* sub, std::string name, std::function<Report()> f) {
    sub->callback([&, name = std::move(name), f = std::move(f)] {
      command = name;
      action = f;
    });
  };

  std::string lattice_id = "mukai";
  std::string isometry_path;
  std::string vector_path;
  std::vector<std::string> blocks;
  std::int64_t m = 1;
  std::int64_t n = 2;
  std::uint64_t seed = 1;
  std::size_t length = 4;
  bool normalize_word = false;
  int radius = default_search_radius();
  std::string v_text;
  std::string test_path;

  auto* lattice = app.add_subcommand("lattice", "Lattice construction and checks");
  lattice->require_subcommand(1);
  auto* lb = lattice->add_subcommand("build", "Build a lattice from blocks");
  lb->add_option("--blocks", blocks, "U, E8_minus, K3, Mukai, diag(n1,...)")->required();
  bind(lb, "lattice build", [&] { return lattice_build(blocks); });
  auto* lc = lattice->add_subcommand("check", "Check that a matrix is an isometry");
  lc->add_option("--lattice", lattice_id);
  lc->add_option("--isometry", isometry_path)->required();
  bind(lc, "lattice check", [&] { return lattice_check(lattice_id, isometry_path); });
  auto* ld = lattice->add_subcommand("disc", "Discriminant group");
  ld->add_option("--lattice", lattice_id);
  bind(ld, "lattice disc", [&] { return lattice_disc(lattice_id); });
  auto* lp = lattice->add_subcommand("perp", "Orthogonal complement of a list of vectors");
  lp->add_option("--lattice", lattice_id);
  lp->add_option("--vectors", vector_path)->required();
  bind(lp, "lattice perp", [&] { return lattice_perp(lattice_id, vector_path); });

  auto* ch = app.add_subcommand("char", "Determinant and orientation character of an isometry");
  ch->add_option("--lattice", lattice_id);
  ch->add_option("--isometry", isometry_path)->required();
  bind(ch, "char", [&] { return char_verb(lattice_id, isometry_path); });

  auto* stab = app.add_subcommand("stab", "Stabilizer of v = (1,0,-m)");
  stab->require_subcommand(1);
  auto add_m = [&](CLI::App* sub) { sub->add_option("--m", m, "m >= 1")->required(); };
  auto* sm = stab->add_subcommand("model", "The lattice v-perp and its discriminant form");
  add_m(sm);
  bind(sm, "stab model", [&] { return stab_model(m); });
  auto* sc = stab->add_subcommand("classify", "Orbit of a -2 vector in v-perp");
  add_m(sc);
  sc->add_option("--vector", vector_path)->required();
  bind(sc, "stab classify", [&] { return stab_classify(m, vector_path); });
  auto* sf = stab->add_subcommand("factor", "Factor g in Gamma_v into generators");
  add_m(sf);
  sf->add_option("--isometry", isometry_path)->required();
  sf->add_flag("--normalize", normalize_word);
  sf->add_option("--radius", radius);
  bind(sf, "stab factor", [&] { return stab_factor(m, isometry_path, normalize_word, radius); });
  auto* so = stab->add_subcommand("disc-order", "Order of the discriminant unit group");
  add_m(so);
  bind(so, "stab disc-order", [&] { return stab_disc_order(m); });
  auto* sa = stab->add_subcommand("aplus", "A -2 vector of the orbit A+");
  add_m(sa);
  bind(sa, "stab aplus", [&] { return stab_aplus(m); });
  auto* ss = stab->add_subcommand("sample", "Random product of Gamma_v generators");
  add_m(ss);
  ss->add_option("--seed", seed);
  ss->add_option("--length", length);
  bind(ss, "stab sample", [&] { return stab_sample(m, seed, length); });
  auto* sd = stab->add_subcommand("disc-action", "Discriminant action of an isometry of v-perp");
  add_m(sd);
  sd->add_option("--isometry", isometry_path)->required();
  bind(sd, "stab disc-action", [&] { return stab_disc_action(m, isometry_path); });

  auto* fm = app.add_subcommand("fm", "Isometries induced by Fourier-Mukai transforms");
  fm->require_subcommand(1);
  auto* fp = fm->add_subcommand("verify-phi", "The elliptic fibration isometry");
  fp->add_option("--n", n)->required();
  bind(fp, "fm verify-phi", [&] { return fm_verify_phi(n); });
  auto* fs = fm->add_subcommand("verify-sigma-tau", "-(sigma_u0 tau_v0) = D");
  bind(fs, "fm verify-sigma-tau", [&] { return fm_verify_sigma_tau(); });
  auto* fo = fm->add_subcommand("mon", "(-1)^cov(g) g restricted to v-perp");
  add_m(fo);
  fo->add_option("--isometry", isometry_path)->required();
  bind(fo, "fm mon", [&] { return fm_mon(m, isometry_path); });
  auto* fr = fm->add_subcommand("spherical", "Reflection in a -2 vector");
  fr->add_option("--vector", vector_path)->required();
  bind(fr, "fm spherical", [&] { return fm_spherical(vector_path); });

  auto* ell = app.add_subcommand("elliptic", "Elliptic curve analogue");
  ell->require_subcommand(1);
  auto* es = ell->add_subcommand("stab", "Stabilizer of a primitive (r,d)");
  es->add_option("--v", v_text, "r,d")->required()->allow_extra_args(false);
  es->add_option("--test", test_path);
  bind(es, "elliptic stab", [&] { return elliptic_stab(v_text, test_path); });

  std::vector<char*> argv;
  std::string program = "mukai";
  std::vector<std::string> storage = args;
  argv.push_back(program.data());
  for (auto& a : storage) argv.push_back(a.data());

  std::ostringstream out, err;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e, out, err);
    return {code == 0 ? kOk : kUsage, out.str(), err.str()};
  }
  if (!action) return error_result("", "no command given", kUsage);

  try {
    Report r = action();
    return emit(r);
  } catch (WitnessNotFound const& e) {
    return error_result(command, e.what(), kWitnessNotFound, e.radius());
  } catch (NotInGammaV const& e) {
    return error_result(command, e.what(), kUsage);
  } catch (PreconditionError const& e) {
    return error_result(command, e.what(), kUsage);
  } catch (IntegralityError const& e) {
    return error_result(command, e.what(), kUsage);
  } catch (VerificationError const& e) {
    return error_result(command, e.what(), kVerificationFailed);
  }
}

}  // namespace mukai::cli
