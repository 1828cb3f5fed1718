#pragma once

#include <nlohmann/json.hpp>

#include "mukai/factorization.hpp"
#include "mukai/fourier_mukai.hpp"

namespace mukai::json {

using Json = nlohmann::ordered_json;

// Integers are JSON numbers when they fit in int64 and decimal strings
// otherwise; both spellings are accepted on input.
Json to_json(Int const& x);
Int int_from_json(Json const& j);
Json to_json(Rational const& q);  // "p/q" string
Rational rational_from_json(Json const& j);

Json to_json(Vector const& v);
Vector vector_from_json(Json const& j);
Json to_json(IntMatrix const& m);  // row-major array of rows
IntMatrix matrix_from_json(Json const& j);

// {"blocks": [...], "gram": [[...]]}
Json to_json(Lattice const& l);
LatticePtr lattice_from_json(Json const& j);

// Lattice ids: "k3", "mukai", "vperp(m)", "U", ... or a {"blocks": ...} object.
LatticePtr resolve_lattice(Json const& id);

// {"lattice": id, "matrix": [[...]]}
Json to_json(Isometry const& g);
Isometry isometry_from_json(Json const& j);

// {"r": int, "c": [22 ints], "s": int}
Json to_json(MukaiVector const& v);
MukaiVector mukai_vector_from_json(Json const& j);

// {"deg0": "p/q", "deg2": ["p/q", ...], "deg4": "p/q"}
Json to_json(GradedSurfaceClass const& x);
GradedSurfaceClass graded_class_from_json(Json const& j);

// {"m": int, "letters": [{"kind":"Gamma0","matrix":...} | {"kind":"Tau","v0":...}]}
Json to_json(GeneratorWord const& w);
GeneratorWord word_from_json(Json const& j);

Json to_json(Verification const& v);

}  // namespace mukai::json
