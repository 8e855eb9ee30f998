#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "qlie/braid.hpp"
#include "qlie/env.hpp"
#include "qlie/ltwo.hpp"
#include "qlie/quandle.hpp"
#include "qlie/zam.hpp"

namespace qlie {

using json = nlohmann::json;

/// Rationals appear in JSON as integers when they fit, "p/q" strings
/// otherwise; both forms (plus integer-valued strings) are accepted on input.
json rational_to_json(const Rational& q);
Rational rational_from_json(const json& j);

json matrix_to_json(const Matrix& m);  // nested row-major arrays
Matrix matrix_from_json(const json& j);

/// {"dim": n, "c": [[[q,...],...],...]}
json lie_to_json(const LieAlgebra& L);
LieAlgebra lie_from_json(const json& j);

/// {"dimV": m, "rho": [matrix,...]}; the algebra comes from context.
json rep_to_json(const Representation& R);
Representation rep_from_json(const json& j, const LieAlgebra& L);

/// {"degree": n, "values": [{"idx": [i1,...], "v": [q,...]}, ...]};
/// omitted tuples are zero. Indices are 0-based.
json cochain_to_json(const Cochain& w);
Cochain cochain_from_json(const json& j, const LieAlgebra& L, const Representation& R);

/// {"n0", "n1", "d", "l2_00", "l2_01", "l3"} with tensors as nested arrays;
/// only canonical slots (i<j for l2_00, i<j<k for l3) are read, the rest is
/// filled in by antisymmetry.
json l2_to_json(const L2Data& L);
L2Data l2_from_json(const json& j);

/// {"size": m, "left": [[...]], "right": [[...]]?}
json magma_to_json(const Magma2& Q);
Magma2 magma_from_json(const json& j);

/// {"size": m, "mul": [[...]]}; identity and inverses derived and validated.
json group_to_json(const GroupTable& G);
GroupTable group_from_json(const json& j);

/// Reads and parses a JSON file; errors carry the path and position.
json load_json_file(const std::string& path);

}  // namespace qlie
