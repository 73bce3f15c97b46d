// JSON encodings of presentations and reports. Scalars are "n/d" strings
// over the rationals and integers over F_p.

#pragma once

#include <json.hpp>

#include "dglevel/emss.hpp"
#include "dglevel/rational.hpp"

namespace dgl::io {

using Json = nlohmann::ordered_json;

/// "0:1,5:1" -> {0:1, 5:1}.
GradedDims parse_dims(const std::string& text);
std::vector<int> parse_int_list(const std::string& text);

Json to_json(const GradedDims& g);
GradedDims dims_from_json(const Json& j);

Json to_json(const Scalar& s);
Scalar scalar_from_json(FieldTag f, const Json& j);

/// [{"coeff": c, "monomial": {"x": 2}}, ...]
Json to_json(const DGAlgebra& a, const Poly& p);
Poly poly_from_json(const DGAlgebra& a, const Json& j);

/// {"field", "generators": [{"label", "degree", "kind", "maxPower"}], "differential": {label: poly}}
Json to_json(const DGAlgebra& a);
DGAlgebra algebra_from_json(const Json& j);

/// {"algebra", "generators": [{"label", "degree"}], "differential": {label: [{"coeff", "generator", "monomial"}]}}
Json to_json(const FreeModule& m);
FreeModule module_from_json(const Json& j);

/// {"d", "target": algebra, "imageX": poly, "imageXi": poly, "generator"?: poly}
HopfMap hopf_from_json(const Json& j);

Json to_json(const MoleculeId& id);
Json to_json(const Decomposition& d);
Json to_json(const SphereLevel& s);
Json to_json(const FinitenessVerdict& v);
Json error_json(const Error& e);

}  // namespace dgl::io
