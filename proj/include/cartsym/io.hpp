#pragma once

#include <string>

#include <json.hpp>

#include "cartsym/rep.hpp"
#include "cartsym/types.hpp"

namespace cartsym {

using Json = nlohmann::ordered_json;

/// Accepts a builtin spec ("symmetric:4", "cyclic:3", "dihedral:4",
/// "trivial:2"), inline JSON, or a path to a JSON file of the form
/// {"degree": m, "generators": [[[1,2],[3,4]], ...]} with generators given
/// as disjoint cycle lists and fixed points omitted.
PermGroup parse_group_spec(const std::string& spec);

/// Accepts a builtin rep name ("trivial", "sign", "cyclic:k", "yor:[2,1]"),
/// inline JSON, or a path to a JSON file: {"builtin": "..."} or
/// {"matrices": {"<generator index>": [[[re,im],...],...]}}.
UnitaryRep parse_rep_spec(const PermGroup& group, const std::string& spec,
                          double tol = kDefaultTol);

/// n x n array of [re, im] pairs.
Matrix parse_operator_json(const Json& j);
Matrix read_operator_file(const std::string& path);

Json matrix_to_json(const Matrix& m);
Json vector_to_json(const Vector& v);

}  // namespace cartsym
