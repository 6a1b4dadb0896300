#include "cartsym/io.hpp"

#include <fstream>
#include <sstream>

namespace cartsym {

namespace {

Json load_json_text_or_file(const std::string& spec) {
  if (!spec.empty() && (spec.front() == '{' || spec.front() == '[')) {
    try {
      return Json::parse(spec);
    } catch (const Json::parse_error& e) {
      throw InputError(std::string("inline JSON parse error: ") + e.what());
    }
  }
  std::ifstream in(spec);
  if (!in) throw InputError("cannot open file '" + spec + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("JSON parse error in '" + spec + "': " + e.what());
  }
}

int parse_builtin_degree(const std::string& spec, const std::string& prefix) {
  try {
    return std::stoi(spec.substr(prefix.size()));
  } catch (const std::exception&) {
    throw InputError("cannot parse degree in group spec '" + spec + "'");
  }
}

}  // namespace

PermGroup parse_group_spec(const std::string& spec) {
  if (spec.rfind("symmetric:", 0) == 0)
    return PermGroup::symmetric(parse_builtin_degree(spec, "symmetric:"));
  if (spec.rfind("cyclic:", 0) == 0)
    return PermGroup::cyclic(parse_builtin_degree(spec, "cyclic:"));
  if (spec.rfind("dihedral:", 0) == 0)
    return PermGroup::dihedral(parse_builtin_degree(spec, "dihedral:"));
  if (spec.rfind("trivial:", 0) == 0)
    return PermGroup::trivial(parse_builtin_degree(spec, "trivial:"));

  const Json j = load_json_text_or_file(spec);
  if (!j.is_object() || !j.contains("degree") || !j.contains("generators"))
    throw InputError("group JSON needs 'degree' and 'generators'");
  const int degree = j.at("degree").get<int>();
  std::vector<Permutation> generators;
  for (const auto& gen : j.at("generators")) {
    std::vector<std::vector<int>> cycles;
    for (const auto& cycle : gen)
      cycles.push_back(cycle.get<std::vector<int>>());
    generators.push_back(Permutation::from_cycles(degree, cycles));
  }
  return PermGroup::generate(degree, std::move(generators));
}

namespace {

Complex parse_complex(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    throw InputError("complex entries must be [re, im] pairs");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

Matrix parse_matrix(const Json& j) {
  if (!j.is_array() || j.empty())
    throw InputError("matrix JSON must be a nonempty array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].size();
  Matrix m(rows, cols);
  for (std::size_t a = 0; a < rows; ++a) {
    if (j[a].size() != cols) throw InputError("ragged matrix JSON");
    for (std::size_t b = 0; b < cols; ++b) m(a, b) = parse_complex(j[a][b]);
  }
  return m;
}

}  // namespace

UnitaryRep parse_rep_spec(const PermGroup& group, const std::string& spec,
                          double tol) {
  const bool looks_like_builtin =
      spec == "trivial" || spec == "sign" || spec.rfind("cyclic:", 0) == 0 ||
      spec.rfind("yor:", 0) == 0;
  if (looks_like_builtin) return builtin_rep(group, spec);

  const Json j = load_json_text_or_file(spec);
  if (j.contains("builtin")) return builtin_rep(group, j.at("builtin"));
  if (j.contains("matrices")) {
    const auto& entries = j.at("matrices");
    std::vector<Matrix> mats(group.generators().size());
    std::vector<char> seen(mats.size(), 0);
    for (auto it = entries.begin(); it != entries.end(); ++it) {
      int idx = 0;
      try {
        idx = std::stoi(it.key());
      } catch (const std::exception&) {
        throw InputError("generator index '" + it.key() + "' is not a number");
      }
      if (idx < 0 || idx >= static_cast<int>(mats.size()))
        throw InputError("generator index " + std::to_string(idx) +
                         " out of range");
      mats[idx] = parse_matrix(it.value());
      seen[idx] = 1;
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
      if (!seen[i])
        throw InputError("missing matrix for generator " + std::to_string(i));
    return load_rep(group, mats, tol);
  }
  throw InputError("rep JSON needs 'builtin' or 'matrices'");
}

Matrix parse_operator_json(const Json& j) {
  const Matrix m = parse_matrix(j);
  if (m.rows() != m.cols()) throw InputError("operator must be square");
  return m;
}

Matrix read_operator_file(const std::string& path) {
  return parse_operator_json(load_json_text_or_file(path));
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index a = 0; a < m.rows(); ++a) {
    Json row = Json::array();
    for (Eigen::Index b = 0; b < m.cols(); ++b)
      row.push_back({m(a, b).real(), m(a, b).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index a = 0; a < v.size(); ++a)
    out.push_back({v(a).real(), v(a).imag()});
  return out;
}

}  // namespace cartsym
