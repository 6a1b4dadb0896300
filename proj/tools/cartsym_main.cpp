#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cartsym/classes.hpp"
#include "cartsym/induced.hpp"
#include "cartsym/io.hpp"
#include "cartsym/verify.hpp"
#include "cartsym/version.hpp"

namespace {

using namespace cartsym;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitVerification = 2;
constexpr int kExitEmptyClass = 3;

struct JobConfig {
  std::string group_spec;
  std::string rep_spec;
  int dim_v = 1;
  double tol = kDefaultTol;
  std::uint64_t seed = 0;
  std::string operator_path;
  std::string out;
  std::string format = "json";
  int dim_cap = kDefaultDimCap;
};

void apply_env_cap(JobConfig& config) {
  if (const char* cap = std::getenv("CARTSYM_DIM_CAP")) {
    try {
      config.dim_cap = std::stoi(cap);
    } catch (const std::exception&) {
      throw InputError("CARTSYM_DIM_CAP is not an integer");
    }
  }
}

Json config_json(const JobConfig& config) {
  Json j;
  j["group"] = config.group_spec;
  j["rep"] = config.rep_spec;
  j["dim_v"] = config.dim_v;
  j["tol"] = config.tol;
  j["seed"] = config.seed;
  j["format"] = config.format;
  j["dim_cap"] = config.dim_cap;
  return j;
}

Json report_shell(const JobConfig& config) {
  Json j;
  j["version"] = kVersion;
  j["config"] = config_json(config);
  return j;
}

void emit(const JobConfig& config, const std::string& text) {
  if (config.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(config.out, std::ios::binary);
  if (!out) throw InputError("cannot open output file '" + config.out + "'");
  out << text;
}

void emit_json(const JobConfig& config, const Json& j) {
  emit(config, j.dump(2) + "\n");
}

SymmetrizerContext make_context(const JobConfig& config, bool lenient_rep) {
  if (config.dim_v < 1) throw InputError("--dim-v must be at least 1");
  if (config.tol <= 0) throw InputError("--tol must be positive");
  const PermGroup group = parse_group_spec(config.group_spec);
  const UnitaryRep rep = parse_rep_spec(
      group, config.rep_spec, lenient_rep ? 1e18 : config.tol);
  if (!lenient_rep) {
    const RepValidation validation = validate_rep(rep, config.tol);
    if (!validation.ok()) {
      Json report = report_shell(config);
      report["rep_validation"] = {
          {"is_homomorphism", validation.is_homomorphism},
          {"is_unitary", validation.is_unitary},
          {"is_irreducible", validation.is_irreducible},
          {"homomorphism_residual", validation.homomorphism_residual},
          {"unitarity_residual", validation.unitarity_residual},
          {"irreducibility_defect", validation.irreducibility_defect}};
      emit_json(config, report);
      throw InputError("representation failed validation");
    }
  }
  return build_context(rep, config.dim_v, {config.tol, config.dim_cap});
}

Json structure_json(const ClassStructure& st) {
  Json j;
  j["omega"] = st.omega;
  j["d_set"] = st.d_set;
  j["d_bar"] = st.d_bar;
  Json s_map = Json::object();
  for (const auto& [key, value] : st.s) s_map[std::to_string(key)] = value;
  j["s"] = s_map;
  j["d_hat"] = st.d_hat;
  j["total_dim"] = st.total_dim;
  j["rank_c"] = st.rank_c;
  return j;
}

int cmd_analyze(const JobConfig& config) {
  const SymmetrizerContext ctx = make_context(config, false);
  const ClassStructure st = build_structure(ctx);
  const OmegaSets omega = omega_sets(ctx);
  Json report = report_shell(config);
  report.update(structure_json(st));
  report["omega_consistent"] = omega.consistent;
  if (st.total_dim > 0) {
    const StandardBasis basis = standard_basis(ctx, st);
    report["ob_basis"] = is_ob_basis(basis, config.tol);
  } else {
    report["ob_basis"] = nullptr;
  }
  const bool consistent = st.consistent() && omega.consistent;
  report["consistent"] = consistent;
  emit_json(config, report);
  return consistent ? kExitOk : kExitVerification;
}

int cmd_basis(const JobConfig& config) {
  const SymmetrizerContext ctx = make_context(config, false);
  const ClassStructure st = build_structure(ctx);
  const StandardBasis basis = standard_basis(ctx, st);  // throws when empty
  if (config.format == "csv") {
    std::ostringstream os;
    os.precision(17);
    os << "i,j";
    for (int a = 0; a < ctx.ambient_dim(); ++a)
      os << ",re" << a << ",im" << a;
    os << "\n";
    for (std::size_t b = 0; b < basis.labels.size(); ++b) {
      os << basis.labels[b].i << "," << basis.labels[b].j;
      for (int a = 0; a < ctx.ambient_dim(); ++a) {
        const Complex value = basis.vectors(a, static_cast<int>(b));
        os << "," << value.real() << "," << value.imag();
      }
      os << "\n";
    }
    emit(config, os.str());
    return kExitOk;
  }
  Json report = report_shell(config);
  Json labels = Json::array();
  for (const auto& label : basis.labels)
    labels.push_back({{"i", label.i}, {"j", label.j}});
  report["labels"] = labels;
  Json vectors = Json::array();
  for (Eigen::Index b = 0; b < basis.vectors.cols(); ++b)
    vectors.push_back(vector_to_json(basis.vectors.col(b)));
  report["vectors"] = vectors;
  report["gram"] = matrix_to_json(basis.gram);
  report["ob_basis"] = is_ob_basis(basis, config.tol);
  emit_json(config, report);
  return kExitOk;
}

Json properties_json(const OperatorProperties& p) {
  return Json{{"normal", p.normal},
              {"unitary", p.unitary},
              {"hermitian", p.hermitian},
              {"skew_hermitian", p.skew_hermitian},
              {"psd", p.psd},
              {"pd", p.pd}};
}

int cmd_induced(const JobConfig& config) {
  if (config.operator_path.empty())
    throw InputError("induced needs --operator <file>");
  const SymmetrizerContext ctx = make_context(config, false);
  const Matrix op = read_operator_file(config.operator_path);
  if (op.rows() != config.dim_v)
    throw InputError("operator must be n x n with n = --dim-v");
  const ClassStructure st = build_structure(ctx);
  const StandardBasis basis = standard_basis(ctx, st);  // throws when empty
  const InducedOperator induced = induced_operator(ctx, basis, op);
  const RankDetReport rank_det = verify_rank_det(ctx, basis, op);
  const PropertyTransferReport transfer =
      verify_property_transfer(ctx, basis, op);

  Json report = report_shell(config);
  report["k_matrix"] = matrix_to_json(induced.matrix);
  report["dhat_size"] = induced.dhat_size;
  report["rank_T"] = rank_det.rank_source;
  report["rank_K"] = rank_det.rank_induced;
  report["rank_ok"] = rank_det.rank_ok();
  report["det_T"] = {rank_det.det_source.real(), rank_det.det_source.imag()};
  report["det_K"] = {rank_det.det_induced.real(), rank_det.det_induced.imag()};
  report["residuals"] = {{"det", rank_det.det_residual},
                         {"adjoint", transfer.adjoint_residual}};
  report["predicates"] = {{"source", properties_json(transfer.source)},
                          {"induced", properties_json(transfer.induced)},
                          {"match", transfer.properties_match()}};
  report["seed"] = config.seed;
  const bool ok = rank_det.rank_ok() && rank_det.det_ok(1e-6) &&
                  transfer.properties_match();
  report["consistent"] = ok;
  emit_json(config, report);
  return ok ? kExitOk : kExitVerification;
}

int cmd_verify(const JobConfig& config) {
  const SymmetrizerContext ctx = make_context(config, true);
  const VerificationRun run = run_verification(ctx, config.seed);
  Json report = report_shell(config);
  report["seed"] = config.seed;
  Json checks = Json::array();
  for (const auto& check : run.checks) {
    Json c;
    c["name"] = check.name;
    c["pass"] = check.pass;
    c["skipped"] = check.skipped;
    c["residual"] = check.residual;
    c["detail"] = check.detail;
    checks.push_back(std::move(c));
  }
  report["checks"] = checks;
  report["pass"] = run.all_pass();
  emit_json(config, report);
  return run.all_pass() ? kExitOk : kExitVerification;
}

int cmd_catalog(const JobConfig& config) {
  Json report;
  report["version"] = kVersion;
  report["groups"] = {"symmetric:<m>", "cyclic:<m>", "dihedral:<m>",
                      "trivial:<m>",
                      "from-generators: {\"degree\": m, \"generators\": "
                      "[[[1,2],[3,4]], ...]}"};
  report["reps"] = {"trivial", "sign", "cyclic:<k>", "yor:<partition>",
                    "from-matrices: {\"matrices\": {\"<generator index>\": "
                    "[[[re,im],...],...]}}"};
  emit_json(config, report);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Cartesian symmetry classes over unitary spaces"};
  app.require_subcommand(1);

  JobConfig config;
  auto add_common = [&](CLI::App* cmd, bool needs_rep) {
    cmd->add_option("--group", config.group_spec,
                    "builtin spec, inline JSON, or JSON file")
        ->required();
    auto* rep = cmd->add_option("--rep", config.rep_spec,
                                "builtin name, inline JSON, or JSON file");
    if (needs_rep) rep->required();
    cmd->add_option("--dim-v", config.dim_v, "dimension n of V")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--tol", config.tol, "numerical tolerance");
    cmd->add_option("--seed", config.seed, "seed for randomized suites");
    cmd->add_option("--out", config.out, "output path (default stdout)");
    cmd->add_option("--format", config.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  auto* analyze = app.add_subcommand("analyze", "class structure report");
  add_common(analyze, true);
  auto* basis = app.add_subcommand("basis", "standard basis vector dump");
  add_common(basis, true);
  auto* induced =
      app.add_subcommand("induced", "induced operator report");
  add_common(induced, true);
  induced->add_option("--operator", config.operator_path,
                      "JSON file with an n x n operator");
  auto* verify =
      app.add_subcommand("verify", "run every invariant suite");
  add_common(verify, true);
  auto* catalog = app.add_subcommand("catalog", "list builtin specs");
  catalog->add_option("--out", config.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    apply_env_cap(config);
    if (analyze->parsed()) return cmd_analyze(config);
    if (basis->parsed()) return cmd_basis(config);
    if (induced->parsed()) return cmd_induced(config);
    if (verify->parsed()) return cmd_verify(config);
    if (catalog->parsed()) return cmd_catalog(config);
  } catch (const EmptyClassError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitEmptyClass;
  } catch (const ConsistencyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerification;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
