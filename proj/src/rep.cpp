#include "cartsym/rep.hpp"

#include <cmath>
#include <numbers>

#include "cartsym/numeric.hpp"
#include "cartsym/young.hpp"

namespace cartsym {

Complex char_inner(const Character& a, const Character& b) {
  if (a.group_order() != b.group_order())
    throw InputError("characters belong to groups of different order");
  const auto n = a.group_order();
  Complex sum = 0;
  for (Eigen::Index i = 0; i < n; ++i) sum += a.values()(i) * std::conj(b.values()(i));
  return sum / static_cast<double>(n);
}

Complex restricted_trivial_inner(const Character& chi,
                                 const std::vector<int>& subgroup) {
  if (subgroup.empty()) throw InputError("subgroup element list is empty");
  Complex sum = 0;
  for (int idx : subgroup) sum += chi(idx);
  return sum / static_cast<double>(subgroup.size());
}

UnitaryRep::UnitaryRep(PermGroup group, std::vector<Matrix> matrices,
                       std::string label)
    : group_(std::move(group)),
      matrices_(std::move(matrices)),
      label_(std::move(label)) {
  if (matrices_.size() != static_cast<std::size_t>(group_.order()))
    throw InputError("representation needs one matrix per group element");
  dim_u_ = static_cast<int>(matrices_.front().rows());
  if (dim_u_ < 1) throw InputError("representation dimension must be >= 1");
  for (const auto& m : matrices_)
    if (m.rows() != dim_u_ || m.cols() != dim_u_)
      throw InputError("representation matrices must all be r x r");
}

const Matrix& UnitaryRep::matrix(const Permutation& p) const {
  const int idx = group_.index_of(p);
  if (idx < 0) throw InputError("permutation is not a group member");
  return matrices_[idx];
}

Character character(const UnitaryRep& rep) {
  Vector values(rep.group().order());
  for (int idx = 0; idx < rep.group().order(); ++idx)
    values(idx) = rep.matrix(idx).trace();
  return Character(std::move(values));
}

RepValidation validate_rep(const UnitaryRep& rep, double tol) {
  const PermGroup& g = rep.group();
  RepValidation report;

  double hom = 0.0;
  if (g.order() <= 120) {
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b) {
        const Permutation prod = compose(g.element(a), g.element(b));
        const double res =
            (rep.matrix(a) * rep.matrix(b) - rep.matrix(prod)).norm();
        hom = std::max(hom, res);
      }
  } else {
    Rng rng(0xC0FFEEULL);
    for (int t = 0; t < 5000; ++t) {
      const int a = static_cast<int>(rng.next() % g.order());
      const int b = static_cast<int>(rng.next() % g.order());
      const Permutation prod = compose(g.element(a), g.element(b));
      hom = std::max(
          hom, (rep.matrix(a) * rep.matrix(b) - rep.matrix(prod)).norm());
    }
  }
  report.homomorphism_residual = hom;
  report.is_homomorphism = hom < tol * std::max(1.0, static_cast<double>(rep.dim_u()));

  double uni = 0.0;
  const Matrix eye = Matrix::Identity(rep.dim_u(), rep.dim_u());
  for (int idx = 0; idx < g.order(); ++idx)
    uni = std::max(uni,
                   (rep.matrix(idx) * rep.matrix(idx).adjoint() - eye).norm());
  report.unitarity_residual = uni;
  report.is_unitary = uni < tol * std::max(1.0, static_cast<double>(rep.dim_u()));

  const Character chi = character(rep);
  report.irreducibility_defect = std::abs(char_inner(chi, chi) - Complex(1.0));
  report.is_irreducible = report.irreducibility_defect < tol;
  return report;
}

namespace {

UnitaryRep trivial_rep(const PermGroup& group) {
  std::vector<Matrix> mats(group.order(), Matrix::Identity(1, 1));
  return UnitaryRep(group, std::move(mats), "trivial");
}

UnitaryRep sign_rep(const PermGroup& group) {
  std::vector<Matrix> mats;
  mats.reserve(group.order());
  for (const auto& g : group.elements()) {
    Matrix m(1, 1);
    m(0, 0) = static_cast<double>(parity(g));
    mats.push_back(std::move(m));
  }
  return UnitaryRep(group, std::move(mats), "sign");
}

/// Lexicographically smallest non-identity element whose powers enumerate
/// the whole group.
int canonical_cyclic_generator(const PermGroup& group) {
  for (int idx = 0; idx < group.order(); ++idx) {
    if (group.element(idx).is_identity()) continue;
    Permutation power = group.element(idx);
    int count = 1;
    while (!power.is_identity()) {
      power = compose(power, group.element(idx));
      ++count;
    }
    if (count == group.order()) return idx;
  }
  return -1;
}

UnitaryRep cyclic_rep(const PermGroup& group, int k) {
  const int gen_idx = canonical_cyclic_generator(group);
  if (gen_idx < 0 && group.order() > 1)
    throw InputError("cyclic:k requires a cyclic group");
  std::vector<Matrix> mats(group.order());
  const double angle =
      2.0 * std::numbers::pi * k / static_cast<double>(group.order());
  Permutation power(group.degree());
  for (int t = 0; t < group.order(); ++t) {
    Matrix m(1, 1);
    m(0, 0) = std::polar(1.0, angle * t);
    mats[group.index_of(power)] = std::move(m);
    if (gen_idx >= 0) power = compose(power, group.element(gen_idx));
  }
  return UnitaryRep(group, std::move(mats), "cyclic:" + std::to_string(k));
}

UnitaryRep yor_rep(const PermGroup& group, const Partition& shape) {
  const int m = group.degree();
  if (shape.sum() != m)
    throw InputError("yor partition must sum to the group degree");
  std::uint64_t full_order = 1;
  for (int t = 2; t <= m; ++t) full_order *= static_cast<std::uint64_t>(t);
  if (static_cast<std::uint64_t>(group.order()) != full_order)
    throw InputError("yor requires the full symmetric group");
  const auto tableaux = standard_tableaux(shape);
  std::vector<Matrix> mats;
  mats.reserve(group.order());
  for (const auto& g : group.elements())
    mats.push_back(yor_matrix(tableaux, g).cast<Complex>());
  return UnitaryRep(group, std::move(mats), "yor:" + shape.to_string());
}

}  // namespace

UnitaryRep builtin_rep(const PermGroup& group, const std::string& spec) {
  UnitaryRep rep = [&]() {
    if (spec == "trivial") return trivial_rep(group);
    if (spec == "sign") return sign_rep(group);
    if (spec.rfind("cyclic:", 0) == 0) {
      int k = 0;
      try {
        k = std::stoi(spec.substr(7));
      } catch (const std::exception&) {
        throw InputError("cannot parse '" + spec + "'");
      }
      return cyclic_rep(group, k);
    }
    if (spec.rfind("yor:", 0) == 0)
      return yor_rep(group, parse_partition(spec.substr(4)));
    throw InputError("unknown representation spec '" + spec + "'");
  }();
  const RepValidation report = validate_rep(rep);
  if (!report.ok())
    throw ConsistencyError("builtin representation failed validation: " +
                           spec);
  return rep;
}

UnitaryRep load_rep(const PermGroup& group,
                    const std::vector<Matrix>& generator_matrices,
                    double tol) {
  if (generator_matrices.size() != group.generators().size())
    throw InputError("need exactly one matrix per group generator");
  int r = 1;
  if (!generator_matrices.empty()) {
    r = static_cast<int>(generator_matrices.front().rows());
    for (const auto& m : generator_matrices)
      if (m.rows() != r || m.cols() != r || r < 1)
        throw InputError("generator matrices must all be square of one size");
  }
  std::vector<Matrix> mats;
  mats.reserve(group.order());
  for (int idx = 0; idx < group.order(); ++idx) {
    Matrix prod = Matrix::Identity(r, r);
    for (int gi : group.words()[idx]) prod = prod * generator_matrices[gi];
    mats.push_back(std::move(prod));
  }
  UnitaryRep rep(group, std::move(mats), "loaded");
  // Two closure words reaching one element with different products show up
  // here as a homomorphism defect.
  double hom = 0.0;
  if (group.order() <= 120) {
    for (int a = 0; a < group.order(); ++a)
      for (int b = 0; b < group.order(); ++b) {
        const Permutation prod = compose(group.element(a), group.element(b));
        hom = std::max(
            hom, (rep.matrix(a) * rep.matrix(b) - rep.matrix(prod)).norm());
      }
  } else {
    Rng rng(0xBEEFULL);
    for (int t = 0; t < 5000; ++t) {
      const int a = static_cast<int>(rng.next() % group.order());
      const int b = static_cast<int>(rng.next() % group.order());
      const Permutation prod = compose(group.element(a), group.element(b));
      hom = std::max(
          hom, (rep.matrix(a) * rep.matrix(b) - rep.matrix(prod)).norm());
    }
  }
  if (hom >= tol * std::max(1.0, static_cast<double>(r)))
    throw InputError(
        "generator matrices do not extend to a homomorphism (residual " +
        std::to_string(hom) + ")");
  return rep;
}

}  // namespace cartsym
