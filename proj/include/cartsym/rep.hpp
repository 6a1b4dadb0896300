#pragma once

#include <string>
#include <vector>

#include "cartsym/permutation.hpp"
#include "cartsym/types.hpp"

namespace cartsym {

/// Character values indexed like the group's element list.
class Character {
 public:
  Character() = default;
  explicit Character(Vector values) : values_(std::move(values)) {}

  Eigen::Index group_order() const { return values_.size(); }
  Complex operator()(int elem_idx) const { return values_(elem_idx); }
  const Vector& values() const { return values_; }

 private:
  Vector values_;
};

/// (1/|G|) Σ_σ a(σ)·conj(b(σ)).
Complex char_inner(const Character& a, const Character& b);

/// [χ, 1_H] for a subgroup given by element indices: (1/|H|) Σ_{σ∈H} χ(σ).
Complex restricted_trivial_inner(const Character& chi,
                                 const std::vector<int>& subgroup);

/// A unitary representation stored as one explicit matrix per group element,
/// in the group's canonical element order.
class UnitaryRep {
 public:
  UnitaryRep(PermGroup group, std::vector<Matrix> matrices, std::string label);

  const PermGroup& group() const { return group_; }
  int dim_u() const { return dim_u_; }
  const Matrix& matrix(int elem_idx) const { return matrices_[elem_idx]; }
  const Matrix& matrix(const Permutation& p) const;
  const std::string& label() const { return label_; }

 private:
  PermGroup group_;
  std::vector<Matrix> matrices_;
  std::string label_;
  int dim_u_ = 0;
};

/// χ(σ) = trace X(σ).
Character character(const UnitaryRep& rep);

struct RepValidation {
  bool is_homomorphism = false;
  bool is_unitary = false;
  bool is_irreducible = false;  // warning-level: theorems needing it say so
  double homomorphism_residual = 0.0;
  double unitarity_residual = 0.0;
  double irreducibility_defect = 0.0;  // |[χ,χ] - 1|

  bool ok() const { return is_homomorphism && is_unitary; }
};

/// Homomorphism and unitarity residuals are exhaustive for |G| <= 120 and
/// sampled above; irreducibility via |[χ,χ] - 1| < tol.
RepValidation validate_rep(const UnitaryRep& rep, double tol = kDefaultTol);

/// Catalog constructions: "trivial", "sign", "cyclic:k" (cyclic groups),
/// "yor:[λ]" (full symmetric groups, Young's orthogonal form).
UnitaryRep builtin_rep(const PermGroup& group, const std::string& spec);

/// Extends one matrix per generator to the whole group along the closure
/// words; throws InputError if the assignment is not a homomorphism.
UnitaryRep load_rep(const PermGroup& group,
                    const std::vector<Matrix>& generator_matrices,
                    double tol = kDefaultTol);

}  // namespace cartsym
