#pragma once

#include <map>
#include <vector>

#include "cartsym/symmetrizer.hpp"

namespace cartsym {

struct OmegaSets {
  std::vector<int> omega;                 // character criterion, ascending
  std::vector<std::vector<int>> omega_k;  // per U basis vector, T_j u_k != 0
  bool consistent = false;                // omega == union of omega_k
};

/// Ω = {j : [χ, 1_{G_j}] != 0}, cross-checked against the projector route
/// Ω_k = {j : ‖T_j u_k‖ > tol}.
OmegaSets omega_sets(const SymmetrizerContext& ctx);

/// [χ, 1_{G_j}] rounded to the nearest integer; throws ConsistencyError when
/// the character sum is farther than 1e-6 from an integer.
int character_multiplicity(const SymmetrizerContext& ctx, int j);

/// dim V^X_ij = [χ, 1_{G_j}] for j in D̄ (the value is i-independent).
int cyclic_dim(const SymmetrizerContext& ctx, int j);

/// Per-orbit greedy selection: scan each orbit of D̄ in ascending index
/// order, keeping indices whose symmetrized vector C_X(u_1 ⊗ e_{1,·}) raises
/// the rank of the running Gram matrix, until s_j are kept.
std::vector<int> select_dhat(const SymmetrizerContext& ctx);

struct ClassStructure {
  std::vector<int> omega;
  std::vector<int> d_set;  // orbit representatives
  std::vector<int> d_bar;  // D ∩ Ω
  std::map<int, int> s;    // j in D̄ -> s_j
  std::vector<int> d_hat;  // per-orbit selections, concatenated
  int total_dim = 0;       // n · Σ s_j
  int rank_c = 0;          // numerical rank of C_X

  bool consistent() const { return total_dim == rank_c; }
};

ClassStructure build_structure(const SymmetrizerContext& ctx);

struct BasisLabel {
  int i = 0;  // 1-based V coordinate
  int j = 0;  // member of D̂
};

/// The standard symmetrized basis {C_X(u_1 ⊗ e_{ij})}, ordered with j (in
/// D̂ order) outer and i inner so induced operators are block-diagonal in it.
struct StandardBasis {
  std::vector<BasisLabel> labels;
  Matrix vectors;   // ambient_dim x d, one column per label
  Matrix gram;      // vectors.adjoint() * vectors
  Matrix ortho;     // orthonormal spanning columns (thin QR factor)
  Matrix r_factor;  // vectors = ortho * r_factor
  int dhat_size = 0;
};

/// Throws EmptyClassError when total_dim = 0 and ConsistencyError when the
/// selected vectors fail to be numerically independent.
StandardBasis standard_basis(const SymmetrizerContext& ctx,
                             const ClassStructure& structure);

/// True iff the Gram matrix is diagonal within tol; guaranteed for linear
/// (r = 1) representations.
bool is_ob_basis(const StandardBasis& basis, double tol = kDefaultTol);

}  // namespace cartsym
