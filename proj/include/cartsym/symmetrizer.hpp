#pragma once

#include "cartsym/numeric.hpp"
#include "cartsym/rep.hpp"
#include "cartsym/types.hpp"

namespace cartsym {

/// An m-tuple of vectors in C^n, stored as the columns of an n x m matrix.
class CartesianTuple {
 public:
  CartesianTuple(int dim_v, int length)
      : columns_(Matrix::Zero(dim_v, length)) {}
  explicit CartesianTuple(Matrix columns) : columns_(std::move(columns)) {}

  /// Row i of the coordinate matrix holds the i-th entry of the tuple.
  static CartesianTuple from_rows(const Matrix& row_coords) {
    return CartesianTuple(row_coords.transpose());
  }

  int dim_v() const { return static_cast<int>(columns_.rows()); }
  int length() const { return static_cast<int>(columns_.cols()); }
  const Matrix& columns() const { return columns_; }

 private:
  Matrix columns_;
};

/// Entry i of the result is x_{σ(i)}.
CartesianTuple permute_entries(const CartesianTuple& x,
                               const Permutation& sigma);

/// Block 0/1 orthogonal matrix on the nm-dimensional product space sending
/// coordinate block j to block σ(j); Q(σπ) = Q(σ)Q(π).
Matrix q_matrix(const Permutation& sigma, int dim_v);

/// Tr_X(A) = Σ_σ X(σ) · Σ_i a_{iσ(i)}, an r x r matrix; A must be m x m.
Matrix generalized_trace(const UnitaryRep& rep, const Matrix& a);

/// T_p = (1/|G_p|) Σ_{σ∈G_p} X(σ), an orthogonal projection on U (1-based p).
Matrix t_projector(const UnitaryRep& rep, int p);

/// T_sj averages X over {σ : σ(j) = s}; the zero matrix when the set is
/// empty, T_j when s = j.
Matrix t_transporter(const UnitaryRep& rep, int s, int j);

struct ContextOptions {
  double tol = kDefaultTol;
  int dim_cap = kDefaultDimCap;
};

/// The ambient space U ⊗ (×^m V) with the cached symmetrizer
/// C_X = (1/|G|) Σ_σ X(σ) ⊗ Q(σ). Ambient coordinates follow
/// index = (k·m + j)·n + i with k the U index (slowest), j the tuple slot,
/// i the V coordinate (fastest), all 0-based here.
class SymmetrizerContext {
 public:
  SymmetrizerContext(UnitaryRep rep, int dim_v, ContextOptions opts);

  const UnitaryRep& rep() const { return rep_; }
  const PermGroup& group() const { return rep_.group(); }
  int dim_u() const { return rep_.dim_u(); }
  int dim_v() const { return dim_v_; }
  int degree() const { return group().degree(); }
  int ambient_dim() const { return static_cast<int>(c_matrix_.rows()); }
  double tol() const { return opts_.tol; }
  const Matrix& c_matrix() const { return c_matrix_; }

  int ambient_index(int k0, int i0, int j0) const {
    return (k0 * degree() + j0) * dim_v_ + i0;
  }

  /// Column of C_X at the ambient coordinate of u_{k0+1} ⊗ e_{i0+1,j0+1};
  /// these span the symmetry class.
  Vector standard_symmetrized(int k0, int i0, int j0) const {
    return c_matrix_.col(ambient_index(k0, i0, j0));
  }

 private:
  UnitaryRep rep_;
  int dim_v_;
  ContextOptions opts_;
  Matrix c_matrix_;
};

SymmetrizerContext build_context(const UnitaryRep& rep, int dim_v,
                                 const ContextOptions& opts = {});

struct SymmetrizedVector {
  Vector coords;  // ambient coordinates of C_X(u ⊗ x)
  Vector u;       // provenance
  CartesianTuple x;
};

/// Ambient coordinates of u ⊗ x^×.
Vector embed(const SymmetrizerContext& ctx, const Vector& u,
             const CartesianTuple& x);

SymmetrizedVector symmetrize(const SymmetrizerContext& ctx, const Vector& u,
                             const CartesianTuple& x);

/// ⟨C_X(u ⊗ x), v ⊗ y⟩ evaluated through the generalized trace:
/// (1/|G|)·⟨Tr_X(A)u, v⟩ with a_{ij} = ⟨x_i, y_j⟩.
Complex induced_inner(const SymmetrizerContext& ctx, const Vector& u,
                      const CartesianTuple& x, const Vector& v,
                      const CartesianTuple& y);

/// Symmetrized-vector equality criterion from the three-way generalized
/// trace identity Tr_X(AA*) = Tr_X(AB*) = Tr_X(BB*); a and b are m x n
/// matrices whose rows hold tuple-entry coordinates.
bool equality_test(const SymmetrizerContext& ctx, const Matrix& a,
                   const Matrix& b);

/// The same predicate decided directly: C_X(u_k ⊗ x) = C_X(u_k ⊗ y) for
/// every basis vector u_k of U.
bool equality_test_direct(const SymmetrizerContext& ctx, const Matrix& a,
                          const Matrix& b);

}  // namespace cartsym
