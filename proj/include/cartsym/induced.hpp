#pragma once

#include "cartsym/classes.hpp"

namespace cartsym {

/// ×^m T: block-diagonal sum of m copies of T on the product space; commutes
/// with every q_matrix.
Matrix cartesian_power(const Matrix& t, int m);

/// The ambient operator I_U ⊗ (×^m T).
Matrix ambient_operator(const SymmetrizerContext& ctx, const Matrix& t);

/// K^X(T): the restriction of I ⊗ ×^m T to the symmetry class, expressed in
/// the orthonormalized basis so that the adjoint is the conjugate transpose.
struct InducedOperator {
  Matrix matrix;  // d x d
  Matrix source;  // the n x n operator T
  int dhat_size = 0;
};

/// Throws ConsistencyError when an image leaves the class (residual after
/// projecting by C_X above tol), which would contradict the invariance
/// C_X (I ⊗ ×^m T) = (I ⊗ ×^m T) C_X.
InducedOperator induced_operator(const SymmetrizerContext& ctx,
                                 const StandardBasis& basis, const Matrix& t);

/// The same operator written in the standard symmetrized basis, where it is
/// block-diagonal with |D̂| copies of T.
Matrix standard_coordinates(const InducedOperator& op,
                            const StandardBasis& basis);

struct HomomorphismReport {
  double residual = 0.0;  // ‖K(ST) − K(S)K(T)‖_F
  bool pass = false;
};

HomomorphismReport verify_homomorphism(const SymmetrizerContext& ctx,
                                       const StandardBasis& basis,
                                       const Matrix& s, const Matrix& t);

struct InjectivityReport {
  bool sources_equal = false;   // ‖S − T‖ < tol
  bool induced_equal = false;   // ‖K(S) − K(T)‖ < tol
  double source_difference = 0.0;
  double induced_difference = 0.0;

  bool agree() const { return sources_equal == induced_equal; }
};

InjectivityReport verify_injectivity(const SymmetrizerContext& ctx,
                                     const StandardBasis& basis,
                                     const Matrix& s, const Matrix& t);

struct OperatorProperties {
  bool normal = false;
  bool unitary = false;
  bool hermitian = false;
  bool skew_hermitian = false;
  bool psd = false;
  bool pd = false;

  friend bool operator==(const OperatorProperties&,
                         const OperatorProperties&) = default;
};

OperatorProperties operator_properties(const Matrix& m,
                                       double tol = kDefaultTol);

struct PropertyTransferReport {
  OperatorProperties source;
  OperatorProperties induced;
  double adjoint_residual = 0.0;  // ‖K(T)* − K(T*)‖_F

  bool properties_match() const { return source == induced; }
  bool pass(double tol) const {
    return properties_match() && adjoint_residual < tol;
  }
};

PropertyTransferReport verify_property_transfer(const SymmetrizerContext& ctx,
                                                const StandardBasis& basis,
                                                const Matrix& t);

struct RankDetReport {
  int rank_source = 0;
  int rank_induced = 0;
  int dhat_size = 0;
  Complex det_source;
  Complex det_induced;
  double det_residual = 0.0;

  bool rank_ok() const { return rank_induced == rank_source * dhat_size; }
  bool det_ok(double tol) const {
    return det_residual <
           tol * std::max(1.0, std::pow(std::abs(det_source),
                                        static_cast<double>(dhat_size)));
  }
};

RankDetReport verify_rank_det(const SymmetrizerContext& ctx,
                              const StandardBasis& basis, const Matrix& t);

}  // namespace cartsym
