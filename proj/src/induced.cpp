#include "cartsym/induced.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace cartsym {

Matrix cartesian_power(const Matrix& t, int m) {
  if (t.rows() != t.cols()) throw InputError("cartesian_power needs a square matrix");
  const int n = static_cast<int>(t.rows());
  Matrix out = Matrix::Zero(n * m, n * m);
  for (int b = 0; b < m; ++b) out.block(b * n, b * n, n, n) = t;
  return out;
}

Matrix ambient_operator(const SymmetrizerContext& ctx, const Matrix& t) {
  if (t.rows() != ctx.dim_v() || t.cols() != ctx.dim_v())
    throw InputError("operator must be n x n for the context's V");
  return kron(Matrix::Identity(ctx.dim_u(), ctx.dim_u()),
              cartesian_power(t, ctx.degree()));
}

InducedOperator induced_operator(const SymmetrizerContext& ctx,
                                 const StandardBasis& basis, const Matrix& t) {
  if (basis.labels.empty()) throw EmptyClassError("the symmetry class is zero");
  const Matrix images = ambient_operator(ctx, t) * basis.ortho;
  const double residual = (ctx.c_matrix() * images - images).norm();
  if (residual >= ctx.tol() * std::max(1.0, images.norm()))
    throw ConsistencyError(
        "operator image left the symmetry class (residual " +
        std::to_string(residual) + ")");
  return InducedOperator{basis.ortho.adjoint() * images, t, basis.dhat_size};
}

Matrix standard_coordinates(const InducedOperator& op,
                            const StandardBasis& basis) {
  // vectors = ortho · R, so the matrix in the standard basis is R⁻¹ K R.
  return basis.r_factor.triangularView<Eigen::Upper>().solve(op.matrix *
                                                             basis.r_factor);
}

HomomorphismReport verify_homomorphism(const SymmetrizerContext& ctx,
                                       const StandardBasis& basis,
                                       const Matrix& s, const Matrix& t) {
  const Matrix k_st = induced_operator(ctx, basis, s * t).matrix;
  const Matrix k_s = induced_operator(ctx, basis, s).matrix;
  const Matrix k_t = induced_operator(ctx, basis, t).matrix;
  HomomorphismReport report;
  report.residual = (k_st - k_s * k_t).norm();
  report.pass = report.residual <
                ctx.tol() * std::max({1.0, k_st.norm(), (k_s * k_t).norm()});
  return report;
}

InjectivityReport verify_injectivity(const SymmetrizerContext& ctx,
                                     const StandardBasis& basis,
                                     const Matrix& s, const Matrix& t) {
  InjectivityReport report;
  report.source_difference = (s - t).norm();
  report.sources_equal = report.source_difference < ctx.tol();
  const Matrix k_s = induced_operator(ctx, basis, s).matrix;
  const Matrix k_t = induced_operator(ctx, basis, t).matrix;
  report.induced_difference = (k_s - k_t).norm();
  report.induced_equal = report.induced_difference < ctx.tol();
  return report;
}

OperatorProperties operator_properties(const Matrix& m, double tol) {
  if (m.rows() != m.cols())
    throw InputError("operator_properties needs a square matrix");
  OperatorProperties props;
  const Matrix adj = m.adjoint();
  const double norm = m.norm();
  const double linear_scale = std::max(1.0, norm);
  const double quadratic_scale = std::max(1.0, norm * norm);
  props.normal = (m * adj - adj * m).norm() < tol * quadratic_scale;
  props.unitary =
      (m * adj - Matrix::Identity(m.rows(), m.cols())).norm() <
      tol * quadratic_scale;
  props.hermitian = (m - adj).norm() < tol * linear_scale;
  props.skew_hermitian = (m + adj).norm() < tol * linear_scale;
  if (props.hermitian) {
    Eigen::SelfAdjointEigenSolver<Matrix> eigs((m + adj) / 2.0);
    const double min_eig = eigs.eigenvalues().minCoeff();
    props.psd = min_eig > -tol * linear_scale;
    props.pd = min_eig > tol * linear_scale;
  }
  return props;
}

PropertyTransferReport verify_property_transfer(const SymmetrizerContext& ctx,
                                                const StandardBasis& basis,
                                                const Matrix& t) {
  PropertyTransferReport report;
  const Matrix k_t = induced_operator(ctx, basis, t).matrix;
  const Matrix k_t_adj = induced_operator(ctx, basis, t.adjoint()).matrix;
  report.adjoint_residual = (k_t.adjoint() - k_t_adj).norm();
  report.source = operator_properties(t, ctx.tol());
  report.induced = operator_properties(k_t, ctx.tol());
  return report;
}

RankDetReport verify_rank_det(const SymmetrizerContext& ctx,
                              const StandardBasis& basis, const Matrix& t) {
  RankDetReport report;
  const InducedOperator k = induced_operator(ctx, basis, t);
  report.dhat_size = k.dhat_size;
  report.rank_source = numerical_rank(t, ctx.tol());
  report.rank_induced = numerical_rank(k.matrix, ctx.tol());
  report.det_source = t.determinant();
  report.det_induced = k.matrix.determinant();
  Complex expected = 1.0;
  for (int i = 0; i < k.dhat_size; ++i) expected *= report.det_source;
  report.det_residual = std::abs(report.det_induced - expected);
  return report;
}

}  // namespace cartsym
