#include "cartsym/symmetrizer.hpp"

namespace cartsym {

CartesianTuple permute_entries(const CartesianTuple& x,
                               const Permutation& sigma) {
  if (sigma.degree() != x.length())
    throw InputError("permutation degree does not match tuple length");
  Matrix cols(x.dim_v(), x.length());
  for (int i = 1; i <= x.length(); ++i)
    cols.col(i - 1) = x.columns().col(sigma(i) - 1);
  return CartesianTuple(std::move(cols));
}

Matrix q_matrix(const Permutation& sigma, int dim_v) {
  const int m = sigma.degree();
  Matrix q = Matrix::Zero(m * dim_v, m * dim_v);
  for (int j = 1; j <= m; ++j)
    q.block((sigma(j) - 1) * dim_v, (j - 1) * dim_v, dim_v, dim_v) =
        Matrix::Identity(dim_v, dim_v);
  return q;
}

Matrix generalized_trace(const UnitaryRep& rep, const Matrix& a) {
  const int m = rep.group().degree();
  if (a.rows() != m || a.cols() != m)
    throw InputError("generalized trace needs an m x m matrix");
  const int r = rep.dim_u();
  Matrix out = Matrix::Zero(r, r);
  for (int idx = 0; idx < rep.group().order(); ++idx) {
    const Permutation& sigma = rep.group().element(idx);
    Complex weight = 0;
    for (int i = 1; i <= m; ++i) weight += a(i - 1, sigma(i) - 1);
    out += rep.matrix(idx) * weight;
  }
  return out;
}

Matrix t_projector(const UnitaryRep& rep, int p) { return t_transporter(rep, p, p); }

Matrix t_transporter(const UnitaryRep& rep, int s, int j) {
  const int r = rep.dim_u();
  const auto indices = rep.group().transporter(s, j);
  Matrix out = Matrix::Zero(r, r);
  if (indices.empty()) return out;
  for (int idx : indices) out += rep.matrix(idx);
  return out / static_cast<double>(indices.size());
}

SymmetrizerContext::SymmetrizerContext(UnitaryRep rep, int dim_v,
                                       ContextOptions opts)
    : rep_(std::move(rep)), dim_v_(dim_v), opts_(opts) {
  if (dim_v_ < 1) throw InputError("dim_v must be at least 1");
  if (opts_.tol <= 0) throw InputError("tolerance must be positive");
  const long ambient = static_cast<long>(rep_.dim_u()) * dim_v_ * degree();
  if (ambient > opts_.dim_cap)
    throw InputError("ambient dimension " + std::to_string(ambient) +
                     " exceeds cap " + std::to_string(opts_.dim_cap));
  Matrix sum = Matrix::Zero(ambient, ambient);
  for (int idx = 0; idx < group().order(); ++idx)
    sum += kron(rep_.matrix(idx), q_matrix(group().element(idx), dim_v_));
  c_matrix_ = sum / static_cast<double>(group().order());
}

SymmetrizerContext build_context(const UnitaryRep& rep, int dim_v,
                                 const ContextOptions& opts) {
  return SymmetrizerContext(rep, dim_v, opts);
}

Vector embed(const SymmetrizerContext& ctx, const Vector& u,
             const CartesianTuple& x) {
  if (u.size() != ctx.dim_u() || x.dim_v() != ctx.dim_v() ||
      x.length() != ctx.degree())
    throw InputError("embed: dimensions do not match the context");
  Vector out(ctx.ambient_dim());
  for (int k0 = 0; k0 < ctx.dim_u(); ++k0)
    for (int j0 = 0; j0 < ctx.degree(); ++j0)
      out.segment(ctx.ambient_index(k0, 0, j0), ctx.dim_v()) =
          u(k0) * x.columns().col(j0);
  return out;
}

SymmetrizedVector symmetrize(const SymmetrizerContext& ctx, const Vector& u,
                             const CartesianTuple& x) {
  return SymmetrizedVector{ctx.c_matrix() * embed(ctx, u, x), u, x};
}

Complex induced_inner(const SymmetrizerContext& ctx, const Vector& u,
                      const CartesianTuple& x, const Vector& v,
                      const CartesianTuple& y) {
  if (u.size() != ctx.dim_u() || v.size() != ctx.dim_u() ||
      x.dim_v() != ctx.dim_v() || y.dim_v() != ctx.dim_v() ||
      x.length() != ctx.degree() || y.length() != ctx.degree())
    throw InputError("induced_inner: dimensions do not match the context");
  // a_{ij} = ⟨x_i, y_j⟩ = y_j^* x_i.
  const Matrix a = (y.columns().adjoint() * x.columns()).transpose();
  const Vector w = generalized_trace(ctx.rep(), a) * u;
  return inner(w, v) / static_cast<double>(ctx.group().order());
}

namespace {

void check_coordinate_shape(const SymmetrizerContext& ctx, const Matrix& a,
                            const Matrix& b) {
  if (a.rows() != ctx.degree() || a.cols() != ctx.dim_v() ||
      b.rows() != ctx.degree() || b.cols() != ctx.dim_v())
    throw InputError("equality test needs two m x n coordinate matrices");
}

}  // namespace

bool equality_test(const SymmetrizerContext& ctx, const Matrix& a,
                   const Matrix& b) {
  check_coordinate_shape(ctx, a, b);
  const Matrix taa = generalized_trace(ctx.rep(), a * a.adjoint());
  const Matrix tab = generalized_trace(ctx.rep(), a * b.adjoint());
  const Matrix tbb = generalized_trace(ctx.rep(), b * b.adjoint());
  return approx_equal(taa, tab, ctx.tol()) && approx_equal(tab, tbb, ctx.tol());
}

bool equality_test_direct(const SymmetrizerContext& ctx, const Matrix& a,
                          const Matrix& b) {
  check_coordinate_shape(ctx, a, b);
  const CartesianTuple x = CartesianTuple::from_rows(a);
  const CartesianTuple y = CartesianTuple::from_rows(b);
  for (int k0 = 0; k0 < ctx.dim_u(); ++k0) {
    const Vector u = Vector::Unit(ctx.dim_u(), k0);
    if (!approx_equal(symmetrize(ctx, u, x).coords,
                      symmetrize(ctx, u, y).coords, ctx.tol()))
      return false;
  }
  return true;
}

}  // namespace cartsym
