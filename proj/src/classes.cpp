#include "cartsym/classes.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/QR>

namespace cartsym {

namespace {
constexpr double kIntegralityTol = 1e-6;
}

OmegaSets omega_sets(const SymmetrizerContext& ctx) {
  OmegaSets out;
  const int m = ctx.degree();
  const int r = ctx.dim_u();
  out.omega_k.resize(r);
  std::vector<char> in_union(m + 1, 0);
  for (int j = 1; j <= m; ++j) {
    const Matrix tj = t_projector(ctx.rep(), j);
    for (int k0 = 0; k0 < r; ++k0) {
      if (tj.col(k0).norm() > ctx.tol()) {
        out.omega_k[k0].push_back(j);
        in_union[j] = 1;
      }
    }
    if (character_multiplicity(ctx, j) != 0) out.omega.push_back(j);
  }
  std::vector<int> union_k;
  for (int j = 1; j <= m; ++j)
    if (in_union[j]) union_k.push_back(j);
  out.consistent = union_k == out.omega;
  return out;
}

int character_multiplicity(const SymmetrizerContext& ctx, int j) {
  const Character chi = character(ctx.rep());
  const Complex value =
      restricted_trivial_inner(chi, ctx.group().stabilizer(j));
  const double rounded = std::round(value.real());
  if (std::abs(value.real() - rounded) > kIntegralityTol ||
      std::abs(value.imag()) > kIntegralityTol)
    throw ConsistencyError(
        "character sum over a stabilizer is not an integer; the "
        "representation is likely invalid");
  return static_cast<int>(rounded);
}

int cyclic_dim(const SymmetrizerContext& ctx, int j) {
  return character_multiplicity(ctx, j);
}

namespace {

std::vector<int> greedy_orbit_selection(const SymmetrizerContext& ctx, int j,
                                        int target) {
  std::vector<int> kept;
  Matrix chosen(ctx.ambient_dim(), 0);
  for (int candidate : ctx.group().orbit_of(j)) {
    if (static_cast<int>(kept.size()) == target) break;
    Matrix trial(ctx.ambient_dim(), chosen.cols() + 1);
    trial.leftCols(chosen.cols()) = chosen;
    trial.col(chosen.cols()) =
        ctx.standard_symmetrized(0, 0, candidate - 1);
    const Matrix gram = trial.adjoint() * trial;
    if (numerical_rank(gram, ctx.tol()) ==
        static_cast<int>(trial.cols())) {
      chosen = std::move(trial);
      kept.push_back(candidate);
    }
  }
  if (static_cast<int>(kept.size()) < target)
    throw ConsistencyError(
        "orbit of " + std::to_string(j) + " yielded only " +
        std::to_string(kept.size()) + " independent vectors of " +
        std::to_string(target) + " expected; tolerance failure");
  return kept;
}

}  // namespace

std::vector<int> select_dhat(const SymmetrizerContext& ctx) {
  std::vector<int> d_hat;
  const OmegaSets omega = omega_sets(ctx);
  for (int j : ctx.group().orbit_representatives()) {
    if (!std::binary_search(omega.omega.begin(), omega.omega.end(), j))
      continue;
    const auto kept = greedy_orbit_selection(ctx, j, cyclic_dim(ctx, j));
    d_hat.insert(d_hat.end(), kept.begin(), kept.end());
  }
  return d_hat;
}

ClassStructure build_structure(const SymmetrizerContext& ctx) {
  ClassStructure st;
  st.omega = omega_sets(ctx).omega;
  st.d_set = ctx.group().orbit_representatives();
  for (int j : st.d_set)
    if (std::binary_search(st.omega.begin(), st.omega.end(), j))
      st.d_bar.push_back(j);
  int s_total = 0;
  for (int j : st.d_bar) {
    st.s[j] = cyclic_dim(ctx, j);
    s_total += st.s[j];
  }
  st.d_hat = select_dhat(ctx);
  st.total_dim = ctx.dim_v() * s_total;
  st.rank_c = numerical_rank(ctx.c_matrix(), ctx.tol());
  return st;
}

StandardBasis standard_basis(const SymmetrizerContext& ctx,
                             const ClassStructure& structure) {
  if (structure.total_dim == 0)
    throw EmptyClassError("the symmetry class is zero");
  StandardBasis basis;
  basis.dhat_size = static_cast<int>(structure.d_hat.size());
  const int d = structure.total_dim;
  basis.vectors.resize(ctx.ambient_dim(), d);
  int col = 0;
  for (int j : structure.d_hat)
    for (int i = 1; i <= ctx.dim_v(); ++i) {
      basis.labels.push_back({i, j});
      basis.vectors.col(col++) = ctx.standard_symmetrized(0, i - 1, j - 1);
    }
  basis.gram = basis.vectors.adjoint() * basis.vectors;
  if (numerical_rank(basis.gram, ctx.tol()) != d)
    throw ConsistencyError("standard basis vectors are not independent");
  Eigen::HouseholderQR<Matrix> qr(basis.vectors);
  basis.ortho = qr.householderQ() * Matrix::Identity(ctx.ambient_dim(), d);
  basis.r_factor = qr.matrixQR()
                       .topRows(d)
                       .template triangularView<Eigen::Upper>();
  return basis;
}

bool is_ob_basis(const StandardBasis& basis, double tol) {
  Matrix off = basis.gram;
  off.diagonal().setZero();
  return approx_zero(off, tol, basis.gram.norm());
}

}  // namespace cartsym
