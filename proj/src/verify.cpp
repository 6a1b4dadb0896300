#include "cartsym/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

namespace cartsym {

const char* property_name(OperatorProperty p) {
  switch (p) {
    case OperatorProperty::Normal: return "normal";
    case OperatorProperty::Unitary: return "unitary";
    case OperatorProperty::Hermitian: return "hermitian";
    case OperatorProperty::SkewHermitian: return "skew_hermitian";
    case OperatorProperty::Psd: return "psd";
    case OperatorProperty::Pd: return "pd";
  }
  return "?";
}

bool property_value(const OperatorProperties& props, OperatorProperty p) {
  switch (p) {
    case OperatorProperty::Normal: return props.normal;
    case OperatorProperty::Unitary: return props.unitary;
    case OperatorProperty::Hermitian: return props.hermitian;
    case OperatorProperty::SkewHermitian: return props.skew_hermitian;
    case OperatorProperty::Psd: return props.psd;
    case OperatorProperty::Pd: return props.pd;
  }
  return false;
}

Matrix random_unitary(Rng& rng, int n) {
  Eigen::HouseholderQR<Matrix> qr(rng.matrix(n, n));
  return qr.householderQ() * Matrix::Identity(n, n);
}

Matrix make_with_property(Rng& rng, int n, OperatorProperty p) {
  switch (p) {
    case OperatorProperty::Normal: {
      const Matrix u = random_unitary(rng, n);
      Matrix d = Matrix::Zero(n, n);
      for (int i = 0; i < n; ++i) d(i, i) = rng.entry();
      return u * d * u.adjoint();
    }
    case OperatorProperty::Unitary:
      return random_unitary(rng, n);
    case OperatorProperty::Hermitian: {
      const Matrix a = rng.matrix(n, n);
      return (a + a.adjoint()) / 2.0;
    }
    case OperatorProperty::SkewHermitian: {
      const Matrix a = rng.matrix(n, n);
      return (a - a.adjoint()) / 2.0;
    }
    case OperatorProperty::Psd: {
      const Matrix a = rng.matrix(n, n);
      return a.adjoint() * a;
    }
    case OperatorProperty::Pd: {
      const Matrix a = rng.matrix(n, n);
      return a.adjoint() * a + Matrix::Identity(n, n);
    }
  }
  return Matrix::Identity(n, n);
}

Matrix make_without_property(Rng& rng, int n, OperatorProperty p) {
  switch (p) {
    case OperatorProperty::Normal: {
      if (n == 1) return rng.matrix(1, 1);
      // Triangular with a nonzero off-diagonal entry is never normal.
      Matrix m = Matrix::Zero(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m(i, j) = rng.entry();
      m(0, 1) += 2.0;
      return m;
    }
    case OperatorProperty::Unitary:
      return 2.0 * random_unitary(rng, n);
    case OperatorProperty::Hermitian: {
      const Matrix a = rng.matrix(n, n);
      return (a + a.adjoint()) / 2.0 + Complex(0, 1) * Matrix::Identity(n, n);
    }
    case OperatorProperty::SkewHermitian: {
      const Matrix a = rng.matrix(n, n);
      return (a - a.adjoint()) / 2.0 + Matrix::Identity(n, n);
    }
    case OperatorProperty::Psd: {
      const Matrix a = rng.matrix(n, n);
      const Matrix h = a.adjoint() * a;
      return h - (h.norm() + 1.0) * Matrix::Identity(n, n);
    }
    case OperatorProperty::Pd: {
      Matrix a = rng.matrix(n, n);
      a.col(n - 1).setZero();  // singular p.s.d., hence not p.d.
      return a.adjoint() * a;
    }
  }
  return Matrix::Identity(n, n);
}

Matrix make_with_rank(Rng& rng, int n, int rank) {
  if (rank <= 0) return Matrix::Zero(n, n);
  rank = std::min(rank, n);
  return rng.matrix(n, rank) * rng.matrix(rank, n);
}

namespace {

bool scalar_close(Complex a, Complex b, double tol) {
  return std::abs(a - b) < tol * std::max({1.0, std::abs(a), std::abs(b)});
}

struct SuiteContext {
  const SymmetrizerContext& ctx;
  std::uint64_t seed;
  ClassStructure structure;
  StandardBasis basis;
  bool structure_ok = false;
  bool has_class = false;
  std::string structure_error;
};

SuiteContext make_suite(const SymmetrizerContext& ctx, std::uint64_t seed) {
  SuiteContext s{ctx, seed, {}, {}, false, false, {}};
  try {
    s.structure = build_structure(ctx);
    s.structure_ok = true;
    if (s.structure.total_dim > 0) {
      s.basis = standard_basis(ctx, s.structure);
      s.has_class = true;
    }
  } catch (const std::exception& e) {
    s.structure_error = e.what();
  }
  return s;
}

CheckResult run_check(const std::string& name,
                      const std::function<void(CheckResult&)>& body) {
  CheckResult result;
  result.name = name;
  try {
    body(result);
  } catch (const std::exception& e) {
    result.pass = false;
    result.detail = e.what();
  }
  return result;
}

std::string count_detail(int failures, int total) {
  std::ostringstream os;
  os << failures << " failures of " << total << " cases";
  return os.str();
}

void check_group_closure(const SuiteContext& s, CheckResult& out) {
  const PermGroup& g = s.ctx.group();
  int failures = 0, total = 0;
  if (g.order() <= 120) {
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b, ++total)
        if (g.index_of(compose(g.element(a), g.element(b))) < 0) ++failures;
  } else {
    Rng rng(s.seed + 1000);
    for (int t = 0; t < 2000; ++t, ++total) {
      const int a = static_cast<int>(rng.next() % g.order());
      const int b = static_cast<int>(rng.next() % g.order());
      if (g.index_of(compose(g.element(a), g.element(b))) < 0) ++failures;
    }
  }
  out.pass = failures == 0;
  out.detail = count_detail(failures, total);
}

void check_transporter_sizes(const SuiteContext& s, CheckResult& out) {
  const PermGroup& g = s.ctx.group();
  int failures = 0, total = 0;
  for (int j = 1; j <= g.degree(); ++j) {
    const std::size_t stab = g.stabilizer(j).size();
    for (int p = 1; p <= g.degree(); ++p, ++total) {
      const std::size_t expected = g.same_orbit(p, j) ? stab : 0;
      if (g.transporter(p, j).size() != expected) ++failures;
    }
  }
  out.pass = failures == 0;
  out.detail = count_detail(failures, total);
}

void check_coset_partition(const SuiteContext& s, CheckResult& out) {
  const PermGroup& g = s.ctx.group();
  int failures = 0;
  for (int j = 1; j <= g.degree(); ++j) {
    const auto reps = g.coset_reps(j);
    const auto stab = g.stabilizer(j);
    std::set<std::vector<int>> covered;
    for (const auto& rep : reps)
      for (int idx : stab)
        if (!covered.insert(compose(rep, g.element(idx)).images()).second)
          ++failures;  // cosets overlap
    if (static_cast<int>(covered.size()) != g.order()) ++failures;
    if (!reps.front().is_identity()) ++failures;
  }
  out.pass = failures == 0;
  out.detail = count_detail(failures, g.degree());
}

void check_orbit_sizes(const SuiteContext& s, CheckResult& out) {
  const PermGroup& g = s.ctx.group();
  int total = 0;
  for (const auto& orbit : g.orbits()) total += static_cast<int>(orbit.size());
  out.pass = total == g.degree();
  out.residual = std::abs(total - g.degree());
}

void check_rep_homomorphism(const SuiteContext& s, CheckResult& out) {
  const RepValidation v = validate_rep(s.ctx.rep(), s.ctx.tol());
  out.pass = v.is_homomorphism;
  out.residual = v.homomorphism_residual;
}

void check_rep_unitarity(const SuiteContext& s, CheckResult& out) {
  const RepValidation v = validate_rep(s.ctx.rep(), s.ctx.tol());
  out.pass = v.is_unitary;
  out.residual = v.unitarity_residual;
}

void check_rep_irreducibility(const SuiteContext& s, CheckResult& out) {
  const RepValidation v = validate_rep(s.ctx.rep(), s.ctx.tol());
  out.residual = v.irreducibility_defect;
  out.detail = v.is_irreducible ? "irreducible" : "NOT irreducible (warning)";
  out.pass = true;  // warning-level; unitarity is the standing hypothesis
}

void check_character_classes(const SuiteContext& s, CheckResult& out) {
  const PermGroup& g = s.ctx.group();
  const Character chi = character(s.ctx.rep());
  double residual = 0.0;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) {
      const Permutation conj =
          compose(compose(g.element(b), g.element(a)), invert(g.element(b)));
      residual = std::max(residual, std::abs(chi(a) - chi(g.index_of(conj))));
    }
  out.residual = residual;
  out.pass = residual < s.ctx.tol() * std::max(1.0, static_cast<double>(s.ctx.dim_u()));
}

void check_projection(const SuiteContext& s, CheckResult& out) {
  const Matrix& c = s.ctx.c_matrix();
  out.residual = (c * c - c).norm();
  out.pass = out.residual < s.ctx.tol();
}

void check_hermitian(const SuiteContext& s, CheckResult& out) {
  const Matrix& c = s.ctx.c_matrix();
  out.residual = (c - c.adjoint()).norm();
  out.pass = out.residual < s.ctx.tol();
}

void check_q_homomorphism(const SuiteContext& s, CheckResult& out) {
  const PermGroup& g = s.ctx.group();
  const int n = s.ctx.dim_v();
  double residual = 0.0;
  auto probe = [&](int a, int b) {
    const Matrix lhs = q_matrix(g.element(a), n) * q_matrix(g.element(b), n);
    const Matrix rhs = q_matrix(compose(g.element(a), g.element(b)), n);
    residual = std::max(residual, (lhs - rhs).norm());
  };
  if (g.order() <= 24) {
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b) probe(a, b);
  } else {
    Rng rng(s.seed + 2000);
    for (int t = 0; t < 500; ++t)
      probe(static_cast<int>(rng.next() % g.order()),
            static_cast<int>(rng.next() % g.order()));
  }
  out.residual = residual;
  out.pass = residual == 0.0;  // exact 0/1 matrices
}

void check_trace_adjoint(const SuiteContext& s, CheckResult& out) {
  Rng rng(s.seed + 3000);
  const int m = s.ctx.degree();
  double residual = 0.0;
  bool pass = true;
  for (int t = 0; t < 100; ++t) {
    const Matrix a = rng.matrix(m, m);
    const Matrix lhs = generalized_trace(s.ctx.rep(), a.adjoint());
    const Matrix rhs = generalized_trace(s.ctx.rep(), a).adjoint();
    residual = std::max(residual, (lhs - rhs).norm());
    pass = pass && approx_equal(lhs, rhs, s.ctx.tol());
  }
  out.residual = residual;
  out.pass = pass;
}

void check_shift_lemma(const SuiteContext& s, CheckResult& out) {
  Rng rng(s.seed + 4000);
  double residual = 0.0;
  bool pass = true;
  for (int t = 0; t < 10; ++t) {
    const Vector u = rng.vector(s.ctx.dim_u());
    const CartesianTuple x(rng.matrix(s.ctx.dim_v(), s.ctx.degree()));
    for (int idx = 0; idx < s.ctx.group().order(); ++idx) {
      const Vector lhs =
          symmetrize(s.ctx, u, permute_entries(x, s.ctx.group().element(idx)))
              .coords;
      const Vector rhs =
          symmetrize(s.ctx, Vector(s.ctx.rep().matrix(idx) * u), x).coords;
      residual = std::max(residual, (lhs - rhs).norm());
      pass = pass && approx_equal(lhs, rhs, s.ctx.tol());
    }
  }
  out.residual = residual;
  out.pass = pass;
}

void check_inner_product(const SuiteContext& s, CheckResult& out) {
  Rng rng(s.seed + 5000);
  double residual = 0.0;
  bool pass = true;
  for (int t = 0; t < 100; ++t) {
    const Vector u = rng.vector(s.ctx.dim_u());
    const Vector v = rng.vector(s.ctx.dim_u());
    const CartesianTuple x(rng.matrix(s.ctx.dim_v(), s.ctx.degree()));
    const CartesianTuple y(rng.matrix(s.ctx.dim_v(), s.ctx.degree()));
    const Complex via_trace = induced_inner(s.ctx, u, x, v, y);
    const Complex direct =
        inner(symmetrize(s.ctx, u, x).coords, embed(s.ctx, v, y));
    residual = std::max(residual, std::abs(via_trace - direct));
    pass = pass && scalar_close(via_trace, direct, s.ctx.tol());
  }
  out.residual = residual;
  out.pass = pass;
}

void check_norm_identity(const SuiteContext& s, CheckResult& out) {
  double residual = 0.0;
  for (int j = 1; j <= s.ctx.degree(); ++j) {
    const Matrix tj = t_projector(s.ctx.rep(), j);
    const double index = static_cast<double>(s.ctx.group().order()) /
                         static_cast<double>(s.ctx.group().stabilizer(j).size());
    for (int k0 = 0; k0 < s.ctx.dim_u(); ++k0)
      for (int i0 = 0; i0 < s.ctx.dim_v(); ++i0) {
        const double lhs =
            s.ctx.standard_symmetrized(k0, i0, j - 1).squaredNorm();
        const double rhs = tj.col(k0).squaredNorm() / index;
        residual = std::max(residual, std::abs(lhs - rhs));
      }
  }
  out.residual = residual;
  out.pass = residual < s.ctx.tol();
}

void check_equality_criterion(const SuiteContext& s, CheckResult& out) {
  Rng rng(s.seed + 6000);
  const int m = s.ctx.degree();
  const int n = s.ctx.dim_v();
  int failures = 0, total = 0;
  for (int t = 0; t < 100; ++t, ++total) {
    const Matrix a = rng.matrix(m, n);
    const Matrix b = rng.matrix(m, n);
    if (equality_test(s.ctx, a, b) != equality_test_direct(s.ctx, a, b))
      ++failures;
  }
  for (int t = 0; t < 20; ++t, ++total) {
    const Matrix a = rng.matrix(m, n);
    const Permutation& sigma = s.ctx.group().element(t % s.ctx.group().order());
    Matrix b(m, n);
    for (int i = 1; i <= m; ++i) b.row(i - 1) = a.row(sigma(i) - 1);
    if (equality_test(s.ctx, a, b) != equality_test_direct(s.ctx, a, b))
      ++failures;
  }
  out.pass = failures == 0;
  out.detail = count_detail(failures, total);
}

void check_omega_agreement(const SuiteContext& s, CheckResult& out) {
  out.pass = omega_sets(s.ctx).consistent;
}

void check_dimension_formula(const SuiteContext& s, CheckResult& out) {
  out.residual = std::abs(s.structure.total_dim - s.structure.rank_c);
  out.pass = s.structure.consistent();
  std::ostringstream os;
  os << "total_dim=" << s.structure.total_dim
     << " rank(C)=" << s.structure.rank_c;
  out.detail = os.str();
}

void check_cyclic_dims(const SuiteContext& s, CheckResult& out) {
  int failures = 0;
  for (int j : s.structure.d_bar) {
    const auto reps = s.ctx.group().coset_reps(j);
    Matrix orbit_vectors(s.ctx.ambient_dim(), reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c)
      orbit_vectors.col(c) = s.ctx.standard_symmetrized(0, 0, reps[c](j) - 1);
    const Matrix gram = orbit_vectors.adjoint() * orbit_vectors;
    if (numerical_rank(gram, s.ctx.tol()) != s.structure.s.at(j)) ++failures;
  }
  out.pass = failures == 0;
  out.detail =
      count_detail(failures, static_cast<int>(s.structure.d_bar.size()));
}

void check_orthogonality(const SuiteContext& s, CheckResult& out) {
  const int r = s.ctx.dim_u();
  const int n = s.ctx.dim_v();
  const int m = s.ctx.degree();
  double residual = 0.0;
  auto probe = [&](int k0, int l0, int i0, int r0, int j, int p) {
    const Complex lhs = inner(s.ctx.standard_symmetrized(k0, i0, j - 1),
                              s.ctx.standard_symmetrized(l0, r0, p - 1));
    Complex rhs = 0;
    if (s.ctx.group().same_orbit(p, j) && i0 == r0) {
      const auto transporter = s.ctx.group().transporter(p, j);
      const Matrix tsj = t_transporter(s.ctx.rep(), p, j);
      rhs = inner(Vector(tsj * Vector::Unit(r, k0)), Vector(Vector::Unit(r, l0))) *
            (static_cast<double>(transporter.size()) /
             static_cast<double>(s.ctx.group().order()));
    }
    residual = std::max(residual, std::abs(lhs - rhs));
  };
  const long tuples = static_cast<long>(r) * r * n * n * m * m;
  if (tuples <= 20000) {
    for (int k0 = 0; k0 < r; ++k0)
      for (int l0 = 0; l0 < r; ++l0)
        for (int i0 = 0; i0 < n; ++i0)
          for (int r0 = 0; r0 < n; ++r0)
            for (int j = 1; j <= m; ++j)
              for (int p = 1; p <= m; ++p) probe(k0, l0, i0, r0, j, p);
  } else {
    Rng rng(s.seed + 7000);
    for (int t = 0; t < 5000; ++t)
      probe(static_cast<int>(rng.next() % r), static_cast<int>(rng.next() % r),
            static_cast<int>(rng.next() % n), static_cast<int>(rng.next() % n),
            1 + static_cast<int>(rng.next() % m),
            1 + static_cast<int>(rng.next() % m));
  }
  out.residual = residual;
  out.pass = residual < s.ctx.tol();
}

void check_vanishing(const SuiteContext& s, CheckResult& out) {
  int failures = 0, total = 0;
  for (int j = 1; j <= s.ctx.degree(); ++j) {
    const Matrix tj = t_projector(s.ctx.rep(), j);
    for (int k0 = 0; k0 < s.ctx.dim_u(); ++k0)
      for (int i0 = 0; i0 < s.ctx.dim_v(); ++i0, ++total) {
        const bool vector_zero =
            s.ctx.standard_symmetrized(k0, i0, j - 1).norm() < s.ctx.tol();
        const bool projector_zero = tj.col(k0).norm() < s.ctx.tol();
        if (vector_zero != projector_zero) ++failures;
      }
  }
  out.pass = failures == 0;
  out.detail = count_detail(failures, total);
}

Matrix column_space_projector(const Matrix& columns, double tol) {
  Eigen::JacobiSVD<Matrix> svd(columns, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) <= 0.0)
    return Matrix::Zero(columns.rows(), columns.rows());
  const double threshold = tol * sv(0) *
                           static_cast<double>(std::max(columns.rows(),
                                                        columns.cols()));
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > threshold) ++rank;
  const Matrix u = svd.matrixU().leftCols(rank);
  return u * u.adjoint();
}

void check_cyclic_subspaces(const SuiteContext& s, CheckResult& out) {
  // Within an orbit the cyclic subspaces coincide; distinct i blocks are
  // orthogonal.
  const int r = s.ctx.dim_u();
  double residual = 0.0;
  auto frame = [&](int i0, int j) {
    Matrix cols(s.ctx.ambient_dim(), r);
    for (int k0 = 0; k0 < r; ++k0)
      cols.col(k0) = s.ctx.standard_symmetrized(k0, i0, j - 1);
    return cols;
  };
  for (int j : s.structure.d_bar) {
    const Matrix pj = column_space_projector(frame(0, j), s.ctx.tol());
    for (int p : s.ctx.group().orbit_of(j)) {
      const Matrix pp = column_space_projector(frame(0, p), s.ctx.tol());
      residual = std::max(residual, (pj - pp).norm());
    }
    if (s.ctx.dim_v() >= 2)
      residual =
          std::max(residual, (frame(0, j).adjoint() * frame(1, j)).norm());
  }
  out.residual = residual;
  out.pass = residual < s.ctx.tol() * 100.0;
}

void check_basis_independence(const SuiteContext& s, CheckResult& out) {
  const int rank = numerical_rank(s.basis.gram, s.ctx.tol());
  out.pass = rank == static_cast<int>(s.basis.labels.size());
  std::ostringstream os;
  os << "gram rank " << rank << " of " << s.basis.labels.size();
  out.detail = os.str();
}

void check_ob_status(const SuiteContext& s, CheckResult& out) {
  const bool ob = is_ob_basis(s.basis, s.ctx.tol());
  std::ostringstream os;
  os << "ob_basis=" << (ob ? "true" : "false");
  out.detail = os.str();
  // Linear representations are guaranteed o.b.; larger r is only reported.
  out.pass = s.ctx.dim_u() > 1 || ob;
}

void check_commutation(const SuiteContext& s, CheckResult& out) {
  Rng rng(s.seed + 8000);
  const Matrix t = rng.matrix(s.ctx.dim_v(), s.ctx.dim_v());
  const Matrix power = cartesian_power(t, s.ctx.degree());
  double residual = 0.0;
  const int limit = std::min(s.ctx.group().order(), 24);
  for (int idx = 0; idx < limit; ++idx) {
    const Matrix q = q_matrix(s.ctx.group().element(idx), s.ctx.dim_v());
    residual = std::max(residual, (power * q - q * power).norm());
  }
  out.residual = residual;
  out.pass = residual == 0.0;  // block moves are exact
}

void check_invariance(const SuiteContext& s, CheckResult& out) {
  Rng rng(s.seed + 9000);
  double residual = 0.0;
  bool pass = true;
  for (int t = 0; t < 5; ++t) {
    const Matrix op =
        ambient_operator(s.ctx, rng.matrix(s.ctx.dim_v(), s.ctx.dim_v()));
    const Matrix lhs = s.ctx.c_matrix() * op;
    const Matrix rhs = op * s.ctx.c_matrix();
    residual = std::max(residual, (lhs - rhs).norm());
    pass = pass && approx_equal(lhs, rhs, s.ctx.tol());
  }
  out.residual = residual;
  out.pass = pass;
}

void check_block_form(const SuiteContext& s, CheckResult& out) {
  Rng rng(s.seed + 10000);
  double residual = 0.0;
  bool pass = true;
  for (int t = 0; t < 3; ++t) {
    const Matrix op = rng.matrix(s.ctx.dim_v(), s.ctx.dim_v());
    const InducedOperator k = induced_operator(s.ctx, s.basis, op);
    const Matrix in_standard = standard_coordinates(k, s.basis);
    const Matrix expected = kron(Matrix::Identity(k.dhat_size, k.dhat_size), op);
    residual = std::max(residual, (in_standard - expected).norm());
    pass = pass && approx_equal(in_standard, expected, s.ctx.tol() * 100.0);
  }
  out.residual = residual;
  out.pass = pass;
}

void check_induced_homomorphism(const SuiteContext& s, CheckResult& out) {
  Rng rng(s.seed + 11000);
  double residual = 0.0;
  bool pass = true;
  for (int t = 0; t < 5; ++t) {
    const Matrix a = rng.matrix(s.ctx.dim_v(), s.ctx.dim_v());
    const Matrix b = rng.matrix(s.ctx.dim_v(), s.ctx.dim_v());
    const auto report = verify_homomorphism(s.ctx, s.basis, a, b);
    residual = std::max(residual, report.residual);
    pass = pass && report.pass;
  }
  // K(T⁻¹)K(T) = I for a well-conditioned invertible draw.
  const int n = s.ctx.dim_v();
  const Matrix t =
      rng.matrix(n, n) + 2.0 * n * Matrix::Identity(n, n);
  const Matrix product = induced_operator(s.ctx, s.basis, t.inverse()).matrix *
                         induced_operator(s.ctx, s.basis, t).matrix;
  const Matrix eye =
      Matrix::Identity(s.basis.labels.size(), s.basis.labels.size());
  residual = std::max(residual, (product - eye).norm());
  out.residual = residual;
  out.pass = pass && approx_equal(product, eye, s.ctx.tol() * 100.0);
}

void check_induced_injectivity(const SuiteContext& s, CheckResult& out) {
  Rng rng(s.seed + 12000);
  int failures = 0, total = 0;
  for (int t = 0; t < 10; ++t, ++total) {
    const Matrix a = rng.matrix(s.ctx.dim_v(), s.ctx.dim_v());
    Matrix b = a;
    if (t % 2 == 1) {
      const Matrix e = rng.matrix(s.ctx.dim_v(), s.ctx.dim_v());
      b += e / e.norm();
    }
    if (!verify_injectivity(s.ctx, s.basis, a, b).agree()) ++failures;
  }
  out.pass = failures == 0;
  out.detail = count_detail(failures, total);
}

void check_induced_adjoint(const SuiteContext& s, CheckResult& out) {
  Rng rng(s.seed + 13000);
  double residual = 0.0;
  for (int t = 0; t < 5; ++t) {
    const auto report = verify_property_transfer(
        s.ctx, s.basis, rng.matrix(s.ctx.dim_v(), s.ctx.dim_v()));
    residual = std::max(residual, report.adjoint_residual);
  }
  out.residual = residual;
  out.pass = residual < s.ctx.tol();
}

void check_property_transfer(const SuiteContext& s, CheckResult& out) {
  Rng rng(s.seed + 14000);
  int failures = 0, total = 0;
  std::string first_failure;
  for (const auto property : kAllProperties) {
    for (int t = 0; t < 3; ++t) {
      for (const bool with : {true, false}) {
        const Matrix op = with
                              ? make_with_property(rng, s.ctx.dim_v(), property)
                              : make_without_property(rng, s.ctx.dim_v(),
                                                      property);
        ++total;
        if (!verify_property_transfer(s.ctx, s.basis, op).properties_match()) {
          ++failures;
          if (first_failure.empty())
            first_failure = std::string(" (first at ") +
                            property_name(property) +
                            (with ? ", with" : ", without") + ")";
        }
      }
    }
  }
  out.pass = failures == 0;
  out.detail = count_detail(failures, total) + first_failure;
}

void check_rank_det(const SuiteContext& s, CheckResult& out) {
  Rng rng(s.seed + 15000);
  const int n = s.ctx.dim_v();
  int failures = 0, total = 0;
  const int targets[] = {0, 1, n - 1, n, -1, -1, -1, -1};
  for (int target : targets) {
    ++total;
    const Matrix op =
        target < 0 ? rng.matrix(n, n) : make_with_rank(rng, n, target);
    const auto report = verify_rank_det(s.ctx, s.basis, op);
    if (!report.rank_ok() || !report.det_ok(1e-6)) ++failures;
  }
  out.pass = failures == 0;
  out.detail = count_detail(failures, total);
}

void check_order_preservation(const SuiteContext& s, CheckResult& out) {
  Rng rng(s.seed + 16000);
  const int n = s.ctx.dim_v();
  double worst = 0.0;
  for (int t = 0; t < 5; ++t) {
    const Matrix small = make_with_property(rng, n, OperatorProperty::Hermitian);
    const Matrix p = rng.matrix(n, n);
    const Matrix diff =
        induced_operator(s.ctx, s.basis, Matrix(small + p.adjoint() * p))
            .matrix -
        induced_operator(s.ctx, s.basis, small).matrix;
    Eigen::SelfAdjointEigenSolver<Matrix> eigs((diff + diff.adjoint()) / 2.0);
    worst = std::min(worst, eigs.eigenvalues().minCoeff());
  }
  out.residual = std::abs(std::min(worst, 0.0));
  out.pass = worst > -s.ctx.tol();
}

void check_singular_witness(const SuiteContext& s, CheckResult& out) {
  Rng rng(s.seed + 17000);
  const int n = s.ctx.dim_v();
  Vector kernel = rng.vector(n);
  kernel /= kernel.norm();
  const Matrix op = rng.matrix(n, n) *
                    (Matrix::Identity(n, n) - kernel * kernel.adjoint());
  const int j = s.structure.d_bar.front();
  const Matrix tj = t_projector(s.ctx.rep(), j);
  int k0 = 0;
  for (; k0 < s.ctx.dim_u(); ++k0)
    if (tj.col(k0).norm() > s.ctx.tol()) break;
  Matrix columns = Matrix::Zero(n, s.ctx.degree());
  columns.col(j - 1) = kernel;
  const Vector witness =
      symmetrize(s.ctx, Vector(Vector::Unit(s.ctx.dim_u(), k0)),
                 CartesianTuple(columns))
          .coords;
  const double witness_norm = witness.norm();
  const double image_norm = (ambient_operator(s.ctx, op) * witness).norm();
  const auto report = verify_rank_det(s.ctx, s.basis, op);
  out.residual = image_norm;
  out.pass = witness_norm > s.ctx.tol() && image_norm < s.ctx.tol() &&
             report.rank_induced < static_cast<int>(s.basis.labels.size());
  std::ostringstream os;
  os << "witness norm " << witness_norm << ", image norm " << image_norm;
  out.detail = os.str();
}

}  // namespace

VerificationRun run_verification(const SymmetrizerContext& ctx,
                                 std::uint64_t seed) {
  VerificationRun run;
  run.seed = seed;
  SuiteContext s = make_suite(ctx, seed);

  using Body = std::function<void(CheckResult&)>;
  const std::vector<std::pair<std::string, Body>> always = {
      {"group.closure", [&](CheckResult& r) { check_group_closure(s, r); }},
      {"group.transporter_sizes",
       [&](CheckResult& r) { check_transporter_sizes(s, r); }},
      {"group.coset_partition",
       [&](CheckResult& r) { check_coset_partition(s, r); }},
      {"group.orbit_sizes", [&](CheckResult& r) { check_orbit_sizes(s, r); }},
      {"rep.homomorphism",
       [&](CheckResult& r) { check_rep_homomorphism(s, r); }},
      {"rep.unitarity", [&](CheckResult& r) { check_rep_unitarity(s, r); }},
      {"rep.irreducibility",
       [&](CheckResult& r) { check_rep_irreducibility(s, r); }},
      {"rep.character_classes",
       [&](CheckResult& r) { check_character_classes(s, r); }},
      {"symmetrizer.projection",
       [&](CheckResult& r) { check_projection(s, r); }},
      {"symmetrizer.hermitian",
       [&](CheckResult& r) { check_hermitian(s, r); }},
      {"symmetrizer.q_homomorphism",
       [&](CheckResult& r) { check_q_homomorphism(s, r); }},
      {"symmetrizer.trace_adjoint",
       [&](CheckResult& r) { check_trace_adjoint(s, r); }},
      {"symmetrizer.shift_lemma",
       [&](CheckResult& r) { check_shift_lemma(s, r); }},
      {"symmetrizer.inner_product",
       [&](CheckResult& r) { check_inner_product(s, r); }},
      {"symmetrizer.norm_identity",
       [&](CheckResult& r) { check_norm_identity(s, r); }},
      {"symmetrizer.equality_criterion",
       [&](CheckResult& r) { check_equality_criterion(s, r); }},
      {"classes.omega_agreement",
       [&](CheckResult& r) { check_omega_agreement(s, r); }},
      {"classes.orthogonality",
       [&](CheckResult& r) { check_orthogonality(s, r); }},
      {"classes.vanishing", [&](CheckResult& r) { check_vanishing(s, r); }},
      {"induced.commutation",
       [&](CheckResult& r) { check_commutation(s, r); }},
      {"induced.invariance", [&](CheckResult& r) { check_invariance(s, r); }},
  };
  const std::vector<std::pair<std::string, Body>> needs_structure = {
      {"classes.dimension_formula",
       [&](CheckResult& r) { check_dimension_formula(s, r); }},
      {"classes.cyclic_dims",
       [&](CheckResult& r) { check_cyclic_dims(s, r); }},
  };
  const std::vector<std::pair<std::string, Body>> needs_class = {
      {"classes.cyclic_subspaces",
       [&](CheckResult& r) { check_cyclic_subspaces(s, r); }},
      {"classes.basis_independence",
       [&](CheckResult& r) { check_basis_independence(s, r); }},
      {"classes.ob_status", [&](CheckResult& r) { check_ob_status(s, r); }},
      {"induced.block_form", [&](CheckResult& r) { check_block_form(s, r); }},
      {"induced.homomorphism",
       [&](CheckResult& r) { check_induced_homomorphism(s, r); }},
      {"induced.injectivity",
       [&](CheckResult& r) { check_induced_injectivity(s, r); }},
      {"induced.adjoint", [&](CheckResult& r) { check_induced_adjoint(s, r); }},
      {"induced.property_transfer",
       [&](CheckResult& r) { check_property_transfer(s, r); }},
      {"induced.rank_det", [&](CheckResult& r) { check_rank_det(s, r); }},
      {"induced.order_preservation",
       [&](CheckResult& r) { check_order_preservation(s, r); }},
      {"induced.singular_witness",
       [&](CheckResult& r) { check_singular_witness(s, r); }},
  };

  for (const auto& [name, body] : always)
    run.checks.push_back(run_check(name, body));

  CheckResult structure_check;
  structure_check.name = "classes.structure";
  structure_check.pass = s.structure_ok;
  structure_check.detail = s.structure_ok ? "" : s.structure_error;
  run.checks.push_back(std::move(structure_check));

  auto add_gated = [&](const std::vector<std::pair<std::string, Body>>& batch,
                       bool available, const std::string& reason) {
    for (const auto& [name, body] : batch) {
      if (available) {
        run.checks.push_back(run_check(name, body));
      } else {
        CheckResult skipped;
        skipped.name = name;
        skipped.skipped = true;
        skipped.detail = reason;
        run.checks.push_back(std::move(skipped));
      }
    }
  };
  add_gated(needs_structure, s.structure_ok, "class structure unavailable");
  add_gated(needs_class, s.has_class,
            s.structure_ok ? "zero symmetry class"
                           : "class structure unavailable");
  return run;
}

}  // namespace cartsym
