#include <doctest.h>

#include <cmath>

#include <Eigen/SVD>

#include "cartsym/classes.hpp"

using namespace cartsym;
using doctest::Approx;

namespace {

SymmetrizerContext ctx_for(const PermGroup& g, const std::string& rep_spec,
                           int n) {
  return build_context(builtin_rep(g, rep_spec), n);
}

// Independent rank oracle: count singular values above a fixed cut.
int svd_rank(const Matrix& m, double cut = 1e-7) {
  Eigen::JacobiSVD<Matrix> svd(m);
  int rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > cut) ++rank;
  return rank;
}

// The regular action of a group on its own elements by left multiplication,
// together with a representation carried over from generator matrices.
PermGroup regular_action(const PermGroup& g) {
  std::vector<Permutation> gens;
  for (const auto& gen : g.generators()) {
    std::vector<int> images(g.order());
    for (int i = 0; i < g.order(); ++i)
      images[i] = g.index_of(compose(gen, g.element(i))) + 1;
    gens.push_back(Permutation(std::move(images)));
  }
  return PermGroup::generate(g.order(), std::move(gens));
}

}  // namespace

TEST_CASE("omega sets") {
  // Trivial rep: T_j = [1] for every j.
  const auto all = omega_sets(ctx_for(PermGroup::symmetric(3), "trivial", 1));
  CHECK(all.omega == std::vector<int>{1, 2, 3});
  CHECK(all.consistent);

  // sign on S_3: [sgn, 1_{G_j}] = (1 - 1)/2 = 0 everywhere.
  const auto none = omega_sets(ctx_for(PermGroup::symmetric(3), "sign", 1));
  CHECK(none.omega.empty());
  CHECK(none.consistent);

  // sign on S_2: stabilizers are trivial, so the sum is 1.
  const auto both = omega_sets(ctx_for(PermGroup::symmetric(2), "sign", 1));
  CHECK(both.omega == std::vector<int>{1, 2});
  CHECK(both.consistent);
}

TEST_CASE("cyclic_dim") {
  const auto trivial = ctx_for(PermGroup::dihedral(4), "trivial", 1);
  for (int j = 1; j <= 4; ++j) CHECK(cyclic_dim(trivial, j) == 1);

  // (χ(e) + χ((23)))/2 = (2 + 0)/2 = 1 for the standard rep of S_3.
  const auto yor = ctx_for(PermGroup::symmetric(3), "yor:[2,1]", 1);
  CHECK(cyclic_dim(yor, 1) == 1);

  const auto lone = ctx_for(PermGroup::trivial(3), "trivial", 1);
  for (int j = 1; j <= 3; ++j) CHECK(cyclic_dim(lone, j) == 1);

  // Cross-check against the Gram rank of the orbit vectors.
  for (const auto& ctx : {ctx_for(PermGroup::symmetric(4), "yor:[3,1]", 1),
                          ctx_for(PermGroup::cyclic(4), "cyclic:2", 2),
                          ctx_for(PermGroup::dihedral(4), "sign", 1)}) {
    const auto structure = build_structure(ctx);
    for (int j : structure.d_bar) {
      const auto reps = ctx.group().coset_reps(j);
      Matrix vectors(ctx.ambient_dim(), reps.size());
      for (std::size_t c = 0; c < reps.size(); ++c)
        vectors.col(c) = ctx.standard_symmetrized(0, 0, reps[c](j) - 1);
      CHECK(svd_rank(vectors.adjoint() * vectors) == structure.s.at(j));
    }
  }
}

TEST_CASE("build_structure") {
  // S_2 sign, n=2: D̄ = {1}, s_1 = 1, total 2; rank oracle on the 4x4 C.
  const auto s2 = ctx_for(PermGroup::symmetric(2), "sign", 2);
  const auto st2 = build_structure(s2);
  CHECK(st2.d_bar == std::vector<int>{1});
  CHECK(st2.s.at(1) == 1);
  CHECK(st2.total_dim == 2);
  CHECK(st2.rank_c == 2);
  CHECK(st2.rank_c == svd_rank(s2.c_matrix()));
  CHECK(st2.consistent());

  // S_3 sign, n=3: the class is zero.
  const auto s3 = ctx_for(PermGroup::symmetric(3), "sign", 3);
  const auto st3 = build_structure(s3);
  CHECK(st3.total_dim == 0);
  CHECK(st3.rank_c == 0);
  CHECK(st3.d_bar.empty());
  CHECK(st3.d_hat.empty());
  CHECK(st3.consistent());

  // S_3 YOR [2,1], n=1: one-dimensional class.
  const auto yor = ctx_for(PermGroup::symmetric(3), "yor:[2,1]", 1);
  const auto sty = build_structure(yor);
  CHECK(sty.total_dim == 1);
  CHECK(sty.rank_c == svd_rank(yor.c_matrix()));
  CHECK(sty.consistent());

  // The dimension formula matches the rank of C across a wider sample.
  for (const auto& ctx : {ctx_for(PermGroup::symmetric(4), "yor:[2,2]", 2),
                          ctx_for(PermGroup::symmetric(4), "yor:[2,1,1]", 1),
                          ctx_for(PermGroup::cyclic(3), "cyclic:1", 3),
                          ctx_for(PermGroup::dihedral(4), "trivial", 2)}) {
    const auto st = build_structure(ctx);
    CHECK(st.rank_c == svd_rank(ctx.c_matrix()));
    CHECK(st.consistent());
  }
}

TEST_CASE("select_dhat") {
  // Transitive trivial rep: one orbit, s = 1, first index wins.
  CHECK(select_dhat(ctx_for(PermGroup::symmetric(3), "trivial", 1)) ==
        std::vector<int>{1});

  // Trivial group: every point is its own orbit.
  CHECK(select_dhat(ctx_for(PermGroup::trivial(3), "trivial", 1)) ==
        std::vector<int>{1, 2, 3});

  CHECK(select_dhat(ctx_for(PermGroup::symmetric(3), "yor:[2,1]", 1)) ==
        std::vector<int>{1});

  // |D̂ ∩ Orb(j)| = s_j per orbit.
  const auto mixed = ctx_for(
      PermGroup::generate(4, {Permutation::from_cycles(4, {{1, 2}})}),
      "trivial", 1);
  CHECK(select_dhat(mixed) == std::vector<int>{1, 3, 4});
}

TEST_CASE("standard_basis") {
  // S_2 sign, n=2: two orthogonal vectors, one per i.
  const auto s2 = ctx_for(PermGroup::symmetric(2), "sign", 2);
  const auto basis2 = standard_basis(s2, build_structure(s2));
  REQUIRE(basis2.labels.size() == 2);
  CHECK(basis2.labels[0].i == 1);
  CHECK(basis2.labels[0].j == 1);
  CHECK(basis2.labels[1].i == 2);
  CHECK(std::abs(basis2.gram(0, 1)) < 1e-12);
  CHECK(is_ob_basis(basis2));
  // vectors = ortho · r_factor with orthonormal columns.
  CHECK((basis2.vectors - basis2.ortho * basis2.r_factor).norm() < 1e-12);
  CHECK((basis2.ortho.adjoint() * basis2.ortho - Matrix::Identity(2, 2))
            .norm() < 1e-12);

  // Trivial group, n=2, m=2: C = I and the basis is the ambient one.
  const auto trivial = ctx_for(PermGroup::trivial(2), "trivial", 2);
  const auto basis4 = standard_basis(trivial, build_structure(trivial));
  REQUIRE(basis4.labels.size() == 4);
  CHECK((basis4.gram - Matrix::Identity(4, 4)).norm() < 1e-12);
  CHECK(is_ob_basis(basis4));

  // S_3 YOR [2,1], n=2: one vector per i, mutually orthogonal.
  const auto yor = ctx_for(PermGroup::symmetric(3), "yor:[2,1]", 2);
  const auto basisy = standard_basis(yor, build_structure(yor));
  REQUIRE(basisy.labels.size() == 2);
  CHECK(std::abs(basisy.gram(0, 1)) < 1e-12);

  // The empty class refuses to build a basis.
  const auto empty = ctx_for(PermGroup::symmetric(3), "sign", 2);
  CHECK_THROWS_AS(standard_basis(empty, build_structure(empty)),
                  EmptyClassError);
}

TEST_CASE("is_ob_basis for linear reps") {
  for (const auto& ctx : {ctx_for(PermGroup::symmetric(2), "sign", 3),
                          ctx_for(PermGroup::cyclic(4), "cyclic:1", 2),
                          ctx_for(PermGroup::cyclic(3), "cyclic:2", 1),
                          ctx_for(PermGroup::dihedral(4), "sign", 2)}) {
    const auto structure = build_structure(ctx);
    if (structure.total_dim == 0) continue;
    CHECK(is_ob_basis(standard_basis(ctx, structure), ctx.tol()));
  }
}

TEST_CASE("regular action with a two-dimensional cyclic subspace") {
  // S_3 acting on itself by left multiplication is free, so the stabilizers
  // are trivial and s_j = χ(e) = 2 for the two-dimensional irreducible.
  const auto s3 = PermGroup::symmetric(3);
  const auto reg = regular_action(s3);
  REQUIRE(reg.order() == 6);
  REQUIRE(reg.degree() == 6);
  REQUIRE(reg.orbits().size() == 1);

  const auto yor = builtin_rep(s3, "yor:[2,1]");
  std::vector<Matrix> gen_mats;
  for (const auto& gen : s3.generators()) gen_mats.push_back(yor.matrix(gen));
  const auto rep = load_rep(reg, gen_mats);
  CHECK(validate_rep(rep).is_irreducible);

  const auto ctx = build_context(rep, 1);
  const auto structure = build_structure(ctx);
  CHECK(structure.d_bar == std::vector<int>{1});
  CHECK(structure.s.at(1) == 2);
  CHECK(structure.total_dim == 2);
  CHECK(structure.consistent());
  CHECK(structure.d_hat.size() == 2);

  // Two basis vectors inside one cyclic subspace. The transporter formula
  // gives ⟨v_1, v_2⟩ = (1/6)·X((23))_{11} = -1/12 with both norms² = 1/6,
  // so this standard basis is not orthogonal and the flag must say so.
  const auto basis = standard_basis(ctx, structure);
  CHECK(structure.d_hat == std::vector<int>{1, 2});
  const Complex off = inner(Vector(basis.vectors.col(0)),
                            Vector(basis.vectors.col(1)));
  CHECK(std::abs(off - basis.gram(1, 0)) < 1e-15);
  CHECK(basis.gram(0, 0).real() == Approx(1.0 / 6.0));
  CHECK(basis.gram(1, 1).real() == Approx(1.0 / 6.0));
  CHECK(basis.gram(0, 1).real() == Approx(-1.0 / 12.0));
  CHECK(std::abs(basis.gram(0, 1).imag()) < 1e-12);
  CHECK_FALSE(is_ob_basis(basis, ctx.tol()));
  CHECK(is_ob_basis(basis, ctx.tol()) == (std::abs(off) < ctx.tol()));
}

TEST_CASE("orthogonality relations") {
  // Exhaustive index tuples against the transporter formula.
  for (const auto& ctx : {ctx_for(PermGroup::symmetric(3), "yor:[2,1]", 2),
                          ctx_for(PermGroup::dihedral(4), "sign", 2),
                          ctx_for(PermGroup::cyclic(4), "cyclic:1", 2)}) {
    const int r = ctx.dim_u();
    for (int k0 = 0; k0 < r; ++k0)
      for (int l0 = 0; l0 < r; ++l0)
        for (int i0 = 0; i0 < ctx.dim_v(); ++i0)
          for (int r0 = 0; r0 < ctx.dim_v(); ++r0)
            for (int j = 1; j <= ctx.degree(); ++j)
              for (int p = 1; p <= ctx.degree(); ++p) {
                const Complex lhs =
                    inner(ctx.standard_symmetrized(k0, i0, j - 1),
                          ctx.standard_symmetrized(l0, r0, p - 1));
                Complex expected = 0;
                if (i0 == r0 && ctx.group().same_orbit(p, j)) {
                  const auto transporter = ctx.group().transporter(p, j);
                  expected =
                      inner(Vector(t_transporter(ctx.rep(), p, j) *
                                   Vector::Unit(r, k0)),
                            Vector(Vector::Unit(r, l0))) *
                      (static_cast<double>(transporter.size()) /
                       static_cast<double>(ctx.group().order()));
                }
                CHECK(std::abs(lhs - expected) < 1e-12);
              }
  }
}

TEST_CASE("vanishing criterion") {
  // C(u_k ⊗ e_ij) = 0 exactly when T_j u_k = 0.
  for (const auto& ctx : {ctx_for(PermGroup::symmetric(3), "yor:[2,1]", 2),
                          ctx_for(PermGroup::symmetric(3), "sign", 2),
                          ctx_for(PermGroup::symmetric(4), "yor:[2,2]", 1)}) {
    for (int j = 1; j <= ctx.degree(); ++j) {
      const Matrix tj = t_projector(ctx.rep(), j);
      for (int k0 = 0; k0 < ctx.dim_u(); ++k0)
        for (int i0 = 0; i0 < ctx.dim_v(); ++i0)
          CHECK((ctx.standard_symmetrized(k0, i0, j - 1).norm() < 1e-9) ==
                (tj.col(k0).norm() < 1e-9));
    }
  }
}
