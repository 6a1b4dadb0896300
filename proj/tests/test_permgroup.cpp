#include <doctest.h>

#include <algorithm>
#include <set>

#include "cartsym/permutation.hpp"
#include "cartsym/types.hpp"

using namespace cartsym;

namespace {

Permutation perm(std::vector<int> images) { return Permutation(std::move(images)); }

// Pointwise oracle for products: evaluate (p∘q)(i) = p(q(i)) directly.
Permutation compose_oracle(const Permutation& p, const Permutation& q) {
  std::vector<int> images(p.degree());
  for (int i = 1; i <= p.degree(); ++i) images[i - 1] = p(q(i));
  return Permutation(std::move(images));
}

// Closure oracle independent of the BFS in PermGroup::generate: saturate a
// set under pairwise products.
std::set<std::vector<int>> closure_oracle(int degree,
                                          const std::vector<Permutation>& gens) {
  std::set<std::vector<int>> seen{Permutation(degree).images()};
  for (const auto& g : gens) seen.insert(g.images());
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<std::vector<int>> snapshot(seen.begin(), seen.end());
    for (const auto& a : snapshot)
      for (const auto& b : snapshot) {
        const auto prod =
            compose_oracle(Permutation(a), Permutation(b)).images();
        if (seen.insert(prod).second) grew = true;
      }
  }
  return seen;
}

}  // namespace

TEST_CASE("compose basics") {
  const auto swap12 = Permutation::from_cycles(2, {{1, 2}});
  CHECK(compose(swap12, swap12).is_identity());

  const auto p = Permutation::from_cycles(3, {{1, 3}});
  CHECK(compose(Permutation(3), p) == p);
  CHECK(compose(p, Permutation(3)) == p);

  const auto a = Permutation::from_cycles(3, {{1, 2}});
  const auto b = Permutation::from_cycles(3, {{1, 2, 3}});
  CHECK(compose(a, b) == compose_oracle(a, b));
  CHECK(compose(b, a) == compose_oracle(b, a));
  CHECK_THROWS_AS(compose(swap12, p), InputError);
}

TEST_CASE("invert") {
  CHECK(invert(Permutation(4)).is_identity());
  const auto swap12 = Permutation::from_cycles(2, {{1, 2}});
  CHECK(invert(swap12) == swap12);

  const auto cycle = Permutation::from_cycles(3, {{1, 2, 3}});
  // Pointwise inverse oracle: q(j) = i whenever p(i) = j.
  std::vector<int> oracle(3);
  for (int i = 1; i <= 3; ++i) oracle[cycle(i) - 1] = i;
  CHECK(invert(cycle) == perm(oracle));
  CHECK(invert(cycle) == Permutation::from_cycles(3, {{1, 3, 2}}));
  CHECK(compose(cycle, invert(cycle)).is_identity());
}

TEST_CASE("cycle parsing") {
  const auto p = Permutation::from_cycles(4, {{1, 2}, {3, 4}});
  CHECK(p.images() == std::vector<int>{2, 1, 4, 3});
  CHECK(Permutation::from_cycles(4, {}).is_identity());
  CHECK_THROWS_AS(Permutation::from_cycles(2, {{1, 3}}), InputError);
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{1, 2}, {2, 3}}), InputError);
  CHECK_THROWS_AS(perm({1, 1, 3}), InputError);
}

TEST_CASE("generate groups") {
  const auto s3 = PermGroup::generate(
      3, {Permutation::from_cycles(3, {{1, 2}}),
          Permutation::from_cycles(3, {{1, 2, 3}})});
  CHECK(s3.order() == 6);

  const auto trivial = PermGroup::generate(4, {});
  CHECK(trivial.order() == 1);
  CHECK(trivial.element(0).is_identity());

  const auto c4 = PermGroup::generate(
      4, {Permutation::from_cycles(4, {{1, 2, 3, 4}})});
  CHECK(c4.order() == 4);
  std::set<std::vector<int>> got;
  for (const auto& e : c4.elements()) got.insert(e.images());
  CHECK(got == closure_oracle(4, c4.generators()));
  // e, (1234), (13)(24), (1432)
  CHECK(got.count(Permutation(4).images()) == 1);
  CHECK(got.count(Permutation::from_cycles(4, {{1, 2, 3, 4}}).images()) == 1);
  CHECK(got.count(Permutation::from_cycles(4, {{1, 3}, {2, 4}}).images()) == 1);
  CHECK(got.count(Permutation::from_cycles(4, {{1, 4, 3, 2}}).images()) == 1);

  CHECK_THROWS_AS(
      PermGroup::generate(3, {Permutation::from_cycles(4, {{1, 2}})}),
      InputError);
}

TEST_CASE("canonical order and words") {
  const auto s4 = PermGroup::symmetric(4);
  CHECK(s4.order() == 24);
  CHECK(s4.element(0).is_identity());
  CHECK(std::is_sorted(s4.elements().begin(), s4.elements().end()));
  // Each word composes left-to-right to its element.
  for (int idx = 0; idx < s4.order(); ++idx) {
    Permutation acc(4);
    for (int gi : s4.words()[idx]) acc = compose(acc, s4.generators()[gi]);
    CHECK(acc == s4.element(idx));
  }
}

TEST_CASE("lagrange at small degrees") {
  const long factorial[] = {1, 1, 2, 6, 24, 120, 720, 5040, 40320};
  for (const auto& g :
       {PermGroup::symmetric(4), PermGroup::cyclic(4), PermGroup::dihedral(4),
        PermGroup::symmetric(3), PermGroup::cyclic(6), PermGroup::dihedral(5)}) {
    CHECK(factorial[g.degree()] % g.order() == 0);
  }
}

TEST_CASE("orbits") {
  const auto trivial = PermGroup::trivial(3);
  CHECK(trivial.orbits() == std::vector<std::vector<int>>{{1}, {2}, {3}});

  const auto s3 = PermGroup::symmetric(3);
  CHECK(s3.orbits() == std::vector<std::vector<int>>{{1, 2, 3}});

  const auto sub = PermGroup::generate(3, {Permutation::from_cycles(3, {{1, 2}})});
  CHECK(sub.orbits() == std::vector<std::vector<int>>{{1, 2}, {3}});
  CHECK(sub.same_orbit(1, 2));
  CHECK_FALSE(sub.same_orbit(1, 3));

  // Orbit sizes always partition the domain.
  for (const auto& g : {s3, sub, PermGroup::dihedral(4)}) {
    int total = 0;
    for (const auto& orbit : g.orbits()) total += static_cast<int>(orbit.size());
    CHECK(total == g.degree());
  }
}

TEST_CASE("stabilizer") {
  const auto s3 = PermGroup::symmetric(3);
  const auto stab = s3.stabilizer(1);
  REQUIRE(stab.size() == 2);
  std::set<std::vector<int>> got;
  for (int idx : stab) got.insert(s3.element(idx).images());
  CHECK(got.count(Permutation(3).images()) == 1);
  CHECK(got.count(Permutation::from_cycles(3, {{2, 3}}).images()) == 1);

  CHECK(PermGroup::trivial(3).stabilizer(2).size() == 1);
  CHECK(PermGroup::cyclic(4).stabilizer(1).size() == 1);
  CHECK_THROWS_AS(s3.stabilizer(4), InputError);
}

TEST_CASE("transporter") {
  const auto s3 = PermGroup::symmetric(3);
  CHECK(s3.transporter(1, 1) == s3.stabilizer(1));

  const auto sub = PermGroup::generate(3, {Permutation::from_cycles(3, {{1, 2}})});
  CHECK(sub.transporter(3, 1).empty());

  // Filter oracle over all six elements of S_3.
  std::set<std::vector<int>> expected;
  for (const auto& e : s3.elements())
    if (e(1) == 2) expected.insert(e.images());
  std::set<std::vector<int>> got;
  for (int idx : s3.transporter(2, 1)) got.insert(s3.element(idx).images());
  CHECK(got == expected);
  CHECK(got.count(Permutation::from_cycles(3, {{1, 2}}).images()) == 1);
  CHECK(got.count(Permutation::from_cycles(3, {{1, 2, 3}}).images()) == 1);

  // |G_sj| = |G_j| whenever s ~ j, else 0.
  for (const auto& g : {s3, sub, PermGroup::dihedral(4)})
    for (int j = 1; j <= g.degree(); ++j)
      for (int p = 1; p <= g.degree(); ++p) {
        const auto t = g.transporter(p, j);
        if (g.same_orbit(p, j))
          CHECK(t.size() == g.stabilizer(j).size());
        else
          CHECK(t.empty());
      }
}

TEST_CASE("coset representatives") {
  CHECK(PermGroup::trivial(2).coset_reps(1).size() == 1);

  const auto s2 = PermGroup::symmetric(2);
  const auto reps2 = s2.coset_reps(1);
  REQUIRE(reps2.size() == 2);
  CHECK(reps2[0].is_identity());
  CHECK(reps2[1] == Permutation::from_cycles(2, {{1, 2}}));

  const auto s3 = PermGroup::symmetric(3);
  const auto reps3 = s3.coset_reps(1);
  REQUIRE(reps3.size() == 3);
  CHECK(reps3[0].is_identity());
  std::set<int> images;
  for (const auto& rep : reps3) images.insert(rep(1));
  CHECK(images == std::set<int>{1, 2, 3});

  // The translates rep·G_j partition the group.
  for (const auto& g : {s3, PermGroup::dihedral(4), PermGroup::cyclic(4)})
    for (int j = 1; j <= g.degree(); ++j) {
      std::set<std::vector<int>> covered;
      for (const auto& rep : g.coset_reps(j))
        for (int idx : g.stabilizer(j)) {
          const auto prod = compose(rep, g.element(idx));
          CHECK(covered.insert(prod.images()).second);
        }
      CHECK(static_cast<int>(covered.size()) == g.order());
    }
}

TEST_CASE("orbit representatives") {
  CHECK(PermGroup::symmetric(3).orbit_representatives() == std::vector<int>{1});
  CHECK(PermGroup::trivial(3).orbit_representatives() ==
        std::vector<int>{1, 2, 3});
  const auto sub = PermGroup::generate(3, {Permutation::from_cycles(3, {{1, 2}})});
  CHECK(sub.orbit_representatives() == std::vector<int>{1, 3});
}

TEST_CASE("closure is exhaustive for small groups") {
  for (const auto& g :
       {PermGroup::symmetric(3), PermGroup::dihedral(4), PermGroup::cyclic(6)}) {
    REQUIRE(g.order() <= 120);
    for (const auto& a : g.elements())
      for (const auto& b : g.elements())
        CHECK(g.index_of(compose(a, b)) >= 0);
  }
}

TEST_CASE("dihedral uses the expected generators") {
  const auto d4 = PermGroup::dihedral(4);
  CHECK(d4.order() == 8);
  CHECK(d4.generators()[0] == Permutation::from_cycles(4, {{1, 2, 3, 4}}));
  CHECK(d4.generators()[1] == Permutation::from_cycles(4, {{1, 3}}));
}
