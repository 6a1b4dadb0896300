#pragma once

#include <compare>
#include <string>
#include <vector>

namespace cartsym {

/// A bijection of {1..m}, stored as its image sequence. All point arguments
/// and images are 1-based.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree);  // identity
  explicit Permutation(std::vector<int> images);
  static Permutation from_cycles(int degree,
                                 const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point - 1]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;
  std::vector<std::vector<int>> cycles() const;  // nontrivial cycles
  std::string to_string() const;                 // cycle notation, "e" for identity

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
};

/// (p∘q)(i) = p(q(i)); q acts first.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation invert(const Permutation& p);
int parity(const Permutation& p);  // +1 even, -1 odd

/// A fully enumerated subgroup of S_m. Elements are kept in lexicographic
/// image order, so the identity sits at index 0 and all summations downstream
/// are bitwise deterministic. Each element carries the generator word that
/// produced it during closure.
class PermGroup {
 public:
  static PermGroup generate(int degree, std::vector<Permutation> generators);
  static PermGroup trivial(int degree);
  static PermGroup symmetric(int degree);
  static PermGroup cyclic(int degree);
  static PermGroup dihedral(int degree);  // degree >= 3

  int degree() const { return degree_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(int idx) const { return elements_[idx]; }
  const std::vector<Permutation>& generators() const { return generators_; }

  /// words()[idx] is a sequence of generator indices whose left-to-right
  /// composition equals elements()[idx]; empty for the identity.
  const std::vector<std::vector<int>>& words() const { return words_; }

  int identity_index() const { return 0; }
  int index_of(const Permutation& p) const;  // -1 if not a member

  std::vector<std::vector<int>> orbits() const;
  std::vector<int> orbit_of(int j) const;  // ascending
  bool same_orbit(int s, int j) const;

  /// Indices into elements() of {σ : σ(j) = j}.
  std::vector<int> stabilizer(int j) const;
  /// Indices into elements() of {σ : σ(j) = s}; empty when s and j lie in
  /// different orbits.
  std::vector<int> transporter(int s, int j) const;
  /// Left coset representatives of the stabilizer of j; starts with the
  /// identity, images of j are pairwise distinct and cover the orbit.
  std::vector<Permutation> coset_reps(int j) const;
  /// Minimum index of each orbit, ascending.
  std::vector<int> orbit_representatives() const;

 private:
  PermGroup() = default;
  void check_point(int j) const;

  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::vector<std::vector<int>> words_;
};

}  // namespace cartsym
