#include "cartsym/permutation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "cartsym/types.hpp"

namespace cartsym {

Permutation::Permutation(int degree) : images_(degree) {
  if (degree < 0) throw InputError("permutation degree must be nonnegative");
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int m = degree();
  std::vector<char> seen(m, 0);
  for (int v : images_) {
    if (v < 1 || v > m || seen[v - 1])
      throw InputError("image sequence is not a bijection of {1..m}");
    seen[v - 1] = 1;
  }
}

Permutation Permutation::from_cycles(
    int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 1);
  std::vector<char> used(degree, 0);
  for (const auto& cycle : cycles) {
    for (std::size_t t = 0; t < cycle.size(); ++t) {
      const int a = cycle[t];
      if (a < 1 || a > degree)
        throw InputError("cycle point out of range 1..degree");
      if (used[a - 1]) throw InputError("cycles must be disjoint");
      used[a - 1] = 1;
      images[a - 1] = cycle[(t + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= degree(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(degree(), 0);
  for (int start = 1; start <= degree(); ++start) {
    if (seen[start - 1] || (*this)(start) == start) continue;
    std::vector<int> cycle;
    int p = start;
    do {
      cycle.push_back(p);
      seen[p - 1] = 1;
      p = (*this)(p);
    } while (p != start);
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "e";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t t = 0; t < c.size(); ++t) os << (t ? " " : "") << c[t];
    os << ')';
  }
  return os.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw InputError("cannot compose permutations of different degree");
  std::vector<int> images(p.degree());
  for (int i = 1; i <= p.degree(); ++i) images[i - 1] = p(q(i));
  return Permutation(std::move(images));
}

Permutation invert(const Permutation& p) {
  std::vector<int> images(p.degree());
  for (int i = 1; i <= p.degree(); ++i) images[p(i) - 1] = i;
  return Permutation(std::move(images));
}

int parity(const Permutation& p) {
  int transpositions = 0;
  for (const auto& cycle : p.cycles())
    transpositions += static_cast<int>(cycle.size()) - 1;
  return transpositions % 2 == 0 ? 1 : -1;
}

PermGroup PermGroup::generate(int degree, std::vector<Permutation> generators) {
  if (degree < 1) throw InputError("group degree must be at least 1");
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw InputError("generator degree does not match group degree");

  PermGroup group;
  group.degree_ = degree;
  group.generators_ = std::move(generators);

  // Breadth-first closure over right multiplication; the discovery word of
  // each element composes left-to-right to the element itself.
  std::vector<Permutation> elems{Permutation(degree)};
  std::vector<std::vector<int>> words{{}};
  std::map<std::vector<int>, int> seen{{elems[0].images(), 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (std::size_t gi = 0; gi < group.generators_.size(); ++gi) {
      Permutation next = compose(elems[head], group.generators_[gi]);
      if (seen.emplace(next.images(), elems.size()).second) {
        auto word = words[head];
        word.push_back(static_cast<int>(gi));
        elems.push_back(std::move(next));
        words.push_back(std::move(word));
      }
    }
  }

  std::vector<int> by_lex(elems.size());
  std::iota(by_lex.begin(), by_lex.end(), 0);
  std::sort(by_lex.begin(), by_lex.end(), [&](int a, int b) {
    return elems[a].images() < elems[b].images();
  });
  group.elements_.reserve(elems.size());
  group.words_.reserve(elems.size());
  for (int idx : by_lex) {
    group.elements_.push_back(std::move(elems[idx]));
    group.words_.push_back(std::move(words[idx]));
  }
  return group;
}

PermGroup PermGroup::trivial(int degree) { return generate(degree, {}); }

PermGroup PermGroup::symmetric(int degree) {
  std::vector<Permutation> gens;
  if (degree >= 2) gens.push_back(Permutation::from_cycles(degree, {{1, 2}}));
  if (degree >= 3) {
    std::vector<int> full(degree);
    std::iota(full.begin(), full.end(), 1);
    gens.push_back(Permutation::from_cycles(degree, {full}));
  }
  return generate(degree, std::move(gens));
}

PermGroup PermGroup::cyclic(int degree) {
  std::vector<Permutation> gens;
  if (degree >= 2) {
    std::vector<int> full(degree);
    std::iota(full.begin(), full.end(), 1);
    gens.push_back(Permutation::from_cycles(degree, {full}));
  }
  return generate(degree, std::move(gens));
}

PermGroup PermGroup::dihedral(int degree) {
  if (degree < 3) throw InputError("dihedral group needs degree >= 3");
  std::vector<int> full(degree);
  std::iota(full.begin(), full.end(), 1);
  std::vector<int> reflection(degree);
  for (int i = 1; i <= degree; ++i) {
    const int r = (degree - i) % degree;
    reflection[i - 1] = r == 0 ? degree : r;
  }
  return generate(degree, {Permutation::from_cycles(degree, {full}),
                           Permutation(std::move(reflection))});
}

int PermGroup::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || !(*it == p)) return -1;
  return static_cast<int>(it - elements_.begin());
}

void PermGroup::check_point(int j) const {
  if (j < 1 || j > degree_) throw InputError("point index out of range 1..m");
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(degree_, 0);
  for (int start = 1; start <= degree_; ++start) {
    if (seen[start - 1]) continue;
    std::vector<int> orbit{start};
    seen[start - 1] = 1;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (const auto& g : generators_) {
        const int img = g(orbit[head]);
        if (!seen[img - 1]) {
          seen[img - 1] = 1;
          orbit.push_back(img);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<int> PermGroup::orbit_of(int j) const {
  check_point(j);
  for (auto& orbit : orbits())
    if (std::binary_search(orbit.begin(), orbit.end(), j)) return orbit;
  return {j};  // unreachable
}

bool PermGroup::same_orbit(int s, int j) const {
  const auto orbit = orbit_of(j);
  check_point(s);
  return std::binary_search(orbit.begin(), orbit.end(), s);
}

std::vector<int> PermGroup::stabilizer(int j) const {
  return transporter(j, j);
}

std::vector<int> PermGroup::transporter(int s, int j) const {
  check_point(s);
  check_point(j);
  std::vector<int> out;
  for (int idx = 0; idx < order(); ++idx)
    if (elements_[idx](j) == s) out.push_back(idx);
  return out;
}

std::vector<Permutation> PermGroup::coset_reps(int j) const {
  check_point(j);
  std::vector<Permutation> reps;
  std::vector<char> covered(degree_, 0);
  for (const auto& g : elements_) {
    const int img = g(j);
    if (!covered[img - 1]) {
      covered[img - 1] = 1;
      reps.push_back(g);
    }
  }
  return reps;
}

std::vector<int> PermGroup::orbit_representatives() const {
  std::vector<int> out;
  for (const auto& orbit : orbits()) out.push_back(orbit.front());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cartsym
