#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cartsym/permutation.hpp"
#include "cartsym/types.hpp"

namespace cartsym {

/// Weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  int sum() const;
  bool valid() const;
  std::string to_string() const;  // "[2,1]"
};

/// Parses "[2,1]" (brackets optional, comma separated).
Partition parse_partition(const std::string& text);

/// A standard Young tableau, stored as the cell of each value.
struct Tableau {
  std::vector<int> row_of;  // row_of[v-1], 0-based rows
  std::vector<int> col_of;

  /// Content difference col(b)-row(b) - (col(a)-row(a)) for values a, b.
  int axial_distance(int a, int b) const {
    return (col_of[b - 1] - row_of[b - 1]) - (col_of[a - 1] - row_of[a - 1]);
  }
};

/// All standard tableaux of the shape, in a fixed deterministic order
/// (values 1..m placed in order, candidate rows scanned ascending).
std::vector<Tableau> standard_tableaux(const Partition& shape);

/// m! / (product of hook lengths); equals standard_tableaux().size().
std::uint64_t hook_length_count(const Partition& shape);

/// Young's orthogonal form of the adjacent transposition (k, k+1): acts on a
/// tableau t with diagonal coefficient 1/d, d the axial distance from k to
/// k+1 in t, and mixes t with its (k, k+1)-swap by sqrt(1 - 1/d^2) when that
/// swap is again standard.
RealMatrix yor_transposition(const std::vector<Tableau>& tableaux, int k);

/// Young's orthogonal form of an arbitrary permutation, via a bubble-sort
/// factorization into adjacent transpositions.
RealMatrix yor_matrix(const std::vector<Tableau>& tableaux,
                      const Permutation& sigma);

}  // namespace cartsym
