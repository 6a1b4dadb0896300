#pragma once

#include <algorithm>
#include <cstdint>

#include "cartsym/types.hpp"

namespace cartsym {

/// Inner product, linear in the first argument and conjugate-linear in the
/// second. Eigen's dot() conjugates its left operand, hence the swap.
template <typename A, typename B>
Complex inner(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return b.derived().dot(a.derived());
}

/// ‖a − b‖_F < tol·max(1, ‖a‖_F, ‖b‖_F).
template <typename A, typename B>
bool approx_equal(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b,
                  double tol) {
  const double scale = std::max({1.0, a.norm(), b.norm()});
  return (a - b).norm() < tol * scale;
}

/// ‖a‖_F < tol·max(1, scale).
template <typename A>
bool approx_zero(const Eigen::MatrixBase<A>& a, double tol,
                 double scale = 1.0) {
  return a.norm() < tol * std::max(1.0, scale);
}

template <typename A, typename B>
Matrix kron(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
          a(i, j) * b.derived();
  return out;
}

/// Rank by SVD: singular values above tol·σ_max·max(rows, cols) count.
int numerical_rank(const Matrix& m, double tol);

/// Deterministic splitmix64 stream; identical seeds give identical values on
/// every platform, unlike <random> distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double symmetric() { return 2.0 * uniform() - 1.0; }

  /// Entry uniform on the complex square [-1,1] × [-1,1]i.
  Complex entry() { return Complex(symmetric(), symmetric()); }

  Matrix matrix(Eigen::Index rows, Eigen::Index cols) {
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = entry();
    return m;
  }

  Vector vector(Eigen::Index n) {
    Vector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = entry();
    return v;
  }

 private:
  std::uint64_t state_;
};

}  // namespace cartsym
