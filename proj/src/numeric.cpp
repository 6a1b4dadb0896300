#include "cartsym/numeric.hpp"

#include <Eigen/SVD>

namespace cartsym {

int numerical_rank(const Matrix& m, double tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) <= 0.0) return 0;
  // max(σ_max, 1) keeps a matrix of rounding noise at rank zero: a purely
  // relative cut would count its noise singular values as full rank.
  const double threshold = tol * std::max(sv(0), 1.0) *
                           static_cast<double>(std::max(m.rows(), m.cols()));
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > threshold) ++rank;
  return rank;
}

}  // namespace cartsym
