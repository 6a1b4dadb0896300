#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace cartsym {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr double kDefaultTol = 1e-9;
inline constexpr int kDefaultDimCap = 4096;

/// Malformed or inconsistent user input (bad specs, shape mismatches).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A numerical cross-check failed beyond tolerance.
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The requested operation needs a nonzero symmetry class.
struct EmptyClassError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cartsym
