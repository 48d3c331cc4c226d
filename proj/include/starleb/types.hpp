#pragma once

#include <complex>

#include <Eigen/Dense>

namespace starleb {

using Real = double;
using Scalar = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

// Default tolerance for rank cutoffs and semidefiniteness checks.
inline constexpr Real kDefaultTol = 1e-9;

// Relative singular-value cutoff used when orthonormalizing spanning families.
inline constexpr Real kOrthoCutoff = 1e-10;

}  // namespace starleb
