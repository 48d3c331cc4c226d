#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "starleb/types.hpp"

// Rank-revealing subspace helpers shared by the GNS, relation and
// decomposition code.  Subspaces are carried around as matrices with
// orthonormal columns; equality tests go through orthogonal projectors so
// they are independent of the particular basis.

namespace starleb {

// Orthonormal basis of the column space of m, rank cut at rtol * sigma_max.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>
orthonormal_basis(const Eigen::MatrixBase<Derived>& m, Real rtol = kOrthoCutoff) {
  using Mat = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Mat mm = m.derived();
  if (mm.rows() == 0 || mm.cols() == 0) return Mat(mm.rows(), 0);
  Eigen::JacobiSVD<Mat> svd(mm, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const Real smax = sv.size() > 0 ? sv(0) : Real(0);
  Index rank = 0;
  while (rank < sv.size() && sv(rank) > rtol * smax && sv(rank) > Real(0)) ++rank;
  return svd.matrixU().leftCols(rank);
}

// Orthonormal basis of the null space of m.  Singular values at or below
// max(atol, rtol * sigma_max) count as zero; atol matters when the matrix is
// a block of an orthonormal basis and therefore has unit scale.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>
kernel_basis(const Eigen::MatrixBase<Derived>& m, Real atol, Real rtol = Real(0)) {
  using Mat = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Mat mm = m.derived();
  const Index cols = mm.cols();
  if (cols == 0) return Mat(0, 0);
  if (mm.rows() == 0) return Mat::Identity(cols, cols);
  Eigen::JacobiSVD<Mat> svd(mm, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const Real smax = sv.size() > 0 ? sv(0) : Real(0);
  const Real cutoff = std::max(atol, rtol * smax);
  Index rank = 0;
  while (rank < sv.size() && sv(rank) > cutoff) ++rank;
  return svd.matrixV().rightCols(cols - rank);
}

// Orthogonal projector onto the span of an orthonormal basis.  The rank-0 and
// full-rank cases return exact zero / identity matrices.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>
projector(const Eigen::MatrixBase<Derived>& basis, Index dim) {
  using Mat = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (basis.cols() == 0) return Mat::Zero(dim, dim);
  if (basis.cols() == dim) return Mat::Identity(dim, dim);
  return basis.derived() * basis.derived().adjoint();
}

// Frobenius distance between the projectors of two subspaces of C^dim.
template <typename DerivedA, typename DerivedB>
Real projection_distance(const Eigen::MatrixBase<DerivedA>& basis_a,
                         const Eigen::MatrixBase<DerivedB>& basis_b, Index dim) {
  return (projector(basis_a, dim) - projector(basis_b, dim)).norm();
}

template <typename DerivedA, typename DerivedB>
bool subspace_equal(const Eigen::MatrixBase<DerivedA>& basis_a,
                    const Eigen::MatrixBase<DerivedB>& basis_b, Index dim,
                    Real tol = kDefaultTol) {
  return projection_distance(basis_a, basis_b, dim) <= tol;
}

// ||(I - P_sup) * vectors||: how far the given vectors stick out of the span
// of sup_basis.  Zero for contained subspaces.
template <typename DerivedA, typename DerivedB>
Real containment_residual(const Eigen::MatrixBase<DerivedA>& vectors,
                          const Eigen::MatrixBase<DerivedB>& sup_basis) {
  if (vectors.cols() == 0) return Real(0);
  if (sup_basis.cols() == 0) return vectors.derived().norm();
  const auto& v = vectors.derived();
  return (v - sup_basis.derived() * (sup_basis.derived().adjoint() * v)).norm();
}

}  // namespace starleb
