#include "starleb/gns.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "starleb/subspace.hpp"

namespace starleb {

namespace {

void check_dim(const GnsSpace& gns, const Vector& a, const char* what) {
  if (a.size() != static_cast<Index>(gns.rep.size()))
    throw std::invalid_argument(std::string(what) + ": coefficient vector has length " +
                                std::to_string(a.size()) + ", algebra dimension is " +
                                std::to_string(gns.rep.size()));
}

}  // namespace

GnsSpace build_gns(const StarAlgebra& alg, const Functional& f, Real tol) {
  const RepresentabilityCertificate cert = check_representable(alg, f, tol);
  if (!cert.representable())
    throw representability_error("build_gns: functional is not representable", cert);

  GnsSpace gns;
  gns.source_gram = gram(alg, f);
  const Index n = alg.dim;

  const Matrix inner =
      Real(0.5) * (gns.source_gram.entries.transpose() +
                   gns.source_gram.entries.conjugate());
  Eigen::SelfAdjointEigenSolver<Matrix> es(inner);
  const RealVector& d = es.eigenvalues();
  const Matrix& u = es.eigenvectors();

  const Real lambda_max = std::max(d(n - 1), Real(0));
  const Real cutoff = tol * lambda_max;
  Index kernel_dim = 0;
  while (kernel_dim < n && d(kernel_dim) <= cutoff) ++kernel_dim;
  for (Index i = 0; i < n; ++i) {
    if (d(i) > cutoff / 10 && d(i) < cutoff * 10)
      gns.warnings.push_back("borderline Gram eigenvalue " + std::to_string(d(i)) +
                             " near rank cutoff " + std::to_string(cutoff));
  }

  const Index r = n - kernel_dim;
  gns.dim_h = r;
  const Matrix u_pos = u.rightCols(r);
  const RealVector d_pos = d.tail(r);
  gns.embed = d_pos.cwiseSqrt().asDiagonal() * u_pos.adjoint();
  // Pseudo-inverse of embed; embed has orthogonal rows with norms sqrt(d).
  const Matrix pinv = u_pos * d_pos.cwiseSqrt().cwiseInverse().asDiagonal();

  // rep[i] * embed = embed * left_mult[i] has a solution because the Gram
  // kernel is a left ideal; the residual check certifies that.
  gns.rep.reserve(n);
  const Real scale = std::sqrt(lambda_max);
  for (Index i = 0; i < n; ++i) {
    const Matrix target = gns.embed * alg.left_mult[i];
    Matrix ri = target * pinv;
    const Real residual = (ri * gns.embed - target).norm();
    const Real budget = std::sqrt(tol) * (1 + scale * alg.left_mult[i].norm());
    if (residual > budget)
      throw std::runtime_error("build_gns: representation matrix for basis element " +
                               std::to_string(i) + " is inconsistent (residual " +
                               std::to_string(residual) + ")");
    gns.rep.push_back(std::move(ri));
  }

  // Riesz vector: <embed*a, cyclic> = f(a) for all a.
  gns.cyclic = d_pos.cwiseSqrt().cwiseInverse().asDiagonal() *
               (u_pos.adjoint() * f.values.conjugate());
  const Real riesz_residual =
      (gns.embed.adjoint() * gns.cyclic - f.values.conjugate()).norm();
  if (riesz_residual > std::sqrt(tol) * (1 + f.values.norm()))
    throw std::runtime_error("build_gns: Riesz vector residual " +
                             std::to_string(riesz_residual));

  Matrix orbit(r, n);
  for (Index i = 0; i < n; ++i) orbit.col(i) = gns.rep[i] * gns.cyclic;
  gns.cyclic_rank = orthonormal_basis(orbit, 1e-8).cols();

  return gns;
}

Matrix represent(const GnsSpace& gns, const Vector& a) {
  check_dim(gns, a, "represent");
  Matrix m = Matrix::Zero(gns.dim_h, gns.dim_h);
  for (Index i = 0; i < a.size(); ++i)
    if (a(i) != Scalar(0)) m += a(i) * gns.rep[i];
  return m;
}

Vector vector_of(const GnsSpace& gns, const Vector& a) {
  check_dim(gns, a, "vector_of");
  return gns.embed * a;
}

Functional reconstruct(const GnsSpace& gns) { return vector_state(gns, gns.cyclic); }

Functional vector_state(const GnsSpace& gns, const Vector& xi) {
  if (xi.size() != gns.dim_h)
    throw std::invalid_argument("vector_state: vector does not live in the GNS space");
  const Index n = static_cast<Index>(gns.rep.size());
  Functional f{Vector(n)};
  for (Index i = 0; i < n; ++i) f.values(i) = xi.dot(gns.rep[i] * xi);
  return f;
}

}  // namespace starleb
