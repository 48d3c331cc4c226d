#include "starleb/functional.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>

namespace starleb {

namespace {

void check_dims(Index a, Index b, const char* what) {
  if (a != b)
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a) + " vs " + std::to_string(b) + ")");
}

Matrix hermitian_part(const Matrix& m) { return Real(0.5) * (m + m.adjoint()); }

// Matrix of the semi-inner product in sesquilinear orientation:
// f(x^* y) = x^H * inner * y.  This is the transpose of the Gram layout.
Matrix inner_matrix(const GramMatrix& g) { return hermitian_part(g.entries.transpose()); }

// Complex standard normal deviates from a seeded 64-bit generator.  Uses an
// explicit Box-Muller step so the stream does not depend on the standard
// library's distribution internals.
class ComplexGaussian {
 public:
  explicit ComplexGaussian(std::uint64_t seed) : rng_(seed) {}

  Scalar operator()() {
    const Real u1 = unit_interval();
    const Real u2 = unit_interval();
    const Real radius = std::sqrt(-std::log(u1));
    const Real angle = 2 * std::numbers::pi * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
  }

  Vector vector(Index n) {
    Vector v(n);
    for (Index i = 0; i < n; ++i) v(i) = (*this)();
    return v;
  }

 private:
  Real unit_interval() {  // (0, 1]
    return (static_cast<Real>(rng_() >> 11) + 1.0) * 0x1.0p-53;
  }
  std::mt19937_64 rng_;
};

}  // namespace

Scalar evaluate(const Functional& f, const Vector& a) {
  check_dims(f.dim(), a.size(), "evaluate");
  return (f.values.transpose() * a)(0);
}

GramMatrix gram(const StarAlgebra& alg, const Functional& f) {
  check_dims(alg.dim, f.dim(), "gram");
  GramMatrix g;
  g.entries.resize(alg.dim, alg.dim);
  for (Index j = 0; j < alg.dim; ++j) {
    // Column j holds f(b_j^* b_i) over i; b_j^* has coefficients invol.col(j).
    g.entries.col(j) = left_mult_of(alg, alg.invol.col(j)).transpose() * f.values;
  }
  g.scale = g.entries.size() > 0 ? g.entries.cwiseAbs().maxCoeff() : Real(0);
  return g;
}

RepresentabilityCertificate check_representable(const StarAlgebra& alg, const Functional& f,
                                                Real tol) {
  check_dims(alg.dim, f.dim(), "check_representable");
  RepresentabilityCertificate cert;
  const Index n = alg.dim;

  cert.hermitian_residual =
      (alg.invol.transpose() * f.values - f.values.conjugate()).cwiseAbs().maxCoeff();
  const Real vscale = f.values.size() > 0 ? f.values.cwiseAbs().maxCoeff() : Real(0);
  cert.is_hermitian = cert.hermitian_residual <= tol * (1 + vscale);

  const GramMatrix g = gram(alg, f);
  const Matrix inner = inner_matrix(g);
  Eigen::SelfAdjointEigenSolver<Matrix> es(inner);
  const RealVector& d = es.eigenvalues();
  const Matrix& u = es.eigenvectors();

  cert.min_eigenvalue = d(0);
  cert.is_positive = d(0) >= -tol * g.scale;

  const Real lambda_max = std::max(d(n - 1), Real(0));
  const Real cutoff = tol * lambda_max;
  Index kernel_dim = 0;
  while (kernel_dim < n && d(kernel_dim) <= cutoff) ++kernel_dim;
  const Index rank = n - kernel_dim;

  cert.kernel_leak = 0;
  for (Index i = 0; i < kernel_dim; ++i)
    cert.kernel_leak = std::max(cert.kernel_leak, std::abs(evaluate(f, u.col(i))));
  cert.vanishes_on_kernel = cert.kernel_leak <= tol * std::max(f.values.norm(), Real(1));

  if (!cert.representable()) return cert;

  const Matrix u_pos = u.rightCols(rank);
  const RealVector d_pos = d.tail(rank);

  // Optimal constant: squared norm of the Riesz vector of a |-> f(a) on the
  // quotient space, i.e. conj(v)^H pinv(inner) conj(v).
  const Vector z = u_pos.adjoint() * f.values.conjugate();
  cert.c_min = rank > 0 ? (z.array().abs2() / d_pos.array()).sum() : Real(0);

  // lambda(i) = largest generalized eigenvalue of (M_i^H inner M_i, inner) on
  // the range, computed by compressing with the pseudo-inverse square root.
  const Matrix w = u_pos * d_pos.cwiseSqrt().cwiseInverse().asDiagonal();
  cert.lambda.resize(n);
  for (Index i = 0; i < n; ++i) {
    const Matrix mw = alg.left_mult[i] * w;
    const Matrix pencil = hermitian_part(mw.adjoint() * inner * mw);
    if (pencil.rows() == 0) {
      cert.lambda(i) = 0;
      continue;
    }
    Eigen::SelfAdjointEigenSolver<Matrix> pe(pencil, Eigen::EigenvaluesOnly);
    cert.lambda(i) = std::max(pe.eigenvalues().maxCoeff(), Real(0));
  }
  return cert;
}

bool leq(const StarAlgebra& alg, const Functional& h, const Functional& g, Real tol) {
  check_dims(h.dim(), g.dim(), "leq");
  const GramMatrix gh = gram(alg, h);
  const GramMatrix gg = gram(alg, g);
  const Matrix diff = inner_matrix(gg) - inner_matrix(gh);
  if (diff.rows() == 0) return true;
  Eigen::SelfAdjointEigenSolver<Matrix> es(diff, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0) >= -tol * std::max(gh.scale, gg.scale);
}

Functional add(const Functional& f, const Functional& g) {
  check_dims(f.dim(), g.dim(), "add");
  return {f.values + g.values};
}

Functional scale(Real t, const Functional& f) {
  if (t < 0) throw std::invalid_argument("scale: factor must be nonnegative");
  return {t * f.values};
}

Real max_scale_below(const GramMatrix& h, const GramMatrix& bound, Real tol) {
  check_dims(h.entries.rows(), bound.entries.rows(), "max_scale_below");
  const Matrix ih = inner_matrix(h);
  const Matrix ib = inner_matrix(bound);
  const Index n = ib.rows();
  if (n == 0) return std::numeric_limits<Real>::infinity();

  Eigen::SelfAdjointEigenSolver<Matrix> es(ib);
  const RealVector& d = es.eigenvalues();
  const Matrix& u = es.eigenvectors();
  const Real cutoff = tol * std::max(d(n - 1), Real(0));
  Index kernel_dim = 0;
  while (kernel_dim < n && d(kernel_dim) <= cutoff) ++kernel_dim;

  if (kernel_dim > 0) {
    // t*h <= bound forces h to vanish where bound does.
    const Real leak = (ih * u.leftCols(kernel_dim)).norm();
    if (leak > tol * std::max(h.scale, Real(1))) return 0;
  }
  const Index rank = n - kernel_dim;
  if (rank == 0) return std::numeric_limits<Real>::infinity();

  const Matrix w =
      u.rightCols(rank) * d.tail(rank).cwiseSqrt().cwiseInverse().asDiagonal();
  const Matrix compressed = hermitian_part(w.adjoint() * ih * w);
  Eigen::SelfAdjointEigenSolver<Matrix> ce(compressed, Eigen::EigenvaluesOnly);
  const Real top = ce.eigenvalues().maxCoeff();
  if (top <= tol) return std::numeric_limits<Real>::infinity();
  return 1 / top;
}

Functional random_representable(const StarAlgebra& alg, int k, std::uint64_t seed) {
  if (!alg.trace)
    throw std::invalid_argument("random_representable: algebra carries no trace");
  if (k < 0) throw std::invalid_argument("random_representable: k must be nonnegative");
  ComplexGaussian gauss(seed);
  Functional f{Vector::Zero(alg.dim)};
  for (int j = 0; j < k; ++j) {
    const Vector x = gauss.vector(alg.dim);
    const Matrix left_xstar = left_mult_of(alg, involution(alg, x));
    for (Index i = 0; i < alg.dim; ++i)
      f.values(i) += (alg.trace->transpose() * (left_xstar * (alg.left_mult[i] * x)))(0);
  }
  return f;
}

}  // namespace starleb
