#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>

#include "starleb/star_algebra.hpp"
#include "starleb/types.hpp"

namespace starleb {

// A linear functional given by its values on the basis: f(a) = sum_i a_i * values[i].
struct Functional {
  Vector values;
  Index dim() const { return values.size(); }
};

// Matrix of the semi-inner product induced by f: entries(i, j) = f(b_j^* b_i).
// Hermitian and positive semidefinite exactly when f is a hermitian-symmetric
// positive functional.
struct GramMatrix {
  Matrix entries;
  Real scale = 0;  // max |entry|
};

// Certificate for representability of a positive functional.  At finite
// dimension the two defining bounds reduce to spectral statements about the
// Gram matrix: the functional must vanish on the kernel of the induced
// semi-inner product (finiteness of the constant bounding |f(a)|^2 against
// f(a^*a)), and each basis element acts as a bounded operator on the
// quotient (the lambda constants).
struct RepresentabilityCertificate {
  bool is_positive = false;
  bool is_hermitian = false;
  bool vanishes_on_kernel = false;
  // Smallest constant with |f(a)|^2 <= c_min * f(a^*a); +infinity if none.
  Real c_min = std::numeric_limits<Real>::infinity();
  // lambda(i): squared operator norm of left multiplication by b_i on the
  // quotient space.  Empty unless the functional is representable.
  RealVector lambda;
  Real hermitian_residual = 0;
  Real min_eigenvalue = 0;  // most negative Gram eigenvalue
  Real kernel_leak = 0;     // max |f(x)| over unit vectors in the Gram kernel
  bool representable() const { return is_positive && is_hermitian && vanishes_on_kernel; }
};

class representability_error : public std::runtime_error {
 public:
  representability_error(const std::string& what, RepresentabilityCertificate cert)
      : std::runtime_error(what), certificate_(std::move(cert)) {}
  const RepresentabilityCertificate& certificate() const { return certificate_; }

 private:
  RepresentabilityCertificate certificate_;
};

Scalar evaluate(const Functional& f, const Vector& a);

GramMatrix gram(const StarAlgebra& alg, const Functional& f);

RepresentabilityCertificate check_representable(const StarAlgebra& alg, const Functional& f,
                                                Real tol = kDefaultTol);

// Loewner order: h <= g iff g - h has a positive semidefinite Gram, i.e.
// h(a^*a) <= g(a^*a) for all a.
bool leq(const StarAlgebra& alg, const Functional& h, const Functional& g,
         Real tol = kDefaultTol);

Functional add(const Functional& f, const Functional& g);
Functional scale(Real t, const Functional& f);

// sup{t >= 0 : t*h <= bound in the Loewner order}.  Returns 0 when no
// positive multiple fits (the range of h sticks out of the range of bound)
// and +infinity when h vanishes there.  Drives the singularity
// falsification probe.
Real max_scale_below(const GramMatrix& h, const GramMatrix& bound, Real tol = kDefaultTol);

// f(a) = sum_{j<k} trace(x_j^* a x_j) for seeded complex Gaussian elements
// x_j; positive and representable by construction and deterministic per
// seed.  Requires the algebra to carry its canonical trace.
Functional random_representable(const StarAlgebra& alg, int k, std::uint64_t seed);

}  // namespace starleb
