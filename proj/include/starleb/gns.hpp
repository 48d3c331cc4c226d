#pragma once

#include <string>
#include <vector>

#include "starleb/functional.hpp"

namespace starleb {

// Concrete GNS triple of a representable functional f on a finite-dimensional
// *-algebra: coordinates for the quotient of the algebra by the kernel of the
// semi-inner product f(b^*a), the representation matrices acting on it, and
// the Riesz vector implementing f.
//
// Contracts (all within the build tolerance):
//   <embed*a, embed*b>  = f(b^* a)
//   rep[i] * embed      = embed * left_mult[i]
//   f(a)                = <embed*a, cyclic>
//   represent(a)*cyclic = embed*a
struct GnsSpace {
  Index dim_h = 0;     // rank of the Gram matrix
  Matrix embed;        // dim_h x n coordinate map
  std::vector<Matrix> rep;
  Vector cyclic;
  GramMatrix source_gram;
  Index cyclic_rank = 0;  // rank of {rep[i]*cyclic}; equals dim_h when cyclic
  std::vector<std::string> warnings;  // borderline rank decisions
};

// Builds the triple by eigendecomposing the Gram matrix with a relative
// spectral cutoff.  Throws representability_error when the certificate
// fails; eigenvalues within a decade of the cutoff leave a warning.
GnsSpace build_gns(const StarAlgebra& alg, const Functional& f, Real tol = kDefaultTol);

// pi(a) = sum_i a_i rep[i].
Matrix represent(const GnsSpace& gns, const Vector& a);

// Coordinates of the class of a in the quotient space.
Vector vector_of(const GnsSpace& gns, const Vector& a);

// Functional a |-> <represent(a) cyclic, cyclic>; recovers the source.
Functional reconstruct(const GnsSpace& gns);

// Functional a |-> <represent(a) xi, xi> of an arbitrary vector xi.
Functional vector_state(const GnsSpace& gns, const Vector& xi);

}  // namespace starleb
