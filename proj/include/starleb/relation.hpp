#pragma once

#include "starleb/types.hpp"

namespace starleb {

// A linear relation between C^dim_h and C^dim_k: a subspace of the direct
// sum, stored as a spanning family of pairs together with an orthonormal
// basis computed once at construction.  In finite dimension every relation
// is closed, so the closure appearing throughout the theory is the identity
// here (see close()).
struct LinearRelation {
  Index dim_h = 0;
  Index dim_k = 0;
  Matrix span_h;  // column j of span_h/span_k is the j-th spanning pair
  Matrix span_k;
  Matrix basis;   // (dim_h + dim_k) x rank, orthonormal columns

  Matrix basis_h() const { return basis.topRows(dim_h); }
  Matrix basis_k() const { return basis.bottomRows(dim_k); }
  Index rank() const { return basis.cols(); }
};

LinearRelation make_relation(Index dim_h, Index dim_k, const Matrix& span_h,
                             const Matrix& span_k);

// Closure of the relation; the identity in finite dimension, kept as a named
// step because every statement downstream is about the closure.
inline const LinearRelation& close(const LinearRelation& t) { return t; }

// Orthonormal basis of mul T = {k : (0, k) in T}.
Matrix mul_part(const LinearRelation& t, Real tol = kDefaultTol);

// Orthonormal basis of ker T = {h : (h, 0) in T}.
Matrix ker_part(const LinearRelation& t, Real tol = kDefaultTol);

// A single-valued piece of a relation: an operator given by an orthonormal
// basis of its domain and the images of those basis vectors.
struct OperatorPart {
  Index dim_h = 0;
  Index dim_k = 0;
  Matrix domain_basis;  // dim_h x d, orthonormal
  Matrix matrix;        // dim_k x d, images of the domain basis columns
};

LinearRelation graph_of(const OperatorPart& op);

// Regular part {(h, (I-Q)k) : (h,k) in T} with Q the projection onto mul T;
// always an operator.  Throws if the extraction is numerically inconsistent.
OperatorPart regular_part(const LinearRelation& t, Real tol = kDefaultTol);

struct InjectivityReport {
  Real single_valued_residual = 0;  // K-mass of the relation over h = 0
  Real injectivity_residual = 0;    // H-mass of the relation over k = 0
  bool ok(Real tol) const {
    return single_valued_residual <= tol && injectivity_residual <= tol;
  }
};

// S = {((I-P)h, (I-Q)k) : (h,k) in T} with P, Q the projections onto ker T
// and mul T.  S is an injective operator; the optional report carries the
// numerical residuals of both properties.
OperatorPart injective_part(const LinearRelation& t, Real tol = kDefaultTol,
                            InjectivityReport* report = nullptr);

// Swaps the two components; involutive.
LinearRelation inverse(const LinearRelation& t);

}  // namespace starleb
