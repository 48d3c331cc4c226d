#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "starleb/types.hpp"

namespace starleb {

// Finite-dimensional *-algebra over C given by structure constants.
//
// Products are stored through the left-multiplication matrices of the basis:
// left_mult[i](k, j) is the coefficient of b_k in b_i * b_j, so that
// x * y = sum_i x_i left_mult[i] * y for coefficient vectors x, y.  The
// involution acts on coefficient vectors as a |-> invol * conj(a), which
// keeps the stored data complex-linear while the map itself stays
// conjugate-linear.  A multiplicative unit is optional; none of the
// algorithms assume one.
struct StarAlgebra {
  Index dim = 0;
  std::vector<std::string> basis_labels;
  std::vector<Matrix> left_mult;
  Matrix invol;
  std::optional<Vector> unit;
  std::optional<Vector> trace;  // canonical trace of the builder, if any

  // Structure-constant tensor entry: coefficient of b_k in b_i * b_j.
  Scalar mult_entry(Index i, Index j, Index k) const { return left_mult[i](k, j); }
};

Vector basis_element(const StarAlgebra& alg, Index i);

// Matrix of left multiplication by the element with coefficients x.
Matrix left_mult_of(const StarAlgebra& alg, const Vector& x);

Vector multiply(const StarAlgebra& alg, const Vector& x, const Vector& y);
Vector involution(const StarAlgebra& alg, const Vector& x);

struct Violation {
  std::string invariant;
  std::vector<Index> indices;
  Real residual = 0;
};

struct ValidationReport {
  std::vector<Violation> violations;
  Real tolerance = 0;
  bool truncated = false;  // reporting stopped at the cap, not all listed
  bool ok() const { return violations.empty(); }
  Real max_residual() const;
};

class validation_error : public std::runtime_error {
 public:
  validation_error(const std::string& what, ValidationReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

// Checks associativity, involutivity, anti-multiplicativity and (when a unit
// is present) the unit axioms.  An empty report means the data defines a
// *-algebra; violations carry the offending index tuple and residual.
ValidationReport validate(const StarAlgebra& alg);

// C^n with pointwise product, identity involution; trace = sum of coordinates.
StarAlgebra function_algebra(Index n);

// Full matrix algebra M_k(C) in the matrix-unit basis E_ij (row-major),
// E_ij^* = E_ji; trace is the usual matrix trace.
StarAlgebra matrix_algebra(Index k);

// Group *-algebra from a Cayley table t(i, j) = index of g_i g_j, with
// g^* = g^{-1}; trace picks out the coefficient of the identity.
// Throws std::invalid_argument if the table is not a group table.
StarAlgebra group_algebra(const Eigen::MatrixXi& cayley_table);

StarAlgebra direct_sum(const StarAlgebra& a, const StarAlgebra& b);

Eigen::MatrixXi cyclic_group_table(Index n);
Eigen::MatrixXi symmetric_group_table(Index n_letters);

}  // namespace starleb
