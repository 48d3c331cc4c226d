#include "starleb/star_algebra.hpp"

#include <algorithm>
#include <numeric>

namespace starleb {

namespace {

constexpr std::size_t kViolationCap = 512;

void check_dim(const StarAlgebra& alg, const Vector& x, const char* what) {
  if (x.size() != alg.dim)
    throw std::invalid_argument(std::string(what) + ": coefficient vector has length " +
                                std::to_string(x.size()) + ", algebra dimension is " +
                                std::to_string(alg.dim));
}

Real tensor_scale(const StarAlgebra& alg) {
  Real s = 0;
  for (const auto& m : alg.left_mult) s = std::max(s, m.cwiseAbs().maxCoeff());
  return s;
}

struct Reporter {
  ValidationReport& report;
  bool add(std::string invariant, std::vector<Index> idx, Real residual) {
    if (residual <= report.tolerance) return true;
    if (report.violations.size() >= kViolationCap) {
      report.truncated = true;
      return false;
    }
    report.violations.push_back({std::move(invariant), std::move(idx), residual});
    return true;
  }
};

}  // namespace

Vector basis_element(const StarAlgebra& alg, Index i) {
  if (i < 0 || i >= alg.dim) throw std::invalid_argument("basis_element: index out of range");
  return Vector::Unit(alg.dim, i);
}

Matrix left_mult_of(const StarAlgebra& alg, const Vector& x) {
  check_dim(alg, x, "left_mult_of");
  Matrix l = Matrix::Zero(alg.dim, alg.dim);
  for (Index i = 0; i < alg.dim; ++i)
    if (x(i) != Scalar(0)) l += x(i) * alg.left_mult[i];
  return l;
}

Vector multiply(const StarAlgebra& alg, const Vector& x, const Vector& y) {
  check_dim(alg, x, "multiply");
  check_dim(alg, y, "multiply");
  Vector out = Vector::Zero(alg.dim);
  for (Index i = 0; i < alg.dim; ++i)
    if (x(i) != Scalar(0)) out += x(i) * (alg.left_mult[i] * y);
  return out;
}

Vector involution(const StarAlgebra& alg, const Vector& x) {
  check_dim(alg, x, "involution");
  return alg.invol * x.conjugate();
}

Real ValidationReport::max_residual() const {
  Real r = 0;
  for (const auto& v : violations) r = std::max(r, v.residual);
  return r;
}

ValidationReport validate(const StarAlgebra& alg) {
  ValidationReport report;
  report.tolerance = 1e-10 * (tensor_scale(alg) + 1);
  Reporter rep{report};
  const Index n = alg.dim;
  const Matrix& s = alg.invol;

  // (b_i b_j) b_k = b_i (b_j b_k), compared column-by-column: left
  // multiplication by b_i b_j against the product of the two matrices.
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const Matrix lhs = left_mult_of(alg, alg.left_mult[i].col(j));
      const Matrix rhs = alg.left_mult[i] * alg.left_mult[j];
      const Matrix diff = (lhs - rhs).cwiseAbs();
      for (Index k = 0; k < n; ++k) {
        Index l;
        const Real r = diff.col(k).maxCoeff(&l);
        if (r > report.tolerance)
          if (!rep.add("associativity", {i, j, k, l}, r)) return report;
      }
    }
  }

  // a** = a reads as invol * conj(invol) = identity on coefficients.
  const Matrix twice = s * s.conjugate() - Matrix::Identity(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (!rep.add("involutivity", {i, j}, std::abs(twice(i, j)))) return report;

  // (b_i b_j)^* = b_j^* b_i^*.
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const Vector lhs = s * alg.left_mult[i].col(j).conjugate();
      const Vector rhs = multiply(alg, s.col(j), s.col(i));
      Index l;
      const Real r = (lhs - rhs).cwiseAbs().maxCoeff(&l);
      if (r > report.tolerance)
        if (!rep.add("anti_multiplicativity", {i, j, l}, r)) return report;
    }
  }

  if (alg.unit) {
    const Vector& u = *alg.unit;
    const Matrix lu = left_mult_of(alg, u);
    for (Index i = 0; i < n; ++i) {
      const Vector ei = basis_element(alg, i);
      if (!rep.add("unit_left", {i}, (lu.col(i) - ei).cwiseAbs().maxCoeff())) return report;
      if (!rep.add("unit_right", {i}, (alg.left_mult[i] * u - ei).cwiseAbs().maxCoeff()))
        return report;
    }
    rep.add("unit_selfadjoint", {}, (s * u.conjugate() - u).cwiseAbs().maxCoeff());
  }

  return report;
}

StarAlgebra function_algebra(Index n) {
  if (n < 1) throw std::invalid_argument("function_algebra: dimension must be >= 1");
  StarAlgebra alg;
  alg.dim = n;
  alg.left_mult.reserve(n);
  for (Index i = 0; i < n; ++i) {
    alg.basis_labels.push_back("e" + std::to_string(i + 1));
    Matrix m = Matrix::Zero(n, n);
    m(i, i) = 1;
    alg.left_mult.push_back(std::move(m));
  }
  alg.invol = Matrix::Identity(n, n);
  alg.unit = Vector::Ones(n);
  alg.trace = Vector::Ones(n);
  return alg;
}

StarAlgebra matrix_algebra(Index k) {
  if (k < 1) throw std::invalid_argument("matrix_algebra: size must be >= 1");
  const Index n = k * k;
  const auto id = [k](Index r, Index c) { return r * k + c; };
  StarAlgebra alg;
  alg.dim = n;
  for (Index r = 0; r < k; ++r)
    for (Index c = 0; c < k; ++c)
      alg.basis_labels.push_back("E" + std::to_string(r + 1) + std::to_string(c + 1));
  // E_rc * E_lm = delta(c, l) E_rm.
  alg.left_mult.assign(n, Matrix::Zero(n, n));
  for (Index r = 0; r < k; ++r)
    for (Index c = 0; c < k; ++c)
      for (Index m = 0; m < k; ++m) alg.left_mult[id(r, c)](id(r, m), id(c, m)) = 1;
  alg.invol = Matrix::Zero(n, n);
  for (Index r = 0; r < k; ++r)
    for (Index c = 0; c < k; ++c) alg.invol(id(c, r), id(r, c)) = 1;
  Vector u = Vector::Zero(n);
  Vector tr = Vector::Zero(n);
  for (Index r = 0; r < k; ++r) u(id(r, r)) = tr(id(r, r)) = 1;
  alg.unit = u;
  alg.trace = tr;
  return alg;
}

namespace {

void require_group_table(const Eigen::MatrixXi& t) {
  const Index n = t.rows();
  if (n < 1 || t.cols() != n) throw std::invalid_argument("group table must be square");
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (t(i, j) < 0 || t(i, j) >= n)
        throw std::invalid_argument("group table entries must index elements");
  Index e = -1;
  for (Index c = 0; c < n; ++c) {
    bool left_id = true, right_id = true;
    for (Index j = 0; j < n; ++j) {
      left_id = left_id && t(c, j) == j;
      right_id = right_id && t(j, c) == j;
    }
    if (left_id && right_id) {
      e = c;
      break;
    }
  }
  if (e < 0) throw std::invalid_argument("group table has no identity element");
  for (Index i = 0; i < n; ++i) {
    std::vector<bool> row(n, false), col(n, false);
    for (Index j = 0; j < n; ++j) {
      row[static_cast<std::size_t>(t(i, j))] = true;
      col[static_cast<std::size_t>(t(j, i))] = true;
    }
    if (std::find(row.begin(), row.end(), false) != row.end() ||
        std::find(col.begin(), col.end(), false) != col.end())
      throw std::invalid_argument("group table is not a Latin square");
  }
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        if (t(t(i, j), k) != t(i, t(j, k)))
          throw std::invalid_argument("group table is not associative");
}

}  // namespace

StarAlgebra group_algebra(const Eigen::MatrixXi& cayley_table) {
  require_group_table(cayley_table);
  const Index n = cayley_table.rows();
  Index e = 0;
  for (Index c = 0; c < n; ++c)
    if (cayley_table(c, 0) == 0 && cayley_table(0, c) == c) {
      bool id = true;
      for (Index j = 0; j < n; ++j) id = id && cayley_table(c, j) == j && cayley_table(j, c) == j;
      if (id) {
        e = c;
        break;
      }
    }
  std::vector<Index> inv(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (cayley_table(i, j) == e) inv[static_cast<std::size_t>(i)] = j;

  StarAlgebra alg;
  alg.dim = n;
  alg.left_mult.assign(n, Matrix::Zero(n, n));
  for (Index i = 0; i < n; ++i) {
    alg.basis_labels.push_back("g" + std::to_string(i));
    for (Index j = 0; j < n; ++j) alg.left_mult[i](cayley_table(i, j), j) = 1;
  }
  alg.invol = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) alg.invol(inv[static_cast<std::size_t>(i)], i) = 1;
  alg.unit = Vector::Unit(n, e);
  alg.trace = Vector::Unit(n, e);
  return alg;
}

StarAlgebra direct_sum(const StarAlgebra& a, const StarAlgebra& b) {
  StarAlgebra alg;
  alg.dim = a.dim + b.dim;
  for (const auto& l : a.basis_labels) alg.basis_labels.push_back("0:" + l);
  for (const auto& l : b.basis_labels) alg.basis_labels.push_back("1:" + l);
  alg.left_mult.assign(alg.dim, Matrix::Zero(alg.dim, alg.dim));
  for (Index i = 0; i < a.dim; ++i)
    alg.left_mult[i].topLeftCorner(a.dim, a.dim) = a.left_mult[i];
  for (Index i = 0; i < b.dim; ++i)
    alg.left_mult[a.dim + i].bottomRightCorner(b.dim, b.dim) = b.left_mult[i];
  alg.invol = Matrix::Zero(alg.dim, alg.dim);
  alg.invol.topLeftCorner(a.dim, a.dim) = a.invol;
  alg.invol.bottomRightCorner(b.dim, b.dim) = b.invol;
  if (a.unit && b.unit) {
    Vector u(alg.dim);
    u << *a.unit, *b.unit;
    alg.unit = u;
  }
  if (a.trace && b.trace) {
    Vector t(alg.dim);
    t << *a.trace, *b.trace;
    alg.trace = t;
  }
  return alg;
}

Eigen::MatrixXi cyclic_group_table(Index n) {
  if (n < 1) throw std::invalid_argument("cyclic_group_table: order must be >= 1");
  Eigen::MatrixXi t(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) t(i, j) = static_cast<int>((i + j) % n);
  return t;
}

Eigen::MatrixXi symmetric_group_table(Index n_letters) {
  if (n_letters < 1 || n_letters > 5)
    throw std::invalid_argument("symmetric_group_table: supported for 1..5 letters");
  std::vector<std::vector<Index>> perms;
  std::vector<Index> p(static_cast<std::size_t>(n_letters));
  std::iota(p.begin(), p.end(), Index(0));
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const Index n = static_cast<Index>(perms.size());
  const auto index_of = [&](const std::vector<Index>& q) {
    return static_cast<Index>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  Eigen::MatrixXi t(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      std::vector<Index> comp(static_cast<std::size_t>(n_letters));
      for (Index x = 0; x < n_letters; ++x)
        comp[static_cast<std::size_t>(x)] =
            perms[static_cast<std::size_t>(i)][static_cast<std::size_t>(
                perms[static_cast<std::size_t>(j)][static_cast<std::size_t>(x)])];
      t(i, j) = static_cast<int>(index_of(comp));
    }
  }
  return t;
}

}  // namespace starleb
