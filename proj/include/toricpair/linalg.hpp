#pragma once

// Exact dense linear algebra over Q and Z.
//
// Field routines (row_echelon, rank, kernel, solve, inverse) accept integer
// or rational matrices; integer inputs are promoted to Rational. Ring
// routines (smith_normal_form, integer_kernel) work on any exact integral
// scalar.

#include "toricpair/scalar.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace toricpair {

namespace detail {

template <typename Scalar>
struct field_of {
  using type = Scalar;
};
template <>
struct field_of<Integer> {
  using type = Rational;
};

template <typename Scalar>
Scalar abs_value(const Scalar& x) {
  return x < 0 ? Scalar(-x) : x;
}

}  // namespace detail

template <typename Derived>
using FieldMatrix = Matrix<typename detail::field_of<typename Derived::Scalar>::type>;

template <typename Derived>
FieldMatrix<Derived> as_field(const Eigen::MatrixBase<Derived>& a) {
  using Field = typename detail::field_of<typename Derived::Scalar>::type;
  return a.template cast<Field>();
}

template <typename Scalar>
struct RowEchelon {
  Matrix<Scalar> reduced;
  std::vector<Index> pivots;

  Index rank() const { return static_cast<Index>(pivots.size()); }
};

/// Reduced row echelon form over the field of fractions of the input scalar.
template <typename Derived>
auto row_echelon(const Eigen::MatrixBase<Derived>& a) {
  using Field = typename detail::field_of<typename Derived::Scalar>::type;
  RowEchelon<Field> out{as_field(a), {}};
  Matrix<Field>& m = out.reduced;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pivot = -1;
    for (Index r = row; r < m.rows(); ++r) {
      if (m(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    m.row(row).swap(m.row(pivot));
    const Field inv = Field(1) / m(row, col);
    for (Index c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Field factor = m(r, col);
      for (Index c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& a) {
  return row_echelon(a).rank();
}

/// Basis of the right null space, one vector per free column of the RREF.
/// The basis depends only on the row space of `a`.
template <typename Derived>
auto kernel(const Eigen::MatrixBase<Derived>& a) {
  const auto echelon = row_echelon(a);
  using Field = typename decltype(echelon.reduced)::Scalar;
  const Index n = a.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : echelon.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  Matrix<Field> basis(n, n - echelon.rank());
  Index k = 0;
  for (Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    for (Index i = 0; i < n; ++i) basis(i, k) = 0;
    basis(free, k) = 1;
    for (Index r = 0; r < echelon.rank(); ++r)
      basis(echelon.pivots[static_cast<std::size_t>(r)], k) = -echelon.reduced(r, free);
    ++k;
  }
  return basis;
}

/// Kernel basis scaled to primitive integer vectors.
template <typename Derived>
std::vector<LatticePoint> primitive_kernel(const Eigen::MatrixBase<Derived>& a) {
  const auto basis = kernel(a);
  std::vector<LatticePoint> out;
  out.reserve(static_cast<std::size_t>(basis.cols()));
  for (Index k = 0; k < basis.cols(); ++k) {
    RationalVector col = basis.col(k).template cast<Rational>();
    out.push_back(clear_denominators(col));
  }
  return out;
}

/// Some solution of a x = b, or nullopt when the system is inconsistent.
template <typename DerivedA, typename DerivedB>
std::optional<RationalVector> solve(const Eigen::MatrixBase<DerivedA>& a,
                                    const Eigen::MatrixBase<DerivedB>& b) {
  RatMatrix augmented(a.rows(), a.cols() + 1);
  augmented.leftCols(a.cols()) = a.template cast<Rational>();
  augmented.col(a.cols()) = b.template cast<Rational>();
  const auto echelon = row_echelon(augmented);
  if (!echelon.pivots.empty() && echelon.pivots.back() == a.cols()) return std::nullopt;
  RationalVector x = RationalVector::Zero(a.cols());
  for (Index r = 0; r < echelon.rank(); ++r)
    x(echelon.pivots[static_cast<std::size_t>(r)]) = echelon.reduced(r, a.cols());
  return x;
}

template <typename Derived>
auto inverse(const Eigen::MatrixBase<Derived>& a) {
  using Field = typename detail::field_of<typename Derived::Scalar>::type;
  const Index n = a.rows();
  Matrix<Field> augmented(n, 2 * n);
  augmented.leftCols(n) = as_field(a);
  augmented.rightCols(n) = Matrix<Field>::Identity(n, n);
  const auto echelon = row_echelon(augmented);
  if (echelon.rank() < n || echelon.pivots[static_cast<std::size_t>(n - 1)] >= n)
    throw std::domain_error("matrix is singular");
  return Matrix<Field>(echelon.reduced.rightCols(n));
}

template <typename Scalar>
struct SmithForm {
  Matrix<Scalar> left;      // unimodular, rows x rows
  Matrix<Scalar> right;     // unimodular, cols x cols
  Matrix<Scalar> diagonal;  // left * input * right
  std::vector<Scalar> invariant_factors;  // positive, each dividing the next
};

/// Smith normal form with transforms: left * a * right = diagonal.
template <typename Scalar>
SmithForm<Scalar> smith_normal_form(const Matrix<Scalar>& a) {
  using detail::abs_value;
  const Index m = a.rows();
  const Index n = a.cols();
  SmithForm<Scalar> s{Matrix<Scalar>::Identity(m, m), Matrix<Scalar>::Identity(n, n), a, {}};
  Matrix<Scalar>& d = s.diagonal;

  for (Index t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      Index pi = -1, pj = -1;
      for (Index i = t; i < m; ++i)
        for (Index j = t; j < n; ++j)
          if (d(i, j) != 0 && (pi < 0 || abs_value(d(i, j)) < abs_value(d(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) {
        for (Index k = 0; k < t; ++k) s.invariant_factors.push_back(d(k, k));
        return s;
      }
      d.row(t).swap(d.row(pi));
      s.left.row(t).swap(s.left.row(pi));
      d.col(t).swap(d.col(pj));
      s.right.col(t).swap(s.right.col(pj));

      bool clean = true;
      for (Index i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        const Scalar q = d(i, t) / d(t, t);
        d.row(i) -= q * d.row(t);
        s.left.row(i) -= q * s.left.row(t);
        if (d(i, t) != 0) clean = false;
      }
      for (Index j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        const Scalar q = d(t, j) / d(t, t);
        d.col(j) -= q * d.col(t);
        s.right.col(j) -= q * s.right.col(t);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      Index bad = -1;
      for (Index i = t + 1; i < m && bad < 0; ++i)
        for (Index j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad >= 0) {
        d.row(t) += d.row(bad);
        s.left.row(t) += s.left.row(bad);
        continue;
      }
      if (d(t, t) < 0) {
        d.row(t) = -d.row(t);
        s.left.row(t) = -s.left.row(t);
      }
      break;
    }
  }
  for (Index k = 0; k < std::min(m, n); ++k)
    if (d(k, k) != 0) s.invariant_factors.push_back(d(k, k));
  return s;
}

/// Columns form a Z-basis of {x in Z^n : a x = 0}.
template <typename Scalar>
Matrix<Scalar> integer_kernel(const Matrix<Scalar>& a) {
  using detail::abs_value;
  const Index n = a.cols();
  Matrix<Scalar> h = a;
  Matrix<Scalar> v = Matrix<Scalar>::Identity(n, n);
  Index col = 0;
  for (Index r = 0; r < h.rows() && col < n; ++r) {
    for (;;) {
      Index best = -1;
      for (Index j = col; j < n; ++j)
        if (h(r, j) != 0 && (best < 0 || abs_value(h(r, j)) < abs_value(h(r, best)))) best = j;
      if (best < 0) break;
      h.col(col).swap(h.col(best));
      v.col(col).swap(v.col(best));
      bool done = true;
      for (Index j = col + 1; j < n; ++j) {
        if (h(r, j) == 0) continue;
        const Scalar q = h(r, j) / h(r, col);
        h.col(j) -= q * h.col(col);
        v.col(j) -= q * v.col(col);
        if (h(r, j) != 0) done = false;
      }
      if (done) {
        ++col;
        break;
      }
    }
  }
  return v.rightCols(n - col);
}

/// Stack points as the rows of an integer matrix.
IntMatrix rows_matrix(const std::vector<LatticePoint>& rows, Index cols);

}  // namespace toricpair
