#pragma once

// Exact linear algebra over a field S on top of Eigen dense containers.
//
// Two independent elimination routes are kept on purpose:
//   * RowEchelon: incremental Gauss-Jordan, yields the unique reduced row
//     echelon form (canonical bases, coordinates, membership);
//   * bareiss_rank / bareiss_determinant: fraction-free elimination.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "altlab/scalar.hpp"

namespace altlab {

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <class S>
using RowVector = Eigen::Matrix<S, 1, Eigen::Dynamic>;

template <class S>
Matrix<S> zero_matrix(Eigen::Index rows, Eigen::Index cols) {
  return Matrix<S>::Constant(rows, cols, S(0));
}
template <class S>
Vector<S> zero_vector(Eigen::Index n) {
  return Vector<S>::Constant(n, S(0));
}
template <class S>
Matrix<S> identity_matrix(Eigen::Index n) {
  Matrix<S> m = zero_matrix<S>(n, n);
  for (Eigen::Index t = 0; t < n; ++t) m(t, t) = S(1);
  return m;
}

template <class Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (!is_zero<S>(m(r, c))) return false;
  return true;
}

/// Subspace of S^width held in reduced row echelon form. Rows are kept
/// sorted by pivot column, each pivot entry is 1 and every other row is zero
/// in that column, so the stored form depends only on the subspace.
template <class S>
class RowEchelon {
 public:
  RowEchelon() = default;
  explicit RowEchelon(Eigen::Index width) : width_(width) {}

  Eigen::Index width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }
  bool full() const { return static_cast<Eigen::Index>(rows_.size()) == width_; }
  const std::vector<Vector<S>>& rows() const { return rows_; }
  const std::vector<Eigen::Index>& pivots() const { return pivots_; }

  /// v minus its projection along the stored rows (zero iff v is in the span).
  Vector<S> reduce(Vector<S> v) const {
    check(v);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const S c = v(pivots_[r]);
      if (!is_zero(c)) v -= c * rows_[r];
    }
    return v;
  }

  bool contains(const Vector<S>& v) const { return is_zero_matrix(reduce(v)); }

  /// Coefficients of v on the stored rows; nullopt when v is not in the span.
  std::optional<Vector<S>> coordinates(const Vector<S>& v) const {
    if (!contains(v)) return std::nullopt;
    Vector<S> c(static_cast<Eigen::Index>(rows_.size()));
    for (std::size_t r = 0; r < rows_.size(); ++r) c(static_cast<Eigen::Index>(r)) = v(pivots_[r]);
    return c;
  }

  /// Adds v to the span. Returns false when v was already in it.
  bool insert(const Vector<S>& v) {
    Vector<S> w = reduce(v);
    Eigen::Index p = 0;
    while (p < width_ && is_zero<S>(w(p))) ++p;
    if (p == width_) return false;
    const S inv = S(1) / w(p);
    w *= inv;
    for (auto& row : rows_) {
      const S c = row(p);
      if (!is_zero(c)) row -= c * w;
    }
    auto at = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    const auto offset = at - pivots_.begin();
    pivots_.insert(at, p);
    rows_.insert(rows_.begin() + offset, std::move(w));
    return true;
  }

  template <class Range>
  std::size_t insert_all(const Range& vs) {
    std::size_t added = 0;
    for (const auto& v : vs) {
      if (full()) break;
      added += insert(v) ? 1 : 0;
    }
    return added;
  }

  Matrix<S> to_matrix() const {
    Matrix<S> m(static_cast<Eigen::Index>(rows_.size()), width_);
    for (std::size_t r = 0; r < rows_.size(); ++r) m.row(static_cast<Eigen::Index>(r)) = rows_[r].transpose();
    return m;
  }

 private:
  void check(const Vector<S>& v) const {
    if (v.size() != width_) throw UsageError("RowEchelon: vector width mismatch");
  }

  Eigen::Index width_ = 0;
  std::vector<Vector<S>> rows_;
  std::vector<Eigen::Index> pivots_;
};

template <class S>
RowEchelon<S> span_of(Eigen::Index width, const std::vector<Vector<S>>& vs) {
  RowEchelon<S> e(width);
  e.insert_all(vs);
  return e;
}

/// dim(U ∩ W) = dim U + dim W - dim(U + W).
template <class S>
std::size_t intersection_dim(const RowEchelon<S>& u, const RowEchelon<S>& w) {
  RowEchelon<S> sum = u;
  sum.insert_all(w.rows());
  return u.rank() + w.rank() - sum.rank();
}

namespace detail {

// Fraction-free forward elimination in place. Pivots are taken in column
// order, first nonzero row wins. Returns (rank, sign of the row permutation).
template <class S>
std::pair<Eigen::Index, int> bareiss_eliminate(Matrix<S>& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index rank = 0;
  int sign = 1;
  S prev(1);
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index piv = rank;
    while (piv < rows && is_zero<S>(m(piv, c))) ++piv;
    if (piv == rows) continue;
    if (piv != rank) {
      m.row(piv).swap(m.row(rank));
      sign = -sign;
    }
    const S p = m(rank, c);
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      const S lead = m(r, c);
      for (Eigen::Index k = c + 1; k < cols; ++k) m(r, k) = (p * m(r, k) - lead * m(rank, k)) / prev;
      m(r, c) = S(0);
    }
    prev = p;
    ++rank;
  }
  return {rank, sign};
}

}  // namespace detail

template <class Derived>
Eigen::Index bareiss_rank(const Eigen::MatrixBase<Derived>& a) {
  using S = typename Derived::Scalar;
  Matrix<S> m = a;
  return detail::bareiss_eliminate(m).first;
}

/// Determinant by Bareiss elimination; the last pivot of a full-rank square
/// matrix is the determinant up to the row-swap sign.
template <class Derived>
typename Derived::Scalar bareiss_determinant(const Eigen::MatrixBase<Derived>& a) {
  using S = typename Derived::Scalar;
  if (a.rows() != a.cols()) throw UsageError("determinant of a non-square matrix");
  if (a.rows() == 0) return S(1);
  Matrix<S> m = a;
  auto [rank, sign] = detail::bareiss_eliminate(m);
  if (rank < m.rows()) return S(0);
  const S d = m(m.rows() - 1, m.cols() - 1);
  return sign > 0 ? d : S(-d);
}

/// Gauss-Jordan inverse; throws UsageError on a singular matrix.
template <class Derived>
Matrix<typename Derived::Scalar> inverse(const Eigen::MatrixBase<Derived>& a) {
  using S = typename Derived::Scalar;
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw UsageError("inverse of a non-square matrix");
  Matrix<S> m(n, 2 * n);
  m.leftCols(n) = a;
  m.rightCols(n) = identity_matrix<S>(n);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index piv = c;
    while (piv < n && is_zero<S>(m(piv, c))) ++piv;
    if (piv == n) throw UsageError("matrix is singular");
    if (piv != c) m.row(piv).swap(m.row(c));
    const S inv = S(1) / m(c, c);
    m.row(c) *= inv;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == c) continue;
      const S f = m(r, c);
      if (!is_zero(f)) m.row(r) -= f * m.row(c);
    }
  }
  return m.rightCols(n);
}

}  // namespace altlab
