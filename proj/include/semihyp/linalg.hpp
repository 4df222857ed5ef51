// Exact Gaussian elimination over a field scalar (instantiated with Rational).
//
// Free functions, no state. Pivots are chosen among the nonzero candidates of
// a column by smallest |numerator|*denominator to keep coefficient growth down;
// results are exact regardless of the choice.

#ifndef SEMIHYP_LINALG_HPP_
#define SEMIHYP_LINALG_HPP_

#include <optional>
#include <vector>

#include "semihyp/rational.hpp"

namespace semihyp {

namespace detail {

// Pivot preference: smaller is better. Only the relative order matters.
inline mpz_class pivot_score(const Rational& q) {
  mpz_class num = q.get_num();
  if (num < 0) num = -num;
  return num * q.get_den();
}

template <typename Scalar>
mpz_class pivot_score(const Scalar& s) {
  (void)s;
  return 1;  // no preference for other scalars
}

}  // namespace detail

/// In-place reduction to reduced row echelon form. Returns the rank; the
/// indices of the pivot columns are appended to *pivotCols when given.
template <typename Scalar>
int row_reduce(DenseMatrix<Scalar>& m, std::vector<int>* pivotCols = nullptr) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index lead = 0;
  for (Eigen::Index col = 0; col < cols && lead < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = lead; r < rows; ++r) {
      if (m(r, col) == 0) continue;
      if (pivot < 0 ||
          detail::pivot_score(m(r, col)) < detail::pivot_score(m(pivot, col)))
        pivot = r;
    }
    if (pivot < 0) continue;
    m.row(pivot).swap(m.row(lead));
    const Scalar inv = Scalar(1) / m(lead, col);
    for (Eigen::Index c = col; c < cols; ++c) m(lead, c) *= inv;
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == lead || m(r, col) == 0) continue;
      const Scalar factor = m(r, col);
      for (Eigen::Index c = col; c < cols; ++c)
        m(r, c) -= factor * m(lead, c);
    }
    if (pivotCols) pivotCols->push_back(static_cast<int>(col));
    ++lead;
  }
  return static_cast<int>(lead);
}

template <typename Scalar>
int rank_of(DenseMatrix<Scalar> m) {
  return row_reduce(m);
}

inline int rank_of(const IntMatrix& m) { return rank_of(to_rational(m)); }

/// Basis of {x : m x = 0}, one vector per free column.
template <typename Scalar>
std::vector<DenseVector<Scalar>> kernel_basis(DenseMatrix<Scalar> m) {
  std::vector<int> pivots;
  row_reduce(m, &pivots);
  const Eigen::Index cols = m.cols();
  std::vector<bool> isPivot(cols, false);
  for (int p : pivots) isPivot[p] = true;

  std::vector<DenseVector<Scalar>> basis;
  for (Eigen::Index freeCol = 0; freeCol < cols; ++freeCol) {
    if (isPivot[freeCol]) continue;
    DenseVector<Scalar> v = DenseVector<Scalar>::Zero(cols);
    v(freeCol) = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v(pivots[r]) = -m(static_cast<Eigen::Index>(r), freeCol);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// One solution of a x = b if the system is consistent.
template <typename Scalar>
std::optional<DenseVector<Scalar>> solve_consistent(
    const DenseMatrix<Scalar>& a, const DenseVector<Scalar>& b) {
  DenseMatrix<Scalar> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  std::vector<int> pivots;
  row_reduce(aug, &pivots);
  for (int p : pivots)
    if (p == static_cast<int>(a.cols())) return std::nullopt;
  DenseVector<Scalar> x = DenseVector<Scalar>::Zero(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x(pivots[r]) = aug(static_cast<Eigen::Index>(r), a.cols());
  return x;
}

/// Whether v lies in the row span of `rows`.
template <typename Scalar>
bool in_row_span(const DenseMatrix<Scalar>& rows,
                 const DenseVector<Scalar>& v) {
  const int base = rank_of(rows);
  DenseMatrix<Scalar> ext(rows.rows() + 1, rows.cols());
  ext.topRows(rows.rows()) = rows;
  ext.row(rows.rows()) = v.transpose();
  return rank_of(std::move(ext)) == base;
}

/// Stacks a list of vectors as matrix rows (empty list gives a 0 x dim matrix).
template <typename Scalar>
DenseMatrix<Scalar> stack_rows(const std::vector<DenseVector<Scalar>>& vecs,
                               Eigen::Index dim) {
  DenseMatrix<Scalar> m(static_cast<Eigen::Index>(vecs.size()), dim);
  for (std::size_t i = 0; i < vecs.size(); ++i)
    m.row(static_cast<Eigen::Index>(i)) = vecs[i].transpose();
  return m;
}

}  // namespace semihyp

#endif  // SEMIHYP_LINALG_HPP_
