#pragma once
#include <Eigen/Core>

#include <cstddef>
#include <utility>
#include <vector>

namespace strata {

template <class Scalar_, int Rows_ = Eigen::Dynamic, int Cols_ = Eigen::Dynamic>
using mat_type = Eigen::Matrix<Scalar_, Rows_, Cols_>;

template <class Scalar_, int Rows_ = Eigen::Dynamic>
using vec_type = Eigen::Matrix<Scalar_, Rows_, 1>;

template <class Scalar_>
struct RowEchelon {
  mat_type<Scalar_> reduced;  // reduced row echelon form, zero rows at the bottom
  std::vector<Eigen::Index> pivots;  // pivot column per nonzero row
  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

// Exact Gauss-Jordan elimination. Scalar must be a field with exact equality.
template <class Scalar_>
RowEchelon<Scalar_> row_reduce(mat_type<Scalar_> m) {
  RowEchelon<Scalar_> out;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (m(i, c) != Scalar_(0)) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r) m.row(piv).swap(m.row(r));
    const Scalar_ inv = Scalar_(1) / m(r, c);
    for (Eigen::Index j = c; j < cols; ++j) m(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == Scalar_(0)) continue;
      const Scalar_ f = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

template <class Scalar_>
Eigen::Index rank(const mat_type<Scalar_>& m) {
  return row_reduce<Scalar_>(m).rank();
}

// Columns form a basis of {x : m x = 0}. One basis vector per free column,
// with a 1 in that column.
template <class Scalar_>
mat_type<Scalar_> nullspace(const mat_type<Scalar_>& m) {
  const Eigen::Index cols = m.cols();
  RowEchelon<Scalar_> re = row_reduce<Scalar_>(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (auto p : re.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0; c < cols; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
  mat_type<Scalar_> basis = mat_type<Scalar_>::Zero(cols, static_cast<Eigen::Index>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const Eigen::Index f = free_cols[k];
    const Eigen::Index kk = static_cast<Eigen::Index>(k);
    basis(f, kk) = Scalar_(1);
    for (std::size_t r = 0; r < re.pivots.size(); ++r)
      basis(re.pivots[r], kk) = -re.reduced(static_cast<Eigen::Index>(r), f);
  }
  return basis;
}

// Rank of [a; b] minus rank of a.
template <class Scalar_>
Eigen::Index relative_rank(const mat_type<Scalar_>& a, const mat_type<Scalar_>& b) {
  mat_type<Scalar_> stacked(a.rows() + b.rows(), a.cols());
  if (a.rows() > 0) stacked.topRows(a.rows()) = a;
  if (b.rows() > 0) stacked.bottomRows(b.rows()) = b;
  return rank<Scalar_>(stacked) - rank<Scalar_>(a);
}

template <class Scalar_>
bool row_is_zero(const mat_type<Scalar_>& m, Eigen::Index i) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    if (m(i, j) != Scalar_(0)) return false;
  return true;
}

}  // namespace strata
