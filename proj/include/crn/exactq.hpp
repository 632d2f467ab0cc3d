#ifndef CRN_EXACTQ_HPP
#define CRN_EXACTQ_HPP

#include "crn/errors.hpp"
#include "crn/model.hpp"
#include "crn/numeric.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace crn {

template <typename Scalar>
struct RankKernel {
  Eigen::Index rank = 0;
  std::vector<Vector<Scalar>> kernel_basis;
};

/// Reduced row echelon form over an exact field. Returns the pivot columns.
template <typename Scalar>
std::vector<Eigen::Index> rref_in_place(Matrix<Scalar>& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pick = -1;
    for (Eigen::Index r = row; r < m.rows(); ++r) {
      if (m(r, col) != 0) {
        pick = r;
        break;
      }
    }
    if (pick < 0) continue;
    if (pick != row) m.row(pick).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    for (Eigen::Index c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Scalar f = m(r, col);
      for (Eigen::Index c = col; c < m.cols(); ++c) {
        if (m(row, c) != 0) m(r, c) -= f * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename Scalar>
Eigen::Index rank_of(Matrix<Scalar> m) {
  return static_cast<Eigen::Index>(rref_in_place(m).size());
}

/// Exact rank and a kernel basis (one vector per free column of the RREF).
template <typename Scalar>
RankKernel<Scalar> rank_and_kernel_basis(const Matrix<Scalar>& input) {
  Matrix<Scalar> m = input;
  const auto pivots = rref_in_place(m);
  RankKernel<Scalar> out;
  out.rank = static_cast<Eigen::Index>(pivots.size());
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (auto p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  for (Eigen::Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vector<Scalar> v = Vector<Scalar>::Zero(m.cols());
    v(free) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      v(pivots[i]) = -m(static_cast<Eigen::Index>(i), free);
    }
    out.kernel_basis.push_back(std::move(v));
  }
  return out;
}

/// Some m with a·m = 0 and every m(S) > 0, verified before return.
std::optional<RationalVector> solve_strict_positive_kernel(const RationalMatrix& a);

/// m scaled by the lcm of its denominators. Throws NonPositiveEntry.
IntVector integerize_positive(const RationalVector& m);

/// Positive integer mass vector of the network, if it is mass conserving.
std::optional<IntVector> mass_vector(const Network& network);

}  // namespace crn

#endif  // CRN_EXACTQ_HPP
