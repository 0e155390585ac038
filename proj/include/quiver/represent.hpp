#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "quiver/checked.hpp"
#include "quiver/kostant.hpp"
#include "quiver/lace.hpp"

namespace quiver {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntMatrix = Matrix<std::int64_t>;

/// (A_1, ..., A_n) with A_i : C^{d_{i-1}} -> C^{d_i}, a d_i x d_{i-1} matrix.
/// maps[i - 1] holds A_i.
struct RepresentativeTuple {
  std::vector<IntMatrix> maps;

  int order() const { return static_cast<int>(maps.size()); }
  const IntMatrix& map(int i) const { return maps.at(static_cast<std::size_t>(i - 1)); }
  /// Dimension vector read off the shapes; throws if they do not chain.
  DimensionVector dimensions() const;
};

/// Rank over Q by Bareiss fraction-free elimination. Intermediate values are
/// minors of the input, computed in checked 128-bit arithmetic.
template <typename Derived>
int exact_rank(const Eigen::MatrixBase<Derived>& m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Matrix<Wide> a(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) a(i, j) = static_cast<Wide>(m(i, j));

  int rank = 0;
  Wide prev_pivot = 1;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = rank;
    while (pivot < rows && a(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    a.row(pivot).swap(a.row(rank));
    const Wide p = a(rank, col);
    for (Eigen::Index i = rank + 1; i < rows; ++i) {
      for (Eigen::Index j = col + 1; j < cols; ++j) {
        const Wide cross = checked::sub(checked::mul(p, a(i, j), "exact_rank"),
                                        checked::mul(a(i, col), a(rank, j), "exact_rank"), "exact_rank");
        // Sylvester's identity makes this division exact.
        a(i, j) = cross / prev_pivot;
      }
      a(i, col) = 0;
    }
    prev_pivot = p;
    ++rank;
  }
  return rank;
}

/// Exact product with overflow detection.
IntMatrix checked_product(const IntMatrix& lhs, const IntMatrix& rhs);

/// 0/1 representative of the orbit of g: dots indexed bottom-up within each
/// column; A_x has a 1 at (right dot, left dot) for each link between x-1, x.
RepresentativeTuple representative_tuple(const LaceDiagram& g);

/// A_l ... A_{k+1} for k < l.
IntMatrix partial_product(const RepresentativeTuple& t, int k, int l);

/// r_kl = rank(A_l ... A_{k+1}) for k < l and r_ii = d_i.
RankPattern partial_products_ranks(const RepresentativeTuple& t);

/// A_n ... A_1 == 0.
bool product_is_zero(const RepresentativeTuple& t);

}  // namespace quiver
