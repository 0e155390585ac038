#include "quiver/represent.hpp"

#include <algorithm>

namespace quiver {

DimensionVector RepresentativeTuple::dimensions() const {
  if (maps.empty()) throw InvalidArgument("representative tuple has no maps");
  std::vector<std::int64_t> dims{static_cast<std::int64_t>(maps.front().cols())};
  for (const auto& a : maps) {
    if (a.cols() != dims.back()) throw InvalidArgument("matrix shapes do not chain");
    dims.push_back(static_cast<std::int64_t>(a.rows()));
  }
  return DimensionVector(std::move(dims));
}

IntMatrix checked_product(const IntMatrix& lhs, const IntMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) throw InvalidArgument("matrix shapes do not chain");
  IntMatrix out = IntMatrix::Zero(lhs.rows(), rhs.cols());
  for (Eigen::Index i = 0; i < lhs.rows(); ++i) {
    for (Eigen::Index j = 0; j < rhs.cols(); ++j) {
      Wide acc = 0;
      for (Eigen::Index t = 0; t < lhs.cols(); ++t)
        acc = checked::add(acc, checked::mul(lhs(i, t), rhs(t, j), "matrix product"), "matrix product");
      out(i, j) = checked::narrow(acc, "matrix product");
    }
  }
  return out;
}

RepresentativeTuple representative_tuple(const LaceDiagram& g) {
  const int n = g.order();
  if (n < 1) throw MalformedDiagram("representatives need at least two columns");
  RepresentativeTuple t;
  for (int x = 1; x <= n; ++x) {
    const auto& left = g.column(x - 1);
    const auto& right = g.column(x);
    IntMatrix a = IntMatrix::Zero(static_cast<Eigen::Index>(right.size()), static_cast<Eigen::Index>(left.size()));
    for (std::size_t c = 0; c < left.size(); ++c) {
      auto target = g.right_neighbor(x - 1, left[c]);
      if (!target) continue;
      auto it = std::lower_bound(right.begin(), right.end(), *target);
      if (it == right.end() || *it != *target) throw MalformedDiagram("link ends outside the diagram");
      a(it - right.begin(), static_cast<Eigen::Index>(c)) = 1;
    }
    t.maps.push_back(std::move(a));
  }
  return t;
}

IntMatrix partial_product(const RepresentativeTuple& t, int k, int l) {
  if (k < 0 || l > t.order() || k >= l) throw InvalidArgument("partial product needs 0 <= k < l <= n");
  IntMatrix acc = t.map(k + 1);
  for (int i = k + 2; i <= l; ++i) {
    if (acc.isZero()) return IntMatrix::Zero(t.map(l).rows(), acc.cols());
    acc = checked_product(t.map(i), acc);
  }
  return acc;
}

RankPattern partial_products_ranks(const RepresentativeTuple& t) {
  const DimensionVector d = t.dimensions();
  const int n = d.order();
  RankPattern r(n);
  for (int i = 0; i <= n; ++i) r(i, i) = d[static_cast<std::size_t>(i)];
  for (int k = 0; k < n; ++k) {
    IntMatrix acc = t.map(k + 1);
    r(k, k + 1) = exact_rank(acc);
    for (int l = k + 2; l <= n; ++l) {
      acc = acc.isZero() ? IntMatrix::Zero(t.map(l).rows(), acc.cols()) : checked_product(t.map(l), acc);
      r(k, l) = exact_rank(acc);
    }
  }
  return r;
}

bool product_is_zero(const RepresentativeTuple& t) {
  t.dimensions();
  return partial_product(t, 0, t.order()).isZero();
}

}  // namespace quiver
