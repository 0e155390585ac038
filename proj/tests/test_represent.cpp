#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "quiver/represent.hpp"

using namespace quiver;

namespace {

IntMatrix mat(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = static_cast<Eigen::Index>(rows.begin()->size());
  IntMatrix a(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (auto v : row) a(i, j++) = v;
    ++i;
  }
  return a;
}

std::vector<std::vector<std::int64_t>> rows_of(const IntMatrix& a) {
  std::vector<std::vector<std::int64_t>> out(static_cast<std::size_t>(a.rows()));
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out[static_cast<std::size_t>(i)].push_back(a(i, j));
  return out;
}

LaceDiagram chain_diagram() {
  LaceDiagram g(3);
  const std::vector<std::int64_t> sizes{2, 3, 2, 3};
  for (int x = 0; x <= 3; ++x)
    for (std::int64_t y = 0; y < sizes[static_cast<std::size_t>(x)]; ++y) g.add_dot(x, y);
  g.add_link(0, 0, 0);
  g.add_link(0, 1, 1);
  g.add_link(1, 1, 0);
  g.add_link(1, 2, 1);
  g.add_link(2, 1, 0);
  return g;
}

}  // namespace

TEST_CASE("exact_rank") {
  CHECK(exact_rank(mat({{0, 0}, {1, 0}})) == 1);
  CHECK(exact_rank(mat({{0, 0}, {0, 0}})) == 0);
  CHECK(exact_rank(IntMatrix::Identity(4, 4)) == 4);
  CHECK(exact_rank(mat({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);
  CHECK(exact_rank(mat({{2, 4}, {1, 2}, {3, 6}})) == 1);
  CHECK(exact_rank(IntMatrix(0, 3)) == 0);
  // Nearly dependent rows that a floating-point rank would get wrong.
  const std::int64_t big = std::int64_t{1} << 40;
  CHECK(exact_rank(mat({{big, big + 1}, {big - 1, big}})) == 2);
}

TEST_CASE("exact_rank agrees with the largest non-vanishing minor") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> dim(1, 5);
  std::uniform_int_distribution<std::int64_t> entry(-3, 3);
  std::bernoulli_distribution sparse(0.4);
  for (int trial = 0; trial < 400; ++trial) {
    IntMatrix a(dim(rng), dim(rng));
    const bool binary = trial % 2 == 0;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = binary ? (sparse(rng) ? 1 : 0) : entry(rng);
    CHECK(exact_rank(a) == oracle::rank_by_minors(rows_of(a)));
    CHECK(exact_rank(a.transpose()) == exact_rank(a));
  }
}

TEST_CASE("a general element of a (2,3,2,3) component") {
  RepresentativeTuple t;
  t.maps = {mat({{0, 0}, {1, 0}, {0, 1}}), mat({{1, 0, 0}, {0, 1, 0}}), mat({{0, 0}, {0, 0}, {1, 0}})};
  CHECK(t.dimensions() == DimensionVector{2, 3, 2, 3});
  const auto r = partial_products_ranks(t);
  CHECK(r(0, 3) == 0);
  CHECK(r(0, 2) == 1);
  CHECK(r(2, 3) == 1);
  CHECK(r(1, 3) == 1);
  CHECK(product_is_zero(t));
  CHECK(partial_product(t, 0, 2) == mat({{0, 0}, {1, 0}}));
  // Same orbit as the diagonal-link diagram.
  CHECK(r == partial_products_ranks(representative_tuple(chain_diagram())));
  CHECK(partition_from_rank(r) == partition_of_diagram(chain_diagram()));
}

TEST_CASE("representative_tuple") {
  SUBCASE("no links gives zero maps") {
    LaceDiagram g(2);
    g.add_dot(0, 0);
    g.add_dot(1, 5);
    g.add_dot(2, 0);
    g.add_dot(2, 1);
    const auto t = representative_tuple(g);
    CHECK(t.dimensions() == DimensionVector{1, 1, 2});
    CHECK(t.map(1).isZero());
    CHECK(t.map(2).isZero());
    CHECK(product_is_zero(t));
  }
  SUBCASE("open orbit of (2,2) is the identity") {
    const auto t = representative_tuple(open_orbit_diagram(DimensionVector{2, 2}));
    CHECK(t.map(1) == IntMatrix::Identity(2, 2));
    CHECK_FALSE(product_is_zero(t));
  }
  SUBCASE("identity chain is not in the variety") {
    const auto t = representative_tuple(open_orbit_diagram(DimensionVector{3, 3, 3, 3}));
    CHECK_FALSE(product_is_zero(t));
    CHECK(partial_products_ranks(t)(0, 3) == 3);
  }
  SUBCASE("(2,3,2,3) diagram with diagonal links") {
    const auto t = representative_tuple(chain_diagram());
    CHECK(t.map(1) == mat({{1, 0}, {0, 1}, {0, 0}}));
    CHECK(t.map(2) == mat({{0, 1, 0}, {0, 0, 1}}));
    CHECK(t.map(3) == mat({{0, 1}, {0, 0}, {0, 0}}));
    CHECK(partial_products_ranks(t) == rank_pattern(partition_of_diagram(chain_diagram())));
  }
  CHECK_THROWS_AS(representative_tuple(LaceDiagram(0)), MalformedDiagram);
}

TEST_CASE("checked_product") {
  CHECK(checked_product(mat({{1, 2}}), mat({{3}, {4}})) == mat({{11}}));
  CHECK_THROWS_AS(checked_product(mat({{1, 2}}), mat({{3, 4}})), InvalidArgument);
  const std::int64_t big = std::int64_t{1} << 40;
  CHECK_THROWS_AS(checked_product(mat({{big}}), mat({{big}})), OverflowError);
}

TEST_CASE("representatives of random lace diagrams realize their rank pattern") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const auto m = oracle::random_partition(rng, n, 3);
    const auto g = oracle::stacked_diagram(m, rng);
    REQUIRE(partition_of_diagram(g) == m);
    const auto t = representative_tuple(g);
    for (int x = 1; x <= t.order(); ++x) {
      const auto& a = t.map(x);
      for (Eigen::Index i = 0; i < a.rows(); ++i) CHECK(a.row(i).sum() <= 1);
      for (Eigen::Index j = 0; j < a.cols(); ++j) CHECK(a.col(j).sum() <= 1);
    }
    CHECK(partial_products_ranks(t) == rank_pattern(m));
    CHECK(product_is_zero(t) == (m(0, m.order()) == 0));
  }
}
