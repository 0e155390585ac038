#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "quiver/verify.hpp"

using namespace quiver;

namespace {

std::set<KostantPartition> partitions_of(const ComponentReport& report) {
  std::set<KostantPartition> out;
  for (const auto& rec : report.components) out.insert(rec.kostant_partition);
  return out;
}

const std::set<Method> kAll{Method::Qip, Method::QSeries, Method::ClosedForm, Method::BruteForce};

}  // namespace

TEST_CASE("brute_force_components") {
  SUBCASE("(2,2,2)") {
    const auto bf = brute_force_components(DimensionVector{2, 2, 2});
    CHECK(bf.C == 3);
    REQUIRE(bf.minimizers.size() == 1);
    CHECK(bf.minimizers[0] == KostantPartition(2, {{{0, 0}, 1}, {{0, 1}, 1}, {{1, 2}, 1}, {{2, 2}, 1}}));
    CHECK(bf.spectrum.at(4) >= 2);
    CHECK(bf.enumerated == 10);
    std::uint64_t in_sigma = 0;
    for (auto [c, count] : bf.spectrum) in_sigma += count;
    CHECK(in_sigma == oracle::count_partitions({2, 2, 2}, true));
  }
  SUBCASE("(1,1)") {
    const auto bf = brute_force_components(DimensionVector{1, 1});
    CHECK(bf.C == 1);
    CHECK(bf.minimizers == std::vector<KostantPartition>{KostantPartition(1, {{{0, 0}, 1}, {{1, 1}, 1}})});
  }
  SUBCASE("(5,5,6,6,6,6)") {
    const auto bf = brute_force_components(DimensionVector{5, 5, 6, 6, 6, 6});
    CHECK(bf.C == 19);
    CHECK(bf.minimizers.size() == 5);
    CHECK(bf.enumerated == 382704);
    const KostantPartition known(5, {{{0, 0}, 1}, {{0, 1}, 1}, {{0, 2}, 1}, {{0, 3}, 1}, {{0, 4}, 1},
                                       {{1, 5}, 1}, {{2, 5}, 2}, {{3, 5}, 1}, {{4, 5}, 1}, {{5, 5}, 1}});
    CHECK(std::find(bf.minimizers.begin(), bf.minimizers.end(), known) != bf.minimizers.end());
  }
  SUBCASE("cap") {
    CHECK_THROWS_AS(brute_force_components(DimensionVector{2, 3, 2, 3}, 45), SearchSpaceTooLarge);
    CHECK_NOTHROW(brute_force_components(DimensionVector{2, 3, 2, 3}, 46));
  }
}

TEST_CASE("reduced_equations") {
  // The first component of (2,3,2,3).
  const KostantPartition m(3, {{{0, 1}, 1}, {{0, 2}, 1}, {{1, 3}, 1}, {{3, 3}, 2}});
  CHECK(reduced_equations(rank_pattern(m)) == std::vector<RankCondition>{{0, 2, 1}, {2, 3, 1}});
  // The open orbit imposes nothing.
  CHECK(reduced_equations(rank_pattern(KostantPartition(3, {{{0, 3}, 2}}))).empty());
  // A = 0 on (2,2).
  CHECK(reduced_equations(rank_pattern(KostantPartition(1, {{{0, 0}, 2}, {{1, 1}, 2}}))).empty());
  CHECK(reduced_equations(rank_pattern(KostantPartition(2, {{{0, 0}, 2}, {{1, 2}, 2}}))) ==
        std::vector<RankCondition>{{0, 1, 0}});
}

TEST_CASE("components") {
  SUBCASE("(2,3,2,3)") {
    const DimensionVector d{2, 3, 2, 3};
    const auto report = components(d);
    CHECK(report.C == 4);
    CHECK(report.theta == 3);
    REQUIRE(report.components.size() == 3);
    const std::vector<RankCondition> two_bounds{{0, 2, 1}, {2, 3, 1}};
    CHECK(std::any_of(report.components.begin(), report.components.end(),
                      [&](const ComponentRecord& r) { return r.equations == two_bounds; }));
    const auto bf = brute_force_components(d);
    CHECK(partitions_of(report) == std::set<KostantPartition>(bf.minimizers.begin(), bf.minimizers.end()));
  }
  SUBCASE("(8,7,5,9,5,8)") {
    const DimensionVector d{8, 7, 5, 9, 5, 8};
    const auto report = components(d);
    CHECK(report.k == 2);
    CHECK(report.C == 23);
    REQUIRE(report.components.size() == 4);
    std::set<std::string> vectors;
    for (const auto& rec : report.components) vectors.insert(rec.rising_vector.to_string());
    CHECK(vectors == std::set<std::string>{"(0,1,*,0,4,0)", "(0,2,*,0,3,0)", "(0,1,*,0,3,1)", "(1,1,*,0,3,0)"});
    const KostantPartition expected(5, {{{0, 0}, 1}, {{0, 1}, 3}, {{0, 3}, 4}, {{2, 5}, 1}, {{3, 5}, 4}, {{5, 5}, 3}});
    CHECK(partitions_of(report).count(expected) == 1);
  }
  SUBCASE("(1,1,1)") {
    const auto report = components(DimensionVector{1, 1, 1});
    CHECK(report.C == 1);
    CHECK(partitions_of(report) == std::set<KostantPartition>{KostantPartition(2, {{{0, 0}, 1}, {{1, 2}, 1}}),
                                                              KostantPartition(2, {{{0, 1}, 1}, {{2, 2}, 1}})});
    for (const auto& rec : report.components) {
      const bool a1_zero = rec.representative.map(1).isZero();
      const bool a2_zero = rec.representative.map(2).isZero();
      CHECK(a1_zero != a2_zero);
    }
  }
  CHECK_THROWS_AS(components(DimensionVector{3, 2, 4}, 0), NotAMinimumPosition);
}

TEST_CASE("component records are internally consistent and independent of k") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 80; ++trial) {
    const auto d = oracle::random_dims(rng, 4, 4);
    const auto report = components(d);
    CHECK(report.components.size() == static_cast<std::size_t>(report.theta));
    for (const auto& rec : report.components) {
      CHECK(rec.kostant_partition(0, d.order()) == 0);
      CHECK(orbit_codimension(rec.kostant_partition) == report.C);
      CHECK(partition_from_rank(rec.rank_pattern) == rec.kostant_partition);
      for (const auto& eq : rec.equations) {
        CHECK(eq.k < eq.l);
        CHECK(eq.bound == rec.rank_pattern(eq.k, eq.l));
      }
    }
    CHECK((report.C == 0) == (d.min() == 0));
    for (int k = 0; k <= d.order(); ++k)
      if (d[static_cast<std::size_t>(k)] == d.min()) CHECK(partitions_of(components(d, k)) == partitions_of(report));
  }
}

TEST_CASE("cross_check") {
  SUBCASE("(2,3,2,3)") {
    const auto report = cross_check(DimensionVector{2, 3, 2, 3}, kAll);
    CHECK(report.agree);
    CHECK(report.partitions_match == true);
    REQUIRE(report.results.size() == 4);
    for (const auto& r : report.results) {
      CHECK(r.error.empty());
      CHECK(r.C == Wide{4});
      CHECK(r.theta == Wide{3});
    }
  }
  SUBCASE("(1,1)") {
    const auto report = cross_check(DimensionVector{1, 1}, kAll);
    CHECK(report.agree);
    for (const auto& r : report.results) CHECK((r.C == Wide{1} && r.theta == Wide{1}));
  }
  SUBCASE("a short q-series window is reported, not thrown") {
    CrossCheckOptions opts;
    opts.truncation = 3;
    const auto report = cross_check(DimensionVector{2, 3, 2, 3}, {Method::Qip, Method::QSeries}, opts);
    CHECK_FALSE(report.agree);
    CHECK_FALSE(report.partitions_match.has_value());
    CHECK_FALSE(report.results[1].error.empty());
  }
  SUBCASE("a cap hit is reported, not thrown") {
    CrossCheckOptions opts;
    opts.cap = 5;
    const auto report = cross_check(DimensionVector{2, 3, 2, 3}, {Method::ClosedForm, Method::BruteForce}, opts);
    CHECK_FALSE(report.agree);
    CHECK(report.results[1].error.find("cap") != std::string::npos);
  }
  CHECK_THROWS_AS(cross_check(DimensionVector{1, 1}, {Method::Qip}), InvalidArgument);
  CHECK(parse_method("qseries") == Method::QSeries);
  CHECK_THROWS_AS(parse_method("sat"), InvalidArgument);
}

TEST_CASE("cross_check agrees on random small d") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 60; ++trial) {
    const auto d = oracle::random_dims(rng, 3, 4);
    const auto report = cross_check(d, kAll);
    CHECK_MESSAGE(report.agree, "d = ", d);
    CHECK(report.partitions_match == true);
  }
}
