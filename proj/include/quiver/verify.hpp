#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "quiver/closedform.hpp"
#include "quiver/kostant.hpp"
#include "quiver/lace.hpp"
#include "quiver/qip.hpp"
#include "quiver/qseries.hpp"
#include "quiver/represent.hpp"

namespace quiver {

class SearchSpaceTooLarge : public Error {
 public:
  using Error::Error;
};

/// Raised by components() when the constructed data contradict each other.
class ConsistencyFailure : public Error {
 public:
  using Error::Error;
};

inline constexpr std::uint64_t kDefaultBruteForceCap = 10'000'000;

struct BruteForceResult {
  Wide C = 0;
  /// Minimal-codimension orbits in Σ_d, in enumeration order.
  std::vector<KostantPartition> minimizers;
  /// codimension -> number of orbits in Σ_d with that codimension.
  std::map<Wide, std::uint64_t> spectrum;
  /// Partitions of d enumerated (before the m_0n = 0 filter).
  std::uint64_t enumerated = 0;
};

/// Enumerates every Kostant partition of d, keeps those with m_0n = 0 and
/// returns the minimal codimension with all minimizers. Throws
/// SearchSpaceTooLarge once more than `cap` partitions have been enumerated.
BruteForceResult brute_force_components(const DimensionVector& d, std::uint64_t cap = kDefaultBruteForceCap);

/// rk(A_l ... A_{k+1}) <= bound
struct RankCondition {
  int k = 0;
  int l = 0;
  std::int64_t bound = 0;
  friend auto operator<=>(const RankCondition&, const RankCondition&) = default;
};

/// Rank conditions that cut the orbit closure out of Σ_d: entries of r not
/// implied by a bound on a strictly smaller interval (r_ii = d_i included),
/// excluding (0, n), which holds on all of Σ_d.
std::vector<RankCondition> reduced_equations(const RankPattern& r);

struct ComponentRecord {
  RisingVector rising_vector;
  KostantPartition kostant_partition;
  RankPattern rank_pattern;
  std::vector<RankCondition> equations;
  RepresentativeTuple representative;
  LaceDiagram diagram;
};

struct ComponentReport {
  DimensionVector d;
  int k = 0;
  Wide C = 0;
  Wide theta = 0;
  std::vector<ComponentRecord> components;
};

/// Maximal-dimensional components of Σ_d via rising vectors with the
/// placeholder at k (default: first position of min(d)).
ComponentReport components(const DimensionVector& d, std::optional<int> k = std::nullopt);

enum class Method { Qip, QSeries, ClosedForm, BruteForce };

std::string method_name(Method m);
Method parse_method(const std::string& name);

struct MethodResult {
  Method method;
  std::optional<Wide> C;
  std::optional<Wide> theta;
  /// Set when the method failed to produce a value (overflow, cap, ...).
  std::string error;
  double seconds = 0.0;
};

struct CrossCheckReport {
  DimensionVector d;
  std::vector<MethodResult> results;
  /// True iff every method produced a value and all values coincide.
  bool agree = false;
  /// Pipeline partitions equal brute-force minimizers; only set with brute force.
  std::optional<bool> partitions_match;
};

struct CrossCheckOptions {
  std::uint64_t cap = kDefaultBruteForceCap;
  /// Fixed q-series window; default is closed-form C + 2.
  std::optional<int> truncation;
};

/// Computes (C, θ) with each method and compares. Disagreement is reported
/// in the result, never thrown.
CrossCheckReport cross_check(const DimensionVector& d, const std::set<Method>& methods,
                             const CrossCheckOptions& options = {});

}  // namespace quiver
