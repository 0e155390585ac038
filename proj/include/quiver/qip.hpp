#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "quiver/kostant.hpp"

namespace quiver {

class InfeasibleVector : public Error {
 public:
  using Error::Error;
};

class NotAMinimumPosition : public Error {
 public:
  using Error::Error;
};

/// (e_0, ..., e_{k-1}, *, e_{k+1}, ..., e_n) with Σ_{i != k} e_i = d_k and
/// d_k = min(d). The entry stored at position k is always 0.
class RisingVector {
 public:
  RisingVector() = default;
  RisingVector(int k, std::vector<std::int64_t> entries);

  int order() const { return static_cast<int>(e_.size()) - 1; }
  int placeholder() const { return k_; }
  std::int64_t operator[](std::size_t i) const { return e_[i]; }
  std::span<const std::int64_t> entries() const { return e_; }
  std::int64_t total() const;

  /// Throws InfeasibleVector / NotAMinimumPosition if this does not fit d.
  void check_against(const DimensionVector& d) const;

  /// "(0,1,*,0,4,0)"
  std::string to_string() const;

  friend bool operator==(const RisingVector&, const RisingVector&) = default;
  friend auto operator<=>(const RisingVector&, const RisingVector&) = default;

 private:
  int k_ = 0;
  std::vector<std::int64_t> e_;
};

std::ostream& operator<<(std::ostream& os, const RisingVector& v);

/// Parses "0,1,*,0,4,0"; the '*' marks the placeholder.
RisingVector parse_rising_vector(const std::string& text);

/// Minimum of a quadratic program together with every minimizer, in
/// ascending lexicographic order.
template <typename Candidate>
struct SolutionSet {
  Wide minimum = 0;
  std::vector<Candidate> solutions;
  /// Number of feasible vectors evaluated (or bounded away when pruning).
  std::uint64_t candidates = 0;

  std::size_t count() const { return solutions.size(); }
};

using Composition = std::vector<std::int64_t>;
using SortedSolutionSet = SolutionSet<Composition>;
using RisingSolutionSet = SolutionSet<RisingVector>;

struct SolveOptions {
  /// Cut a branch once its partial objective exceeds the best value found.
  /// Every term of both objectives is non-negative, so this keeps all ties.
  bool prune = false;
};

/// G(e) = Σ_{1<=j<=i<=n} e_i (e_j + d'_j - d'_{j-1}) for e = (e_1, ..., e_n).
Wide objective_sorted(const DimensionVector& d_sorted, std::span<const std::int64_t> e);

/// F(e) = Σ_{i != k} e_i (d_i - d_k) + Σ_{i <= j; i, j != k} e_i e_j.
Wide objective_rising(const DimensionVector& d, const RisingVector& v);

/// Exhaustive (QIP) over compositions of d'_0 into n parts, d' = sorted d.
SortedSolutionSet solve_sorted(const DimensionVector& d, SolveOptions options = {});

/// Exhaustive (QIP') over rising vectors with placeholder at k.
RisingSolutionSet solve_rising(const DimensionVector& d, int k, SolveOptions options = {});

/// Stable sorting permutation σ with σ(k) = 0 and d_i = d'_{σ(i)}.
std::vector<int> sorting_permutation(const DimensionVector& d, int k);

/// Image of (QIP) solutions under σ: position i != k receives e_{σ(i)}.
std::vector<RisingVector> transport_solutions(const DimensionVector& d, int k,
                                              const SortedSolutionSet& s);

/// Visits every composition of `total` into `parts` non-negative parts in
/// ascending lexicographic order; returns the number visited.
std::uint64_t for_each_composition(std::int64_t total, int parts,
                                   const std::function<void(std::span<const std::int64_t>)>& visit);

}  // namespace quiver
