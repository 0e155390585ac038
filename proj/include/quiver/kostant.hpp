#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include "quiver/checked.hpp"

namespace quiver {

/// Sizes (d_0, ..., d_n) of the vector spaces in a chain of n linear maps.
class DimensionVector {
 public:
  DimensionVector() = default;
  explicit DimensionVector(std::vector<std::int64_t> dims);
  DimensionVector(std::initializer_list<std::int64_t> dims)
      : DimensionVector(std::vector<std::int64_t>(dims)) {}

  /// n, the number of maps.
  int order() const { return static_cast<int>(dims_.size()) - 1; }
  std::size_t size() const { return dims_.size(); }
  std::int64_t operator[](std::size_t i) const { return dims_[i]; }
  std::int64_t min() const;
  /// Smallest index attaining min().
  int first_min_position() const;
  bool is_weakly_increasing() const;
  DimensionVector sorted() const;

  std::span<const std::int64_t> values() const { return dims_; }
  auto begin() const { return dims_.begin(); }
  auto end() const { return dims_.end(); }

  friend bool operator==(const DimensionVector&, const DimensionVector&) = default;

 private:
  std::vector<std::int64_t> dims_;
};

std::ostream& operator<<(std::ostream& os, const DimensionVector& d);

/// Closed interval [k, l] of column indices; indexes the indecomposable M_kl.
struct Interval {
  int k = 0;
  int l = 0;

  bool contains(const Interval& other) const { return k <= other.k && other.l <= l; }
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// Dense upper-triangular array indexed (k, l) with 0 <= k <= l <= n.
template <typename T>
class TriangularArray {
 public:
  TriangularArray() = default;
  explicit TriangularArray(int n) : n_(n), data_(static_cast<std::size_t>((n + 1) * (n + 2) / 2), T{}) {
    if (n < 0) throw InvalidArgument("triangular array order must be non-negative");
  }

  int order() const { return n_; }

  T& operator()(int k, int l) { return data_[index(k, l)]; }
  const T& operator()(int k, int l) const { return data_[index(k, l)]; }
  T& operator[](Interval iv) { return (*this)(iv.k, iv.l); }
  const T& operator[](Interval iv) const { return (*this)(iv.k, iv.l); }

  /// Entry with out-of-range indices (k < 0 or l > n) read as zero.
  T at_or_zero(int k, int l) const {
    if (k < 0 || l > n_ || k > l) return T{};
    return (*this)(k, l);
  }

  friend bool operator==(const TriangularArray&, const TriangularArray&) = default;
  friend auto operator<=>(const TriangularArray&, const TriangularArray&) = default;

 private:
  std::size_t index(int k, int l) const {
    if (k < 0 || k > l || l > n_) throw InvalidArgument("triangular index out of range");
    // Row k starts after rows 0..k-1, which hold (n+1) + n + ... + (n-k+2) entries.
    return static_cast<std::size_t>(k * (2 * n_ + 3 - k) / 2 + (l - k));
  }

  int n_ = 0;
  std::vector<T> data_;
};

/// Every interval [k, l] for order n, sorted by (k, l).
std::vector<Interval> intervals(int n);

/// Multiplicities m_kl of the indecomposables M_kl; codes one orbit.
class KostantPartition {
 public:
  KostantPartition() = default;
  explicit KostantPartition(int n) : m_(n) {}
  KostantPartition(int n, std::initializer_list<std::pair<Interval, std::int64_t>> entries);

  int order() const { return m_.order(); }
  std::int64_t operator()(int k, int l) const { return m_(k, l); }
  std::int64_t operator[](Interval iv) const { return m_[iv]; }
  void set(Interval iv, std::int64_t value);
  void add(Interval iv, std::int64_t value) { set(iv, m_[iv] + value); }

  /// Σ_{k<=i<=l} m_kl for every column i.
  std::vector<std::int64_t> column_sums() const;
  /// Total number of indecomposable summands.
  std::int64_t summands() const;
  /// Intervals with non-zero multiplicity, sorted by (k, l).
  std::vector<std::pair<Interval, std::int64_t>> support() const;
  KostantPartition scaled(std::int64_t c) const;

  friend bool operator==(const KostantPartition&, const KostantPartition&) = default;
  friend auto operator<=>(const KostantPartition&, const KostantPartition&) = default;

 private:
  TriangularArray<std::int64_t> m_;
};

std::ostream& operator<<(std::ostream& os, const KostantPartition& m);

class InvalidPartition : public Error {
 public:
  using Error::Error;
};

class NotAPattern : public Error {
 public:
  using Error::Error;
};

/// Throws InvalidPartition unless the column sums of m equal d.
void validate(const KostantPartition& m, const DimensionVector& d);
bool is_partition_of(const KostantPartition& m, const DimensionVector& d);

/// r_ij: number of summands M_kl with [k, l] ⊇ [i, j].
class RankPattern {
 public:
  RankPattern() = default;
  explicit RankPattern(int n) : r_(n) {}

  int order() const { return r_.order(); }
  std::int64_t operator()(int i, int j) const { return r_(i, j); }
  std::int64_t& operator()(int i, int j) { return r_(i, j); }
  std::int64_t at_or_zero(int i, int j) const { return r_.at_or_zero(i, j); }

  /// Non-negative entries, monotone under interval extension.
  bool is_monotone() const;

  friend bool operator==(const RankPattern&, const RankPattern&) = default;

 private:
  TriangularArray<std::int64_t> r_;
};

std::ostream& operator<<(std::ostream& os, const RankPattern& r);

RankPattern rank_pattern(const KostantPartition& m);

/// Möbius inversion of rank_pattern; throws NotAPattern on a negative multiplicity.
KostantPartition partition_from_rank(const RankPattern& r);

/// dim Ext(M_a, M_b) for a = [i, j], b = [u, v]: 1 iff i+1 <= u <= j+1 <= v.
int ext_dim_indecomposable(Interval a, Interval b);

/// dim Ext(M_a, M_b) summed with multiplicities: Σ a_ij b_uv ext([i,j],[u,v]).
Wide ext_dim(const KostantPartition& a, const KostantPartition& b);

/// Codimension of the orbit O_m in Rep_d, i.e. dim Ext(M_m, M_m).
Wide orbit_codimension(const KostantPartition& m);

/// True iff the orbit lies in Σ_d, i.e. m_0n = 0.
bool lies_in_sigma(const KostantPartition& m);

/// Visits every Kostant partition of d exactly once, in lexicographic order of
/// the multiplicity vector over intervals sorted by (k, l). The visitor
/// returns false to stop; the function returns the number of partitions visited.
std::uint64_t enumerate_partitions(const DimensionVector& d,
                                   const std::function<bool(const KostantPartition&)>& visit);

std::uint64_t count_partitions(const DimensionVector& d);

}  // namespace quiver
