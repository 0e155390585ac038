#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "quiver/kostant.hpp"

namespace quiver {

/// Power series c_0 + c_1 q + ... + c_N q^N modulo q^{N+1}, exact integer
/// coefficients. Binary operations require equal truncation orders.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int truncation_order);
  TruncatedSeries(int truncation_order, std::vector<Wide> coefficients);

  static TruncatedSeries one(int truncation_order);
  /// The monomial q^a (zero if a > N).
  static TruncatedSeries monomial(int a, int truncation_order, Wide coefficient = 1);

  int truncation_order() const { return static_cast<int>(c_.size()) - 1; }
  Wide operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  Wide& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  const std::vector<Wide>& coefficients() const { return c_; }
  bool is_zero() const;

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(Wide scalar);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) { return a *= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, Wide s) { return a *= s; }
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  void require_same_order(const TruncatedSeries& other) const;
  std::vector<Wide> c_;
};

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& f);

/// 1 / (1 - q^k).
TruncatedSeries geometric_inverse(int k, int truncation_order);

/// P_s = 1 / ((1 - q)(1 - q^2) ... (1 - q^s)); P_0 = 1.
TruncatedSeries inverse_pochhammer(std::int64_t s, int truncation_order);

/// Σ_{s=0}^{min d} (-1)^s q^{s(s-1)/2} P_s Π_i P_{d_i - s}.
TruncatedSeries lr1_series(const DimensionVector& d, int truncation_order);

struct LeadingTerm {
  int degree = 0;  // C
  Wide coefficient = 0;  // θ

  friend bool operator==(const LeadingTerm&, const LeadingTerm&) = default;
};

/// Lowest non-zero term; nullopt when every coefficient up to N vanishes
/// (the caller must retry with a larger window).
std::optional<LeadingTerm> leading_term(const TruncatedSeries& f);

}  // namespace quiver
