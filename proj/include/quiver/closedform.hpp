#pragma once

#include <compare>
#include <ostream>

#include "quiver/kostant.hpp"

namespace quiver {

class IntegralityViolation : public Error {
 public:
  using Error::Error;
};

/// Exact fraction num/den with den > 0, always reduced.
class Rational {
 public:
  Rational(Wide num = 0, Wide den = 1);

  Wide num() const { return num_; }
  Wide den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  /// Floor and fractional part; defined here for non-negative values only.
  Wide floor() const;
  Rational fractional_part() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  Wide num_;
  Wide den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// max l in {1..n} with Σ_{i<=l} d'_i >= l d'_l, for sorted d'.
int n_tilde(const DimensionVector& d_sorted);

struct ClosedFormResult {
  int n_tilde = 1;
  Wide S = 0;
  Wide C = 0;
  Wide theta = 1;
};

/// C and θ of Σ_d in closed form. θ uses the binomial index S mod ñ, which
/// matches the nearest-integer index whenever the latter is non-negative.
ClosedFormResult closed_form(const DimensionVector& d);

/// S - ñ floor(S/ñ + 1/2): the nearest-integer form of the θ index. It is
/// negative whenever {S/ñ} > 1/2 and then differs from S mod ñ by ñ.
Wide nearest_integer_theta_index(Wide S, int n_tilde);

}  // namespace quiver
