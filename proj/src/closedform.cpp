#include "quiver/closedform.hpp"

#include <sstream>

namespace quiver {

namespace {

Wide gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational::Rational(Wide num, Wide den) : num_(num), den_(den) {
  if (den_ == 0) throw InvalidArgument("zero denominator");
  if (den_ < 0) {
    num_ = checked::sub(0, num_, "rational");
    den_ = checked::sub(0, den_, "rational");
  }
  const Wide g = gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Wide Rational::floor() const {
  if (num_ < 0) throw InvalidArgument("floor is only defined for non-negative rationals here");
  return num_ / den_;
}

Rational Rational::fractional_part() const { return Rational(num_ - floor() * den_, den_); }

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(checked::add(checked::mul(a.num_, b.den_), checked::mul(b.num_, a.den_)),
                  checked::mul(a.den_, b.den_));
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(checked::sub(checked::mul(a.num_, b.den_), checked::mul(b.num_, a.den_)),
                  checked::mul(a.den_, b.den_));
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(checked::mul(a.num_, b.num_), checked::mul(a.den_, b.den_));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw InvalidArgument("division by zero");
  return Rational(checked::mul(a.num_, b.den_), checked::mul(a.den_, b.num_));
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return checked::mul(a.num_, b.den_) <=> checked::mul(b.num_, a.den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
  os << to_string(q.num());
  if (q.den() != 1) os << '/' << to_string(q.den());
  return os;
}

int n_tilde(const DimensionVector& d_sorted) {
  if (!d_sorted.is_weakly_increasing()) throw InvalidArgument("n_tilde needs a sorted dimension vector");
  int best = 1;
  Wide prefix = d_sorted[0];
  for (int l = 1; l <= d_sorted.order(); ++l) {
    prefix = checked::add(prefix, d_sorted[static_cast<std::size_t>(l)]);
    if (prefix >= checked::mul(l, d_sorted[static_cast<std::size_t>(l)])) best = l;
  }
  return best;
}

ClosedFormResult closed_form(const DimensionVector& d) {
  const DimensionVector ds = d.sorted();
  ClosedFormResult out;
  out.n_tilde = n_tilde(ds);
  const int nt = out.n_tilde;

  Wide pairs = 0;  // Σ_{0<=i<j<=ñ} d'_i d'_j
  for (int i = 0; i <= nt; ++i) {
    out.S = checked::add(out.S, ds[static_cast<std::size_t>(i)]);
    for (int j = i + 1; j <= nt; ++j)
      pairs = checked::add(pairs, checked::mul(ds[static_cast<std::size_t>(i)], ds[static_cast<std::size_t>(j)]));
  }

  const Rational mean(out.S, nt);
  const Rational frac = mean.fractional_part();
  const Rational C = Rational(nt, 2) * frac * (Rational(1) - frac) -
                     Rational(checked::mul(nt, nt - 1), 2) * mean * mean + Rational(pairs);
  if (!C.is_integer()) {
    std::ostringstream msg;
    msg << "closed-form codimension evaluated to non-integer " << C << " for d = " << d;
    throw IntegralityViolation(msg.str());
  }
  out.C = C.num();
  out.theta = binomial(nt, out.S % nt);
  return out;
}

Wide nearest_integer_theta_index(Wide S, int n_tilde) {
  const Rational shifted = Rational(S, n_tilde) + Rational(1, 2);
  return S - checked::mul(n_tilde, shifted.floor());
}

}  // namespace quiver
