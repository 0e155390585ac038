#include "quiver/qseries.hpp"

#include <algorithm>

namespace quiver {

TruncatedSeries::TruncatedSeries(int truncation_order) {
  if (truncation_order < 0) throw InvalidArgument("truncation order must be non-negative");
  c_.assign(static_cast<std::size_t>(truncation_order) + 1, 0);
}

TruncatedSeries::TruncatedSeries(int truncation_order, std::vector<Wide> coefficients)
    : TruncatedSeries(truncation_order) {
  if (coefficients.size() > c_.size()) coefficients.resize(c_.size());
  std::copy(coefficients.begin(), coefficients.end(), c_.begin());
}

TruncatedSeries TruncatedSeries::one(int truncation_order) { return monomial(0, truncation_order); }

TruncatedSeries TruncatedSeries::monomial(int a, int truncation_order, Wide coefficient) {
  TruncatedSeries f(truncation_order);
  if (a >= 0 && a <= truncation_order) f[a] = coefficient;
  return f;
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](Wide v) { return v == 0; });
}

void TruncatedSeries::require_same_order(const TruncatedSeries& other) const {
  if (other.c_.size() != c_.size()) throw InvalidArgument("series truncation orders differ");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  require_same_order(other);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked::add(c_[i], other.c_[i], "series add");
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  require_same_order(other);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked::sub(c_[i], other.c_[i], "series sub");
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& other) {
  require_same_order(other);
  std::vector<Wide> out(c_.size(), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; i + j < c_.size(); ++j) {
      if (other.c_[j] == 0) continue;
      out[i + j] = checked::add(out[i + j], checked::mul(c_[i], other.c_[j], "series mul"), "series mul");
    }
  }
  c_ = std::move(out);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(Wide scalar) {
  for (auto& v : c_) v = checked::mul(v, scalar, "series scale");
  return *this;
}

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& f) {
  bool any = false;
  for (int i = 0; i <= f.truncation_order(); ++i) {
    if (f[i] == 0) continue;
    Wide c = f[i];
    if (any) {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    } else if (c < 0) {
      os << '-';
      c = -c;
    }
    if (c != 1 || i == 0) os << to_string(c);
    if (i > 0) os << (c != 1 ? "*" : "") << "q" << (i > 1 ? "^" + std::to_string(i) : "");
    any = true;
  }
  if (!any) os << '0';
  return os << " + O(q^" << f.truncation_order() + 1 << ")";
}

TruncatedSeries geometric_inverse(int k, int truncation_order) {
  if (k < 1) throw InvalidArgument("geometric_inverse needs k >= 1");
  TruncatedSeries f(truncation_order);
  for (int e = 0; e <= truncation_order; e += k) f[e] = 1;
  return f;
}

TruncatedSeries inverse_pochhammer(std::int64_t s, int truncation_order) {
  if (s < 0) throw InvalidArgument("inverse_pochhammer needs s >= 0");
  TruncatedSeries f = TruncatedSeries::one(truncation_order);
  // Factors with k > N are 1 modulo q^{N+1}.
  const std::int64_t last = std::min<std::int64_t>(s, truncation_order);
  for (std::int64_t k = 1; k <= last; ++k) {
    // Multiplying by 1/(1 - q^k) is the running sum c_i += c_{i-k}.
    for (int i = static_cast<int>(k); i <= truncation_order; ++i)
      f[i] = checked::add(f[i], f[i - static_cast<int>(k)], "inverse_pochhammer");
  }
  return f;
}

TruncatedSeries lr1_series(const DimensionVector& d, int truncation_order) {
  TruncatedSeries total(truncation_order);
  const std::int64_t smax = d.min();
  for (std::int64_t s = 0; s <= smax; ++s) {
    const Wide shift = checked::mul(s, s - 1) / 2;
    if (shift > truncation_order) break;  // this and every later summand is O(q^{N+1})
    TruncatedSeries term = TruncatedSeries::monomial(static_cast<int>(shift), truncation_order, s % 2 ? -1 : 1);
    term *= inverse_pochhammer(s, truncation_order);
    for (auto di : d) term *= inverse_pochhammer(di - s, truncation_order);
    total += term;
  }
  return total;
}

std::optional<LeadingTerm> leading_term(const TruncatedSeries& f) {
  for (int i = 0; i <= f.truncation_order(); ++i)
    if (f[i] != 0) return LeadingTerm{i, f[i]};
  return std::nullopt;
}

}  // namespace quiver
