#include "quiver/kostant.hpp"

#include <algorithm>
#include <sstream>

namespace quiver {

std::string to_string(Wide v) {
  if (v == 0) return "0";
  bool negative = v < 0;
  // Work with the negated magnitude so the minimum value does not overflow.
  Wide x = negative ? v : -v;
  std::string digits;
  while (x != 0) {
    digits.push_back(static_cast<char>('0' - static_cast<int>(x % 10)));
    x /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

DimensionVector::DimensionVector(std::vector<std::int64_t> dims) : dims_(std::move(dims)) {
  if (dims_.size() < 2) throw InvalidArgument("dimension vector needs at least two entries");
  for (auto v : dims_)
    if (v < 0) throw InvalidArgument("dimension vector entries must be non-negative");
}

std::int64_t DimensionVector::min() const { return *std::min_element(dims_.begin(), dims_.end()); }

int DimensionVector::first_min_position() const {
  return static_cast<int>(std::min_element(dims_.begin(), dims_.end()) - dims_.begin());
}

bool DimensionVector::is_weakly_increasing() const {
  return std::is_sorted(dims_.begin(), dims_.end());
}

DimensionVector DimensionVector::sorted() const {
  auto v = dims_;
  std::sort(v.begin(), v.end());
  return DimensionVector(std::move(v));
}

std::ostream& operator<<(std::ostream& os, const DimensionVector& d) {
  os << '(';
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  return os << ')';
}

std::vector<Interval> intervals(int n) {
  std::vector<Interval> out;
  out.reserve(static_cast<std::size_t>((n + 1) * (n + 2) / 2));
  for (int k = 0; k <= n; ++k)
    for (int l = k; l <= n; ++l) out.push_back({k, l});
  return out;
}

KostantPartition::KostantPartition(int n,
                                   std::initializer_list<std::pair<Interval, std::int64_t>> entries)
    : m_(n) {
  for (const auto& [iv, value] : entries) add(iv, value);
}

void KostantPartition::set(Interval iv, std::int64_t value) {
  if (value < 0) throw InvalidArgument("multiplicities must be non-negative");
  m_[iv] = value;
}

std::vector<std::int64_t> KostantPartition::column_sums() const {
  const int n = order();
  std::vector<std::int64_t> sums(static_cast<std::size_t>(n + 1), 0);
  for (auto iv : intervals(n))
    for (int i = iv.k; i <= iv.l; ++i) sums[static_cast<std::size_t>(i)] += m_[iv];
  return sums;
}

std::int64_t KostantPartition::summands() const {
  std::int64_t total = 0;
  for (auto iv : intervals(order())) total += m_[iv];
  return total;
}

std::vector<std::pair<Interval, std::int64_t>> KostantPartition::support() const {
  std::vector<std::pair<Interval, std::int64_t>> out;
  for (auto iv : intervals(order()))
    if (m_[iv] != 0) out.emplace_back(iv, m_[iv]);
  return out;
}

KostantPartition KostantPartition::scaled(std::int64_t c) const {
  KostantPartition out(order());
  for (auto [iv, v] : support()) out.set(iv, checked::narrow(checked::mul(v, c, "scale")));
  return out;
}

std::ostream& operator<<(std::ostream& os, const KostantPartition& m) {
  os << '{';
  bool first = true;
  for (auto [iv, v] : m.support()) {
    os << (first ? "" : ", ") << 'm' << iv.k << iv.l << '=' << v;
    first = false;
  }
  return os << '}';
}

bool is_partition_of(const KostantPartition& m, const DimensionVector& d) {
  if (m.order() != d.order()) return false;
  auto sums = m.column_sums();
  return std::equal(sums.begin(), sums.end(), d.begin());
}

void validate(const KostantPartition& m, const DimensionVector& d) {
  if (m.order() != d.order()) {
    throw InvalidPartition("partition of order " + std::to_string(m.order()) +
                           " checked against dimension vector of order " +
                           std::to_string(d.order()));
  }
  auto sums = m.column_sums();
  for (std::size_t i = 0; i < sums.size(); ++i) {
    if (sums[i] != d[i]) {
      std::ostringstream msg;
      msg << "column " << i << " sums to " << sums[i] << ", expected " << d[i];
      throw InvalidPartition(msg.str());
    }
  }
}

bool RankPattern::is_monotone() const {
  const int n = order();
  for (int i = 0; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      if ((*this)(i, j) < 0) return false;
      if (i > 0 && (*this)(i - 1, j) > (*this)(i, j)) return false;
      if (j < n && (*this)(i, j + 1) > (*this)(i, j)) return false;
    }
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const RankPattern& r) {
  for (int i = 0; i <= r.order(); ++i) {
    for (int j = 0; j <= r.order(); ++j) {
      if (j) os << ' ';
      if (j < i)
        os << '.';
      else
        os << r(i, j);
    }
    os << '\n';
  }
  return os;
}

RankPattern rank_pattern(const KostantPartition& m) {
  const int n = m.order();
  RankPattern r(n);
  for (auto [iv, v] : m.support())
    for (int i = iv.k; i <= iv.l; ++i)
      for (int j = i; j <= iv.l; ++j) r(i, j) += v;
  return r;
}

KostantPartition partition_from_rank(const RankPattern& r) {
  const int n = r.order();
  KostantPartition m(n);
  for (auto iv : intervals(n)) {
    const auto [k, l] = iv;
    const std::int64_t v = r(k, l) - r.at_or_zero(k - 1, l) - r.at_or_zero(k, l + 1) +
                           r.at_or_zero(k - 1, l + 1);
    if (v < 0) {
      throw NotAPattern("rank pattern yields negative multiplicity at [" + std::to_string(k) +
                        "," + std::to_string(l) + "]");
    }
    m.set(iv, v);
  }
  return m;
}

int ext_dim_indecomposable(Interval a, Interval b) {
  return (a.k + 1 <= b.k && b.k <= a.l + 1 && a.l + 1 <= b.l) ? 1 : 0;
}

Wide ext_dim(const KostantPartition& a, const KostantPartition& b) {
  Wide total = 0;
  const auto sa = a.support();
  const auto sb = b.support();
  for (auto [ia, ma] : sa)
    for (auto [ib, mb] : sb)
      if (ext_dim_indecomposable(ia, ib))
        total = checked::add(total, checked::mul(ma, mb, "ext_dim"), "ext_dim");
  return total;
}

Wide orbit_codimension(const KostantPartition& m) { return ext_dim(m, m); }

bool lies_in_sigma(const KostantPartition& m) { return m(0, m.order()) == 0; }

namespace {

// Backtracking over intervals sorted by (k, l). `budget[i]` is what column i
// still needs. All intervals starting at column k come before those starting
// at k+1, so the last one, [k, n], must exhaust column k exactly.
class PartitionSearch {
 public:
  PartitionSearch(const DimensionVector& d, const std::function<bool(const KostantPartition&)>& visit)
      : n_(d.order()), order_(intervals(n_)), budget_(d.begin(), d.end()), current_(n_), visit_(visit) {}

  std::uint64_t run() {
    descend(0);
    return visited_;
  }

 private:
  // Returns false once the visitor asked to stop.
  bool descend(std::size_t t) {
    if (t == order_.size()) {
      ++visited_;
      return visit_(current_);
    }
    const Interval iv = order_[t];
    std::int64_t cap = budget_[static_cast<std::size_t>(iv.k)];
    for (int i = iv.k + 1; i <= iv.l; ++i) cap = std::min(cap, budget_[static_cast<std::size_t>(i)]);

    std::int64_t lo = 0;
    if (iv.l == n_) {
      // Last interval opening at column k.
      lo = budget_[static_cast<std::size_t>(iv.k)];
      if (lo > cap) return true;
    }
    for (std::int64_t v = lo; v <= cap; ++v) {
      take(iv, v);
      const bool keep_going = descend(t + 1);
      take(iv, -v);
      if (!keep_going) return false;
    }
    return true;
  }

  void take(Interval iv, std::int64_t v) {
    for (int i = iv.k; i <= iv.l; ++i) budget_[static_cast<std::size_t>(i)] -= v;
    current_.add(iv, v);
  }

  int n_;
  std::vector<Interval> order_;
  std::vector<std::int64_t> budget_;
  KostantPartition current_;
  const std::function<bool(const KostantPartition&)>& visit_;
  std::uint64_t visited_ = 0;
};

}  // namespace

std::uint64_t enumerate_partitions(const DimensionVector& d,
                                   const std::function<bool(const KostantPartition&)>& visit) {
  return PartitionSearch(d, visit).run();
}

std::uint64_t count_partitions(const DimensionVector& d) {
  return enumerate_partitions(d, [](const KostantPartition&) { return true; });
}

}  // namespace quiver
