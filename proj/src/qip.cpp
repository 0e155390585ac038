#include "quiver/qip.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace quiver {

RisingVector::RisingVector(int k, std::vector<std::int64_t> entries) : k_(k), e_(std::move(entries)) {
  if (e_.size() < 2) throw InvalidArgument("rising vector needs at least two positions");
  if (k_ < 0 || k_ >= static_cast<int>(e_.size()))
    throw InvalidArgument("placeholder position out of range");
  for (auto v : e_)
    if (v < 0) throw InvalidArgument("rising vector entries must be non-negative");
  e_[static_cast<std::size_t>(k_)] = 0;
}

std::int64_t RisingVector::total() const { return std::accumulate(e_.begin(), e_.end(), std::int64_t{0}); }

void RisingVector::check_against(const DimensionVector& d) const {
  if (order() != d.order()) throw InfeasibleVector("rising vector and dimension vector differ in length");
  if (d[static_cast<std::size_t>(k_)] != d.min())
    throw NotAMinimumPosition("d_" + std::to_string(k_) + " is not min(d)");
  if (total() != d.min()) {
    throw InfeasibleVector("rising vector " + to_string() + " sums to " + std::to_string(total()) +
                           ", expected " + std::to_string(d.min()));
  }
}

std::string RisingVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i) os << ',';
    if (static_cast<int>(i) == k_)
      os << '*';
    else
      os << e_[i];
  }
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RisingVector& v) { return os << v.to_string(); }

RisingVector parse_rising_vector(const std::string& text) {
  std::vector<std::int64_t> entries;
  std::optional<int> k;
  // Accepts the to_string form "(0,1,*,0,4,0)" as well as the bare list.
  std::string body = text;
  body.erase(std::remove_if(body.begin(), body.end(), ::isspace), body.end());
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item == "*") {
      if (k) throw InvalidArgument("rising vector has more than one '*'");
      k = static_cast<int>(entries.size());
      entries.push_back(0);
      continue;
    }
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw InvalidArgument("bad rising vector entry '" + item + "'");
    }
    if (used != item.size()) throw InvalidArgument("bad rising vector entry '" + item + "'");
    entries.push_back(v);
  }
  if (!k) throw InvalidArgument("rising vector needs a '*' placeholder");
  return RisingVector(*k, std::move(entries));
}

Wide objective_sorted(const DimensionVector& d_sorted, std::span<const std::int64_t> e) {
  if (!d_sorted.is_weakly_increasing()) throw InvalidArgument("objective_sorted needs a sorted dimension vector");
  const int n = d_sorted.order();
  if (static_cast<int>(e.size()) != n) throw InfeasibleVector("expected " + std::to_string(n) + " entries");
  Wide total = 0;
  for (auto v : e) {
    if (v < 0) throw InfeasibleVector("entries must be non-negative");
    total += v;
  }
  if (total != d_sorted[0]) throw InfeasibleVector("entries must sum to min(d)");

  // e is 1-based in the formula: e_i = e[i-1].
  Wide g = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= i; ++j) {
      const Wide step = d_sorted[static_cast<std::size_t>(j)] - d_sorted[static_cast<std::size_t>(j - 1)];
      const Wide term = checked::mul(e[static_cast<std::size_t>(i - 1)],
                                     checked::add(e[static_cast<std::size_t>(j - 1)], step));
      g = checked::add(g, term, "objective_sorted");
    }
  }
  return g;
}

Wide objective_rising(const DimensionVector& d, const RisingVector& v) {
  v.check_against(d);
  const int n = d.order();
  const int k = v.placeholder();
  const Wide dk = d[static_cast<std::size_t>(k)];
  Wide f = 0;
  for (int i = 0; i <= n; ++i) {
    if (i == k) continue;
    const Wide ei = v[static_cast<std::size_t>(i)];
    f = checked::add(f, checked::mul(ei, d[static_cast<std::size_t>(i)] - dk), "objective_rising");
    for (int j = i; j <= n; ++j) {
      if (j == k) continue;
      f = checked::add(f, checked::mul(ei, v[static_cast<std::size_t>(j)]), "objective_rising");
    }
  }
  return f;
}

std::uint64_t for_each_composition(std::int64_t total, int parts,
                                   const std::function<void(std::span<const std::int64_t>)>& visit) {
  if (parts <= 0) return 0;
  std::vector<std::int64_t> e(static_cast<std::size_t>(parts), 0);
  std::uint64_t visited = 0;
  // Ascending lex order: the last part takes whatever remains.
  std::function<void(int, std::int64_t)> rec = [&](int pos, std::int64_t left) {
    if (pos == parts - 1) {
      e[static_cast<std::size_t>(pos)] = left;
      ++visited;
      visit(e);
      return;
    }
    for (std::int64_t v = 0; v <= left; ++v) {
      e[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, total);
  return visited;
}

namespace {

// Shared exhaustive minimizer for the two programs. Both objectives are
// Σ_p e_p (lin_p + Σ_{q <= p} e_q) over the free positions p in a fixed
// order, so a branch's partial value only grows as positions are filled.
template <typename Emit>
void minimize(std::int64_t total, const std::vector<Wide>& linear, SolveOptions options, Wide& best,
              std::uint64_t& candidates, Emit&& emit) {
  const std::size_t parts = linear.size();
  std::vector<std::int64_t> e(parts, 0);
  bool have_best = false;
  std::vector<std::vector<std::int64_t>> winners;

  std::function<void(std::size_t, std::int64_t, Wide, Wide)> rec = [&](std::size_t pos, std::int64_t left,
                                                                        Wide prefix_sum, Wide partial) {
    if (options.prune && have_best && partial > best) {
      ++candidates;
      return;
    }
    auto place = [&](std::int64_t v) {
      e[pos] = v;
      const Wide run = checked::add(prefix_sum, v);
      const Wide term = checked::mul(v, checked::add(linear[pos], run), "qip objective");
      return std::pair{run, checked::add(partial, term, "qip objective")};
    };
    if (pos + 1 == parts) {
      auto [run, value] = place(left);
      (void)run;
      ++candidates;
      if (!have_best || value < best) {
        best = value;
        have_best = true;
        winners.clear();
      }
      if (value == best) winners.push_back(e);
      return;
    }
    for (std::int64_t v = 0; v <= left; ++v) {
      auto [run, value] = place(v);
      rec(pos + 1, left - v, run, value);
    }
  };
  rec(0, total, 0, 0);
  for (auto& w : winners) emit(w);
}

}  // namespace

SortedSolutionSet solve_sorted(const DimensionVector& d, SolveOptions options) {
  const DimensionVector ds = d.sorted();
  const int n = ds.order();
  // Position i (1-based) has linear coefficient Σ_{j<=i} (d'_j - d'_{j-1}) = d'_i - d'_0.
  std::vector<Wide> linear;
  for (int i = 1; i <= n; ++i) linear.push_back(ds[static_cast<std::size_t>(i)] - ds[0]);

  SortedSolutionSet out;
  minimize(ds[0], linear, options, out.minimum, out.candidates,
           [&](const std::vector<std::int64_t>& e) { out.solutions.push_back(e); });
  return out;
}

RisingSolutionSet solve_rising(const DimensionVector& d, int k, SolveOptions options) {
  const int n = d.order();
  if (k < 0 || k > n) throw InvalidArgument("placeholder position out of range");
  if (d[static_cast<std::size_t>(k)] != d.min())
    throw NotAMinimumPosition("d_" + std::to_string(k) + " = " + std::to_string(d[static_cast<std::size_t>(k)]) +
                              " is not min(d) = " + std::to_string(d.min()));
  std::vector<int> free;
  std::vector<Wide> linear;
  for (int i = 0; i <= n; ++i) {
    if (i == k) continue;
    free.push_back(i);
    linear.push_back(d[static_cast<std::size_t>(i)] - d[static_cast<std::size_t>(k)]);
  }

  RisingSolutionSet out;
  minimize(d.min(), linear, options, out.minimum, out.candidates, [&](const std::vector<std::int64_t>& e) {
    std::vector<std::int64_t> full(static_cast<std::size_t>(n + 1), 0);
    for (std::size_t p = 0; p < free.size(); ++p) full[static_cast<std::size_t>(free[p])] = e[p];
    out.solutions.emplace_back(k, std::move(full));
  });
  std::sort(out.solutions.begin(), out.solutions.end());
  return out;
}

std::vector<int> sorting_permutation(const DimensionVector& d, int k) {
  const int n = d.order();
  if (k < 0 || k > n) throw InvalidArgument("placeholder position out of range");
  if (d[static_cast<std::size_t>(k)] != d.min()) throw NotAMinimumPosition("d_k is not min(d)");
  std::vector<int> by_rank(static_cast<std::size_t>(n + 1));
  std::iota(by_rank.begin(), by_rank.end(), 0);
  std::stable_sort(by_rank.begin(), by_rank.end(),
                   [&](int a, int b) { return d[static_cast<std::size_t>(a)] < d[static_cast<std::size_t>(b)]; });
  std::vector<int> sigma(static_cast<std::size_t>(n + 1));
  for (int r = 0; r <= n; ++r) sigma[static_cast<std::size_t>(by_rank[static_cast<std::size_t>(r)])] = r;
  // k and by_rank[0] share the minimal value, so swapping keeps d_i = d'_σ(i).
  const int first = by_rank[0];
  std::swap(sigma[static_cast<std::size_t>(k)], sigma[static_cast<std::size_t>(first)]);
  return sigma;
}

std::vector<RisingVector> transport_solutions(const DimensionVector& d, int k, const SortedSolutionSet& s) {
  const auto sigma = sorting_permutation(d, k);
  const int n = d.order();
  std::vector<RisingVector> out;
  out.reserve(s.solutions.size());
  for (const auto& e : s.solutions) {
    if (static_cast<int>(e.size()) != n) throw InfeasibleVector("sorted solution has wrong length");
    std::vector<std::int64_t> full(static_cast<std::size_t>(n + 1), 0);
    for (int i = 0; i <= n; ++i) {
      if (i == k) continue;
      // e is indexed e_1..e_n.
      full[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)] - 1)];
    }
    out.emplace_back(k, std::move(full));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace quiver
