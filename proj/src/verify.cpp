#include "quiver/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace quiver {

BruteForceResult brute_force_components(const DimensionVector& d, std::uint64_t cap) {
  BruteForceResult out;
  bool have_min = false;
  std::uint64_t seen = 0;
  out.enumerated = enumerate_partitions(d, [&](const KostantPartition& m) {
    if (++seen > cap) return false;
    if (!lies_in_sigma(m)) return true;
    const Wide c = orbit_codimension(m);
    ++out.spectrum[c];
    if (!have_min || c < out.C) {
      out.C = c;
      have_min = true;
      out.minimizers.clear();
    }
    if (c == out.C) out.minimizers.push_back(m);
    return true;
  });
  if (out.enumerated > cap) {
    throw SearchSpaceTooLarge("more than " + std::to_string(cap) + " Kostant partitions; raise the cap to continue");
  }
  return out;
}

std::vector<RankCondition> reduced_equations(const RankPattern& r) {
  const int n = r.order();
  std::vector<RankCondition> out;
  for (int k = 0; k <= n; ++k) {
    for (int l = k + 1; l <= n; ++l) {
      if (k == 0 && l == n) continue;
      // r is monotone, so the weakest bounds on strict sub-intervals sit on
      // the two maximal ones.
      if (r(k, l) < std::min(r(k + 1, l), r(k, l - 1))) out.push_back({k, l, r(k, l)});
    }
  }
  return out;
}

ComponentReport components(const DimensionVector& d, std::optional<int> k) {
  ComponentReport report;
  report.d = d;
  report.k = k.value_or(d.first_min_position());
  const auto solved = solve_rising(d, report.k);
  report.C = solved.minimum;
  report.theta = static_cast<Wide>(solved.count());

  auto fail = [&](const RisingVector& v, const std::string& what) {
    std::ostringstream msg;
    msg << "component " << v << " of d = " << d << ": " << what;
    throw ConsistencyFailure(msg.str());
  };

  for (const auto& v : solved.solutions) {
    ComponentRecord rec{v, {}, {}, {}, {}, diagram_from_rising(d, v)};
    rec.kostant_partition = partition_of_diagram(rec.diagram, d);
    rec.rank_pattern = rank_pattern(rec.kostant_partition);
    rec.equations = reduced_equations(rec.rank_pattern);
    rec.representative = representative_tuple(rec.diagram);

    if (!lies_in_sigma(rec.kostant_partition)) fail(v, "orbit is not contained in Sigma_d");
    if (orbit_codimension(rec.kostant_partition) != report.C) fail(v, "orbit codimension differs from C");
    if (!product_is_zero(rec.representative)) fail(v, "representative product is non-zero");
    if (partial_products_ranks(rec.representative) != rec.rank_pattern)
      fail(v, "representative ranks differ from the rank pattern");
    report.components.push_back(std::move(rec));
  }
  return report;
}

std::string method_name(Method m) {
  switch (m) {
    case Method::Qip:
      return "qip";
    case Method::QSeries:
      return "qseries";
    case Method::ClosedForm:
      return "closedform";
    case Method::BruteForce:
      return "bruteforce";
  }
  return "?";
}

Method parse_method(const std::string& name) {
  for (auto m : {Method::Qip, Method::QSeries, Method::ClosedForm, Method::BruteForce})
    if (method_name(m) == name) return m;
  throw InvalidArgument("unknown method '" + name + "'");
}

namespace {

std::set<KostantPartition> pipeline_partitions(const DimensionVector& d) {
  std::set<KostantPartition> out;
  for (const auto& rec : components(d).components) out.insert(rec.kostant_partition);
  return out;
}

}  // namespace

CrossCheckReport cross_check(const DimensionVector& d, const std::set<Method>& methods,
                             const CrossCheckOptions& options) {
  if (methods.size() < 2) throw InvalidArgument("cross_check needs at least two methods");
  CrossCheckReport report;
  report.d = d;

  for (Method method : methods) {
    MethodResult res{method, std::nullopt, std::nullopt, {}, 0.0};
    const auto start = std::chrono::steady_clock::now();
    try {
      switch (method) {
        case Method::Qip: {
          auto s = solve_sorted(d);
          res.C = s.minimum;
          res.theta = static_cast<Wide>(s.count());
          break;
        }
        case Method::ClosedForm: {
          auto cf = closed_form(d);
          res.C = cf.C;
          res.theta = cf.theta;
          break;
        }
        case Method::QSeries: {
          const int window = options.truncation ? *options.truncation
                                                : static_cast<int>(checked::narrow(closed_form(d).C + 2));
          auto lead = leading_term(lr1_series(d, window));
          if (!lead) {
            res.error = "all coefficients vanish up to q^" + std::to_string(window);
          } else {
            res.C = lead->degree;
            res.theta = lead->coefficient;
          }
          break;
        }
        case Method::BruteForce: {
          auto bf = brute_force_components(d, options.cap);
          res.C = bf.C;
          res.theta = static_cast<Wide>(bf.minimizers.size());
          const std::set<KostantPartition> oracle(bf.minimizers.begin(), bf.minimizers.end());
          report.partitions_match = oracle == pipeline_partitions(d);
          break;
        }
      }
    } catch (const Error& e) {
      res.error = e.what();
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.results.push_back(std::move(res));
  }

  const auto& first = report.results.front();
  report.agree = std::all_of(report.results.begin(), report.results.end(), [&](const MethodResult& r) {
    return r.error.empty() && r.C && r.theta && first.C && r.C == first.C && r.theta == first.theta;
  });
  if (report.partitions_match == false) report.agree = false;
  return report;
}

}  // namespace quiver
