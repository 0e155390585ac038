#include "quiver/serialize.hpp"

namespace quiver {

Json wide_json(Wide v) { return checked::narrow(v, "json output"); }

Json to_json(const DimensionVector& d) { return Json(std::vector<std::int64_t>(d.begin(), d.end())); }

Json to_json(const RisingVector& v) {
  Json out = Json::array();
  for (int i = 0; i <= v.order(); ++i) {
    if (i == v.placeholder())
      out.push_back("*");
    else
      out.push_back(v[static_cast<std::size_t>(i)]);
  }
  return out;
}

Json to_json(const KostantPartition& m) {
  Json out = Json::array();
  for (auto [iv, mult] : m.support()) out.push_back({iv.k, iv.l, mult});
  return out;
}

Json to_json(const RankPattern& r) {
  Json out = Json::array();
  for (int i = 0; i <= r.order(); ++i) {
    Json row = Json::array();
    for (int j = i; j <= r.order(); ++j) row.push_back(r(i, j));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const RankCondition& c) { return Json{{"k", c.k}, {"l", c.l}, {"bound", c.bound}}; }

Json to_json(const IntMatrix& a) {
  Json data = Json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) data.push_back(a(i, j));
  return Json{{"rows", a.rows()}, {"cols", a.cols()}, {"data", std::move(data)}};
}

Json to_json(const LaceDiagram& g) {
  Json dots = Json::array();
  for (int x = 0; x <= g.order(); ++x)
    for (auto y : g.column(x)) dots.push_back({x, y});
  Json links = Json::array();
  for (const auto& l : g.links()) links.push_back({l.x, l.y_left, l.y_right});
  return Json{{"dots", std::move(dots)}, {"links", std::move(links)}};
}

Json to_json(const ComponentRecord& rec) {
  Json equations = Json::array();
  for (const auto& c : rec.equations) equations.push_back(to_json(c));
  Json matrices = Json::array();
  for (const auto& a : rec.representative.maps) matrices.push_back(to_json(a));
  return Json{{"rising_vector", to_json(rec.rising_vector)},
              {"kostant_partition", to_json(rec.kostant_partition)},
              {"rank_pattern", to_json(rec.rank_pattern)},
              {"equations", std::move(equations)},
              {"matrices", std::move(matrices)},
              {"diagram", to_json(rec.diagram)}};
}

Json to_json(const ComponentReport& report) {
  Json comps = Json::array();
  for (const auto& rec : report.components) comps.push_back(to_json(rec));
  return Json{{"d", to_json(report.d)},   {"C", wide_json(report.C)},
              {"theta", wide_json(report.theta)}, {"method", "rising"},
              {"k", report.k},            {"components", std::move(comps)}};
}

Json to_json(const CrossCheckReport& report, bool with_timing) {
  Json methods = Json::array();
  for (const auto& r : report.results) {
    Json entry{{"method", method_name(r.method)}};
    entry["C"] = r.C ? wide_json(*r.C) : Json(nullptr);
    entry["theta"] = r.theta ? wide_json(*r.theta) : Json(nullptr);
    if (!r.error.empty()) entry["error"] = r.error;
    if (with_timing) entry["seconds"] = r.seconds;
    methods.push_back(std::move(entry));
  }
  Json out{{"d", to_json(report.d)}, {"methods", std::move(methods)}, {"agree", report.agree}};
  if (report.partitions_match) out["partitions_match"] = *report.partitions_match;
  return out;
}

KostantPartition partition_from_json(const Json& j, int n) {
  KostantPartition m(n);
  for (const auto& entry : j) {
    const int k = entry.at(0).get<int>();
    const int l = entry.at(1).get<int>();
    if (k < 0 || k > l || l > n) throw InvalidArgument("interval out of range in partition JSON");
    m.add({k, l}, entry.at(2).get<std::int64_t>());
  }
  return m;
}

LaceDiagram diagram_from_json(const Json& j, int n) {
  LaceDiagram g(n);
  for (const auto& dot : j.at("dots")) g.add_dot(dot.at(0).get<int>(), dot.at(1).get<std::int64_t>());
  for (const auto& link : j.at("links"))
    g.add_link(link.at(0).get<int>(), link.at(1).get<std::int64_t>(), link.at(2).get<std::int64_t>());
  return g;
}

IntMatrix matrix_from_json(const Json& j) {
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  const auto& data = j.at("data");
  if (static_cast<Eigen::Index>(data.size()) != rows * cols) throw InvalidArgument("matrix data has wrong length");
  IntMatrix a(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j2 = 0; j2 < cols; ++j2) a(i, j2) = data.at(static_cast<std::size_t>(i * cols + j2)).get<std::int64_t>();
  return a;
}

}  // namespace quiver
