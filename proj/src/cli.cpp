#include "quiver/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>

#include "quiver/serialize.hpp"

namespace quiver::cli {

namespace {

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    out.push_back(item);
  }
  if (!text.empty() && text.back() == ',') out.emplace_back();
  return out;
}

std::int64_t parse_count(const std::string& item, const std::string& what) {
  if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit))
    throw InvalidArgument("bad " + what + " entry '" + item + "'");
  try {
    return std::stoll(item);
  } catch (const std::exception&) {
    throw InvalidArgument(what + " entry '" + item + "' is too large");
  }
}

std::set<Method> parse_methods(const std::string& text) {
  std::set<Method> out;
  for (const auto& name : split_commas(text)) out.insert(parse_method(name));
  return out;
}

void write_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

struct Options {
  std::string d;
  std::optional<int> k;
  std::string format;
  std::string methods;
  std::optional<int> truncation;
  std::uint64_t cap = kDefaultBruteForceCap;
  std::optional<std::uint64_t> limit;
  std::string rising;
  bool open = false;
  bool sigma_only = false;
  bool timing = false;
  int cell_width = 3;
};

int cmd_analyze(const Options& opt, std::ostream& out) {
  const auto d = parse_dimension_vector(opt.d);
  CrossCheckOptions cc{opt.cap, opt.truncation};
  const auto report = cross_check(d, parse_methods(opt.methods), cc);
  const auto cf = closed_form(d);

  // Headline values come from the first method that produced them.
  std::optional<Wide> C, theta;
  for (const auto& r : report.results)
    if (!C && r.C && r.theta) {
      C = r.C;
      theta = r.theta;
    }

  if (opt.format == "text") {
    out << "d = " << d << "\n";
    for (const auto& r : report.results) {
      out << "  " << method_name(r.method) << ": ";
      if (r.C)
        out << "C = " << to_string(*r.C) << ", theta = " << to_string(*r.theta);
      else
        out << "error: " << r.error;
      out << '\n';
    }
    out << (report.agree ? "agree" : "DISAGREE") << '\n';
  } else {
    Json doc{{"d", to_json(d)}};
    doc["C"] = C ? wide_json(*C) : Json(nullptr);
    doc["theta"] = theta ? wide_json(*theta) : Json(nullptr);
    doc["n_tilde"] = cf.n_tilde;
    doc["S"] = wide_json(cf.S);
    Json methods = Json::object();
    for (const auto& r : report.results) {
      Json entry{{"C", r.C ? wide_json(*r.C) : Json(nullptr)}, {"theta", r.theta ? wide_json(*r.theta) : Json(nullptr)}};
      if (!r.error.empty()) entry["error"] = r.error;
      methods[method_name(r.method)] = std::move(entry);
    }
    doc["methods"] = std::move(methods);
    doc["agree"] = report.agree;
    write_json(out, doc);
  }
  return report.agree ? kExitOk : kExitDisagreement;
}

int cmd_components(const Options& opt, std::ostream& out) {
  const auto d = parse_dimension_vector(opt.d);
  const auto report = components(d, opt.k);
  if (opt.format == "text") {
    out << "d = " << d << "  C = " << to_string(report.C) << "  theta = " << to_string(report.theta) << "\n";
    for (const auto& rec : report.components) {
      out << "\nrising vector " << rec.rising_vector << "\n  kostant partition " << rec.kostant_partition
          << "\n  equations:";
      if (rec.equations.empty()) out << " (none beyond A_n...A_1 = 0)";
      for (const auto& c : rec.equations) {
        out << " rk(";
        for (int i = c.l; i > c.k; --i) out << 'A' << i;
        out << ")<=" << c.bound;
      }
      out << "\n" << render(rec.diagram, RenderFormat::Ascii);
    }
  } else {
    write_json(out, to_json(report));
  }
  return kExitOk;
}

int cmd_enumerate(const Options& opt, std::ostream& out) {
  const auto d = parse_dimension_vector(opt.d);
  std::uint64_t written = 0;
  enumerate_partitions(d, [&](const KostantPartition& m) {
    if (opt.limit && written >= *opt.limit) return false;
    const bool in_sigma = lies_in_sigma(m);
    if (opt.sigma_only && !in_sigma) return true;
    Json line{{"kostant_partition", to_json(m)}, {"codimension", wide_json(orbit_codimension(m))}, {"in_sigma", in_sigma}};
    out << line.dump() << '\n';
    ++written;
    return true;
  });
  return kExitOk;
}

int cmd_draw(const Options& opt, std::ostream& out) {
  const auto d = parse_dimension_vector(opt.d);
  if (opt.open == !opt.rising.empty()) throw InvalidArgument("draw needs exactly one of -e or --open");

  std::optional<LaceDiagram> g;
  if (opt.open) {
    g = open_orbit_diagram(d);
  } else if (opt.rising.find('*') != std::string::npos) {
    g = diagram_from_rising(d, parse_rising_vector(opt.rising));
  } else {
    std::vector<std::int64_t> e;
    for (const auto& item : split_commas(opt.rising)) e.push_back(parse_count(item, "-e"));
    g = diagram_increasing_case(d, e);
  }

  if (opt.format == "json") {
    const auto m = partition_of_diagram(*g, d);
    write_json(out, Json{{"d", to_json(d)},
                         {"diagram", to_json(*g)},
                         {"kostant_partition", to_json(m)},
                         {"codimension", wide_json(orbit_codimension(m))}});
  } else {
    RenderOptions ro;
    ro.cell_width = opt.cell_width;
    out << render(*g, parse_render_format(opt.format), ro);
  }
  return kExitOk;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const auto d = parse_dimension_vector(opt.d);
  CrossCheckOptions cc{opt.cap, opt.truncation};
  const auto report = cross_check(d, parse_methods(opt.methods), cc);
  write_json(out, to_json(report, opt.timing));
  return report.agree ? kExitOk : kExitDisagreement;
}

}  // namespace

DimensionVector parse_dimension_vector(const std::string& text) {
  std::vector<std::int64_t> dims;
  for (const auto& item : split_commas(text)) dims.push_back(parse_count(item, "dimension vector"));
  return DimensionVector(std::move(dims));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximal-dimensional components of the variety of matrix tuples with zero product"};
  app.name("quiver");
  app.require_subcommand(1);
  Options opt;

  auto add_d = [&](CLI::App* sub) {
    sub->add_option("-d,--dims", opt.d, "dimension vector, comma separated (e.g. 2,3,2,3)")->required();
  };

  auto* analyze = app.add_subcommand("analyze", "C and theta by several methods");
  add_d(analyze);
  opt.methods = "qip,qseries,closedform";
  analyze->add_option("--methods", opt.methods, "subset of qip,qseries,closedform,bruteforce")->capture_default_str();
  analyze->add_option("--format", opt.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  analyze->add_option("--truncation", opt.truncation, "q-series window (default C + 2)");
  analyze->add_option("--cap", opt.cap, "brute-force enumeration cap");

  auto* comps = app.add_subcommand("components", "maximal-dimensional components with diagrams and equations");
  add_d(comps);
  comps->add_option("-k", opt.k, "placeholder position (must attain min d)");
  comps->add_option("--format", opt.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* enumerate = app.add_subcommand("enumerate", "stream all Kostant partitions as JSON lines");
  add_d(enumerate);
  enumerate->add_flag("--sigma-only", opt.sigma_only, "only orbits with zero product");
  enumerate->add_option("--limit", opt.limit, "stop after this many lines");

  auto* draw = app.add_subcommand("draw", "render a lace diagram");
  add_d(draw);
  draw->add_option("-e", opt.rising, "rising vector with '*' (e.g. 0,1,*,0,4,0) or increasing-case vector e_1..e_n");
  draw->add_flag("--open", opt.open, "draw the open-orbit diagram");
  draw->add_option("--format", opt.format, "ascii, svg, tikz or json")
      ->check(CLI::IsMember({"ascii", "svg", "tikz", "json"}));
  draw->add_option("--cell-width", opt.cell_width, "ascii characters between columns")->check(CLI::Range(1, 40));

  auto* verify = app.add_subcommand("verify", "cross-check C and theta across methods");
  add_d(verify);
  verify->add_option("--methods", opt.methods, "subset of qip,qseries,closedform,bruteforce");
  verify->add_option("--cap", opt.cap, "brute-force enumeration cap");
  verify->add_option("--truncation", opt.truncation, "q-series window (default C + 2)");
  verify->add_flag("--timing", opt.timing, "include per-method wall time");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitError;
  }

  try {
    if (analyze->parsed()) {
      if (opt.format.empty()) opt.format = "json";
      return cmd_analyze(opt, out);
    }
    if (comps->parsed()) {
      if (opt.format.empty()) opt.format = "json";
      return cmd_components(opt, out);
    }
    if (enumerate->parsed()) return cmd_enumerate(opt, out);
    if (draw->parsed()) {
      if (opt.format.empty()) opt.format = "ascii";
      return cmd_draw(opt, out);
    }
    if (verify->parsed()) {
      if (verify->count("--methods") == 0) opt.methods = "qip,qseries,closedform,bruteforce";
      return cmd_verify(opt, out);
    }
  } catch (const std::exception& e) {
    err << "quiver: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace quiver::cli
