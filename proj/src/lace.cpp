#include "quiver/lace.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace quiver {

LaceDiagram::LaceDiagram(int n) {
  if (n < 0) throw InvalidArgument("lace diagram order must be non-negative");
  columns_.resize(static_cast<std::size_t>(n) + 1);
}

void LaceDiagram::add_dot(int x, std::int64_t y) {
  if (x < 0 || x > order()) throw MalformedDiagram("dot column " + std::to_string(x) + " out of range");
  auto& col = columns_[static_cast<std::size_t>(x)];
  auto it = std::lower_bound(col.begin(), col.end(), y);
  if (it != col.end() && *it == y)
    throw MalformedDiagram("duplicate dot at (" + std::to_string(x) + "," + std::to_string(y) + ")");
  col.insert(it, y);
}

bool LaceDiagram::has_dot(int x, std::int64_t y) const {
  if (x < 0 || x > order()) return false;
  const auto& col = columns_[static_cast<std::size_t>(x)];
  return std::binary_search(col.begin(), col.end(), y);
}

void LaceDiagram::add_link(int x, std::int64_t y_left, std::int64_t y_right) {
  const std::string where =
      "(" + std::to_string(x) + "," + std::to_string(y_left) + ")-(" + std::to_string(x + 1) + "," +
      std::to_string(y_right) + ")";
  if (!has_dot(x, y_left) || !has_dot(x + 1, y_right)) throw MalformedDiagram("link " + where + " has a missing endpoint");
  if (right_neighbor(x, y_left)) throw MalformedDiagram("dot (" + std::to_string(x) + "," + std::to_string(y_left) + ") has two right links");
  if (left_neighbor(x + 1, y_right))
    throw MalformedDiagram("dot (" + std::to_string(x + 1) + "," + std::to_string(y_right) + ") has two left links");
  const Link link{x, y_left, y_right};
  links_.insert(std::lower_bound(links_.begin(), links_.end(), link), link);
}

void LaceDiagram::link_all_horizontal() {
  for (int x = 0; x < order(); ++x)
    for (auto y : column(x))
      if (has_dot(x + 1, y) && !right_neighbor(x, y) && !left_neighbor(x + 1, y)) add_link(x, y, y);
}

void LaceDiagram::remove_link(int x, std::int64_t y_left) {
  auto it = std::find_if(links_.begin(), links_.end(),
                         [&](const Link& l) { return l.x == x && l.y_left == y_left; });
  if (it == links_.end()) throw MalformedDiagram("no link leaves (" + std::to_string(x) + "," + std::to_string(y_left) + ")");
  links_.erase(it);
}

std::vector<std::int64_t> LaceDiagram::column_sizes() const {
  std::vector<std::int64_t> out;
  for (const auto& col : columns_) out.push_back(static_cast<std::int64_t>(col.size()));
  return out;
}

std::size_t LaceDiagram::dot_count() const {
  std::size_t total = 0;
  for (const auto& col : columns_) total += col.size();
  return total;
}

std::optional<std::int64_t> LaceDiagram::right_neighbor(int x, std::int64_t y) const {
  auto it = std::lower_bound(links_.begin(), links_.end(), Link{x, y, std::numeric_limits<std::int64_t>::min()});
  if (it != links_.end() && it->x == x && it->y_left == y) return it->y_right;
  return std::nullopt;
}

std::optional<std::int64_t> LaceDiagram::left_neighbor(int x, std::int64_t y) const {
  for (const auto& l : links_)
    if (l.x + 1 == x && l.y_right == y) return l.y_left;
  return std::nullopt;
}

std::optional<std::pair<std::int64_t, std::int64_t>> LaceDiagram::height_range() const {
  std::optional<std::pair<std::int64_t, std::int64_t>> range;
  for (const auto& col : columns_) {
    if (col.empty()) continue;
    if (!range)
      range = {col.front(), col.back()};
    else
      range = {std::min(range->first, col.front()), std::max(range->second, col.back())};
  }
  return range;
}

LaceDiagram LaceDiagram::restrict_heights(std::int64_t lo, std::int64_t hi) const {
  LaceDiagram out(order());
  for (int x = 0; x <= order(); ++x)
    for (auto y : column(x))
      if (lo <= y && y < hi) out.add_dot(x, y);
  for (const auto& l : links_)
    if (out.has_dot(l.x, l.y_left) && out.has_dot(l.x + 1, l.y_right)) out.add_link(l);
  return out;
}

LaceDiagram diagram_from_rising(const DimensionVector& d, const RisingVector& v) {
  v.check_against(d);
  const int n = d.order();
  const int k = v.placeholder();
  const std::int64_t dk = d[static_cast<std::size_t>(k)];
  LaceDiagram g(n);

  auto fill = [&](int x, std::int64_t bottom) {
    for (std::int64_t y = bottom; y < bottom + d[static_cast<std::size_t>(x)]; ++y) g.add_dot(x, y);
  };
  fill(k, 0);
  std::int64_t drop = 0;
  for (int x = k - 1; x >= 0; --x) {
    drop += v[static_cast<std::size_t>(x)];
    // top of column x (exclusive) is d_k - Σ_{i=x}^{k-1} e_i
    fill(x, dk - d[static_cast<std::size_t>(x)] - drop);
  }
  std::int64_t rise = 0;
  for (int x = k + 1; x <= n; ++x) {
    rise += v[static_cast<std::size_t>(x)];
    fill(x, rise);
  }
  g.link_all_horizontal();
  return g;
}

LaceDiagram diagram_increasing_case(const DimensionVector& d_incr, std::span<const std::int64_t> e) {
  if (!d_incr.is_weakly_increasing()) throw NotIncreasing("dimension vector is not weakly increasing");
  const int n = d_incr.order();
  if (static_cast<int>(e.size()) != n) throw InfeasibleVector("expected " + std::to_string(n) + " entries");
  std::int64_t total = 0;
  for (auto v : e) {
    if (v < 0) throw InfeasibleVector("entries must be non-negative");
    total += v;
  }
  if (total != d_incr[0]) throw InfeasibleVector("entries must sum to d_0");

  LaceDiagram g = open_orbit_diagram(d_incr);
  std::int64_t lo = 0;
  for (int i = 1; i <= n; ++i) {
    const std::int64_t hi = lo + e[static_cast<std::size_t>(i - 1)];
    for (std::int64_t y = lo; y < hi; ++y) g.remove_link(i - 1, y);
    lo = hi;
  }
  return g;
}

LaceDiagram open_orbit_diagram(const DimensionVector& d) {
  LaceDiagram g(d.order());
  for (int x = 0; x <= d.order(); ++x)
    for (std::int64_t y = 0; y < d[static_cast<std::size_t>(x)]; ++y) g.add_dot(x, y);
  g.link_all_horizontal();
  return g;
}

KostantPartition partition_of_diagram(const LaceDiagram& g) {
  const int n = g.order();
  KostantPartition m(n);
  for (int x = 0; x <= n; ++x) {
    for (auto y : g.column(x)) {
      if (g.left_neighbor(x, y)) continue;
      int end = x;
      std::int64_t h = y;
      while (auto next = g.right_neighbor(end, h)) {
        h = *next;
        ++end;
      }
      m.add({x, end}, 1);
    }
  }
  return m;
}

KostantPartition partition_of_diagram(const LaceDiagram& g, const DimensionVector& d) {
  if (g.order() != d.order()) throw MalformedDiagram("diagram and dimension vector differ in length");
  const auto sizes = g.column_sizes();
  for (std::size_t x = 0; x < sizes.size(); ++x) {
    if (sizes[x] != d[x]) {
      throw MalformedDiagram("column " + std::to_string(x) + " has " + std::to_string(sizes[x]) +
                             " dots, expected " + std::to_string(d[x]));
    }
  }
  auto m = partition_of_diagram(g);
  validate(m, d);
  return m;
}

RenderFormat parse_render_format(const std::string& name) {
  if (name == "ascii") return RenderFormat::Ascii;
  if (name == "svg") return RenderFormat::Svg;
  if (name == "tikz") return RenderFormat::Tikz;
  throw InvalidArgument("unknown diagram format '" + name + "'");
}

namespace {

std::string render_ascii(const LaceDiagram& g, const RenderOptions& opt) {
  const int w = std::max(1, opt.cell_width);
  const int n = g.order();
  std::ostringstream os;
  const auto range = g.height_range();
  if (range) {
    const std::size_t width = static_cast<std::size_t>(n * (w + 1) + 1);
    for (std::int64_t y = range->second; y >= range->first; --y) {
      std::string row(width, ' ');
      for (int x = 0; x <= n; ++x) {
        if (!g.has_dot(x, y)) continue;
        row[static_cast<std::size_t>(x * (w + 1))] = 'o';
        if (g.right_neighbor(x, y) == y) {
          for (int c = 1; c <= w; ++c) row[static_cast<std::size_t>(x * (w + 1) + c)] = '-';
        }
      }
      row.erase(row.find_last_not_of(' ') + 1);
      os << std::setw(4) << y << " | " << row << '\n';
    }
  }
  for (const auto& l : g.links())
    if (!l.horizontal())
      os << "link (" << l.x << ',' << l.y_left << ") -- (" << l.x + 1 << ',' << l.y_right << ")\n";
  return os.str();
}

std::string render_svg(const LaceDiagram& g, const RenderOptions& opt) {
  const double s = opt.svg_spacing;
  const double margin = s / 2;
  const auto range = g.height_range().value_or(std::pair<std::int64_t, std::int64_t>{0, 0});
  const double width = g.order() * s + 2 * margin;
  const double height = static_cast<double>(range.second - range.first) * s + 2 * margin;
  // SVG y grows downwards; the highest dot sits at the top margin.
  auto px = [&](int x) { return margin + x * s; };
  auto py = [&](std::int64_t y) { return margin + static_cast<double>(range.second - y) * s; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "  <g stroke=\"black\" stroke-width=\"2\">\n";
  for (const auto& l : g.links())
    os << "    <line x1=\"" << px(l.x) << "\" y1=\"" << py(l.y_left) << "\" x2=\"" << px(l.x + 1) << "\" y2=\""
       << py(l.y_right) << "\"/>\n";
  os << "  </g>\n  <g fill=\"black\">\n";
  for (int x = 0; x <= g.order(); ++x)
    for (auto y : g.column(x)) os << "    <circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"4\"/>\n";
  os << "  </g>\n</svg>\n";
  return os.str();
}

std::string render_tikz(const LaceDiagram& g, const RenderOptions& opt) {
  std::ostringstream os;
  os << "\\documentclass[tikz]{standalone}\n\\begin{document}\n"
     << "\\begin{tikzpicture}[x=" << opt.tikz_spacing << "cm,y=" << opt.tikz_spacing << "cm]\n";
  for (const auto& l : g.links())
    os << "  \\draw[thick] (" << l.x << ',' << l.y_left << ") -- (" << l.x + 1 << ',' << l.y_right << ");\n";
  for (int x = 0; x <= g.order(); ++x)
    for (auto y : g.column(x)) os << "  \\fill (" << x << ',' << y << ") circle (2pt);\n";
  os << "\\end{tikzpicture}\n\\end{document}\n";
  return os.str();
}

}  // namespace

std::string render(const LaceDiagram& g, RenderFormat format, const RenderOptions& options) {
  switch (format) {
    case RenderFormat::Ascii:
      return render_ascii(g, options);
    case RenderFormat::Svg:
      return render_svg(g, options);
    case RenderFormat::Tikz:
      return render_tikz(g, options);
  }
  throw InvalidArgument("unknown render format");
}

}  // namespace quiver
