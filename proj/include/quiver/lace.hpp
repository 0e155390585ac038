#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quiver/kostant.hpp"
#include "quiver/qip.hpp"

namespace quiver {

class MalformedDiagram : public Error {
 public:
  using Error::Error;
};

class NotIncreasing : public Error {
 public:
  using Error::Error;
};

struct Dot {
  int x = 0;
  std::int64_t y = 0;
  friend auto operator<=>(const Dot&, const Dot&) = default;
};

/// Unit link between (x, y_left) and (x + 1, y_right).
struct Link {
  int x = 0;
  std::int64_t y_left = 0;
  std::int64_t y_right = 0;

  bool horizontal() const { return y_left == y_right; }
  friend auto operator<=>(const Link&, const Link&) = default;
};

/// Columns 0..n of dots at integer heights joined by unit links. Each dot
/// touches at most one link on each side (checked on insertion).
class LaceDiagram {
 public:
  explicit LaceDiagram(int n);

  int order() const { return static_cast<int>(columns_.size()) - 1; }

  void add_dot(int x, std::int64_t y);
  /// Throws MalformedDiagram if an endpoint is missing or already linked on that side.
  void add_link(int x, std::int64_t y_left, std::int64_t y_right);
  void add_link(const Link& link) { add_link(link.x, link.y_left, link.y_right); }
  /// Links every pair of horizontally adjacent dots.
  void link_all_horizontal();
  void remove_link(int x, std::int64_t y_left);

  bool has_dot(int x, std::int64_t y) const;
  /// Heights in column x, ascending.
  const std::vector<std::int64_t>& column(int x) const { return columns_.at(static_cast<std::size_t>(x)); }
  std::vector<std::int64_t> column_sizes() const;
  std::size_t dot_count() const;
  /// All links, sorted by (x, y_left).
  const std::vector<Link>& links() const { return links_; }

  /// Link leaving (x, y) to the right, if any.
  std::optional<std::int64_t> right_neighbor(int x, std::int64_t y) const;
  std::optional<std::int64_t> left_neighbor(int x, std::int64_t y) const;

  /// Heights spanned by all dots; nullopt when the diagram is empty.
  std::optional<std::pair<std::int64_t, std::int64_t>> height_range() const;

  /// Sub-diagram of the dots with lo <= y < hi and the links among them.
  LaceDiagram restrict_heights(std::int64_t lo, std::int64_t hi) const;

  friend bool operator==(const LaceDiagram&, const LaceDiagram&) = default;

 private:
  std::vector<std::vector<std::int64_t>> columns_;
  std::vector<Link> links_;
};

/// D(e): column k at heights [0, d_k); to the right the bottom of column i
/// sits e_i above the bottom of column i-1; to the left the top of column i
/// sits e_i below the top of column i+1. All horizontal links drawn.
LaceDiagram diagram_from_rising(const DimensionVector& d, const RisingVector& v);

/// Weakly increasing d, e = (e_1, ..., e_n) summing to d_0: bottom-aligned
/// columns, all horizontal links, then the links between columns i-1 and i
/// removed at heights [e_1 + ... + e_{i-1}, e_1 + ... + e_i).
LaceDiagram diagram_increasing_case(const DimensionVector& d_incr, std::span<const std::int64_t> e);

/// Bottom-aligned columns with every horizontal link: the open orbit.
LaceDiagram open_orbit_diagram(const DimensionVector& d);

/// Traces maximal strands; m_kl counts strands covering exactly columns k..l.
KostantPartition partition_of_diagram(const LaceDiagram& g);
/// As above, additionally validating the column sizes against d.
KostantPartition partition_of_diagram(const LaceDiagram& g, const DimensionVector& d);

enum class RenderFormat { Ascii, Svg, Tikz };

struct RenderOptions {
  /// ASCII: characters between two adjacent columns.
  int cell_width = 3;
  /// SVG user units between adjacent columns / rows.
  double svg_spacing = 30.0;
  /// TikZ centimetres between adjacent columns / rows.
  double tikz_spacing = 0.5;
};

std::string render(const LaceDiagram& g, RenderFormat format, const RenderOptions& options = {});

RenderFormat parse_render_format(const std::string& name);

}  // namespace quiver
