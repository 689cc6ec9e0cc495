#pragma once

#include "tilenorm/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tilenorm {

using Color = std::string;

enum class Side { top = 0, bottom = 1, left = 2, right = 3 };
inline constexpr Side kSides[] = {Side::top, Side::bottom, Side::left, Side::right};
const char* side_name(Side s);

struct WangTile {
  std::string id;
  Color top;
  Color bottom;
  Color left;
  Color right;

  const Color& color(Side s) const;
  bool operator==(const WangTile&) const = default;
};

// Tile order is the coordinate order for every chain over the set.
struct WangTileSet {
  std::string name;
  std::vector<WangTile> tiles;

  std::size_t size() const { return tiles.size(); }
  std::optional<std::size_t> index_of(std::string_view id) const;
  std::vector<std::string> ids() const;
  bool operator==(const WangTileSet&) const = default;
};

struct Point {
  Rational x;
  Rational y;
  bool operator==(const Point&) const = default;
};

// Vertices counter-clockwise; edge i runs from vertex i to vertex i+1.
struct PolygonPrototile {
  std::string id;
  std::vector<Point> vertices;
  std::vector<Color> edge_colors;

  std::size_t edge_count() const { return vertices.size(); }
  const Point& edge_start(std::size_t i) const { return vertices[i]; }
  const Point& edge_end(std::size_t i) const { return vertices[(i + 1) % vertices.size()]; }
  bool operator==(const PolygonPrototile&) const = default;
};

struct PolygonPrototileSet {
  std::string name;
  std::vector<PolygonPrototile> polys;

  std::vector<std::string> ids() const;
  bool operator==(const PolygonPrototileSet&) const = default;
};

WangTileSet parse_wang_tileset(std::string_view source);
PolygonPrototileSet parse_polygon_set(std::string_view source);

// Checks a single polygon: at least 3 vertices, simple, counter-clockwise,
// one color per edge.
void check_polygon(const PolygonPrototile& poly);

Rational signed_area(const std::vector<Point>& vertices);
bool is_simple_polygon(const std::vector<Point>& vertices);

// Segments [a0,a1] and [b0,b1] are translates of each other (as unoriented
// segments).
bool segments_are_translates(const Point& a0, const Point& a1, const Point& b0, const Point& b1);

struct EdgeRef {
  std::size_t poly = 0;
  std::size_t edge = 0;
};

struct EdgePairCheck {
  Color color;
  EdgeRef first;
  EdgeRef second;
  bool translates = false;
};

struct ValidationReport {
  std::vector<EdgePairCheck> pairs;
  std::vector<Color> isolated_colors;
  std::vector<Color> never_translates;

  std::size_t gluable_pairs() const;
};

ValidationReport validate_polygon_set(const PolygonPrototileSet& set);

std::string canonical_serialize(const WangTileSet& set);
std::string canonical_serialize(const PolygonPrototileSet& set);

// "cycle A=1/2 B=3"; ids not listed are zero.
std::vector<Rational> parse_cycle(std::string_view line, const std::vector<std::string>& ids);
// Zero coordinates are omitted.
std::string format_cycle(const std::vector<Rational>& coords, const std::vector<std::string>& ids);
// "(A=1/2,B=1/2)", every coordinate listed.
std::string format_point(const std::vector<Rational>& coords, const std::vector<std::string>& ids);

}  // namespace tilenorm
