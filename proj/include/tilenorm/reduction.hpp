#pragma once

#include "tilenorm/tileset.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace tilenorm {

WangTileSet forget_colors(const WangTileSet& set);

struct ScaledSet {
  PolygonPrototileSet set;
  Integer scale = 1;
};

ScaledSet scale_to_integral(const PolygonPrototileSet& set);

struct LatticePoint {
  long x = 0;
  long y = 0;
  auto operator<=>(const LatticePoint&) const = default;
};

// Unit steps from a to b (integer points), walked from the lexicographically
// smaller endpoint so that translated segments get translated staircases.
// The walk stays weakly below the segment and as close to it as possible;
// an x-step wins ties.
std::vector<LatticePoint> staircase(LatticePoint a, LatticePoint b);

struct UnitEdgeOrigin {
  std::size_t edge = 0;    // index of the original polygon edge
  std::size_t offset = 0;  // unit steps from the lexicographically smaller endpoint
};

struct ZigzagPolygon {
  std::string id;
  std::vector<LatticePoint> vertices;   // counter-clockwise, unit edges
  std::vector<UnitEdgeOrigin> origin;   // one per unit edge
  std::vector<LatticePoint> squares;    // lower-left corners of the enclosed unit squares, sorted
};

struct ZigzagPolygonSet {
  PolygonPrototileSet source;  // integral input
  std::vector<ZigzagPolygon> polys;

  PolygonPrototileSet as_polygon_set() const;
};

// Requires integral, convex input.
ZigzagPolygonSet zigzag(const PolygonPrototileSet& set);

struct TileOrigin {
  std::string poly;
  long dx = 0;  // square offset from the lower-left of the polygon's bounding box
  long dy = 0;
};

struct ColorOrigin {
  bool seam = false;
  std::string seam_id;  // seams only
  Color color;          // boundary only: original edge color
  long dir_x = 0;       // boundary only: original edge vector from its smaller endpoint
  long dir_y = 0;
  std::size_t index = 0;  // boundary only: sub-edge index
};

struct EncodingMap {
  std::map<std::string, TileOrigin> tiles;
  std::map<Color, ColorOrigin> colors;
  std::size_t seam_count() const;
};

struct Encoding {
  WangTileSet tiles;
  EncodingMap map;
};

Encoding encode_as_wang(const ZigzagPolygonSet& zset);

// scale_to_integral, zigzag and encode_as_wang in sequence.
struct Squareified {
  Integer scale = 1;
  ZigzagPolygonSet zigzagged;
  Encoding encoding;
};

Squareified squareify(const PolygonPrototileSet& set);

std::string serialize_encoding_map(const EncodingMap& map);

}  // namespace tilenorm
