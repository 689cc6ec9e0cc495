#include "tilenorm/tileset.hpp"

#include "tilenorm/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tilenorm {

const char* side_name(Side s) {
  switch (s) {
    case Side::top: return "top";
    case Side::bottom: return "bottom";
    case Side::left: return "left";
    case Side::right: return "right";
  }
  return "?";
}

const Color& WangTile::color(Side s) const {
  switch (s) {
    case Side::top: return top;
    case Side::bottom: return bottom;
    case Side::left: return left;
    case Side::right: return right;
  }
  return top;
}

std::optional<std::size_t> WangTileSet::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    if (tiles[i].id == id) return i;
  }
  return std::nullopt;
}

std::vector<std::string> WangTileSet::ids() const {
  std::vector<std::string> out;
  out.reserve(tiles.size());
  for (const auto& t : tiles) out.push_back(t.id);
  return out;
}

std::vector<std::string> PolygonPrototileSet::ids() const {
  std::vector<std::string> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(p.id);
  return out;
}

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> words;
};

std::vector<Line> tokenize(std::string_view source) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= source.size()) {
    std::size_t end = source.find('\n', pos);
    if (end == std::string_view::npos) end = source.size();
    std::string_view raw = source.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    std::string w;
    while (in >> w) line.words.push_back(w);
    if (!line.words.empty()) lines.push_back(std::move(line));
    pos = end + 1;
  }
  return lines;
}

Rational parse_coordinate(const std::string& word, std::size_t line) {
  try {
    return parse_rational(word);
  } catch (const std::invalid_argument& e) {
    throw SyntaxError(line, e.what());
  }
}

Rational cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

int sign(const Rational& q) { return sgn(q); }

bool on_segment(const Point& a, const Point& b, const Point& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

bool segments_touch(const Point& a, const Point& b, const Point& c, const Point& d) {
  int d1 = sign(cross(c, d, a));
  int d2 = sign(cross(c, d, b));
  int d3 = sign(cross(a, b, c));
  int d4 = sign(cross(a, b, d));
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  if (d1 == 0 && on_segment(c, d, a)) return true;
  if (d2 == 0 && on_segment(c, d, b)) return true;
  if (d3 == 0 && on_segment(a, b, c)) return true;
  if (d4 == 0 && on_segment(a, b, d)) return true;
  return false;
}

}  // namespace

WangTileSet parse_wang_tileset(std::string_view source) {
  WangTileSet set;
  bool have_header = false;
  std::set<std::string> seen;
  for (const auto& line : tokenize(source)) {
    const auto& w = line.words;
    if (w[0] == "tileset") {
      if (have_header) throw SyntaxError(line.number, "second 'tileset' header");
      if (w.size() != 2) throw SyntaxError(line.number, "expected 'tileset <name>'");
      set.name = w[1];
      have_header = true;
    } else if (w[0] == "tile") {
      if (!have_header) throw SyntaxError(line.number, "'tile' before 'tileset' header");
      if (w.size() != 6) throw SyntaxError(line.number, "expected 'tile <id> N=<c> S=<c> E=<c> W=<c>'");
      WangTile tile;
      tile.id = w[1];
      std::map<char, std::string> sides;
      for (std::size_t i = 2; i < w.size(); ++i) {
        auto eq = w[i].find('=');
        if (eq != 1 || w[i].size() < 3) throw SyntaxError(line.number, "malformed side '" + w[i] + "'");
        char key = w[i][0];
        if (key != 'N' && key != 'S' && key != 'E' && key != 'W') {
          throw SyntaxError(line.number, "unknown side key '" + std::string(1, key) + "'");
        }
        if (!sides.emplace(key, w[i].substr(2)).second) {
          throw SyntaxError(line.number, "side '" + std::string(1, key) + "' given twice");
        }
      }
      tile.top = sides.at('N');
      tile.bottom = sides.at('S');
      tile.right = sides.at('E');
      tile.left = sides.at('W');
      if (!seen.insert(tile.id).second) throw DuplicateId("duplicate tile id '" + tile.id + "'");
      set.tiles.push_back(std::move(tile));
    } else {
      throw SyntaxError(line.number, "unknown directive '" + w[0] + "'");
    }
  }
  if (!have_header) throw SyntaxError(1, "missing 'tileset <name>' header");
  if (set.tiles.empty()) throw EmptySet("tile set '" + set.name + "' has no tiles");
  return set;
}

PolygonPrototileSet parse_polygon_set(std::string_view source) {
  PolygonPrototileSet set;
  bool have_header = false;
  std::set<std::string> seen;
  // Edge colors are collected by index and attached once the polygon ends.
  std::map<std::size_t, Color> pending_colors;
  std::size_t poly_line = 0;

  auto finish = [&]() {
    if (set.polys.empty()) return;
    auto& poly = set.polys.back();
    if (poly.edge_colors.empty() && !pending_colors.empty()) {
      for (const auto& [idx, color] : pending_colors) {
        if (idx >= poly.vertices.size()) {
          throw EdgeColorCountMismatch("polygon '" + poly.id + "': edgecolor index " + std::to_string(idx) +
                                       " out of range");
        }
      }
      if (pending_colors.size() != poly.vertices.size()) {
        throw EdgeColorCountMismatch("polygon '" + poly.id + "' has " + std::to_string(poly.vertices.size()) +
                                     " vertices but " + std::to_string(pending_colors.size()) + " edge colors");
      }
      for (auto& [idx, color] : pending_colors) poly.edge_colors.push_back(color);
    } else if (pending_colors.empty()) {
      throw EdgeColorCountMismatch("polygon '" + poly.id + "' has no edge colors");
    }
    pending_colors.clear();
    if (poly.vertices.size() < 3) throw SyntaxError(poly_line, "polygon '" + poly.id + "' needs at least 3 vertices");
    check_polygon(poly);
  };

  for (const auto& line : tokenize(source)) {
    const auto& w = line.words;
    if (w[0] == "polyset") {
      if (have_header) throw SyntaxError(line.number, "second 'polyset' header");
      if (w.size() != 2) throw SyntaxError(line.number, "expected 'polyset <name>'");
      set.name = w[1];
      have_header = true;
    } else if (w[0] == "poly") {
      if (!have_header) throw SyntaxError(line.number, "'poly' before 'polyset' header");
      if (w.size() != 2) throw SyntaxError(line.number, "expected 'poly <id>'");
      finish();
      if (!seen.insert(w[1]).second) throw DuplicateId("duplicate polygon id '" + w[1] + "'");
      set.polys.push_back(PolygonPrototile{w[1], {}, {}});
      poly_line = line.number;
    } else if (w[0] == "vertex") {
      if (set.polys.empty()) throw SyntaxError(line.number, "'vertex' outside a polygon");
      if (w.size() != 3) throw SyntaxError(line.number, "expected 'vertex <x> <y>'");
      set.polys.back().vertices.push_back(
          Point{parse_coordinate(w[1], line.number), parse_coordinate(w[2], line.number)});
    } else if (w[0] == "edgecolor") {
      if (set.polys.empty()) throw SyntaxError(line.number, "'edgecolor' outside a polygon");
      if (w.size() != 3) throw SyntaxError(line.number, "expected 'edgecolor <i> <color>'");
      std::size_t idx = 0;
      try {
        std::size_t used = 0;
        long long v = std::stoll(w[1], &used);
        if (used != w[1].size() || v < 0) throw std::invalid_argument("index");
        idx = static_cast<std::size_t>(v);
      } catch (const std::exception&) {
        throw SyntaxError(line.number, "bad edge index '" + w[1] + "'");
      }
      if (!pending_colors.emplace(idx, w[2]).second) {
        throw SyntaxError(line.number, "edge " + w[1] + " colored twice");
      }
    } else {
      throw SyntaxError(line.number, "unknown directive '" + w[0] + "'");
    }
  }
  if (!have_header) throw SyntaxError(1, "missing 'polyset <name>' header");
  finish();
  if (set.polys.empty()) throw EmptySet("polygon set '" + set.name + "' has no polygons");
  return set;
}

Rational signed_area(const std::vector<Point>& v) {
  Rational twice = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    twice += a.x * b.y - b.x * a.y;
  }
  return twice / 2;
}

bool is_simple_polygon(const std::vector<Point>& v) {
  const std::size_t n = v.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] == v[(i + 1) % n]) return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a0 = v[i];
    const Point& a1 = v[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point& b0 = v[j];
      const Point& b1 = v[(j + 1) % n];
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) {
        // Consecutive edges share exactly one endpoint; they must not fold back.
        const Point& shared = (j == i + 1) ? a1 : a0;
        const Point& p = (j == i + 1) ? a0 : a1;
        const Point& q = (j == i + 1) ? b1 : b0;
        if (sgn(cross(shared, p, q)) == 0) {
          Rational d = (p.x - shared.x) * (q.x - shared.x) + (p.y - shared.y) * (q.y - shared.y);
          if (d > 0) return false;
        }
        continue;
      }
      if (segments_touch(a0, a1, b0, b1)) return false;
    }
  }
  return true;
}

void check_polygon(const PolygonPrototile& poly) {
  if (poly.edge_colors.size() != poly.vertices.size()) {
    throw EdgeColorCountMismatch("polygon '" + poly.id + "': " + std::to_string(poly.vertices.size()) +
                                 " vertices, " + std::to_string(poly.edge_colors.size()) + " edge colors");
  }
  if (!is_simple_polygon(poly.vertices)) throw NonSimplePolygon("polygon '" + poly.id + "' is not simple");
  if (signed_area(poly.vertices) <= 0) {
    throw ClockwisePolygon("polygon '" + poly.id + "' is not counter-clockwise");
  }
}

bool segments_are_translates(const Point& a0, const Point& a1, const Point& b0, const Point& b1) {
  Rational ax = a1.x - a0.x, ay = a1.y - a0.y;
  Rational bx = b1.x - b0.x, by = b1.y - b0.y;
  return (ax == bx && ay == by) || (ax == -bx && ay == -by);
}

std::size_t ValidationReport::gluable_pairs() const {
  return static_cast<std::size_t>(std::count_if(pairs.begin(), pairs.end(), [](const auto& p) { return p.translates; }));
}

ValidationReport validate_polygon_set(const PolygonPrototileSet& set) {
  std::map<Color, std::vector<EdgeRef>> by_color;
  std::vector<Color> color_order;
  for (std::size_t p = 0; p < set.polys.size(); ++p) {
    for (std::size_t e = 0; e < set.polys[p].edge_count(); ++e) {
      const auto& c = set.polys[p].edge_colors[e];
      auto [it, inserted] = by_color.try_emplace(c);
      if (inserted) color_order.push_back(c);
      it->second.push_back(EdgeRef{p, e});
    }
  }
  ValidationReport report;
  for (const auto& color : color_order) {
    const auto& edges = by_color.at(color);
    if (edges.size() == 1) {
      report.isolated_colors.push_back(color);
      continue;
    }
    bool all = true;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        const auto& pa = set.polys[edges[i].poly];
        const auto& pb = set.polys[edges[j].poly];
        bool t = segments_are_translates(pa.edge_start(edges[i].edge), pa.edge_end(edges[i].edge),
                                         pb.edge_start(edges[j].edge), pb.edge_end(edges[j].edge));
        all = all && t;
        report.pairs.push_back(EdgePairCheck{color, edges[i], edges[j], t});
      }
    }
    if (!all) report.never_translates.push_back(color);
  }
  return report;
}

std::string canonical_serialize(const WangTileSet& set) {
  std::string out = "tileset " + set.name + "\n";
  for (const auto& t : set.tiles) {
    out += "tile " + t.id + " N=" + t.top + " S=" + t.bottom + " E=" + t.right + " W=" + t.left + "\n";
  }
  return out;
}

std::string canonical_serialize(const PolygonPrototileSet& set) {
  std::string out = "polyset " + set.name + "\n";
  for (const auto& p : set.polys) {
    out += "poly " + p.id + "\n";
    for (const auto& v : p.vertices) out += "vertex " + to_string(v.x) + " " + to_string(v.y) + "\n";
    for (std::size_t i = 0; i < p.edge_colors.size(); ++i) {
      out += "edgecolor " + std::to_string(i) + " " + p.edge_colors[i] + "\n";
    }
  }
  return out;
}

std::vector<Rational> parse_cycle(std::string_view line, const std::vector<std::string>& ids) {
  auto lines = tokenize(line);
  if (lines.size() != 1 || lines[0].words[0] != "cycle") {
    throw SyntaxError(lines.empty() ? 1 : lines[0].number, "expected 'cycle <id>=<rational> ...'");
  }
  std::vector<Rational> coords(ids.size(), Rational(0));
  std::vector<bool> given(ids.size(), false);
  const auto& w = lines[0].words;
  for (std::size_t i = 1; i < w.size(); ++i) {
    auto eq = w[i].rfind('=');
    if (eq == std::string::npos || eq == 0) throw SyntaxError(lines[0].number, "malformed entry '" + w[i] + "'");
    std::string id = w[i].substr(0, eq);
    auto it = std::find(ids.begin(), ids.end(), id);
    if (it == ids.end()) throw UnknownTile("cycle names unknown tile '" + id + "'");
    auto k = static_cast<std::size_t>(it - ids.begin());
    if (given[k]) throw SyntaxError(lines[0].number, "tile '" + id + "' given twice");
    given[k] = true;
    coords[k] = parse_coordinate(w[i].substr(eq + 1), lines[0].number);
  }
  return coords;
}

std::string format_cycle(const std::vector<Rational>& coords, const std::vector<std::string>& ids) {
  std::string out = "cycle";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] != 0) out += " " + ids[i] + "=" + to_string(coords[i]);
  }
  return out;
}

std::string format_point(const std::vector<Rational>& coords, const std::vector<std::string>& ids) {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ",";
    out += ids[i] + "=" + to_string(coords[i]);
  }
  return out + ")";
}

}  // namespace tilenorm
