#include "tilenorm/reduction.hpp"

#include "tilenorm/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace tilenorm {

WangTileSet forget_colors(const WangTileSet& set) {
  WangTileSet out;
  out.name = set.name;
  for (const auto& t : set.tiles) out.tiles.push_back(WangTile{t.id, "blank", "blank", "blank", "blank"});
  return out;
}

ScaledSet scale_to_integral(const PolygonPrototileSet& set) {
  std::vector<Rational> coords;
  for (const auto& p : set.polys) {
    for (const auto& v : p.vertices) {
      coords.push_back(v.x);
      coords.push_back(v.y);
    }
  }
  ScaledSet out;
  out.scale = denominator_lcm(coords);
  out.set = set;
  Rational f(out.scale);
  for (auto& p : out.set.polys) {
    for (auto& v : p.vertices) {
      v.x *= f;
      v.y *= f;
    }
  }
  return out;
}

std::vector<LatticePoint> staircase(LatticePoint a, LatticePoint b) {
  if (b < a) {
    auto pts = staircase(b, a);
    std::reverse(pts.begin(), pts.end());
    return pts;
  }
  const long dx = b.x - a.x;
  const long dy = b.y - a.y;
  const long sy = dy > 0 ? 1 : (dy < 0 ? -1 : 0);
  // f >= 0 exactly on or below the line through a and b.
  auto f = [&](const LatticePoint& p) { return dy * (p.x - a.x) - dx * (p.y - a.y); };
  std::vector<LatticePoint> pts{a};
  LatticePoint p = a;
  while (p != b) {
    LatticePoint xs{p.x + 1, p.y};
    LatticePoint ys{p.x, p.y + sy};
    bool x_ok = p.x != b.x;
    bool y_ok = p.y != b.y;
    if (x_ok && y_ok) {
      long fx = f(xs);
      long fy = f(ys);
      if (fx < 0 && fy >= 0) {
        x_ok = false;
      } else if (fx >= 0 && fy >= 0 && fy < fx) {
        x_ok = false;
      }
    }
    p = x_ok ? xs : ys;
    pts.push_back(p);
  }
  return pts;
}

namespace {

long to_long(const Rational& q, const std::string& what) {
  if (!is_integral(q)) throw NotIntegral(what + " has non-integral coordinate " + to_string(q));
  if (!q.get_num().fits_slong_p()) throw TooLarge(what + " coordinate out of range");
  return q.get_num().get_si();
}

LatticePoint lattice(const Point& p, const std::string& what) { return {to_long(p.x, what), to_long(p.y, what)}; }

void check_convex(const PolygonPrototile& poly) {
  const std::size_t n = poly.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = poly.vertices[i];
    const Point& b = poly.vertices[(i + 1) % n];
    const Point& c = poly.vertices[(i + 2) % n];
    Rational cross = (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x);
    if (sgn(cross) < 0) throw NonConvexInput("polygon " + poly.id + " is not convex at vertex " + std::to_string((i + 1) % n));
  }
}

// Squares enclosed by a simple closed unit-step path (even-odd rule on
// horizontal rays through square centers).
std::vector<LatticePoint> enclosed_squares(const std::vector<LatticePoint>& path) {
  long x0 = path[0].x, x1 = path[0].x, y0 = path[0].y, y1 = path[0].y;
  for (const auto& p : path) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  // Vertical unit edges keyed by row: x positions.
  std::map<long, std::vector<long>> vertical;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const auto& p = path[i];
    const auto& q = path[(i + 1) % path.size()];
    if (p.x == q.x) vertical[std::min(p.y, q.y)].push_back(p.x);
  }
  std::vector<LatticePoint> out;
  for (long y = y0; y < y1; ++y) {
    auto it = vertical.find(y);
    if (it == vertical.end()) continue;
    auto xs = it->second;
    std::sort(xs.begin(), xs.end());
    for (long x = x0; x < x1; ++x) {
      auto crossings = xs.end() - std::upper_bound(xs.begin(), xs.end(), x);
      if (crossings % 2 == 1) out.push_back({x, y});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

long twice_signed_area(const std::vector<LatticePoint>& path) {
  long s = 0;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const auto& p = path[i];
    const auto& q = path[(i + 1) % path.size()];
    s += p.x * q.y - q.x * p.y;
  }
  return s;
}

bool edge_connected(const std::vector<LatticePoint>& squares) {
  if (squares.empty()) return false;
  std::set<LatticePoint> todo(squares.begin(), squares.end());
  std::deque<LatticePoint> queue{squares.front()};
  todo.erase(squares.front());
  while (!queue.empty()) {
    auto p = queue.front();
    queue.pop_front();
    for (LatticePoint q : {LatticePoint{p.x + 1, p.y}, LatticePoint{p.x - 1, p.y}, LatticePoint{p.x, p.y + 1},
                           LatticePoint{p.x, p.y - 1}}) {
      if (todo.erase(q)) queue.push_back(q);
    }
  }
  return todo.empty();
}

ZigzagPolygon zigzag_one(const PolygonPrototile& poly) {
  check_convex(poly);
  ZigzagPolygon z;
  z.id = poly.id;
  const std::size_t n = poly.vertices.size();
  for (std::size_t e = 0; e < n; ++e) {
    LatticePoint a = lattice(poly.edge_start(e), "polygon " + poly.id);
    LatticePoint b = lattice(poly.edge_end(e), "polygon " + poly.id);
    auto pts = staircase(a, b);
    const std::size_t steps = pts.size() - 1;
    const bool from_smaller = a < b;
    for (std::size_t j = 0; j < steps; ++j) {
      z.vertices.push_back(pts[j]);
      z.origin.push_back(UnitEdgeOrigin{e, from_smaller ? j : steps - 1 - j});
    }
  }
  std::set<LatticePoint> seen(z.vertices.begin(), z.vertices.end());
  if (seen.size() != z.vertices.size()) {
    throw DegenerateAfterZigzag("staircase boundary of polygon " + poly.id + " touches itself");
  }
  long area2 = twice_signed_area(z.vertices);
  if (area2 <= 0) throw DegenerateAfterZigzag("staircase boundary of polygon " + poly.id + " encloses no area");
  z.squares = enclosed_squares(z.vertices);
  if (static_cast<long>(z.squares.size()) * 2 != area2 || !edge_connected(z.squares)) {
    throw DegenerateAfterZigzag("staircase region of polygon " + poly.id + " is not a connected union of squares");
  }
  return z;
}

}  // namespace

ZigzagPolygonSet zigzag(const PolygonPrototileSet& set) {
  ZigzagPolygonSet out;
  out.source = set;
  for (const auto& p : set.polys) out.polys.push_back(zigzag_one(p));
  return out;
}

PolygonPrototileSet ZigzagPolygonSet::as_polygon_set() const {
  PolygonPrototileSet out;
  out.name = source.name;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    PolygonPrototile p;
    p.id = polys[i].id;
    for (const auto& v : polys[i].vertices) p.vertices.push_back(Point{Rational(v.x), Rational(v.y)});
    for (const auto& o : polys[i].origin) p.edge_colors.push_back(source.polys[i].edge_colors[o.edge]);
    out.polys.push_back(std::move(p));
  }
  return out;
}

std::size_t EncodingMap::seam_count() const {
  return static_cast<std::size_t>(
      std::count_if(colors.begin(), colors.end(), [](const auto& kv) { return kv.second.seam; }));
}

Encoding encode_as_wang(const ZigzagPolygonSet& zset) {
  Encoding out;
  out.tiles.name = zset.source.name;
  using UnitEdge = std::pair<LatticePoint, LatticePoint>;
  for (std::size_t pi = 0; pi < zset.polys.size(); ++pi) {
    const auto& z = zset.polys[pi];
    const auto& src = zset.source.polys[pi];
    long mx = z.vertices[0].x, my = z.vertices[0].y;
    for (const auto& v : z.vertices) {
      mx = std::min(mx, v.x);
      my = std::min(my, v.y);
    }
    std::map<UnitEdge, Color> boundary;
    for (std::size_t j = 0; j < z.vertices.size(); ++j) {
      LatticePoint p = z.vertices[j];
      LatticePoint q = z.vertices[(j + 1) % z.vertices.size()];
      if (q < p) std::swap(p, q);
      const auto& o = z.origin[j];
      LatticePoint a = lattice(src.edge_start(o.edge), src.id);
      LatticePoint b = lattice(src.edge_end(o.edge), src.id);
      if (b < a) std::swap(a, b);
      ColorOrigin co{false, "", src.edge_colors[o.edge], b.x - a.x, b.y - a.y, o.offset};
      Color token = "e:" + co.color + ":" + std::to_string(co.dir_x) + "," + std::to_string(co.dir_y) + ":" +
                    std::to_string(co.index);
      boundary[{p, q}] = token;
      out.map.colors.emplace(token, co);
    }
    std::set<LatticePoint> region(z.squares.begin(), z.squares.end());
    auto seam = [&](char axis, long x, long y) {
      Color token = "s:" + z.id + ":" + axis + ":" + std::to_string(x - mx) + "," + std::to_string(y - my);
      out.map.colors.emplace(token, ColorOrigin{true, token, "", 0, 0, 0});
      return token;
    };
    auto side = [&](LatticePoint neighbor, char axis, LatticePoint lo, LatticePoint hi) {
      if (region.count(neighbor)) return seam(axis, lo.x, lo.y);
      auto it = boundary.find({lo, hi});
      if (it == boundary.end()) throw TilingError("internal: unit edge of polygon " + z.id + " has no boundary color");
      return it->second;
    };
    for (const auto& s : z.squares) {
      const long x = s.x, y = s.y;
      WangTile t;
      t.id = z.id + ":" + std::to_string(x - mx) + "," + std::to_string(y - my);
      t.bottom = side({x, y - 1}, 'h', {x, y}, {x + 1, y});
      t.top = side({x, y + 1}, 'h', {x, y + 1}, {x + 1, y + 1});
      t.left = side({x - 1, y}, 'v', {x, y}, {x, y + 1});
      t.right = side({x + 1, y}, 'v', {x + 1, y}, {x + 1, y + 1});
      out.map.tiles.emplace(t.id, TileOrigin{z.id, x - mx, y - my});
      out.tiles.tiles.push_back(std::move(t));
    }
  }
  return out;
}

Squareified squareify(const PolygonPrototileSet& set) {
  Squareified out;
  auto scaled = scale_to_integral(set);
  out.scale = scaled.scale;
  out.zigzagged = zigzag(scaled.set);
  out.encoding = encode_as_wang(out.zigzagged);
  return out;
}

std::string serialize_encoding_map(const EncodingMap& map) {
  std::string out;
  for (const auto& [id, o] : map.tiles) {
    out += "tile " + id + " poly=" + o.poly + " offset=" + std::to_string(o.dx) + "," + std::to_string(o.dy) + "\n";
  }
  for (const auto& [token, o] : map.colors) {
    if (o.seam) {
      out += "color " + token + " seam\n";
    } else {
      out += "color " + token + " edge=" + o.color + " dir=" + std::to_string(o.dir_x) + "," +
             std::to_string(o.dir_y) + " index=" + std::to_string(o.index) + "\n";
    }
  }
  return out;
}

}  // namespace tilenorm
