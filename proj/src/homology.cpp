#include "tilenorm/homology.hpp"

#include "tilenorm/errors.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace tilenorm {

std::string OneCell::label() const {
  if (from_polygon) return to_string(dx) + "," + to_string(dy) + ":" + color;
  return std::string(axis == Axis::horizontal ? "H" : "V") + ":" + color;
}

APComplex build_ap_complex(const WangTileSet& set) {
  APComplex cx;
  cx.cells2 = set.ids();
  cx.max_vertices = 4;
  std::map<std::pair<Axis, Color>, std::size_t> index;
  cx.side_cells.resize(set.size());
  for (std::size_t t = 0; t < set.size(); ++t) {
    for (Side s : kSides) {
      auto key = std::make_pair(axis_of(s), set.tiles[t].color(s));
      auto [it, inserted] = index.try_emplace(key, cx.cells1.size());
      if (inserted) cx.cells1.push_back(OneCell{key.second, key.first, false, 0, 0});
      cx.side_cells[t][static_cast<std::size_t>(s)] = it->second;
    }
  }
  // Counter-clockwise boundary: bottom runs +x, right runs +y, top and left
  // run against the 1-cell orientation.
  cx.boundary = Matrix(cx.cells1.size(), set.size());
  for (std::size_t t = 0; t < set.size(); ++t) {
    const auto& sc = cx.side_cells[t];
    cx.boundary(sc[static_cast<std::size_t>(Side::bottom)], t) += 1;
    cx.boundary(sc[static_cast<std::size_t>(Side::top)], t) -= 1;
    cx.boundary(sc[static_cast<std::size_t>(Side::right)], t) += 1;
    cx.boundary(sc[static_cast<std::size_t>(Side::left)], t) -= 1;
  }
  return cx;
}

namespace {

bool lex_less(const Point& a, const Point& b) { return std::tie(a.x, a.y) < std::tie(b.x, b.y); }

}  // namespace

APComplex build_ap_complex(const PolygonPrototileSet& set) {
  APComplex cx;
  cx.cells2 = set.ids();
  cx.max_vertices = 0;
  // Translate classes: same color and same direction vector once both
  // segments are oriented from their lexicographically smaller endpoint.
  std::map<std::tuple<Color, Rational, Rational>, std::size_t> index;
  struct Incidence {
    std::size_t cell;
    std::size_t poly;
    int sign;
  };
  std::vector<Incidence> incidences;
  for (std::size_t p = 0; p < set.polys.size(); ++p) {
    const auto& poly = set.polys[p];
    cx.max_vertices = std::max(cx.max_vertices, poly.vertices.size());
    for (std::size_t e = 0; e < poly.edge_count(); ++e) {
      const Point& a = poly.edge_start(e);
      const Point& b = poly.edge_end(e);
      bool forward = lex_less(a, b);
      const Point& lo = forward ? a : b;
      const Point& hi = forward ? b : a;
      auto key = std::make_tuple(poly.edge_colors[e], Rational(hi.x - lo.x), Rational(hi.y - lo.y));
      auto [it, inserted] = index.try_emplace(key, cx.cells1.size());
      if (inserted) {
        cx.cells1.push_back(OneCell{poly.edge_colors[e], Axis::horizontal, true, std::get<1>(key), std::get<2>(key)});
      }
      incidences.push_back(Incidence{it->second, p, forward ? 1 : -1});
    }
  }
  cx.boundary = Matrix(cx.cells1.size(), set.polys.size());
  for (const auto& inc : incidences) cx.boundary(inc.cell, inc.poly) += inc.sign;
  return cx;
}

std::vector<SwitchingRule> switching_rules(const APComplex& cx) {
  std::vector<SwitchingRule> rules;
  rules.reserve(cx.cells1.size());
  for (std::size_t e = 0; e < cx.cells1.size(); ++e) {
    SwitchingRule rule;
    rule.cell = e;
    for (std::size_t t = 0; t < cx.cells2.size(); ++t) {
      const Rational& v = cx.boundary(e, t);
      if (sgn(v) != 0) rule.terms.emplace_back(t, v.get_num());
    }
    rules.push_back(std::move(rule));
  }
  return rules;
}

std::string format_rule(const APComplex& cx, const SwitchingRule& rule) {
  std::string out = "edge " + cx.cells1[rule.cell].label() + " :";
  if (rule.terms.empty()) return out + " 0 = 0";
  for (const auto& [t, coeff] : rule.terms) {
    out += " ";
    out += sgn(coeff) > 0 ? "+" : "";
    out += coeff.get_str() + "*" + cx.cells2[t];
  }
  return out + " = 0";
}

std::vector<Vector> cycle_space_basis(const APComplex& cx) { return kernel_basis(cx.boundary); }

bool is_cycle(const APComplex& cx, const Vector& chain) {
  if (chain.size() != cx.cells2.size()) {
    throw DimensionMismatch("chain has " + std::to_string(chain.size()) + " coordinates, complex has " +
                            std::to_string(cx.cells2.size()) + " 2-cells");
  }
  for (const auto& v : cx.boundary.multiply(chain)) {
    if (sgn(v) != 0) return false;
  }
  return true;
}

ConeWitness nonneg_cycle_exists(const APComplex& cx) {
  const std::size_t m = cx.cells1.size();
  const std::size_t n = cx.cells2.size();
  Matrix a = cx.boundary;
  a.append_row(Vector(n, Rational(1)));
  Vector b(m + 1, Rational(0));
  b[m] = 1;
  Feasibility f = solve_feasibility(a, b);
  ConeWitness out;
  out.nonempty = f.feasible;
  if (f.feasible) {
    out.witness = std::move(f.point);
    return out;
  }
  // Farkas (z, t) with z^T d + t >= 0 and t < 0; rescale so that t = -1.
  Rational t = f.farkas[m];
  out.certificate.assign(m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) out.certificate[i] = f.farkas[i] / -t;
  return out;
}

bool verify_empty_cone_certificate(const APComplex& cx, const Vector& z) {
  if (z.size() != cx.cells1.size()) return false;
  Vector cols = cx.boundary.left_multiply(z);
  return std::all_of(cols.begin(), cols.end(), [](const Rational& v) { return v >= 1; });
}

namespace {

Vector normalize_to_simplex(const Vector& ray) {
  Rational s = 0;
  for (const auto& v : ray) s += v;
  Vector out(ray.size());
  for (std::size_t i = 0; i < ray.size(); ++i) out[i] = ray[i] / s;
  return out;
}

}  // namespace

ConeDescription simplex_extreme_points(const APComplex& cx, const Budget& budget) {
  ConeDescription out;
  out.basis = cycle_space_basis(cx);
  out.kernel_dim = out.basis.size();
  if (out.kernel_dim == 0) return out;
  RayEnumeration rays = nonneg_kernel_rays(cx.boundary, budget.max_rays);
  out.complete = rays.complete;
  for (const auto& r : rays.rays) out.extreme_points.push_back(normalize_to_simplex(r));
  std::sort(out.extreme_points.begin(), out.extreme_points.end());
  return out;
}

bool is_simplex_vertex(const APComplex& cx, const Vector& point) {
  if (point.size() != cx.cells2.size()) return false;
  Rational s = 0;
  for (const auto& v : point) {
    if (sgn(v) < 0) return false;
    s += v;
  }
  if (s != 1) return false;
  return is_extreme_ray(cx.boundary, point);
}

}  // namespace tilenorm
