#pragma once

#include "tilenorm/budget.hpp"
#include "tilenorm/linalg.hpp"
#include "tilenorm/tileset.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace tilenorm {

enum class Axis { horizontal, vertical };

inline Axis axis_of(Side s) { return (s == Side::top || s == Side::bottom) ? Axis::horizontal : Axis::vertical; }

// A 1-cell of the complex. Wang complexes identify edges by (axis, color);
// polygon complexes by (color, direction vector), the direction taken from
// the lexicographically smaller endpoint to the larger one.
struct OneCell {
  Color color;
  Axis axis = Axis::horizontal;
  bool from_polygon = false;
  Rational dx = 0;
  Rational dy = 0;

  std::string label() const;
};

struct APComplex {
  std::vector<std::string> cells2;
  std::vector<OneCell> cells1;
  Matrix boundary;               // rows: cells1, columns: cells2
  std::size_t max_vertices = 4;  // vertex count of the largest prototile

  // Wang complexes only: 1-cell index of each side, indexed by Side.
  std::vector<std::array<std::size_t, 4>> side_cells;

  bool is_wang() const { return !side_cells.empty(); }
  std::size_t tile_count() const { return cells2.size(); }
};

APComplex build_ap_complex(const WangTileSet& set);
APComplex build_ap_complex(const PolygonPrototileSet& set);

struct SwitchingRule {
  std::size_t cell = 0;
  std::vector<std::pair<std::size_t, Integer>> terms;  // (tile, coefficient), non-zero only
};

std::vector<SwitchingRule> switching_rules(const APComplex& cx);
// "edge H:a : -1*T +1*U = 0", or "edge H:a : 0 = 0" for an empty rule.
std::string format_rule(const APComplex& cx, const SwitchingRule& rule);

std::vector<Vector> cycle_space_basis(const APComplex& cx);

// Throws DimensionMismatch when the chain length differs from the 2-cell count.
bool is_cycle(const APComplex& cx, const Vector& chain);

struct ConeWitness {
  bool nonempty = false;
  Vector witness;      // point of the simplex when nonempty
  Vector certificate;  // z over 1-cells with z^T d >= 1 column-wise when empty
};

// Feasibility of  d c = 0, c >= 0, sum c = 1  by exact simplex.
ConeWitness nonneg_cycle_exists(const APComplex& cx);

// z^T d >= 1 on every column: no non-zero non-negative cycle exists.
bool verify_empty_cone_certificate(const APComplex& cx, const Vector& z);

struct ConeDescription {
  std::size_t kernel_dim = 0;
  std::vector<Vector> basis;
  std::vector<Vector> extreme_points;  // vertices of the simplex, sorted
  bool complete = true;

  bool cone_empty() const { return complete && extreme_points.empty(); }
};

ConeDescription simplex_extreme_points(const APComplex& cx, const Budget& budget = {});

// Non-negative, coordinate sum 1, a cycle, and a vertex of the simplex.
bool is_simplex_vertex(const APComplex& cx, const Vector& point);

}  // namespace tilenorm
