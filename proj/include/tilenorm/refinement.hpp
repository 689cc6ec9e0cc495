#pragma once

#include "tilenorm/asymptotic.hpp"
#include "tilenorm/budget.hpp"
#include "tilenorm/homology.hpp"
#include "tilenorm/surface.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace tilenorm {

// A legal tiling of the (2p+1) x (2p+1) block centered at the origin.
struct Pattern {
  long p = 1;
  std::vector<std::size_t> cells;  // row-major from (-p, -p)

  long width() const { return 2 * p + 1; }
  std::size_t at(long x, long y) const { return cells[static_cast<std::size_t>((y + p) * width() + (x + p))]; }
  std::size_t center() const { return at(0, 0); }
  bool operator==(const Pattern&) const = default;
};

struct PatternSet {
  long p = 1;
  std::vector<std::vector<Pattern>> by_center;  // indexed by tile
  bool complete = true;
  std::uint64_t nodes = 0;

  std::size_t total() const;
  bool empty() const { return total() == 0; }
};

// Backtracking with forward checking, patterns listed per center in
// row-major lexicographic order.
PatternSet enumerate_patterns(const WangTileSet& set, long p, const Budget& budget = {});

bool is_legal_pattern(const WangTileSet& set, const Pattern& pat);

// Independent count of all legal (2p+1)-blocks by a row transfer matrix.
Integer count_patterns_by_rows(const WangTileSet& set, long p);

struct WpTileSet {
  WangTileSet tiles;                // tile (j, l) has id "<id of j>@<l>", l from 1
  std::vector<std::size_t> center;  // original tile of each supertile
};

// Right/left colors are the column strips -p+1..p / -p..p-1, top/bottom the
// row strips -p+1..p / -p..p-1, so two supertiles abut exactly when their
// patterns agree on the overlap.
WpTileSet build_wp_tileset(const WangTileSet& set, const PatternSet& ps);

Vector project_cycle(const PatternSet& ps, const Vector& cwp);

enum class Membership { member, not_member, budget_exhausted };

struct ProjectedCone {
  Membership status = Membership::budget_exhausted;
  std::size_t patterns = 0;
  Vector witness;       // over supertiles
  Vector certificate;   // Farkas vector for the stacked system
};

ProjectedCone cycle_in_projected_cone(const WangTileSet& set, const Vector& c, long p, const Budget& budget = {});
ProjectedCone cycle_in_projected_cone(const WangTileSet& set, const PatternSet& ps, const Vector& c,
                                      const Budget& budget = {});

// x >= 0, a cycle of the supertile complex, projecting to c.
bool verify_projected_witness(const WangTileSet& set, const PatternSet& ps, const Vector& c, const Vector& x);

enum class VerdictKind { cannot_tile, tiles_periodically, undecided };
enum class Obstruction { none, empty_cone, no_pattern };

const char* verdict_name(VerdictKind k);

struct Evidence {
  long p = 1;
  std::size_t patterns = 0;
  bool complete = true;
  std::vector<std::optional<bool>> cone_member;  // per simplex extreme point
};

struct Verdict {
  VerdictKind kind = VerdictKind::undecided;
  Obstruction obstruction = Obstruction::none;
  Vector empty_cone_certificate;
  long no_pattern_p = 0;

  std::optional<PeriodicTiling> tiling;
  Vector periodic_cycle;  // integral cycle whose torus unrolled into the tiling

  ConeDescription cone;
  std::vector<Evidence> evidence;
  std::vector<NormTable> norm_tables;  // first kEvidenceNormTables extreme points
  long max_p = 0;               // largest radius whose patterns were enumerated
  std::size_t max_weight = 0;   // largest cycle weight fully searched for tori
};

inline constexpr std::size_t kEvidenceNormTables = 4;

struct TileabilityOptions {
  long max_p = 2;
  long max_n = 2;
  Budget budget;
};

Verdict tileability(const WangTileSet& set, const TileabilityOptions& opts = {});

// Periodic-tiling search alone: non-negative integral cycles by increasing
// l1 weight, lexicographic within a weight.
struct PeriodicSearch {
  std::optional<PeriodicTiling> tiling;
  Vector cycle;
  std::size_t max_weight = 0;
};

PeriodicSearch search_periodic(const WangTileSet& set, const APComplex& cx, const Budget& budget);

}  // namespace tilenorm
