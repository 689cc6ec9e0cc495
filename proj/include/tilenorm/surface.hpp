#pragma once

#include "tilenorm/budget.hpp"
#include "tilenorm/homology.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tilenorm {

struct SquareCopy {
  std::size_t copy_id = 0;
  std::size_t tile = 0;
  int sign = 1;  // +1 when the copy keeps the orientation of its prototile
};

// Slots are numbered 4 * copy + side, so slot order is (copy, top < bottom < left < right).
inline std::size_t slot_index(std::size_t copy, Side s) { return 4 * copy + static_cast<std::size_t>(s); }
inline std::size_t slot_copy(std::size_t slot) { return slot / 4; }
inline Side slot_side(std::size_t slot) { return static_cast<Side>(slot % 4); }

// Induced boundary direction of a side relative to its 1-cell orientation.
int slot_polarity(Side side, int sign);

// Corners are numbered 4 * copy + k with k = 0 bottom-left, 1 bottom-right,
// 2 top-right, 3 top-left. Each slot runs from its low corner to its high
// corner along the 1-cell orientation; gluing identifies low with low and
// high with high whether or not the copies share orientation.
std::pair<std::size_t, std::size_t> slot_corners(std::size_t slot);

struct SurfaceComponent {
  std::vector<std::size_t> copies;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  long euler = 0;
};

struct GluedSurface {
  std::vector<SquareCopy> copies;
  std::vector<std::size_t> mate;  // partner slot of every slot

  // Derived by finalize().
  std::vector<std::size_t> corner_class;       // class id per corner
  std::vector<std::size_t> class_sizes;        // corners per class
  std::vector<SurfaceComponent> components;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  long euler = 0;

  // Computes corner classes, components and counts from copies + mate.
  void finalize();
  std::vector<std::pair<std::size_t, std::size_t>> gluings() const;
  bool all_positive() const;
};

// Chain sum_j (sum of signs of copies of tile j) p_j.
Vector surface_cycle(const GluedSurface& s, std::size_t tile_count);

// Empty when the surface is a valid closed oriented cover with consistent
// counts; otherwise a list of violated properties.
std::vector<std::string> check_surface(const APComplex& cx, const GluedSurface& s);

// Copies for an integral chain: |c_j| copies of tile j with sign of c_j.
std::vector<SquareCopy> copies_for(const Vector& c);

// Greedy pairing of the prescribed copies, first free partner in slot order.
GluedSurface build_surface(const APComplex& cx, const Vector& c);

long euler_characteristic(const GluedSurface& s);

enum class SearchStatus { exact, upper_bound };

struct NormCertificate {
  Vector cycle;
  long value = 0;  // -max chi over the surfaces searched
  std::optional<GluedSurface> witness;
  SearchStatus status = SearchStatus::exact;
  std::uint64_t nodes = 0;
};

// Branch and bound over all complete pairings of the prescribed copy
// multiset. Budget exhaustion yields status upper_bound with the best
// surface found so far.
NormCertificate thurston_norm(const APComplex& cx, const Vector& c, const Budget& budget = {});

inline constexpr std::size_t kBruteForceSlotCap = 32;

// Exhaustive enumeration of every admissible perfect pairing. Throws
// TooLarge beyond kBruteForceSlotCap slots.
NormCertificate thurston_norm_bruteforce(const APComplex& cx, const Vector& c);

enum class TorusOutcome { found, none, budget_exhausted };

struct TorusSearch {
  TorusOutcome outcome = TorusOutcome::none;
  std::optional<GluedSurface> surface;
  std::uint64_t nodes = 0;
};

// Searches pairings of all-positive copies in which every corner class has
// exactly four corners (a disjoint union of flat tori).
TorusSearch find_torus(const APComplex& cx, const Vector& c, const Budget& budget = {});

struct PeriodicTiling {
  // Period lattice spanned by (k, 0) and (s, l), 0 <= s < k.
  long k = 1;
  long l = 1;
  long s = 0;
  std::vector<std::size_t> cells;  // tile index at (x, y) stored at y * k + x

  std::size_t at(long x, long y) const;  // any integer position, reduced mod the lattice
};

// Develops one all-positive, all-valence-4 component into the plane.
PeriodicTiling extract_periodic_tiling(const APComplex& cx, const GluedSurface& s, std::size_t component = 0);

// Every horizontal and vertical adjacency of the domain matches, wrap-around included.
bool verify_periodic_tiling(const WangTileSet& set, const PeriodicTiling& t);

Vector ev_of_periodic(const PeriodicTiling& t, std::size_t tile_count);

}  // namespace tilenorm
