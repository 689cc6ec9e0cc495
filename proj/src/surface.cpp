#include "tilenorm/surface.hpp"

#include "tilenorm/errors.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <queue>

namespace tilenorm {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::size_t group_of(const APComplex& cx, const std::vector<SquareCopy>& copies, std::size_t slot) {
  return cx.side_cells[copies[slot_copy(slot)].tile][static_cast<std::size_t>(slot_side(slot))];
}

void require_wang(const APComplex& cx) {
  if (!cx.is_wang()) throw TilingError("surface search needs a Wang complex");
}

void require_integral_chain(const APComplex& cx, const Vector& c) {
  if (c.size() != cx.tile_count()) {
    throw DimensionMismatch("cycle has " + std::to_string(c.size()) + " coordinates, complex has " +
                            std::to_string(cx.tile_count()) + " tiles");
  }
  for (const auto& v : c) {
    if (!is_integral(v)) throw NotIntegral("cycle coordinate " + to_string(v) + " is not an integer");
  }
}

bool is_zero(const Vector& c) {
  return std::all_of(c.begin(), c.end(), [](const Rational& v) { return sgn(v) == 0; });
}

}  // namespace

int slot_polarity(Side side, int sign) {
  bool positive_side = side == Side::bottom || side == Side::right;
  return (positive_side == (sign > 0)) ? 1 : -1;
}

std::pair<std::size_t, std::size_t> slot_corners(std::size_t slot) {
  const std::size_t base = 4 * slot_copy(slot);
  switch (slot_side(slot)) {
    case Side::top: return {base + 3, base + 2};
    case Side::bottom: return {base + 0, base + 1};
    case Side::left: return {base + 0, base + 3};
    case Side::right: return {base + 1, base + 2};
  }
  return {base, base};
}

void GluedSurface::finalize() {
  const std::size_t f = copies.size();
  DisjointSets corners(4 * f);
  DisjointSets comps(f);
  for (std::size_t s = 0; s < mate.size(); ++s) {
    std::size_t t = mate[s];
    if (t == kNone || t < s) continue;
    auto [l1, h1] = slot_corners(s);
    auto [l2, h2] = slot_corners(t);
    corners.unite(l1, l2);
    corners.unite(h1, h2);
    comps.unite(slot_copy(s), slot_copy(t));
  }
  corner_class.assign(4 * f, 0);
  class_sizes.clear();
  std::map<std::size_t, std::size_t> class_id;
  for (std::size_t c = 0; c < 4 * f; ++c) {
    auto [it, inserted] = class_id.try_emplace(corners.find(c), class_sizes.size());
    if (inserted) class_sizes.push_back(0);
    corner_class[c] = it->second;
    ++class_sizes[it->second];
  }
  components.clear();
  std::map<std::size_t, std::size_t> comp_id;
  for (std::size_t c = 0; c < f; ++c) {
    auto [it, inserted] = comp_id.try_emplace(comps.find(c), components.size());
    if (inserted) components.emplace_back();
    components[it->second].copies.push_back(c);
  }
  for (auto& comp : components) {
    std::vector<std::size_t> seen;
    for (auto c : comp.copies) {
      for (std::size_t k = 0; k < 4; ++k) seen.push_back(corner_class[4 * c + k]);
    }
    std::sort(seen.begin(), seen.end());
    comp.vertices = static_cast<std::size_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
    comp.faces = comp.copies.size();
    comp.edges = 2 * comp.faces;
    comp.euler = static_cast<long>(comp.vertices) - static_cast<long>(comp.edges) + static_cast<long>(comp.faces);
  }
  faces = f;
  std::size_t glued = 0;
  for (std::size_t s = 0; s < mate.size(); ++s) {
    if (mate[s] != kNone && mate[s] > s) ++glued;
  }
  edges = glued;
  vertices = class_sizes.size();
  euler = static_cast<long>(vertices) - static_cast<long>(edges) + static_cast<long>(faces);
}

std::vector<std::pair<std::size_t, std::size_t>> GluedSurface::gluings() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t s = 0; s < mate.size(); ++s) {
    if (mate[s] != kNone && mate[s] > s) out.emplace_back(s, mate[s]);
  }
  return out;
}

bool GluedSurface::all_positive() const {
  return std::all_of(copies.begin(), copies.end(), [](const SquareCopy& c) { return c.sign > 0; });
}

Vector surface_cycle(const GluedSurface& s, std::size_t tile_count) {
  Vector c(tile_count, Rational(0));
  for (const auto& copy : s.copies) c[copy.tile] += copy.sign;
  return c;
}

std::vector<std::string> check_surface(const APComplex& cx, const GluedSurface& s) {
  std::vector<std::string> problems;
  const std::size_t f = s.copies.size();
  if (s.mate.size() != 4 * f) {
    problems.push_back("pairing does not cover every slot");
    return problems;
  }
  for (std::size_t i = 0; i < f; ++i) {
    if (s.copies[i].copy_id != i) problems.push_back("copy ids are not sequential");
    if (s.copies[i].tile >= cx.tile_count()) problems.push_back("copy refers to an unknown tile");
    if (s.copies[i].sign != 1 && s.copies[i].sign != -1) problems.push_back("copy sign is not +1 or -1");
  }
  if (!problems.empty()) return problems;
  for (std::size_t a = 0; a < s.mate.size(); ++a) {
    std::size_t b = s.mate[a];
    if (b == kNone || b >= s.mate.size() || b == a || s.mate[b] != a) {
      problems.push_back("slot " + std::to_string(a) + " is not perfectly matched");
      continue;
    }
    if (group_of(cx, s.copies, a) != group_of(cx, s.copies, b)) {
      problems.push_back("slots " + std::to_string(a) + "," + std::to_string(b) + " differ in axis or color");
    }
    int pa = slot_polarity(slot_side(a), s.copies[slot_copy(a)].sign);
    int pb = slot_polarity(slot_side(b), s.copies[slot_copy(b)].sign);
    if (pa + pb != 0) problems.push_back("slots " + std::to_string(a) + "," + std::to_string(b) + " agree in direction");
  }
  if (s.edges != 2 * s.faces) problems.push_back("E != 2F");
  std::size_t corner_total = 0;
  long curvature = 0;
  for (auto k : s.class_sizes) {
    corner_total += k;
    curvature += 4 - static_cast<long>(k);
  }
  if (corner_total != 4 * s.faces) problems.push_back("corner classes do not cover 4F corners");
  if (curvature != 4 * s.euler) problems.push_back("sum (4 - k_v) != 4 chi");
  if (s.euler != static_cast<long>(s.vertices) - static_cast<long>(s.edges) + static_cast<long>(s.faces)) {
    problems.push_back("chi != V - E + F");
  }
  long total = 0;
  for (const auto& comp : s.components) {
    total += comp.euler;
    if (comp.euler % 2 != 0) problems.push_back("component with odd Euler characteristic");
  }
  if (total != s.euler) problems.push_back("chi is not the sum over components");
  return problems;
}

std::vector<SquareCopy> copies_for(const Vector& c) {
  std::vector<SquareCopy> copies;
  for (std::size_t j = 0; j < c.size(); ++j) {
    long n = c[j].get_num().get_si();
    int sign = n < 0 ? -1 : 1;
    for (long k = 0; k < std::abs(n); ++k) copies.push_back(SquareCopy{copies.size(), j, sign});
  }
  return copies;
}

GluedSurface build_surface(const APComplex& cx, const Vector& c) {
  require_wang(cx);
  require_integral_chain(cx, c);
  if (is_zero(c)) throw ZeroCycle("cannot build a surface for the zero cycle");
  GluedSurface s;
  s.copies = copies_for(c);
  const std::size_t slots = 4 * s.copies.size();
  s.mate.assign(slots, kNone);
  for (std::size_t a = 0; a < slots; ++a) {
    if (s.mate[a] != kNone) continue;
    std::size_t ga = group_of(cx, s.copies, a);
    int pa = slot_polarity(slot_side(a), s.copies[slot_copy(a)].sign);
    for (std::size_t b = a + 1; b < slots; ++b) {
      if (s.mate[b] != kNone || group_of(cx, s.copies, b) != ga) continue;
      if (slot_polarity(slot_side(b), s.copies[slot_copy(b)].sign) != -pa) continue;
      s.mate[a] = b;
      s.mate[b] = a;
      break;
    }
    if (s.mate[a] == kNone) {
      throw NotACycle("slot " + std::to_string(slot_copy(a)) + "." + side_name(slot_side(a)) + " on 1-cell " +
                      cx.cells1[ga].label() + " has no partner");
    }
  }
  s.finalize();
  return s;
}

long euler_characteristic(const GluedSurface& s) {
  return static_cast<long>(s.vertices) - static_cast<long>(s.edges) + static_cast<long>(s.faces);
}

namespace {

// Depth-first search over pairings with an undo log on the corner
// union-find. Maximizes the number of corner classes.
class PairingSearch {
 public:
  PairingSearch(const APComplex& cx, std::vector<SquareCopy> copies, bool flat_only, std::uint64_t node_budget)
      : copies_(std::move(copies)), flat_only_(flat_only), node_budget_(node_budget) {
    const std::size_t slots = 4 * copies_.size();
    const std::size_t corners = 4 * copies_.size();
    mate_.assign(slots, kNone);
    candidates_.resize(slots);
    for (std::size_t a = 0; a < slots; ++a) {
      std::size_t ga = group_of(cx, copies_, a);
      int pa = slot_polarity(slot_side(a), copies_[slot_copy(a)].sign);
      for (std::size_t b = a + 1; b < slots; ++b) {
        if (group_of(cx, copies_, b) != ga) continue;
        if (slot_polarity(slot_side(b), copies_[slot_copy(b)].sign) != -pa) continue;
        candidates_[a].push_back(b);
      }
    }
    parent_.resize(corners);
    std::iota(parent_.begin(), parent_.end(), 0);
    size_.assign(corners, 1);
    open_.assign(corners, 2);
    open_classes_ = corners;
    open_corners_ = corners;
    bool same_sign = std::all_of(copies_.begin(), copies_.end(), [&](const SquareCopy& c) {
      return c.sign == copies_.front().sign;
    });
    // Translation-only gluings force every cone angle to a multiple of 2 pi.
    min_class_ = same_sign ? 4 : 2;
  }

  // Returns true if the search finished within budget.
  bool run(bool stop_at_first) {
    stop_at_first_ = stop_at_first;
    dfs(0);
    return !exhausted_;
  }

  bool found() const { return best_ != kNone; }
  std::size_t best_vertices() const { return best_; }
  const std::vector<std::size_t>& best_mate() const { return best_mate_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  struct Change {
    enum Kind { parent, size, open, counters } kind;
    std::size_t index;
    std::size_t old_value;
    std::size_t old_closed, old_open_classes, old_open_corners;
  };

  std::size_t find(std::size_t x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  void save_counters() {
    trail_.push_back(Change{Change::counters, 0, 0, closed_, open_classes_, open_corners_});
  }

  void set(std::vector<std::size_t>& v, Change::Kind kind, std::size_t i, std::size_t value) {
    trail_.push_back(Change{kind, i, v[i], 0, 0, 0});
    v[i] = value;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    save_counters();
    set(parent_, Change::parent, b, a);
    set(size_, Change::size, a, size_[a] + size_[b]);
    set(open_, Change::open, a, open_[a] + open_[b]);
    --open_classes_;
  }

  void close_incidence(std::size_t corner) {
    std::size_t r = find(corner);
    save_counters();
    set(open_, Change::open, r, open_[r] - 1);
    if (open_[r] == 0) {
      ++closed_;
      --open_classes_;
      open_corners_ -= size_[r];
    }
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const Change& c = trail_.back();
      switch (c.kind) {
        case Change::parent: parent_[c.index] = c.old_value; break;
        case Change::size: size_[c.index] = c.old_value; break;
        case Change::open: open_[c.index] = c.old_value; break;
        case Change::counters:
          closed_ = c.old_closed;
          open_classes_ = c.old_open_classes;
          open_corners_ = c.old_open_corners;
          break;
      }
      trail_.pop_back();
    }
  }

  bool flat_violation(std::size_t corner) const {
    std::size_t r = find(corner);
    if (size_[r] > 4) return true;
    return open_[r] == 0 && size_[r] != 4;
  }

  std::size_t bound() const { return closed_ + std::min(open_classes_, open_corners_ / min_class_); }

  void dfs(std::size_t from) {
    if (exhausted_ || (stop_at_first_ && found())) return;
    std::size_t a = from;
    while (a < mate_.size() && mate_[a] != kNone) ++a;
    if (a == mate_.size()) {
      if (best_ == kNone || closed_ > best_) {
        best_ = closed_;
        best_mate_ = mate_;
      }
      return;
    }
    for (std::size_t b : candidates_[a]) {
      if (mate_[b] != kNone) continue;
      if (++nodes_ > node_budget_) {
        exhausted_ = true;
        return;
      }
      std::size_t mark = trail_.size();
      auto [l1, h1] = slot_corners(a);
      auto [l2, h2] = slot_corners(b);
      unite(l1, l2);
      unite(h1, h2);
      close_incidence(l1);
      close_incidence(h1);
      close_incidence(l2);
      close_incidence(h2);
      mate_[a] = b;
      mate_[b] = a;
      bool prune = flat_only_ && (flat_violation(l1) || flat_violation(h1));
      if (!prune && (best_ == kNone || bound() > best_)) dfs(a + 1);
      mate_[a] = kNone;
      mate_[b] = kNone;
      undo(mark);
      if (exhausted_ || (stop_at_first_ && found())) return;
    }
  }

  std::vector<SquareCopy> copies_;
  bool flat_only_;
  std::uint64_t node_budget_;
  bool stop_at_first_ = false;
  bool exhausted_ = false;
  std::uint64_t nodes_ = 0;

  std::vector<std::size_t> mate_;
  std::vector<std::vector<std::size_t>> candidates_;
  std::vector<std::size_t> parent_, size_, open_;
  std::size_t closed_ = 0;
  std::size_t open_classes_ = 0;
  std::size_t open_corners_ = 0;
  std::size_t min_class_ = 2;
  std::vector<Change> trail_;

  std::size_t best_ = kNone;
  std::vector<std::size_t> best_mate_;
};

GluedSurface surface_from(std::vector<SquareCopy> copies, std::vector<std::size_t> mate) {
  GluedSurface s;
  s.copies = std::move(copies);
  s.mate = std::move(mate);
  s.finalize();
  return s;
}

void require_cycle(const APComplex& cx, const Vector& c) {
  if (!is_cycle(cx, c)) throw NotACycle("chain " + format_cycle(c, cx.cells2) + " is not a cycle");
}

}  // namespace

NormCertificate thurston_norm(const APComplex& cx, const Vector& c, const Budget& budget) {
  require_wang(cx);
  require_integral_chain(cx, c);
  NormCertificate cert;
  cert.cycle = c;
  if (is_zero(c)) return cert;
  require_cycle(cx, c);
  auto copies = copies_for(c);
  PairingSearch search(cx, copies, false, budget.nodes);
  bool finished = search.run(false);
  cert.nodes = search.nodes();
  cert.status = finished ? SearchStatus::exact : SearchStatus::upper_bound;
  GluedSurface s = search.found() ? surface_from(copies, search.best_mate()) : build_surface(cx, c);
  cert.value = -s.euler;
  cert.witness = std::move(s);
  return cert;
}

NormCertificate thurston_norm_bruteforce(const APComplex& cx, const Vector& c) {
  require_wang(cx);
  require_integral_chain(cx, c);
  NormCertificate cert;
  cert.cycle = c;
  if (is_zero(c)) return cert;
  auto copies = copies_for(c);
  const std::size_t slots = 4 * copies.size();
  if (slots > kBruteForceSlotCap) {
    throw TooLarge(std::to_string(slots) + " slots exceed the brute-force cap of " + std::to_string(kBruteForceSlotCap));
  }
  // Per 1-cell: slots with polarity +1 are matched to a permutation of the
  // slots with polarity -1.
  std::map<std::size_t, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> groups;
  for (std::size_t s = 0; s < slots; ++s) {
    auto& g = groups[group_of(cx, copies, s)];
    (slot_polarity(slot_side(s), copies[slot_copy(s)].sign) > 0 ? g.first : g.second).push_back(s);
  }
  std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> perms;
  for (auto& [cell, g] : groups) {
    if (g.first.size() != g.second.size()) {
      throw NotACycle("1-cell " + cx.cells1[cell].label() + " has unbalanced slots");
    }
    perms.push_back(g);
  }
  long best = std::numeric_limits<long>::min();
  std::vector<std::size_t> best_mate;
  std::vector<std::size_t> mate(slots);
  const long f = static_cast<long>(copies.size());
  while (true) {
    for (const auto& [plus, minus] : perms) {
      for (std::size_t i = 0; i < plus.size(); ++i) {
        mate[plus[i]] = minus[i];
        mate[minus[i]] = plus[i];
      }
    }
    DisjointSets corners(slots);
    for (std::size_t s = 0; s < slots; ++s) {
      if (mate[s] < s) continue;
      auto [l1, h1] = slot_corners(s);
      auto [l2, h2] = slot_corners(mate[s]);
      corners.unite(l1, l2);
      corners.unite(h1, h2);
    }
    long v = 0;
    for (std::size_t k = 0; k < slots; ++k) v += corners.find(k) == k ? 1 : 0;
    long chi = v - 2 * f + f;
    if (chi > best) {
      best = chi;
      best_mate = mate;
    }
    ++cert.nodes;
    std::size_t g = 0;
    while (g < perms.size() && !std::next_permutation(perms[g].second.begin(), perms[g].second.end())) ++g;
    if (g == perms.size()) break;
  }
  cert.value = -best;
  cert.witness = surface_from(copies, best_mate);
  return cert;
}

TorusSearch find_torus(const APComplex& cx, const Vector& c, const Budget& budget) {
  require_wang(cx);
  require_integral_chain(cx, c);
  for (const auto& v : c) {
    if (sgn(v) < 0) throw TilingError("torus search needs a non-negative cycle");
  }
  if (is_zero(c)) throw ZeroCycle("no torus for the zero cycle");
  require_cycle(cx, c);
  TorusSearch out;
  auto copies = copies_for(c);
  PairingSearch search(cx, copies, true, budget.nodes);
  bool finished = search.run(true);
  out.nodes = search.nodes();
  if (search.found()) {
    out.outcome = TorusOutcome::found;
    out.surface = surface_from(copies, search.best_mate());
  } else {
    out.outcome = finished ? TorusOutcome::none : TorusOutcome::budget_exhausted;
  }
  return out;
}

std::size_t PeriodicTiling::at(long x, long y) const {
  long m = y >= 0 ? y / l : -((-y + l - 1) / l);
  long yy = y - m * l;
  long xx = x - m * s;
  xx %= k;
  if (xx < 0) xx += k;
  return cells[static_cast<std::size_t>(yy * k + xx)];
}

namespace {

struct LatticeBasis {
  bool has_u2 = false;
  long u2x = 0, u2y = 0;
  long k = 0;

  void add_horizontal(long x) { k = std::gcd(k, std::abs(x)); }

  void add(long x, long y) {
    if (y == 0) {
      add_horizontal(x);
      return;
    }
    if (!has_u2) {
      has_u2 = true;
      u2x = x;
      u2y = y;
      return;
    }
    long ax = u2x, ay = u2y, bx = x, by = y;
    while (by != 0) {
      long q = ay / by;
      ax -= q * bx;
      ay -= q * by;
      std::swap(ax, bx);
      std::swap(ay, by);
    }
    u2x = ax;
    u2y = ay;
    add_horizontal(bx);
  }
};

}  // namespace

PeriodicTiling extract_periodic_tiling(const APComplex& cx, const GluedSurface& s, std::size_t component) {
  if (component >= s.components.size()) throw NotFlatTorus("no such component");
  const auto& comp = s.components[component];
  for (auto c : comp.copies) {
    if (s.copies[c].sign < 0) throw NotFlatTorus("component contains a reflected copy");
    for (std::size_t k = 0; k < 4; ++k) {
      if (s.class_sizes[s.corner_class[4 * c + k]] != 4) {
        throw NotFlatTorus("component has a corner class of size " +
                           std::to_string(s.class_sizes[s.corner_class[4 * c + k]]));
      }
    }
    if (slot_side(s.mate[slot_index(c, Side::right)]) != Side::left ||
        slot_side(s.mate[slot_index(c, Side::top)]) != Side::bottom) {
      throw NotFlatTorus("component has a gluing that is not a translation");
    }
  }
  (void)cx;
  // Develop along a spanning tree from the first copy.
  std::map<std::size_t, std::pair<long, long>> pos;
  std::queue<std::size_t> todo;
  pos[comp.copies.front()] = {0, 0};
  todo.push(comp.copies.front());
  const std::pair<Side, std::pair<long, long>> steps[] = {
      {Side::right, {1, 0}}, {Side::left, {-1, 0}}, {Side::top, {0, 1}}, {Side::bottom, {0, -1}}};
  while (!todo.empty()) {
    std::size_t c = todo.front();
    todo.pop();
    for (const auto& [side, d] : steps) {
      std::size_t nb = slot_copy(s.mate[slot_index(c, side)]);
      if (pos.count(nb)) continue;
      pos[nb] = {pos[c].first + d.first, pos[c].second + d.second};
      todo.push(nb);
    }
  }
  LatticeBasis lattice;
  for (auto c : comp.copies) {
    for (Side side : {Side::right, Side::top}) {
      std::size_t nb = slot_copy(s.mate[slot_index(c, side)]);
      long dx = side == Side::right ? 1 : 0;
      long dy = side == Side::top ? 1 : 0;
      lattice.add(pos[c].first + dx - pos[nb].first, pos[c].second + dy - pos[nb].second);
    }
  }
  if (!lattice.has_u2 || lattice.k == 0) throw NotFlatTorus("translation lattice has rank < 2");
  PeriodicTiling t;
  t.k = lattice.k;
  t.l = std::abs(lattice.u2y);
  long sx = lattice.u2y < 0 ? -lattice.u2x : lattice.u2x;
  t.s = ((sx % t.k) + t.k) % t.k;
  if (static_cast<std::size_t>(t.k * t.l) != comp.copies.size()) {
    throw NotFlatTorus("lattice index does not match the number of squares");
  }
  t.cells.assign(comp.copies.size(), kNone);
  for (auto c : comp.copies) {
    auto [x, y] = pos[c];
    long m = y >= 0 ? y / t.l : -((-y + t.l - 1) / t.l);
    long yy = y - m * t.l;
    long xx = ((x - m * t.s) % t.k + t.k) % t.k;
    auto& cell = t.cells[static_cast<std::size_t>(yy * t.k + xx)];
    if (cell != kNone) throw NotFlatTorus("two squares develop onto the same domain cell");
    cell = s.copies[c].tile;
  }
  return t;
}

bool verify_periodic_tiling(const WangTileSet& set, const PeriodicTiling& t) {
  if (t.k < 1 || t.l < 1 || t.s < 0 || t.s >= t.k) return false;
  if (t.cells.size() != static_cast<std::size_t>(t.k * t.l)) return false;
  for (auto c : t.cells) {
    if (c >= set.size()) return false;
  }
  for (long y = 0; y < t.l; ++y) {
    for (long x = 0; x < t.k; ++x) {
      const auto& here = set.tiles[t.at(x, y)];
      const auto& right = set.tiles[t.at(x + 1, y)];
      const auto& up = set.tiles[t.at(x, y + 1)];
      if (here.right != right.left) return false;
      if (here.top != up.bottom) return false;
    }
  }
  return true;
}

Vector ev_of_periodic(const PeriodicTiling& t, std::size_t tile_count) {
  Vector ev(tile_count, Rational(0));
  for (auto c : t.cells) ev[c] += 1;
  Rational area(t.k * t.l);
  for (auto& v : ev) v /= area;
  return ev;
}

}  // namespace tilenorm
