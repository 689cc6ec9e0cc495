#include "tilenorm/refinement.hpp"

#include "tilenorm/errors.hpp"

#include <algorithm>
#include <functional>

namespace tilenorm {

std::size_t PatternSet::total() const {
  std::size_t t = 0;
  for (const auto& v : by_center) t += v.size();
  return t;
}

namespace {

struct Adjacency {
  std::vector<std::vector<char>> right_ok;  // right_ok[a][b]: b may sit right of a
  std::vector<std::vector<char>> up_ok;     // up_ok[a][b]: b may sit above a
  std::vector<std::vector<std::size_t>> right_of;
  std::vector<char> has_left, has_right, has_below, has_above;

  explicit Adjacency(const WangTileSet& set) {
    const std::size_t n = set.size();
    right_ok.assign(n, std::vector<char>(n, 0));
    up_ok.assign(n, std::vector<char>(n, 0));
    right_of.resize(n);
    has_left.assign(n, 0);
    has_right.assign(n, 0);
    has_below.assign(n, 0);
    has_above.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (set.tiles[a].right == set.tiles[b].left) {
          right_ok[a][b] = 1;
          right_of[a].push_back(b);
          has_right[a] = has_left[b] = 1;
        }
        if (set.tiles[a].top == set.tiles[b].bottom) {
          up_ok[a][b] = 1;
          has_above[a] = has_below[b] = 1;
        }
      }
    }
  }
};

}  // namespace

PatternSet enumerate_patterns(const WangTileSet& set, long p, const Budget& budget) {
  if (p < 1) throw std::invalid_argument("pattern radius must be at least 1");
  const Adjacency adj(set);
  const std::size_t n = set.size();
  const long w = 2 * p + 1;
  const std::size_t cells = static_cast<std::size_t>(w * w);
  const std::size_t mid = static_cast<std::size_t>(p * w + p);
  PatternSet ps;
  ps.p = p;
  ps.by_center.resize(n);
  std::size_t total = 0;
  std::vector<std::size_t> grid(cells);
  std::vector<std::size_t> all(n);
  for (std::size_t t = 0; t < n; ++t) all[t] = t;

  for (std::size_t j = 0; j < n && ps.complete; ++j) {
    grid[mid] = j;
    auto fits = [&](std::size_t k, std::size_t t) {
      const long r = static_cast<long>(k) / w;
      const long c = static_cast<long>(k) % w;
      if (c > 0 && !adj.has_left[t]) return false;
      if (c < w - 1 && !adj.has_right[t]) return false;
      if (r > 0 && !adj.has_below[t]) return false;
      if (r < w - 1 && !adj.has_above[t]) return false;
      if (c > 0 && !adj.right_ok[grid[k - 1]][t]) return false;
      if (r > 0 && !adj.up_ok[grid[k - static_cast<std::size_t>(w)]][t]) return false;
      if (k + 1 == mid && !adj.right_ok[t][j]) return false;
      if (k + static_cast<std::size_t>(w) == mid && !adj.up_ok[t][j]) return false;
      return true;
    };
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (!ps.complete) return;
      if (k == cells) {
        if (total >= budget.max_patterns) {
          ps.complete = false;
          return;
        }
        ps.by_center[j].push_back(Pattern{p, grid});
        ++total;
        return;
      }
      if (++ps.nodes > budget.nodes) {
        ps.complete = false;
        return;
      }
      if (k == mid) {
        if (fits(k, j)) rec(k + 1);
        return;
      }
      const auto& cand = (k % static_cast<std::size_t>(w) > 0) ? adj.right_of[grid[k - 1]] : all;
      for (std::size_t t : cand) {
        if (!fits(k, t)) continue;
        grid[k] = t;
        rec(k + 1);
        if (!ps.complete) return;
      }
    };
    rec(0);
  }
  return ps;
}

bool is_legal_pattern(const WangTileSet& set, const Pattern& pat) {
  const long w = pat.width();
  if (pat.cells.size() != static_cast<std::size_t>(w * w)) return false;
  for (auto c : pat.cells) {
    if (c >= set.size()) return false;
  }
  for (long y = -pat.p; y <= pat.p; ++y) {
    for (long x = -pat.p; x <= pat.p; ++x) {
      const auto& t = set.tiles[pat.at(x, y)];
      if (x < pat.p && t.right != set.tiles[pat.at(x + 1, y)].left) return false;
      if (y < pat.p && t.top != set.tiles[pat.at(x, y + 1)].bottom) return false;
    }
  }
  return true;
}

Integer count_patterns_by_rows(const WangTileSet& set, long p) {
  const std::size_t w = static_cast<std::size_t>(2 * p + 1);
  const std::size_t n = set.size();
  std::vector<std::vector<std::size_t>> rows;
  std::vector<std::size_t> row;
  std::function<void()> grow = [&] {
    if (row.size() == w) {
      rows.push_back(row);
      return;
    }
    for (std::size_t t = 0; t < n; ++t) {
      if (!row.empty() && set.tiles[row.back()].right != set.tiles[t].left) continue;
      row.push_back(t);
      grow();
      row.pop_back();
    }
  };
  grow();
  auto stacks = [&](const std::vector<std::size_t>& lo, const std::vector<std::size_t>& hi) {
    for (std::size_t i = 0; i < w; ++i) {
      if (set.tiles[lo[i]].top != set.tiles[hi[i]].bottom) return false;
    }
    return true;
  };
  std::vector<Integer> count(rows.size(), Integer(1));
  for (std::size_t layer = 1; layer < w; ++layer) {
    std::vector<Integer> next(rows.size(), Integer(0));
    for (std::size_t a = 0; a < rows.size(); ++a) {
      if (count[a] == 0) continue;
      for (std::size_t b = 0; b < rows.size(); ++b) {
        if (stacks(rows[a], rows[b])) next[b] += count[a];
      }
    }
    count = std::move(next);
  }
  Integer total = 0;
  for (const auto& c : count) total += c;
  return total;
}

namespace {

std::string strip(const Pattern& pat, long x0, long x1, long y0, long y1) {
  std::string out;
  for (long y = y0; y <= y1; ++y) {
    if (y > y0) out += ';';
    for (long x = x0; x <= x1; ++x) {
      if (x > x0) out += ',';
      out += std::to_string(pat.at(x, y));
    }
  }
  return out;
}

}  // namespace

WpTileSet build_wp_tileset(const WangTileSet& set, const PatternSet& ps) {
  if (!ps.complete) throw BudgetExhausted("pattern enumeration at p=" + std::to_string(ps.p) + " is incomplete");
  if (ps.empty()) throw EmptyPatternSet("no legal pattern of radius " + std::to_string(ps.p));
  const long p = ps.p;
  WpTileSet out;
  out.tiles.name = set.name + "-W" + std::to_string(p);
  for (std::size_t j = 0; j < ps.by_center.size(); ++j) {
    for (std::size_t l = 0; l < ps.by_center[j].size(); ++l) {
      const auto& pat = ps.by_center[j][l];
      WangTile t;
      t.id = set.tiles[j].id + "@" + std::to_string(l + 1);
      t.right = strip(pat, -p + 1, p, -p, p);
      t.left = strip(pat, -p, p - 1, -p, p);
      t.top = strip(pat, -p, p, -p + 1, p);
      t.bottom = strip(pat, -p, p, -p, p - 1);
      out.tiles.tiles.push_back(std::move(t));
      out.center.push_back(j);
    }
  }
  return out;
}

Vector project_cycle(const PatternSet& ps, const Vector& cwp) {
  if (cwp.size() != ps.total()) {
    throw DimensionMismatch("chain has " + std::to_string(cwp.size()) + " coordinates, W^p has " +
                            std::to_string(ps.total()) + " tiles");
  }
  Vector out(ps.by_center.size(), Rational(0));
  std::size_t k = 0;
  for (std::size_t j = 0; j < ps.by_center.size(); ++j) {
    for (std::size_t l = 0; l < ps.by_center[j].size(); ++l) out[j] += cwp[k++];
  }
  return out;
}

namespace {

// [boundary of W^p ; projection] x = [0 ; c]
void stacked_system(const WangTileSet& set, const PatternSet& ps, const Vector& c, Matrix& a, Vector& b) {
  auto wp = build_wp_tileset(set, ps);
  auto cx = build_ap_complex(wp.tiles);
  a = cx.boundary;
  const std::size_t cols = wp.center.size();
  for (std::size_t j = 0; j < set.size(); ++j) {
    Vector row(cols, Rational(0));
    for (std::size_t k = 0; k < cols; ++k) {
      if (wp.center[k] == j) row[k] = 1;
    }
    a.append_row(row);
  }
  b.assign(cx.cells1.size(), Rational(0));
  b.insert(b.end(), c.begin(), c.end());
}

}  // namespace

ProjectedCone cycle_in_projected_cone(const WangTileSet& set, const PatternSet& ps, const Vector& c,
                                      const Budget& budget) {
  if (c.size() != set.size()) throw DimensionMismatch("cycle length differs from tile count");
  ProjectedCone out;
  out.patterns = ps.total();
  if (!ps.complete || out.patterns > budget.max_lp_columns) return out;
  const bool zero = std::all_of(c.begin(), c.end(), [](const Rational& v) { return sgn(v) == 0; });
  if (out.patterns == 0) {
    // No variables: feasible only for c = 0, otherwise y = -c separates.
    out.status = zero ? Membership::member : Membership::not_member;
    if (!zero) {
      for (const auto& v : c) out.certificate.push_back(-v);
    }
    return out;
  }
  Matrix a;
  Vector b;
  stacked_system(set, ps, c, a, b);
  Feasibility f = solve_feasibility(a, b);
  if (f.feasible) {
    out.status = Membership::member;
    out.witness = std::move(f.point);
  } else {
    out.status = Membership::not_member;
    out.certificate = std::move(f.farkas);
  }
  return out;
}

ProjectedCone cycle_in_projected_cone(const WangTileSet& set, const Vector& c, long p, const Budget& budget) {
  return cycle_in_projected_cone(set, enumerate_patterns(set, p, budget), c, budget);
}

bool verify_projected_witness(const WangTileSet& set, const PatternSet& ps, const Vector& c, const Vector& x) {
  if (x.size() != ps.total() || c.size() != set.size() || ps.empty()) return false;
  for (const auto& v : x) {
    if (sgn(v) < 0) return false;
  }
  auto wp = build_wp_tileset(set, ps);
  auto cx = build_ap_complex(wp.tiles);
  return is_cycle(cx, x) && project_cycle(ps, x) == c;
}

const char* verdict_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::cannot_tile:
      return "CANNOT_TILE";
    case VerdictKind::tiles_periodically:
      return "TILES_PERIODICALLY";
    case VerdictKind::undecided:
      return "UNDECIDED";
  }
  return "?";
}

PeriodicSearch search_periodic(const WangTileSet& set, const APComplex& cx, const Budget& budget) {
  PeriodicSearch out;
  const std::size_t n = set.size();
  const std::size_t m = cx.cells1.size();
  std::vector<std::vector<long>> d(m, std::vector<long>(n));
  for (std::size_t e = 0; e < m; ++e) {
    for (std::size_t t = 0; t < n; ++t) d[e][t] = cx.boundary(e, t).get_num().get_si();
  }
  std::uint64_t spent = 0;
  bool exhausted = false;
  std::vector<long> x(n, 0);
  std::function<bool(std::size_t, long)> walk = [&](std::size_t i, long left) -> bool {
    if (i + 1 == n) {
      x[i] = left;
      if (++spent > budget.nodes) {
        exhausted = true;
        return true;
      }
      for (std::size_t e = 0; e < m; ++e) {
        long s = 0;
        for (std::size_t t = 0; t < n; ++t) s += d[e][t] * x[t];
        if (s != 0) return false;
      }
      Vector c(n);
      for (std::size_t t = 0; t < n; ++t) c[t] = x[t];
      Budget b = budget;
      b.nodes = budget.nodes - spent;
      auto r = find_torus(cx, c, b);
      spent += r.nodes;
      if (r.outcome == TorusOutcome::found) {
        out.tiling = extract_periodic_tiling(cx, *r.surface);
        out.cycle = std::move(c);
        return true;
      }
      if (r.outcome == TorusOutcome::budget_exhausted || spent > budget.nodes) {
        exhausted = true;
        return true;
      }
      return false;
    }
    for (long v = 0; v <= left; ++v) {
      x[i] = v;
      if (walk(i + 1, left - v)) return true;
    }
    x[i] = 0;
    return false;
  };
  for (std::size_t w = 1; w <= budget.max_cycle_weight; ++w) {
    if (walk(0, static_cast<long>(w))) break;
    out.max_weight = w;
  }
  if (exhausted) out.tiling.reset();
  return out;
}

Verdict tileability(const WangTileSet& set, const TileabilityOptions& opts) {
  Verdict v;
  auto cx = build_ap_complex(set);
  auto cw = nonneg_cycle_exists(cx);
  if (!cw.nonempty) {
    v.kind = VerdictKind::cannot_tile;
    v.obstruction = Obstruction::empty_cone;
    v.empty_cone_certificate = cw.certificate;
    return v;
  }
  std::vector<PatternSet> sets;
  for (long p = 1; p <= opts.max_p; ++p) {
    sets.push_back(enumerate_patterns(set, p, opts.budget));
    v.max_p = p;
    if (sets.back().complete && sets.back().empty()) {
      v.kind = VerdictKind::cannot_tile;
      v.obstruction = Obstruction::no_pattern;
      v.no_pattern_p = p;
      return v;
    }
  }
  auto search = search_periodic(set, cx, opts.budget);
  v.max_weight = search.max_weight;
  if (search.tiling) {
    v.kind = VerdictKind::tiles_periodically;
    v.tiling = std::move(search.tiling);
    v.periodic_cycle = std::move(search.cycle);
    return v;
  }
  v.cone = simplex_extreme_points(cx, opts.budget);
  for (const auto& ps : sets) {
    Evidence e{ps.p, ps.total(), ps.complete, {}};
    for (const auto& pt : v.cone.extreme_points) {
      auto r = cycle_in_projected_cone(set, ps, pt, opts.budget);
      if (r.status == Membership::budget_exhausted) {
        e.cone_member.push_back(std::nullopt);
      } else {
        e.cone_member.push_back(r.status == Membership::member);
      }
    }
    v.evidence.push_back(std::move(e));
  }
  const std::size_t tables = std::min<std::size_t>(v.cone.extreme_points.size(), kEvidenceNormTables);
  for (std::size_t i = 0; i < tables; ++i) {
    v.norm_tables.push_back(asymptotic_norm_upper(cx, v.cone.extreme_points[i], opts.max_n, opts.budget));
  }
  return v;
}

}  // namespace tilenorm
