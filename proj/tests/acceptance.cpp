// Acceptance run: one line per criterion, PASS or FAIL, with timings.

#include "fixtures.hpp"

#include "tilenorm/asymptotic.hpp"
#include "tilenorm/cli.hpp"
#include "tilenorm/errors.hpp"
#include "tilenorm/reduction.hpp"
#include "tilenorm/refinement.hpp"
#include "tilenorm/surface.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>

using namespace tilenorm;
using fixtures::vec;

namespace {

const std::string kData = TILENORM_DATA_DIR;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Row {
  int id;
  double limit;  // seconds, 0 for none
  Outcome outcome;
  double seconds;
};

double timed(const std::function<void()>& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Surfaces produced anywhere in the run, re-checked for criterion 6.
struct SurfaceLog {
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::string first;

  void add(const APComplex& cx, const GluedSurface& s) {
    ++checked;
    auto problems = check_surface(cx, s);
    if (!problems.empty()) {
      if (violations == 0) first = problems.front();
      ++violations;
    }
  }
};

SurfaceLog g_surfaces;

std::vector<Vector> nonneg_integral_cycles(const APComplex& cx, long max_weight) {
  const std::size_t n = cx.tile_count();
  std::vector<Vector> out;
  std::vector<long> x(n, 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
    if (i == n) {
      long w = 0;
      for (auto v : x) w += v;
      if (w == 0) return;
      Vector c(n);
      for (std::size_t k = 0; k < n; ++k) c[k] = x[k];
      if (is_cycle(cx, c)) out.push_back(c);
      return;
    }
    for (long v = 0; v <= left; ++v) {
      x[i] = v;
      rec(i + 1, left - v);
    }
    x[i] = 0;
  };
  rec(0, max_weight);
  return out;
}

GluedSurface random_pairing(const APComplex& cx, const Vector& c, std::mt19937& rng) {
  GluedSurface s;
  s.copies = copies_for(c);
  const std::size_t slots = 4 * s.copies.size();
  s.mate.assign(slots, 0);
  std::map<std::size_t, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> groups;
  for (std::size_t a = 0; a < slots; ++a) {
    auto& g = groups[cx.side_cells[s.copies[slot_copy(a)].tile][static_cast<std::size_t>(slot_side(a))]];
    (slot_polarity(slot_side(a), s.copies[slot_copy(a)].sign) > 0 ? g.first : g.second).push_back(a);
  }
  for (auto& [cell, g] : groups) {
    std::shuffle(g.second.begin(), g.second.end(), rng);
    for (std::size_t i = 0; i < g.first.size(); ++i) {
      s.mate[g.first[i]] = g.second[i];
      s.mate[g.second[i]] = g.first[i];
    }
  }
  s.finalize();
  return s;
}

std::string run_cli(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  return out.str() + "\x1f" + err.str();
}

Outcome fail(std::string why) { return Outcome{false, std::move(why)}; }

Outcome criterion1() {
  auto set = fixtures::dead();
  auto v = tileability(set);
  if (v.kind != VerdictKind::cannot_tile || v.obstruction != Obstruction::empty_cone) return fail("verdict is not CANNOT_TILE(EmptyCone)");
  if (!verify_empty_cone_certificate(build_ap_complex(set), v.empty_cone_certificate)) return fail("certificate does not re-check");
  return {true, "CANNOT_TILE(EmptyCone), certificate re-checked"};
}

Outcome criterion2() {
  auto set = fixtures::mono();
  auto cx = build_ap_complex(set);
  auto v = tileability(set);
  if (v.kind != VerdictKind::tiles_periodically) return fail("not TILES_PERIODICALLY");
  if (v.tiling->k * v.tiling->l != 1 || !verify_periodic_tiling(set, *v.tiling)) return fail("domain is not a verified 1-tile torus");
  auto t = asymptotic_norm_upper(cx, vec({"1"}), 1);
  if (t.rows.size() != 1 || t.rows[0].status != SearchStatus::exact || t.rows[0].value != 0) return fail("norm row n=1 is not exact 0");
  if (t.best_witness) g_surfaces.add(cx, *t.best_witness);
  return {true, "1-tile torus, ||(1)|| = 0 exact"};
}

Outcome criterion3() {
  auto set = fixtures::checker();
  auto cx = build_ap_complex(set);
  auto cone = simplex_extreme_points(cx);
  if (cone.extreme_points != std::vector<Vector>{vec({"1/2", "1/2"})}) return fail("extreme points differ from {(1/2,1/2)}");
  auto v = tileability(set);
  if (v.kind != VerdictKind::tiles_periodically) return fail("no periodic tiling");
  if (v.tiling->k * v.tiling->l != 2) return fail("lattice index is not 2");
  if (!verify_periodic_tiling(set, *v.tiling)) return fail("tiling does not re-check");
  if (ev_of_periodic(*v.tiling, 2) != vec({"1/2", "1/2"})) return fail("Ev differs from the extreme point");
  auto t = asymptotic_norm_upper(cx, vec({"1/2", "1/2"}), 1);
  if (t.denominator != 2 || t.rows[0].status != SearchStatus::exact || t.rows[0].value != 0) return fail("||2c|| is not exact 0");
  if (!t.best_upper || *t.best_upper != 0) return fail("best_upper is not 0");
  if (t.best_witness) g_surfaces.add(cx, *t.best_witness);
  return {true, "extreme point (1/2,1/2), index-2 domain, Ev exact, best_upper 0 at 2c"};
}

struct NormRecord {
  std::size_t set;
  Vector cycle;
  long value;
};

std::vector<NormRecord> g_corpus;
std::vector<APComplex> g_corpus_complexes;

Outcome criterion4() {
  std::mt19937 rng(20240611);
  Budget big;
  big.nodes = 200'000'000;
  std::size_t sets = 0, instances = 0, mismatches = 0, inexact = 0;
  std::string first;
  while (sets < 120) {
    auto set = fixtures::random_set(rng, 3, 3);
    auto cx = build_ap_complex(set);
    const std::size_t idx = g_corpus_complexes.size();
    g_corpus_complexes.push_back(cx);
    ++sets;
    for (const auto& c : nonneg_integral_cycles(cx, 6)) {
      ++instances;
      auto bb = thurston_norm(cx, c, big);
      auto bf = thurston_norm_bruteforce(cx, c);
      if (bb.witness) g_surfaces.add(cx, *bb.witness);
      if (bf.witness) g_surfaces.add(cx, *bf.witness);
      if (bb.status != SearchStatus::exact) {
        ++inexact;
        continue;
      }
      if (bb.value != bf.value) {
        if (mismatches == 0) first = canonical_serialize(set) + format_cycle(c, cx.cells2);
        ++mismatches;
      }
      g_corpus.push_back(NormRecord{idx, c, bb.value});
    }
  }
  std::string detail = std::to_string(sets) + " sets, " + std::to_string(instances) + " cycles, " +
                       std::to_string(mismatches) + " mismatches, " + std::to_string(inexact) + " not exact";
  if (mismatches || inexact) return fail(detail + (first.empty() ? "" : "; first: " + first));
  if (instances < 100) return fail(detail + "; corpus too small");
  return {true, detail};
}

Outcome criterion5() {
  std::map<std::pair<std::size_t, Vector>, long> norms;
  for (const auto& r : g_corpus) norms[{r.set, r.cycle}] = r.value;
  std::size_t pairs = 0, doubles = 0, violations = 0;
  for (const auto& a : g_corpus) {
    for (const auto& b : g_corpus) {
      if (a.set != b.set) continue;
      Vector sum(a.cycle.size());
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = a.cycle[i] + b.cycle[i];
      auto it = norms.find({a.set, sum});
      if (it == norms.end()) continue;
      ++pairs;
      if (it->second > a.value + b.value) ++violations;
      if (a.cycle == b.cycle) {
        ++doubles;
        if (it->second > 2 * a.value) ++violations;
      }
    }
  }
  std::string detail = std::to_string(pairs) + " pairs (" + std::to_string(doubles) + " doublings), " +
                       std::to_string(violations) + " violations";
  if (violations || pairs == 0) return fail(detail);
  return {true, detail};
}

Outcome criterion7() {
  std::mt19937 rng(77);
  std::size_t tori = 0;
  for (int k = 0; k < 50; ++k) {
    auto set = forget_colors(fixtures::random_set(rng, 4, 4));
    auto cx = build_ap_complex(set);
    for (std::size_t j = 0; j < set.size(); ++j) {
      Vector e(set.size(), Rational(0));
      e[j] = 1;
      auto r = find_torus(cx, e);
      if (r.outcome != TorusOutcome::found) return fail("no torus for tile " + set.tiles[j].id);
      g_surfaces.add(cx, *r.surface);
      if (!verify_periodic_tiling(set, extract_periodic_tiling(cx, *r.surface))) return fail("torus does not unroll");
      ++tori;
    }
  }
  return {true, "50 sets, " + std::to_string(tori) + " single-tile tori"};
}

// Random sets that tile periodically and whose 5x5 patterns stay LP-sized.
std::vector<WangTileSet> tileable_looking(std::size_t count) {
  std::mt19937 rng(808);
  std::vector<WangTileSet> out;
  Budget b;
  while (out.size() < count) {
    auto set = fixtures::random_set(rng, 4, 3);
    if (set.size() < 2) continue;
    auto cx = build_ap_complex(set);
    if (!nonneg_cycle_exists(cx).nonempty) continue;
    auto p2 = enumerate_patterns(set, 2, b);
    if (!p2.complete || p2.empty() || p2.total() > 400) continue;
    if (!search_periodic(set, cx, b).tiling) continue;
    out.push_back(set);
  }
  return out;
}

Outcome criterion8() {
  auto sets = tileable_looking(20);
  sets.insert(sets.begin(), fixtures::checker());
  std::size_t witnesses = 0, points = 0;
  for (const auto& set : sets) {
    auto cx = build_ap_complex(set);
    auto cone = simplex_extreme_points(cx);
    PatternSet ps[3] = {{}, enumerate_patterns(set, 1), enumerate_patterns(set, 2)};
    for (const auto& c : cone.extreme_points) {
      ++points;
      Membership m[3];
      for (int p = 1; p <= 2; ++p) {
        auto r = cycle_in_projected_cone(set, ps[p], c);
        m[p] = r.status;
        if (r.status == Membership::budget_exhausted) return fail(set.name + ": membership not decided");
        if (r.status == Membership::member) {
          ++witnesses;
          if (!verify_projected_witness(set, ps[p], c, r.witness)) return fail("LP witness does not re-check");
          auto down = project_cycle(ps[p], r.witness);
          for (const auto& v : down) {
            if (sgn(v) < 0) return fail("projection has a negative coordinate");
          }
          if (!is_cycle(cx, down)) return fail("projection is not a cycle");
        }
      }
      if (m[2] == Membership::member && m[1] != Membership::member) return fail("membership at p=2 but not at p=1");
    }
    // A periodic tiling's frequency cycle lies in every projected cone and has norm 0.
    auto v = tileability(set);
    if (v.kind != VerdictKind::tiles_periodically) return fail("periodic tiling lost");
    auto ev = ev_of_periodic(*v.tiling, set.size());
    for (int p = 1; p <= 2; ++p) {
      if (cycle_in_projected_cone(set, ps[p], ev).status != Membership::member) return fail("Ev outside projected cone");
    }
    auto t = asymptotic_norm_upper(cx, ev, 1);
    if (!t.best_upper || *t.best_upper != 0) return fail("Ev norm table does not certify 0");
  }
  return {true, std::to_string(sets.size()) + " sets, " + std::to_string(points) + " extreme points, " +
                    std::to_string(witnesses) + " LP witnesses re-checked, nesting holds"};
}

struct FlatTally {
  std::size_t sets = 0, instances = 0, zero = 0;
};

std::optional<std::string> check_flat(const WangTileSet& set, long max_weight, FlatTally& tally) {
  ++tally.sets;
  auto cx = build_ap_complex(set);
  for (const auto& c : nonneg_integral_cycles(cx, max_weight)) {
    ++tally.instances;
    auto norm = thurston_norm_bruteforce(cx, c);
    Budget b;
    b.nodes = 100'000'000;
    auto torus = find_torus(cx, c, b);
    if (torus.outcome == TorusOutcome::budget_exhausted) return "torus search did not finish";
    if (norm.witness) g_surfaces.add(cx, *norm.witness);
    bool flat = false;
    if (torus.outcome == TorusOutcome::found) {
      const auto& s = *torus.surface;
      g_surfaces.add(cx, s);
      flat = s.all_positive();
      for (auto k : s.class_sizes) flat = flat && k == 4;
      if (!flat) return "torus witness is not flat";
    }
    if ((norm.value == 0) != flat) {
      return canonical_serialize(set) + format_cycle(c, cx.cells2) + ": norm " + std::to_string(norm.value) +
             " but torus " + (flat ? "found" : "absent");
    }
    tally.zero += norm.value == 0;
  }
  return std::nullopt;
}

std::string tally_line(const FlatTally& t) {
  return std::to_string(t.sets) + " sets, " + std::to_string(t.instances) + " cycles, " +
         std::to_string(t.instances - t.zero) + " of positive norm";
}

Outcome criterion9() {
  const char colors[2] = {'a', 'b'};
  FlatTally all2;
  for (int u = 0; u < 16; ++u) {
    for (int w = 0; w < 16; ++w) {
      WangTileSet set;
      set.name = "S";
      for (int k : {u, w}) {
        WangTile tile;
        tile.id = "t" + std::to_string(set.tiles.size());
        tile.top = std::string(1, colors[k & 1]);
        tile.bottom = std::string(1, colors[(k >> 1) & 1]);
        tile.right = std::string(1, colors[(k >> 2) & 1]);
        tile.left = std::string(1, colors[(k >> 3) & 1]);
        set.tiles.push_back(tile);
      }
      if (auto why = check_flat(set, 4, all2)) return fail(*why);
    }
  }
  // Two colors never give a positive norm at this size, so random
  // three-color sets exercise the other direction.
  std::mt19937 rng(909);
  FlatTally wide;
  for (int trial = 0; trial < 800; ++trial) {
    if (auto why = check_flat(fixtures::random_set(rng, 5, 3), 5, wide)) return fail(*why);
  }
  if (wide.instances == wide.zero) return fail("no cycle of positive norm reached");
  return {true, "all 2-tile 2-color sets: " + tally_line(all2) + "; random 3-color sets: " + tally_line(wide) +
                    "; equivalence holds on all"};
}

Outcome criterion10() {
  int code = 0;
  auto one = squareify(parse_polygon_set(
      "polyset UNIT\npoly Q\nvertex 0 0\nvertex 1 0\nvertex 1 1\nvertex 0 1\n"
      "edgecolor 0 s\nedgecolor 1 e\nedgecolor 2 n\nedgecolor 3 w\n"));
  if (one.encoding.tiles.size() != 1 || one.encoding.map.seam_count() != 0) return fail("unit square is not 1 tile / 0 seams");
  auto two = squareify(parse_polygon_set(
      "polyset RECT\npoly R\nvertex 0 0\nvertex 2 0\nvertex 2 1\nvertex 0 1\n"
      "edgecolor 0 s\nedgecolor 1 e\nedgecolor 2 n\nedgecolor 3 w\n"));
  if (two.encoding.tiles.size() != 2 || two.encoding.map.seam_count() != 1) return fail("2x1 rectangle is not 2 tiles / 1 seam");
  const auto& l = two.encoding.tiles.tiles[0];
  const auto& r = two.encoding.tiles.tiles[1];
  if (l.right != r.left || !two.encoding.map.colors.at(l.right).seam) return fail("seam is not E of left and W of right");
  auto mono = squareify(parse_polygon_set(
      "polyset MONORECT\npoly R\nvertex 0 0\nvertex 2 0\nvertex 2 1\nvertex 0 1\n"
      "edgecolor 0 a\nedgecolor 1 a\nedgecolor 2 a\nedgecolor 3 a\n"));
  auto v = tileability(mono.encoding.tiles);
  if (v.kind != VerdictKind::tiles_periodically) return fail("encoded MONO rectangle is not TILES_PERIODICALLY");
  if (!verify_periodic_tiling(mono.encoding.tiles, *v.tiling)) return fail("encoded tiling does not re-check");
  auto cli_out = run_cli({"tileability", kData + "/mono-rect.poly"}, code);
  if (code != 0 || cli_out.find("verdict TILES_PERIODICALLY\n") == std::string::npos) return fail("CLI tileability on the polygon file");
  return {true, "1 tile/0 seams, 2 tiles/1 seam, encoded MONO rectangle TILES_PERIODICALLY"};
}

Outcome criterion11() {
  auto tmp = std::filesystem::temp_directory_path();
  std::vector<std::vector<std::string>> commands = {
      {"analyze", kData + "/mono.wts"},
      {"analyze", kData + "/dead.wts"},
      {"analyze", kData + "/checker.wts"},
      {"analyze", kData + "/rect-2x1.poly"},
      {"norm", kData + "/mono.wts", "cycle T=1", "--max-n", "3"},
      {"norm", kData + "/checker.wts", "cycle A=1/2 B=1/2"},
      {"norm", kData + "/checker.wts", "cycle A=1"},
      {"tileability", kData + "/dead.wts"},
      {"tileability", kData + "/mono.wts"},
      {"tileability", kData + "/checker.wts"},
      {"tileability", kData + "/mono-rect.poly"},
      {"tileability", kData + "/checker.wts", "--budget-nodes", "1"},
      {"squareify", kData + "/unit-square.poly"},
      {"squareify", kData + "/rect-2x1.poly"},
      {"squareify", kData + "/half-square.poly"},
      {"wp", kData + "/mono.wts", "-p", "1"},
      {"wp", kData + "/checker.wts", "-p", "2"},
      {"wp", kData + "/dead.wts", "-p", "1"},
      {"forget", kData + "/checker.wts"},
  };
  // Each report is also fed through verify.
  std::size_t n = commands.size();
  for (std::size_t i = 0; i < n; ++i) {
    int code = 0;
    auto out = run_cli(commands[i], code);
    auto path = (tmp / ("tilenorm_acceptance_" + std::to_string(i) + ".rep")).string();
    std::ofstream(path) << out.substr(0, out.find('\x1f'));
    if (code == 0) commands.push_back({"verify", path});
  }
  std::size_t runs = 0;
  for (const auto& args : commands) {
    int c1 = 0, c2 = 0;
    auto a = run_cli(args, c1);
    auto b = run_cli(args, c2);
    ++runs;
    if (a != b || c1 != c2) return fail("output differs between runs of '" + args[0] + " " + args[1] + "'");
    if (args[0] == "verify" && c1 != 0) return fail("report does not verify: " + args[1]);
  }
  return {true, std::to_string(runs) + " commands byte-identical across two runs"};
}

}  // namespace

int main() {
  std::vector<Row> rows;
  auto add = [&](int id, double limit, const std::function<Outcome()>& f) {
    Outcome o;
    double s = timed([&] {
      try {
        o = f();
      } catch (const std::exception& e) {
        o = fail(std::string("exception: ") + e.what());
      }
    });
    rows.push_back(Row{id, limit, o, s});
  };
  add(1, 1.0, criterion1);
  add(2, 1.0, criterion2);
  add(3, 5.0, criterion3);
  add(4, 600.0, criterion4);
  add(5, 0.0, criterion5);
  add(7, 10.0, criterion7);
  add(8, 300.0, criterion8);
  add(9, 600.0, criterion9);
  add(10, 5.0, criterion10);
  add(11, 0.0, criterion11);
  // Every surface collected above, plus random admissible pairings over the
  // criterion 4 corpus.
  add(6, 0.0, [] {
    std::mt19937 rng(6);
    for (const auto& r : g_corpus) {
      const auto& cx = g_corpus_complexes[r.set];
      for (int k = 0; k < 3; ++k) g_surfaces.add(cx, random_pairing(cx, r.cycle, rng));
    }
    std::string detail = std::to_string(g_surfaces.checked) + " surfaces, " + std::to_string(g_surfaces.violations) +
                         " violations";
    if (g_surfaces.violations) return fail(detail + "; first: " + g_surfaces.first);
    return Outcome{true, detail};
  });
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.id < b.id; });
  bool all = true;
  for (const auto& r : rows) {
    bool in_time = r.limit == 0.0 || r.seconds < r.limit;
    bool pass = r.outcome.pass && in_time;
    all = all && pass;
    std::printf("criterion %2d: %s  %.2fs%s  %s%s\n", r.id, pass ? "PASS" : "FAIL", r.seconds,
                r.limit > 0 ? (" (limit " + std::to_string(static_cast<int>(r.limit)) + "s)").c_str() : "",
                r.outcome.detail.c_str(), in_time ? "" : " [time limit exceeded]");
  }
  std::printf("%s\n", all ? "all criteria passed" : "some criteria failed");
  return all ? 0 : 1;
}
