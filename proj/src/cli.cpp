#include "tilenorm/cli.hpp"

#include "tilenorm/asymptotic.hpp"
#include "tilenorm/errors.hpp"
#include "tilenorm/reduction.hpp"
#include "tilenorm/refinement.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace tilenorm::cli {
namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Report {
 public:
  void kv(const std::string& key, const std::string& value) { text_ += key + ": " + value + "\n"; }
  void line(const std::string& s) { text_ += s + "\n"; }
  void begin(const std::string& name) { text_ += "begin " + name + "\n"; }
  void end() { text_ += "end\n"; }
  void block(const std::string& name, const std::string& body) {
    begin(name);
    text_ += body;
    if (!body.empty() && body.back() != '\n') text_ += "\n";
    end();
  }
  const std::string& str() const { return text_; }

 private:
  std::string text_;
};

struct ParsedReport {
  std::map<std::string, std::string> values;
  std::map<std::string, std::vector<std::string>> blocks;
  std::vector<std::string> lines;  // top-level lines that are not key: value

  const std::string& value(const std::string& key) const {
    auto it = values.find(key);
    if (it == values.end()) throw SyntaxError(0, "report has no '" + key + "' entry");
    return it->second;
  }
  const std::vector<std::string>& lines_of(const std::string& name) const {
    auto it = blocks.find(name);
    if (it == blocks.end()) throw SyntaxError(0, "report has no '" + name + "' block");
    return it->second;
  }
  std::string text_of(const std::string& name) const {
    std::string out;
    for (const auto& l : lines_of(name)) out += l + "\n";
    return out;
  }
};

ParsedReport parse_report(const std::string& text) {
  ParsedReport r;
  std::istringstream in(text);
  std::string line;
  std::optional<std::string> open;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (open) {
      if (line == "end") {
        open.reset();
      } else {
        r.blocks[*open].push_back(line);
      }
      continue;
    }
    if (line.rfind("begin ", 0) == 0) {
      open = line.substr(6);
      r.blocks[*open];
      continue;
    }
    auto colon = line.find(": ");
    if (colon != std::string::npos && line.find(' ') > colon) {
      r.values[line.substr(0, colon)] = line.substr(colon + 2);
    } else if (!line.empty()) {
      r.lines.push_back(line);
    }
  }
  if (open) throw SyntaxError(number, "unterminated block '" + *open + "'");
  return r;
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << text;
}

bool is_polyset(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto w = words(line.substr(0, line.find('#')));
    if (!w.empty()) return w[0] == "polyset";
  }
  return false;
}

std::string bool_word(bool b) { return b ? "true" : "false"; }

std::string point_list(const std::vector<Vector>& pts, const std::vector<std::string>& ids) {
  std::string out = "[";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ", ";
    out += format_point(pts[i], ids);
  }
  return out + "]";
}

// Inverse of point_list: "[(A=1/2,B=1/2), (A=1,B=0)]".
std::vector<Vector> parse_point_list(const std::string& s, const std::vector<std::string>& ids) {
  std::vector<Vector> out;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw SyntaxError(0, "malformed point list");
  std::string body = s.substr(1, s.size() - 2);
  std::size_t pos = 0;
  while (pos < body.size()) {
    auto open = body.find('(', pos);
    if (open == std::string::npos) break;
    auto close = body.find(')', open);
    if (close == std::string::npos) throw SyntaxError(0, "malformed point list");
    std::string inner = body.substr(open + 1, close - open - 1);
    std::string cyc = "cycle";
    for (char& ch : inner) {
      if (ch == ',') ch = ' ';
    }
    cyc += " " + inner;
    out.push_back(parse_cycle(cyc, ids));
    pos = close + 1;
  }
  return out;
}

void write_rules(Report& r, const APComplex& cx) {
  std::string body;
  for (const auto& rule : switching_rules(cx)) body += format_rule(cx, rule) + "\n";
  r.block("rules", body);
}

void write_empty_cone(Report& r, const APComplex& cx, const Vector& z) {
  std::string body;
  for (std::size_t i = 0; i < z.size(); ++i) body += "z " + cx.cells1[i].label() + " " + to_string(z[i]) + "\n";
  r.block("certificate empty_cone", body);
}

bool check_empty_cone(const APComplex& cx, const std::vector<std::string>& lines) {
  Vector z(cx.cells1.size(), Rational(0));
  std::vector<bool> seen(z.size(), false);
  for (const auto& l : lines) {
    auto w = words(l);
    if (w.size() != 3 || w[0] != "z") return false;
    std::size_t k = 0;
    while (k < cx.cells1.size() && cx.cells1[k].label() != w[1]) ++k;
    if (k == cx.cells1.size() || seen[k]) return false;
    seen[k] = true;
    z[k] = parse_rational(w[2]);
  }
  return verify_empty_cone_certificate(cx, z);
}

std::string surface_body(const APComplex& cx, const GluedSurface& s, long n) {
  std::string body = "n: " + std::to_string(n) + "\n";
  body += "copies: " + std::to_string(s.copies.size()) + "\n";
  for (const auto& c : s.copies) {
    body += "copy " + std::to_string(c.copy_id) + " " + cx.cells2[c.tile] + " " + (c.sign > 0 ? "+" : "-") + "\n";
  }
  for (const auto& [a, b] : s.gluings()) {
    body += "glue " + std::to_string(slot_copy(a)) + "." + side_name(slot_side(a)) + " " +
            std::to_string(slot_copy(b)) + "." + side_name(slot_side(b)) + "\n";
  }
  body += "vertices: " + std::to_string(s.vertices) + "\nedges: " + std::to_string(s.edges) +
          "\nfaces: " + std::to_string(s.faces) + "\neuler: " + std::to_string(s.euler) + "\n";
  return body;
}

std::optional<std::size_t> parse_slot(const std::string& s, std::size_t copies) {
  auto dot = s.find('.');
  if (dot == std::string::npos) return std::nullopt;
  std::size_t copy = std::stoul(s.substr(0, dot));
  std::string side = s.substr(dot + 1);
  if (copy >= copies) return std::nullopt;
  for (Side sd : kSides) {
    if (side == side_name(sd)) return slot_index(copy, sd);
  }
  return std::nullopt;
}

// Rebuilds a surface from its witness block; nullopt when malformed.
std::optional<GluedSurface> parse_surface(const APComplex& cx, const std::vector<std::string>& lines, long& n,
                                          long& euler) {
  GluedSurface s;
  std::vector<std::pair<std::string, std::string>> glues;
  for (const auto& l : lines) {
    auto w = words(l);
    if (w.empty()) continue;
    if (w[0] == "n:" && w.size() == 2) n = std::stol(w[1]);
    if (w[0] == "euler:" && w.size() == 2) euler = std::stol(w[1]);
    if (w[0] == "copy" && w.size() == 4) {
      std::size_t t = 0;
      while (t < cx.cells2.size() && cx.cells2[t] != w[2]) ++t;
      if (t == cx.cells2.size()) return std::nullopt;
      s.copies.push_back(SquareCopy{std::stoul(w[1]), t, w[3] == "+" ? 1 : -1});
    }
    if (w[0] == "glue" && w.size() == 3) glues.emplace_back(w[1], w[2]);
  }
  s.mate.assign(4 * s.copies.size(), std::numeric_limits<std::size_t>::max());
  for (const auto& [x, y] : glues) {
    auto a = parse_slot(x, s.copies.size());
    auto b = parse_slot(y, s.copies.size());
    if (!a || !b) return std::nullopt;
    if (s.mate[*a] != std::numeric_limits<std::size_t>::max() ||
        s.mate[*b] != std::numeric_limits<std::size_t>::max()) {
      return std::nullopt;
    }
    s.mate[*a] = *b;
    s.mate[*b] = *a;
  }
  for (auto m : s.mate) {
    if (m == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  }
  s.finalize();
  return s;
}

void write_table(Report& r, const std::string& name, const NormTable& t) {
  std::string body;
  for (const auto& row : t.rows) {
    body += "n=" + std::to_string(row.n) + " value=" + std::to_string(row.value) +
            " status=" + (row.status == SearchStatus::exact ? "exact" : "partial") + "\n";
  }
  body += "best_upper=" + (t.best_upper ? to_string(*t.best_upper) : std::string("none")) + "\n";
  r.block(name, body);
}

struct Settings {
  Budget budget;
  long max_n = kDefaultMaxN;
  long max_p = 2;
  long evidence_n = 2;
  long p = 1;
  std::string out_path;
};

struct Loaded {
  bool polygon = false;
  WangTileSet wang;
  PolygonPrototileSet poly;
};

Loaded load(const std::string& path) {
  std::string text = read_file(path);
  Loaded l;
  l.polygon = is_polyset(text);
  if (l.polygon) {
    l.poly = parse_polygon_set(text);
  } else {
    l.wang = parse_wang_tileset(text);
  }
  return l;
}

WangTileSet require_wang(const Loaded& l, const char* command) {
  if (l.polygon) throw TilingError(std::string(command) + " needs a Wang tile set; run squareify first");
  return l.wang;
}

void emit(const Report& r, const Settings& s, std::ostream& out) {
  if (s.out_path.empty()) {
    out << r.str();
  } else {
    write_file(s.out_path, r.str());
  }
}

int cmd_analyze(const std::string& file, const Settings& s, std::ostream& out) {
  Loaded in = load(file);
  Report r;
  r.kv("command", "analyze");
  APComplex cx;
  if (in.polygon) {
    r.kv("set", in.poly.name);
    r.kv("kind", "polygon");
    r.block("polyset", canonical_serialize(in.poly));
    cx = build_ap_complex(in.poly);
  } else {
    r.kv("set", in.wang.name);
    r.kv("kind", "wang");
    r.block("tileset", canonical_serialize(in.wang));
    cx = build_ap_complex(in.wang);
  }
  r.kv("cells2", std::to_string(cx.cells2.size()));
  r.kv("cells1", std::to_string(cx.cells1.size()));
  r.kv("max_vertices", std::to_string(cx.max_vertices));
  if (in.polygon) {
    auto v = validate_polygon_set(in.poly);
    r.kv("gluable_pairs", std::to_string(v.gluable_pairs()));
    std::string iso, never;
    for (const auto& c : v.isolated_colors) iso += (iso.empty() ? "" : ",") + c;
    for (const auto& c : v.never_translates) never += (never.empty() ? "" : ",") + c;
    r.kv("isolated_colors", "[" + iso + "]");
    r.kv("never_translates", "[" + never + "]");
  }
  write_rules(r, cx);
  auto cone = simplex_extreme_points(cx, s.budget);
  r.kv("kernel_dim", std::to_string(cone.kernel_dim));
  std::string basis;
  for (const auto& b : cone.basis) basis += format_cycle(b, cx.cells2) + "\n";
  r.block("basis", basis);
  auto witness = nonneg_cycle_exists(cx);
  r.kv("cone", witness.nonempty ? "nonempty" : "empty");
  if (witness.nonempty) {
    r.kv("witness", format_point(witness.witness, cx.cells2));
  } else {
    write_empty_cone(r, cx, witness.certificate);
  }
  r.kv("extreme_points", point_list(cone.extreme_points, cx.cells2));
  r.kv("extreme_points_complete", bool_word(cone.complete));
  emit(r, s, out);
  return cone.complete ? Exit::ok : Exit::budget_exhausted;
}

int cmd_norm(const std::string& file, const std::string& cycle, const Settings& s, std::ostream& out) {
  Loaded in = load(file);
  auto set = require_wang(in, "norm");
  auto cx = build_ap_complex(set);
  Vector c = parse_cycle(cycle, cx.cells2);
  auto table = asymptotic_norm_upper(cx, c, s.max_n, s.budget);
  Report r;
  r.kv("command", "norm");
  r.kv("set", set.name);
  r.block("tileset", canonical_serialize(set));
  r.kv("cycle", format_cycle(c, cx.cells2));
  r.kv("denominator", to_string(table.denominator));
  r.kv("max_n", std::to_string(s.max_n));
  write_table(r, "normtable", table);
  r.kv("best_upper", table.best_upper ? to_string(*table.best_upper) : "none");
  r.kv("complete", bool_word(table.complete()));
  r.kv("lipschitz", to_string(lipschitz_bound(cx, c)));
  if (table.best_witness) r.block("witness", surface_body(cx, *table.best_witness, table.best_n));
  emit(r, s, out);
  return Exit::ok;
}

void write_verdict(Report& r, const WangTileSet& set, const Verdict& v) {
  auto cx = build_ap_complex(set);
  r.line(std::string("verdict ") + verdict_name(v.kind));
  if (v.kind == VerdictKind::cannot_tile && v.obstruction == Obstruction::empty_cone) {
    write_empty_cone(r, cx, v.empty_cone_certificate);
    return;
  }
  if (v.kind == VerdictKind::cannot_tile) {
    r.block("certificate no_pattern", "p: " + std::to_string(v.no_pattern_p) + "\n");
    return;
  }
  if (v.kind == VerdictKind::tiles_periodically) {
    const auto& t = *v.tiling;
    std::string body = "period " + std::to_string(t.k) + " " + std::to_string(t.l) + " " + std::to_string(t.s) + "\n";
    for (long y = 0; y < t.l; ++y) {
      for (long x = 0; x < t.k; ++x) {
        body += "at " + std::to_string(x) + " " + std::to_string(y) + " " + set.tiles[t.at(x, y)].id + "\n";
      }
    }
    body += "cycle: " + format_cycle(v.periodic_cycle, cx.cells2) + "\n";
    body += "ev: " + format_point(ev_of_periodic(t, set.size()), cx.cells2) + "\n";
    r.block("certificate periodic", body);
    return;
  }
  r.kv("patterns_max_p", std::to_string(v.max_p));
  r.kv("max_weight", std::to_string(v.max_weight));
  r.kv("extreme_points", point_list(v.cone.extreme_points, cx.cells2));
  r.kv("extreme_points_complete", bool_word(v.cone.complete));
  for (const auto& e : v.evidence) {
    std::string l = "evidence p=" + std::to_string(e.p) + " patterns=" + std::to_string(e.patterns);
    for (std::size_t i = 0; i < e.cone_member.size(); ++i) {
      l += " cone_member(" + std::to_string(i) + ")=" +
           (e.cone_member[i] ? bool_word(*e.cone_member[i]) : std::string("unknown"));
    }
    l += " complete=" + bool_word(e.complete);
    r.line(l);
  }
  for (std::size_t i = 0; i < v.norm_tables.size(); ++i) write_table(r, "normtable " + std::to_string(i), v.norm_tables[i]);
}

int cmd_tileability(const std::string& file, const Settings& s, std::ostream& out) {
  Loaded in = load(file);
  Report r;
  r.kv("command", "tileability");
  WangTileSet set;
  if (in.polygon) {
    auto sq = squareify(in.poly);
    r.kv("set", in.poly.name);
    r.block("polyset", canonical_serialize(in.poly));
    r.kv("scale", to_string(sq.scale));
    set = sq.encoding.tiles;
  } else {
    set = in.wang;
    r.kv("set", set.name);
  }
  r.block("tileset", canonical_serialize(set));
  TileabilityOptions opts;
  opts.max_p = s.max_p;
  opts.max_n = s.evidence_n;
  opts.budget = s.budget;
  r.kv("max_p", std::to_string(s.max_p));
  write_verdict(r, set, tileability(set, opts));
  emit(r, s, out);
  return Exit::ok;
}

int cmd_squareify(const std::string& file, const Settings& s, std::ostream& out) {
  Loaded in = load(file);
  if (!in.polygon) throw TilingError("squareify needs a polygon set");
  auto sq = squareify(in.poly);
  Report r;
  r.kv("command", "squareify");
  r.kv("set", in.poly.name);
  r.block("polyset", canonical_serialize(in.poly));
  r.kv("scale", to_string(sq.scale));
  r.kv("polygons", std::to_string(in.poly.polys.size()));
  r.kv("tiles", std::to_string(sq.encoding.tiles.size()));
  r.kv("seams", std::to_string(sq.encoding.map.seam_count()));
  r.kv("colors", std::to_string(sq.encoding.map.colors.size()));
  std::string wang = canonical_serialize(sq.encoding.tiles);
  r.block("tileset", wang);
  r.block("encoding", serialize_encoding_map(sq.encoding.map));
  out << r.str();
  if (!s.out_path.empty()) write_file(s.out_path, wang);
  return Exit::ok;
}

int cmd_wp(const std::string& file, const Settings& s, std::ostream& out) {
  Loaded in = load(file);
  auto set = require_wang(in, "wp");
  auto ps = enumerate_patterns(set, s.p, s.budget);
  Report r;
  r.kv("command", "wp");
  r.kv("set", set.name);
  r.block("tileset", canonical_serialize(set));
  r.kv("p", std::to_string(s.p));
  r.kv("patterns", std::to_string(ps.total()));
  r.kv("complete", bool_word(ps.complete));
  for (std::size_t j = 0; j < set.size(); ++j) {
    r.line("center " + set.tiles[j].id + " " + std::to_string(ps.by_center[j].size()));
  }
  if (!ps.complete) {
    out << r.str();
    return Exit::budget_exhausted;
  }
  if (ps.empty()) {
    out << r.str();
    return Exit::empty_pattern_set;
  }
  auto wp = build_wp_tileset(set, ps);
  std::string text = canonical_serialize(wp.tiles);
  r.kv("supertiles", std::to_string(wp.tiles.size()));
  r.block("wp_tileset", text);
  out << r.str();
  if (!s.out_path.empty()) write_file(s.out_path, text);
  return Exit::ok;
}

int cmd_forget(const std::string& file, const Settings& s, std::ostream& out) {
  Loaded in = load(file);
  auto set = require_wang(in, "forget");
  auto f = forget_colors(set);
  std::string text = canonical_serialize(f);
  Report r;
  r.kv("command", "forget");
  r.kv("set", set.name);
  r.block("tileset", canonical_serialize(set));
  r.block("forgotten", text);
  out << r.str();
  if (!s.out_path.empty()) write_file(s.out_path, text);
  return Exit::ok;
}

// Re-checks the certificates a report carries without repeating any search.
int cmd_verify(const std::string& file, const Settings& s, std::ostream& out) {
  ParsedReport rep = parse_report(read_file(file));
  const std::string command = rep.value("command");
  Report r;
  r.kv("command", "verify");
  r.kv("report", command);
  bool all = true;
  auto check = [&](const std::string& name, bool ok) {
    r.line("check " + name + ": " + (ok ? "ok" : "failed"));
    all = all && ok;
  };

  if (command == "squareify") {
    auto poly = parse_polygon_set(rep.text_of("polyset"));
    auto sq = squareify(poly);
    check("tileset", canonical_serialize(sq.encoding.tiles) == rep.text_of("tileset"));
    check("encoding", serialize_encoding_map(sq.encoding.map) == rep.text_of("encoding"));
    check("scale", to_string(sq.scale) == rep.value("scale"));
  } else if (command == "analyze" && rep.value("kind") == "polygon") {
    auto poly = parse_polygon_set(rep.text_of("polyset"));
    auto cx = build_ap_complex(poly);
    if (rep.value("cone") == "empty") check("empty_cone", check_empty_cone(cx, rep.lines_of("certificate empty_cone")));
    bool pts = true;
    for (const auto& p : parse_point_list(rep.value("extreme_points"), cx.cells2)) pts = pts && is_simplex_vertex(cx, p);
    check("extreme_points", pts);
  } else {
    auto set = parse_wang_tileset(rep.text_of("tileset"));
    auto cx = build_ap_complex(set);
    if (command == "analyze") {
      bool empty = rep.value("cone") == "empty";
      if (empty) {
        check("empty_cone", check_empty_cone(cx, rep.lines_of("certificate empty_cone")));
      } else {
        check("witness", is_cycle(cx, parse_point_list("[" + rep.value("witness") + "]", cx.cells2).at(0)));
      }
      auto pts = parse_point_list(rep.value("extreme_points"), cx.cells2);
      bool ok = true;
      for (const auto& p : pts) ok = ok && is_simplex_vertex(cx, p);
      check("extreme_points", ok);
      check("cone_consistency", empty == pts.empty() || rep.value("extreme_points_complete") == "false");
    } else if (command == "norm") {
      Vector c = parse_cycle(rep.value("cycle"), cx.cells2);
      check("cycle", is_cycle(cx, c));
      Integer d = denominator_lcm(c);
      check("denominator", to_string(d) == rep.value("denominator"));
      if (rep.blocks.count("witness")) {
        long n = 0, euler = 0;
        auto surf = parse_surface(cx, rep.lines_of("witness"), n, euler);
        check("witness_parse", surf.has_value());
        if (surf) {
          check("witness_surface", check_surface(cx, *surf).empty());
          Vector target(c.size());
          for (std::size_t i = 0; i < c.size(); ++i) target[i] = c[i] * Rational(d * n);
          check("witness_cycle", surface_cycle(*surf, cx.tile_count()) == target);
          check("witness_euler", surf->euler == euler);
          const std::string best = rep.value("best_upper");
          check("best_upper", best != "none" && parse_rational(best) == Rational(-surf->euler) / Rational(d * n));
        }
      }
    } else if (command == "tileability") {
      std::string verdict;
      for (const auto& l : rep.lines) {
        if (l.rfind("verdict ", 0) == 0) verdict = l.substr(8);
      }
      if (rep.blocks.count("polyset")) {
        auto sq = squareify(parse_polygon_set(rep.text_of("polyset")));
        check("encoding", canonical_serialize(sq.encoding.tiles) == rep.text_of("tileset"));
      }
      if (verdict == "CANNOT_TILE" && rep.blocks.count("certificate empty_cone")) {
        check("empty_cone", check_empty_cone(cx, rep.lines_of("certificate empty_cone")));
      } else if (verdict == "CANNOT_TILE") {
        auto w = words(rep.lines_of("certificate no_pattern").at(0));
        long p = std::stol(w.at(1));
        check("no_pattern", p >= 1 && count_patterns_by_rows(set, p) == 0);
      } else if (verdict == "TILES_PERIODICALLY") {
        const auto& lines = rep.lines_of("certificate periodic");
        PeriodicTiling t;
        auto head = words(lines.at(0));
        t.k = std::stol(head.at(1));
        t.l = std::stol(head.at(2));
        t.s = std::stol(head.at(3));
        t.cells.assign(static_cast<std::size_t>(t.k * t.l), 0);
        std::size_t placed = 0;
        std::string ev;
        for (const auto& l : lines) {
          auto w = words(l);
          if (w.size() == 4 && w[0] == "at") {
            long x = std::stol(w[1]), y = std::stol(w[2]);
            auto idx = set.index_of(w[3]);
            if (!idx || x < 0 || y < 0 || x >= t.k || y >= t.l) continue;
            t.cells[static_cast<std::size_t>(y * t.k + x)] = *idx;
            ++placed;
          }
          if (l.rfind("ev: ", 0) == 0) ev = l.substr(4);
        }
        check("domain", placed == t.cells.size() && t.s >= 0 && t.s < t.k);
        check("periodic_tiling", placed == t.cells.size() && verify_periodic_tiling(set, t));
        check("ev", format_point(ev_of_periodic(t, set.size()), cx.cells2) == ev);
      } else if (verdict == "UNDECIDED") {
        bool ok = true;
        for (const auto& p : parse_point_list(rep.value("extreme_points"), cx.cells2)) ok = ok && is_simplex_vertex(cx, p);
        check("extreme_points", ok);
      } else {
        check("verdict", false);
      }
    } else if (command == "wp") {
      long p = std::stol(rep.value("p"));
      if (rep.value("complete") == "true") {
        check("pattern_count", to_string(count_patterns_by_rows(set, p)) == rep.value("patterns"));
      }
      if (rep.blocks.count("wp_tileset")) {
        auto wp = parse_wang_tileset(rep.text_of("wp_tileset"));
        check("supertiles", std::to_string(wp.size()) == rep.value("patterns"));
      }
    } else if (command == "forget") {
      auto f = parse_wang_tileset(rep.text_of("forgotten"));
      bool ok = f.size() == set.size();
      for (std::size_t i = 0; ok && i < f.size(); ++i) {
        const auto& t = f.tiles[i];
        ok = t.id == set.tiles[i].id && t.top == t.bottom && t.top == t.left && t.top == t.right &&
             t.top == f.tiles[0].top;
      }
      check("monochrome", ok);
    } else {
      check("command", false);
    }
  }
  r.kv("result", all ? "ok" : "failed");
  emit(r, s, out);
  return all ? Exit::ok : Exit::verification_failed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tile-set analysis: cycles, surface norms, pattern refinement, tileability."};
  app.fallthrough();
  app.require_subcommand(1);
  Settings s;
  std::uint64_t nodes = s.budget.nodes;
  std::string seed;
  app.add_option("--budget-nodes", nodes, "node budget for every search")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "accepted for compatibility; every algorithm is deterministic");
  app.add_option("--out", s.out_path, "output file");

  std::string file, cycle;
  auto* analyze = app.add_subcommand("analyze", "complex, switching rules, cycle cone");
  analyze->add_option("file", file)->required();
  auto* norm = app.add_subcommand("norm", "norm table of a cycle");
  norm->add_option("file", file)->required();
  norm->add_option("cycle", cycle, "\"cycle <id>=<rational> ...\"")->required();
  norm->add_option("--max-n", s.max_n, "largest multiple")->check(CLI::Range(1L, 64L));
  auto* tile = app.add_subcommand("tileability", "decide tileability within budgets");
  tile->add_option("file", file)->required();
  tile->add_option("--max-p", s.max_p, "largest pattern radius")->check(CLI::Range(1L, 8L));
  tile->add_option("--max-n", s.evidence_n, "largest multiple in evidence tables")->check(CLI::Range(1L, 64L));
  auto* sq = app.add_subcommand("squareify", "polygon set to Wang tiles");
  sq->add_option("file", file)->required();
  auto* wp = app.add_subcommand("wp", "supertile set of radius p");
  wp->add_option("file", file)->required();
  wp->add_option("-p", s.p, "pattern radius")->check(CLI::Range(1L, 8L));
  auto* forget = app.add_subcommand("forget", "drop all colors");
  forget->add_option("file", file)->required();
  auto* verify = app.add_subcommand("verify", "re-check the certificates of a report");
  verify->add_option("report", file)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? Exit::ok : Exit::usage;
  }
  s.budget.nodes = nodes;

  try {
    if (analyze->parsed()) return cmd_analyze(file, s, out);
    if (norm->parsed()) return cmd_norm(file, cycle, s, out);
    if (tile->parsed()) return cmd_tileability(file, s, out);
    if (sq->parsed()) return cmd_squareify(file, s, out);
    if (wp->parsed()) return cmd_wp(file, s, out);
    if (forget->parsed()) return cmd_forget(file, s, out);
    if (verify->parsed()) return cmd_verify(file, s, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return Exit::usage;
  } catch (const NotACycle& e) {
    err << "error: " << e.what() << "\n";
    return Exit::not_a_cycle;
  } catch (const NonConvexInput& e) {
    err << "error: " << e.what() << "\n";
    return Exit::reduction_failed;
  } catch (const DegenerateAfterZigzag& e) {
    err << "error: " << e.what() << "\n";
    return Exit::reduction_failed;
  } catch (const EmptyPatternSet& e) {
    err << "error: " << e.what() << "\n";
    return Exit::empty_pattern_set;
  } catch (const BudgetExhausted& e) {
    err << "error: " << e.what() << "\n";
    return Exit::budget_exhausted;
  } catch (const SyntaxError& e) {
    err << "parse error: " << e.what() << "\n";
    return Exit::parse_error;
  } catch (const DuplicateId& e) {
    err << "parse error: " << e.what() << "\n";
    return Exit::parse_error;
  } catch (const EmptySet& e) {
    err << "parse error: " << e.what() << "\n";
    return Exit::parse_error;
  } catch (const NonSimplePolygon& e) {
    err << "parse error: " << e.what() << "\n";
    return Exit::parse_error;
  } catch (const ClockwisePolygon& e) {
    err << "parse error: " << e.what() << "\n";
    return Exit::parse_error;
  } catch (const EdgeColorCountMismatch& e) {
    err << "parse error: " << e.what() << "\n";
    return Exit::parse_error;
  } catch (const UnknownTile& e) {
    err << "parse error: " << e.what() << "\n";
    return Exit::parse_error;
  } catch (const DimensionMismatch& e) {
    err << "parse error: " << e.what() << "\n";
    return Exit::parse_error;
  } catch (const std::invalid_argument& e) {
    err << "parse error: " << e.what() << "\n";
    return Exit::parse_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return Exit::usage;
  }
  return Exit::usage;
}

}  // namespace tilenorm::cli
