#include "doctest.h"
#include "fixtures.hpp"

#include "tilenorm/errors.hpp"
#include "tilenorm/surface.hpp"

#include <algorithm>
#include <map>
#include <random>

using namespace tilenorm;
using fixtures::vec;

namespace {

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

}  // namespace

TEST_CASE("slot polarity") {
  CHECK(slot_polarity(Side::bottom, 1) == 1);
  CHECK(slot_polarity(Side::right, 1) == 1);
  CHECK(slot_polarity(Side::top, 1) == -1);
  CHECK(slot_polarity(Side::left, 1) == -1);
  CHECK(slot_polarity(Side::top, -1) == 1);
  CHECK(slot_polarity(Side::left, -1) == 1);
  CHECK(slot_polarity(Side::bottom, -1) == -1);
}

TEST_CASE("MONO single square torus") {
  auto cx = build_ap_complex(fixtures::mono());
  auto s = build_surface(cx, vec({"1"}));
  CHECK(s.faces == 1);
  CHECK(s.edges == 2);
  CHECK(s.vertices == 1);
  CHECK(euler_characteristic(s) == 0);
  CHECK(s.mate[slot_index(0, Side::top)] == slot_index(0, Side::bottom));
  CHECK(s.mate[slot_index(0, Side::left)] == slot_index(0, Side::right));
  CHECK(check_surface(cx, s).empty());
  CHECK(surface_cycle(s, 1) == vec({"1"}));

  auto cert = thurston_norm(cx, vec({"1"}));
  CHECK(cert.value == 0);
  CHECK(cert.status == SearchStatus::exact);
  auto brute = thurston_norm_bruteforce(cx, vec({"1"}));
  CHECK(brute.value == 0);

  auto t = extract_periodic_tiling(cx, s);
  CHECK(t.k == 1);
  CHECK(t.l == 1);
  CHECK(t.s == 0);
  CHECK(t.cells == std::vector<std::size_t>{0});
  CHECK(ev_of_periodic(t, 1) == vec({"1"}));
}

TEST_CASE("MONO multiples") {
  auto cx = build_ap_complex(fixtures::mono());
  auto two = build_surface(cx, vec({"2"}));
  CHECK(euler_characteristic(two) == 0);
  CHECK(check_surface(cx, two).empty());
  for (const char* n : {"2", "3"}) {
    auto brute = thurston_norm_bruteforce(cx, vec({n}));
    CHECK(brute.value == 0);
    auto bb = thurston_norm(cx, vec({n}));
    CHECK(bb.value == 0);
    CHECK(bb.status == SearchStatus::exact);
  }
  CHECK(thurston_norm(cx, vec({"0"})).value == 0);
  CHECK_FALSE(thurston_norm(cx, vec({"0"})).witness);
}

TEST_CASE("CHECKER surfaces") {
  auto set = fixtures::checker();
  auto cx = build_ap_complex(set);
  auto s = build_surface(cx, vec({"1", "1"}));
  CHECK(euler_characteristic(s) == 0);
  CHECK(s.vertices == 2);
  CHECK_THROWS_AS(build_surface(cx, vec({"1", "0"})), NotACycle);
  CHECK_THROWS_AS(build_surface(cx, vec({"0", "0"})), ZeroCycle);
  CHECK_THROWS_AS(build_surface(cx, vec({"1/2", "1/2"})), NotIntegral);
  CHECK_THROWS_AS(thurston_norm(cx, vec({"1", "0"})), NotACycle);
  CHECK(thurston_norm(cx, vec({"1", "1"})).value == 0);
  CHECK(thurston_norm_bruteforce(cx, vec({"1", "1"})).value == 0);

  auto torus = find_torus(cx, vec({"1", "1"}));
  REQUIRE(torus.outcome == TorusOutcome::found);
  auto t = extract_periodic_tiling(cx, *torus.surface);
  CHECK(t.k * t.l == 2);
  CHECK(t.k == 2);
  CHECK(t.l == 1);
  CHECK(t.s == 1);
  CHECK(verify_periodic_tiling(set, t));
  CHECK(ev_of_periodic(t, 2) == vec({"1/2", "1/2"}));
}

TEST_CASE("DEAD has no surfaces") {
  auto cx = build_ap_complex(fixtures::dead());
  CHECK_THROWS_AS(thurston_norm_bruteforce(cx, vec({"1"})), NotACycle);
  CHECK_THROWS_AS(thurston_norm(cx, vec({"1"})), NotACycle);
}

TEST_CASE("reflected copies can close into a sphere") {
  auto set = parse_wang_tileset("tileset S\ntile A N=a S=a E=b W=b\ntile B N=a S=a E=b W=b\n");
  auto cx = build_ap_complex(set);
  auto c = vec({"1", "-1"});
  auto brute = thurston_norm_bruteforce(cx, c);
  auto bb = thurston_norm(cx, c);
  CHECK(brute.value == -2);
  CHECK(bb.value == -2);
  REQUIRE(bb.witness);
  CHECK(check_surface(cx, *bb.witness).empty());
  CHECK(surface_cycle(*bb.witness, 2) == c);
  CHECK_THROWS_AS(extract_periodic_tiling(cx, *bb.witness), NotFlatTorus);
}

TEST_CASE("brute force cap") {
  auto checker = build_ap_complex(fixtures::checker());
  CHECK(thurston_norm_bruteforce(checker, vec({"4", "4"})).value == 0);
  auto cx = build_ap_complex(fixtures::mono());
  CHECK_THROWS_AS(thurston_norm_bruteforce(cx, vec({"9"})), TooLarge);
}

TEST_CASE("corner class of size 8 is not a flat torus") {
  auto cx = build_ap_complex(fixtures::mono());
  std::mt19937 rng(1);
  bool seen = false;
  for (int i = 0; i < 2000 && !seen; ++i) {
    auto s = random_pairing(cx, vec({"4"}), rng);
    CHECK(check_surface(cx, s).empty());
    if (std::find(s.class_sizes.begin(), s.class_sizes.end(), 8) != s.class_sizes.end() &&
        s.components.size() == 1) {
      seen = true;
      CHECK_THROWS_AS(extract_periodic_tiling(cx, s), NotFlatTorus);
      CHECK(euler_characteristic(s) < 0);
    }
  }
  CHECK(seen);
}

TEST_CASE("random pairings satisfy Gauss-Bonnet and parity") {
  std::mt19937 rng(9);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    auto set = fixtures::random_set(rng, 3, 2);
    auto cx = build_ap_complex(set);
    auto basis = cycle_space_basis(cx);
    if (basis.empty()) continue;
    std::uniform_int_distribution<int> coef(-2, 2);
    Vector c(cx.tile_count(), Rational(0));
    for (const auto& b : basis) {
      auto prim = primitive_direction(b);
      int k = coef(rng);
      for (std::size_t j = 0; j < c.size(); ++j) c[j] += k * prim[j];
    }
    long slots = 0;
    for (auto& v : c) slots += 4 * std::abs(v.get_num().get_si());
    if (slots == 0 || slots > 40) continue;
    auto s = random_pairing(cx, c, rng);
    CHECK(check_surface(cx, s).empty());
    CHECK(surface_cycle(s, cx.tile_count()) == c);
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("branch and bound matches brute force on mixed-sign cycles") {
  std::mt19937 rng(21);
  int compared = 0;
  for (int i = 0; i < 300; ++i) {
    auto set = fixtures::random_set(rng, 3, 2);
    auto cx = build_ap_complex(set);
    auto basis = cycle_space_basis(cx);
    if (basis.empty()) continue;
    std::uniform_int_distribution<int> coef(-2, 2);
    Vector c(cx.tile_count(), Rational(0));
    for (const auto& b : basis) {
      auto prim = primitive_direction(b);
      int k = coef(rng);
      for (std::size_t j = 0; j < c.size(); ++j) c[j] += k * prim[j];
    }
    long slots = 0;
    for (auto& v : c) slots += 4 * std::abs(v.get_num().get_si());
    if (slots == 0 || slots > 24) continue;
    auto bb = thurston_norm(cx, c);
    auto brute = thurston_norm_bruteforce(cx, c);
    REQUIRE(bb.status == SearchStatus::exact);
    CHECK(bb.value == brute.value);
    CHECK(check_surface(cx, *bb.witness).empty());
    CHECK(surface_cycle(*bb.witness, cx.tile_count()) == c);
    ++compared;
  }
  CHECK(compared > 30);
}

TEST_CASE("budget exhaustion reports an upper bound") {
  auto cx = build_ap_complex(fixtures::mono());
  Budget tiny;
  tiny.nodes = 3;
  auto cert = thurston_norm(cx, vec({"5"}), tiny);
  CHECK(cert.status == SearchStatus::upper_bound);
  REQUIRE(cert.witness);
  CHECK(cert.value == -cert.witness->euler);
  auto torus = find_torus(cx, vec({"5"}), tiny);
  CHECK(torus.outcome != TorusOutcome::none);
}
