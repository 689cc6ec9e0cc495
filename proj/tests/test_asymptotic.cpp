#include "doctest.h"
#include "fixtures.hpp"

#include "tilenorm/asymptotic.hpp"
#include "tilenorm/errors.hpp"

#include <random>

using namespace tilenorm;
using fixtures::vec;

TEST_CASE("MONO table") {
  auto cx = build_ap_complex(fixtures::mono());
  auto t = asymptotic_norm_upper(cx, vec({"1"}), 3);
  REQUIRE(t.rows.size() == 3);
  for (const auto& r : t.rows) {
    CHECK(r.value == 0);
    CHECK(r.status == SearchStatus::exact);
  }
  REQUIRE(t.best_upper);
  CHECK(*t.best_upper == 0);
  CHECK(t.complete());
}

TEST_CASE("CHECKER half cycle") {
  auto cx = build_ap_complex(fixtures::checker());
  auto t = asymptotic_norm_upper(cx, vec({"1/2", "1/2"}));
  CHECK(t.denominator == 2);
  CHECK(t.rows[0].value == 0);
  CHECK(*t.best_upper == 0);
  REQUIRE(t.best_witness);
  CHECK(t.best_witness->euler == 0);
}

TEST_CASE("zero cycle table") {
  auto cx = build_ap_complex(fixtures::checker());
  auto t = asymptotic_norm_upper(cx, vec({"0", "0"}));
  REQUIRE(t.rows.size() == 1);
  CHECK(t.rows[0].value == 0);
  CHECK(*t.best_upper == 0);
}

TEST_CASE("table rejects non-cycles") {
  auto cx = build_ap_complex(fixtures::checker());
  CHECK_THROWS_AS(asymptotic_norm_upper(cx, vec({"1", "0"})), NotACycle);
  CHECK_THROWS_AS(asymptotic_norm_upper(cx, vec({"1", "1"}), 0), std::invalid_argument);
}

TEST_CASE("lipschitz bound") {
  auto cx = build_ap_complex(fixtures::mono());
  CHECK(lipschitz_bound(cx, vec({"1"})) == 4);
  CHECK(lipschitz_bound(cx, vec({"0"})) == 0);
  auto ch = build_ap_complex(fixtures::checker());
  CHECK(lipschitz_bound(ch, vec({"1/2", "1/2"})) == 4);
  auto tri = parse_polygon_set(
      "polyset P\npoly T\nvertex 0 0\nvertex 1 0\nvertex 0 1\nedgecolor 0 a\nedgecolor 1 b\nedgecolor 2 c\n"
      "poly S\nvertex 0 0\nvertex 1 0\nvertex 1 1\nvertex 0 1\nvertex -1 1/2\n"
      "edgecolor 0 a\nedgecolor 1 b\nedgecolor 2 c\nedgecolor 3 d\nedgecolor 4 e\n");
  auto pc = build_ap_complex(tri);
  CHECK(lipschitz_bound(pc, vec({"1", "1/3"})) == Rational(20, 3));
}

TEST_CASE("subadditivity examples") {
  auto cx = build_ap_complex(fixtures::mono());
  auto r = subadditivity_check(cx, vec({"1"}), vec({"1"}));
  CHECK(r.holds());
  CHECK(r.slack == 0);
  auto ch = build_ap_complex(fixtures::checker());
  CHECK(subadditivity_check(ch, vec({"1", "1"}), vec({"1", "1"})).norm_sum == 0);
  auto z = subadditivity_check(ch, vec({"0", "0"}), vec({"2", "2"}));
  CHECK(z.norm_first == 0);
  CHECK(z.slack == 0);
}

namespace {

// Non-negative integral cycles: integer combinations of primitive extreme rays.
std::vector<Vector> small_cycles(const APComplex& cx) {
  auto cone = simplex_extreme_points(cx);
  std::vector<Vector> out;
  for (const auto& p : cone.extreme_points) {
    Integer d = denominator_lcm(p);
    Vector v(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) v[i] = p[i] * Rational(d);
    Rational l1 = 0;
    for (const auto& x : v) l1 += x;
    if (l1 <= 3) out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("random subadditivity and scaling consistency") {
  std::mt19937 rng(23);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    auto set = fixtures::random_set(rng, 3, 3);
    auto cx = build_ap_complex(set);
    auto cycles = small_cycles(cx);
    for (const auto& a : cycles) {
      for (const auto& b : cycles) {
        auto r = subadditivity_check(cx, a, b);
        if (!r.all_exact) continue;
        CHECK(r.holds());
        ++checked;
      }
      // The row for n applied to 2a is the row for 2n applied to a.
      auto t1 = asymptotic_norm_upper(cx, a, 2);
      Vector twice(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) twice[i] = a[i] * 2;
      auto t2 = asymptotic_norm_upper(cx, twice, 1);
      if (t1.rows[1].status == SearchStatus::exact && t2.rows[0].status == SearchStatus::exact) {
        CHECK(t1.rows[1].value == t2.rows[0].value);
      }
      Rational prev;
      bool first = true;
      for (const auto& row : t1.rows) {
        if (!row.running_best) continue;
        if (!first) CHECK(*row.running_best <= prev);
        prev = *row.running_best;
        first = false;
      }
      if (t1.best_upper) CHECK(*t1.best_upper <= lipschitz_bound(cx, a));
    }
  }
  CHECK(checked > 20);
}
