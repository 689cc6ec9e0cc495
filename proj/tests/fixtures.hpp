#pragma once

#include "tilenorm/homology.hpp"
#include "tilenorm/tileset.hpp"

#include <random>
#include <string>

namespace fixtures {

inline const char* kMono = "tileset MONO\ntile T N=a S=a E=a W=a\n";
inline const char* kDead = "tileset DEAD\ntile T N=a S=b E=c W=c\n";
inline const char* kChecker =
    "tileset CHECKER\n"
    "tile A N=1 S=2 E=4 W=3\n"
    "tile B N=2 S=1 E=3 W=4\n";

inline tilenorm::WangTileSet mono() { return tilenorm::parse_wang_tileset(kMono); }
inline tilenorm::WangTileSet dead() { return tilenorm::parse_wang_tileset(kDead); }
inline tilenorm::WangTileSet checker() { return tilenorm::parse_wang_tileset(kChecker); }

inline tilenorm::Vector vec(std::initializer_list<const char*> xs) {
  tilenorm::Vector v;
  for (auto x : xs) v.push_back(tilenorm::parse_rational(x));
  return v;
}

// Random set with 1..max_tiles tiles over 1..max_colors colors.
inline tilenorm::WangTileSet random_set(std::mt19937& rng, int max_tiles, int max_colors) {
  std::uniform_int_distribution<int> nt(1, max_tiles);
  std::uniform_int_distribution<int> nc(1, max_colors);
  int tiles = nt(rng);
  int colors = nc(rng);
  std::uniform_int_distribution<int> pick(0, colors - 1);
  tilenorm::WangTileSet set;
  set.name = "R";
  for (int t = 0; t < tiles; ++t) {
    auto c = [&] { return std::string(1, static_cast<char>('a' + pick(rng))); };
    tilenorm::WangTile tile;
    tile.id = "t" + std::to_string(t);
    tile.top = c();
    tile.bottom = c();
    tile.right = c();
    tile.left = c();
    set.tiles.push_back(tile);
  }
  return set;
}

}  // namespace fixtures
