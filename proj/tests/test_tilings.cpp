#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>

#include "qcat/objects.hpp"
#include "qcat/statistics.hpp"
#include "qcat/tilings.hpp"

using namespace qcat;

namespace {

std::vector<long> positive_tile_majs(const DyckTiling& t) {
  std::vector<long> out;
  for (const auto& tile : t.tiles) {
    if (tile.size > 0) out.push_back(tile_maj(tile));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("tile geometry") {
  const Tile t{4, Cell{2, 1}, 2};
  const std::vector<Cell> cs = t.cells();
  REQUIRE(cs.size() == 5);
  CHECK(cs[0] == Cell{2, 1});
  CHECK(cs[1] == Cell{3, 2});
  CHECK(cs[2] == Cell{4, 1});
  CHECK(cs[3] == Cell{5, 2});
  CHECK(cs[4] == Cell{6, 1});
  CHECK(t.rightmost() == Cell{6, 1});
  CHECK(tile_maj(t) == 5);  // (2+1) + 2 + 0
  CHECK(tile_maj(Tile{1, Cell{0, 1}, 0}) == 0);  // trivial tiles contribute nothing
}

TEST_CASE("worked tiling of 24135") {
  const DyckTiling t = build_tiling(parse_multiword("24135"));
  CHECK(t.n == 5);
  std::vector<Tile> big;
  for (const auto& tile : t.tiles)
    if (tile.size > 0) big.push_back(tile);
  REQUIRE(big.size() == 2);
  // laid in decreasing label order
  CHECK(big[0].label == 4);
  CHECK(big[0].leftmost == Cell{2, 1});
  CHECK(big[0].size == 2);
  CHECK(tile_maj(big[0]) == 5);
  CHECK(big[1].label == 2);
  CHECK(big[1].leftmost == Cell{4, 3});
  CHECK(big[1].size == 1);
  CHECK(tile_maj(big[1]) == 7);

  CHECK(tiling_maj(t) == 12);
  CHECK(tiling_wtprime(t) == 3);
  CHECK(tiling_wtprime(t) == inv(parse_multiword("24135")));
  CHECK(is_cover_inclusive(t));
  CHECK(read_permutation(t) == parse_multiword("24135"));
}

TEST_CASE("read_permutation uses geometry only") {
  DyckTiling t = build_tiling(parse_multiword("24135"));
  for (auto& tile : t.tiles) tile.label = 0;
  CHECK(read_permutation(t) == parse_multiword("24135"));
}

TEST_CASE("per-tile contributions for selected permutations") {
  CHECK(positive_tile_majs(build_tiling(parse_multiword("2143"))) ==
        std::vector<long>({2, 6}));
  CHECK(positive_tile_majs(build_tiling(parse_multiword("4213"))) ==
        std::vector<long>({4, 5}));
  CHECK(positive_tile_majs(build_tiling(parse_multiword("4132"))) ==
        std::vector<long>({3, 4}));
  CHECK(positive_tile_majs(build_tiling(parse_multiword("3214"))) ==
        std::vector<long>({5, 5}));
  CHECK(positive_tile_majs(build_tiling(parse_multiword("4321"))) ==
        std::vector<long>({4, 4, 4}));
  CHECK(positive_tile_majs(build_tiling(parse_multiword("1432"))) ==
        std::vector<long>({3, 3}));
  CHECK(positive_tile_majs(build_tiling(parse_multiword("4312"))) ==
        std::vector<long>({4, 4}));
  CHECK(positive_tile_majs(build_tiling(parse_multiword("1234"))).empty());
}

TEST_CASE("closed form per trajectory holds exactly on 231-avoiding input") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& pi : enumerate_avoiding(n, "231")) {
      const DyckTiling t = build_tiling(pi);
      std::map<int, int> pos;
      for (int i = 0; i < n; ++i) pos[pi[static_cast<std::size_t>(i)]] = i + 1;
      for (const auto& tile : t.tiles) {
        if (tile.size == 0) continue;
        const int i = tile.label;
        CHECK(tile_maj(tile) == i + 1 - pos[i] + 2 * (n - i));
      }
    }
  }
}

TEST_CASE("closed form breaks beyond the avoidance class") {
  // 24135 contains the pattern 231; the per-trajectory formula would give
  // 5 + 8 = 13 while the true total is 12.
  const MultiWord pi = parse_multiword("24135");
  const DyckTiling t = build_tiling(pi);
  long closed = 0;
  std::map<int, int> pos;
  for (int i = 0; i < 5; ++i) pos[pi[static_cast<std::size_t>(i)]] = i + 1;
  for (const auto& tile : t.tiles) {
    if (tile.size == 0) continue;
    closed += tile.label + 1 - pos[tile.label] + 2 * (5 - tile.label);
  }
  CHECK(closed == 13);
  CHECK(tiling_maj(t) == 12);
}

TEST_CASE("every permutation round-trips and stays cover-inclusive") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& pi : enumerate_permutations(n)) {
      const DyckTiling t = build_tiling(pi);
      CHECK(is_cover_inclusive(t));
      CHECK(read_permutation(t) == pi);
      CHECK(tiling_wtprime(t) == inv(pi));
      // At most one non-trivial tile per trajectory on 231-avoiding input.
      // In general the shift splits: cover-inclusivity caps each zigzag by
      // the tile it rests on (14253 lays two size-1 tiles for label 4).
      if (!contains_231(pi)) {
        std::map<int, int> big;
        for (const auto& tile : t.tiles)
          if (tile.size > 0) ++big[tile.label];
        for (const auto& [label, count] : big) CHECK(count == 1);
      }
    }
  }
}

TEST_CASE("a split trajectory stacks capped zigzag tiles") {
  // 14253: the trajectory of 4 carries shift 2, but a size-2 tile on its
  // anchor would overhang the size-1 tile below it; the construction lays
  // size 1 there and the remaining size 1 on the bottom row.
  const DyckTiling t = build_tiling(parse_multiword("14253"));
  std::vector<Tile> big;
  for (const auto& tile : t.tiles)
    if (tile.size > 0) big.push_back(tile);
  REQUIRE(big.size() == 3);
  CHECK(big[0].label == 5);
  CHECK(big[0].leftmost == Cell{0, 1});
  CHECK(big[0].size == 1);
  CHECK(big[1].label == 4);
  CHECK(big[1].leftmost == Cell{0, 3});
  CHECK(big[1].size == 1);
  CHECK(big[2].label == 4);
  CHECK(big[2].leftmost == Cell{4, 1});
  CHECK(big[2].size == 1);
  CHECK(is_cover_inclusive(t));
  CHECK(read_permutation(t) == parse_multiword("14253"));
  CHECK(tiling_wtprime(t) == 3);
}

TEST_CASE("defective covers are rejected") {
  // two tiles sharing the cell (0,1)
  DyckTiling overlap;
  overlap.n = 2;
  overlap.tiles = {Tile{2, Cell{0, 1}, 1}, Tile{1, Cell{0, 1}, 0}};
  CHECK_THROWS_AS(read_permutation(overlap), std::invalid_argument);
  // a cover with a hole
  DyckTiling gap;
  gap.n = 2;
  gap.tiles = {Tile{2, Cell{0, 1}, 0}};
  CHECK_THROWS_AS(read_permutation(gap), std::invalid_argument);
}

TEST_CASE("rendering") {
  const std::string s = render_tiling(build_tiling(parse_multiword("24135")));
  CHECK(s.find("label 4 size 2 leftmost (2,1) maj 5") != std::string::npos);
  CHECK(s.find("label 2 size 1 leftmost (4,3) maj 7") != std::string::npos);
  CHECK(s.find("maj 12") != std::string::npos);
  CHECK(s.find("wtprime 3") != std::string::npos);
}
