#pragma once

#include <compare>
#include <string>
#include <vector>

#include "qcat/words.hpp"

namespace qcat {

// ---------------------------------------------------------------------------
// Tilings of the staircase region: cells (x, y) with x >= 0, y >= 1,
// x + y odd and x + y <= 2n - 1 (n*n cells in total).  A tile of size s
// covers the 2s + 1 cells (x, y), (x+1, y+1), (x+2, y), ..., (x+2s, y)
// from its leftmost cell; size 0 is a single cell.
// ---------------------------------------------------------------------------

struct Cell {
  int x = 0;
  int y = 0;
  auto operator<=>(const Cell&) const = default;
};

struct Tile {
  int label = 0;  // the trajectory (permutation value) that laid the tile
  Cell leftmost;
  int size = 0;

  std::vector<Cell> cells() const;
  Cell rightmost() const { return Cell{leftmost.x + 2 * size, leftmost.y}; }

  bool operator==(const Tile&) const = default;
};

struct DyckTiling {
  int n = 0;
  std::vector<Tile> tiles;  // in lay order
};

// Builds the tiling of a permutation.  Each value i of w lays one trajectory
// of tiles, running from the anchor (0, 2(n-i)+1) to the bottom cell whose
// x determines the landing peak n+1-pos(i).  Trajectories of the larger
// values are laid first.
DyckTiling build_tiling(const MultiWord& w);

// Reads the permutation back from the tile geometry alone (stored labels are
// ignored).  Throws std::invalid_argument if the tiles do not cover the
// region disjointly; std::logic_error if the trajectory chains are
// inconsistent.
MultiWord read_permutation(const DyckTiling& t);

// Contribution of one non-trivial tile: (size + 1) + x + (y - 1)/2 at its
// leftmost cell (whose row is always odd).
long tile_maj(const Tile& t);
// Sum of the contributions above over the tiles of positive size.
long tiling_maj(const DyckTiling& t);
// Sum of the tile sizes; equals inv of the underlying permutation.
long tiling_wtprime(const DyckTiling& t);

// A tiling is cover-inclusive when every tile, translated down by one row
// pair (y -> y - 2), lands either entirely below the region or entirely
// inside a single other tile.
bool is_cover_inclusive(const DyckTiling& t);

// ASCII picture (rows y = 2n-1 down to 1, one character per cell: trajectory
// digit on the x = 0 anchors, an uppercase letter per non-trivial tile,
// '.' elsewhere) followed by a legend and the statistic totals.
std::string render_tiling(const DyckTiling& t);

}  // namespace qcat
