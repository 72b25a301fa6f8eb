#include "qcat/tilings.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qcat {

namespace {

bool in_region(const Cell& c, int n) {
  return c.x >= 0 && c.y >= 1 && (c.x + c.y) % 2 == 1 && c.x + c.y <= 2 * n - 1;
}

// Occupancy map from cell to index into DyckTiling::tiles.
std::map<Cell, int> occupancy(const DyckTiling& t, bool validate) {
  std::map<Cell, int> owner;
  for (size_t k = 0; k < t.tiles.size(); ++k) {
    for (const Cell& c : t.tiles[k].cells()) {
      if (validate && !in_region(c, t.n)) {
        throw std::invalid_argument("tile cell outside the region");
      }
      if (!owner.emplace(c, static_cast<int>(k)).second) {
        if (validate) throw std::invalid_argument("tiles overlap");
        throw std::logic_error("tiles overlap");
      }
    }
  }
  if (validate &&
      owner.size() != static_cast<size_t>(t.n) * static_cast<size_t>(t.n)) {
    throw std::invalid_argument("tiles do not cover the region");
  }
  return owner;
}

}  // namespace

std::vector<Cell> Tile::cells() const {
  std::vector<Cell> out;
  out.reserve(2 * static_cast<size_t>(size) + 1);
  out.push_back(leftmost);
  for (int k = 1; k <= size; ++k) {
    out.push_back(Cell{leftmost.x + 2 * k - 1, leftmost.y + 1});
    out.push_back(Cell{leftmost.x + 2 * k, leftmost.y});
  }
  return out;
}

DyckTiling build_tiling(const MultiWord& w) {
  if (!is_permutation(w)) {
    throw std::invalid_argument("input is not a permutation");
  }
  const int n = static_cast<int>(w.size());
  DyckTiling t;
  t.n = n;
  std::vector<int> pos(n + 1, 0);
  for (int p = 1; p <= n; ++p) pos[w[p - 1]] = p;

  std::set<Cell> occupied;
  std::map<Cell, int> owner;  // cell -> index into t.tiles

  auto lay = [&](int label, Cell left, int size) {
    Tile tile{label, left, size};
    for (const Cell& c : tile.cells()) {
      if (!in_region(c, n)) throw std::logic_error("tile leaves the region");
      if (occupied.count(c)) throw std::logic_error("tile collides");
    }
    const int index = static_cast<int>(t.tiles.size());
    t.tiles.push_back(tile);
    for (const Cell& c : tile.cells()) {
      occupied.insert(c);
      owner[c] = index;
    }
  };

  for (int label = n; label >= 1; --label) {
    // Total zigzag size this trajectory must lay: the eastward shift of its
    // landing peak relative to a straight south-east descent.
    int rem = label - pos[label];
    for (int j = label + 1; j <= n; ++j) {
      if (pos[j] < pos[label]) ++rem;
    }
    const int peak_target = n + 1 - pos[label];
    Cell cur{0, 2 * (n - label) + 1};
    int landed_x = -1;
    while (landed_x < 0) {
      // Choose the tile laid at the free cell `cur`.  On the bottom row the
      // whole remaining size goes down in one zigzag (its copy shifted by
      // (0,-2) falls below the bottom path).  Against the flank of another
      // tile the zigzag is capped so that its shifted copy stays inside that
      // single tile; any excess is laid further along the descent.
      int size = 0;
      if (cur.y == 1) {
        size = rem;
      } else if (rem > 0) {
        const Cell se{cur.x + 1, cur.y - 1};
        auto it = owner.find(se);
        if (it != owner.end() && !(t.tiles[it->second].leftmost == se)) {
          const Tile& block = t.tiles[it->second];
          if (se.y != block.leftmost.y + 1) {
            throw std::logic_error("blocked by a cell that is not an up step");
          }
          size = std::min(rem, block.size - (cur.x - block.leftmost.x) / 2);
          if (size < 1) {
            throw std::logic_error("blocking tile cannot carry a zigzag");
          }
        }
      }
      lay(label, cur, size);
      rem -= size;
      // Follow exits east of the laid tile: connect through tiles entered at
      // their leftmost cell, resume the descent in free space, or terminate
      // at the bottom path or at an up step of another tile.
      Cell from{cur.x + 2 * size, cur.y};
      while (true) {
        if (from.y == 1) {
          if (rem > 0) {
            throw std::logic_error("bottom path reached with size remaining");
          }
          landed_x = from.x;
          break;
        }
        const Cell slot{from.x + 1, from.y - 1};
        auto next = owner.find(slot);
        if (next == owner.end()) {
          cur = slot;
          break;
        }
        if (t.tiles[next->second].leftmost == slot) {
          from = t.tiles[next->second].rightmost();
          continue;
        }
        if (rem > 0) {
          throw std::logic_error("trajectory blocked with size remaining");
        }
        landed_x = from.x;
        break;
      }
    }
    const int peak = landed_x / 2 + 1;
    if (peak != peak_target) {
      throw std::logic_error("trajectory landed at the wrong peak");
    }
  }
  if (occupied.size() != static_cast<size_t>(n) * static_cast<size_t>(n)) {
    throw std::logic_error("tiles do not cover the region");
  }
  return t;
}

MultiWord read_permutation(const DyckTiling& t) {
  const int n = t.n;
  const std::map<Cell, int> owner = occupancy(t, /*validate=*/true);
  // leftmost-cell index for the chain steps
  std::map<Cell, int> head;
  for (size_t k = 0; k < t.tiles.size(); ++k) {
    head.emplace(t.tiles[k].leftmost, static_cast<int>(k));
  }
  MultiWord w(static_cast<size_t>(n), 0);
  std::set<int> peaks_seen;
  for (int k = 1; k <= n; ++k) {
    const Cell anchor{0, 2 * k - 1};
    auto it = owner.find(anchor);
    if (it == owner.end()) throw std::invalid_argument("anchor cell uncovered");
    int tile_index = it->second;
    if (!(t.tiles[tile_index].leftmost == anchor)) {
      throw std::logic_error("anchor is not the head of its tile");
    }
    const int label = n - (anchor.y - 1) / 2;
    int peak = 0;
    while (true) {
      const Cell r = t.tiles[tile_index].rightmost();
      if (r.y == 1) {
        peak = r.x / 2 + 1;
        break;
      }
      const Cell slot{r.x + 1, r.y - 1};
      auto next = head.find(slot);
      if (next != head.end()) {
        tile_index = next->second;
        continue;
      }
      peak = r.x / 2 + 1;
      break;
    }
    if (peak < 1 || peak > n || !peaks_seen.insert(peak).second) {
      throw std::logic_error("trajectory peaks are not distinct");
    }
    w[static_cast<size_t>(n - peak)] = label;
  }
  return w;
}

long tile_maj(const Tile& t) {
  if (t.size == 0) return 0;
  if (t.leftmost.y % 2 == 0) {
    throw std::logic_error("non-trivial tile starts on an even row");
  }
  return (t.size + 1) + t.leftmost.x + (t.leftmost.y - 1) / 2;
}

long tiling_maj(const DyckTiling& t) {
  long total = 0;
  for (const Tile& tile : t.tiles) {
    if (tile.size > 0) total += tile_maj(tile);
  }
  return total;
}

long tiling_wtprime(const DyckTiling& t) {
  long total = 0;
  for (const Tile& tile : t.tiles) total += tile.size;
  return total;
}

bool is_cover_inclusive(const DyckTiling& t) {
  const std::map<Cell, int> owner = occupancy(t, /*validate=*/true);
  for (size_t k = 0; k < t.tiles.size(); ++k) {
    const std::vector<Cell> cs = t.tiles[k].cells();
    size_t below = 0;
    std::set<int> owners;
    for (const Cell& c : cs) {
      const Cell down{c.x, c.y - 2};
      if (down.y <= 0) {
        ++below;
        continue;
      }
      auto it = owner.find(down);
      if (it == owner.end()) return false;
      owners.insert(it->second);
    }
    if (below == cs.size()) continue;       // entirely below the region
    if (below > 0 || owners.size() != 1) return false;
  }
  return true;
}

std::string render_tiling(const DyckTiling& t) {
  const int n = t.n;
  std::map<Cell, int> zigzag_of;  // cell -> non-trivial tile order
  std::vector<const Tile*> zigzags;
  for (const Tile& tile : t.tiles) {
    if (tile.size == 0) continue;
    const int id = static_cast<int>(zigzags.size());
    zigzags.push_back(&tile);
    for (const Cell& c : tile.cells()) zigzag_of[c] = id;
  }
  std::ostringstream out;
  for (int y = 2 * n - 1; y >= 1; --y) {
    std::string line;
    for (int x = (y % 2 == 1) ? 0 : 1; x + y <= 2 * n - 1; x += 2) {
      if (static_cast<int>(line.size()) < x) {
        line.append(static_cast<size_t>(x) - line.size(), ' ');
      }
      char ch = '.';
      const Cell c{x, y};
      if (x == 0) {
        const int label = n - (y - 1) / 2;
        ch = (label < 10) ? static_cast<char>('0' + label)
                          : static_cast<char>('a' + label - 10);
      } else if (auto it = zigzag_of.find(c); it != zigzag_of.end()) {
        ch = static_cast<char>('A' + (it->second % 26));
      }
      line.push_back(ch);
    }
    out << line << "\n";
  }
  for (size_t i = 0; i < zigzags.size(); ++i) {
    const Tile& z = *zigzags[i];
    out << static_cast<char>('A' + (i % 26)) << ": label " << z.label
        << " size " << z.size << " leftmost (" << z.leftmost.x << ","
        << z.leftmost.y << ") maj " << tile_maj(z) << "\n";
  }
  out << "maj " << tiling_maj(t) << "\n";
  out << "wtprime " << tiling_wtprime(t) << "\n";
  return out.str();
}

}  // namespace qcat
