#include "qcat/objects.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace qcat {

// ---------------------------------------------------------------------------
// Generalized Dyck words
// ---------------------------------------------------------------------------

bool is_r_dyck(const Word01& w, int r) {
  if (r < 1) return false;
  long zeros = 0, ones = 0;
  for (uint8_t c : w) {
    if (c == 0)
      ++zeros;
    else
      ++ones;
    if (ones > static_cast<long>(r) * zeros) return false;
  }
  return ones == static_cast<long>(r) * zeros;
}

bool is_prime_r_dyck(const Word01& w, int r) {
  if (w.empty() || !is_r_dyck(w, r)) return false;
  long zeros = 0, ones = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] == 0)
      ++zeros;
    else
      ++ones;
    if (ones == static_cast<long>(r) * zeros) return false;  // inner touch
  }
  return true;
}

std::vector<Word01> enumerate_r_dyck(int n, int r) {
  if (n < 0 || r < 1) throw std::invalid_argument("enumerate_r_dyck: need n >= 0, r >= 1");
  std::vector<Word01> out;
  Word01 cur;
  const long len = static_cast<long>(n) * (r + 1);
  std::function<void(long, long)> rec = [&](long zeros, long ones) {
    if (static_cast<long>(cur.size()) == len) {
      out.push_back(cur);
      return;
    }
    if (zeros < n) {
      cur.push_back(0);
      rec(zeros + 1, ones);
      cur.pop_back();
    }
    if (ones < static_cast<long>(r) * zeros) {
      cur.push_back(1);
      rec(zeros, ones + 1);
      cur.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

long dyck_coarea(const Word01& w) {
  long ones = 0, area = 0;
  for (uint8_t c : w) {
    if (c == 1)
      ++ones;
    else
      area += ones;
  }
  return area;
}

// ---------------------------------------------------------------------------
// r-Stirling permutations
// ---------------------------------------------------------------------------

bool is_stirling(const MultiWord& w, int r) {
  if (r < 1) return false;
  if (w.size() % static_cast<std::size_t>(r) != 0) return false;
  const int n = static_cast<int>(w.size()) / r;
  std::vector<int> first(n + 1, 0), last(n + 1, 0), count(n + 1, 0);
  for (int p = 1; p <= static_cast<int>(w.size()); ++p) {
    const int v = w[static_cast<std::size_t>(p - 1)];
    if (v < 1 || v > n) return false;
    if (count[v] == 0) first[v] = p;
    last[v] = p;
    ++count[v];
  }
  for (int v = 1; v <= n; ++v)
    if (count[v] != r) return false;
  for (int v = 1; v <= n; ++v)
    for (int p = first[v] + 1; p < last[v]; ++p)
      if (w[static_cast<std::size_t>(p - 1)] > v) return false;
  return true;
}

std::vector<MultiWord> enumerate_r_stirling(int n, int r) {
  if (n < 0 || r < 1) throw std::invalid_argument("enumerate_r_stirling: need n >= 0, r >= 1");
  std::vector<MultiWord> out;
  MultiWord cur;
  std::vector<int> open;             // stack of values with 1..r-1 copies placed
  std::vector<int> placed(n + 1, 0); // copies placed per value
  const std::size_t len = static_cast<std::size_t>(n) * static_cast<std::size_t>(r);
  std::function<void()> rec = [&]() {
    if (cur.size() == len) {
      out.push_back(cur);
      return;
    }
    const int top = open.empty() ? n + 1 : open.back();
    // New values below the open one, in increasing order, then the open value
    // itself: this visits completed words in lexicographic order.
    for (int v = 1; v < top; ++v) {
      if (placed[v] != 0) continue;
      placed[v] = 1;
      cur.push_back(v);
      if (r == 1) {
        rec();
      } else {
        open.push_back(v);
        rec();
        open.pop_back();
      }
      cur.pop_back();
      placed[v] = 0;
    }
    if (!open.empty()) {
      const int v = open.back();
      ++placed[v];
      cur.push_back(v);
      const bool closes = placed[v] == r;
      if (closes) open.pop_back();
      rec();
      if (closes) open.push_back(v);
      cur.pop_back();
      --placed[v];
    }
  };
  rec();
  return out;
}

bool is_231_avoiding(const MultiWord& w) { return !contains_231(w); }

std::vector<MultiWord> enumerate_permutations(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_permutations: need n >= 0");
  MultiWord id(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)] = i + 1;
  std::vector<MultiWord> out;
  do {
    out.push_back(id);
  } while (std::next_permutation(id.begin(), id.end()));
  return out;
}

namespace {

// Prefix-pruned search for 231-avoiding permutations: a new value is legal
// iff it exceeds every bottom of an already placed ascent.
void rec_231(int n, MultiWord& cur, std::vector<bool>& used, int max_ascent_bottom,
             std::vector<MultiWord>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  for (int v = max_ascent_bottom + 1; v <= n; ++v) {
    if (used[static_cast<std::size_t>(v)]) continue;
    int largest_below = 0;
    for (int u = v - 1; u >= 1; --u)
      if (used[static_cast<std::size_t>(u)]) {
        largest_below = u;
        break;
      }
    used[static_cast<std::size_t>(v)] = true;
    cur.push_back(v);
    rec_231(n, cur, used, std::max(max_ascent_bottom, largest_below), out);
    cur.pop_back();
    used[static_cast<std::size_t>(v)] = false;
  }
}

// 312-avoiding: a value v may be placed iff every value strictly between v
// and the current maximum is already placed (otherwise some unplaced value
// would later sit inside an inversion interval).
void rec_312(int n, MultiWord& cur, std::vector<bool>& used, int max_placed,
             std::vector<MultiWord>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  for (int v = 1; v <= n; ++v) {
    if (used[static_cast<std::size_t>(v)]) continue;
    bool ok = true;
    for (int u = v + 1; u < max_placed; ++u)
      if (!used[static_cast<std::size_t>(u)]) {
        ok = false;
        break;
      }
    if (!ok) continue;
    used[static_cast<std::size_t>(v)] = true;
    cur.push_back(v);
    rec_312(n, cur, used, std::max(max_placed, v), out);
    cur.pop_back();
    used[static_cast<std::size_t>(v)] = false;
  }
}

// 132-avoiding mirror: every value strictly between the current minimum and v
// must be already placed.
void rec_132(int n, MultiWord& cur, std::vector<bool>& used, int min_placed,
             std::vector<MultiWord>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  for (int v = 1; v <= n; ++v) {
    if (used[static_cast<std::size_t>(v)]) continue;
    bool ok = true;
    for (int u = min_placed + 1; u < v; ++u)
      if (!used[static_cast<std::size_t>(u)]) {
        ok = false;
        break;
      }
    if (!ok) continue;
    used[static_cast<std::size_t>(v)] = true;
    cur.push_back(v);
    rec_132(n, cur, used, std::min(min_placed, v), out);
    cur.pop_back();
    used[static_cast<std::size_t>(v)] = false;
  }
}

}  // namespace

std::vector<MultiWord> enumerate_avoiding(int n, const std::string& pattern) {
  if (n < 0) throw std::invalid_argument("enumerate_avoiding: need n >= 0");
  std::vector<MultiWord> out;
  MultiWord cur;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  if (pattern == "231")
    rec_231(n, cur, used, 0, out);
  else if (pattern == "312")
    rec_312(n, cur, used, 0, out);
  else if (pattern == "132")
    rec_132(n, cur, used, n + 1, out);
  else
    throw std::invalid_argument("enumerate_avoiding: unsupported pattern " + pattern);
  return out;
}

// ---------------------------------------------------------------------------
// Non-crossing partitions
// ---------------------------------------------------------------------------

namespace {

// Returns a crossing witness a < b < c < d with a,c in one block and b,d in
// another, if any exists.
std::optional<std::array<int, 4>> crossing_witness(const std::vector<std::vector<int>>& blocks) {
  for (std::size_t x = 0; x < blocks.size(); ++x) {
    for (std::size_t y = 0; y < blocks.size(); ++y) {
      if (x == y) continue;
      const auto& X = blocks[x];
      const auto& Y = blocks[y];
      for (std::size_t p = 0; p < X.size(); ++p) {
        for (std::size_t s = p + 1; s < X.size(); ++s) {
          const int a = X[p], c = X[s];
          int b = 0, d = 0;
          for (int v : Y) {
            if (v > a && v < c && b == 0) b = v;
            if (v > c) {
              d = v;
              break;
            }
          }
          if (b != 0 && d != 0) return std::array<int, 4>{a, b, c, d};
        }
      }
    }
  }
  return std::nullopt;
}

// Fast stack test used by the enumerator (no witness).
bool non_crossing_rgs(const std::vector<int>& rgs) {
  const int n = static_cast<int>(rgs.size());
  std::vector<int> last(static_cast<std::size_t>(n), 0), seen(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) last[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])] = i;
  std::vector<int> stack;
  for (int i = 0; i < n; ++i) {
    const int block = rgs[static_cast<std::size_t>(i)];
    if (seen[static_cast<std::size_t>(block)]++ == 0) {
      stack.push_back(block);
    } else if (stack.empty() || stack.back() != block) {
      return false;
    }
    if (i == last[static_cast<std::size_t>(block)]) stack.pop_back();
  }
  return true;
}

}  // namespace

NonCrossingPartition parse_nc(const std::string& text) {
  std::vector<std::vector<int>> blocks;
  std::vector<int> cur;
  const bool comma_mode = text.find(',') != std::string::npos;
  std::size_t i = 0;
  auto flush = [&](std::size_t at) {
    if (cur.empty()) throw ParseError("empty block in partition at position " + std::to_string(at));
    blocks.push_back(cur);
    cur.clear();
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '/') {
      flush(i + 1);
      ++i;
    } else if (comma_mode && c == ',') {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (comma_mode) {
        std::size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        cur.push_back(std::stoi(text.substr(i, j - i)));
        i = j;
      } else {
        if (c == '0') throw ParseError("element 0 is not allowed at position " + std::to_string(i + 1));
        cur.push_back(c - '0');
        ++i;
      }
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' at position " +
                       std::to_string(i + 1));
    }
  }
  flush(text.size());

  NonCrossingPartition p;
  int n = 0;
  for (const auto& b : blocks)
    for (int v : b) n = std::max(n, v);
  std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& b : blocks)
    for (int v : b) {
      if (v < 1) throw ParseError("elements must be positive");
      ++count[static_cast<std::size_t>(v)];
    }
  for (int v = 1; v <= n; ++v) {
    if (count[static_cast<std::size_t>(v)] == 0)
      throw ParseError("not a partition of [1," + std::to_string(n) + "]: missing element " +
                       std::to_string(v));
    if (count[static_cast<std::size_t>(v)] > 1)
      throw ParseError("element " + std::to_string(v) + " appears more than once");
  }
  p.n = n;
  p.blocks = std::move(blocks);
  for (auto& b : p.blocks) std::sort(b.begin(), b.end());
  std::sort(p.blocks.begin(), p.blocks.end(),
            [](const auto& u, const auto& v) { return u.front() < v.front(); });
  if (auto w = crossing_witness(p.blocks)) {
    const auto& q = *w;
    throw ParseError("blocks cross: witness (" + std::to_string(q[0]) + "," + std::to_string(q[1]) +
                     "," + std::to_string(q[2]) + "," + std::to_string(q[3]) + ")");
  }
  return p;
}

std::string format_nc(const NonCrossingPartition& p) {
  std::ostringstream os;
  const bool digits = p.n <= 9;
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    if (i) os << '/';
    for (std::size_t j = 0; j < p.blocks[i].size(); ++j) {
      if (j && !digits) os << ',';
      os << p.blocks[i][j];
    }
  }
  return os.str();
}

std::vector<NonCrossingPartition> enumerate_nc(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_nc: need n >= 0");
  std::vector<NonCrossingPartition> out;
  if (n == 0) {
    out.push_back(NonCrossingPartition{0, {}});
    return out;
  }
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int maxLabel) {
    if (i == n) {
      if (!non_crossing_rgs(rgs)) return;
      NonCrossingPartition p;
      p.n = n;
      p.blocks.assign(static_cast<std::size_t>(maxLabel) + 1, {});
      for (int j = 0; j < n; ++j)
        p.blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(j)])].push_back(j + 1);
      out.push_back(std::move(p));
      return;
    }
    for (int label = 0; label <= maxLabel + 1; ++label) {
      rgs[static_cast<std::size_t>(i)] = label;
      rec(i + 1, std::max(maxLabel, label));
    }
  };
  rgs[0] = 0;
  rec(1, 0);
  return out;
}

// ---------------------------------------------------------------------------
// Symmetric Dyck paths
// ---------------------------------------------------------------------------

bool is_symmetric_half(const Word01& half, int n) {
  long zeros = 0, ones = 0;
  for (uint8_t c : half) {
    if (c == 0)
      ++zeros;
    else
      ++ones;
    if (ones > zeros) return false;
  }
  return zeros == n;
}

SymmetricPath make_symmetric(const Word01& half) {
  long zeros = 0, ones = 0;
  for (std::size_t i = 0; i < half.size(); ++i) {
    if (half[i] == 0)
      ++zeros;
    else
      ++ones;
    if (ones > zeros)
      throw ParseError("not a symmetric half word: more ones than zeros in the prefix ending at position " +
                       std::to_string(i + 1));
  }
  return SymmetricPath{static_cast<int>(zeros), half};
}

ArchDecomposition arch_decompose(const Word01& half) {
  ArchDecomposition d;
  std::vector<int> stack;
  for (int i = 1; i <= static_cast<int>(half.size()); ++i) {
    if (half[static_cast<std::size_t>(i - 1)] == 0) {
      stack.push_back(i);
    } else {
      if (stack.empty()) throw std::invalid_argument("arch_decompose: unmatched close step");
      d.arches.emplace_back(stack.back(), i);
      stack.pop_back();
    }
  }
  d.half_arches = stack;  // bottom-to-top == increasing positions
  std::sort(d.arches.begin(), d.arches.end());
  return d;
}

Word01 symmetric_full_word(const SymmetricPath& p) {
  Word01 full = p.half;
  for (std::size_t i = p.half.size(); i-- > 0;)
    full.push_back(static_cast<uint8_t>(1 - p.half[i]));
  return full;
}

std::vector<SymmetricPath> enumerate_symmetric(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_symmetric: need n >= 0");
  std::vector<SymmetricPath> out;
  for (int k = n; k >= 0; --k) {
    const int ones = n - k;
    Word01 cur;
    std::function<void(int, int)> rec = [&](int z, int o) {
      if (z == n && o == ones) {
        out.push_back(SymmetricPath{n, cur});
        return;
      }
      if (z < n) {
        cur.push_back(0);
        rec(z + 1, o);
        cur.pop_back();
      }
      if (o < ones && o < z) {
        cur.push_back(1);
        rec(z, o + 1);
        cur.pop_back();
      }
    };
    rec(0, 0);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Counting helpers
// ---------------------------------------------------------------------------

long long catalan_number(int n) {
  if (n < 0) throw std::invalid_argument("catalan_number: need n >= 0");
  long long c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

long long fuss_catalan_number(int n, int r) {
  if (n < 0 || r < 1) throw std::invalid_argument("fuss_catalan_number: need n >= 0, r >= 1");
  boost::multiprecision::cpp_int num = 1;
  for (int i = 0; i < n; ++i) num *= (static_cast<long long>(r) + 1) * n - i;
  for (int i = 1; i <= n; ++i) num /= i;
  num /= static_cast<long long>(r) * n + 1;
  return num.convert_to<long long>();
}

long long stirling_word_count(int n, int r) {
  if (n < 0 || r < 1) throw std::invalid_argument("stirling_word_count: need n >= 0, r >= 1");
  long long c = 1;
  for (int s = 1; s < n; ++s) c *= static_cast<long long>(s) * r + 1;
  return c;
}

}  // namespace qcat
