#include "qcat/bijections.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "qcat/statistics.hpp"

namespace qcat {

namespace {

// Start (0-based) of the block of r consecutive copies of the minimum value.
// For a valid word on a multiset {v^r : v in values} the copies of the
// minimum are always consecutive; anything else is an internal error.
int min_block_start(const MultiWord& w, int r) {
  const int m = *std::min_element(w.begin(), w.end());
  const int pos =
      static_cast<int>(std::find(w.begin(), w.end(), m) - w.begin());
  for (int t = 0; t < r; ++t) {
    if (pos + t >= static_cast<int>(w.size()) || w[pos + t] != m) {
      throw std::logic_error("minimum-value copies are not consecutive");
    }
  }
  for (int p = pos + r; p < static_cast<int>(w.size()); ++p) {
    if (w[p] == m) {
      throw std::logic_error("minimum value appears more than r times");
    }
  }
  return pos;
}

// Linear non-crossing check: scanning 1..n with a stack of open blocks, every
// non-minimal element must extend the top block.
bool blocks_noncrossing(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> owner(n + 1, -1);
  for (size_t b = 0; b < blocks.size(); ++b) {
    for (int v : blocks[b]) {
      if (v < 1 || v > n || owner[v] != -1) return false;
      owner[v] = static_cast<int>(b);
    }
  }
  for (int v = 1; v <= n; ++v) {
    if (owner[v] == -1) return false;
  }
  std::vector<int> stack;
  for (int v = 1; v <= n; ++v) {
    const int b = owner[v];
    if (v == blocks[b].front()) {
      stack.push_back(b);
    } else if (stack.empty() || stack.back() != b) {
      return false;
    }
    if (v == blocks[b].back()) stack.pop_back();
  }
  return stack.empty();
}

}  // namespace

// ---------------------------------------------------------------------------
// kappa
// ---------------------------------------------------------------------------

std::vector<int> kappa_alpha(const MultiWord& v, int r) {
  if (r <= 0) throw std::invalid_argument("r must be positive");
  if (!is_stirling(v, r)) {
    throw std::invalid_argument("input is not an r-Stirling word");
  }
  const int n = static_cast<int>(v.size()) / r;
  std::vector<int> alpha(n, 0);
  for (int i = 1; i <= n; ++i) {
    int count = 0;
    for (int value : v) {
      if (value == i) break;
      if (value > i) ++count;
    }
    alpha[i - 1] = count;
  }
  return alpha;
}

Word01 kappa(const MultiWord& v, int r) {
  if (r <= 0) throw std::invalid_argument("r must be positive");
  if (!is_stirling(v, r)) {
    throw std::invalid_argument("input is not an r-Stirling word");
  }
  if (!is_231_avoiding(v)) {
    throw std::invalid_argument("input contains the pattern 231");
  }
  const int n = static_cast<int>(v.size()) / r;
  const std::vector<int> alpha = kappa_alpha(v, r);
  Word01 w;
  w.reserve(static_cast<size_t>(n) * (r + 1));
  int prev = 0;
  for (int j = 1; j <= n; ++j) {
    const int ones_before = r * (j - 1) - alpha[n - j];
    if (ones_before < prev) {
      throw std::logic_error("right-step counts are not monotone");
    }
    for (int t = prev; t < ones_before; ++t) w.push_back(1);
    w.push_back(0);
    prev = ones_before;
  }
  for (int t = prev; t < r * n; ++t) w.push_back(1);
  if (!is_r_dyck(w, r)) {
    throw std::logic_error("image is not a generalized Dyck word");
  }
  return w;
}

MultiWord kappa_inv(const Word01& path, int r) {
  if (r <= 0) throw std::invalid_argument("r must be positive");
  if (!is_r_dyck(path, r)) {
    throw std::invalid_argument("input is not a generalized Dyck word");
  }
  const int n = static_cast<int>(path.size()) / (r + 1);
  // ones_before[j]: right steps preceding the j-th up step (1-based).
  std::vector<int> ones_before(n + 1, 0);
  {
    int zeros = 0;
    int ones = 0;
    for (uint8_t step : path) {
      if (step == 0) {
        ++zeros;
        ones_before[zeros] = ones;
      } else {
        ++ones;
      }
    }
  }
  std::vector<int> alpha(n, 0);
  for (int j = 1; j <= n; ++j) {
    alpha[n - j] = r * (j - 1) - ones_before[j];
  }
  MultiWord v;
  v.reserve(static_cast<size_t>(n) * r);
  for (int i = n; i >= 1; --i) {
    const int a = alpha[i - 1];
    if (a < 0 || a > static_cast<int>(v.size())) {
      throw std::logic_error("insertion offset out of range");
    }
    v.insert(v.begin() + a, r, i);
  }
  if (!is_stirling(v, r) || !is_231_avoiding(v)) {
    throw std::logic_error("preimage is not a 231-avoiding r-Stirling word");
  }
  return v;
}

// ---------------------------------------------------------------------------
// phi
// ---------------------------------------------------------------------------

MultiWord phi(const MultiWord& v, int r, PhiTrace* trace) {
  if (r <= 0) throw std::invalid_argument("r must be positive");
  if (!is_stirling(v, r)) {
    throw std::invalid_argument("input is not an r-Stirling word");
  }
  // Strip minimum-value blocks down to the single-value word, recording the
  // MAJ drop of each strip.
  std::vector<MultiWord> chain;
  std::vector<int> qs;
  MultiWord cur = v;
  chain.push_back(cur);
  while (cur.size() > static_cast<size_t>(r)) {
    const int pos = min_block_start(cur, r);
    MultiWord next = cur;
    next.erase(next.begin() + pos, next.begin() + pos + r);
    qs.push_back(static_cast<int>(stirling_MAJ(cur, r) -
                                  stirling_MAJ(next, r)));
    cur = std::move(next);
    chain.push_back(cur);
  }
  std::reverse(chain.begin(), chain.end());
  std::reverse(qs.begin(), qs.end());
  // Rebuild: reinsert each minimum at the gap whose INV increment (the gap
  // offset itself) equals the recorded MAJ increment.
  std::vector<MultiWord> images;
  images.push_back(chain.front());
  for (size_t i = 1; i < chain.size(); ++i) {
    const int gap = qs[i - 1];
    const MultiWord& side = images.back();
    if (gap < 0 || gap > static_cast<int>(side.size())) {
      throw std::logic_error("insertion gap out of range");
    }
    const int m = *std::min_element(chain[i].begin(), chain[i].end());
    MultiWord img = side;
    img.insert(img.begin() + gap, r, m);
    images.push_back(std::move(img));
  }
  if (trace) {
    trace->maj_chain = chain;
    trace->inv_chain = images;
    trace->gaps = qs;
  }
  return images.back();
}

MultiWord phi_inv(const MultiWord& w, int r, PhiTrace* trace) {
  if (r <= 0) throw std::invalid_argument("r must be positive");
  if (!is_stirling(w, r)) {
    throw std::invalid_argument("input is not an r-Stirling word");
  }
  // Strip minimum-value blocks on the image side; the gap offset of each
  // block is the INV increment its reinsertion would contribute.
  std::vector<MultiWord> images;
  std::vector<int> gaps;
  MultiWord cur = w;
  images.push_back(cur);
  while (cur.size() > static_cast<size_t>(r)) {
    const int pos = min_block_start(cur, r);
    gaps.push_back(pos);
    MultiWord next = cur;
    next.erase(next.begin() + pos, next.begin() + pos + r);
    cur = std::move(next);
    images.push_back(cur);
  }
  std::reverse(images.begin(), images.end());
  std::reverse(gaps.begin(), gaps.end());
  // Rebuild the preimage: each minimum goes to the unique gap whose MAJ
  // increment equals the recorded offset.
  std::vector<MultiWord> pre;
  pre.push_back(images.front());
  for (size_t i = 1; i < images.size(); ++i) {
    const int m = *std::min_element(images[i].begin(), images[i].end());
    const MultiWord& side = pre.back();
    const long before = stirling_MAJ(side, r);
    int found = -1;
    for (int g = 0; g <= static_cast<int>(side.size()); ++g) {
      MultiWord cand = side;
      cand.insert(cand.begin() + g, r, m);
      if (stirling_MAJ(cand, r) - before == gaps[i - 1]) {
        if (found >= 0) throw std::logic_error("ambiguous insertion gap");
        found = g;
      }
    }
    if (found < 0) throw std::logic_error("no insertion gap matches");
    MultiWord img = side;
    img.insert(img.begin() + found, r, m);
    pre.push_back(std::move(img));
  }
  if (trace) {
    trace->maj_chain = pre;
    trace->inv_chain = images;
    trace->gaps = gaps;
  }
  return pre.back();
}

// ---------------------------------------------------------------------------
// rho
// ---------------------------------------------------------------------------

std::vector<int> rho_descents(const MultiWord& pi) {
  std::set<int> d = descent_set(pi);
  d.insert(static_cast<int>(pi.size()));
  return std::vector<int>(d.begin(), d.end());
}

std::vector<int> rho_inverse_descents(const MultiWord& pi) {
  return rho_descents(inverse_permutation(pi));
}

Word01 rho(const MultiWord& pi) {
  if (!is_permutation(pi)) {
    throw std::invalid_argument("input is not a permutation");
  }
  if (contains_231(pi)) {
    throw std::invalid_argument("input contains the pattern 231");
  }
  const std::vector<int> I = rho_descents(pi);
  const std::vector<int> J = rho_inverse_descents(pi);
  if (I.size() != J.size()) {
    throw std::logic_error("descent counts of the word and its inverse differ");
  }
  Word01 w;
  w.reserve(2 * pi.size());
  int prev_i = 0;
  int prev_j = 0;
  for (size_t k = 0; k < I.size(); ++k) {
    for (int t = prev_j; t < J[k]; ++t) w.push_back(1);
    for (int t = prev_i; t < I[k]; ++t) w.push_back(0);
    prev_i = I[k];
    prev_j = J[k];
  }
  std::reverse(w.begin(), w.end());
  if (!is_r_dyck(w, 1)) throw std::logic_error("image is not a Dyck word");
  return w;
}

namespace {

struct RhoSearch {
  int n = 0;
  std::vector<char> is_pos_descent;  // 1-based, positions 1..n-1
  std::vector<char> is_val_descent;  // 1-based, values 1..n-1
  std::vector<int> position_of;      // value -> position, 0 = unplaced
  std::vector<int> word;             // positions 1..n (index 0 unused)
  std::vector<char> used;
  std::vector<MultiWord> solutions;

  void dfs(int p, int max_bottom) {
    if (static_cast<size_t>(solutions.size()) >= 2) return;
    if (p > n) {
      solutions.emplace_back(word.begin() + 1, word.end());
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[v]) continue;
      // Forbid the pattern 231: v must exceed every value that already has a
      // larger value to its right.
      if (v < max_bottom) continue;
      if (p >= 2) {
        const bool desc = word[p - 1] > v;
        if (desc != static_cast<bool>(is_pos_descent[p - 1])) continue;
      }
      if (v < n) {
        const int q = position_of[v + 1];
        const bool want = is_val_descent[v];
        if (q > 0 ? (want != (p > q)) : want) continue;
      }
      if (v > 1) {
        const int q = position_of[v - 1];
        const bool want = is_val_descent[v - 1];
        if (q > 0 ? (want != (q > p)) : !want) continue;
      }
      used[v] = 1;
      word[p] = v;
      position_of[v] = p;
      int bottom = max_bottom;
      for (int u = v - 1; u >= 1; --u) {
        if (used[u] && u != v) {
          bottom = std::max(bottom, u);
          break;
        }
      }
      dfs(p + 1, bottom);
      used[v] = 0;
      word[p] = 0;
      position_of[v] = 0;
    }
  }
};

}  // namespace

MultiWord rho_inv(const Word01& d) {
  if (!is_r_dyck(d, 1)) {
    throw std::invalid_argument("input is not a Dyck word");
  }
  const int n = static_cast<int>(d.size()) / 2;
  if (n == 0) return {};
  // Reversing the word exposes the run structure: alternating right-step and
  // up-step runs whose prefix sums are the augmented descent sets of the
  // preimage's inverse and of the preimage itself.
  Word01 rev(d.rbegin(), d.rend());
  std::vector<int> I;
  std::vector<int> J;
  {
    int sum_ones = 0;
    int sum_zeros = 0;
    size_t i = 0;
    while (i < rev.size()) {
      if (rev[i] != 1) throw std::logic_error("run structure is malformed");
      while (i < rev.size() && rev[i] == 1) {
        ++sum_ones;
        ++i;
      }
      J.push_back(sum_ones);
      while (i < rev.size() && rev[i] == 0) {
        ++sum_zeros;
        ++i;
      }
      I.push_back(sum_zeros);
    }
    if (I.size() != J.size() || I.back() != n || J.back() != n) {
      throw std::logic_error("run structure is malformed");
    }
  }
  RhoSearch search;
  search.n = n;
  search.is_pos_descent.assign(n + 1, 0);
  search.is_val_descent.assign(n + 1, 0);
  for (int p : I) {
    if (p < n) search.is_pos_descent[p] = 1;
  }
  for (int v : J) {
    if (v < n) search.is_val_descent[v] = 1;
  }
  search.position_of.assign(n + 1, 0);
  search.word.assign(n + 1, 0);
  search.used.assign(n + 1, 0);
  search.dfs(1, 0);
  if (search.solutions.size() != 1) {
    throw std::logic_error("preimage is not unique");
  }
  return search.solutions.front();
}

// ---------------------------------------------------------------------------
// Lehmer codes
// ---------------------------------------------------------------------------

std::vector<int> lehmer_code(const MultiWord& w) {
  const int n = static_cast<int>(w.size());
  std::vector<int> code(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (w[j] < w[i]) ++code[i];
    }
  }
  return code;
}

MultiWord from_lehmer_code(const std::vector<int>& code) {
  const int n = static_cast<int>(code.size());
  std::vector<int> available;
  available.reserve(n);
  for (int v = 1; v <= n; ++v) available.push_back(v);
  MultiWord w;
  w.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (code[i] < 0 || code[i] >= static_cast<int>(available.size())) {
      throw std::invalid_argument("code entry out of range");
    }
    w.push_back(available[code[i]]);
    available.erase(available.begin() + code[i]);
  }
  return w;
}

// ---------------------------------------------------------------------------
// Non-crossing partition <-> 312-avoiding permutation
// ---------------------------------------------------------------------------

NcChain nc_to_sigma(const NonCrossingPartition& pi) {
  const int n = pi.n;
  if (n <= 0 || pi.blocks.empty()) {
    throw std::invalid_argument("partition must be nonempty");
  }
  if (!blocks_noncrossing(n, pi.blocks)) {
    throw std::invalid_argument("blocks do not form a non-crossing partition");
  }
  NcChain ch;
  for (const auto& b : pi.blocks) {
    ch.minima.push_back(b.front());
    ch.maxima.push_back(b.back());
  }
  std::sort(ch.minima.begin(), ch.minima.end());
  std::sort(ch.maxima.begin(), ch.maxima.end());
  const int k = static_cast<int>(ch.minima.size());
  for (int t = 0; t < k; ++t) {
    ch.peaks.push_back(ch.minima[t] + ch.maxima[t] - 1);
  }
  for (int t = 0; t + 1 < k; ++t) {
    ch.valleys.push_back(ch.minima[t + 1] + ch.maxima[t] - 1);
  }
  // Assemble the path from its peak/valley positions.
  Word01 d;
  d.reserve(2 * n);
  int cur = 0;
  for (int t = 0; t < k; ++t) {
    for (int s = cur; s < ch.peaks[t]; ++s) d.push_back(0);
    const int stop = (t + 1 < k) ? ch.valleys[t] : 2 * n;
    for (int s = ch.peaks[t]; s < stop; ++s) d.push_back(1);
    cur = stop;
  }
  if (static_cast<int>(d.size()) != 2 * n || !is_r_dyck(d, 1)) {
    throw std::logic_error("peak/valley positions do not assemble to a path");
  }
  ch.dyck = d;
  // code entry i counts the right steps before the (n+1-i)-th up step.
  std::vector<int> ones_before(n + 1, 0);
  {
    int zeros = 0;
    int ones = 0;
    for (uint8_t step : d) {
      if (step == 0) {
        ++zeros;
        ones_before[zeros] = ones;
      } else {
        ++ones;
      }
    }
  }
  ch.code.resize(n);
  for (int i = 1; i <= n; ++i) ch.code[i - 1] = ones_before[n + 1 - i];
  ch.mu = from_lehmer_code(ch.code);
  ch.sigma = complement_permutation(inverse_permutation(ch.mu));
  if (contains_312(ch.sigma)) {
    throw std::logic_error("image contains the pattern 312");
  }
  return ch;
}

NonCrossingPartition sigma_to_nc(const MultiWord& sigma) {
  if (!is_permutation(sigma)) {
    throw std::invalid_argument("input is not a permutation");
  }
  if (contains_312(sigma)) {
    throw std::invalid_argument("input contains the pattern 312");
  }
  const int n = static_cast<int>(sigma.size());
  if (n == 0) throw std::invalid_argument("input is empty");
  const MultiWord mu = inverse_permutation(complement_permutation(sigma));
  const std::vector<int> code = lehmer_code(mu);
  // Rebuild the path: code entry i is the number of right steps before the
  // (n+1-i)-th up step.
  std::vector<int> ones_before(n + 1, 0);
  for (int z = 1; z <= n; ++z) ones_before[z] = code[n - z];
  Word01 d;
  d.reserve(2 * n);
  {
    int prev = 0;
    for (int z = 1; z <= n; ++z) {
      if (ones_before[z] < prev) {
        throw std::logic_error("right-step counts are not monotone");
      }
      for (int t = prev; t < ones_before[z]; ++t) d.push_back(1);
      d.push_back(0);
      prev = ones_before[z];
    }
    for (int t = prev; t < n; ++t) d.push_back(1);
  }
  if (!is_r_dyck(d, 1)) throw std::logic_error("path is not a Dyck word");
  // Corner scan: peaks are up steps followed by right steps, valleys the
  // reverse.
  std::vector<int> peaks;
  std::vector<int> valleys;
  for (int s = 1; s < 2 * n; ++s) {
    if (d[s - 1] == 0 && d[s] == 1) peaks.push_back(s);
    if (d[s - 1] == 1 && d[s] == 0) valleys.push_back(s);
  }
  const int k = static_cast<int>(peaks.size());
  if (static_cast<int>(valleys.size()) != k - 1) {
    throw std::logic_error("corner counts are inconsistent");
  }
  std::vector<int> minima(k, 0);
  std::vector<int> maxima(k, 0);
  minima[0] = 1;
  for (int t = 0; t < k; ++t) {
    maxima[t] = peaks[t] + 1 - minima[t];
    if (t + 1 < k) minima[t + 1] = valleys[t] + 1 - maxima[t];
  }
  // Reassemble blocks: each minimum opens a block, every other value extends
  // the innermost open block, and each maximum closes one.
  std::set<int> min_set(minima.begin(), minima.end());
  std::set<int> max_set(maxima.begin(), maxima.end());
  if (static_cast<int>(min_set.size()) != k ||
      static_cast<int>(max_set.size()) != k) {
    throw std::logic_error("extreme values are not distinct");
  }
  std::vector<std::vector<int>> stack;
  std::vector<std::vector<int>> blocks;
  for (int v = 1; v <= n; ++v) {
    if (min_set.count(v)) {
      stack.push_back({v});
    } else {
      if (stack.empty()) throw std::logic_error("no open block to extend");
      stack.back().push_back(v);
    }
    if (max_set.count(v)) {
      if (stack.empty()) throw std::logic_error("no open block to close");
      blocks.push_back(std::move(stack.back()));
      stack.pop_back();
    }
  }
  if (!stack.empty()) throw std::logic_error("unclosed block remains");
  std::sort(blocks.begin(), blocks.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.front() < b.front();
            });
  if (!blocks_noncrossing(n, blocks)) {
    throw std::logic_error("reassembled blocks cross");
  }
  NonCrossingPartition out;
  out.n = n;
  out.blocks = std::move(blocks);
  return out;
}

// ---------------------------------------------------------------------------
// psi
// ---------------------------------------------------------------------------

SymmetricPath psi(const Word01& p) {
  if (p.empty() || !is_r_dyck(p, 1)) {
    throw std::invalid_argument("input is not a nonempty Dyck word");
  }
  const Word01 u(p.begin() + 1, p.end() - 1);
  Word01 half;
  half.reserve(u.size());
  size_t i = 0;
  while (i < u.size()) {
    if (u[i] == 1) {
      // A right step at the base line pairs with the up step after it and
      // contributes one half arch.
      if (i + 1 >= u.size() || u[i + 1] != 0) {
        throw std::logic_error("unpaired right step at the base line");
      }
      half.push_back(0);
      i += 2;
    } else {
      // Copy the factor up to its first return to the base line verbatim.
      int bal = 0;
      do {
        bal += (u[i] == 0) ? 1 : -1;
        half.push_back(u[i]);
        ++i;
      } while (bal > 0);
    }
  }
  return make_symmetric(half);
}

Word01 psi_inv(const SymmetricPath& s) {
  const ArchDecomposition arcs = arch_decompose(s.half);
  std::vector<char> is_half_arch(s.half.size() + 1, 0);
  for (int pos : arcs.half_arches) is_half_arch[pos] = 1;
  Word01 p;
  p.reserve(s.half.size() + 2 + arcs.half_arches.size());
  p.push_back(0);
  for (size_t i = 0; i < s.half.size(); ++i) {
    if (is_half_arch[i + 1]) {
      p.push_back(1);
      p.push_back(0);
    } else {
      p.push_back(s.half[i]);
    }
  }
  p.push_back(1);
  if (!is_r_dyck(p, 1)) throw std::logic_error("image is not a Dyck word");
  return p;
}

}  // namespace qcat
