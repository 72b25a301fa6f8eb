#include "qcat/statistics.hpp"

#include <numeric>
#include <stdexcept>

namespace qcat {

namespace {

template <typename W>
std::set<int> standard_or_augmented(const W& w, DescentConvention c) {
  std::set<int> d = descent_set(w);
  if (c == DescentConvention::kAugmented && !w.empty()) d.insert(static_cast<int>(w.size()));
  return d;
}

long sum_of(const std::set<int>& s) { return std::accumulate(s.begin(), s.end(), 0L); }

}  // namespace

std::set<int> descent_set_with(const Word01& w, DescentConvention c) {
  if (c != DescentConvention::kSymmetric) return standard_or_augmented(w, c);
  std::set<int> d;
  const int m = static_cast<int>(w.size());
  for (int i = 1; i < m; ++i)
    if (w[static_cast<std::size_t>(i - 1)] == 1 && w[static_cast<std::size_t>(i)] == 0) d.insert(i);
  if (m > 0 && w[static_cast<std::size_t>(m - 1)] == 1) d.insert(m);
  return d;
}

std::set<int> descent_set_with(const MultiWord& w, DescentConvention c) {
  if (c == DescentConvention::kSymmetric)
    throw std::invalid_argument("the symmetric descent convention applies to 01-words only");
  return standard_or_augmented(w, c);
}

long maj_with(const Word01& w, DescentConvention c) { return sum_of(descent_set_with(w, c)); }
long maj_with(const MultiWord& w, DescentConvention c) { return sum_of(descent_set_with(w, c)); }

long r_dyck_iinv(const Word01& w) { return dyck_coarea(w); }

long r_dyck_inv(const Word01& w, int r) {
  long n = 0;
  for (uint8_t c : w)
    if (c == 0) ++n;
  return static_cast<long>(r) * n * (n - 1) / 2 - r_dyck_iinv(w);
}

std::set<int> stirling_J(const MultiWord& w, int r) {
  if (r < 1) throw std::invalid_argument("stirling_J: need r >= 1");
  std::set<int> out;
  const int len = static_cast<int>(w.size());
  const int n = len / r;
  for (int j = 1; j <= r * (n - 1); ++j) {
    if (j + r > len) break;
    const int v = w[static_cast<std::size_t>(j)];
    if (w[static_cast<std::size_t>(j - 1)] <= v) continue;
    bool run = true;
    for (int t = 1; t < r; ++t)
      if (w[static_cast<std::size_t>(j + t)] != v) {
        run = false;
        break;
      }
    if (run) out.insert(j);
  }
  return out;
}

long stirling_MAJ(const MultiWord& w, int r) { return sum_of(stirling_J(w, r)); }

long stirling_INV(const MultiWord& w, int r) {
  if (r < 1) throw std::invalid_argument("stirling_INV: need r >= 1");
  const long pairs = inv(w);
  if (pairs % r != 0)
    throw std::logic_error("stirling_INV: inversion count " + std::to_string(pairs) +
                           " is not divisible by r = " + std::to_string(r));
  return pairs / r;
}

long nc_block_wt(const std::vector<int>& block) {
  const int p = static_cast<int>(block.size());
  if (p <= 1) return 0;
  long s = block.front() + block.back();
  for (int k = 1; k + 1 < p; ++k) s += 2L * block[static_cast<std::size_t>(k)];
  return s - p + 1;
}

long nc_maj(const NonCrossingPartition& p) {
  long s = 0;
  for (const auto& b : p.blocks) s += nc_block_wt(b);
  return s;
}

long nc_block_wtprime(const std::vector<int>& block) {
  if (block.empty()) return 0;
  long s = 0;
  for (int v : block) s += v - block.front();
  return s;
}

long nc_wtprime(const NonCrossingPartition& p) {
  long s = 0;
  for (const auto& b : p.blocks) s += nc_block_wtprime(b);
  return s;
}

long sym_maj(const SymmetricPath& p) {
  return maj_with(p.half, DescentConvention::kSymmetric);
}

SymInv sym_inv(const SymmetricPath& p) {
  const ArchDecomposition d = arch_decompose(p.half);
  SymInv s;
  const long k = static_cast<long>(d.half_arches.size());
  s.inv1 = k;
  for (int b : d.half_arches) {
    for (const auto& arch : d.arches)
      if (arch.first > b) ++s.inv1;
    for (int other : d.half_arches)
      if (other > b) ++s.inv1;
  }
  s.inv2 = inv(p.half);
  s.total = s.inv1 + s.inv2;
  return s;
}

}  // namespace qcat
