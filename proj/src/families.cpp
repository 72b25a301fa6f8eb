#include "qcat/families.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "qcat/objects.hpp"
#include "qcat/statistics.hpp"
#include "qcat/words.hpp"

namespace qcat {

namespace {

Exps q_exps(int e) {
  Exps out = kUnitExps;
  out[static_cast<int>(Var::q)] = e;
  return out;
}

LaurentPoly q_pow(int e) { return LaurentPoly::term(q_exps(e), 1); }

long binom2(int n) { return static_cast<long>(n) * (n - 1) / 2; }

void require_nonnegative(int n) {
  if (n < 0) throw std::invalid_argument("size must be nonnegative");
}

// Iterates over all compositions of n into `parts` nonnegative parts.
template <typename F>
void for_each_composition(int n, int parts, F&& f) {
  std::vector<int> c(static_cast<size_t>(parts), 0);
  c[0] = n;
  while (true) {
    f(static_cast<const std::vector<int>&>(c));
    // next composition in colex-style order: move one unit from the first
    // nonzero entry to its right neighbour, resetting what precedes it.
    int i = 0;
    while (i < parts && c[static_cast<size_t>(i)] == 0) ++i;
    if (i >= parts - 1) break;
    const int head = c[static_cast<size_t>(i)];
    c[static_cast<size_t>(i)] = 0;
    c[0] = head - 1;
    ++c[static_cast<size_t>(i) + 1];
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// q-Catalan
// ---------------------------------------------------------------------------

LaurentPoly catalan_poly(int n) {
  require_nonnegative(n);
  static std::mutex mu;
  static std::vector<LaurentPoly> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (cache.empty()) cache.push_back(LaurentPoly::one());
  while (static_cast<int>(cache.size()) <= n) {
    const int m = static_cast<int>(cache.size()) - 1;  // computing C_{m+1}
    LaurentPoly next;
    for (int k = 0; k <= m; ++k) {
      next += (cache[static_cast<size_t>(k)] *
               cache[static_cast<size_t>(m - k)])
                  .times_monomial(q_exps((k + 1) * (m - k)));
    }
    cache.push_back(std::move(next));
  }
  return cache[static_cast<size_t>(n)];
}

LaurentPoly e_poly(int n) {
  require_nonnegative(n);
  static std::mutex mu;
  static std::map<int, LaurentPoly> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  LaurentPoly value = exact_div(q_binom(2 * n, n), q_int(n + 1));
  cache.emplace(n, value);
  return value;
}

LaurentPoly fuss_catalan_poly(int n, int r) {
  require_nonnegative(n);
  if (r <= 0) throw std::invalid_argument("r must be positive");
  static std::mutex mu;
  static std::map<int, std::vector<LaurentPoly>> primed;  // r -> C'_0..C'_m
  std::lock_guard<std::mutex> lock(mu);
  std::vector<LaurentPoly>& cache = primed[r];
  if (cache.empty()) cache.push_back(LaurentPoly::one());
  while (static_cast<int>(cache.size()) <= n) {
    const int m = static_cast<int>(cache.size());  // computing C'_m
    // G_0(t) = C'_t; G_j(t) = sum_u G_{j-1}(t-u) C'_u q^{j*u}; C'_m = G_r(m-1).
    std::vector<LaurentPoly> g(cache.begin(), cache.begin() + m);
    for (int j = 1; j <= r; ++j) {
      std::vector<LaurentPoly> next(static_cast<size_t>(m));
      for (int t = 0; t < m; ++t) {
        LaurentPoly acc;
        for (int u = 0; u <= t; ++u) {
          acc += (g[static_cast<size_t>(t - u)] *
                  cache[static_cast<size_t>(u)])
                     .times_monomial(q_exps(j * u));
        }
        next[static_cast<size_t>(t)] = std::move(acc);
      }
      g = std::move(next);
    }
    cache.push_back(g[static_cast<size_t>(m - 1)]);
  }
  return cache[static_cast<size_t>(n)].reverse_in(Var::q,
                                                  static_cast<int>(r * binom2(n)));
}

// ---------------------------------------------------------------------------
// E_n^{(r)}
// ---------------------------------------------------------------------------

namespace {

// Shared shape of the two E recurrences.  `rescale(d1, d2)` returns the
// substitution image of x and the extra monomial for a nonempty factor.
std::vector<LaurentPoly> e_family_table(int n, int r, bool folded) {
  const int qv = static_cast<int>(Var::q);
  const int av = static_cast<int>(Var::a);
  const int bv = static_cast<int>(Var::b);
  const int xv = static_cast<int>(Var::x);

  auto x_image = [&](long d1, long d2) {
    Exps image = kUnitExps;
    image[xv] = 1;
    if (folded) {
      image[qv] = static_cast<int>(d1 + d2);
    } else {
      image[av] = static_cast<int>(d1);
      image[bv] = static_cast<int>(d2);
    }
    return image;
  };

  std::vector<LaurentPoly> table;
  table.push_back(LaurentPoly::one());  // E_0 = 1
  for (int m = 0; m < n; ++m) {
    LaurentPoly next;
    for_each_composition(m, r + 1, [&](const std::vector<int>& parts) {
      LaurentPoly term =
          table[static_cast<size_t>(parts[0])].substitute(Var::x,
                                                          x_image(1, 0));
      long prefix = parts[0];
      for (int i = 1; i <= r; ++i) {
        const long d1 = 1 + prefix;
        const long d2 = i + static_cast<long>(r) * prefix;
        const Exps image = x_image(d1, d2);
        LaurentPoly factor =
            table[static_cast<size_t>(parts[static_cast<size_t>(i)])]
                .substitute(Var::x, image);
        if (parts[static_cast<size_t>(i)] > 0) {
          factor = factor.times_monomial(image);
        }
        term *= factor;
        prefix += parts[static_cast<size_t>(i)];
      }
      next += term;
    });
    table.push_back(std::move(next));
  }
  return table;
}

}  // namespace

LaurentPoly e_general_poly(int n, int r) {
  require_nonnegative(n);
  if (r <= 0) throw std::invalid_argument("r must be positive");
  static std::mutex mu;
  static std::map<int, std::vector<LaurentPoly>> cache;  // r -> E_0..E_m
  std::lock_guard<std::mutex> lock(mu);
  std::vector<LaurentPoly>& table = cache[r];
  if (static_cast<int>(table.size()) <= n) {
    table = e_family_table(n, r, /*folded=*/false);
  }
  return table[static_cast<size_t>(n)];
}

LaurentPoly e_r_poly(int n, int r) {
  require_nonnegative(n);
  if (r <= 0) throw std::invalid_argument("r must be positive");
  static std::mutex mu;
  static std::map<int, std::vector<LaurentPoly>> cache;  // r -> E_0..E_m at x=1
  std::lock_guard<std::mutex> lock(mu);
  std::vector<LaurentPoly>& table = cache[r];
  if (static_cast<int>(table.size()) <= n) {
    std::vector<LaurentPoly> raw = e_family_table(n, r, /*folded=*/true);
    table.clear();
    table.reserve(raw.size());
    for (const LaurentPoly& p : raw) {
      table.push_back(p.substitute(Var::x, kUnitExps));
    }
  }
  return table[static_cast<size_t>(n)];
}

// ---------------------------------------------------------------------------
// Narayana-type families
// ---------------------------------------------------------------------------

LaurentPoly narayana_poly(int n, int r) {
  require_nonnegative(n);
  if (n == 0) return r == 0 ? LaurentPoly::one() : LaurentPoly::zero();
  if (r < 0 || r > n - 1) return LaurentPoly::zero();
  static std::mutex mu;
  static std::map<std::pair<int, int>, LaurentPoly> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({n, r});
  if (it != cache.end()) return it->second;
  LaurentPoly value =
      exact_div(q_binom(n, r) * q_binom(n, r + 1), q_int(n))
          .times_monomial(q_exps(r * (r + 1)));
  cache.emplace(std::make_pair(n, r), value);
  return value;
}

namespace {

// Common driver for the two convolution recurrences (they differ only in the
// q-weight of the convolution term).  `family` distinguishes the caches.
LaurentPoly convolution_rec(int n, int r, bool truncated_inner_bound,
                            bool partition_weights) {
  if (n == 0) return r == 0 ? LaurentPoly::one() : LaurentPoly::zero();
  if (n < 0 || r < 0 || r > n - 1) return LaurentPoly::zero();
  static std::mutex mu;
  static std::map<std::tuple<bool, bool, int, int>, LaurentPoly> cache;
  std::lock_guard<std::mutex> lock(mu);
  const auto key = std::make_tuple(partition_weights, truncated_inner_bound, n, r);
  {
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  // The lock is not recursive, so evaluate with an explicit stack-free
  // bottom-up fill over all (m, s) <= (n, r).
  std::vector<std::vector<LaurentPoly>> table(
      static_cast<size_t>(n) + 1,
      std::vector<LaurentPoly>(static_cast<size_t>(r) + 1));
  auto at = [&](int m, int s) -> LaurentPoly {
    if (m == 0) return s == 0 ? LaurentPoly::one() : LaurentPoly::zero();
    if (s < 0 || s > m - 1 || s > r) return LaurentPoly::zero();
    return table[static_cast<size_t>(m)][static_cast<size_t>(s)];
  };
  for (int m = 1; m <= n; ++m) {
    for (int s = 0; s <= std::min(r, m - 1); ++s) {
      LaurentPoly acc =
          at(m - 1, s).times_monomial(q_exps(partition_weights ? 2 * s : s));
      for (int j = 0; j <= m - 2; ++j) {
        const int s_max = truncated_inner_bound ? j - 1 : s - 1;
        for (int u = 0; u <= s_max; ++u) {
          if (u > s - 1) break;
          const int e = partition_weights
                            ? 2 * (j + 1) * (s - u) - j + 2 * u
                            : 2 * (j + 1) * (s - u) + u;
          acc += (at(j, u) * at(m - 1 - j, s - u - 1))
                     .times_monomial(q_exps(e));
        }
      }
      table[static_cast<size_t>(m)][static_cast<size_t>(s)] = std::move(acc);
    }
  }
  LaurentPoly value = at(n, r);
  cache.emplace(key, value);
  return value;
}

}  // namespace

LaurentPoly narayana_rec(int n, int r, bool truncated_inner_bound) {
  require_nonnegative(n);
  return convolution_rec(n, r, truncated_inner_bound,
                         /*partition_weights=*/false);
}

LaurentPoly n2_rec(int n, int r, bool truncated_inner_bound) {
  require_nonnegative(n);
  return convolution_rec(n, r, truncated_inner_bound,
                         /*partition_weights=*/true);
}

LaurentPoly narayana_enum(int n, int r) {
  require_nonnegative(n);
  if (n == 0) return r == 0 ? LaurentPoly::one() : LaurentPoly::zero();
  if (r < 0 || r > n - 1) return LaurentPoly::zero();
  static std::mutex mu;
  static std::map<int, std::vector<LaurentPoly>> cache;  // n -> by descents
  std::lock_guard<std::mutex> lock(mu);
  std::vector<LaurentPoly>& buckets = cache[n];
  if (buckets.empty()) {
    buckets.assign(static_cast<size_t>(n), LaurentPoly::zero());
    for (const Word01& w : enumerate_r_dyck(n, 1)) {
      const size_t d = descent_set(w).size();
      buckets[d] += q_pow(static_cast<int>(maj(w)));
    }
  }
  return buckets[static_cast<size_t>(r)];
}

LaurentPoly n2_enum(int n, int r) {
  require_nonnegative(n);
  if (n == 0) return r == 0 ? LaurentPoly::one() : LaurentPoly::zero();
  if (r < 0 || r > n - 1) return LaurentPoly::zero();
  static std::mutex mu;
  static std::map<int, std::vector<LaurentPoly>> cache;  // n -> by rank
  std::lock_guard<std::mutex> lock(mu);
  std::vector<LaurentPoly>& buckets = cache[n];
  if (buckets.empty()) {
    buckets.assign(static_cast<size_t>(n), LaurentPoly::zero());
    for (const NonCrossingPartition& p : enumerate_nc(n)) {
      buckets[static_cast<size_t>(p.rank())] +=
          q_pow(static_cast<int>(nc_maj(p)));
    }
  }
  return buckets[static_cast<size_t>(r)];
}

// ---------------------------------------------------------------------------
// Symmetric-path families
// ---------------------------------------------------------------------------

namespace {

struct SymKey {
  int r = 0;
  int k = 0;
  bool ends_up = false;  // last letter of the half word is an up step
  auto operator<=>(const SymKey&) const = default;
};

// All (r, k, last letter) buckets of Q_n, built once per n.
const std::map<SymKey, LaurentPoly>& sym_buckets(int n) {
  static std::mutex mu;
  static std::map<int, std::map<SymKey, LaurentPoly>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::map<SymKey, LaurentPoly>& buckets = cache[n];
  for (const SymmetricPath& p : enumerate_symmetric(n)) {
    SymKey key;
    key.r = static_cast<int>(
        descent_set_with(p.half, DescentConvention::kSymmetric).size());
    key.k = static_cast<int>(arch_decompose(p.half).half_arches.size());
    key.ends_up = !p.half.empty() && p.half.back() == 0;
    buckets[key] += q_pow(static_cast<int>(sym_maj(p)));
  }
  return buckets;
}

}  // namespace

LaurentPoly n3_enum(int n, int r) {
  require_nonnegative(n);
  LaurentPoly acc;
  for (const auto& [key, poly] : sym_buckets(n)) {
    if (key.r == r) acc += poly;
  }
  return acc;
}

LaurentPoly n3k_enum(int n, int r, int k) {
  require_nonnegative(n);
  LaurentPoly acc;
  for (const auto& [key, poly] : sym_buckets(n)) {
    if (key.r == r && key.k == k) acc += poly;
  }
  return acc;
}

LaurentPoly n3_plus_enum(int n, int r, int k) {
  require_nonnegative(n);
  LaurentPoly acc;
  for (const auto& [key, poly] : sym_buckets(n)) {
    if (key.r == r && key.k == k && key.ends_up) acc += poly;
  }
  return acc;
}

LaurentPoly n3_minus_enum(int n, int r, int k) {
  require_nonnegative(n);
  LaurentPoly acc;
  for (const auto& [key, poly] : sym_buckets(n)) {
    if (key.r == r && key.k == k && !key.ends_up) acc += poly;
  }
  return acc;
}

LaurentPoly n3_rec(int n, int r) {
  if (n == 0) return r == 0 ? LaurentPoly::one() : LaurentPoly::zero();
  if (n < 0 || r < 0 || r > n) return LaurentPoly::zero();
  static std::mutex mu;
  static std::map<std::pair<int, int>, LaurentPoly> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({n, r});
  if (it != cache.end()) return it->second;
  std::vector<std::vector<LaurentPoly>> table(
      static_cast<size_t>(n) + 1,
      std::vector<LaurentPoly>(static_cast<size_t>(r) + 1));
  auto at = [&](int m, int s) -> LaurentPoly {
    if (m == 0) return s == 0 ? LaurentPoly::one() : LaurentPoly::zero();
    if (m < 0 || s < 0 || s > m || s > r) return LaurentPoly::zero();
    return table[static_cast<size_t>(m)][static_cast<size_t>(s)];
  };
  for (int m = 1; m <= n; ++m) {
    for (int s = 0; s <= std::min(r, m); ++s) {
      LaurentPoly acc = at(m - 1, s).times_monomial(q_exps(s));
      for (int j = 1; j <= m; ++j) {
        for (int u = 0; u <= j - 1; ++u) {
          if (s - u - 1 < 0) break;
          acc += (narayana_poly(j - 1, u) * at(m - j, s - u - 1))
                     .times_monomial(q_exps(2 * j * (s - u) + u));
        }
      }
      table[static_cast<size_t>(m)][static_cast<size_t>(s)] = std::move(acc);
    }
  }
  LaurentPoly value = at(n, r);
  cache.emplace(std::make_pair(n, r), value);
  return value;
}

LaurentPoly n3k_closed(int n, int r, int k) {
  if (n < 0 || r < 0 || k < 0 || r > n || k > n) return LaurentPoly::zero();
  if (n == 0) return (r == 0 && k == 0) ? LaurentPoly::one() : LaurentPoly::zero();
  if (r == 0) return k == n ? LaurentPoly::one() : LaurentPoly::zero();
  const LaurentPoly num = q_binom(n, r) * q_binom(n, r - 1) * q_binom(n - r, k);
  if (num.is_zero()) return LaurentPoly::zero();
  return exact_div(num, q_binom(n, k + 1))
      .times_monomial(q_exps(r * (r + 1) + 2 * (n - r - k)));
}

LaurentPoly n3k_rec(int n, int r, int k) {
  if (n < 0 || r < 0 || k < 0 || r > n || k > n) return LaurentPoly::zero();
  if (n == 0) return (r == 0 && k == 0) ? LaurentPoly::one() : LaurentPoly::zero();
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, LaurentPoly> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({n, r, k});
  if (it != cache.end()) return it->second;
  // Bottom-up over m <= n with both s and c bounded by m.
  std::map<std::tuple<int, int, int>, LaurentPoly> table;
  auto at = [&](int m, int s, int c) -> LaurentPoly {
    if (m == 0) return (s == 0 && c == 0) ? LaurentPoly::one() : LaurentPoly::zero();
    if (m < 0 || s < 0 || c < 0 || s > m || c > m) return LaurentPoly::zero();
    auto found = table.find({m, s, c});
    return found == table.end() ? LaurentPoly::zero() : found->second;
  };
  for (int m = 1; m <= n; ++m) {
    for (int s = 0; s <= m; ++s) {
      for (int c = 0; c <= m; ++c) {
        LaurentPoly acc = at(m - 1, s, c - 1).times_monomial(q_exps(s));
        for (int j = 1; j <= m; ++j) {
          for (int u = 0; u <= j - 1; ++u) {
            if (s - u - 1 < 0) break;
            acc += (narayana_poly(j - 1, u) * at(m - j, s - u - 1, c))
                       .times_monomial(q_exps(2 * j * (s - u) + u));
          }
        }
        if (!acc.is_zero()) table[{m, s, c}] = std::move(acc);
      }
    }
  }
  // The fill produced every value up to n, so cache them all (zeros too, so
  // vanishing entries do not trigger a refill on the next query).
  for (int m = 1; m <= n; ++m) {
    for (int s = 0; s <= m; ++s) {
      for (int c = 0; c <= m; ++c) {
        cache.emplace(std::make_tuple(m, s, c), at(m, s, c));
      }
    }
  }
  LaurentPoly value = at(n, r, k);
  cache.emplace(std::make_tuple(n, r, k), value);
  return value;
}

LaurentPoly n3_plus(int n, int r, int k) {
  if (n <= 0) return LaurentPoly::zero();
  return n3k_closed(n - 1, r, k - 1);
}

LaurentPoly n3_minus(int n, int r, int k) {
  if (n <= 0 || k < 0 || k >= n) return LaurentPoly::zero();
  // Unrolled k-recursion: the q * q^{2n-(k+1)} cascade keeps every term at
  // the constant weight q^{2n-k}, and the recursion stops at k = n.
  LaurentPoly acc;
  for (int c = k; c < n; ++c) {
    acc += n3k_closed(n - 1, r - 1, c);
  }
  return acc.times_monomial(q_exps(2 * n - k));
}

// ---------------------------------------------------------------------------
// Two-variable family
// ---------------------------------------------------------------------------

LaurentPoly aqt_poly(int n) {
  require_nonnegative(n);
  static std::mutex mu;
  static std::map<int, LaurentPoly> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  LaurentPoly acc;
  for (const MultiWord& sigma : enumerate_avoiding(n, "312")) {
    Exps e = kUnitExps;
    e[static_cast<int>(Var::q)] = static_cast<int>(maj(sigma));
    e[static_cast<int>(Var::t)] = static_cast<int>(maj(inverse_permutation(sigma)));
    acc += LaurentPoly::term(e, 1);
  }
  cache.emplace(n, acc);
  return acc;
}

// ---------------------------------------------------------------------------
// Series identities
// ---------------------------------------------------------------------------

TruncSeries series_catalan_def(int order) {
  TruncSeries acc(order);
  for (int n = 1; n <= order; ++n) {
    std::vector<LaurentPoly> cs;
    for (int i = 0; i < n; ++i) cs.push_back(q_pow(i).times(-1));
    acc += product_of_linear_factors(cs, 1, order)
               .shift(n)
               .scale(catalan_poly(n - 1));
  }
  return acc;
}

TruncSeries series_fuss_def(int r, int order) {
  if (r <= 0) throw std::invalid_argument("r must be positive");
  TruncSeries acc(order);
  for (int n = 0; r * n + 1 <= order; ++n) {
    std::vector<LaurentPoly> cs;
    for (int i = 0; i <= r * n; ++i) cs.push_back(q_pow(i).times(-1));
    acc += product_of_linear_factors(cs, r, order)
               .shift(r * n + 1)
               .scale(fuss_catalan_poly(n, r));
  }
  return acc;
}

TruncSeries series_e_def(int r, int order) {
  if (r <= 0) throw std::invalid_argument("r must be positive");
  TruncSeries acc(order);
  for (int n = 1; n <= order; ++n) {
    TruncSeries term = TruncSeries::zero(order);
    term.set_coeff(0, e_r_poly(n, r).times_monomial(
                          q_exps(static_cast<int>(-binom2(n)))));
    for (int i = 0; i < n; ++i) {
      term = term * geometric_inverse(q_pow(i - n), order);
    }
    for (int i = 0; i < r * n; ++i) {
      term = term * geometric_inverse(q_pow(1 + i), order);
    }
    acc += term.shift(n);
  }
  return acc;
}

TruncSeries series_e_general_def(int r, int order) {
  if (r <= 0) throw std::invalid_argument("r must be positive");
  const int av = static_cast<int>(Var::a);
  const int bv = static_cast<int>(Var::b);
  const int xv = static_cast<int>(Var::x);
  TruncSeries acc(order);
  for (int n = 1; n <= order; ++n) {
    Exps apow = kUnitExps;
    apow[av] = static_cast<int>(-binom2(n));
    TruncSeries term = TruncSeries::zero(order);
    term.set_coeff(0, e_general_poly(n, r).times_monomial(apow));
    for (int i = 1; i <= n; ++i) {
      Exps m = kUnitExps;
      m[av] = -i;
      term = term * geometric_inverse(LaurentPoly::term(m, 1), order);
    }
    for (int i = 1; i <= r * n; ++i) {
      Exps m = kUnitExps;
      m[xv] = 1;
      m[bv] = i;
      term = term * geometric_inverse(LaurentPoly::term(m, 1), order);
    }
    acc += term.shift(n);
  }
  return acc;
}

}  // namespace qcat
