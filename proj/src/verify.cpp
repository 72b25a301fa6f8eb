#include "qcat/verify.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qcat/bijections.hpp"
#include "qcat/families.hpp"
#include "qcat/objects.hpp"
#include "qcat/poly.hpp"
#include "qcat/series.hpp"
#include "qcat/statistics.hpp"
#include "qcat/tilings.hpp"
#include "qcat/words.hpp"

namespace qcat {

namespace {

// ---------------------------------------------------------------------------
// small helpers
// ---------------------------------------------------------------------------

LaurentPoly qp(long e) {
  Exps exps = kUnitExps;
  exps[static_cast<int>(Var::q)] = static_cast<int>(e);
  return LaurentPoly::term(exps, 1);
}

long binom2(int n) { return static_cast<long>(n) * (n - 1) / 2; }

// A failing check returns the witness text; passing returns nullopt.
using Outcome = std::optional<std::string>;

std::string sides(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  return "lhs = " + lhs.text() + ", rhs = " + rhs.text();
}

std::string at_n(int n) { return "witness n=" + std::to_string(n) + ": "; }

std::string at_nr(int n, int r) {
  return "witness (n,r)=(" + std::to_string(n) + "," + std::to_string(r) +
         "): ";
}

std::string at_rn(int r, int n) {
  return "witness (r,n)=(" + std::to_string(r) + "," + std::to_string(n) +
         "): ";
}

std::string at_nrk(int n, int r, int k) {
  return "witness (n,r,k)=(" + std::to_string(n) + "," + std::to_string(r) +
         "," + std::to_string(k) + "): ";
}

// ---------------------------------------------------------------------------
// counting checks
// ---------------------------------------------------------------------------

Outcome check_count_dyck(int n_max, int) {
  for (int n = 0; n <= n_max; ++n) {
    const auto words = enumerate_r_dyck(n, 1);
    if (static_cast<long long>(words.size()) != catalan_number(n)) {
      return at_n(n) + "enumerated " + std::to_string(words.size()) +
             ", expected " + std::to_string(catalan_number(n));
    }
    for (const Word01& w : words) {
      if (!is_r_dyck(w, 1)) return at_n(n) + "invalid word " + format_word(w);
    }
  }
  return std::nullopt;
}

Outcome check_count_rdyck(int n_max, int r_max) {
  for (int r = 1; r <= r_max; ++r) {
    for (int n = 0; n <= n_max; ++n) {
      const auto words = enumerate_r_dyck(n, r);
      if (static_cast<long long>(words.size()) != fuss_catalan_number(n, r)) {
        return at_rn(r, n) + "enumerated " + std::to_string(words.size()) +
               ", expected " + std::to_string(fuss_catalan_number(n, r));
      }
    }
  }
  return std::nullopt;
}

Outcome check_count_stirling(int n_max, int r_max) {
  for (int r = 1; r <= r_max; ++r) {
    for (int n = 0; n <= n_max; ++n) {
      const auto words = enumerate_r_stirling(n, r);
      if (static_cast<long long>(words.size()) != stirling_word_count(n, r)) {
        return at_rn(r, n) + "enumerated " + std::to_string(words.size()) +
               ", expected " + std::to_string(stirling_word_count(n, r));
      }
      for (const MultiWord& w : words) {
        if (!is_stirling(w, r)) {
          return at_rn(r, n) + "invalid word " + format_multiword(w);
        }
      }
    }
  }
  return std::nullopt;
}

Outcome check_count_nc(int n_max, int) {
  for (int n = 1; n <= n_max; ++n) {
    const auto parts = enumerate_nc(n);
    if (static_cast<long long>(parts.size()) != catalan_number(n)) {
      return at_n(n) + "enumerated " + std::to_string(parts.size()) +
             ", expected " + std::to_string(catalan_number(n));
    }
    for (const NonCrossingPartition& p : parts) {
      // parse_nc revalidates the partition property and non-crossing-ness
      const NonCrossingPartition back = parse_nc(format_nc(p));
      if (!(back == p)) return at_n(n) + "round trip failed for " + format_nc(p);
    }
  }
  return std::nullopt;
}

Outcome check_count_sym(int n_max, int) {
  for (int n = 0; n <= n_max; ++n) {
    const auto paths = enumerate_symmetric(n);
    if (static_cast<long long>(paths.size()) != catalan_number(n + 1)) {
      return at_n(n) + "enumerated " + std::to_string(paths.size()) +
             ", expected " + std::to_string(catalan_number(n + 1));
    }
    for (const SymmetricPath& p : paths) {
      if (!is_symmetric_half(p.half, n)) {
        return at_n(n) + "invalid half word " + format_word(p.half);
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// distribution identities
// ---------------------------------------------------------------------------

Outcome check_eq_areaCn(int n_max, int) {
  for (int n = 0; n <= n_max; ++n) {
    LaurentPoly lhs;
    for (const Word01& w : enumerate_r_dyck(n, 1)) lhs += qp(dyck_coarea(w));
    const LaurentPoly rhs = catalan_poly(n);
    if (lhs != rhs) return at_n(n) + sides(lhs, rhs);
  }
  return std::nullopt;
}

Outcome check_eq_132C(int n_max, int) {
  for (int n = 1; n <= n_max; ++n) {
    LaurentPoly lhs;
    for (const MultiWord& w : enumerate_avoiding(n, "132")) lhs += qp(inv(w));
    const LaurentPoly rhs = catalan_poly(n);
    if (lhs != rhs) return at_n(n) + sides(lhs, rhs);
  }
  return std::nullopt;
}

Outcome check_eq_majE(int n_max, int) {
  for (int n = 0; n <= n_max; ++n) {
    LaurentPoly lhs;
    for (const Word01& w : enumerate_r_dyck(n, 1)) lhs += qp(maj(w));
    const LaurentPoly rhs = e_poly(n);
    if (lhs != rhs) return at_n(n) + sides(lhs, rhs);
  }
  return std::nullopt;
}

Outcome check_eq_iInvCrn(int n_max, int r_max) {
  for (int r = 1; r <= r_max; ++r) {
    for (int n = 0; n <= n_max; ++n) {
      LaurentPoly lhs;
      for (const Word01& w : enumerate_r_dyck(n, r)) lhs += qp(r_dyck_iinv(w));
      const LaurentPoly rhs = fuss_catalan_poly(n, r);
      if (lhs != rhs) return at_rn(r, n) + sides(lhs, rhs);
    }
  }
  return std::nullopt;
}

Outcome check_eq_majEr(int n_max, int r_max) {
  for (int r = 1; r <= r_max; ++r) {
    for (int n = 0; n <= n_max; ++n) {
      LaurentPoly lhs;
      for (const Word01& w : enumerate_r_dyck(n, r)) lhs += qp(maj(w));
      const LaurentPoly rhs = e_r_poly(n, r);
      if (lhs != rhs) return at_rn(r, n) + sides(lhs, rhs);
    }
  }
  return std::nullopt;
}

Outcome check_thm_E(int n_max, int r_max) {
  for (int r = 1; r <= r_max; ++r) {
    for (int n = 0; n <= n_max; ++n) {
      LaurentPoly lhs;
      for (const Word01& w : enumerate_r_dyck(n, r)) {
        const auto [alpha, beta] = alpha_beta(w);
        Exps e = kUnitExps;
        e[static_cast<int>(Var::x)] =
            static_cast<int>(descent_set(w).size());
        e[static_cast<int>(Var::a)] = static_cast<int>(alpha);
        e[static_cast<int>(Var::b)] = static_cast<int>(beta);
        lhs += LaurentPoly::term(e, 1);
      }
      const LaurentPoly rhs = e_general_poly(n, r);
      if (lhs != rhs) return at_rn(r, n) + sides(lhs, rhs);
    }
    // the defining series identity, to the same order
    const int order = std::min(n_max, 6);
    const TruncSeries z = TruncSeries::z(order);
    const TruncSeries rhs = series_e_general_def(r, order);
    if (rhs != z) {
      const int k = rhs.first_difference(z);
      return "series witness r=" + std::to_string(r) + " order " +
             std::to_string(order) + ": coefficient of z^" +
             std::to_string(k) + " is " + rhs.coeff(k).text();
    }
  }
  return std::nullopt;
}

Outcome check_thm_INVMAJ(int n_max, int r_max) {
  for (int r = 1; r <= r_max; ++r) {
    for (int n = 1; n <= n_max; ++n) {
      LaurentPoly inv_side;
      LaurentPoly maj_side;
      for (const MultiWord& v : enumerate_r_stirling(n, r)) {
        inv_side += qp(stirling_INV(v, r));
        maj_side += qp(stirling_MAJ(v, r));
        // the rewriting map transports MAJ to INV pointwise
        const MultiWord image = phi(v, r);
        if (stirling_INV(image, r) != stirling_MAJ(v, r)) {
          return at_rn(r, n) + "word " + format_multiword(v) + " maps to " +
                 format_multiword(image) + " with INV " +
                 std::to_string(stirling_INV(image, r)) + " != MAJ " +
                 std::to_string(stirling_MAJ(v, r));
        }
      }
      LaurentPoly rhs = LaurentPoly::one();
      for (int j = 1; j <= n - 1; ++j) rhs *= q_int(j * r + 1);
      if (inv_side != rhs) {
        return at_rn(r, n) + "INV distribution: " + sides(inv_side, rhs);
      }
      if (maj_side != rhs) {
        return at_rn(r, n) + "MAJ distribution: " + sides(maj_side, rhs);
      }
    }
  }
  return std::nullopt;
}

Outcome check_prop_231Crn(int n_max, int r_max) {
  for (int r = 1; r <= r_max; ++r) {
    for (int n = 1; n <= n_max; ++n) {
      LaurentPoly lhs;
      for (const MultiWord& v : enumerate_r_stirling(n, r)) {
        if (is_231_avoiding(v)) lhs += qp(stirling_INV(v, r));
      }
      const LaurentPoly rhs = fuss_catalan_poly(n, r).reverse_in(
          Var::q, static_cast<int>(r * binom2(n)));
      if (lhs != rhs) return at_rn(r, n) + sides(lhs, rhs);
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// bijections
// ---------------------------------------------------------------------------

Outcome check_bij_kappa(int n_max, int r_max) {
  for (int r = 1; r <= r_max; ++r) {
    for (int n = 1; n <= n_max; ++n) {
      std::set<Word01> images;
      long count = 0;
      for (const MultiWord& v : enumerate_r_stirling(n, r)) {
        if (!is_231_avoiding(v)) continue;
        ++count;
        const Word01 path = kappa(v, r);
        if (!is_r_dyck(path, r)) {
          return at_rn(r, n) + format_multiword(v) + " maps outside the family";
        }
        const auto alpha = kappa_alpha(v, r);
        long alpha_sum = 0;
        for (int a : alpha) alpha_sum += a;
        if (alpha_sum != stirling_INV(v, r)) {
          return at_rn(r, n) + format_multiword(v) +
                 ": insertion offsets sum to " + std::to_string(alpha_sum) +
                 " != INV " + std::to_string(stirling_INV(v, r));
        }
        if (kappa_inv(path, r) != v) {
          return at_rn(r, n) + "round trip failed for " + format_multiword(v);
        }
        images.insert(path);
      }
      if (static_cast<long long>(images.size()) != count ||
          count != fuss_catalan_number(n, r)) {
        return at_rn(r, n) + "image has " + std::to_string(images.size()) +
               " paths from " + std::to_string(count) + " words, expected " +
               std::to_string(fuss_catalan_number(n, r));
      }
    }
  }
  return std::nullopt;
}

Outcome check_bij_phi(int n_max, int r_max) {
  for (int r = 1; r <= r_max; ++r) {
    for (int n = 1; n <= n_max; ++n) {
      std::set<MultiWord> images;
      long count = 0;
      for (const MultiWord& v : enumerate_r_stirling(n, r)) {
        ++count;
        const MultiWord image = phi(v, r);
        if (!is_stirling(image, r)) {
          return at_rn(r, n) + format_multiword(v) + " maps outside the family";
        }
        if (phi_inv(image, r) != v) {
          return at_rn(r, n) + "round trip failed for " + format_multiword(v);
        }
        images.insert(image);
      }
      if (static_cast<long long>(images.size()) != count) {
        return at_rn(r, n) + "map is not injective";
      }
    }
  }
  return std::nullopt;
}

Outcome check_bij_rho(int n_max, int) {
  for (int n = 1; n <= n_max; ++n) {
    std::set<Word01> images;
    long count = 0;
    for (const MultiWord& pi : enumerate_avoiding(n, "231")) {
      ++count;
      const Word01 d = rho(pi);
      if (!is_r_dyck(d, 1)) {
        return at_n(n) + format_multiword(pi) + " maps outside the family";
      }
      if (rho_inv(d) != pi) {
        return at_n(n) + "round trip failed for " + format_multiword(pi);
      }
      images.insert(d);
    }
    if (static_cast<long long>(images.size()) != count ||
        count != catalan_number(n)) {
      return at_n(n) + "image has " + std::to_string(images.size()) +
             " paths from " + std::to_string(count) + " permutations";
    }
  }
  return std::nullopt;
}

Outcome check_bij_nc312(int n_max, int) {
  for (int n = 1; n <= n_max; ++n) {
    std::set<MultiWord> images;
    long count = 0;
    for (const NonCrossingPartition& p : enumerate_nc(n)) {
      ++count;
      const NcChain chain = nc_to_sigma(p);
      if (!is_r_dyck(chain.dyck, 1)) {
        return at_n(n) + format_nc(p) + ": intermediate path invalid";
      }
      if (contains_132(chain.mu)) {
        return at_n(n) + format_nc(p) + ": mu contains the pattern 132";
      }
      if (contains_312(chain.sigma)) {
        return at_n(n) + format_nc(p) + ": sigma contains the pattern 312";
      }
      if (!(sigma_to_nc(chain.sigma) == p)) {
        return at_n(n) + "round trip failed for " + format_nc(p);
      }
      images.insert(chain.sigma);
    }
    const long long expected =
        static_cast<long long>(enumerate_avoiding(n, "312").size());
    if (static_cast<long long>(images.size()) != count || count != expected) {
      return at_n(n) + "image has " + std::to_string(images.size()) +
             " permutations from " + std::to_string(count) +
             " partitions, expected " + std::to_string(expected);
    }
  }
  return std::nullopt;
}

Outcome check_bij_psi(int n_max, int) {
  for (int n = 1; n <= n_max; ++n) {
    std::set<Word01> images;
    long count = 0;
    for (const Word01& p : enumerate_r_dyck(n, 1)) {
      ++count;
      const SymmetricPath s = psi(p);
      if (s.n != n - 1 || !is_symmetric_half(s.half, n - 1)) {
        return at_n(n) + format_word(p) + " maps outside the family";
      }
      if (psi_inv(s) != p) {
        return at_n(n) + "round trip failed for " + format_word(p);
      }
      images.insert(s.half);
    }
    if (static_cast<long long>(images.size()) != count ||
        count != catalan_number(n)) {
      return at_n(n) + "image has " + std::to_string(images.size()) +
             " paths from " + std::to_string(count) + " words";
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// tilings
// ---------------------------------------------------------------------------

Outcome check_thm_majD(int n_max, int) {
  for (int n = 1; n <= n_max; ++n) {
    for (const MultiWord& pi : enumerate_avoiding(n, "231")) {
      const long lhs = tiling_maj(build_tiling(pi));
      const long rhs = maj(rho(pi));
      if (lhs != rhs) {
        return at_n(n) + format_multiword(pi) + ": tiling maj " +
               std::to_string(lhs) + " != path maj " + std::to_string(rhs);
      }
    }
  }
  return std::nullopt;
}

Outcome check_tiling_bijection(int n_max, int) {
  for (int n = 1; n <= n_max; ++n) {
    for (const MultiWord& w : enumerate_permutations(n)) {
      const DyckTiling t = build_tiling(w);
      if (read_permutation(t) != w) {
        return at_n(n) + "round trip failed for " + format_multiword(w);
      }
      if (!is_cover_inclusive(t)) {
        return at_n(n) + format_multiword(w) + ": tiling is not cover-inclusive";
      }
      // On 231-avoiding input every trajectory lays at most one non-trivial
      // tile; in general the shift may split (e.g. 14253 needs two size-1
      // tiles on the trajectory of 4, forced by cover-inclusivity).
      if (!contains_231(w)) {
        std::map<int, int> nontrivial_per_label;
        for (const Tile& tile : t.tiles) {
          if (tile.size > 0) ++nontrivial_per_label[tile.label];
        }
        for (const auto& [label, cnt] : nontrivial_per_label) {
          if (cnt > 1) {
            return at_n(n) + format_multiword(w) + ": trajectory " +
                   std::to_string(label) + " has " + std::to_string(cnt) +
                   " non-trivial tiles";
          }
        }
      }
      if (tiling_wtprime(t) != inv(w)) {
        return at_n(n) + format_multiword(w) + ": total tile size " +
               std::to_string(tiling_wtprime(t)) + " != inv " +
               std::to_string(inv(w));
      }
    }
  }
  return std::nullopt;
}

Outcome check_prop_DTqCat(int n_max, int) {
  for (int n = 1; n <= n_max; ++n) {
    LaurentPoly lhs;
    for (const MultiWord& pi : enumerate_avoiding(n, "231")) {
      lhs += qp(tiling_wtprime(build_tiling(pi)));
    }
    const LaurentPoly rhs =
        catalan_poly(n).reverse_in(Var::q, static_cast<int>(binom2(n)));
    if (lhs != rhs) return at_n(n) + sides(lhs, rhs);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// non-crossing partitions
// ---------------------------------------------------------------------------

Outcome check_thm_NCtoCat(int n_max, int) {
  for (int n = 1; n <= n_max; ++n) {
    LaurentPoly lhs;
    for (const NonCrossingPartition& p : enumerate_nc(n)) lhs += qp(nc_maj(p));
    const LaurentPoly rhs = e_poly(n);
    if (lhs != rhs) return at_n(n) + sides(lhs, rhs);
  }
  return std::nullopt;
}

Outcome check_prop_N2N(int n_max, int) {
  for (int n = 1; n <= n_max; ++n) {
    for (int r = 0; r <= n - 1; ++r) {
      const LaurentPoly lhs = n2_enum(n, r);
      const LaurentPoly rhs = narayana_poly(n, r);
      if (lhs != rhs) return at_nr(n, r) + sides(lhs, rhs);
    }
  }
  return std::nullopt;
}

Outcome check_prop_NCqCat(int n_max, int) {
  for (int n = 1; n <= n_max; ++n) {
    LaurentPoly lhs;
    for (const NonCrossingPartition& p : enumerate_nc(n)) {
      lhs += qp(nc_wtprime(p));
    }
    const LaurentPoly rhs =
        catalan_poly(n).reverse_in(Var::q, static_cast<int>(binom2(n)));
    if (lhs != rhs) return at_n(n) + sides(lhs, rhs);
  }
  return std::nullopt;
}

Outcome check_thm_NCqt(int n_max, int) {
  for (int n = 1; n <= n_max; ++n) {
    for (const NonCrossingPartition& p : enumerate_nc(n)) {
      const NcChain chain = nc_to_sigma(p);
      const long lhs = nc_maj(p);
      const long rhs =
          maj(chain.sigma) + maj(inverse_permutation(chain.sigma));
      if (lhs != rhs) {
        return at_n(n) + format_nc(p) + ": maj " + std::to_string(lhs) +
               " != " + std::to_string(rhs) + " for image " +
               format_multiword(chain.sigma);
      }
    }
  }
  return std::nullopt;
}

Outcome check_cor_Aqq(int n_max, int) {
  for (int n = 1; n <= n_max; ++n) {
    Exps to_q = kUnitExps;
    to_q[static_cast<int>(Var::q)] = 1;
    const LaurentPoly lhs = aqt_poly(n).substitute(Var::t, to_q);
    const LaurentPoly rhs = e_poly(n);
    if (lhs != rhs) return at_n(n) + sides(lhs, rhs);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// symmetric paths
// ---------------------------------------------------------------------------

Outcome check_thm_majsymD(int n_max, int) {
  for (int n = 0; n <= n_max; ++n) {
    LaurentPoly lhs;
    for (const SymmetricPath& p : enumerate_symmetric(n)) lhs += qp(sym_maj(p));
    const LaurentPoly rhs = e_poly(n + 1);
    if (lhs != rhs) return at_n(n) + sides(lhs, rhs);
  }
  return std::nullopt;
}

Outcome check_prop_symDPqCat(int n_max, int) {
  for (int n = 0; n <= n_max; ++n) {
    LaurentPoly lhs;
    for (const SymmetricPath& p : enumerate_symmetric(n)) {
      lhs += qp(sym_inv(p).total);
    }
    const LaurentPoly rhs = catalan_poly(n + 1);
    if (lhs != rhs) return at_n(n) + sides(lhs, rhs);
  }
  return std::nullopt;
}

Outcome check_thm_N3nrk(int n_max, int) {
  for (int n = 0; n <= n_max; ++n) {
    for (int r = 0; r <= n; ++r) {
      for (int k = 0; k <= n; ++k) {
        const LaurentPoly closed = n3k_closed(n, r, k);
        const LaurentPoly rec = n3k_rec(n, r, k);
        const LaurentPoly enumd = n3k_enum(n, r, k);
        if (closed != rec) {
          return at_nrk(n, r, k) + "closed form vs recurrence: " +
                 sides(closed, rec);
        }
        if (closed != enumd) {
          return at_nrk(n, r, k) + "closed form vs enumeration: " +
                 sides(closed, enumd);
        }
      }
    }
  }
  return std::nullopt;
}

Outcome check_lemma_N3N(int n_max, int) {
  for (int n = 0; n <= n_max; ++n) {
    for (int r = 0; r <= n; ++r) {
      const LaurentPoly lhs = n3_rec(n, r);
      const LaurentPoly rhs = narayana_poly(n + 1, r);
      if (lhs != rhs) return at_nr(n, r) + sides(lhs, rhs);
    }
  }
  return std::nullopt;
}

Outcome check_rec_N3(int n_max, int) {
  for (int n = 0; n <= n_max; ++n) {
    for (int r = 0; r <= n; ++r) {
      const LaurentPoly lhs = n3_rec(n, r);
      const LaurentPoly rhs = n3_enum(n, r);
      if (lhs != rhs) return at_nr(n, r) + sides(lhs, rhs);
    }
  }
  return std::nullopt;
}

Outcome check_lemma_N3split(int n_max, int) {
  for (int n = 1; n <= n_max; ++n) {
    for (int r = 0; r <= n; ++r) {
      for (int k = 0; k <= n; ++k) {
        const LaurentPoly plus = n3_plus(n, r, k);
        const LaurentPoly minus = n3_minus(n, r, k);
        const LaurentPoly plus_e = n3_plus_enum(n, r, k);
        const LaurentPoly minus_e = n3_minus_enum(n, r, k);
        if (plus != plus_e) {
          return at_nrk(n, r, k) + "up-step side: " + sides(plus, plus_e);
        }
        if (minus != minus_e) {
          return at_nrk(n, r, k) + "right-step side: " + sides(minus, minus_e);
        }
        const LaurentPoly total = plus + minus;
        const LaurentPoly rhs = n3k_closed(n, r, k);
        if (total != rhs) {
          return at_nrk(n, r, k) + "split sum: " + sides(total, rhs);
        }
      }
    }
  }
  return std::nullopt;
}

Outcome check_cor_N3sum2(int n_max, int, bool shifted) {
  for (int n = 1; n <= n_max; ++n) {
    // sweep r over the support of the right-hand side
    const int r_top = shifted ? n : n - 1;
    for (int r = 0; r <= r_top; ++r) {
      LaurentPoly lhs;
      for (int k = 0; k <= n; ++k) lhs += n3k_closed(n, r, k);
      const LaurentPoly rhs =
          shifted ? narayana_poly(n + 1, r) : narayana_poly(n, r);
      if (lhs != rhs) return at_nr(n, r) + sides(lhs, rhs);
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// recurrences
// ---------------------------------------------------------------------------

Outcome check_rec_N(int n_max, int, bool truncated) {
  for (int n = 0; n <= n_max; ++n) {
    for (int r = 0; r <= std::max(0, n - 1); ++r) {
      const LaurentPoly closed = narayana_poly(n, r);
      const LaurentPoly rec = narayana_rec(n, r, truncated);
      if (rec != closed) {
        return at_nr(n, r) + "recurrence vs closed form: " +
               sides(rec, closed);
      }
      if (!truncated) {
        const LaurentPoly enumd = narayana_enum(n, r);
        if (enumd != closed) {
          return at_nr(n, r) + "enumeration vs closed form: " +
                 sides(enumd, closed);
        }
      }
    }
  }
  return std::nullopt;
}

Outcome check_rec_N2(int n_max, int, bool truncated) {
  for (int n = 0; n <= n_max; ++n) {
    for (int r = 0; r <= std::max(0, n - 1); ++r) {
      const LaurentPoly rec = n2_rec(n, r, truncated);
      const LaurentPoly enumd = n2_enum(n, r);
      if (rec != enumd) {
        return at_nr(n, r) + "recurrence vs enumeration: " +
               sides(rec, enumd);
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// series
// ---------------------------------------------------------------------------

Outcome series_outcome(const TruncSeries& got, int order,
                       const std::string& label) {
  const TruncSeries z = TruncSeries::z(order);
  if (got == z) return std::nullopt;
  const int k = got.first_difference(z);
  return "witness " + label + ": coefficient of z^" + std::to_string(k) +
         " is " + got.coeff(k).text();
}

Outcome check_series_defCn(int order, int) {
  return series_outcome(series_catalan_def(order), order, "order");
}

Outcome check_series_Cnrinsum(int order, int r_max) {
  for (int r = 1; r <= r_max; ++r) {
    auto out = series_outcome(series_fuss_def(r, order), order,
                              "r=" + std::to_string(r));
    if (out) return out;
  }
  return std::nullopt;
}

Outcome check_series_Einqq(int order, int r_max) {
  for (int r = 1; r <= r_max; ++r) {
    auto out = series_outcome(series_e_def(r, order), order,
                              "r=" + std::to_string(r));
    if (out) return out;
  }
  return std::nullopt;
}

Outcome check_series_Einprod(int order, int r_max) {
  for (int r = 1; r <= r_max; ++r) {
    auto out = series_outcome(series_e_general_def(r, order), order,
                              "r=" + std::to_string(r));
    if (out) return out;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// registry
// ---------------------------------------------------------------------------

struct CheckSpec {
  const char* id;
  int def_n;   // default n bound, or series order
  int def_r;   // default r bound; 0 = the check has no r parameter
  bool series; // bounds print as "order<=" instead of "n<="
  bool expected_fail;
  Outcome (*run)(int, int);
};

Outcome run_cor_N3sum2(int n, int r) { return check_cor_N3sum2(n, r, false); }
Outcome run_cor_N3sum2_fixed(int n, int r) {
  return check_cor_N3sum2(n, r, true);
}
Outcome run_rec_N(int n, int r) { return check_rec_N(n, r, false); }
Outcome run_rec_N_alt(int n, int r) { return check_rec_N(n, r, true); }
Outcome run_rec_N2(int n, int r) { return check_rec_N2(n, r, false); }
Outcome run_rec_N2_alt(int n, int r) { return check_rec_N2(n, r, true); }

constexpr CheckSpec kChecks[] = {
    {"count-dyck", 10, 0, false, false, check_count_dyck},
    {"count-rdyck", 6, 3, false, false, check_count_rdyck},
    {"count-stirling", 5, 3, false, false, check_count_stirling},
    {"count-nc", 9, 0, false, false, check_count_nc},
    {"count-sym", 8, 0, false, false, check_count_sym},
    {"eq-areaCn", 10, 0, false, false, check_eq_areaCn},
    {"eq-132C", 8, 0, false, false, check_eq_132C},
    {"eq-majE", 10, 0, false, false, check_eq_majE},
    {"eq-iInvCrn", 6, 3, false, false, check_eq_iInvCrn},
    {"eq-majEr", 6, 3, false, false, check_eq_majEr},
    {"thm-E", 6, 2, false, false, check_thm_E},
    {"thm-INVMAJ", 5, 3, false, false, check_thm_INVMAJ},
    {"prop-231Crn", 5, 3, false, false, check_prop_231Crn},
    {"bij-kappa", 5, 3, false, false, check_bij_kappa},
    {"bij-phi", 5, 3, false, false, check_bij_phi},
    {"bij-rho", 8, 0, false, false, check_bij_rho},
    {"thm-majD", 8, 0, false, false, check_thm_majD},
    {"tiling-bijection", 6, 0, false, false, check_tiling_bijection},
    {"prop-DTqCat", 8, 0, false, false, check_prop_DTqCat},
    {"thm-NCtoCat", 9, 0, false, false, check_thm_NCtoCat},
    {"prop-N2N", 9, 0, false, false, check_prop_N2N},
    {"prop-NCqCat", 9, 0, false, false, check_prop_NCqCat},
    {"thm-NCqt", 8, 0, false, false, check_thm_NCqt},
    {"cor-Aqq", 8, 0, false, false, check_cor_Aqq},
    {"bij-nc312", 8, 0, false, false, check_bij_nc312},
    {"thm-majsymD", 8, 0, false, false, check_thm_majsymD},
    {"prop-symDPqCat", 8, 0, false, false, check_prop_symDPqCat},
    {"bij-psi", 9, 0, false, false, check_bij_psi},
    {"thm-N3nrk", 8, 0, false, false, check_thm_N3nrk},
    {"lemma-N3N", 8, 0, false, false, check_lemma_N3N},
    {"rec-N3", 8, 0, false, false, check_rec_N3},
    {"lemma-N3split", 8, 0, false, false, check_lemma_N3split},
    {"cor-N3sum2", 6, 0, false, true, run_cor_N3sum2},
    {"cor-N3sum2-fixed", 6, 0, false, false, run_cor_N3sum2_fixed},
    {"rec-N", 9, 0, false, false, run_rec_N},
    {"rec-N-altbounds", 6, 0, false, true, run_rec_N_alt},
    {"rec-N2", 9, 0, false, false, run_rec_N2},
    {"rec-N2-altbounds", 6, 0, false, true, run_rec_N2_alt},
    {"series-defCn", 12, 0, true, false, check_series_defCn},
    {"series-Cnrinsum", 8, 3, true, false, check_series_Cnrinsum},
    {"series-Einqq", 8, 3, true, false, check_series_Einqq},
    {"series-Einprod", 6, 2, true, false, check_series_Einprod},
};

const CheckSpec* find_check(const std::string& id) {
  for (const CheckSpec& spec : kChecks) {
    if (id == spec.id) return &spec;
  }
  return nullptr;
}

}  // namespace

std::vector<std::string> verification_ids() {
  std::vector<std::string> ids;
  for (const CheckSpec& spec : kChecks) ids.emplace_back(spec.id);
  return ids;
}

std::vector<std::string> default_verification_ids() {
  std::vector<std::string> ids;
  for (const CheckSpec& spec : kChecks) {
    if (!spec.expected_fail) ids.emplace_back(spec.id);
  }
  return ids;
}

bool is_expected_fail_id(const std::string& id) {
  const CheckSpec* spec = find_check(id);
  return spec != nullptr && spec->expected_fail;
}

bool is_verification_id(const std::string& id) {
  return find_check(id) != nullptr;
}

VerificationReport run_verification(const std::string& id, int n_max,
                                    int r_max) {
  const CheckSpec* spec = find_check(id);
  if (spec == nullptr) {
    throw std::invalid_argument("unknown verification id: " + id);
  }
  const int n = n_max > 0 ? n_max : spec->def_n;
  const int r = spec->def_r == 0 ? 0 : (r_max > 0 ? r_max : spec->def_r);
  VerificationReport report;
  report.id = id;
  report.expected_fail = spec->expected_fail;
  std::ostringstream bounds;
  if (spec->def_r != 0) bounds << "r<=" << r << " ";
  bounds << (spec->series ? "order<=" : "n<=") << n;
  report.bounds = bounds.str();
  const Outcome outcome = spec->run(n, r);
  report.pass = !outcome.has_value();
  if (outcome) report.detail = *outcome;
  return report;
}

std::vector<VerificationReport> run_verifications(
    const std::vector<std::string>& ids, int n_max, int r_max, bool parallel) {
  std::vector<VerificationReport> reports(ids.size());
  if (!parallel) {
    for (size_t i = 0; i < ids.size(); ++i) {
      reports[i] = run_verification(ids[i], n_max, r_max);
    }
    return reports;
  }
  std::vector<std::future<VerificationReport>> futures;
  futures.reserve(ids.size());
  for (const std::string& id : ids) {
    futures.push_back(std::async(std::launch::async, [id, n_max, r_max] {
      return run_verification(id, n_max, r_max);
    }));
  }
  for (size_t i = 0; i < ids.size(); ++i) reports[i] = futures[i].get();
  return reports;
}

}  // namespace qcat
