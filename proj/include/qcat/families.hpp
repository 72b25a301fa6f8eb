#pragma once

#include "qcat/poly.hpp"
#include "qcat/series.hpp"

namespace qcat {

// All families are exact polynomials (Laurent where noted); results of the
// recursively defined families are cached behind internal mutexes, so every
// function here is safe to call concurrently.

// ---------------------------------------------------------------------------
// q-Catalan and q-Fuss-Catalan numbers
// ---------------------------------------------------------------------------

// C_n(q) by the convolution recurrence
// C_{n+1} = sum_{k=0}^n C_k C_{n-k} q^{(k+1)(n-k)}, C_0 = 1.
LaurentPoly catalan_poly(int n);

// E_n(q) = [2n choose n] / [n+1]  (exact division).
LaurentPoly e_poly(int n);

// C_n^{(r)}(q): the auxiliary family
// C'_n = sum_{l_0+...+l_r = n-1} prod_i C'_{l_i} * q^{sum_j j*l_j}
// reversed in q at degree r*binom(n,2).
LaurentPoly fuss_catalan_poly(int n, int r);

// ---------------------------------------------------------------------------
// E_n^{(r)}: descent/weight generating functions of generalized Dyck words
// ---------------------------------------------------------------------------

// E_n^{(r)}(x; a, b), the three-variable form, by the recurrence
//   E_{n+1} = sum_{n_0+...+n_r = n} E_{n_0}(a x)
//             prod_{i=1}^r E_{n_i}(a^{d1} b^{d2} x) (a^{d1} b^{d2} x)^{[n_i>0]}
// with d1(i) = 1 + (n_0+...+n_{i-1}) and d2(i) = i + r*(n_0+...+n_{i-1}).
LaurentPoly e_general_poly(int n, int r);

// E_n^{(r)}(q) = E_n^{(r)}(1; q, q), computed by the same recurrence with the
// two weight variables folded into q (much faster than the symbolic form).
LaurentPoly e_r_poly(int n, int r);

// ---------------------------------------------------------------------------
// Narayana-type refinements
// ---------------------------------------------------------------------------

// N(n, r) = (1/[n]) [n choose r] [n choose r+1] q^{r(r+1)}; N(0,0) = 1 and
// zero outside 0 <= r <= n-1.
LaurentPoly narayana_poly(int n, int r);

// The convolution recurrence
//   N(n,r) = q^r N(n-1,r)
//          + sum_{j=0}^{n-2} sum_{s=0}^{r-1} N(j,s) N(n-1-j,r-s-1)
//            q^{2(j+1)(r-s)+s}.
// With truncated_inner_bound the inner sum stops at s <= j-1 instead, which
// kills the j = 0 term; that variant is kept only as a counterexample
// witness (it already fails at n = 2, r = 1).
LaurentPoly narayana_rec(int n, int r, bool truncated_inner_bound = false);

// Sum of q^maj over Dyck words of size n with exactly r descents.
LaurentPoly narayana_enum(int n, int r);

// Sum of q^maj over non-crossing partitions of [n] of rank r (rank = n minus
// the number of blocks); the recurrence variant mirrors narayana_rec with
// weight q^{2(j+1)(r-s)-j+2s} and carries the same truncated-bound witness.
LaurentPoly n2_enum(int n, int r);
LaurentPoly n2_rec(int n, int r, bool truncated_inner_bound = false);

// ---------------------------------------------------------------------------
// Symmetric-path refinements
// ---------------------------------------------------------------------------

// Sum of q^maj over symmetric paths of size n with r descents (half-word
// convention), optionally refined by the number k of half arches, and split
// by the last letter of the half word (plus: up step, minus: right step).
LaurentPoly n3_enum(int n, int r);
LaurentPoly n3k_enum(int n, int r, int k);
LaurentPoly n3_plus_enum(int n, int r, int k);
LaurentPoly n3_minus_enum(int n, int r, int k);

// Recurrence
//   N3(n,r) = q^r N3(n-1,r)
//           + sum_{j=1}^n sum_{s=0}^{j-1} N(j-1,s) N3(n-j,r-s-1)
//             q^{2j(r-s)+s}
// with N3(0,0) = 1 and zero outside 0 <= r <= n.
LaurentPoly n3_rec(int n, int r);

// Closed form
//   N3(n,r,k) = [n r][n r-1][n-r k] / [n k+1] * q^{r(r+1)+2(n-r-k)}
// with the boundary cases N3(0,r,k) = [r=0][k=0] and N3(n,0,k) = [k=n].
LaurentPoly n3k_closed(int n, int r, int k);

// Recurrence with the half-arch refinement carried through:
//   N3(n,r,k) = q^r N3(n-1,r,k-1)
//             + sum_{j=1}^n sum_{s=0}^{j-1} N(j-1,s) N3(n-j,r-s-1,k)
//               q^{2j(r-s)+s}.
LaurentPoly n3k_rec(int n, int r, int k);

// The last-letter split:
//   N3plus(n,r,k)  = N3(n-1,r,k-1)
//   N3minus(n,r,k) = q^{2n-k} N3(n-1,r-1,k) + q N3minus(n,r,k+1)
// (zero when k >= n or n <= 0).
LaurentPoly n3_plus(int n, int r, int k);
LaurentPoly n3_minus(int n, int r, int k);

// ---------------------------------------------------------------------------
// Two-variable distribution over 312-avoiding permutations
// ---------------------------------------------------------------------------

// sum over sigma in S_n(312) of q^{maj(sigma)} t^{maj(sigma^{-1})}.
LaurentPoly aqt_poly(int n);

// ---------------------------------------------------------------------------
// Defining series identities; each right-hand side must equal the series z.
// ---------------------------------------------------------------------------

// sum_{n>=1} C_{n-1} z^n (1-z)(1-qz)...(1-q^{n-1}z)
TruncSeries series_catalan_def(int order);

// sum_{n>=0} C_n^{(r)} z^{rn+1} prod_{i=0}^{rn} (1 - q^i z^r)
TruncSeries series_fuss_def(int r, int order);

// sum_{n>=1} E_n^{(r)}(q) q^{-binom(n,2)} z^n
//            prod_{i=0}^{n-1} 1/(1+q^{i-n}z) prod_{i=0}^{rn-1} 1/(1+q^{1+i}z)
TruncSeries series_e_def(int r, int order);

// sum_{n>=1} a^{-binom(n,2)} E_n^{(r)}(x;a,b) z^n
//            prod_{i=1}^n 1/(1+a^{-i}z) prod_{i=1}^{rn} 1/(1+x b^i z)
TruncSeries series_e_general_def(int r, int order);

}  // namespace qcat
