#pragma once

#include <set>

#include "qcat/objects.hpp"
#include "qcat/words.hpp"

namespace qcat {

// Descent conventions used by the statistics in this library:
//  - kStandard:  {i : w_i > w_{i+1}}
//  - kAugmented: the standard set plus the final position n
//  - kSymmetric: on a half word of length m, {i < m : (w_i, w_{i+1}) = (1,0)}
//                plus m when w_m = 1 (01-words only)
enum class DescentConvention { kStandard, kAugmented, kSymmetric };

std::set<int> descent_set_with(const Word01& w, DescentConvention c);
std::set<int> descent_set_with(const MultiWord& w, DescentConvention c);
long maj_with(const Word01& w, DescentConvention c);
long maj_with(const MultiWord& w, DescentConvention c);

// --- generalized Dyck words --------------------------------------------------

// Area between the word and the top word 0^n 1^(rn); equals dyck_coarea.
long r_dyck_iinv(const Word01& w);
// r*n(n-1)/2 minus the area statistic above.
long r_dyck_inv(const Word01& w, int r);

// --- r-Stirling words --------------------------------------------------------

// Positions j <= r(n-1) with w_j > w_{j+1} = ... = w_{j+r}.
std::set<int> stirling_J(const MultiWord& w, int r);
// Sum of the positions above.
long stirling_MAJ(const MultiWord& w, int r);
// inv(w)/r; the plain inversion count of an r-Stirling word is divisible by r.
long stirling_INV(const MultiWord& w, int r);

// --- non-crossing partitions -------------------------------------------------

// Weight of a block {j_1 < ... < j_p}: 0 when p = 1, otherwise
// j_1 + j_p + 2*(j_2 + ... + j_{p-1}) - p + 1.
long nc_block_wt(const std::vector<int>& block);
long nc_maj(const NonCrossingPartition& p);  // sum of block weights

// Sum over the block of (j - min); the partition statistic sums over blocks.
long nc_block_wtprime(const std::vector<int>& block);
long nc_wtprime(const NonCrossingPartition& p);

// --- symmetric Dyck paths ----------------------------------------------------

// maj of the half word under the symmetric descent convention.
long sym_maj(const SymmetricPath& p);

// inv1 counts, for each half arch b: one, plus the arches opening to the
// right of b, plus the half arches to the right of b. inv2 counts the (1,0)
// pairs of the half word. total = inv1 + inv2.
struct SymInv {
  long inv1 = 0;
  long inv2 = 0;
  long total = 0;
};
SymInv sym_inv(const SymmetricPath& p);

}  // namespace qcat
