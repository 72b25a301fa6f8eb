#pragma once

#include "qcat/objects.hpp"
#include "qcat/words.hpp"

#include <string>
#include <vector>

namespace qcat {

// ---------------------------------------------------------------------------
// kappa: 231-avoiding r-Stirling word  <->  r-Dyck path.
//
// For a 231-avoiding r-Stirling word v on values 1..n, alpha_i counts the
// LETTERS greater than i that appear strictly left of the leftmost i.  The
// image path has exactly r*(j-1) - alpha_{n+1-j} right steps before its j-th
// up step.  Summing alpha recovers INV(v).
// ---------------------------------------------------------------------------

// alpha vector (alpha_1, ..., alpha_n); input must be r-Stirling.
std::vector<int> kappa_alpha(const MultiWord& v, int r);

// Forward map; throws std::invalid_argument unless v is a 231-avoiding
// r-Stirling word.
Word01 kappa(const MultiWord& v, int r);

// Inverse map; throws std::invalid_argument unless path is an r-Dyck word.
MultiWord kappa_inv(const Word01& path, int r);

// ---------------------------------------------------------------------------
// phi: MAJ -> INV rewriting bijection on all r-Stirling words.
//
// Recursion on the block of the smallest value (always r consecutive
// letters): strip it, recurse, and reinsert so that the INV increment of the
// insertion gap equals the MAJ increment observed when stripping.
// ---------------------------------------------------------------------------

struct PhiTrace {
  // Words from the single-value word up to the full input (input side).
  std::vector<MultiWord> maj_chain;
  // Corresponding images, aligned with maj_chain.
  std::vector<MultiWord> inv_chain;
  // Insertion gap used at each rebuild step (aligned with maj_chain[i>=1]).
  std::vector<int> gaps;
};

MultiWord phi(const MultiWord& v, int r, PhiTrace* trace = nullptr);
MultiWord phi_inv(const MultiWord& w, int r, PhiTrace* trace = nullptr);

// ---------------------------------------------------------------------------
// rho: 231-avoiding permutation -> Dyck path, via the descent sets of the
// permutation and of its inverse (each augmented with n).
// ---------------------------------------------------------------------------

// Augmented descent positions used by rho: Des(pi) + {n} ascending.
std::vector<int> rho_descents(const MultiWord& pi);
// Augmented descent positions of the inverse: Des(pi^-1) + {n} ascending.
std::vector<int> rho_inverse_descents(const MultiWord& pi);

Word01 rho(const MultiWord& pi);
MultiWord rho_inv(const Word01& d);

// ---------------------------------------------------------------------------
// Non-crossing partition -> 312-avoiding permutation chain.
//
// pi -> (minima, maxima) -> Dyck path d -> Lehmer code -> mu (132-avoiding)
// -> sigma = complement(mu^-1) (312-avoiding).
// ---------------------------------------------------------------------------

struct NcChain {
  std::vector<int> minima;   // block minima, ascending
  std::vector<int> maxima;   // block maxima, ascending
  std::vector<int> peaks;    // peak positions of d, ascending
  std::vector<int> valleys;  // valley positions of d, ascending
  Word01 dyck;               // intermediate Dyck path d
  std::vector<int> code;     // Lehmer code of mu
  MultiWord mu;              // 132-avoiding permutation
  MultiWord sigma;           // 312-avoiding permutation
};

NcChain nc_to_sigma(const NonCrossingPartition& pi);
NonCrossingPartition sigma_to_nc(const MultiWord& sigma);

// Lehmer code L_i = #{j > i : w_j < w_i} and its inverse.
std::vector<int> lehmer_code(const MultiWord& w);
MultiWord from_lehmer_code(const std::vector<int>& code);

// ---------------------------------------------------------------------------
// psi: Dyck path of size n -> symmetric Dyck path of size n-1.
//
// Strip the first up and last right step; then, scanning left to right, a
// "10" pair becomes a single half-arch 0 and a maximal prime Dyck factor is
// copied verbatim.
// ---------------------------------------------------------------------------

SymmetricPath psi(const Word01& p);
Word01 psi_inv(const SymmetricPath& s);

}  // namespace qcat
