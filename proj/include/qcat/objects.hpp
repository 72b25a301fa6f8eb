#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qcat/words.hpp"

namespace qcat {

// ---------------------------------------------------------------------------
// Generalized Dyck words: n up steps (0) and r*n right steps (1), every
// prefix satisfying #1 <= r * #0.  "Size" always means n.
// ---------------------------------------------------------------------------

bool is_r_dyck(const Word01& w, int r);
// Touches the bounding line exactly twice: at the two endpoints only.
bool is_prime_r_dyck(const Word01& w, int r);

// All words of size n in lexicographic order (0 < 1).
std::vector<Word01> enumerate_r_dyck(int n, int r);

// Area above the word and below the top word 0^n 1^(rn): the sum over up
// steps of the number of right steps preceding them.
long dyck_coarea(const Word01& w);

// ---------------------------------------------------------------------------
// Multiset permutations of {1^r, ..., n^r} in which any letter lying between
// two copies of j is smaller than j.
// ---------------------------------------------------------------------------

bool is_stirling(const MultiWord& w, int r);
std::vector<MultiWord> enumerate_r_stirling(int n, int r);
bool is_231_avoiding(const MultiWord& w);

// Plain permutations of [n], lexicographic.
std::vector<MultiWord> enumerate_permutations(int n);
// Permutations avoiding one of the patterns "231", "312", "132";
// 231 uses a pruned prefix search, so it scales to the CLI size cap.
std::vector<MultiWord> enumerate_avoiding(int n, const std::string& pattern);

// ---------------------------------------------------------------------------
// Non-crossing partitions of [n].
// ---------------------------------------------------------------------------

struct NonCrossingPartition {
  int n = 0;
  // Blocks sorted internally; blocks ordered by minimum element.
  std::vector<std::vector<int>> blocks;

  bool operator==(const NonCrossingPartition& o) const = default;
  int rank() const { return n - static_cast<int>(blocks.size()); }
};

// Accepts "134/2/58/67" (values <= 9) or "1,3,4/2/5,8/6,7".  Validates that
// the blocks partition [1, max] and are pairwise non-crossing; errors carry
// a crossing witness quadruple when one exists.
NonCrossingPartition parse_nc(const std::string& text);
std::string format_nc(const NonCrossingPartition& p);

// Order: lexicographic on the restricted-growth encoding of the partition.
std::vector<NonCrossingPartition> enumerate_nc(int n);

// ---------------------------------------------------------------------------
// Symmetric Dyck paths of size n, identified with the half word that
// determines them.  A path of size n with k unmatched up steps in its half
// word has half-word length 2n - k.
// ---------------------------------------------------------------------------

struct SymmetricPath {
  int n = 0;          // size
  Word01 half;        // the determining half word
  bool operator==(const SymmetricPath& o) const = default;
};

// Validity: half has n zeros, every prefix has #0 >= #1 (then the number of
// ones is n - #unmatched zeros automatically).
bool is_symmetric_half(const Word01& half, int n);
SymmetricPath make_symmetric(const Word01& half);

// Matched pairs (open, close) with both ends in the half word, by opening
// position, plus the positions of unmatched zeros ("half arches").
struct ArchDecomposition {
  std::vector<std::pair<int, int>> arches;  // 1-based positions in half
  std::vector<int> half_arches;             // 1-based opening positions
};
ArchDecomposition arch_decompose(const Word01& half);

// Full word: half followed by its reversed complement (length 2 * |half|).
Word01 symmetric_full_word(const SymmetricPath& p);

// Order: shorter half words first (more half arches first), lexicographic
// within a length.
std::vector<SymmetricPath> enumerate_symmetric(int n);

// ---------------------------------------------------------------------------
// Counting helpers (exact, for cross-checks).
// ---------------------------------------------------------------------------

long long catalan_number(int n);
long long fuss_catalan_number(int n, int r);      // (1/(rn+1)) C((r+1)n, n)
long long stirling_word_count(int n, int r);      // prod_{s=1}^{n-1} (sr + 1)

}  // namespace qcat
