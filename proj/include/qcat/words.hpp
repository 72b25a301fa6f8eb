#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcat {

// A word over {0,1}; 0 is an up/open step, 1 is a right/close step.
using Word01 = std::vector<uint8_t>;

// A word over positive integers (permutations and multiset permutations),
// stored one-based by value.
using MultiWord = std::vector<int>;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses "0010.11" style text; '.' separators are ignored. Throws ParseError
// naming the first offending character position (1-based).
Word01 parse_word(const std::string& text);
std::string format_word(const Word01& w);

// Multiset word, e.g. "42112334" (all values <= 9) or "4,2,11,2,3" beyond.
MultiWord parse_multiword(const std::string& text);
std::string format_multiword(const MultiWord& w);

// Number of pairs i < j with w_i > w_j.
long inv(const MultiWord& w);
long inv(const Word01& w);

// Positions i (1-based) with w_i > w_{i+1}.
std::set<int> descent_set(const MultiWord& w);
std::set<int> descent_set(const Word01& w);

// Sum of the standard descent positions.
long maj(const MultiWord& w);
long maj(const Word01& w);

// alpha = sum over descents i of #{j <= i : w_j = 0};
// beta  = sum over descents i of #{j <= i : w_j = 1}. alpha + beta = maj.
std::pair<long, long> alpha_beta(const Word01& w);

MultiWord inverse_permutation(const MultiWord& p);
// i -> n+1 - p_i
MultiWord complement_permutation(const MultiWord& p);

bool is_permutation(const MultiWord& p);

// Strict classical pattern containment for the three patterns used here.
bool contains_231(const MultiWord& w);
bool contains_312(const MultiWord& w);
bool contains_132(const MultiWord& w);

}  // namespace qcat
