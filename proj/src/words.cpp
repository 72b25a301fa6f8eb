#include "qcat/words.hpp"

#include <algorithm>
#include <sstream>

namespace qcat {

Word01 parse_word(const std::string& text) {
  Word01 w;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '0') {
      w.push_back(0);
    } else if (c == '1') {
      w.push_back(1);
    } else if (c == '.') {
      continue;
    } else {
      throw ParseError("invalid character '" + std::string(1, c) + "' at position " +
                       std::to_string(i + 1) + " in binary word");
    }
  }
  return w;
}

std::string format_word(const Word01& w) {
  std::string s;
  s.reserve(w.size());
  for (uint8_t b : w) s += (b ? '1' : '0');
  return s;
}

MultiWord parse_multiword(const std::string& text) {
  MultiWord w;
  if (text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t pos = 0;
        const int v = std::stoi(item, &pos);
        if (pos != item.size() || v <= 0) throw std::invalid_argument("");
        w.push_back(v);
      } catch (const std::exception&) {
        throw ParseError("invalid entry '" + item + "' in comma-separated word");
      }
    }
    if (w.empty()) throw ParseError("empty word");
    return w;
  }
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '1' || c > '9')
      throw ParseError("invalid character '" + std::string(1, c) + "' at position " +
                       std::to_string(i + 1) +
                       "; digit-string form requires values 1..9 "
                       "(use commas for larger values)");
    w.push_back(c - '0');
  }
  if (w.empty()) throw ParseError("empty word");
  return w;
}

std::string format_multiword(const MultiWord& w) {
  const bool digits = std::all_of(w.begin(), w.end(), [](int v) { return v >= 1 && v <= 9; });
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (digits) {
      s += static_cast<char>('0' + w[i]);
    } else {
      if (i) s += ',';
      s += std::to_string(w[i]);
    }
  }
  return s;
}

template <class Seq>
static long inv_impl(const Seq& w) {
  long c = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++c;
  return c;
}

long inv(const MultiWord& w) { return inv_impl(w); }
long inv(const Word01& w) { return inv_impl(w); }

template <class Seq>
static std::set<int> descent_set_impl(const Seq& w) {
  std::set<int> d;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) d.insert(static_cast<int>(i) + 1);
  return d;
}

std::set<int> descent_set(const MultiWord& w) { return descent_set_impl(w); }
std::set<int> descent_set(const Word01& w) { return descent_set_impl(w); }

template <class Seq>
static long maj_impl(const Seq& w) {
  long s = 0;
  for (int i : descent_set_impl(w)) s += i;
  return s;
}

long maj(const MultiWord& w) { return maj_impl(w); }
long maj(const Word01& w) { return maj_impl(w); }

std::pair<long, long> alpha_beta(const Word01& w) {
  long a = 0, b = 0;
  long zeros = 0, ones = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0) {
      ++zeros;
    } else {
      ++ones;
    }
    if (i + 1 < w.size() && w[i] > w[i + 1]) {
      a += zeros;
      b += ones;
    }
  }
  return {a, b};
}

MultiWord inverse_permutation(const MultiWord& p) {
  MultiWord inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[static_cast<std::size_t>(p[i]) - 1] = static_cast<int>(i) + 1;
  return inv;
}

MultiWord complement_permutation(const MultiWord& p) {
  const int n = static_cast<int>(p.size());
  MultiWord c(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) c[i] = n + 1 - p[i];
  return c;
}

bool is_permutation(const MultiWord& p) {
  const int n = static_cast<int>(p.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : p) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

bool contains_231(const MultiWord& w) {
  // Pattern: positions i < j < k with w_k < w_i < w_j.
  const std::size_t n = w.size();
  for (std::size_t j = 1; j + 1 < n; ++j) {
    // Best "2" candidate before j: the largest value smaller than w[j].
    int best = 0;
    for (std::size_t i = 0; i < j; ++i)
      if (w[i] < w[j]) best = std::max(best, w[i]);
    if (best == 0) continue;
    for (std::size_t k = j + 1; k < n; ++k)
      if (w[k] < best) return true;
  }
  return false;
}

bool contains_312(const MultiWord& w) {
  const std::size_t n = w.size();
  for (std::size_t j = 1; j + 1 < n; ++j) {
    // "3" before position j must exceed a later "2" exceeding w[j].
    int big = 0;
    for (std::size_t i = 0; i < j; ++i) big = std::max(big, w[i]);
    if (big <= w[j]) continue;
    for (std::size_t k = j + 1; k < n; ++k)
      if (w[k] > w[j] && w[k] < big) return true;
  }
  return false;
}

bool contains_132(const MultiWord& w) {
  const std::size_t n = w.size();
  for (std::size_t j = 1; j + 1 < n; ++j) {
    int small = 0;
    bool have = false;
    for (std::size_t i = 0; i < j; ++i)
      if (w[i] < w[j]) {
        small = have ? std::min(small, w[i]) : w[i];
        have = true;
      }
    if (!have) continue;
    for (std::size_t k = j + 1; k < n; ++k)
      if (w[k] > small && w[k] < w[j]) return true;
  }
  return false;
}

}  // namespace qcat
