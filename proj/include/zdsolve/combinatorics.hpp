#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace zdsolve {

inline std::uint64_t binomial(unsigned n, unsigned r) {
  if (r > n) return 0;
  if (r > n - r) r = n - r;
  std::uint64_t b = 1;
  for (unsigned i = 1; i <= r; ++i) b = b * (n - r + i) / i;
  return b;
}

/// All r-subsets of {0..n-1}, each ascending, enumerated in lexicographic
/// order: 01, 02, ..., 0(n-1), 12, 13, ...
inline std::vector<std::vector<unsigned>> subsets_lex(unsigned n, unsigned r) {
  std::vector<std::vector<unsigned>> out;
  if (r > n) return out;
  std::vector<unsigned> cur(r);
  for (unsigned i = 0; i < r; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    // advance
    int i = static_cast<int>(r) - 1;
    while (i >= 0 && cur[i] == n - r + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (unsigned j = i + 1; j < r; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

/// Position of an ascending r-subset in the subsets_lex enumeration.
inline std::size_t subset_rank(const std::vector<unsigned>& s, unsigned n) {
  std::size_t rank = 0;
  unsigned r = static_cast<unsigned>(s.size());
  unsigned prev = 0;
  for (unsigned i = 0; i < r; ++i) {
    for (unsigned v = prev; v < s[i]; ++v)
      rank += binomial(n - v - 1, r - i - 1);
    prev = s[i] + 1;
  }
  return rank;
}

}  // namespace zdsolve
