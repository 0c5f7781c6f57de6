#pragma once

// Brute-force reference computations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace eulerpoly::oracle {

/// counts[k] = permutations of {1..n} with k descents.
inline std::vector<std::uint64_t> descent_counts(unsigned n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::uint64_t> counts(n, 0);
  do {
    unsigned d = 0;
    for (unsigned i = 0; i + 1 < n; ++i)
      if (perm[i] > perm[i + 1]) ++d;
    ++counts[d];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return counts;
}

/// counts[k] = set partitions of {1..n} into k blocks, by walking all
/// restricted growth strings.
inline std::vector<std::uint64_t> partition_counts(unsigned n) {
  std::vector<std::uint64_t> counts(n + 1, 0);
  if (n == 0) {
    counts[0] = 1;
    return counts;
  }
  std::vector<unsigned> a(n, 0);
  std::function<void(unsigned, unsigned)> walk = [&](unsigned i, unsigned blocks) {
    if (i == n) {
      ++counts[blocks];
      return;
    }
    for (unsigned b = 0; b <= blocks; ++b) {
      a[i] = b;
      walk(i + 1, b == blocks ? blocks + 1 : blocks);
    }
  };
  a[0] = 0;
  walk(1, 1);
  return counts;
}

}  // namespace eulerpoly::oracle
