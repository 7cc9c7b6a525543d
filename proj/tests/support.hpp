#pragma once

#include <cstddef>
#include <vector>

#include "refmon/refmon.hpp"

namespace refmon::test {

inline EnumeratedMonoid<PartialMap> rook_monoid(std::size_t n) {
  return {all_partial_maps(n), PartialMap::identity(n)};
}

inline EnumeratedMonoid<SignedPartialMap> signed_rook_monoid(std::size_t n) {
  return {all_signed_partial_maps(n), SignedPartialMap::identity(n)};
}

// Counts injective partial functions on n points by brute force over all
// n^(n+1) assignments with an "undefined" value.
inline std::size_t count_partial_injections(std::size_t n, bool signed_maps) {
  std::size_t const values = signed_maps ? 2 * n + 1 : n + 1;
  std::vector<std::size_t> f(n, 0);
  std::size_t count = 0;
  while (true) {
    std::vector<bool> used(n, false);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (f[i] == 0) {
        continue;
      }
      std::size_t const target = (f[i] - 1) % n;
      ok = !used[target];
      used[target] = true;
    }
    count += ok;
    std::size_t k = 0;
    while (k < n && ++f[k] == values) {
      f[k++] = 0;
    }
    if (k == n) {
      break;
    }
  }
  return count;
}

inline Vector vec(std::initializer_list<int> xs) {
  Vector v;
  for (int x : xs) {
    v.emplace_back(x);
  }
  return v;
}

}  // namespace refmon::test
