#pragma once

// Integer partitions and the counting functions built on them.

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "refmon/core.hpp"

namespace refmon {

using IntPartition = std::vector<unsigned>;  // weakly decreasing parts

// All partitions of n in reverse lexicographic order: (n), (n-1,1), ...
inline std::vector<IntPartition> partitions(unsigned n) {
  std::vector<IntPartition> out;
  IntPartition              cur;
  auto rec = [&](auto&& self, unsigned rest, unsigned max_part) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (unsigned p = std::min(rest, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

inline std::string to_string(IntPartition const& l) {
  std::string s = "(";
  for (std::size_t i = 0; i < l.size(); ++i) {
    s += (i ? "," : "") + std::to_string(l[i]);
  }
  return s + ")";
}

// b_lambda = prod_k b_k! (k!)^{b_k}, where b_k counts the parts equal to k.
inline BigInt b_lambda(IntPartition const& l) {
  std::map<unsigned, unsigned> mult;
  for (auto p : l) {
    ++mult[p];
  }
  BigInt r = 1;
  for (auto [k, bk] : mult) {
    r *= factorial(bk);
    BigInt const fk = factorial(k);
    for (unsigned i = 0; i < bk; ++i) {
      r *= fk;
    }
  }
  return r;
}

inline BigInt product_of_factorials(IntPartition const& l) {
  BigInt r = 1;
  for (auto p : l) {
    r *= factorial(p);
  }
  return r;
}

inline BigInt stirling2(unsigned n, unsigned k) {
  std::vector<std::vector<BigInt>> s(n + 1, std::vector<BigInt>(n + 1, 0));
  s[0][0] = 1;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = 1; j <= i; ++j) {
      s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
    }
  }
  return k > n ? BigInt(0) : s[n][k];
}

// c_{mn} = sum_i C(m,i) C(n-m,i)
inline BigInt c_mn(unsigned m, unsigned n) {
  if (m > n) {
    throw Error(ErrorKind::invalid_argument, "c(m,n) needs m <= n");
  }
  BigInt r = 0;
  for (unsigned i = 0; i <= m; ++i) {
    r += binomial(m, i) * binomial(n - m, i);
  }
  return r;
}

// delta_{mn} = m! (n-m)! c_{mn}
inline BigInt delta_mn(unsigned m, unsigned n) {
  if (m > n) {
    throw Error(ErrorKind::invalid_argument, "delta(m,n) needs m <= n");
  }
  return factorial(m) * factorial(n - m) * c_mn(m, n);
}

// d_lambda = 4^p b_lambda lambda_1! ... lambda_p!
inline BigInt d_lambda(IntPartition const& l) {
  return pow2(2 * static_cast<unsigned>(l.size())) * b_lambda(l)
         * product_of_factorials(l);
}

inline bool all_parts_even(IntPartition const& l) {
  for (auto p : l) {
    if (p % 2 != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace refmon
