#pragma once

// Closed forms for the orders of Boolean and arrangement reflection monoids,
// and the orbit-data pipeline for the exceptional types.

#include <cctype>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "refmon/combinatorics.hpp"
#include "refmon/core.hpp"
#include "refmon/weyl.hpp"

namespace refmon {

// |W(Phi_k)| for the type acting on k coordinates, with |W(A_{-1})| = 1.
inline BigInt weyl_order_on(Family f, unsigned k) {
  if (f == Family::A) {
    return factorial(k);
  }
  if (f == Family::B) {
    return pow2(k) * factorial(k);
  }
  if (f == Family::D) {
    return weyl_order({Family::D, k});
  }
  throw Error(ErrorKind::unsupported, "classical families only");
}

inline void require_classical(Family f, unsigned n) {
  if (!is_classical(f)) {
    throw Error(ErrorKind::unsupported, "classical families only");
  }
  if (n == 0) {
    throw Error(ErrorKind::invalid_argument, "n must be positive");
  }
}

// |W(Phi_n)| sum_k C(n,k) / |W(Phi_k)|
inline BigInt boolean_order(Family f, unsigned n) {
  require_classical(f, n);
  Rational sum = 0;
  for (unsigned k = 0; k <= n; ++k) {
    sum += Rational(binomial(n, k)) / Rational(weyl_order_on(f, k));
  }
  return to_integer(sum * Rational(weyl_order_on(f, n)));
}

// The specialized table: A sum C(n,k)^2 k!, B sum 2^k C(n,k)^2 k!, and for D
// 2^{n-1} n! + sum_{k=1}^{n} 2^k C(n,k)^2 k! as printed.
inline BigInt boolean_order_table(Family f, unsigned n) {
  require_classical(f, n);
  BigInt sum = 0;
  if (f == Family::D) {
    sum = pow2(n - 1) * factorial(n);
    for (unsigned k = 1; k <= n; ++k) {
      sum += pow2(k) * binomial(n, k) * binomial(n, k) * factorial(k);
    }
    return sum;
  }
  for (unsigned k = 0; k <= n; ++k) {
    BigInt t = binomial(n, k) * binomial(n, k) * factorial(k);
    sum += f == Family::B ? pow2(k) * t : t;
  }
  return sum;
}

// Type D with the units term replacing the k = n term of type B.
inline BigInt boolean_order_table_d_corrected(unsigned n) {
  require_classical(Family::D, n);
  BigInt sum = pow2(n - 1) * factorial(n);
  for (unsigned k = 0; k < n; ++k) {
    sum += pow2(k) * binomial(n, k) * binomial(n, k) * factorial(k);
  }
  return sum;
}

// (n!)^2 sum_lambda 1 / (b_lambda lambda_1! ... lambda_p!)
inline BigInt arrangement_order_A(unsigned n) {
  require_classical(Family::A, n);
  Rational sum = 0;
  for (auto const& l : partitions(n)) {
    sum += Rational(1) / Rational(b_lambda(l) * product_of_factorials(l));
  }
  BigInt const f = factorial(n);
  return to_integer(sum * Rational(f * f));
}

// 2^{2n-1} (n!)^2 sum_{m, lambda |- n-m} 1 / (4^m d_lambda), evaluated as
// printed; the value need not be an integer.
inline Rational arrangement_order_B_printed(unsigned n) {
  require_classical(Family::B, n);
  Rational sum = 0;
  for (unsigned m = 0; m <= n; ++m) {
    for (auto const& l : partitions(n - m)) {
      sum += Rational(1) / Rational(pow2(2 * m) * d_lambda(l));
    }
  }
  BigInt const f = factorial(n);
  return sum * Rational(pow2(2 * n - 1) * f * f);
}

inline unsigned epsilon_m_lambda(unsigned m, IntPartition const& l) {
  return m == 0 && all_parts_even(l) ? 1 : 2;
}

// 4^{n-1} (n!)^2 sum_{m != 1, lambda |- n-m} eps / (4^m d_lambda)
inline Rational arrangement_order_D_printed(unsigned n) {
  require_classical(Family::D, n);
  Rational sum = 0;
  for (unsigned m = 0; m <= n; ++m) {
    if (m == 1) {
      continue;
    }
    for (auto const& l : partitions(n - m)) {
      sum += Rational(epsilon_m_lambda(m, l))
             / Rational(pow2(2 * m) * d_lambda(l));
    }
  }
  BigInt const f = factorial(n);
  return sum * Rational(pow2(2 * (n - 1)) * f * f);
}

// Number of subspaces X(Delta, Gamma, Lambda) with |Delta| = m and shape
// lambda: 2^{j-p} C(n,j) j! / b_lambda, j = n - m.
inline BigInt triple_class_size(unsigned n, unsigned m, IntPartition const& l) {
  unsigned const j = n - m;
  auto const     p = static_cast<unsigned>(l.size());
  return pow2(j - p) * binomial(n, j) * factorial(j) / b_lambda(l);
}

// sum over classes (m, lambda) of class size * |W| / |W_X| with W_X the
// pointwise isotropy group.
inline BigInt arrangement_order_oracle(Family f, unsigned n) {
  require_classical(f, n);
  if (f == Family::A) {
    return arrangement_order_A(n);
  }
  BigInt const w     = weyl_order_on(f, n);
  BigInt       total = 0;
  for (unsigned m = 0; m <= n; ++m) {
    if (f == Family::D && m == 1) {
      continue;
    }
    for (auto const& l : partitions(n - m)) {
      BigInt iso = product_of_factorials(l);
      iso *= f == Family::B ? pow2(m) * factorial(m)
                            : weyl_order({Family::D, m});
      total += triple_class_size(n, m, l) * (w / iso);
    }
  }
  return total;
}

inline BigInt arrangement_order_B(unsigned n) {
  return arrangement_order_oracle(Family::B, n);
}

inline BigInt arrangement_order_D(unsigned n) {
  return arrangement_order_oracle(Family::D, n);
}

struct StabilizerFactor {
  char     letter = 'a';
  unsigned rank   = 0;
  unsigned power  = 1;

  friend bool operator==(StabilizerFactor const&, StabilizerFactor const&)
      = default;
};

struct OrbitDatum {
  BigInt                        count;
  std::vector<StabilizerFactor> stabilizer;

  BigInt stabilizer_order() const;
};

inline BigInt factor_group_order(char letter, unsigned rank) {
  switch (letter) {
    case 'a': return factorial(rank + 1);
    case 'b': return pow2(rank) * factorial(rank);
    case 'd': return rank <= 1 ? BigInt(1) : pow2(rank - 1) * factorial(rank);
    case 'e':
      if (rank >= 6 && rank <= 8) {
        return weyl_order({rank == 6 ? Family::E6
                           : rank == 7 ? Family::E7
                                       : Family::E8,
                           rank});
      }
      break;
    case 'f':
      if (rank == 4) {
        return weyl_order({Family::F4, 4});
      }
      break;
    case 'g':
      if (rank == 2) {
        return weyl_order({Family::G2, 2});
      }
      break;
    default: break;
  }
  throw Error(ErrorKind::parse_error, std::string("no Weyl group ") + letter
                                          + std::to_string(rank));
}

inline BigInt OrbitDatum::stabilizer_order() const {
  BigInt r = 1;
  for (auto const& f : stabilizer) {
    BigInt const o = factor_group_order(f.letter, f.rank);
    for (unsigned i = 0; i < f.power; ++i) {
      r *= o;
    }
  }
  return r;
}

/// Parses "1a0:3a1.3a1:1g2" into orbit data grouped by rank. Ranks are
/// separated by ':', orbits by '.'; an orbit is a count followed by factors
/// letter, rank digit, optional power digit.
inline std::vector<std::vector<OrbitDatum>> parse_orbit_data(
    std::string const& row) {
  std::vector<std::vector<OrbitDatum>> ranks;
  auto fail = [&](std::string const& what) {
    return Error(ErrorKind::parse_error, what + " in '" + row + "'");
  };
  std::size_t pos = 0;
  while (true) {
    std::size_t const   end = std::min(row.find(':', pos), row.size());
    std::string const   grp = row.substr(pos, end - pos);
    if (grp.empty()) {
      throw fail("empty rank group");
    }
    std::vector<OrbitDatum> orbits;
    std::size_t             q = 0;
    while (true) {
      std::size_t const dot = std::min(grp.find('.', q), grp.size());
      std::string const tok = grp.substr(q, dot - q);
      std::size_t       i   = 0;
      while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) {
        ++i;
      }
      if (i == 0 || i == tok.size()) {
        throw fail("malformed orbit '" + tok + "'");
      }
      OrbitDatum d;
      d.count = BigInt(tok.substr(0, i));
      while (i < tok.size()) {
        char const c = tok[i];
        if (std::string("abdefg").find(c) == std::string::npos) {
          throw fail(std::string("unknown family letter '") + c + "'");
        }
        if (i + 1 >= tok.size()
            || !std::isdigit(static_cast<unsigned char>(tok[i + 1]))) {
          throw fail("factor without rank in '" + tok + "'");
        }
        StabilizerFactor f{c, static_cast<unsigned>(tok[i + 1] - '0'), 1};
        i += 2;
        if (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) {
          f.power = static_cast<unsigned>(tok[i] - '0');
          ++i;
        }
        factor_group_order(f.letter, f.rank);
        d.stabilizer.push_back(f);
      }
      orbits.push_back(std::move(d));
      if (dot == grp.size()) {
        break;
      }
      q = dot + 1;
    }
    ranks.push_back(std::move(orbits));
    if (end == row.size()) {
      break;
    }
    pos = end + 1;
  }
  return ranks;
}

// Stored orbit data rows, one string per line.
inline std::vector<std::string> orbit_data_lines(Family f) {
  switch (f) {
    case Family::G2: return {"1a0:3a1.3a1:1g2"};
    case Family::F4:
      return {"1a0:12a1.12a1:72a12.16a2.16a2.18b2:12b3.12b3.48a1a2.48a1a2:"
              "1f4"};
    case Family::E6:
      return {"1a0:36a1:270a12.120a2:540a13.720a1a2.270a3:1080a12a2.120a22",
              "540a1a3.216a4.45d4:360a1a22.216a1a4.36a5.27d5:1e6"};
    case Family::E7:
      return {
          "1a0:63a1:945a12.336a2:315a13.3780a13.5040a1a2.1260a3:3780a14",
          "15120a12a2.3360a22.1260a1a3.7560a1a3.2016a4.315d4:5040a13a2",
          "10080a1a22.7560a12a3.5040a2a3.6048a1a4.336a5.1008a5.945a1d4",
          "378d5:5040a1a2a3.2016a2a4.1008a1a5.288a6.378a1d5.63d6.28e6:1e7"};
    case Family::E8:
      return {
          "a1a0:120a1:3780a12.1120a2:37800a13.40320a1a2.7560a3:113400a14",
          "302400a12a2.67200a22.151200a1a3.24192a4.3150d4:604800a13a2",
          "403200a1a22.453600a12a3.302400a2a3.241920a1a4.40320a5.37800a1d4",
          "7560d5:604800a12a22.604800a1a2a3.362880a12a4.151200a32.241920a2a4",
          "120960a1a5.34560a6.50400a2d4.45360a1d5.3780d6.1120e6:241920a1a2a4",
          "120960a3a4.34560a1a6.8640a7.30240a2d5.1080d7.3360a1e6.120e7:1e8"};
    default: break;
  }
  throw Error(ErrorKind::unsupported, "orbit data exists for G2, F4, E6-E8");
}

/// The full row: printed lines joined by '.', since a line break falls
/// between two orbits of one rank. The E8 row's leading "a1a0" becomes
/// "1a0" like every other row.
inline std::string orbit_data_row(Family f) {
  auto const  lines = orbit_data_lines(f);
  std::string row;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    row += (i ? "." : "") + lines[i];
  }
  if (row.rfind("a1a0:", 0) == 0) {
    row = row.substr(1);
  }
  return row;
}

inline BigInt exceptional_order(Family f) {
  BigInt const w     = weyl_order(WeylType::exceptional(f));
  BigInt       total = 0;
  for (auto const& rank : parse_orbit_data(orbit_data_row(f))) {
    for (auto const& d : rank) {
      total += d.count * to_integer(Rational(w) / Rational(d.stabilizer_order()));
    }
  }
  return total;
}

// Orbit sizes summed within each rank.
inline std::vector<BigInt> orbit_data_rank_counts(Family f) {
  std::vector<BigInt> out;
  for (auto const& rank : parse_orbit_data(orbit_data_row(f))) {
    BigInt c = 0;
    for (auto const& d : rank) {
      c += d.count;
    }
    out.push_back(c);
  }
  return out;
}

struct FormulaComparison {
  std::string formula;
  Rational    printed;
  BigInt      oracle;
  bool        equal = false;
};

inline FormulaComparison compare(std::string formula, Rational printed,
                                 BigInt oracle) {
  bool const eq = printed == Rational(oracle);
  return {std::move(formula), std::move(printed), std::move(oracle), eq};
}

// Printed closed forms against the oracle-consistent values.
inline std::vector<FormulaComparison> formula_discrepancies(unsigned max_n) {
  std::vector<FormulaComparison> out;
  for (unsigned n = 1; n <= max_n; ++n) {
    out.push_back(compare("B arrangement n=" + std::to_string(n),
                          arrangement_order_B_printed(n),
                          arrangement_order_B(n)));
    if (n >= 2) {
      out.push_back(compare("D arrangement n=" + std::to_string(n),
                            arrangement_order_D_printed(n),
                            arrangement_order_D(n)));
      out.push_back(compare("D Boolean table n=" + std::to_string(n),
                            Rational(boolean_order_table(Family::D, n)),
                            boolean_order(Family::D, n)));
    }
  }
  return out;
}

}  // namespace refmon
