#pragma once

// Weyl groups as finite matrix groups over Q. Classical types are carried
// by signed permutations, G2 by a rational model in Q^3.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "refmon/core.hpp"
#include "refmon/exactlin.hpp"
#include "refmon/pperm.hpp"

namespace refmon {

using exactlin::RationalMatrix;
using exactlin::Subspace;
using exactlin::Vector;

enum class Family { A, B, D, G2, F4, E6, E7, E8 };

inline char const* to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::D: return "D";
    case Family::G2: return "G2";
    case Family::F4: return "F4";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
  }
  return "?";
}

inline Family parse_family(std::string const& s) {
  static std::map<std::string, Family> const names{
      {"A", Family::A},   {"B", Family::B},   {"D", Family::D},
      {"G2", Family::G2}, {"F4", Family::F4}, {"E6", Family::E6},
      {"E7", Family::E7}, {"E8", Family::E8}};
  auto it = names.find(s);
  if (it == names.end()) {
    throw Error(ErrorKind::invalid_argument, "unknown family '" + s + "'");
  }
  return it->second;
}

inline bool is_classical(Family f) {
  return f == Family::A || f == Family::B || f == Family::D;
}

struct WeylType {
  Family   family = Family::A;
  unsigned rank   = 0;

  // The type acting on n coordinates: A_{n-1}, B_n or D_n.
  static WeylType on_coordinates(Family f, unsigned n) {
    if (f == Family::A) {
      if (n == 0) {
        throw Error(ErrorKind::invalid_argument, "type A needs n >= 1");
      }
      return {f, n - 1};
    }
    if (f == Family::B || f == Family::D) {
      return {f, n};
    }
    return exceptional(f);
  }

  static WeylType exceptional(Family f) {
    switch (f) {
      case Family::G2: return {f, 2};
      case Family::F4: return {f, 4};
      case Family::E6: return {f, 6};
      case Family::E7: return {f, 7};
      case Family::E8: return {f, 8};
      default: break;
    }
    throw Error(ErrorKind::invalid_argument, "not an exceptional family");
  }

  // Ambient dimension of the realization used here.
  unsigned coordinates() const {
    switch (family) {
      case Family::A: return rank + 1;
      case Family::B:
      case Family::D: return rank;
      case Family::G2: return 3;
      default: return rank;
    }
  }

  std::string name() const {
    if (is_classical(family)) {
      return std::string(to_string(family)) + std::to_string(rank);
    }
    return to_string(family);
  }

  friend bool operator==(WeylType const&, WeylType const&) = default;
};

inline BigInt weyl_order(WeylType t) {
  switch (t.family) {
    case Family::A: return factorial(t.rank + 1);
    case Family::B: return pow2(t.rank) * factorial(t.rank);
    case Family::D:
      return t.rank <= 1 ? BigInt(1) : pow2(t.rank - 1) * factorial(t.rank);
    case Family::G2: return 12;
    case Family::F4: return 1152;
    case Family::E6: return 51840;
    case Family::E7: return 2903040;
    case Family::E8: return 696729600;
  }
  return 0;
}

/// Signed permutation (sigma, T): x_i -> -x_{sigma(i)} when sigma(i) is in
/// T, and x_i -> x_{sigma(i)} otherwise. T records flips on the target side,
/// so that (s,X)(t,Y) = (st, Xt ^ Y) with maps composed left to right.
struct SignedPerm {
  std::vector<int>  sigma;  // 0-based images
  std::vector<bool> flips;  // indexed by target coordinate

  static SignedPerm identity(std::size_t n) {
    SignedPerm p;
    p.sigma.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      p.sigma[i] = static_cast<int>(i);
    }
    p.flips.assign(n, false);
    return p;
  }

  // 0-based transposition of i and j with the given target flips.
  static SignedPerm transposition(std::size_t n, std::size_t i, std::size_t j,
                                  std::vector<std::size_t> const& t = {}) {
    SignedPerm p = identity(n);
    std::swap(p.sigma[i], p.sigma[j]);
    for (auto k : t) {
      p.flips.at(k) = true;
    }
    return p;
  }

  std::size_t n() const noexcept { return sigma.size(); }

  std::size_t flip_count() const {
    return static_cast<std::size_t>(std::count(flips.begin(), flips.end(),
                                               true));
  }

  // The flips read on the source side: { i : sigma(i) in T }.
  std::vector<bool> source_flips() const {
    std::vector<bool> s(n());
    for (std::size_t i = 0; i < n(); ++i) {
      s[i] = flips[static_cast<std::size_t>(sigma[i])];
    }
    return s;
  }

  RationalMatrix matrix() const {
    RationalMatrix m(n());
    for (std::size_t i = 0; i < n(); ++i) {
      auto const j = static_cast<std::size_t>(sigma[i]);
      m(i, j)      = flips[j] ? -1 : 1;
    }
    return m;
  }

  SignedPartialMap as_signed_map() const {
    std::vector<int> img(n());
    for (std::size_t i = 0; i < n(); ++i) {
      int const t = sigma[i] + 1;
      img[i]      = flips[static_cast<std::size_t>(sigma[i])] ? -t : t;
    }
    return SignedPartialMap::from_signed(n(), img);
  }

  PartialMap as_permutation() const {
    return PartialMap(n(), sigma);
  }

  friend bool operator==(SignedPerm const&, SignedPerm const&) = default;
  friend auto operator<=>(SignedPerm const&, SignedPerm const&) = default;
};

inline SignedPerm operator*(SignedPerm const& a, SignedPerm const& b) {
  if (a.n() != b.n()) {
    throw Error(ErrorKind::size_mismatch, "signed permutation product");
  }
  SignedPerm c;
  c.sigma.resize(a.n());
  c.flips = b.flips;
  for (std::size_t i = 0; i < a.n(); ++i) {
    c.sigma[i] = b.sigma[static_cast<std::size_t>(a.sigma[i])];
    if (a.flips[i]) {
      auto const t = static_cast<std::size_t>(b.sigma[i]);
      c.flips[t]   = !c.flips[t];
    }
  }
  return c;
}

inline SignedPerm inverse(SignedPerm const& a) {
  SignedPerm c;
  c.sigma.resize(a.n());
  c.flips.assign(a.n(), false);
  for (std::size_t i = 0; i < a.n(); ++i) {
    auto const j = static_cast<std::size_t>(a.sigma[i]);
    c.sigma[j]   = static_cast<int>(i);
    c.flips[i]   = a.flips[j];
  }
  return c;
}

struct Reflection {
  Vector                    root;
  RationalMatrix            matrix;
  std::optional<SignedPerm> perm;
};

/// A finite group of invertible rational matrices, fully enumerated.
///
/// Element 0 is the identity. Each non-identity element g is recorded as
/// parent[g] * generator, which gives a word for every element and lets
/// the multiplication table be filled from the generator table alone.
class FiniteGroup {
 public:
  static std::shared_ptr<FiniteGroup const> generate(
      std::size_t dim, std::vector<RationalMatrix> const& gens,
      std::vector<SignedPerm> const& gen_perms = {},
      std::size_t cap = 100'000) {
    if (!gen_perms.empty() && gen_perms.size() != gens.size()) {
      throw Error(ErrorKind::size_mismatch, "one signed perm per generator");
    }
    auto g   = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->dim_  = dim;
    g->gens_ = gens;
    bool const with_perms = !gen_perms.empty() || gens.empty();
    for (auto const& m : gens) {
      if (m.dim() != dim || !m.is_invertible()) {
        throw Error(ErrorKind::singular_matrix, "bad group generator");
      }
    }
    g->add(RationalMatrix::identity(dim), kNoIndex, kNoIndex);
    if (with_perms) {
      g->perms_.push_back(SignedPerm::identity(dim));
    }
    std::size_t const k = gens.size();
    for (Index x = 0; x < g->mats_.size(); ++x) {
      for (std::size_t s = 0; s < k; ++s) {
        RationalMatrix y   = g->mats_[x] * gens[s];
        auto           it  = g->index_.find(y);
        Index          idx = 0;
        if (it == g->index_.end()) {
          idx = g->add(std::move(y), x, static_cast<Index>(s));
          if (with_perms) {
            g->perms_.push_back(g->perms_[x] * gen_perms[s]);
          }
          if (g->mats_.size() > cap) {
            throw Error(ErrorKind::cap_exceeded, "group enumeration");
          }
        } else {
          idx = it->second;
        }
        g->rmul_.push_back(idx);
      }
    }
    g->fill_tables();
    return g;
  }

  std::size_t size() const noexcept { return mats_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  Index identity() const noexcept { return 0; }
  Index mul(Index a, Index b) const { return mult_[a * size() + b]; }
  Index inv(Index a) const { return inv_[a]; }

  RationalMatrix const& matrix(Index a) const { return mats_.at(a); }
  std::vector<RationalMatrix> const& matrices() const noexcept { return mats_; }
  bool has_signed_perms() const noexcept { return !perms_.empty(); }
  SignedPerm const& perm(Index a) const { return perms_.at(a); }

  std::size_t num_generators() const noexcept { return gens_.size(); }
  RationalMatrix const& generator(std::size_t s) const { return gens_[s]; }
  Index parent(Index a) const { return parent_[a]; }
  Index parent_generator(Index a) const { return via_[a]; }
  // a * generator s
  Index times_generator(Index a, std::size_t s) const {
    return rmul_[a * gens_.size() + s];
  }

  std::optional<Index> find(RationalMatrix const& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  // Elements in breadth-first order: parents precede children.
  std::vector<Index> const& bfs_order() const noexcept { return order_; }

 private:
  FiniteGroup() = default;

  Index add(RationalMatrix m, Index parent, Index via) {
    auto const idx = static_cast<Index>(mats_.size());
    index_.emplace(m, idx);
    mats_.push_back(std::move(m));
    parent_.push_back(parent);
    via_.push_back(via);
    order_.push_back(idx);
    return idx;
  }

  void fill_tables() {
    std::size_t const n = size();
    mult_.assign(n * n, kNoIndex);
    inv_.assign(n, kNoIndex);
    for (Index a = 0; a < n; ++a) {
      mult_[a * n] = a;
      for (Index b : order_) {
        if (b == 0) {
          continue;
        }
        mult_[a * n + b] = times_generator(mult_[a * n + parent_[b]], via_[b]);
      }
    }
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        if (mult_[a * n + b] == 0) {
          inv_[a] = b;
          break;
        }
      }
    }
  }

  std::size_t                     dim_ = 0;
  std::vector<RationalMatrix>     gens_;
  std::vector<RationalMatrix>     mats_;
  std::vector<SignedPerm>         perms_;
  std::map<RationalMatrix, Index> index_;
  std::vector<Index>              parent_, via_, rmul_, order_;
  std::vector<Index>              mult_, inv_;
};

using GroupPtr = std::shared_ptr<FiniteGroup const>;

inline void require_realized(WeylType t) {
  if (!is_classical(t.family) && t.family != Family::G2) {
    throw Error(ErrorKind::unsupported,
                t.name() + " has no explicit realization");
  }
  if (t.family == Family::B && t.rank == 0) {
    throw Error(ErrorKind::unsupported, "B0 has no coordinates");
  }
  if (t.family == Family::D && t.rank == 0) {
    throw Error(ErrorKind::unsupported, "D0 has no coordinates");
  }
}

// One positive root per +- pair.
inline std::vector<Vector> positive_roots(WeylType t) {
  require_realized(t);
  std::size_t const   n = t.coordinates();
  std::vector<Vector> roots;
  auto e = [&](std::vector<std::pair<std::size_t, int>> const& terms) {
    Vector v(n, Rational(0));
    for (auto [i, c] : terms) {
      v[i] += c;
    }
    return v;
  };
  if (t.family == Family::G2) {
    roots = {e({{0, 1}, {1, -1}}),          e({{1, 1}, {2, -1}}),
             e({{0, 1}, {2, -1}}),          e({{0, 2}, {1, -1}, {2, -1}}),
             e({{1, 2}, {0, -1}, {2, -1}}), e({{2, 2}, {0, -1}, {1, -1}})};
    return roots;
  }
  if (t.family == Family::B) {
    for (std::size_t i = 0; i < n; ++i) {
      roots.push_back(e({{i, 1}}));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      roots.push_back(e({{i, 1}, {j, -1}}));
      if (t.family != Family::A) {
        roots.push_back(e({{i, 1}, {j, 1}}));
      }
    }
  }
  return roots;
}

inline std::vector<Vector> root_system(WeylType t) {
  std::vector<Vector> roots;
  for (auto const& v : positive_roots(t)) {
    roots.push_back(v);
    Vector w = v;
    for (auto& x : w) {
      x = -x;
    }
    roots.push_back(std::move(w));
  }
  return roots;
}

inline std::vector<Reflection> reflections(WeylType t) {
  std::vector<Reflection> out;
  std::size_t const       n = t.coordinates();
  for (auto const& v : positive_roots(t)) {
    Reflection r{v, RationalMatrix::reflection(v), std::nullopt};
    if (t.family != Family::G2) {
      std::vector<std::size_t> support;
      for (std::size_t i = 0; i < n; ++i) {
        if (!v[i].is_zero()) {
          support.push_back(i);
        }
      }
      if (support.size() == 1) {
        SignedPerm p = SignedPerm::identity(n);
        p.flips[support[0]] = true;
        r.perm              = p;
      } else {
        bool const plus = v[support[1]] > 0;
        r.perm = SignedPerm::transposition(
            n, support[0], support[1],
            plus ? std::vector<std::size_t>{support[0], support[1]}
                 : std::vector<std::size_t>{});
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

inline GroupPtr build_group(WeylType t) {
  require_realized(t);
  std::vector<RationalMatrix> mats;
  std::vector<SignedPerm>     perms;
  for (auto const& r : reflections(t)) {
    mats.push_back(r.matrix);
    if (r.perm) {
      perms.push_back(*r.perm);
    }
  }
  return FiniteGroup::generate(t.coordinates(), mats, perms);
}

// The stored classification: does W(t) contain -1 in its reflection
// representation? A_n only for n = 1, D_n for even n, E6 not, the rest yes.
inline bool minus_one_table(WeylType t) {
  switch (t.family) {
    case Family::A: return t.rank == 1;
    case Family::B: return t.rank >= 1;
    case Family::D: return t.rank % 2 == 0;
    case Family::G2:
    case Family::F4:
    case Family::E7:
    case Family::E8: return true;
    case Family::E6: return false;
  }
  return false;
}

// Brute force: some element negates every root.
inline bool has_minus_one(FiniteGroup const& g, std::vector<Vector> const& roots) {
  for (Index a = 0; a < g.size(); ++a) {
    bool ok = true;
    for (auto const& r : roots) {
      Vector img = g.matrix(a).apply(r);
      for (std::size_t i = 0; i < r.size() && ok; ++i) {
        ok = img[i] == -r[i];
      }
      if (!ok) {
        break;
      }
    }
    if (ok) {
      return true;
    }
  }
  return false;
}

struct MinusOneVerdict {
  bool value       = false;
  bool brute_force = false;  // false when read from the stored table
};

inline MinusOneVerdict minus_one_type(WeylType t) {
  bool const realized = is_classical(t.family) || t.family == Family::G2;
  if (realized && t.rank > 0) {
    return {has_minus_one(*build_group(t), root_system(t)), true};
  }
  if (realized) {
    return {false, true};
  }
  return {minus_one_table(t), false};
}

// True iff every component in the list is of (-1)-type.
inline bool is_minus_one_type(std::vector<WeylType> const& types) {
  return std::all_of(types.begin(), types.end(),
                     [](WeylType t) { return minus_one_type(t).value; });
}

}  // namespace refmon
