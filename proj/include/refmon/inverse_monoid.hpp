#pragma once

// Generic machinery for finite inverse monoids whose elements are indexed
// 0..size()-1: structural checks, Green's relations, the congruence mu,
// Munn semigroups and representations, and factorizability.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "refmon/core.hpp"
#include "refmon/pperm.hpp"

namespace refmon {

template <class M>
concept IndexedMonoid = requires(M const& m, Index a, Index b) {
  { m.size() } -> std::convertible_to<std::size_t>;
  { m.mul(a, b) } -> std::convertible_to<Index>;
  { m.inv(a) } -> std::convertible_to<Index>;
  { m.identity() } -> std::convertible_to<Index>;
};

/// A finite monoid given by an explicit element list and Cayley table.
///
/// T must provide compose(T,T), inverse(T) and a total order.
template <class T>
class EnumeratedMonoid {
 public:
  EnumeratedMonoid() = default;

  // Elements must be closed under compose and inverse and contain `one`.
  EnumeratedMonoid(std::vector<T> elements, T const& one)
      : elems_(std::move(elements)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    std::size_t const n = elems_.size();
    table_.resize(n * n);
    inv_.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        table_[a * n + b] = checked_find(compose(elems_[a], elems_[b]));
      }
      inv_[a] = checked_find(inverse(elems_[a]));
    }
    one_ = checked_find(one);
  }

  std::size_t size() const noexcept { return elems_.size(); }
  Index mul(Index a, Index b) const { return table_[a * elems_.size() + b]; }
  Index inv(Index a) const { return inv_[a]; }
  Index identity() const noexcept { return one_; }

  T const& element(Index a) const { return elems_.at(a); }
  std::vector<T> const& elements() const noexcept { return elems_; }

  std::optional<Index> find(T const& x) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
    if (it == elems_.end() || !(*it == x)) {
      return std::nullopt;
    }
    return static_cast<Index>(it - elems_.begin());
  }

 private:
  Index checked_find(T const& x) const {
    auto i = find(x);
    if (!i) {
      throw Error(ErrorKind::invalid_argument,
                  "element list is not closed under the operations");
    }
    return *i;
  }

  std::vector<T>     elems_;
  std::vector<Index> table_;
  std::vector<Index> inv_;
  Index              one_ = 0;
};

// The submonoid generated by `gens` (and their inverses when requested).
template <class T>
std::vector<T> generate_submonoid(std::vector<T> const& gens, T const& one,
                                  bool close_under_inverse = true,
                                  std::size_t cap = 1'000'000) {
  std::set<T>    seen{one};
  std::vector<T> todo{one};
  std::vector<T> all_gens = gens;
  if (close_under_inverse) {
    for (auto const& g : gens) {
      all_gens.push_back(inverse(g));
    }
  }
  while (!todo.empty()) {
    T x = std::move(todo.back());
    todo.pop_back();
    for (auto const& g : all_gens) {
      T y = compose(x, g);
      if (seen.insert(y).second) {
        if (seen.size() > cap) {
          throw Error(ErrorKind::cap_exceeded, "submonoid closure");
        }
        todo.push_back(std::move(y));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

template <IndexedMonoid M>
std::vector<Index> idempotents(M const& m) {
  std::vector<Index> e;
  for (Index a = 0; a < m.size(); ++a) {
    if (m.mul(a, a) == a) {
      e.push_back(a);
    }
  }
  return e;
}

template <IndexedMonoid M>
std::vector<Index> units(M const& m) {
  std::vector<Index> u;
  for (Index a = 0; a < m.size(); ++a) {
    if (m.mul(a, m.inv(a)) == m.identity()) {
      u.push_back(a);
    }
  }
  return u;
}

struct AxiomReport {
  bool        ok = true;
  std::string failure;
  bool        exhaustive_associativity = false;
};

/// Checks the inverse monoid axioms.
///
/// Associativity is checked on every triple when size^3 is at most
/// `exhaustive_limit`, and on `samples` seeded random triples otherwise.
/// Uniqueness of inverses follows from regularity plus commuting
/// idempotents, which is what is checked.
template <IndexedMonoid M>
AxiomReport check_inverse_monoid(M const& m,
                                 std::uint64_t exhaustive_limit = 30'000'000,
                                 std::size_t samples = 200'000,
                                 std::uint64_t seed = 7) {
  AxiomReport r;
  auto fail = [&](std::string what) {
    r.ok      = false;
    r.failure = std::move(what);
    return r;
  };
  std::uint64_t const n = m.size();
  Index const         one = m.identity();
  for (Index a = 0; a < n; ++a) {
    if (m.mul(a, one) != a || m.mul(one, a) != a) {
      return fail("unit law fails at " + std::to_string(a));
    }
    Index const ai = m.inv(a);
    if (m.mul(m.mul(a, ai), a) != a || m.mul(m.mul(ai, a), ai) != ai) {
      return fail("a a' a = a fails at " + std::to_string(a));
    }
    if (m.inv(ai) != a) {
      return fail("inverse is not an involution at " + std::to_string(a));
    }
  }
  auto const e = idempotents(m);
  for (Index x : e) {
    for (Index y : e) {
      if (m.mul(x, y) != m.mul(y, x)) {
        return fail("idempotents do not commute");
      }
    }
  }
  if (n * n * n <= exhaustive_limit) {
    r.exhaustive_associativity = true;
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        Index const ab = m.mul(a, b);
        for (Index c = 0; c < n; ++c) {
          if (m.mul(ab, c) != m.mul(a, m.mul(b, c))) {
            return fail("associativity fails");
          }
        }
      }
    }
  } else {
    std::mt19937_64                         rng(seed);
    std::uniform_int_distribution<Index>    pick(0, static_cast<Index>(n - 1));
    for (std::size_t s = 0; s < samples; ++s) {
      Index const a = pick(rng), b = pick(rng), c = pick(rng);
      if (m.mul(m.mul(a, b), c) != m.mul(a, m.mul(b, c))) {
        return fail("associativity fails on a sampled triple");
      }
    }
  }
  return r;
}

// Renumbers arbitrary keys as class ids 0,1,2,... in order of first
// appearance.
template <class Key>
std::vector<Index> classes_by_key(std::vector<Key> const& keys,
                                  std::size_t* count = nullptr) {
  std::map<Key, Index> ids;
  std::vector<Index>   out;
  out.reserve(keys.size());
  for (auto const& k : keys) {
    auto [it, fresh] = ids.try_emplace(k, static_cast<Index>(ids.size()));
    out.push_back(it->second);
  }
  if (count) {
    *count = ids.size();
  }
  return out;
}

struct GreenClasses {
  std::vector<Index> r, l, h, d, j;
  std::size_t        num_r = 0, num_l = 0, num_h = 0, num_d = 0, num_j = 0;
};

template <IndexedMonoid M>
GreenClasses green_classes(M const& m) {
  std::size_t const  n = m.size();
  std::vector<Index> rk(n), lk(n);
  std::vector<std::pair<Index, Index>> hk(n);
  for (Index a = 0; a < n; ++a) {
    rk[a] = m.mul(a, m.inv(a));
    lk[a] = m.mul(m.inv(a), a);
    hk[a] = {rk[a], lk[a]};
  }
  GreenClasses g;
  g.r = classes_by_key(rk, &g.num_r);
  g.l = classes_by_key(lk, &g.num_l);
  g.h = classes_by_key(hk, &g.num_h);

  // D: the idempotents aa' and a'a lie in one class; union-find over them.
  std::vector<Index> parent(n);
  std::iota(parent.begin(), parent.end(), Index{0});
  auto find = [&](Index x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x         = parent[x];
    }
    return x;
  };
  for (Index a = 0; a < n; ++a) {
    Index const x = find(rk[a]), y = find(lk[a]);
    if (x != y) {
      parent[std::max(x, y)] = std::min(x, y);
    }
  }
  std::vector<Index> dk(n);
  for (Index a = 0; a < n; ++a) {
    dk[a] = find(rk[a]);
  }
  g.d = classes_by_key(dk, &g.num_d);

  // J: a and b are J-related iff the principal ideals MaM and MbM have the
  // same idempotents. E(MfM) = { aa' : a'a <= f }.
  auto const e = idempotents(m);
  std::vector<Index> e_pos(n, kNoIndex);
  for (std::size_t i = 0; i < e.size(); ++i) {
    e_pos[e[i]] = static_cast<Index>(i);
  }
  std::vector<std::vector<bool>> ideal(e.size(),
                                       std::vector<bool>(e.size(), false));
  for (Index a = 0; a < n; ++a) {
    Index const src = lk[a];
    Index const tgt = e_pos[rk[a]];
    for (std::size_t fi = 0; fi < e.size(); ++fi) {
      if (m.mul(src, e[fi]) == src) {
        ideal[fi][tgt] = true;
      }
    }
  }
  std::vector<std::vector<bool>> jk(n);
  for (Index a = 0; a < n; ++a) {
    jk[a] = ideal[e_pos[rk[a]]];
  }
  g.j = classes_by_key(jk, &g.num_j);
  return g;
}

// True when two class-id vectors describe the same partition.
inline bool same_partition(std::vector<Index> const& a,
                           std::vector<Index> const& b) {
  if (a.size() != b.size()) {
    return false;
  }
  std::map<Index, Index> ab, ba;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto [x, fx] = ab.try_emplace(a[i], b[i]);
    auto [y, fy] = ba.try_emplace(b[i], a[i]);
    if (x->second != b[i] || y->second != a[i]) {
      return false;
    }
  }
  return true;
}

struct MuCongruence {
  std::vector<Index>     cls;
  std::size_t            num_classes = 0;
  bool                   fundamental = true;
  std::optional<std::pair<Index, Index>> witness;
};

/// The largest idempotent-separating congruence: a mu b iff a'ea = b'eb for
/// every idempotent e. Elements are grouped by the vector of all a'ea.
template <IndexedMonoid M>
MuCongruence mu_congruence(M const& m) {
  auto const                      e = idempotents(m);
  std::vector<std::vector<Index>> sig(m.size());
  for (Index a = 0; a < m.size(); ++a) {
    sig[a].reserve(e.size());
    Index const ai = m.inv(a);
    for (Index f : e) {
      sig[a].push_back(m.mul(m.mul(ai, f), a));
    }
  }
  MuCongruence mu;
  mu.cls         = classes_by_key(sig, &mu.num_classes);
  mu.fundamental = mu.num_classes == m.size();
  if (!mu.fundamental) {
    std::vector<Index> first(mu.num_classes, kNoIndex);
    for (Index a = 0; a < m.size(); ++a) {
      Index& f = first[mu.cls[a]];
      if (f == kNoIndex) {
        f = a;
      } else {
        mu.witness = std::make_pair(f, a);
        break;
      }
    }
  }
  return mu;
}

/// A finite meet semilattice with top, elements 0..size()-1.
class FiniteSemilattice {
 public:
  FiniteSemilattice() = default;

  FiniteSemilattice(std::size_t n, std::vector<Index> meet)
      : n_(n), meet_(std::move(meet)) {
    if (meet_.size() != n * n) {
      throw Error(ErrorKind::size_mismatch, "meet table must be n*n");
    }
    top_ = kNoIndex;
    for (Index t = 0; t < n; ++t) {
      bool neutral = true;
      for (Index x = 0; x < n && neutral; ++x) {
        neutral = meet_[t * n + x] == x;
      }
      if (neutral) {
        top_ = t;
        break;
      }
    }
    if (!valid()) {
      throw Error(ErrorKind::invalid_argument, "not a semilattice with top");
    }
  }

  // From the idempotents of an indexed monoid, numbered in increasing
  // element index.
  template <IndexedMonoid M>
  static FiniteSemilattice of_idempotents(M const& m) {
    auto const         e = idempotents(m);
    std::size_t const  k = e.size();
    std::vector<Index> pos(m.size(), kNoIndex);
    for (std::size_t i = 0; i < k; ++i) {
      pos[e[i]] = static_cast<Index>(i);
    }
    std::vector<Index> meet(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        meet[i * k + j] = pos[m.mul(e[i], e[j])];
      }
    }
    return FiniteSemilattice(k, std::move(meet));
  }

  std::size_t size() const noexcept { return n_; }
  Index top() const noexcept { return top_; }
  Index meet(Index a, Index b) const { return meet_[a * n_ + b]; }
  bool leq(Index a, Index b) const { return meet(a, b) == a; }

  // The principal ideal Ee, in increasing index order.
  std::vector<Index> ideal(Index e) const {
    std::vector<Index> out;
    for (Index x = 0; x < n_; ++x) {
      if (leq(x, e)) {
        out.push_back(x);
      }
    }
    return out;
  }

  bool valid() const {
    if (top_ == kNoIndex) {
      return false;
    }
    for (Index a = 0; a < n_; ++a) {
      if (meet(a, a) != a) {
        return false;
      }
      for (Index b = 0; b < n_; ++b) {
        if (meet(a, b) != meet(b, a) || meet(a, b) >= n_) {
          return false;
        }
        for (Index c = 0; c < n_; ++c) {
          if (meet(meet(a, b), c) != meet(a, meet(b, c))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // A permutation of the elements preserving meets.
  bool is_automorphism(std::vector<Index> const& p) const {
    if (p.size() != n_) {
      return false;
    }
    std::vector<bool> hit(n_, false);
    for (Index x : p) {
      if (x >= n_ || hit[x]) {
        return false;
      }
      hit[x] = true;
    }
    for (Index a = 0; a < n_; ++a) {
      for (Index b = 0; b < n_; ++b) {
        if (p[meet(a, b)] != meet(p[a], p[b])) {
          return false;
        }
      }
    }
    return true;
  }

 private:
  std::size_t        n_ = 0;
  Index              top_ = kNoIndex;
  std::vector<Index> meet_;
};

// Semilattice isomorphism test between two finite semilattices given by a
// candidate bijection.
inline bool is_semilattice_isomorphism(FiniteSemilattice const& a,
                                       FiniteSemilattice const& b,
                                       std::vector<Index> const& phi) {
  if (a.size() != b.size() || phi.size() != a.size()) {
    return false;
  }
  std::vector<bool> hit(b.size(), false);
  for (Index x : phi) {
    if (x >= b.size() || hit[x]) {
      return false;
    }
    hit[x] = true;
  }
  for (Index x = 0; x < a.size(); ++x) {
    for (Index y = 0; y < a.size(); ++y) {
      if (phi[a.meet(x, y)] != b.meet(phi[x], phi[y])) {
        return false;
      }
    }
  }
  return true;
}

// Searches for any isomorphism a -> b by backtracking.
inline std::optional<std::vector<Index>> find_semilattice_isomorphism(
    FiniteSemilattice const& a, FiniteSemilattice const& b) {
  if (a.size() != b.size()) {
    return std::nullopt;
  }
  std::size_t const        n = a.size();
  std::vector<std::size_t> da(n), db(n);
  for (Index x = 0; x < n; ++x) {
    da[x] = a.ideal(x).size();
    db[x] = b.ideal(x).size();
  }
  std::vector<Index> phi(n, kNoIndex);
  std::vector<bool>  used(n, false);
  auto consistent = [&](Index x) {
    for (Index y = 0; y < n; ++y) {
      if (phi[y] == kNoIndex) {
        continue;
      }
      Index const m = a.meet(x, y);
      if (phi[m] != kNoIndex && phi[m] != b.meet(phi[x], phi[y])) {
        return false;
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, Index x) -> bool {
    if (x == n) {
      return true;
    }
    for (Index y = 0; y < n; ++y) {
      if (used[y] || db[y] != da[x]) {
        continue;
      }
      phi[x]  = y;
      used[y] = true;
      if (consistent(x) && self(self, x + 1)) {
        return true;
      }
      used[y] = false;
      phi[x]  = kNoIndex;
    }
    return false;
  };
  if (!rec(rec, 0)) {
    return std::nullopt;
  }
  return phi;
}

/// All semilattice isomorphisms Ee -> Ef, each as a PartialMap on the
/// points of E.
inline std::vector<PartialMap> ideal_isomorphisms(FiniteSemilattice const& s,
                                                  Index e, Index f) {
  auto const src = s.ideal(e);
  auto const tgt = s.ideal(f);
  std::vector<PartialMap> out;
  if (src.size() != tgt.size()) {
    return out;
  }
  std::size_t const k = src.size();
  std::vector<std::size_t> ds(k), dt(k);
  for (std::size_t i = 0; i < k; ++i) {
    ds[i] = s.ideal(src[i]).size();
    dt[i] = s.ideal(tgt[i]).size();
  }
  std::vector<int>  img(s.size(), -1);
  std::vector<bool> used(k, false);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == k) {
      out.emplace_back(s.size(), img);
      return;
    }
    Index const x = src[i];
    for (std::size_t t = 0; t < k; ++t) {
      if (used[t] || dt[t] != ds[i]) {
        continue;
      }
      img[x]  = static_cast<int>(tgt[t]);
      used[t] = true;
      bool ok = true;
      for (std::size_t j = 0; j <= i && ok; ++j) {
        Index const y = src[j];
        int const   m = img[s.meet(x, y)];
        if (m >= 0
            && static_cast<Index>(m)
                   != s.meet(static_cast<Index>(img[x]),
                             static_cast<Index>(img[y]))) {
          ok = false;
        }
      }
      if (ok) {
        self(self, i + 1);
      }
      used[t] = false;
      img[x]  = -1;
    }
  };
  rec(rec, 0);
  return out;
}

// The Munn semigroup T_E of all isomorphisms between principal ideals.
inline EnumeratedMonoid<PartialMap> munn_semigroup(FiniteSemilattice const& s) {
  std::vector<PartialMap> all;
  for (Index e = 0; e < s.size(); ++e) {
    for (Index f = 0; f < s.size(); ++f) {
      auto isos = ideal_isomorphisms(s, e, f);
      all.insert(all.end(), isos.begin(), isos.end());
    }
  }
  return EnumeratedMonoid<PartialMap>(std::move(all),
                                      PartialMap::identity(s.size()));
}

/// The Munn representation a -> delta_a, with delta_a the map
/// x -> a'xa on the idempotents below aa'. Maps are PartialMaps on the
/// idempotents numbered as in FiniteSemilattice::of_idempotents.
template <IndexedMonoid M>
std::vector<PartialMap> munn_representation(M const& m) {
  auto const         e = idempotents(m);
  std::vector<Index> pos(m.size(), kNoIndex);
  for (std::size_t i = 0; i < e.size(); ++i) {
    pos[e[i]] = static_cast<Index>(i);
  }
  std::vector<PartialMap> out;
  out.reserve(m.size());
  for (Index a = 0; a < m.size(); ++a) {
    Index const      ai = m.inv(a);
    Index const      r  = m.mul(a, ai);
    std::vector<int> img(e.size(), -1);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (m.mul(e[i], r) == e[i]) {
        img[i] = static_cast<int>(pos[m.mul(m.mul(ai, e[i]), a)]);
      }
    }
    out.emplace_back(e.size(), std::move(img));
  }
  return out;
}

struct Factorization {
  bool               factorizable = true;
  std::vector<Index> unit;  // unit[a] = g with (aa')g = a, kNoIndex if none
  std::optional<Index> failure;
};

template <IndexedMonoid M>
Factorization factorizable_check(M const& m) {
  auto const    g = units(m);
  Factorization f;
  f.unit.assign(m.size(), kNoIndex);
  for (Index a = 0; a < m.size(); ++a) {
    Index const e = m.mul(a, m.inv(a));
    for (Index u : g) {
      if (m.mul(e, u) == a) {
        f.unit[a] = u;
        break;
      }
    }
    if (f.unit[a] == kNoIndex && f.factorizable) {
      f.factorizable = false;
      f.failure      = a;
    }
  }
  return f;
}

/// Checks that phi (element of a -> element of b) is a bijective monoid
/// homomorphism.
template <IndexedMonoid A, IndexedMonoid B>
bool is_isomorphism(A const& a, B const& b, std::vector<Index> const& phi) {
  if (a.size() != b.size() || phi.size() != a.size()) {
    return false;
  }
  std::vector<bool> hit(b.size(), false);
  for (Index x : phi) {
    if (x >= b.size() || hit[x]) {
      return false;
    }
    hit[x] = true;
  }
  if (phi[a.identity()] != b.identity()) {
    return false;
  }
  for (Index x = 0; x < a.size(); ++x) {
    for (Index y = 0; y < a.size(); ++y) {
      if (phi[a.mul(x, y)] != b.mul(phi[x], phi[y])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace refmon
