#pragma once

// Subspace systems for Weyl groups: Boolean systems, intersection lattices
// of reflection arrangements, and their combinatorial parametrizations by
// set partitions (type A) and triples (Delta, Gamma, Lambda) (types B, D).

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "refmon/combinatorics.hpp"
#include "refmon/core.hpp"
#include "refmon/exactlin.hpp"
#include "refmon/weyl.hpp"

namespace refmon {

using PointSet = std::vector<std::size_t>;  // sorted, 0-based

inline PointSet set_difference(PointSet const& a, PointSet const& b) {
  PointSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

inline PointSet set_intersection(PointSet const& a, PointSet const& b) {
  PointSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

inline PointSet symmetric_difference(PointSet const& a, PointSet const& b) {
  PointSet out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(out));
  return out;
}

inline PointSet image(PointSet const& s, std::vector<int> const& sigma) {
  PointSet out;
  for (auto i : s) {
    out.push_back(static_cast<std::size_t>(sigma[i]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::string to_string(PointSet const& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += (i ? "," : "") + std::to_string(s[i] + 1);
  }
  return out + "}";
}

class SetPartition {
 public:
  SetPartition() = default;

  // Blocks are sorted internally and then sorted among themselves.
  explicit SetPartition(std::vector<PointSet> blocks)
      : blocks_(std::move(blocks)) {
    for (auto& b : blocks_) {
      if (b.empty()) {
        throw Error(ErrorKind::invalid_argument, "empty block");
      }
      std::sort(b.begin(), b.end());
    }
    std::sort(blocks_.begin(), blocks_.end());
    PointSet all;
    for (auto const& b : blocks_) {
      all.insert(all.end(), b.begin(), b.end());
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
      throw Error(ErrorKind::invalid_argument, "blocks overlap");
    }
  }

  static SetPartition singletons(PointSet const& ground) {
    std::vector<PointSet> b;
    for (auto i : ground) {
      b.push_back({i});
    }
    return SetPartition(std::move(b));
  }

  std::vector<PointSet> const& blocks() const noexcept { return blocks_; }
  std::size_t num_blocks() const noexcept { return blocks_.size(); }

  PointSet ground() const {
    PointSet all;
    for (auto const& b : blocks_) {
      all.insert(all.end(), b.begin(), b.end());
    }
    std::sort(all.begin(), all.end());
    return all;
  }

  IntPartition shape() const {
    IntPartition l;
    for (auto const& b : blocks_) {
      l.push_back(static_cast<unsigned>(b.size()));
    }
    std::sort(l.rbegin(), l.rend());
    return l;
  }

  // sum over blocks of (size - 1)
  std::size_t rank() const {
    std::size_t r = 0;
    for (auto const& b : blocks_) {
      r += b.size() - 1;
    }
    return r;
  }

  SetPartition image(std::vector<int> const& sigma) const {
    std::vector<PointSet> b;
    for (auto const& blk : blocks_) {
      b.push_back(refmon::image(blk, sigma));
    }
    return SetPartition(std::move(b));
  }

  // Every block of *this lies inside a block of other.
  bool refines(SetPartition const& other) const {
    for (auto const& b : blocks_) {
      bool inside = false;
      for (auto const& c : other.blocks_) {
        if (std::includes(c.begin(), c.end(), b.begin(), b.end())) {
          inside = true;
          break;
        }
      }
      if (!inside) {
        return false;
      }
    }
    return true;
  }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      s += (i ? "," : "") + refmon::to_string(blocks_[i]);
    }
    return s + "}";
  }

  friend bool operator==(SetPartition const&, SetPartition const&) = default;
  friend auto operator<=>(SetPartition const&, SetPartition const&) = default;

 private:
  std::vector<PointSet> blocks_;
};

// All set partitions of the given ground set, via restricted growth strings.
inline std::vector<SetPartition> set_partitions(PointSet const& ground) {
  std::vector<SetPartition>   out;
  std::vector<std::size_t>    block_of(ground.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, std::size_t used) -> void {
    if (i == ground.size()) {
      std::vector<PointSet> b(used);
      for (std::size_t k = 0; k < ground.size(); ++k) {
        b[block_of[k]].push_back(ground[k]);
      }
      out.emplace_back(std::move(b));
      return;
    }
    for (std::size_t blk = 0; blk <= used; ++blk) {
      block_of[i] = blk;
      self(self, i + 1, std::max(used, blk + 1));
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

inline PointSet range_set(std::size_t n) {
  PointSet s(n);
  for (std::size_t i = 0; i < n; ++i) {
    s[i] = i;
  }
  return s;
}

// The join of two partitions of the same ground set in the refinement order.
inline SetPartition partition_join(SetPartition const& a,
                                   SetPartition const& b) {
  PointSet const           g = a.ground();
  std::map<std::size_t, std::size_t> parent;
  for (auto i : g) {
    parent[i] = i;
  }
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      x = parent[x] = parent[parent[x]];
    }
    return x;
  };
  for (auto const* p : {&a, &b}) {
    for (auto const& blk : p->blocks()) {
      for (auto i : blk) {
        parent[find(i)] = find(blk.front());
      }
    }
  }
  std::map<std::size_t, PointSet> blocks;
  for (auto i : g) {
    blocks[find(i)].push_back(i);
  }
  std::vector<PointSet> out;
  for (auto& [r, blk] : blocks) {
    out.push_back(std::move(blk));
  }
  return SetPartition(std::move(out));
}

/// A triple (Delta, Gamma, Lambda): Delta a subset of {0..n-1}, Lambda a
/// partition of J = complement of Delta, Gamma a subset of J. Within each
/// block the subspace fixes only the pair {Gamma_i, Lambda_i - Gamma_i}, so
/// the canonical form keeps the lexicographically smaller of the two.
struct BTriple {
  std::size_t  n = 0;
  PointSet     delta;
  PointSet     gamma;
  SetPartition lambda;

  static BTriple make(std::size_t n, PointSet delta, PointSet gamma,
                      SetPartition lambda) {
    std::sort(delta.begin(), delta.end());
    std::sort(gamma.begin(), gamma.end());
    BTriple t{n, std::move(delta), std::move(gamma), std::move(lambda)};
    PointSet const j = set_difference(range_set(n), t.delta);
    if (t.lambda.ground() != j) {
      throw Error(ErrorKind::invalid_argument,
                  "Lambda must partition the complement of Delta");
    }
    if (!std::includes(j.begin(), j.end(), t.gamma.begin(), t.gamma.end())) {
      throw Error(ErrorKind::invalid_argument, "Gamma must lie in J");
    }
    t.canonicalize();
    return t;
  }

  PointSet j_set() const { return set_difference(range_set(n), delta); }

  std::vector<std::size_t> mu() const {
    std::vector<std::size_t> m;
    for (auto const& b : lambda.blocks()) {
      m.push_back(set_intersection(gamma, b).size());
    }
    return m;
  }

  std::size_t rank() const { return delta.size() + lambda.rank(); }

  std::string to_string() const {
    return "(" + refmon::to_string(delta) + "," + refmon::to_string(gamma)
           + "," + lambda.to_string() + ")";
  }

  friend bool operator==(BTriple const&, BTriple const&) = default;
  friend auto operator<=>(BTriple const&, BTriple const&) = default;

 private:
  void canonicalize() {
    PointSet g;
    for (auto const& b : lambda.blocks()) {
      PointSet gi = set_intersection(gamma, b);
      PointSet co = set_difference(b, gi);
      PointSet const& keep = std::min(gi, co);
      g.insert(g.end(), keep.begin(), keep.end());
    }
    std::sort(g.begin(), g.end());
    gamma = std::move(g);
  }
};

inline Subspace subspace_from_normals(std::size_t n,
                                      std::vector<Vector> normals) {
  if (normals.empty()) {
    return Subspace::full(n);
  }
  return Subspace::span(n, std::move(normals)).perp();
}

// X(Lambda) = { x : x_i = x_j whenever i, j share a block }
inline Subspace partition_subspace(SetPartition const& l, std::size_t n) {
  std::vector<Vector> normals;
  for (auto const& b : l.blocks()) {
    for (std::size_t k = 1; k < b.size(); ++k) {
      Vector v(n, Rational(0));
      v.at(b[0]) = 1;
      v.at(b[k]) = -1;
      normals.push_back(std::move(v));
    }
  }
  return subspace_from_normals(n, std::move(normals));
}

/// X(Delta, Gamma, Lambda): x_i = 0 for i in Delta and, within each block,
/// e_i x_i = e_j x_j where e_i = +1 for i in Gamma and -1 otherwise.
inline Subspace btriple_subspace(BTriple const& t, Family family) {
  if (family == Family::D && t.delta.size() == 1) {
    throw Error(ErrorKind::invalid_argument,
                "type D triples need |Delta| != 1");
  }
  if (family != Family::B && family != Family::D) {
    throw Error(ErrorKind::invalid_argument, "triples are for types B and D");
  }
  std::size_t const   n = t.n;
  std::vector<Vector> normals;
  for (auto i : t.delta) {
    normals.push_back(exactlin::unit_vector(n, i));
  }
  auto sign = [&](std::size_t i) {
    return std::binary_search(t.gamma.begin(), t.gamma.end(), i) ? 1 : -1;
  };
  for (auto const& b : t.lambda.blocks()) {
    for (std::size_t k = 1; k < b.size(); ++k) {
      Vector v(n, Rational(0));
      v[b[0]] = sign(b[0]);
      v[b[k]] = -sign(b[k]);
      normals.push_back(std::move(v));
    }
  }
  return subspace_from_normals(n, std::move(normals));
}

// Every canonical triple on n points; type D omits |Delta| = 1.
inline std::vector<BTriple> all_btriples(std::size_t n, Family family) {
  std::set<BTriple> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    PointSet delta;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) {
        delta.push_back(i);
      }
    }
    if (family == Family::D && delta.size() == 1) {
      continue;
    }
    PointSet const j = set_difference(range_set(n), delta);
    for (auto const& l : set_partitions(j)) {
      for (std::size_t gm = 0; gm < (std::size_t{1} << j.size()); ++gm) {
        PointSet gamma;
        for (std::size_t k = 0; k < j.size(); ++k) {
          if (gm >> k & 1) {
            gamma.push_back(j[k]);
          }
        }
        out.insert(BTriple::make(n, delta, gamma, l));
      }
    }
  }
  return {out.begin(), out.end()};
}

// X(Lambda) g(sigma) = X(Lambda sigma)
inline SetPartition act(SetPartition const& l, SignedPerm const& g) {
  return l.image(g.sigma);
}

/// X(D, G, L) g = X(D s, (T_J ^ G) s, L s) with T read on the source side.
inline BTriple act(BTriple const& t, SignedPerm const& g) {
  std::vector<bool> const src = g.source_flips();
  PointSet                tj;
  for (auto i : t.j_set()) {
    if (src[i]) {
      tj.push_back(i);
    }
  }
  return BTriple::make(t.n, image(t.delta, g.sigma),
                       image(symmetric_difference(tj, t.gamma), g.sigma),
                       t.lambda.image(g.sigma));
}

enum class SystemKind {
  boolean,
  arrangement_a,
  arrangement_b,
  arrangement_d,
  arrangement_g2,
  generic
};

inline bool is_arrangement(SystemKind k) {
  return k == SystemKind::arrangement_a || k == SystemKind::arrangement_b
         || k == SystemKind::arrangement_d || k == SystemKind::arrangement_g2;
}

/// A system B for a finite matrix group: contains V and is closed under the
/// group action and under intersection. Subspaces are kept sorted, so a
/// subspace is identified with its position.
class SubspaceSystem {
 public:
  SubspaceSystem(GroupPtr group, std::vector<Subspace> subspaces,
                 SystemKind kind, std::optional<WeylType> type = std::nullopt)
      : group_(std::move(group)),
        subs_(std::move(subspaces)),
        kind_(kind),
        type_(type) {
    std::sort(subs_.begin(), subs_.end());
    subs_.erase(std::unique(subs_.begin(), subs_.end()), subs_.end());
    std::size_t const d = group_->dim();
    for (auto const& s : subs_) {
      if (s.ambient_dim() != d) {
        throw Error(ErrorKind::ambient_mismatch, "system subspace");
      }
    }
    if (!find(Subspace::full(d))) {
      throw Error(ErrorKind::system_violation, "system must contain V");
    }
    std::size_t const k = group_->num_generators();
    gen_act_.resize(subs_.size() * k);
    for (Index x = 0; x < subs_.size(); ++x) {
      for (std::size_t s = 0; s < k; ++s) {
        auto y = find(exactlin::act(subs_[x], group_->generator(s)));
        if (!y) {
          throw Error(ErrorKind::system_violation,
                      "family is not invariant under the group");
        }
        gen_act_[x * k + s] = *y;
      }
    }
  }

  GroupPtr const& group() const noexcept { return group_; }
  FiniteGroup const& g() const noexcept { return *group_; }
  std::vector<Subspace> const& subspaces() const noexcept { return subs_; }
  std::size_t size() const noexcept { return subs_.size(); }
  Subspace const& operator[](Index i) const { return subs_.at(i); }
  SystemKind kind() const noexcept { return kind_; }
  std::optional<WeylType> type() const noexcept { return type_; }
  std::size_t ambient_dim() const noexcept { return group_->dim(); }

  std::optional<Index> find(Subspace const& x) const {
    auto it = std::lower_bound(subs_.begin(), subs_.end(), x);
    if (it == subs_.end() || !(*it == x)) {
      return std::nullopt;
    }
    return static_cast<Index>(it - subs_.begin());
  }

  Index index_of(Subspace const& x) const {
    auto i = find(x);
    if (!i) {
      throw Error(ErrorKind::system_violation,
                  "subspace not in system: " + x.to_string());
    }
    return *i;
  }

  Index full_index() const { return index_of(Subspace::full(ambient_dim())); }

  // The image of subspace x under generator s.
  Index act_generator(Index x, std::size_t s) const {
    return gen_act_[x * group_->num_generators() + s];
  }

  // act[x * |G| + g] = index of X g, for every group element.
  std::vector<Index> action_table() const {
    std::size_t const  n = group_->size();
    std::vector<Index> t(subs_.size() * n);
    for (Index x = 0; x < subs_.size(); ++x) {
      t[x * n] = x;
      for (Index g : group_->bfs_order()) {
        if (g != 0) {
          t[x * n + g] = act_generator(t[x * n + group_->parent(g)],
                                       group_->parent_generator(g));
        }
      }
    }
    return t;
  }

  // meet[x * size + y] = index of X cap Y
  std::vector<Index> meet_table() const {
    std::size_t const  n = subs_.size();
    std::vector<Index> m(n * n);
    for (Index x = 0; x < n; ++x) {
      m[x * n + x] = x;
      for (Index y = x + 1; y < n; ++y) {
        Index const z = index_of(exactlin::intersect(subs_[x], subs_[y]));
        m[x * n + y]  = z;
        m[y * n + x]  = z;
      }
    }
    return m;
  }

  bool satisfies_axioms() const {
    return exactlin::satisfies_system_axioms(subs_, group_->matrices(),
                                             ambient_dim());
  }

  // Number of subspaces of each codimension.
  std::vector<std::size_t> rank_counts() const {
    std::vector<std::size_t> c(ambient_dim() + 1, 0);
    for (auto const& s : subs_) {
      ++c[s.codim()];
    }
    while (c.size() > 1 && c.back() == 0) {
      c.pop_back();
    }
    return c;
  }

 private:
  GroupPtr                group_;
  std::vector<Subspace>   subs_;
  SystemKind              kind_;
  std::optional<WeylType> type_;
  std::vector<Index>      gen_act_;
};

// The coordinate subspaces <Y> = span{x_i : i in Y}.
inline std::vector<Subspace> coordinate_subspaces(std::size_t n) {
  std::vector<Subspace> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Vector> basis;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) {
        basis.push_back(exactlin::unit_vector(n, i));
      }
    }
    out.push_back(Subspace::span(n, std::move(basis)));
  }
  return out;
}

inline Subspace coordinate_subspace(std::size_t n, PointSet const& y) {
  std::vector<Vector> basis;
  for (auto i : y) {
    basis.push_back(exactlin::unit_vector(n, i));
  }
  return Subspace::span(n, std::move(basis));
}

inline SubspaceSystem boolean_system(WeylType t) {
  if (!is_classical(t.family)) {
    throw Error(ErrorKind::unsupported,
                "Boolean systems are built for types A, B and D");
  }
  auto g = build_group(t);
  return SubspaceSystem(g, coordinate_subspaces(t.coordinates()),
                        SystemKind::boolean, t);
}

inline std::vector<Subspace> reflecting_hyperplanes(WeylType t) {
  std::vector<Subspace> h;
  for (auto const& v : positive_roots(t)) {
    h.push_back(Subspace::hyperplane(v));
  }
  return h;
}

inline SubspaceSystem generated_system(
    GroupPtr group, std::vector<Subspace> const& seeds,
    SystemKind kind = SystemKind::generic,
    std::optional<WeylType> type = std::nullopt,
    std::size_t cap = exactlin::kDefaultClosureCap) {
  std::vector<RationalMatrix> gens;
  for (std::size_t s = 0; s < group->num_generators(); ++s) {
    gens.push_back(group->generator(s));
  }
  auto subs = exactlin::system_closure(seeds, gens, group->dim(), cap);
  return SubspaceSystem(std::move(group), std::move(subs), kind, type);
}

inline SystemKind arrangement_kind(Family f) {
  switch (f) {
    case Family::A: return SystemKind::arrangement_a;
    case Family::B: return SystemKind::arrangement_b;
    case Family::D: return SystemKind::arrangement_d;
    case Family::G2: return SystemKind::arrangement_g2;
    default: break;
  }
  throw Error(ErrorKind::unsupported,
              "no explicit arrangement for this family");
}

// The intersection lattice of the reflection arrangement, with V.
inline SubspaceSystem arrangement_system(
    WeylType t, std::size_t cap = exactlin::kDefaultClosureCap) {
  SystemKind const k = arrangement_kind(t.family);
  return generated_system(build_group(t), reflecting_hyperplanes(t), k, t,
                          cap);
}

// All intersections of members of the hyperplane family, with V; computed
// without the group as a second route to the intersection lattice.
inline std::vector<Subspace> intersection_lattice(
    std::vector<Subspace> const& hyperplanes, std::size_t ambient) {
  std::set<Subspace> all{Subspace::full(ambient)};
  std::vector<Subspace> frontier{Subspace::full(ambient)};
  while (!frontier.empty()) {
    std::vector<Subspace> next;
    for (auto const& x : frontier) {
      for (auto const& h : hyperplanes) {
        Subspace y = exactlin::intersect(x, h);
        if (all.insert(y).second) {
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  return {all.begin(), all.end()};
}

inline std::size_t pointwise_isotropy_order(Subspace const& x,
                                            FiniteGroup const& g) {
  std::size_t count = 0;
  for (Index a = 0; a < g.size(); ++a) {
    bool fixes = true;
    for (auto const& b : x.basis()) {
      if (g.matrix(a).apply(b) != b) {
        fixes = false;
        break;
      }
    }
    count += fixes;
  }
  return count;
}

// Closed forms for the pointwise isotropy of a subspace of class (m, lambda):
// type A prod lambda_i!, type B 2^m m! prod lambda_i!, type D
// |W(D_m)| prod lambda_i!.
inline BigInt pointwise_isotropy_closed_form(Family f, unsigned m,
                                             IntPartition const& l) {
  BigInt const pf = product_of_factorials(l);
  switch (f) {
    case Family::A: return pf;
    case Family::B: return pow2(m) * factorial(m) * pf;
    case Family::D: return weyl_order({Family::D, m}) * pf;
    default: break;
  }
  throw Error(ErrorKind::unsupported, "closed form for types A, B, D only");
}

/// The formula 2^{m+p} m! prod delta_{mu_i lambda_i}.
inline BigInt triple_stabilizer_order(BTriple const& t) {
  auto const m  = static_cast<unsigned>(t.delta.size());
  auto const p  = static_cast<unsigned>(t.lambda.num_blocks());
  BigInt     r  = pow2(m + p) * factorial(m);
  auto const mu = t.mu();
  for (std::size_t i = 0; i < p; ++i) {
    r *= delta_mn(static_cast<unsigned>(mu[i]),
                  static_cast<unsigned>(t.lambda.blocks()[i].size()));
  }
  return r;
}

/// Counts g(sigma, T) with Delta sigma = Delta, Lambda_i sigma = Lambda_i
/// and (T_i ^ Gamma_i) sigma in {Gamma_i, Lambda_i - Gamma_i}, T read on the
/// source side. With d_only, only elements with |T| even are counted.
inline std::size_t triple_stabilizer_count(BTriple const& t,
                                           FiniteGroup const& g,
                                           bool d_only = false) {
  if (!g.has_signed_perms()) {
    throw Error(ErrorKind::unsupported, "needs a signed permutation group");
  }
  std::size_t count = 0;
  for (Index a = 0; a < g.size(); ++a) {
    SignedPerm const& p = g.perm(a);
    if (d_only && p.flip_count() % 2 != 0) {
      continue;
    }
    if (image(t.delta, p.sigma) != t.delta) {
      continue;
    }
    std::vector<bool> const src = p.source_flips();
    bool                    ok  = true;
    for (auto const& b : t.lambda.blocks()) {
      if (image(b, p.sigma) != b) {
        ok = false;
        break;
      }
      PointSet ti;
      for (auto i : b) {
        if (src[i]) {
          ti.push_back(i);
        }
      }
      PointSet const gi  = set_intersection(t.gamma, b);
      PointSet const img = image(symmetric_difference(ti, gi), p.sigma);
      if (img != gi && img != set_difference(b, gi)) {
        ok = false;
        break;
      }
    }
    count += ok;
  }
  return count;
}

// Counts of rank r subspaces from the Stirling-number table.
inline BigInt stirling_rank_count(Family f, unsigned n, unsigned r) {
  if (r > n) {
    return 0;
  }
  unsigned const k = n - r;
  if (f == Family::A) {
    return stirling2(n, k);
  }
  BigInt total = 0;
  for (unsigned i = k; i <= n; ++i) {
    if (f == Family::D && i + 1 == n) {
      continue;
    }
    total += pow2(i - k) * binomial(n, i) * stirling2(i, k);
  }
  return total;
}

struct Orbit {
  std::vector<Index>    members;
  Index                 representative = 0;
  std::string           label;
  std::optional<BigInt> predicted_size;
  std::size_t           isotropy = 0;  // pointwise, at the representative
};

// Recovers the partition or triple parametrizing each subspace of an
// arrangement system of type A, B or D.
class TripleIndex {
 public:
  explicit TripleIndex(SubspaceSystem const& s) {
    auto t = s.type();
    if (!t || !is_arrangement(s.kind())
        || s.kind() == SystemKind::arrangement_g2) {
      return;
    }
    std::size_t const n = t->coordinates();
    if (t->family == Family::A) {
      for (auto const& l : set_partitions(range_set(n))) {
        parts_.emplace(s.index_of(partition_subspace(l, n)), l);
      }
    } else {
      for (auto const& tr : all_btriples(n, t->family)) {
        triples_.emplace(s.index_of(btriple_subspace(tr, t->family)), tr);
      }
    }
  }

  std::optional<SetPartition> partition(Index x) const {
    auto it = parts_.find(x);
    return it == parts_.end() ? std::nullopt
                              : std::optional<SetPartition>(it->second);
  }

  std::optional<BTriple> triple(Index x) const {
    auto it = triples_.find(x);
    return it == triples_.end() ? std::nullopt
                                : std::optional<BTriple>(it->second);
  }

 private:
  std::map<Index, SetPartition> parts_;
  std::map<Index, BTriple>      triples_;
};

/// Orbits of the group on the system, found by closure under generators.
/// Arrangement systems of types A, B, D and Boolean systems get shape
/// labels and the predicted orbit sizes.
inline std::vector<Orbit> orbit_decomposition(SubspaceSystem const& s) {
  std::vector<Orbit> orbits;
  std::vector<bool>  seen(s.size(), false);
  for (Index x = 0; x < s.size(); ++x) {
    if (seen[x]) {
      continue;
    }
    Orbit o;
    o.representative = x;
    std::vector<Index> todo{x};
    seen[x] = true;
    while (!todo.empty()) {
      Index y = todo.back();
      todo.pop_back();
      o.members.push_back(y);
      for (std::size_t g = 0; g < s.g().num_generators(); ++g) {
        Index z = s.act_generator(y, g);
        if (!seen[z]) {
          seen[z] = true;
          todo.push_back(z);
        }
      }
    }
    std::sort(o.members.begin(), o.members.end());
    o.isotropy = pointwise_isotropy_order(s[x], s.g());
    orbits.push_back(std::move(o));
  }

  auto t = s.type();
  if (!t) {
    return orbits;
  }
  unsigned const n = t->coordinates();
  if (s.kind() == SystemKind::boolean) {
    for (auto& o : orbits) {
      auto const k     = static_cast<unsigned>(s[o.representative].codim());
      o.label          = "k=" + std::to_string(k);
      o.predicted_size = binomial(n, k);
    }
    return orbits;
  }
  if (!is_arrangement(s.kind()) || s.kind() == SystemKind::arrangement_g2) {
    return orbits;
  }
  TripleIndex const idx(s);
  for (auto& o : orbits) {
    if (t->family == Family::A) {
      auto const         l  = idx.partition(o.representative).value();
      IntPartition const sh = l.shape();
      o.label               = to_string(sh);
      o.predicted_size      = factorial(n) / b_lambda(sh);
      continue;
    }
    BTriple const      tr = idx.triple(o.representative).value();
    IntPartition const sh = tr.lambda.shape();
    auto const         m  = static_cast<unsigned>(tr.delta.size());
    auto const         j  = n - m;
    auto const         p  = static_cast<unsigned>(sh.size());
    o.label = "m=" + std::to_string(m) + " " + to_string(sh);
    BigInt size = pow2(j - p) * binomial(n, j) * factorial(j) / b_lambda(sh);
    if (t->family == Family::D && m == 0 && all_parts_even(sh)) {
      size = pow2(n - p - 1) * factorial(n) / b_lambda(sh);
      o.label += tr.gamma.size() % 2 == 0 ? " |G| even" : " |G| odd";
    }
    o.predicted_size = size;
  }
  return orbits;
}

// The symmetric group generated by s_{e1-e2} and s_{e2-e3} inside the
// rational G2 model, with the system of the six root lines, V and 0.
inline GroupPtr hexagon_group() {
  Vector const a{Rational(1), Rational(-1), Rational(0)};
  Vector const b{Rational(0), Rational(1), Rational(-1)};
  return FiniteGroup::generate(
      3, {RationalMatrix::reflection(a), RationalMatrix::reflection(b)});
}

inline SubspaceSystem hexagon_system() {
  std::vector<Subspace> lines;
  for (auto const& r : positive_roots({Family::G2, 2})) {
    lines.push_back(Subspace::span(3, {r}));
  }
  return generated_system(hexagon_group(), lines);
}

}  // namespace refmon
