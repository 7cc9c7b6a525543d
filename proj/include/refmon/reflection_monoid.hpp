#pragma once

// Reflection monoids M(W, B) = { g_X : g in W, X in B }, where g_X is the
// restriction of g to X. Elements are stored as (domain, representative
// unit) with the representative the least index in its coset W_X g.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "refmon/core.hpp"
#include "refmon/exactlin.hpp"
#include "refmon/inverse_monoid.hpp"
#include "refmon/pperm.hpp"
#include "refmon/systems.hpp"
#include "refmon/weyl.hpp"

namespace refmon {

class ReflectionMonoid {
 public:
  struct Element {
    Index domain;
    Index unit;
  };

  static ReflectionMonoid build(SubspaceSystem system,
                                std::size_t cap = 1'000'000) {
    return ReflectionMonoid(std::move(system), cap);
  }

  std::size_t size() const noexcept { return elems_.size(); }
  Index identity() const noexcept { return one_; }

  // g_Y h_Z = (gh)_T with T = Y cap Z g^-1
  Index mul(Index a, Index b) const {
    Element const& x = elems_[a];
    Element const& y = elems_[b];
    Index const    t = meet(x.domain, act(y.domain, group().inv(x.unit)));
    return element_of(t, group().mul(x.unit, y.unit));
  }

  // (g_X)^-1 = (g^-1)_{Xg}
  Index inv(Index a) const {
    Element const& x = elems_[a];
    return element_of(act(x.domain, x.unit), group().inv(x.unit));
  }

  Element const& element(Index a) const { return elems_.at(a); }
  Index domain(Index a) const { return elems_[a].domain; }
  Index image(Index a) const { return act(elems_[a].domain, elems_[a].unit); }
  Index unit(Index a) const { return elems_[a].unit; }

  // The element g_X.
  Index element_of(Index x, Index g) const { return canon_[x * nG_ + g]; }
  // The idempotent eps_X.
  Index epsilon(Index x) const { return element_of(x, 0); }
  Index unit_element(Index g) const { return element_of(system_.full_index(), g); }

  SubspaceSystem const& system() const noexcept { return system_; }
  FiniteGroup const& group() const noexcept { return system_.g(); }

  Index act(Index x, Index g) const { return act_[x * nG_ + g]; }
  Index meet(Index x, Index y) const { return meet_[x * nB_ + y]; }

  // Pointwise isotropy group of each subspace, as sorted element indices.
  std::vector<Index> const& isotropy(Index x) const { return iso_.at(x); }

  /// The underlying partial linear map: its domain and the images of the
  /// domain's canonical basis. Equal keys mean equal maps, also across
  /// monoids built on the same ambient space.
  std::pair<Subspace, std::vector<Vector>> restriction(Index a) const {
    Subspace const&     x = system_[elems_[a].domain];
    std::vector<Vector> img;
    for (auto const& b : x.basis()) {
      img.push_back(group().matrix(elems_[a].unit).apply(b));
    }
    return {x, std::move(img)};
  }

  std::string to_string(Index a) const {
    return "g" + std::to_string(elems_[a].unit) + "|"
           + system_[elems_[a].domain].to_string();
  }

 private:
  ReflectionMonoid(SubspaceSystem system, std::size_t cap)
      : system_(std::move(system)) {
    nG_  = group().size();
    nB_  = system_.size();
    act_  = system_.action_table();
    meet_ = system_.meet_table();
    canon_.assign(nB_ * nG_, kNoIndex);
    iso_.resize(nB_);
    for (Index x = 0; x < nB_; ++x) {
      for (Index g = 0; g < nG_; ++g) {
        bool fixes = true;
        for (auto const& b : system_[x].basis()) {
          if (group().matrix(g).apply(b) != b) {
            fixes = false;
            break;
          }
        }
        if (fixes) {
          iso_[x].push_back(g);
        }
      }
      for (Index g = 0; g < nG_; ++g) {
        if (canon_[x * nG_ + g] != kNoIndex) {
          continue;
        }
        // g_X = h_X iff h in W_X g.
        auto const id = static_cast<Index>(elems_.size());
        for (Index k : iso_[x]) {
          canon_[x * nG_ + group().mul(k, g)] = id;
        }
        elems_.push_back({x, g});
        if (elems_.size() > cap) {
          throw Error(ErrorKind::cap_exceeded, "reflection monoid order");
        }
      }
    }
    one_ = epsilon(system_.full_index());
  }

  SubspaceSystem       system_;
  std::size_t          nG_ = 0, nB_ = 0;
  std::vector<Index>   act_, meet_, canon_;
  std::vector<std::vector<Index>> iso_;
  std::vector<Element> elems_;
  Index                one_ = 0;
};

// Sum over X of [W : W_X].
inline BigInt order_by_isotropy(SubspaceSystem const& s) {
  BigInt total = 0;
  for (auto const& x : s.subspaces()) {
    total += s.g().size() / pointwise_isotropy_order(x, s.g());
  }
  return total;
}

// |W| sum over orbit representatives of n_X / |W_X|.
inline BigInt order_by_orbits(SubspaceSystem const& s) {
  Rational sum = 0;
  for (auto const& o : orbit_decomposition(s)) {
    sum += Rational(o.members.size()) / Rational(o.isotropy);
  }
  return to_integer(sum * Rational(s.g().size()));
}

struct GreenByDomains {
  GreenClasses classes;
  bool         matches_generic = false;
};

/// Green's relations read off from domains and images: R by domain, L by
/// image, H both, D (and J) by the orbit of the domain.
inline GreenByDomains green_relations(ReflectionMonoid const& m) {
  std::size_t const  n = m.size();
  std::vector<Index> rk(n), lk(n), dk(n);
  std::vector<std::pair<Index, Index>> hk(n);
  std::vector<Index> orbit_of(m.system().size());
  for (auto const& o : orbit_decomposition(m.system())) {
    for (Index x : o.members) {
      orbit_of[x] = o.representative;
    }
  }
  for (Index a = 0; a < n; ++a) {
    rk[a] = m.domain(a);
    lk[a] = m.image(a);
    hk[a] = {rk[a], lk[a]};
    dk[a] = orbit_of[rk[a]];
  }
  GreenByDomains out;
  auto& c = out.classes;
  c.r     = classes_by_key(rk, &c.num_r);
  c.l     = classes_by_key(lk, &c.num_l);
  c.h     = classes_by_key(hk, &c.num_h);
  c.d     = classes_by_key(dk, &c.num_d);
  c.j     = c.d;
  c.num_j = c.num_d;
  GreenClasses const g = green_classes(m);
  out.matches_generic = same_partition(c.r, g.r) && same_partition(c.l, g.l)
                        && same_partition(c.h, g.h)
                        && same_partition(c.d, g.d)
                        && same_partition(c.j, g.j);
  return out;
}

struct IdentityWitness {
  bool                                 holds = true;
  std::optional<std::pair<Index, Index>> failure;  // (alpha, Y)
};

// alpha^-1 eps_Y alpha = eps_{(Y cap X) alpha} with X the domain of alpha.
inline IdentityWitness conjugation_identity_check(ReflectionMonoid const& m) {
  IdentityWitness w;
  for (Index a = 0; a < m.size(); ++a) {
    Index const x  = m.domain(a);
    Index const ai = m.inv(a);
    for (Index y = 0; y < m.system().size(); ++y) {
      Index const lhs = m.mul(m.mul(ai, m.epsilon(y)), a);
      Index const rhs = m.epsilon(m.act(m.meet(y, x), m.unit(a)));
      if (lhs != rhs) {
        w.holds   = false;
        w.failure = std::make_pair(a, y);
        return w;
      }
    }
  }
  return w;
}

// eps_Y eps_Z = eps_{Y cap Z} for all Y, Z.
inline bool idempotent_products_hold(ReflectionMonoid const& m) {
  for (Index y = 0; y < m.system().size(); ++y) {
    for (Index z = 0; z < m.system().size(); ++z) {
      if (m.mul(m.epsilon(y), m.epsilon(z)) != m.epsilon(m.meet(y, z))) {
        return false;
      }
    }
  }
  return true;
}

struct StructureReport {
  bool idempotents_are_epsilons = false;  // E(M) = { eps_X }
  bool inverse_rule             = false;  // (g_X)^-1 = (g^-1)_{Xg}
  bool domains_and_images       = false;  // {dom} = {im} = B
  bool units_are_group          = false;
  bool nonunits_subsemigroup    = false;
};

inline StructureReport structure_report(ReflectionMonoid const& m) {
  StructureReport r;
  std::set<Index> eps;
  for (Index x = 0; x < m.system().size(); ++x) {
    eps.insert(m.epsilon(x));
  }
  auto const e = idempotents(m);
  r.idempotents_are_epsilons
      = std::set<Index>(e.begin(), e.end()) == eps
        && eps.size() == m.system().size();

  r.inverse_rule = true;
  std::set<Index> doms, ims;
  for (Index a = 0; a < m.size(); ++a) {
    Index const ai = m.inv(a);
    if (m.domain(ai) != m.image(a) || m.image(ai) != m.domain(a)
        || ai != m.element_of(m.image(a), m.group().inv(m.unit(a)))) {
      r.inverse_rule = false;
    }
    doms.insert(m.domain(a));
    ims.insert(m.image(a));
  }
  r.domains_and_images = doms.size() == m.system().size() && doms == ims;

  auto const u = units(m);
  r.units_are_group = u.size() == m.group().size();
  for (Index g = 0; g < m.group().size() && r.units_are_group; ++g) {
    r.units_are_group = std::binary_search(u.begin(), u.end(),
                                           m.unit_element(g));
  }

  std::vector<bool> is_unit(m.size(), false);
  for (Index a : u) {
    is_unit[a] = true;
  }
  r.nonunits_subsemigroup = true;
  for (Index a = 0; a < m.size() && r.nonunits_subsemigroup; ++a) {
    if (is_unit[a]) {
      continue;
    }
    for (Index b = 0; b < m.size(); ++b) {
      if (!is_unit[b] && is_unit[m.mul(a, b)]) {
        r.nonunits_subsemigroup = false;
        break;
      }
    }
  }
  return r;
}

/// The monoid <E, G> of restrictions of automorphisms in G to principal
/// ideals of E, as partial maps on the points of E. `automorphisms` need
/// only generate G.
inline EnumeratedMonoid<PartialMap> from_semilattice(
    FiniteSemilattice const& e,
    std::vector<std::vector<Index>> const& automorphisms) {
  std::size_t const       n = e.size();
  std::vector<PartialMap> gens;
  for (auto const& p : automorphisms) {
    if (!e.is_automorphism(p)) {
      throw Error(ErrorKind::action_error,
                  "group element is not a semilattice automorphism");
    }
    gens.emplace_back(n, std::vector<int>(p.begin(), p.end()));
  }
  auto const group = generate_submonoid(gens, PartialMap::identity(n));
  std::vector<PartialMap> elems;
  for (Index x = 0; x < n; ++x) {
    auto const ideal = e.ideal(x);
    for (auto const& g : group) {
      std::vector<int> img(n, -1);
      for (Index y : ideal) {
        img[y] = g[y];
      }
      elems.emplace_back(n, std::move(img));
    }
  }
  return EnumeratedMonoid<PartialMap>(std::move(elems),
                                      PartialMap::identity(n));
}

// The semilattice (B, cap) of a system, numbered as the system.
inline FiniteSemilattice system_semilattice(ReflectionMonoid const& m) {
  std::size_t const  n = m.system().size();
  std::vector<Index> meet(n * n);
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      meet[x * n + y] = m.meet(x, y);
    }
  }
  return FiniteSemilattice(n, std::move(meet));
}

// theta_g : X -> Xg as a partial map on the system's indices.
inline PartialMap theta(ReflectionMonoid const& m, Index g) {
  std::size_t const n = m.system().size();
  std::vector<int>  img(n);
  for (Index x = 0; x < n; ++x) {
    img[x] = static_cast<int>(m.act(x, g));
  }
  return PartialMap(n, std::move(img));
}

// The coordinates i with x_i in a coordinate subspace.
inline PointSet coordinate_support(Subspace const& x) {
  PointSet y;
  for (std::size_t i = 0; i < x.ambient_dim(); ++i) {
    if (x.contains(exactlin::unit_vector(x.ambient_dim(), i))) {
      y.push_back(i);
    }
  }
  if (y.size() != x.dim()) {
    throw Error(ErrorKind::invalid_argument, "not a coordinate subspace");
  }
  return y;
}

/// g_<Y> -> (g phi)_Y from a type A Boolean monoid onto I_n. Returns the
/// image index of every element in `target`.
inline std::vector<Index> boolean_iso_to_partial_perms(
    ReflectionMonoid const& m, EnumeratedMonoid<PartialMap> const& target) {
  auto t = m.system().type();
  if (m.system().kind() != SystemKind::boolean || !t
      || t->family != Family::A) {
    throw Error(ErrorKind::unsupported, "needs a type A Boolean monoid");
  }
  std::vector<Index> phi;
  for (Index a = 0; a < m.size(); ++a) {
    PointSet const    y = coordinate_support(m.system()[m.domain(a)]);
    SignedPerm const& g = m.group().perm(m.unit(a));
    std::vector<int>  img(g.n(), -1);
    for (auto i : y) {
      img[i] = g.sigma[i];
    }
    phi.push_back(target.find(PartialMap(g.n(), std::move(img))).value());
  }
  return phi;
}

// The same for type B onto J_n, through signed permutations.
inline std::vector<Index> boolean_iso_to_signed_partial_perms(
    ReflectionMonoid const& m,
    EnumeratedMonoid<SignedPartialMap> const& target) {
  auto t = m.system().type();
  if (m.system().kind() != SystemKind::boolean || !t
      || t->family != Family::B) {
    throw Error(ErrorKind::unsupported, "needs a type B Boolean monoid");
  }
  std::vector<Index> phi;
  for (Index a = 0; a < m.size(); ++a) {
    PointSet const    y = coordinate_support(m.system()[m.domain(a)]);
    SignedPerm const& g = m.group().perm(m.unit(a));
    auto const        full = g.as_signed_map();
    std::vector<int>  img(g.n(), 0);
    for (auto i : y) {
      img[i] = full(static_cast<int>(i) + 1);
    }
    phi.push_back(
        target.find(SignedPartialMap::from_signed(g.n(), img)).value());
  }
  return phi;
}

// sigma_{i,Y}: the transposition (i, i+1) on Y, undefined off Y (0-based i).
inline PartialMap sigma_iy(std::size_t n, std::size_t i, PointSet const& y) {
  std::vector<int> img(n, -1);
  for (auto k : y) {
    img[k] = static_cast<int>(k == i ? i + 1 : k == i + 1 ? i : k);
  }
  return PartialMap(n, std::move(img));
}

// tau_{i,Y}: (i, -i) on Y u -Y.
inline SignedPartialMap tau_iy(std::size_t n, std::size_t i,
                               PointSet const& y) {
  std::vector<int> img(n, 0);
  for (auto k : y) {
    img[k] = (k == i ? -1 : 1) * static_cast<int>(k + 1);
  }
  return SignedPartialMap::from_signed(n, img);
}

// mu_{i,Y}: (i, i+1)(-i, -(i+1)) on Y u -Y.
inline SignedPartialMap mu_iy(std::size_t n, std::size_t i,
                              PointSet const& y) {
  std::vector<int> img(n, 0);
  for (auto k : y) {
    std::size_t const t = k == i ? i + 1 : k == i + 1 ? i : k;
    img[k]              = static_cast<int>(t + 1);
  }
  return SignedPartialMap::from_signed(n, img);
}

inline std::vector<PointSet> all_subsets(std::size_t n) {
  std::vector<PointSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    PointSet s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) {
        s.push_back(i);
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

inline bool contains_point(PointSet const& y, std::size_t i) {
  return std::binary_search(y.begin(), y.end(), i);
}

inline std::vector<PartialMap> partial_transpositions(std::size_t n) {
  std::vector<PartialMap> g;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (auto const& y : all_subsets(n)) {
      if (contains_point(y, i) && contains_point(y, i + 1)) {
        g.push_back(sigma_iy(n, i, y));
      }
    }
  }
  return g;
}

inline std::vector<SignedPartialMap> signed_generators(std::size_t n) {
  std::vector<SignedPartialMap> g;
  for (auto const& y : all_subsets(n)) {
    for (std::size_t i = 0; i < n; ++i) {
      if (contains_point(y, i)) {
        g.push_back(tau_iy(n, i, y));
      }
      if (i + 1 < n && contains_point(y, i) && contains_point(y, i + 1)) {
        g.push_back(mu_iy(n, i, y));
      }
    }
  }
  return g;
}

// The non-units as partial linear maps.
inline std::set<std::pair<Subspace, std::vector<Vector>>> nonunit_maps(
    ReflectionMonoid const& m) {
  std::set<std::pair<Subspace, std::vector<Vector>>> out;
  for (Index a = 0; a < m.size(); ++a) {
    if (!m.system()[m.domain(a)].is_full()) {
      out.insert(m.restriction(a));
    }
  }
  return out;
}

// Differing rank profiles rule out an isomorphism of reflection monoids.
inline bool rank_profiles_differ(SubspaceSystem const& a,
                                 SubspaceSystem const& b) {
  return a.rank_counts() != b.rank_counts();
}

}  // namespace refmon
