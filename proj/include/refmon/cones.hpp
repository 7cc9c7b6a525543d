#pragma once

// Small rational polyhedral cones, their face lattices, and the map from
// the reflection monoid of a cone's face spans onto the monoid <E, W> of
// its face lattice.

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
#include "refmon/reflection_monoid.hpp"
#include "refmon/systems.hpp"
#include "refmon/weyl.hpp"

namespace refmon {

inline constexpr std::size_t kMaxConeRays = 8;
inline constexpr std::size_t kMaxConeDim  = 4;

class RationalCone {
 public:
  RationalCone(std::size_t dim, std::vector<Vector> rays)
      : dim_(dim), rays_(std::move(rays)) {
    for (auto const& r : rays_) {
      if (r.size() != dim_ || exactlin::is_zero(r)) {
        throw Error(ErrorKind::invalid_argument, "bad cone generator");
      }
    }
    span_       = Subspace::span(dim_, rays_);
    simplicial_ = span_.dim() == rays_.size();
  }

  std::size_t dim() const noexcept { return dim_; }
  std::vector<Vector> const& rays() const noexcept { return rays_; }
  bool simplicial() const noexcept { return simplicial_; }
  Subspace const& span() const noexcept { return span_; }

  std::optional<std::size_t> ray_index(Vector const& v) const {
    for (std::size_t i = 0; i < rays_.size(); ++i) {
      if (rays_[i] == v) {
        return i;
      }
    }
    return std::nullopt;
  }

 private:
  std::size_t         dim_;
  std::vector<Vector> rays_;
  Subspace            span_;
  bool                simplicial_ = false;
};

inline RationalCone simplex_cone(std::size_t d) {
  std::vector<Vector> rays;
  for (std::size_t i = 0; i < d; ++i) {
    rays.push_back(exactlin::unit_vector(d, i));
  }
  return RationalCone(d, std::move(rays));
}

// The cone on the square with corners (+-1, +-1, 1), rays taken in cyclic
// order around the square.
inline RationalCone square_cone() {
  auto v = [](int a, int b) {
    return Vector{Rational(a), Rational(b), Rational(1)};
  };
  return RationalCone(3, {v(1, 1), v(1, -1), v(-1, -1), v(-1, 1)});
}

struct Face {
  PointSet rays;
  Subspace span;
};

class FaceLattice {
 public:
  FaceLattice() = default;

  explicit FaceLattice(std::vector<PointSet> ray_sets, RationalCone const& c) {
    std::sort(ray_sets.begin(), ray_sets.end(),
              [](PointSet const& a, PointSet const& b) {
                return a.size() != b.size() ? a.size() < b.size() : a < b;
              });
    ray_sets.erase(std::unique(ray_sets.begin(), ray_sets.end()),
                   ray_sets.end());
    for (auto& rs : ray_sets) {
      std::vector<Vector> gens;
      for (auto i : rs) {
        gens.push_back(c.rays()[i]);
      }
      faces_.push_back({rs, Subspace::span(c.dim(), std::move(gens))});
      index_.emplace(rs, static_cast<Index>(faces_.size() - 1));
    }
    std::size_t const n = faces_.size();
    meet_.resize(n * n);
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        auto m = find(set_intersection(faces_[a].rays, faces_[b].rays));
        if (!m) {
          throw Error(ErrorKind::invalid_argument,
                      "faces not closed under intersection");
        }
        meet_[a * n + b] = *m;
      }
    }
  }

  std::size_t size() const noexcept { return faces_.size(); }
  Face const& operator[](Index i) const { return faces_.at(i); }
  std::vector<Face> const& faces() const noexcept { return faces_; }
  Index meet(Index a, Index b) const { return meet_[a * faces_.size() + b]; }
  Index bottom() const { return 0; }
  Index top() const { return static_cast<Index>(faces_.size() - 1); }

  std::optional<Index> find(PointSet const& rays) const {
    auto it = index_.find(rays);
    if (it == index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  FiniteSemilattice semilattice() const {
    return FiniteSemilattice(faces_.size(), meet_);
  }

  // The face permutation induced by a permutation of the rays.
  std::vector<Index> induced(std::vector<std::size_t> const& ray_perm) const {
    std::vector<Index> p(faces_.size());
    for (Index f = 0; f < faces_.size(); ++f) {
      PointSet img;
      for (auto r : faces_[f].rays) {
        img.push_back(ray_perm[r]);
      }
      std::sort(img.begin(), img.end());
      auto g = find(img);
      if (!g) {
        throw Error(ErrorKind::action_error, "ray permutation moves a face "
                    "off the lattice");
      }
      p[f] = *g;
    }
    return p;
  }

 private:
  std::vector<Face>           faces_;
  std::map<PointSet, Index>   index_;
  std::vector<Index>          meet_;
};

// Inward normals of the facets, each with the rays it vanishes on.
inline std::vector<std::pair<Vector, PointSet>> facets(RationalCone const& c) {
  std::size_t const d = c.dim();
  std::size_t const k = c.rays().size();
  std::vector<std::pair<Vector, PointSet>> out;
  std::set<PointSet>                       seen;
  std::vector<std::size_t>                 pick;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (pick.size() + 1 == d) {
      std::vector<Vector> gens;
      for (auto i : pick) {
        gens.push_back(c.rays()[i]);
      }
      Subspace const s = Subspace::span(d, std::move(gens));
      if (s.dim() + 1 != d) {
        return;
      }
      Vector u = s.perp().basis().front();
      int    sign = 0;
      PointSet on;
      for (std::size_t i = 0; i < k; ++i) {
        Rational const v = exactlin::dot(u, c.rays()[i]);
        if (v.is_zero()) {
          on.push_back(i);
          continue;
        }
        int const sg = v > 0 ? 1 : -1;
        if (sign == 0) {
          sign = sg;
        } else if (sign != sg) {
          return;
        }
      }
      if (sign < 0) {
        for (auto& x : u) {
          x = -x;
        }
      }
      if (seen.insert(on).second) {
        out.emplace_back(std::move(u), std::move(on));
      }
      return;
    }
    for (std::size_t i = start; i < k; ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

inline FaceLattice face_lattice(RationalCone const& c) {
  if (c.rays().size() > kMaxConeRays || c.dim() > kMaxConeDim) {
    throw Error(ErrorKind::cap_exceeded, "cone too large for face search");
  }
  if (!c.span().is_full()) {
    throw Error(ErrorKind::invalid_argument, "cone is not full-dimensional");
  }
  std::size_t const     k = c.rays().size();
  std::vector<PointSet> sets;
  if (c.simplicial()) {
    return FaceLattice(all_subsets(k), c);
  }
  std::set<PointSet> faces{range_set(k)};
  for (auto const& [u, on] : facets(c)) {
    faces.insert(on);
  }
  // close under intersection
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<PointSet> cur(faces.begin(), faces.end());
    for (auto const& a : cur) {
      for (auto const& b : cur) {
        grew |= faces.insert(set_intersection(a, b)).second;
      }
    }
  }
  if (!faces.contains(PointSet{})) {
    throw Error(ErrorKind::invalid_argument, "cone is not strongly convex");
  }
  return FaceLattice({faces.begin(), faces.end()}, c);
}

struct CompatibilityReport {
  bool                                  cone_meets_span = true;
  std::optional<Index>                  cone_meets_span_failure;
  bool                                  span_of_meet = true;
  std::optional<std::pair<Index, Index>> span_of_meet_failure;
};

/// Checks that the cone meets the span of each face in exactly that face,
/// and whether span(t1 cap t2) = span(t1) cap span(t2) for all face pairs.
inline CompatibilityReport span_face_compatibility(RationalCone const& c) {
  FaceLattice const   l = face_lattice(c);
  auto const          f = facets(c);
  CompatibilityReport r;
  for (Index i = 0; i < l.size(); ++i) {
    Face const& t = l[i];
    // A functional that is >= 0 on the cone and vanishes exactly on t
    // certifies that the cone meets span(t) inside t.
    Vector u(c.dim(), Rational(0));
    for (auto const& [normal, on] : f) {
      if (std::includes(on.begin(), on.end(), t.rays.begin(), t.rays.end())) {
        for (std::size_t k = 0; k < u.size(); ++k) {
          u[k] += normal[k];
        }
      }
    }
    if (c.simplicial()) {
      for (std::size_t k = 0; k < c.rays().size(); ++k) {
        if (!std::binary_search(t.rays.begin(), t.rays.end(), k)) {
          // dual basis functional for ray k
          std::vector<Vector> others;
          for (std::size_t o = 0; o < c.rays().size(); ++o) {
            if (o != k) {
              others.push_back(c.rays()[o]);
            }
          }
          Vector w = Subspace::span(c.dim(), others).perp().basis().front();
          if (exactlin::dot(w, c.rays()[k]) < 0) {
            for (auto& x : w) {
              x = -x;
            }
          }
          for (std::size_t q = 0; q < u.size(); ++q) {
            u[q] += w[q];
          }
        }
      }
    }
    PointSet zero, in_span;
    for (std::size_t k = 0; k < c.rays().size(); ++k) {
      if (exactlin::dot(u, c.rays()[k]).is_zero()) {
        zero.push_back(k);
      }
      if (t.span.contains(c.rays()[k])) {
        in_span.push_back(k);
      }
    }
    bool vanishes = true;
    for (auto const& b : t.span.basis()) {
      vanishes = vanishes && exactlin::dot(u, b).is_zero();
    }
    if (zero != t.rays || in_span != t.rays || !vanishes) {
      r.cone_meets_span = false;
      if (!r.cone_meets_span_failure) {
        r.cone_meets_span_failure = i;
      }
    }
  }
  for (Index a = 0; a < l.size(); ++a) {
    for (Index b = a + 1; b < l.size(); ++b) {
      if (l[l.meet(a, b)].span != exactlin::intersect(l[a].span, l[b].span)) {
        r.span_of_meet = false;
        if (!r.span_of_meet_failure) {
          r.span_of_meet_failure = std::make_pair(a, b);
        }
      }
    }
  }
  return r;
}

// The permutation of rays induced by a matrix, or nullopt if it does not
// preserve the ray set.
inline std::optional<std::vector<std::size_t>> ray_permutation(
    RationalCone const& c, RationalMatrix const& g) {
  std::vector<std::size_t> p;
  for (auto const& r : c.rays()) {
    auto i = c.ray_index(g.apply(r));
    if (!i) {
      return std::nullopt;
    }
    p.push_back(*i);
  }
  return p;
}

struct RennerModel {
  FaceLattice                  faces;
  ReflectionMonoid             monoid;   // M(W, B_c)
  EnumeratedMonoid<PartialMap> ew;       // <E, W>
  std::vector<Index>           f;        // monoid element -> ew element
  std::vector<std::vector<Index>> face_perm;  // per group element
  bool well_defined = false;
  bool homomorphism = false;
  bool surjective   = false;
  bool injective    = false;
};

// The face of the cone cut out by a subspace: the rays it contains.
inline Index face_in(FaceLattice const& l, RationalCone const& c,
                     Subspace const& x) {
  PointSet rays;
  for (std::size_t k = 0; k < c.rays().size(); ++k) {
    if (x.contains(c.rays()[k])) {
      rays.push_back(k);
    }
  }
  auto i = l.find(rays);
  if (!i) {
    throw Error(ErrorKind::invalid_argument,
                "subspace meets the cone outside the face lattice");
  }
  return *i;
}

/// Builds M(W, B_c) with B_c generated by the face spans, the monoid <E, W>
/// on the face lattice, and f : eps_X g -> e_{face(X)} g, and checks f.
inline RennerModel renner_model(RationalCone const& c, GroupPtr const& w) {
  FaceLattice l = face_lattice(c);
  std::vector<std::vector<Index>> perms;
  for (Index g = 0; g < w->size(); ++g) {
    auto p = ray_permutation(c, w->matrix(g));
    if (!p) {
      throw Error(ErrorKind::action_error, "group does not preserve the cone");
    }
    perms.push_back(l.induced(*p));
  }
  std::vector<Subspace> spans;
  for (auto const& face : l.faces()) {
    spans.push_back(face.span);
  }
  ReflectionMonoid m = ReflectionMonoid::build(generated_system(w, spans));
  auto             ew = from_semilattice(l.semilattice(), perms);
  FiniteSemilattice const e = l.semilattice();

  std::vector<Index> face_of(m.system().size());
  for (Index x = 0; x < m.system().size(); ++x) {
    face_of[x] = face_in(l, c, m.system()[x]);
  }
  auto image_of = [&](Index x, Index g) {
    std::vector<int> img(l.size(), -1);
    for (Index y : e.ideal(face_of[x])) {
      img[y] = static_cast<int>(perms[g][y]);
    }
    return ew.find(PartialMap(l.size(), std::move(img))).value();
  };

  RennerModel r{l, m, ew, {}, perms};
  r.f.resize(m.size());
  for (Index a = 0; a < m.size(); ++a) {
    r.f[a] = image_of(m.domain(a), m.unit(a));
  }
  r.well_defined = true;
  for (Index x = 0; x < m.system().size() && r.well_defined; ++x) {
    for (Index g = 0; g < w->size(); ++g) {
      if (image_of(x, g) != r.f[m.element_of(x, g)]) {
        r.well_defined = false;
        break;
      }
    }
  }
  r.homomorphism = r.f[m.identity()] == ew.identity();
  for (Index a = 0; a < m.size() && r.homomorphism; ++a) {
    for (Index b = 0; b < m.size(); ++b) {
      if (r.f[m.mul(a, b)] != ew.mul(r.f[a], r.f[b])) {
        r.homomorphism = false;
        break;
      }
    }
  }
  std::set<Index> img(r.f.begin(), r.f.end());
  r.surjective = img.size() == ew.size();
  r.injective  = img.size() == m.size();
  return r;
}

// W(B2) acting on the first two coordinates of Q^3.
inline GroupPtr square_cone_group() {
  std::vector<RationalMatrix> gens;
  std::vector<SignedPerm>     perms;
  for (auto const& refl : reflections({Family::B, 2})) {
    RationalMatrix m = RationalMatrix::identity(3);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        m(i, j) = refl.matrix(i, j);
      }
    }
    gens.push_back(std::move(m));
  }
  return FiniteGroup::generate(3, gens);
}

}  // namespace refmon
