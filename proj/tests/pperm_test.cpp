#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "support.hpp"

using namespace refmon;
using refmon::test::rook_monoid;
using refmon::test::signed_rook_monoid;

namespace {

PartialMap eps(std::size_t n, std::vector<std::size_t> y) {
  return PartialMap::partial_identity(n, y);
}

PartialMap random_map(std::size_t n, std::mt19937& rng) {
  std::vector<int> perm(n);
  for (std::size_t i = 0; i < n; ++i) {
    perm[i] = static_cast<int>(i);
  }
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution keep(0.6);
  for (auto& p : perm) {
    if (!keep(rng)) {
      p = -1;
    }
  }
  return PartialMap(n, perm);
}

FiniteSemilattice chain(std::size_t k) {
  std::vector<Index> meet(k * k);
  for (Index a = 0; a < k; ++a) {
    for (Index b = 0; b < k; ++b) {
      meet[a * k + b] = std::min(a, b);
    }
  }
  return FiniteSemilattice(k, meet);
}

FiniteSemilattice boolean_lattice(std::size_t atoms) {
  std::size_t const  k = std::size_t{1} << atoms;
  std::vector<Index> meet(k * k);
  for (Index a = 0; a < k; ++a) {
    for (Index b = 0; b < k; ++b) {
      meet[a * k + b] = a & b;
    }
  }
  return FiniteSemilattice(k, meet);
}

}  // namespace

TEST_CASE("compose applies left to right") {
  CHECK(compose(eps(3, {0, 1}), eps(3, {1, 2})) == eps(3, {1}));
  auto const a = PartialMap::from_pairs(3, {{1, 2}});
  auto const b = PartialMap::from_pairs(3, {{2, 1}});
  CHECK(compose(a, b) == eps(3, {0}));
  auto const cycle = PartialMap::from_pairs(3, {{1, 2}, {2, 3}, {3, 1}});
  CHECK(compose(cycle, eps(3, {0})) == PartialMap::from_pairs(3, {{3, 1}}));
  CHECK_THROWS_AS(compose(eps(2, {0}), eps(3, {0})), Error);
}

TEST_CASE("inverse transposes the graph") {
  CHECK(inverse(eps(4, {1, 3})) == eps(4, {1, 3}));
  CHECK(inverse(PartialMap::from_pairs(3, {{1, 2}}))
        == PartialMap::from_pairs(3, {{2, 1}}));

  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t const n = 1 + trial % 6;
    auto const a = random_map(n, rng);
    auto const b = random_map(n, rng);
    CHECK(inverse(compose(a, b)) == compose(inverse(b), inverse(a)));
    CHECK(inverse(inverse(a)) == a);
    CHECK(compose(a, inverse(a)) == eps(n, a.domain()));
  }
}

TEST_CASE("rejects maps that are not partial bijections") {
  CHECK_THROWS_AS(PartialMap(3, {1, 1, -1}), Error);
  CHECK_THROWS_AS(PartialMap(2, {0, 5}), Error);
}

TEST_CASE("signed partial maps commute with negation") {
  auto const t = SignedPartialMap::from_signed(2, {-1, 2});
  CHECK(t(1) == -1);
  CHECK(t(-1) == 1);
  CHECK(t(2) == 2);
  auto const d = SignedPartialMap::from_signed(3, {0, -3, 0});
  CHECK(d(1) == 0);
  CHECK(d(-2) == 3);
  CHECK(compose(t, t) == SignedPartialMap::identity(2));
  for (auto const& m : all_signed_partial_maps(2)) {
    for (int i : {1, 2}) {
      CHECK(m(-i) == -m(i));
    }
  }
}

TEST_CASE("rook monoid sizes match brute force counts") {
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(all_partial_maps(n).size()
          == test::count_partial_injections(n, false));
    CHECK(all_signed_partial_maps(n).size()
          == test::count_partial_injections(n, true));
  }
}

TEST_CASE("inverse monoid axioms hold for I_n and J_n") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto const i = rook_monoid(n);
    auto const j = signed_rook_monoid(n);
    CHECK(check_inverse_monoid(i).ok);
    CHECK(check_inverse_monoid(j).ok);
  }
}

TEST_CASE("idempotents are the partial identities and commute") {
  auto const m = rook_monoid(3);
  auto const e = idempotents(m);
  CHECK(e.size() == 8);
  for (Index a : e) {
    CHECK(m.element(a).is_idempotent());
    CHECK(m.element(a) == eps(3, m.element(a).domain()));
  }
  for (auto y : all_subsets(3)) {
    for (auto z : all_subsets(3)) {
      CHECK(compose(eps(3, y), eps(3, z)) == eps(3, set_intersection(y, z)));
    }
  }
}

TEST_CASE("Green's relations of I_2") {
  auto const m = rook_monoid(2);
  REQUIRE(m.size() == 7);
  auto const g = green_classes(m);
  CHECK(g.num_r == 4);
  CHECK(g.num_l == 4);
  CHECK(g.num_d == 3);
  CHECK(g.num_j == 3);
  for (Index a = 0; a < m.size(); ++a) {
    for (Index b = 0; b < m.size(); ++b) {
      CHECK((g.r[a] == g.r[b])
            == (m.element(a).domain() == m.element(b).domain()));
    }
  }
}

TEST_CASE("a group has a single Green's class") {
  auto const s3 = generate_submonoid(
      {PartialMap::from_pairs(3, {{1, 2}, {2, 1}, {3, 3}}),
       PartialMap::from_pairs(3, {{1, 2}, {2, 3}, {3, 1}})},
      PartialMap::identity(3));
  EnumeratedMonoid<PartialMap> const m(s3, PartialMap::identity(3));
  REQUIRE(m.size() == 6);
  auto const g = green_classes(m);
  CHECK(g.num_r == 1);
  CHECK(g.num_l == 1);
  CHECK(g.num_h == 1);
  CHECK(g.num_d == 1);
  CHECK(g.num_j == 1);
}

TEST_CASE("D equals J in I_3") {
  auto const g = green_classes(rook_monoid(3));
  CHECK(same_partition(g.d, g.j));
  CHECK(g.num_d == 4);
}

TEST_CASE("mu congruence") {
  SECTION("I_3 is fundamental") {
    CHECK(mu_congruence(rook_monoid(3)).fundamental);
  }
  SECTION("J_1 relates the identity and x -> -x") {
    auto const m  = signed_rook_monoid(1);
    auto const mu = mu_congruence(m);
    CHECK_FALSE(mu.fundamental);
    auto const id = *m.find(SignedPartialMap::identity(1));
    auto const t  = *m.find(SignedPartialMap::from_signed(1, {-1}));
    CHECK(mu.cls[id] == mu.cls[t]);
  }
  SECTION("a two-element semilattice is fundamental") {
    EnumeratedMonoid<PartialMap> const m({eps(1, {}), eps(1, {0})},
                                         eps(1, {0}));
    CHECK(mu_congruence(m).fundamental);
  }
}

TEST_CASE("mu is an idempotent-separating congruence") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto const m  = signed_rook_monoid(n);
    auto const mu = mu_congruence(m);
    auto const e  = idempotents(m);
    for (Index x : e) {
      for (Index y : e) {
        if (x != y) {
          CHECK(mu.cls[x] != mu.cls[y]);
        }
      }
    }
    std::mt19937                         rng(3);
    std::uniform_int_distribution<Index> pick(0, m.size() - 1);
    for (int s = 0; s < 2000; ++s) {
      Index const a = pick(rng), b = pick(rng), c = pick(rng);
      if (mu.cls[a] == mu.cls[b]) {
        CHECK(mu.cls[m.mul(a, c)] == mu.cls[m.mul(b, c)]);
        CHECK(mu.cls[m.mul(c, a)] == mu.cls[m.mul(c, b)]);
      }
    }
  }
}

TEST_CASE("Munn representation has kernel mu") {
  auto check = [](auto const& m) {
    auto const delta = munn_representation(m);
    auto const mu    = mu_congruence(m);
    for (Index a = 0; a < m.size(); ++a) {
      for (Index b = 0; b < m.size(); ++b) {
        CHECK((delta[a] == delta[b]) == (mu.cls[a] == mu.cls[b]));
        CHECK(delta[m.mul(a, b)] == compose(delta[a], delta[b]));
      }
    }
  };
  for (std::size_t n = 1; n <= 3; ++n) {
    check(rook_monoid(n));
    check(signed_rook_monoid(n));
  }
  check(ReflectionMonoid::build(hexagon_system()));
  check(ReflectionMonoid::build(arrangement_system({Family::B, 2})));
}

TEST_CASE("Munn semigroups") {
  SECTION("3-chain") {
    auto const t = munn_semigroup(chain(3));
    CHECK(t.size() == 3);
    CHECK(check_inverse_monoid(t).ok);
  }
  SECTION("one point") {
    CHECK(munn_semigroup(chain(1)).size() == 1);
  }
  SECTION("Boolean lattice on two atoms") {
    auto const e = boolean_lattice(2);
    auto const t = munn_semigroup(e);
    // automorphisms of the square, the 2x2 isomorphisms between
    // two-element chains, and the bottom
    CHECK(t.size() == 2 + 4 + 1);
    CHECK(check_inverse_monoid(t).ok);
    auto const et = FiniteSemilattice::of_idempotents(t);
    CHECK(find_semilattice_isomorphism(e, et).has_value());
    CHECK(mu_congruence(t).fundamental);
  }
}

TEST_CASE("factorizability") {
  auto const i3 = factorizable_check(rook_monoid(3));
  CHECK(i3.factorizable);
  auto const m = rook_monoid(3);
  for (Index a = 0; a < m.size(); ++a) {
    REQUIRE(i3.unit[a] != kNoIndex);
    CHECK(m.element(i3.unit[a]).is_total());
  }
  CHECK(factorizable_check(signed_rook_monoid(2)).factorizable);

  auto const s2 = generate_submonoid(
      {PartialMap::from_pairs(2, {{1, 2}, {2, 1}})}, PartialMap::identity(2));
  CHECK(factorizable_check(
            EnumeratedMonoid<PartialMap>(s2, PartialMap::identity(2)))
            .factorizable);

  // (1->2) and its inverse generate a monoid whose only unit is 1
  auto const nil = generate_submonoid(
      {PartialMap::from_pairs(2, {{1, 2}})}, PartialMap::identity(2));
  CHECK_FALSE(factorizable_check(
                  EnumeratedMonoid<PartialMap>(nil, PartialMap::identity(2)))
                  .factorizable);
}
