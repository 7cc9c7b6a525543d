#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <set>

#include "support.hpp"

using namespace refmon;
using refmon::test::vec;

namespace {

WeylType on(Family f, unsigned n) { return WeylType::on_coordinates(f, n); }

std::vector<SignedPerm> all_signed_perms(std::size_t n) {
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<SignedPerm> out;
  do {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      SignedPerm p{sigma, std::vector<bool>(n)};
      for (std::size_t i = 0; i < n; ++i) {
        p.flips[i] = (mask >> i) & 1;
      }
      out.push_back(p);
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

}  // namespace

TEST_CASE("group orders") {
  CHECK(build_group(on(Family::B, 3))->size() == 48);
  CHECK(build_group(on(Family::A, 3))->size() == 6);
  CHECK(build_group(on(Family::D, 2))->size() == 4);
  CHECK(build_group({Family::G2, 2})->size() == 12);
  for (unsigned n = 1; n <= 4; ++n) {
    for (auto f : {Family::A, Family::B, Family::D}) {
      auto const t = on(f, n);
      CHECK(BigInt(build_group(t)->size()) == weyl_order(t));
    }
  }
  CHECK(weyl_order(on(Family::B, 4)) == 384);
  CHECK(weyl_order(on(Family::D, 4)) == 192);
  CHECK_THROWS_AS(build_group({Family::E6, 6}), Error);
}

TEST_CASE("type A acts by permuting coordinates") {
  auto const g = build_group(on(Family::A, 3));
  for (Index i = 0; i < g->size(); ++i) {
    auto const& m = g->matrix(i);
    for (std::size_t r = 0; r < 3; ++r) {
      int ones = 0;
      for (std::size_t c = 0; c < 3; ++c) {
        CHECK((m(r, c) == 0 || m(r, c) == 1));
        ones += m(r, c) == 1;
      }
      CHECK(ones == 1);
    }
  }
}

TEST_CASE("reflections") {
  CHECK(reflections(on(Family::A, 3)).size() == 3);
  CHECK(reflections(on(Family::B, 2)).size() == 4);
  CHECK(reflections({Family::G2, 2}).size() == 6);
  for (auto const& t : {on(Family::A, 4), on(Family::B, 3), on(Family::D, 4),
                        WeylType{Family::G2, 2}}) {
    auto const roots = root_system(t);
    std::set<Vector> const root_set(roots.begin(), roots.end());
    for (auto const& r : reflections(t)) {
      auto const& s = r.matrix;
      std::size_t const d = t.coordinates();
      CHECK(s * s == RationalMatrix::identity(d));
      CHECK_FALSE(s == RationalMatrix::identity(d));
      Vector neg = r.root;
      for (auto& x : neg) {
        x = -x;
      }
      CHECK(s.apply(r.root) == neg);
      // fixed space has codimension 1
      std::vector<Vector> rows;
      for (std::size_t i = 0; i < d; ++i) {
        Vector row(d);
        for (std::size_t j = 0; j < d; ++j) {
          row[j] = s(i, j) - (i == j ? 1 : 0);
        }
        rows.push_back(row);
      }
      CHECK(Subspace::span(d, rows).dim() == 1);
      if (r.perm) {
        CHECK(r.perm->matrix() == s);
      }
      // the root system is closed under each reflection
      for (auto const& v : roots) {
        CHECK(root_set.contains(s.apply(v)));
      }
    }
  }
}

TEST_CASE("signed permutation product rule matches matrices") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto const all = all_signed_perms(n);
    for (auto const& a : all) {
      CHECK(inverse(a).matrix() * a.matrix() == RationalMatrix::identity(n));
      for (auto const& b : all) {
        CHECK((a * b).matrix() == a.matrix() * b.matrix());
      }
    }
  }
  // (sigma, X)(tau, Y) = (sigma tau, X tau ^ Y) on a fixed example
  SignedPerm const a{{1, 2, 0, 3}, {true, false, false, true}};
  SignedPerm const b{{3, 0, 2, 1}, {false, true, true, false}};
  auto const c = a * b;
  CHECK(c.sigma == std::vector<int>{0, 2, 3, 1});
  // X tau = {0 -> 3, 3 -> 1} = {1, 3}; symmetric difference with {1, 2}
  CHECK(c.flips == std::vector<bool>{false, false, true, true});
}

TEST_CASE("type D elements keep an even number of flips") {
  auto const g = build_group(on(Family::D, 4));
  REQUIRE(g->has_signed_perms());
  for (Index i = 0; i < g->size(); ++i) {
    CHECK(g->perm(i).flip_count() % 2 == 0);
  }
  auto const a = g->perm(5), b = g->perm(17);
  CHECK((a * b).flip_count() % 2 == 0);
}

TEST_CASE("transpositions induce S_n -> W(A_{n-1})") {
  for (unsigned n = 2; n <= 5; ++n) {
    auto const g = build_group(on(Family::A, n));
    auto phi = [&](std::vector<int> const& sigma) {
      RationalMatrix m(n);
      for (std::size_t i = 0; i < n; ++i) {
        m(i, static_cast<std::size_t>(sigma[i])) = 1;
      }
      return m;
    };
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        std::vector<int> t(n);
        std::iota(t.begin(), t.end(), 0);
        std::swap(t[i], t[j]);
        Vector v(n, Rational(0));
        v[i] = 1;
        v[j] = -1;
        CHECK(phi(t) == RationalMatrix::reflection(v));
      }
    }
    std::vector<std::vector<int>> perms;
    std::vector<int>              sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      perms.push_back(sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    std::set<Index> hit;
    for (auto const& a : perms) {
      auto idx = g->find(phi(a));
      REQUIRE(idx.has_value());
      hit.insert(*idx);
      if (n <= 4) {
        for (auto const& b : perms) {
          std::vector<int> ab(n);
          for (std::size_t i = 0; i < n; ++i) {
            ab[i] = b[static_cast<std::size_t>(a[i])];
          }
          CHECK(phi(ab) == phi(a) * phi(b));
        }
      }
    }
    CHECK(hit.size() == g->size());
  }
}

TEST_CASE("(-1)-type") {
  CHECK(is_minus_one_type({on(Family::B, 2)}));
  CHECK_FALSE(is_minus_one_type({on(Family::A, 3)}));
  CHECK(is_minus_one_type({on(Family::A, 2)}));
  CHECK(is_minus_one_type({on(Family::B, 2), on(Family::D, 4)}));
  CHECK_FALSE(is_minus_one_type({on(Family::B, 2), on(Family::D, 3)}));

  SECTION("brute force agrees with the stored classification") {
    for (unsigned n = 2; n <= 5; ++n) {
      for (auto f : {Family::A, Family::B, Family::D}) {
        auto const t = on(f, n);
        auto const v = minus_one_type(t);
        CHECK(v.brute_force);
        CHECK(v.value == minus_one_table(t));
      }
    }
    auto const g2 = minus_one_type({Family::G2, 2});
    CHECK(g2.brute_force);
    CHECK(g2.value);
  }
  SECTION("table-only types") {
    CHECK_FALSE(minus_one_type({Family::E6, 6}).brute_force);
    CHECK_FALSE(minus_one_type({Family::E6, 6}).value);
    CHECK(minus_one_type({Family::E7, 7}).value);
    CHECK(minus_one_type({Family::E8, 8}).value);
    CHECK(minus_one_type({Family::F4, 4}).value);
  }
}
