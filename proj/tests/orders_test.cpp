#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace refmon;

namespace {

WeylType on(Family f, unsigned n) { return WeylType::on_coordinates(f, n); }

BigInt enumerated(SubspaceSystem s) { return BigInt(ReflectionMonoid::build(std::move(s)).size()); }

}  // namespace

TEST_CASE("Boolean closed forms against enumeration") {
  for (unsigned n = 1; n <= 4; ++n) {
    for (auto f : {Family::A, Family::B, Family::D}) {
      INFO(to_string(f) << n);
      BigInt const e = enumerated(boolean_system(on(f, n)));
      CHECK(boolean_order(f, n) == e);
      if (f != Family::D) {
        CHECK(boolean_order_table(f, n) == e);
      } else {
        CHECK(boolean_order_table_d_corrected(n) == e);
      }
    }
  }
  CHECK(boolean_order(Family::A, 4) == 209);
  CHECK(boolean_order(Family::B, 2) == 17);
  CHECK_THROWS_AS(boolean_order(Family::G2, 2), Error);
  CHECK_THROWS_AS(boolean_order(Family::A, 0), Error);
}

TEST_CASE("arrangement closed forms against enumeration") {
  for (unsigned n = 1; n <= 4; ++n) {
    CHECK(arrangement_order_A(n) == enumerated(arrangement_system(on(Family::A, n))));
    CHECK(arrangement_order_B(n) == enumerated(arrangement_system(on(Family::B, n))));
    if (n >= 2) {
      CHECK(arrangement_order_D(n) == enumerated(arrangement_system(on(Family::D, n))));
    }
  }
  CHECK(arrangement_order_A(3) == 16);
  CHECK(arrangement_order_B(2) == 25);
  CHECK(arrangement_order_D(2) == 9);
  CHECK(enumerated(arrangement_system({Family::G2, 2})) == 49);
}

TEST_CASE("printed type B and D arrangement formulas") {
  CHECK(arrangement_order_B_printed(1) == Rational(1));
  CHECK(arrangement_order_B_printed(2) == Rational(7));
  CHECK(arrangement_order_D_printed(2) == Rational(4));
  for (auto const& c : formula_discrepancies(4)) {
    INFO(c.formula);
    CHECK_FALSE(c.equal);
    CHECK(c.printed != Rational(c.oracle));
  }
  CHECK(formula_discrepancies(4).size() == 4 + 3 + 3);
  CHECK(boolean_order_table(Family::D, 2) == 20);
  CHECK(boolean_order(Family::D, 2) == 13);
}

TEST_CASE("triple class sizes count the lattice") {
  for (unsigned n = 1; n <= 4; ++n) {
    BigInt total = 0;
    for (unsigned m = 0; m <= n; ++m) {
      for (auto const& l : partitions(n - m)) {
        total += triple_class_size(n, m, l);
      }
    }
    CHECK(total == BigInt(arrangement_system(on(Family::B, n)).size()));
  }
}

TEST_CASE("orbit data parsing") {
  auto const g2 = parse_orbit_data("1a0:3a1.3a1:1g2");
  REQUIRE(g2.size() == 3);
  CHECK(g2[0].size() == 1);
  CHECK(g2[1].size() == 2);
  CHECK(g2[1][0].count == 3);
  CHECK(g2[1][0].stabilizer == std::vector<StabilizerFactor>{{'a', 1, 1}});
  CHECK(g2[2][0].stabilizer_order() == 12);
  CHECK(g2[0][0].stabilizer_order() == 1);

  auto const sq = parse_orbit_data("72a12")[0][0];
  CHECK(sq.count == 72);
  CHECK(sq.stabilizer == std::vector<StabilizerFactor>{{'a', 1, 2}});
  CHECK(sq.stabilizer_order() == 4);
  CHECK(parse_orbit_data("48a1a2")[0][0].stabilizer_order() == 12);
  CHECK(parse_orbit_data("1d4")[0][0].stabilizer_order() == 192);

  CHECK_THROWS_AS(parse_orbit_data(""), Error);
  CHECK_THROWS_AS(parse_orbit_data("1a0::1g2"), Error);
  CHECK_THROWS_AS(parse_orbit_data("a1"), Error);
  CHECK_THROWS_AS(parse_orbit_data("3x1"), Error);
  CHECK_THROWS_AS(parse_orbit_data("3a"), Error);
  CHECK_THROWS_AS(parse_orbit_data("3"), Error);
  CHECK_THROWS_AS(parse_orbit_data("1g3"), Error);
}

TEST_CASE("exceptional orders") {
  CHECK(exceptional_order(Family::G2) == 49);
  CHECK(exceptional_order(Family::F4) == 54241);
  CHECK(exceptional_order(Family::E6) == BigInt("16217200"));
  CHECK(exceptional_order(Family::E7) == BigInt("8362300467"));
  CHECK(exceptional_order(Family::E8) == BigInt("47881782744961"));
  CHECK_THROWS_AS(exceptional_order(Family::B), Error);

  SECTION("the G2 row agrees with the rational model") {
    auto const sys = arrangement_system({Family::G2, 2});
    CHECK(exceptional_order(Family::G2) == order_by_isotropy(sys));
    std::vector<BigInt> counts;
    for (auto c : sys.rank_counts()) {
      counts.emplace_back(c);
    }
    CHECK(orbit_data_rank_counts(Family::G2) == counts);
  }
  SECTION("rank counts") {
    CHECK(orbit_data_rank_counts(Family::E8)
          == std::vector<BigInt>{1, 120, 4900, 85680, 661542, 2091600, 2221780,
                                 440880, 1});
    for (auto f : {Family::G2, Family::F4, Family::E6, Family::E7, Family::E8}) {
      auto const c = orbit_data_rank_counts(f);
      CHECK(c.size() == WeylType::exceptional(f).rank + 1);
      CHECK(c.front() == 1);
      CHECK(c.back() == 1);
    }
  }
  SECTION("the number of hyperplanes is the number of reflections") {
    CHECK(orbit_data_rank_counts(Family::F4)[1] == 24);
    CHECK(orbit_data_rank_counts(Family::E6)[1] == 36);
    CHECK(orbit_data_rank_counts(Family::E7)[1] == 63);
  }
}

TEST_CASE("combinatorial helpers") {
  CHECK(c_mn(1, 2) == 2);
  CHECK(delta_mn(1, 2) == 2);
  CHECK(b_lambda({2, 1}) == 2);
  CHECK(b_lambda({3}) == 6);
  CHECK(stirling2(4, 2) == 7);
  CHECK(partitions(4).size() == 5);
  CHECK(partitions(0).size() == 1);
  CHECK_THROWS_AS(c_mn(3, 2), Error);
}
