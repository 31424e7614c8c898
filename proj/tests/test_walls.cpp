#include <catch_amalgamated.hpp>

#include "wallx/walls.hpp"

using namespace wallx;

TEST_CASE("wall type congruence")
{
    CHECK(defines_wall_type(-3, 0));
    CHECK_FALSE(defines_wall_type(-3, 2));
    CHECK(defines_wall_type(-6, 3));
    CHECK(defines_wall_type(-2, 3));
    CHECK_FALSE(defines_wall_type(-10, 3));
    CHECK_FALSE(defines_wall_type(0, 1));
    CHECK_FALSE(defines_wall_type(4, 1));
    CHECK_FALSE(defines_wall_type(-1, -2));
    // every type-(N) class has xi^2 + N + 3 divisible by 4
    for (long N = 0; N <= 12; ++N) {
        for (long sq = -(N + 3); sq < 0; ++sq) {
            CHECK(defines_wall_type(sq, N) == ((sq + N + 3) % 4 == 0));
        }
    }
}

TEST_CASE("lattices")
{
    Lattice p = Lattice::p1xp1();
    CHECK(p.rank() == 2);
    CHECK(p.square({1, 1}) == 2);
    CHECK(p.pair({1, 0}, {0, 1}) == 1);
    Lattice b = Lattice::blowup_p2(2);
    CHECK(b.rank() == 3);
    CHECK(b.square({3, -2, 1}) == 4);
    CHECK_THROWS_AS(b.square({1, 0}), std::invalid_argument);
}

TEST_CASE("P1 x P1 walls at small N")
{
    auto w = walls_P1xP1(3);
    REQUIRE(w.size() == 3);
    CHECK(w[0] == WallClass{{1, -3}, -6});
    CHECK(w[1] == WallClass{{1, -1}, -2});
    CHECK(w[2] == WallClass{{3, -1}, -6});
    CHECK(walls_P1xP1(0).empty());
    // symmetric under swapping F and G
    for (long N = 0; N <= 25; ++N) {
        auto ws = walls_P1xP1(N);
        for (const auto &x : ws) {
            WallClass swapped{{-x.coords[1], -x.coords[0]}, x.xi_sq};
            CHECK(std::find(ws.begin(), ws.end(), swapped) != ws.end());
        }
    }
}

TEST_CASE("blowup plane walls at small N")
{
    // H - 2E has square -3: type (0) and (4), not (2)
    WallClass h2e{{1, -2}, -3};
    auto contains = [](const std::vector<WallClass> &v, const WallClass &x) {
        return std::find(v.begin(), v.end(), x) != v.end();
    };
    CHECK(contains(walls_blowupP2_h(0), h2e));
    CHECK_FALSE(contains(walls_blowupP2_h(2), h2e));
    CHECK(contains(walls_blowupP2_h(4), h2e));
    // 2H - 3E has square -5: type N = 2 mod 4
    WallClass e{{2, -3}, -5};
    CHECK(contains(walls_blowupP2_e(2), e));
    CHECK_FALSE(contains(walls_blowupP2_e(4), e));
    CHECK(contains(walls_blowupP2_e(6), e));
    CHECK(walls_blowupP2_e(1).empty());
    for (long N = 0; N <= 25; ++N) {
        for (const auto &x : walls_blowupP2_h(N)) {
            CHECK(Lattice::blowup_p2(1).square(x.coords) == x.xi_sq);
            CHECK(floor_mod(x.coords[0], 2) == 1);
            CHECK(floor_mod(x.coords[1], 2) == 0);
        }
    }
}

TEST_CASE("closed forms agree with brute-force enumeration")
{
    Report r = wall_enumeration_suite(25);
    INFO(r.text());
    CHECK(r.passed());
    CHECK(r.checks.size() == 3);
}

TEST_CASE("enumeration edge cases")
{
    Lattice p = Lattice::p1xp1();
    // parity (0, 0) classes are even and never reach a type with N + 3 odd
    CHECK(enumerate_walls(p, {0, 0}, 4, {1, 0}, {0, 1}).empty());
    CHECK_THROWS_AS(enumerate_walls(p, {1, 1}, 3, {1, -1}, {0, 1}), UnboundedSearch);
    CHECK_THROWS_AS(enumerate_walls(p, {1, 1}, 3, {1, 0}, {2, 0}), UnboundedSearch);
    CHECK_THROWS_AS(enumerate_walls(p, {1}, 3, {1, 0}, {0, 1}), std::invalid_argument);

    // a second blowup: result is sorted and every class separates the endpoints
    Lattice b = Lattice::blowup_p2(2);
    auto w = enumerate_walls(b, {1, 0, 0}, 4, {1, -1, 0}, {1, 0, 0});
    CHECK(std::is_sorted(w.begin(), w.end()));
    CHECK_FALSE(w.empty());
    for (const auto &x : w) {
        CHECK(b.pair(x.coords, {1, -1, 0}) < 0);
        CHECK(b.pair(x.coords, {1, 0, 0}) > 0);
        CHECK(defines_wall_type(x.xi_sq, 4));
    }
}
