#include <catch_amalgamated.hpp>

#include "wallx/donaldson.hpp"

using namespace wallx;

TEST_CASE("epsilon")
{
    Lattice p = Lattice::p1xp1();
    CHECK(epsilon(p, {1, 1}, {{1, -3}, -6}, 3) == 3);
    Lattice y = Lattice::blowup_p2(1);
    CHECK(epsilon(y, {1, 0}, {{1, -2}, -3}, 0) == -1);
    CHECK_THROWS_AS(epsilon(y, {1, 0}, {{1, -2}, -3}, 2), NonIntegral);
    CHECK_THROWS_AS(epsilon(p, {1, 1}, {{2, -3}, -12}, 3), NonIntegral);

    // on every Qin wall (2n-1)F - (2m-1)G the sign (-1)^(k+1+eps) is (-1)^(n+m)
    for (int k = 1; k <= 4; ++k) {
        long N = 4 * k - 1;
        for (const auto &xi : walls_P1xP1(N)) {
            long n = (xi.coords[0] + 1) / 2, m = (-xi.coords[1] + 1) / 2;
            long eps = epsilon(p, {1, 1}, xi, N);
            CHECK(floor_mod(k + 1 + eps, 2) == floor_mod(n + m, 2));
        }
    }
}

TEST_CASE("support congruence")
{
    CHECK(c1_supports(C1::H, 0));
    CHECK(c1_supports(C1::H, 8));
    CHECK_FALSE(c1_supports(C1::H, 2));
    CHECK(c1_supports(C1::Zero, 1));
    CHECK(c1_supports(C1::Zero, 5));
    CHECK_FALSE(c1_supports(C1::Zero, 3));
}

TEST_CASE("single-wall degrees equal the signed delta")
{
    // degree 0 of c1 = H sees only H - 2E
    REQUIRE(p2_wall_set(C1::H, 0).size() == 1);
    Cyc8 sign = sqrt_i_pow((-3 + 3) + Lattice::blowup_p2(1).square({0, -2}));
    Cyc8 d = delta_eval(-3, 0, Cyc8::s() * Rational(-1, 2), Cyc8::i(), 0).at(0, 0);
    InvariantTable h = phi_via_wallsum(C1::H, 0);
    CHECK(h.entries.at({0, 0}) == rational_part(sign * d));
    CHECK(h.entries.at({0, 0}) == Rational(-1));

    // degree 1 of c1 = 0 sees only 2H - 3E, through the E-derivative
    auto walls = p2_wall_set(C1::Zero, 1);
    REQUIRE(walls.size() == 1);
    CHECK(walls[0] == WallClass{{2, -3}, -5});
    const Cyc8 s = Cyc8::s(), i = Cyc8::i();
    CycleData cd{{"z", "w"}, {s * Rational(-1), s * Rational(-3, 2)}, {{i, Cyc8()}, {Cyc8(), -i}}, {-1, 1}};
    Cyc8 d0 = delta_eval_multi(-5, 0, cd, 2).at({1, 1, 0});
    Cyc8 sign0 = sqrt_i_pow((-5 + 3) + Lattice::blowup_p2(1).square({2, -4}));
    InvariantTable z = phi_via_wallsum(C1::Zero, 1);
    CHECK(z.entries.at({1, 0}) == rational_part(sign0 * d0));
    CHECK(z.entries.at({1, 0}) == Rational(-3, 2));
}

TEST_CASE("closed sums equal wall sums")
{
    for (C1 c : {C1::H, C1::Zero}) {
        InvariantTable closed = phi_p2(c, 12);
        InvariantTable walls = phi_via_wallsum(c, 12);
        CHECK(closed.entries == walls.entries);
        CHECK(closed == walls);
        for (const auto &[k, v] : closed.entries) {
            CHECK(c1_supports(c, k.first));
            CHECK(2 * k.second <= k.first);
        }
        CHECK_FALSE(closed.entries.empty());
    }
}

TEST_CASE("low-degree values")
{
    InvariantTable h = phi_p2_H(4);
    CHECK(h.entries.at({0, 0}) == Rational(-1));
    CHECK(h.entries.at({4, 0}) == Rational(-3, 16));
    CHECK(h.entries.at({4, 1}) == Rational(-5, 16));
    CHECK(h.entries.at({4, 2}) == Rational(-19, 16));
    InvariantTable z = phi_p2_0(5);
    CHECK(z.entries.at({1, 0}) == Rational(-3, 2));
    CHECK(z.entries.at({5, 2}) == Rational(-13, 8));
    CHECK(z.entries.size() == 4);
}

TEST_CASE("tables are stable under degree and truncation growth")
{
    for (C1 c : {C1::H, C1::Zero}) {
        InvariantTable small = phi_p2(c, 6);
        InvariantTable large = phi_p2(c, 10);
        InvariantTable deep = phi_p2(c, 6, small.trunc + 10 * kUnit);
        CHECK(deep.entries == small.entries);
        for (const auto &[k, v] : small.entries) {
            CHECK(large.entries.at(k) == v);
        }
        InvariantTable walls_deep = phi_via_wallsum(c, 6, small.trunc + 10 * kUnit);
        CHECK(walls_deep.entries == small.entries);
    }
    CHECK_THROWS_AS(phi_p2(C1::H, 8, Index(2 * kUnit)), BeyondTruncation);
    CHECK_THROWS_AS(phi_p2(C1::H, -1), std::invalid_argument);
}

TEST_CASE("Qin vanishing")
{
    Report r = qin_vanishing(3);
    INFO(r.text());
    CHECK(r.passed());
    CHECK(r.checks.size() == 3);
    CHECK(qin_sum(2, auto_trunc(7) + 10 * kUnit).is_zero());
    CHECK_THROWS_AS(qin_sum(0), std::invalid_argument);

    // without the epsilon sign the sum does not vanish
    Index T = auto_trunc(3);
    Cyc8 unsigned_sum;
    for (const auto &xi : walls_P1xP1(3)) {
        unsigned_sum += delta_eval(xi.xi_sq, 0, Cyc8(xi.coords[0]), Cyc8(0), 3, T).at(3, 0);
    }
    CHECK_FALSE(unsigned_sum.is_zero());
}
