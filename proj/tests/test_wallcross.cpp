#include <catch_amalgamated.hpp>

#include "wallx/wallcross.hpp"

using namespace wallx;

TEST_CASE("g at the empty monomial is the prefactor")
{
    Index T = auto_trunc(4);
    BaseForms bf(T);
    MultiSeries g = build_g(0, CycleData::single(Cyc8(0), Cyc8(0)), 4, bf);
    QSeries g00 = g.coeff({0, 0});
    CHECK(g00.lo() == -36);
    CHECK(g00 == bf.prefactor(0));
    CHECK(g.coeff({1, 0}).is_zero());
    CHECK(g.coeff({0, 1}) == bf.point * Rational(-3) * bf.prefactor(0));
    CHECK(g.coeff({0, 2}) == bf.point * bf.point * Rational(9, 2) * bf.prefactor(0));
}

TEST_CASE("off-diagonal gram entries enter once per pair")
{
    Index T = auto_trunc(3);
    BaseForms bf(T);
    Cyc8 c(Rational(5, 3));
    CycleData cd{{"z1", "z2"}, {Cyc8(0), Cyc8(0)}, {{Cyc8(0), c}, {c, Cyc8(0)}}, {-1, -1}};
    MultiSeries g = build_g(1, cd, 3, bf);
    CHECK(g.coeff({1, 1, 0}) == bf.quad * (c * Rational(-1)) * bf.prefactor(1));
    CHECK_THROWS_AS(build_g(0, CycleData{{"a", "b"}, {Cyc8(), Cyc8()}, {{Cyc8(), c}, {Cyc8(), Cyc8()}}, {-1, -1}}, 2, bf),
                    std::invalid_argument);
}

TEST_CASE("known wall-crossing value on P1 x P1")
{
    // xi = F - 3G, alpha = 2G: xi/2 . alpha = 1, alpha^2 = 0
    DeltaTable t = delta_eval(-6, 0, Cyc8(1), Cyc8(0), 3);
    CHECK(t.at(3, 0) == Cyc8(1));
    for (const auto &[ar, v] : t.entries) {
        int N = ar.first + 2 * ar.second;
        if (!defines_wall_type(-6, N)) {
            CHECK(v.is_zero());
        }
    }
}

TEST_CASE("zero-dimensional walls give the pairing power")
{
    Rational lambda(3, 2);
    for (int N = 0; N <= 7; ++N) {
        for (int sigma : {-1, 0, 2}) {
            DeltaTable t = delta_eval(-(N + 3), sigma, Cyc8(lambda), Cyc8(0), N);
            Rational expected(1);
            for (int k = 0; k < N; ++k) {
                expected *= lambda;
            }
            CHECK(t.at(N, 0) == Cyc8(expected));
        }
    }
}

TEST_CASE("entries vanish off the wall-type congruence")
{
    for (long xi_sq = -1; xi_sq >= -9; --xi_sq) {
        DeltaTable t = delta_eval(xi_sq, 1, Cyc8(Rational(1, 2)), Cyc8(Rational(-1, 3)), 6);
        for (const auto &[ar, v] : t.entries) {
            int N = ar.first + 2 * ar.second;
            if (!defines_wall_type(xi_sq, N)) {
                CHECK(v.is_zero());
            }
            CHECK(v.is_rational());
        }
    }
    CHECK_THROWS_AS(delta_eval(0, 0, Cyc8(1), Cyc8(0), 3), std::invalid_argument);
    // the raw residue is still available at any exponent
    MultiSeries g = build_g(0, CycleData::single(Cyc8(1), Cyc8(0)), 2, auto_trunc(2, 48));
    CHECK(g_residues(g, 48).size() == admissible_monomials(g).size());
}

TEST_CASE("delta is stable under larger truncation")
{
    DeltaTable a = delta_eval(-7, 1, Cyc8(Rational(1, 2)), Cyc8(3), 8);
    DeltaTable b = delta_eval(-7, 1, Cyc8(Rational(1, 2)), Cyc8(3), 8, a.trunc + 10 * kUnit);
    CHECK(a.entries == b.entries);
    CHECK_THROWS_AS(delta_eval(-7, 1, Cyc8(1), Cyc8(3), 8, Index(48)), BeyondTruncation);
}

TEST_CASE("Lambda basic structure")
{
    LambdaCaps caps{3, 1, 1, 2};
    Index T = auto_trunc(caps.effective_weight_cap(), 96);
    BaseForms bf(T);
    MultiSeries lam = build_lambda(caps, 0, bf);
    CHECK(lam.coeff({0, 0, 0, 0}) == bf.prefactor(0));
    MultiSeries dL = lam.derivative(kL);
    for (const auto &m : admissible_monomials(lam)) {
        Exponents up = m;
        up[kL] += 1;
        if (lam.admits(up)) {
            CHECK(dL.coeff(m) == lam.coeff(m) * bf.inv_f);
        }
    }
    CHECK(lam.coeff({0, 0, 0, 1}) == lam.coeff({0, 0, 0, 0}) * pow(bf.theta, -1));
}

TEST_CASE("P coefficients")
{
    CHECK(p_coefficient(3, 0, 0, 0, -6, 0) == Cyc8(1));
    CHECK(p_coefficient(0, 0, 0, 0, -3, 0) == Cyc8(1));
    CHECK(p_coefficient(-1, 0, 0, 0, -3, 0) == Cyc8(0));
    // P agrees with delta for a zero-dimensional wall
    DeltaTable t = delta_eval(-6, 0, Cyc8(1), Cyc8(0), 3);
    CHECK(p_coefficient(3, 0, 0, 0, -6, 0) == t.at(3, 0));

    // support: w >= -(N+3)/4 and w = -(N+3)/4 mod 1; positive w does occur
    PTable P(LambdaCaps{4, 2, 2, 1, 4}, 0, 8);
    bool positive_w_nonzero = false;
    for (int l = 0; l <= 4; ++l) {
        for (int k = 0; l + 2 * k <= 4; ++k) {
            for (int r = 0; l + 2 * k + 2 * r <= 4; ++r) {
                int N = l + 2 * k + 2 * r;
                for (long w4 = -12; w4 <= 8; ++w4) {
                    Cyc8 v = P(l, k, r, 1, w4);
                    if (w4 < -(N + 3) || floor_mod(w4 + N + 3, 4) != 0) {
                        CHECK(v.is_zero());
                    }
                    if (w4 > 0 && !v.is_zero()) {
                        positive_w_nonzero = true;
                    }
                }
            }
        }
    }
    CHECK(positive_w_nonzero);
}

TEST_CASE("recursions on a small grid")
{
    RecursionGrid grid{4, 1, -12, 4};
    PTable P(recursion_caps(grid), 0, grid.max_w4);
    Report r = recursion_suite(P, grid);
    INFO(r.text());
    CHECK(r.passed());

    PTable mutated = P;
    mutated.override_value(2, 0, 0, 1, -7, P(2, 0, 0, 1, -7) + Cyc8(1));
    CHECK_FALSE(recursion_suite(mutated, grid).passed());
}

TEST_CASE("the n^2-weighted recursion does not extend to l < 2")
{
    PTable P(LambdaCaps{2, 1, 0, 1, 2}, 0, 4);
    // sum n^2 P(0,0,0,1,w-n^2) at w = 1/4 is the q^(1/4) coefficient of
    // (q theta'/theta) * lambda, which is nonzero
    Cyc8 s;
    for (long n = -3; n <= 3; ++n) {
        s += P(0, 0, 0, 1, 1 - 4 * n * n) * Rational(n * n);
    }
    CHECK_FALSE(s.is_zero());
}

TEST_CASE("differential equations at small caps")
{
    LambdaCaps caps{3, 1, 1, 2};
    Index top = 4 * kUnit;
    Report r = diffeq_suite(caps, top);
    INFO(r.text());
    CHECK(r.passed());

    BaseForms bf(auto_trunc(caps.effective_weight_cap(), top));
    Report bad = diffeq_suite(build_lambda(caps, 0, bf, Cyc8(2)), top);
    CHECK(bad.checks[0].passed);
    CHECK_FALSE(bad.checks[1].passed);
}

TEST_CASE("the x-equation needs the leading minus sign")
{
    LambdaCaps caps{3, 1, 1, 1};
    Index top = 2 * kUnit;
    BaseForms bf(auto_trunc(caps.effective_weight_cap(), top));
    MultiSeries lam = build_lambda(caps, 0, bf);
    QSeries eta3 = eta2_cubed(top + 8 * kUnit);
    QSeries deta3 = q_derivative(eta3);
    MultiSeries dLt = lam.derivative(kT).derivative(kL);
    Exponents m{0, 0, 0, 0};
    QSeries lhs = lam.derivative(kX).coeff(m);
    QSeries flipped = deta3 * dLt.derivative(kL, 2).coeff(m) - eta3 * dLt.derivative(kQ).coeff(m) * Rational(6);
    QSeries corrected = eta3 * dLt.derivative(kQ).coeff(m) * Rational(6) - deta3 * dLt.derivative(kL, 2).coeff(m);
    CHECK(lhs.agrees_with(corrected, top));
    CHECK_FALSE(lhs.agrees_with(flipped, top));
    // and it reproduces the point-class factor -3 e3/f^2
    CHECK(lhs.agrees_with(bf.point * Rational(-3) * lam.coeff(m), top));
}

TEST_CASE("blowup consistency")
{
    Report r = blowup_consistency(-6, 0, 3);
    INFO(r.text());
    CHECK(r.passed());

    BlowupChecker checker(Cyc8(Rational(3, 2)), Cyc8(2), 5);
    for (long xi_sq = -8; xi_sq <= -3; ++xi_sq) {
        for (int sigma = -1; sigma <= 1; ++sigma) {
            Report rep = checker.check(xi_sq, sigma);
            INFO(rep.text());
            CHECK(rep.passed());
        }
    }
}

TEST_CASE("E-insertions match the closed binomial expansion")
{
    // d^k/dw^k exp(h w / f + c w^2 / 2) at 0 = sum_{s+2t=k} k!/(s! t! 2^t) (h/f)^s c^t
    int cap = 5;
    Index T = auto_trunc(cap + 1);
    BaseForms bf(T);
    for (long j : {1L, 2L, 3L}) {
        CycleData cd{{"a", "e"}, {Cyc8(1), Cyc8(Rational(-j, 2))}, {{Cyc8(1), Cyc8()}, {Cyc8(), Cyc8(-1)}}, {-1, 3}};
        MultiSeries g = build_g(0, cd, cap + 1, bf);
        QSeries h = bf.inv_f * Rational(-j, 2);
        for (int k = 0; k <= 3; ++k) {
            QSeries expected = QSeries::zero(T);
            for (int t = 0; 2 * t <= k; ++t) {
                int s = k - 2 * t;
                Rational w = factorial(k) / (factorial(s) * factorial(t));
                for (int i = 0; i < t; ++i) {
                    w *= Rational(1, 2);
                }
                expected += pow(h, s) * pow(bf.quad, t) * w;
            }
            for (int a = 0; a + k <= cap; ++a) {
                QSeries lhs = g.coeff({a, k, 0}) * factorial(k);
                QSeries rhs = expected * g.coeff({a, 0, 0});
                Index through = std::min(lhs.valid_to(), rhs.valid_to());
                CHECK(lhs.agrees_with(rhs, through));
            }
        }
    }
}

TEST_CASE("residue lemma")
{
    QSeries h1 = h_k_series(1, 4 * kUnit);
    CHECK(h1.lo() == -24);
    CHECK(h_k_residue(1).is_zero());
    CHECK(h_k_residue(2).is_zero());
    CHECK(residue_suite(3).passed());
}
