#pragma once

// q-expansions of the modular forms used by the wall-crossing formulas.
// Every constructor takes the lattice index T (units of 1/48) through which
// the result must be exact.

#include <string>
#include <vector>

#include <gmpxx.h>

#include "qseries.hpp"
#include "report.hpp"

namespace wallx {

// sigma_k(n) for 0 <= n <= m by sieving; entry 0 is unused.
inline std::vector<mpz_class> divisor_sums(unsigned k, long m, bool odd_only = false)
{
    std::vector<mpz_class> s(static_cast<std::size_t>(std::max(m, 0L) + 1));
    mpz_class dk;
    for (long d = 1; d <= m; ++d) {
        if (odd_only && d % 2 == 0) {
            continue;
        }
        mpz_ui_pow_ui(dk.get_mpz_t(), static_cast<unsigned long>(d), k);
        for (long n = d; n <= m; n += d) {
            s[static_cast<std::size_t>(n)] += dk;
        }
    }
    return s;
}

// eta(half_scale/2 * tau)^power
struct EtaFactor {
    int half_scale;
    int power;
};

using EtaQuotientSpec = std::vector<EtaFactor>;

inline Index eta_quotient_lead(const EtaQuotientSpec &spec)
{
    Index lead = 0;
    for (const auto &f : spec) {
        lead += static_cast<Index>(f.half_scale) * f.power;
    }
    return lead;
}

// q^(sum m e / 24) prod (1 - q^(m n))^e. All factors live on the q^(1/2)
// grid, so the product is expanded over integers there and then placed on
// the 1/48 lattice.
inline QSeries eta_quotient(const EtaQuotientSpec &spec, Index T)
{
    if (spec.empty()) {
        throw std::invalid_argument("eta_quotient: no factors");
    }
    for (const auto &f : spec) {
        if (f.half_scale <= 0) {
            throw std::invalid_argument("eta_quotient: scales must be positive");
        }
    }
    Index lead = eta_quotient_lead(spec);
    if (T < lead) {
        return QSeries::zero(T);
    }
    Index top = (T - lead) / 24;
    std::vector<mpz_class> c(static_cast<std::size_t>(top + 1));
    c[0] = 1;
    for (const auto &f : spec) {
        for (Index step = f.half_scale; step <= top; step += f.half_scale) {
            for (int rep = 0; rep < std::abs(f.power); ++rep) {
                if (f.power > 0) {
                    for (Index i = top; i >= step; --i) {
                        c[static_cast<std::size_t>(i)] -= c[static_cast<std::size_t>(i - step)];
                    }
                } else {
                    for (Index i = step; i <= top; ++i) {
                        c[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(i - step)];
                    }
                }
            }
        }
    }
    std::vector<QSeries::Term> terms;
    for (Index i = 0; i <= top; ++i) {
        if (c[static_cast<std::size_t>(i)] != 0) {
            terms.push_back({lead + 24 * i, Cyc8(Rational(c[static_cast<std::size_t>(i)]))});
        }
    }
    return QSeries::from_terms(std::move(terms), T);
}

// sum_{n in Z} q^(n^2)
inline QSeries theta(Index T)
{
    std::vector<QSeries::Term> t;
    for (Index n = 0; 48 * n * n <= T; ++n) {
        t.push_back({48 * n * n, Cyc8(n == 0 ? 1 : 2)});
    }
    return QSeries::from_terms(std::move(t), T);
}

// eta(2 tau)^3 as the Jacobi sum sum_{n>=0} (-1)^n (2n+1) q^((2n+1)^2/4).
inline QSeries eta2_cubed(Index T)
{
    std::vector<QSeries::Term> t;
    for (Index n = 0; 12 * (2 * n + 1) * (2 * n + 1) <= T; ++n) {
        t.push_back({12 * (2 * n + 1) * (2 * n + 1), Cyc8(n % 2 == 0 ? 2 * n + 1 : -(2 * n + 1))});
    }
    return QSeries::from_terms(std::move(t), T);
}

// G2(2 tau) = -1/24 + sum sigma_1(n) q^(2n)
inline QSeries g2_2tau(Index T)
{
    long m = T < 0 ? 0 : static_cast<long>(T / 96);
    auto s = divisor_sums(1, m);
    std::vector<QSeries::Term> t{{0, Cyc8(Rational(-1, 24))}};
    for (long n = 1; n <= m; ++n) {
        t.push_back({96 * n, Cyc8(Rational(s[static_cast<std::size_t>(n)]))});
    }
    return QSeries::from_terms(std::move(t), T);
}

// e3(2 tau) = 1/12 + 2 sum (-1)^n sigma_1^odd(n) q^n. The alternating sign is
// what makes q dlog theta = -2 G2(2tau) - e3(2tau) hold.
inline QSeries e3_2tau(Index T)
{
    long m = T < 0 ? 0 : static_cast<long>(T / 48);
    auto s = divisor_sums(1, m, true);
    std::vector<QSeries::Term> t{{0, Cyc8(Rational(1, 12))}};
    for (long n = 1; n <= m; ++n) {
        mpz_class v = 2 * s[static_cast<std::size_t>(n)];
        t.push_back({48 * n, Cyc8(Rational(n % 2 == 0 ? v : mpz_class(-v)))});
    }
    return QSeries::from_terms(std::move(t), T);
}

// f = eta(2 tau)^3 / theta
inline QSeries f_form(Index T) { return eta2_cubed(T) / theta(T); }

// sum_{d odd} (-1)^((d-1)/2) sigma_{4k-1}(d) q^(d/4)
inline QSeries g_tilde_4k(int k, Index T)
{
    if (k <= 0) {
        throw std::invalid_argument("g_tilde_4k: k must be positive");
    }
    long m = T < 0 ? 0 : static_cast<long>(T / 12);
    auto s = divisor_sums(static_cast<unsigned>(4 * k - 1), m);
    std::vector<QSeries::Term> t;
    for (long d = 1; d <= m; d += 2) {
        mpz_class v = s[static_cast<std::size_t>(d)];
        if ((d - 1) / 2 % 2 != 0) {
            v = -v;
        }
        t.push_back({12 * d, Cyc8(Rational(v))});
    }
    return QSeries::from_terms(std::move(t), T);
}

// phi = (eta(tau/2) eta(2 tau) / eta(tau))^4
inline QSeries phi(Index T) { return eta_quotient({{1, 4}, {4, 4}, {2, -4}}, T); }

// Delta(m tau) with m = half_scale / 2
inline QSeries delta(int half_scale, Index T) { return eta_quotient({{half_scale, 24}}, T); }

// Delta(2 tau)^2 / (Delta(tau) Delta(4 tau)), built as one eta quotient.
inline QSeries delta_quotient(Index T) { return eta_quotient({{4, 48}, {2, -24}, {8, -24}}, T); }

// The series the identity suite compares. Exposed so tests can perturb one.
struct IdentityInputs {
    QSeries theta, eta2_cubed_sum, eta2_cubed_product, eta2, f, g2, e3;
    QSeries delta1, delta2, delta4, delta_quot;

    explicit IdentityInputs(Index T)
        : theta(wallx::theta(T)), eta2_cubed_sum(wallx::eta2_cubed(T)),
          eta2_cubed_product(eta_quotient({{4, 3}}, T)), eta2(eta_quotient({{4, 1}}, T)),
          f(eta2_cubed_sum / theta), g2(g2_2tau(T)), e3(e3_2tau(T)), delta1(delta(2, T)), delta2(delta(4, T)),
          delta4(delta(8, T)), delta_quot(delta_quotient(T))
    {
    }
};

inline CheckResult compare_series(std::string name, const QSeries &lhs, const QSeries &rhs, Index through)
{
    CheckResult c;
    c.name = std::move(name);
    if (through > lhs.valid_to() || through > rhs.valid_to()) {
        c.passed = false;
        c.detail = "insufficient precision: sides valid to " + std::to_string(lhs.valid_to()) + " and " +
                   std::to_string(rhs.valid_to());
        return c;
    }
    Index d = lhs.first_difference(rhs, through);
    c.passed = d == kExact;
    if (!c.passed) {
        c.first_failure = d;
        c.detail = "first difference at lattice index " + std::to_string(d);
    }
    c.checked = 1;
    return c;
}

// Checks the classical identities coefficientwise through lattice index T.
inline Report identity_suite(const IdentityInputs &in, Index T)
{
    Report r{"identities", {}};
    r.checks.push_back(compare_series("eta(2tau)^3 product = Jacobi sum", in.eta2_cubed_product,
                                      in.eta2_cubed_sum, T));
    r.checks.push_back(compare_series("theta = eta(2tau)^5/(eta(tau)^2 eta(4tau)^2)", in.theta,
                                      eta_quotient({{4, 5}, {2, -2}, {8, -2}}, T), T));
    r.checks.push_back(
        compare_series("f = eta(tau)^2 eta(4tau)^2/eta(2tau)^2", in.f, eta_quotient({{2, 2}, {8, 2}, {4, -2}}, T), T));
    r.checks.push_back(compare_series("q dlog eta(2tau) = -2 G2(2tau)", q_log_deriv(in.eta2),
                                      in.g2 * Rational(-2), T));
    r.checks.push_back(compare_series("q dlog theta = -2 G2(2tau) - e3(2tau)", q_log_deriv(in.theta),
                                      in.g2 * Rational(-2) - in.e3, T));
    QSeries f11 = pow(in.f, 11);
    r.checks.push_back(compare_series("f^12 = Delta(tau) Delta(4tau)/Delta(2tau)", f11 * in.f,
                                      in.delta1 * in.delta4 / in.delta2, T));
    r.checks.push_back(compare_series("Delta(2tau)/f^11 = f Delta(2tau)^2/(Delta(tau) Delta(4tau))", in.delta2 / f11,
                                      in.f * in.delta_quot, T));
    return r;
}

// Margin covers the precision lost to the negative-valuation quotient
// Delta(2tau)/f^11 (valuation -3/4 from lead 2 - 11/4).
inline Report identity_suite(Index T)
{
    return identity_suite(IdentityInputs(T + 4 * kUnit), T);
}

} // namespace wallx
