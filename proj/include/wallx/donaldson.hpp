#pragma once

// Donaldson invariants of the projective plane from wall-crossing data, and
// the vanishing of signed wall sums on P1 x P1.

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "wallcross.hpp"
#include "walls.hpp"

namespace wallx {

enum class C1 { H, Zero };

inline std::string c1_name(C1 c) { return c == C1::H ? "H" : "0"; }

// Degrees N carrying invariants: N = -(c1^2 + 3) mod 4.
inline bool c1_supports(C1 c, long N) { return floor_mod(N + 3 + (c == C1::H ? 1 : 0), 4) == 0; }

// (N, r) -> Phi_{c1,N}(H^(N-2r) p^r)
struct InvariantTable {
    C1 c1 = C1::H;
    int max_degree = 0;
    Index trunc = 0;
    std::map<std::pair<int, int>, Rational> entries;

    friend bool operator==(const InvariantTable &a, const InvariantTable &b)
    {
        return a.c1 == b.c1 && a.max_degree == b.max_degree && a.entries == b.entries;
    }
};

// (5N + 3 + xi^2 + (xi - c1)^2) / 4
inline long epsilon(const Lattice &lat, const Coords &c1, const WallClass &xi, long N)
{
    Coords d = xi.coords;
    for (std::size_t k = 0; k < d.size(); ++k) {
        d[k] -= c1.at(k);
        if (floor_mod(d[k], 2) != 0) {
            throw NonIntegral("epsilon: xi is not congruent to c1 mod 2");
        }
    }
    long num = 5 * N + 3 + lat.square(xi.coords) + lat.square(d);
    if (floor_mod(num, 4) != 0) {
        throw NonIntegral("epsilon: (5N+3+xi^2+(xi-c1)^2)/4 = " + std::to_string(num) + "/4 is not an integer");
    }
    return num / 4;
}

namespace detail {

// Collapses accumulated Cyc8 sums to a table, asserting rationality and the
// degree support.
inline InvariantTable finish_table(C1 c1, int max_degree, Index T, const std::map<std::pair<int, int>, Cyc8> &acc)
{
    InvariantTable t{c1, max_degree, T, {}};
    for (const auto &[Ar, v] : acc) {
        int N = Ar.first + 2 * Ar.second;
        Rational value = rational_part(v);
        if (!c1_supports(c1, N)) {
            if (!value.is_zero()) {
                throw std::logic_error("invariant: nonzero value in unsupported degree " + std::to_string(N));
            }
            continue;
        }
        t.entries[{N, Ar.second}] = value;
    }
    return t;
}

inline std::map<std::pair<int, int>, Cyc8> empty_accumulator(int max_degree)
{
    std::map<std::pair<int, int>, Cyc8> acc;
    for (int r = 0; 2 * r <= max_degree; ++r) {
        for (int A = 0; A + 2 * r <= max_degree; ++A) {
            acc[{A, r}] = Cyc8();
        }
    }
    return acc;
}

// exp((n/2) s z/f - i (z^2/2) c - 3 i x e3/f^2) Delta(2tau)^2/(Delta Delta(4tau)), times f if asked.
inline MultiSeries e_n(long n, int cap, const BaseForms &bf, bool times_f)
{
    MultiSeries arg({{"z", 1, -1}, {"x", 2, -1}}, cap);
    const Cyc8 s = Cyc8::s(), i = Cyc8::i();
    arg += arg.monomial(0, 1, bf.inv_f * (s * Rational(n, 2)));
    arg += arg.monomial(0, 2, bf.quad * (i * Rational(-1, 2)));
    arg += arg.monomial(1, 1, bf.point * (i * Rational(-3)));
    QSeries pre = times_f ? bf.delta_quot * bf.f : bf.delta_quot;
    return exp(arg) * pre;
}

} // namespace detail

// Closed double sum over (n, a). A term contributes to degree N only when
// a^2 - n^2 <= N + bound_shift; the next shell is evaluated and must vanish.
inline InvariantTable phi_p2(C1 c1, int max_degree, std::optional<Index> trunc = std::nullopt)
{
    if (max_degree < 0) {
        throw std::invalid_argument("phi_p2: max degree must be nonnegative");
    }
    Index T = trunc.value_or(auto_trunc(max_degree));
    auto bf = base_forms(T);
    bool h = c1 == C1::H;
    long bound = max_degree + (h ? 3 : 4);
    long shell = bound + 8;
    auto acc = detail::empty_accumulator(max_degree);
    const Cyc8 inv_two_s = Cyc8::s().inverse() * Rational(1, 2);
    for (long n = h ? 1 : 2; 2 * n + 1 <= shell; n += 2) {
        MultiSeries e = detail::e_n(n, max_degree, *bf, h);
        for (long a = n + 1; a * a - n * n <= shell; a += 2) {
            long d = a * a - n * n;
            Cyc8 w;
            if (h) {
                w = Cyc8(((n + 1) / 2) % 2 == 0 ? 1 : -1);
            } else {
                w = inv_two_s * Rational(((a - 1) / 2) % 2 == 0 ? a : -a);
            }
            for (auto &[Ar, v] : acc) {
                Cyc8 c = e.coeff({Ar.first, Ar.second}).coeff(-12 * d);
                if (d > bound) {
                    if (!c.is_zero()) {
                        throw std::logic_error("phi_p2: the shell beyond the lattice-sum bound contributes");
                    }
                    continue;
                }
                v += c * w;
            }
        }
    }
    for (auto &[Ar, v] : acc) {
        v = v * (factorial(Ar.first) * factorial(Ar.second));
    }
    return detail::finish_table(c1, max_degree, T, acc);
}

inline InvariantTable phi_p2_H(int max_degree, std::optional<Index> trunc = std::nullopt)
{
    return phi_p2(C1::H, max_degree, trunc);
}

inline InvariantTable phi_p2_0(int max_degree, std::optional<Index> trunc = std::nullopt)
{
    return phi_p2(C1::Zero, max_degree, trunc);
}

// Walls of P2 # -P2 feeding Phi_H (h-type, degrees <= max_degree) or Phi_0
// (e-type, degrees <= max_degree + 1), deduplicated and sorted.
inline std::vector<WallClass> p2_wall_set(C1 c1, int max_degree)
{
    std::vector<WallClass> all;
    for (long N = 0; N <= max_degree; ++N) {
        auto w = c1 == C1::H ? walls_blowupP2_h(N) : walls_blowupP2_e(N + 1);
        all.insert(all.end(), w.begin(), w.end());
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

// Wall-by-wall assembly on the blown-up plane Y (basis H, E):
//   Phi_H = sum_xi s^((xi^2+3)+(xi-H)^2) delta_xi(exp(-s H z + i p x)),
//   Phi_0 = sum_xi s^((xi^2+3)+(xi-E)^2) delta_xi(-s E exp(-s H z + i p x)).
inline InvariantTable phi_via_wallsum(C1 c1, int max_degree, std::optional<Index> trunc = std::nullopt)
{
    if (max_degree < 0) {
        throw std::invalid_argument("phi_via_wallsum: max degree must be nonnegative");
    }
    bool h = c1 == C1::H;
    int cap = h ? max_degree : max_degree + 1;
    Index T = trunc.value_or(auto_trunc(cap));
    auto bf = base_forms(T);
    Lattice Y = Lattice::blowup_p2(1);
    const Cyc8 s = Cyc8::s(), i = Cyc8::i();
    auto acc = detail::empty_accumulator(max_degree);
    std::map<long, MultiSeries> g_by_h; // h-type g depends on xi only through xi.H

    for (const auto &xi : p2_wall_set(c1, max_degree)) {
        long x = xi.coords[0], y = xi.coords[1];
        Coords c = h ? Coords{x - 1, y} : Coords{x, y - 1};
        Cyc8 sign = sqrt_i_pow((xi.xi_sq + 3) + Y.square(c));
        Cyc8 hz = s * Rational(-x, 2); // (xi/2) . (-s H)
        DeltaMultiTable d;
        if (h) {
            auto it = g_by_h.find(x);
            if (it == g_by_h.end()) {
                it = g_by_h.emplace(x, build_g(0, CycleData::single(hz, i), cap, *bf)).first;
            }
            d = delta_from_g(it->second, xi.xi_sq, 0, T);
        } else {
            Cyc8 hw = s * Rational(y, 2); // (xi/2) . (-s E), with xi . E = -y
            CycleData cd{{"z", "w"}, {hz, hw}, {{i, Cyc8()}, {Cyc8(), -i}}, {-1, 1}};
            d = delta_from_g(build_g(0, cd, cap, *bf), xi.xi_sq, 0, T);
        }
        for (auto &[Ar, v] : acc) {
            auto [A, r] = Ar;
            Cyc8 delta = h ? d.at({A, r}) : d.at({A, 1, r});
            v += sign * sqrt_i_pow(2 * r) * delta;
        }
    }
    return detail::finish_table(c1, max_degree, T, acc);
}

// (-1)^(k+1) sum_{xi in W_{f+g}(F,G)} (-1)^eps(F+G, xi, 4k-1) delta_xi((2G)^(4k-1))
inline Rational qin_sum(int k, std::optional<Index> trunc = std::nullopt)
{
    if (k < 1) {
        throw std::invalid_argument("qin_sum: k must be positive");
    }
    long N = 4 * k - 1;
    Lattice lat = Lattice::p1xp1();
    Index T = trunc.value_or(auto_trunc(static_cast<int>(N)));
    auto bf = base_forms(T);
    std::map<long, MultiSeries> g_by_pair;
    Cyc8 sum;
    for (const auto &xi : walls_P1xP1(N)) {
        long u = xi.coords[0]; // (xi/2) . 2G = xi . G
        auto it = g_by_pair.find(u);
        if (it == g_by_pair.end()) {
            it = g_by_pair.emplace(u, build_g(0, CycleData::single(Cyc8(u), Cyc8(0)), static_cast<int>(N), *bf)).first;
        }
        Cyc8 d = delta_from_g(it->second, xi.xi_sq, 0, T).at({static_cast<int>(N), 0});
        long eps = epsilon(lat, {1, 1}, xi, N);
        bool negative = floor_mod(k + 1 + eps, 2) != 0;
        sum += negative ? -d : d;
    }
    return rational_part(sum);
}

inline Report qin_vanishing(int k_max, std::optional<Index> trunc = std::nullopt)
{
    Report r{"qin", {}};
    for (int k = 1; k <= k_max; ++k) {
        Rational v = qin_sum(k, trunc);
        CheckResult c{"signed wall sum for k = " + std::to_string(k) + " vanishes", v.is_zero(), 1, {}, ""};
        if (!c.passed) {
            c.detail = "sum = " + v.str();
        }
        r.checks.push_back(c);
    }
    return r;
}

// Both P2 tables from both pipelines: rationality and support are asserted
// while building, so a returned table already satisfies them.
inline Report p2_dual_suite(int max_degree = 20, std::optional<Index> trunc = std::nullopt)
{
    Report r{"p2", {}};
    for (C1 c : {C1::H, C1::Zero}) {
        CheckResult cr{"c1 = " + c1_name(c) + ": closed sum equals wall sum through degree " + std::to_string(max_degree),
                       true, 0, {}, ""};
        try {
            InvariantTable closed = phi_p2(c, max_degree, trunc);
            InvariantTable walls = phi_via_wallsum(c, max_degree, trunc);
            cr.checked = static_cast<long>(closed.entries.size());
            if (closed.entries != walls.entries) {
                cr.passed = false;
                for (const auto &[k, v] : closed.entries) {
                    auto it = walls.entries.find(k);
                    if (it == walls.entries.end() || !(it->second == v)) {
                        cr.first_failure = k.first;
                        cr.detail = "first mismatch at (N, r) = (" + std::to_string(k.first) + ", " +
                                    std::to_string(k.second) + ")";
                        break;
                    }
                }
            }
        } catch (const std::exception &e) {
            cr.passed = false;
            cr.detail = e.what();
        }
        r.checks.push_back(cr);
    }
    return r;
}

} // namespace wallx
