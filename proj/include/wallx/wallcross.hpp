#pragma once

// Generating functions of wall-crossing terms and their verification suites.
//
// g(z, x) = exp(sum_i h_i z_i / f - 1/2 sum_ij G_ij z_i z_j c - 3 x e3 / f^2)
//           * theta^sigma * f * Delta(2tau)^2 / (Delta(tau) Delta(4tau)),
// c = (2 G2(2tau) + e3(2tau)) / f^2, and the wall-crossing term of xi is the
// residue of q^(-xi^2/4) g, i.e. the coefficient at q^(xi^2/4).

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "forms.hpp"
#include "multiseries.hpp"
#include "report.hpp"
#include "walls.hpp"

namespace wallx {

// Truncation sufficient for residues up to lattice index `top` of every
// coefficient of total weight <= weight_cap.
inline Index auto_trunc(int weight_cap, Index top = 0)
{
    Index quarters = (weight_cap + 4 + 3) / 4;
    return kUnit * (quarters + 2) + std::max<Index>(top, 0);
}

// Series shared by every generating function, valid through `trunc`.
struct BaseForms {
    Index trunc;
    QSeries theta, eta3, f, inv_f, g2, e3;
    QSeries quad;  // (2 G2(2tau) + e3(2tau)) / f^2
    QSeries point; // e3(2tau) / f^2
    QSeries delta_quot;

    explicit BaseForms(Index T)
        : trunc(T), theta(wallx::theta(T)), eta3(eta2_cubed(T)), f(eta3 / theta), inv_f(pow(f, -1)),
          g2(g2_2tau(T)), e3(e3_2tau(T)), quad((g2 * Rational(2) + e3) / (f * f)), point(e3 / (f * f)),
          delta_quot(delta_quotient(T))
    {
    }

    QSeries theta_pow(int sigma) const { return pow(theta, sigma); }

    // theta^sigma f Delta(2tau)^2/(Delta(tau) Delta(4tau))
    QSeries prefactor(int sigma) const { return theta_pow(sigma) * f * delta_quot; }
};

// Memoized per truncation; the cache is invisible apart from speed.
inline std::shared_ptr<const BaseForms> base_forms(Index T)
{
    static std::mutex mu;
    static std::map<Index, std::shared_ptr<const BaseForms>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(T);
    if (it != cache.end()) {
        return it->second;
    }
    auto p = std::make_shared<const BaseForms>(T);
    cache.emplace(T, p);
    return p;
}

struct CycleData {
    std::vector<std::string> names;
    std::vector<Cyc8> half_pairings;     // xi/2 . alpha_i
    std::vector<std::vector<Cyc8>> gram; // Q(alpha_i, alpha_j)
    std::vector<int> max_degree;         // -1 for none

    static CycleData single(Cyc8 half_pairing, Cyc8 quad, std::string name = "z")
    {
        return CycleData{{std::move(name)}, {std::move(half_pairing)}, {{std::move(quad)}}, {-1}};
    }

    std::size_t size() const { return names.size(); }

    void validate() const
    {
        std::size_t m = names.size();
        if (half_pairings.size() != m || gram.size() != m || max_degree.size() != m) {
            throw std::invalid_argument("CycleData: inconsistent sizes");
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (gram[i].size() != m) {
                throw std::invalid_argument("CycleData: gram is not square");
            }
            for (std::size_t j = 0; j < i; ++j) {
                if (!(gram[i][j] == gram[j][i])) {
                    throw std::invalid_argument("CycleData: gram is not symmetric");
                }
            }
        }
    }
};

// Variables z_1..z_m (weight 1) followed by x (weight 2).
inline std::vector<Variable> g_variables(const CycleData &cycles)
{
    std::vector<Variable> v;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        v.push_back({cycles.names[i], 1, cycles.max_degree[i]});
    }
    v.push_back({"x", 2, -1});
    return v;
}

inline MultiSeries build_g(int sigma, const CycleData &cycles, int weight_cap, const BaseForms &bf)
{
    cycles.validate();
    MultiSeries arg(g_variables(cycles), weight_cap);
    std::size_t m = cycles.size();
    for (std::size_t i = 0; i < m; ++i) {
        if (!cycles.half_pairings[i].is_zero()) {
            arg += arg.monomial(i, 1, bf.inv_f * cycles.half_pairings[i]);
        }
        for (std::size_t j = i; j < m; ++j) {
            const Cyc8 &gij = cycles.gram[i][j];
            if (gij.is_zero()) {
                continue;
            }
            Exponents e(m + 1, 0);
            e[i] += 1;
            e[j] += 1;
            // the symmetric sum counts off-diagonal pairs twice
            Rational w = i == j ? Rational(-1, 2) : Rational(-1);
            arg.add_term(e, bf.quad * (gij * w));
        }
    }
    arg += arg.monomial(m, 1, bf.point * Rational(-3));
    return exp(arg) * bf.prefactor(sigma);
}

inline MultiSeries build_g(int sigma, const CycleData &cycles, int weight_cap, Index T)
{
    return build_g(sigma, cycles, weight_cap, *base_forms(T));
}

// Every exponent tuple admitted by the caps of `ms`, in lexicographic order.
inline std::vector<Exponents> admissible_monomials(const MultiSeries &ms)
{
    std::vector<Exponents> out;
    std::size_t n = ms.variables().size();
    Exponents e(n, 0);
    auto rec = [&](auto &&self, std::size_t i) -> void {
        if (i == n) {
            out.push_back(e);
            return;
        }
        for (int d = 0;; ++d) {
            e[i] = d;
            Exponents probe = e;
            for (std::size_t k = i + 1; k < n; ++k) {
                probe[k] = 0;
            }
            if (!ms.admits(probe)) {
                break;
            }
            self(self, i + 1);
        }
        e[i] = 0;
    };
    rec(rec, 0);
    return out;
}

inline Rational factorial_weight(const Exponents &e)
{
    Rational w(1);
    for (int k : e) {
        w *= factorial(k);
    }
    return w;
}

// prod(e!) * [monomial e][q^(index/48)] of g, for every admissible monomial.
// Works at any exponent; no wall semantics are attached here.
inline std::map<Exponents, Cyc8> g_residues(const MultiSeries &g, Index index)
{
    std::map<Exponents, Cyc8> out;
    for (const auto &e : admissible_monomials(g)) {
        out[e] = g.coeff(e).coeff(index) * factorial_weight(e);
    }
    return out;
}

// Multi-cycle table: keys are (a_1, ..., a_m, r).
struct DeltaMultiTable {
    long xi_sq = 0;
    int sigma = 0;
    int degree_cap = 0;
    Index trunc = 0;
    std::map<Exponents, Cyc8> entries;

    Cyc8 at(const Exponents &e) const
    {
        auto it = entries.find(e);
        if (it == entries.end()) {
            throw std::out_of_range("DeltaMultiTable: monomial outside the degree cap");
        }
        return it->second;
    }
};

// Single-cycle table: (a, r) -> delta(alpha^a p^r).
struct DeltaTable {
    long xi_sq = 0;
    int sigma = 0;
    int degree_cap = 0;
    Index trunc = 0;
    std::map<std::pair<int, int>, Cyc8> entries;

    Cyc8 at(int a, int r) const
    {
        auto it = entries.find({a, r});
        if (it == entries.end()) {
            throw std::out_of_range("DeltaTable: (a, r) outside the degree cap");
        }
        return it->second;
    }
};

// Residues of an already built g at q^(xi^2/4), with the wall-type support
// asserted: a nonzero entry off the congruence class is a pipeline bug.
inline DeltaMultiTable delta_from_g(const MultiSeries &g, long xi_sq, int sigma, Index trunc)
{
    if (xi_sq >= 0) {
        throw std::invalid_argument("delta: xi^2 must be negative (use g_residues for other exponents)");
    }
    DeltaMultiTable t{xi_sq, sigma, g.weight_cap(), trunc, g_residues(g, 12 * xi_sq)};
    for (auto &[e, v] : t.entries) {
        long N = g.weight(e);
        if (!defines_wall_type(xi_sq, N) && !v.is_zero()) {
            std::ostringstream os;
            os << "delta: nonzero value " << v << " off the wall type (xi^2 = " << xi_sq << ", N = " << N << ")";
            throw std::logic_error(os.str());
        }
    }
    return t;
}

inline DeltaMultiTable delta_eval_multi(long xi_sq, int sigma, const CycleData &cycles, int degree_cap,
                                        std::optional<Index> trunc = std::nullopt)
{
    if (xi_sq >= 0) {
        throw std::invalid_argument("delta: xi^2 must be negative");
    }
    if (degree_cap < 0) {
        throw std::invalid_argument("delta: degree cap must be nonnegative");
    }
    Index T = trunc.value_or(auto_trunc(degree_cap));
    return delta_from_g(build_g(sigma, cycles, degree_cap, T), xi_sq, sigma, T);
}

inline DeltaTable delta_eval(long xi_sq, int sigma, const Cyc8 &half_pairing, const Cyc8 &quad, int degree_cap,
                             std::optional<Index> trunc = std::nullopt)
{
    DeltaMultiTable m = delta_eval_multi(xi_sq, sigma, CycleData::single(half_pairing, quad), degree_cap, trunc);
    DeltaTable t{m.xi_sq, m.sigma, m.degree_cap, m.trunc, {}};
    for (const auto &[e, v] : m.entries) {
        t.entries[{e[0], e[1]}] = v;
    }
    return t;
}

// ---------------------------------------------------------------------------
// The universal generating function Lambda(L, Q, x, t).

struct LambdaCaps {
    int L = 6, Q = 3, x = 2, t = 3;
    int weight_cap = -1; // -1: L + 2Q + 2x

    int effective_weight_cap() const { return weight_cap >= 0 ? weight_cap : L + 2 * Q + 2 * x; }
};

enum LambdaVar : std::size_t { kL = 0, kQ = 1, kX = 2, kT = 3 };

// exp(l_scale L/f - (Q/2) c - 3x e3/f^2 + t/theta) theta^sigma f Delta(2tau)^2/(Delta Delta(4tau)).
// l_scale exists only so tests can inject a wrong normalization.
inline MultiSeries build_lambda(const LambdaCaps &caps, int sigma, const BaseForms &bf, const Cyc8 &l_scale = Cyc8(1))
{
    std::vector<Variable> vars{{"L", 1, caps.L}, {"Q", 2, caps.Q}, {"x", 2, caps.x}, {"t", 0, caps.t}};
    MultiSeries arg(vars, caps.effective_weight_cap());
    arg += arg.monomial(kL, 1, bf.inv_f * l_scale);
    arg += arg.monomial(kQ, 1, bf.quad * Rational(-1, 2));
    arg += arg.monomial(kX, 1, bf.point * Rational(-3));
    arg += arg.monomial(kT, 1, pow(bf.theta, -1));
    return exp(arg) * bf.prefactor(sigma);
}

inline MultiSeries build_lambda(const LambdaCaps &caps, int sigma, Index T)
{
    return build_lambda(caps, sigma, *base_forms(T));
}

// P(l, k, r, b, w) = l! k! r! b! [L^l Q^k x^r t^b q^w] Lambda, w = w4/4.
class PTable {
public:
    PTable(const LambdaCaps &caps, int sigma, Index top_w4)
        : lambda_(build_lambda(caps, sigma, auto_trunc(caps.effective_weight_cap(), 12 * top_w4)))
    {
    }
    explicit PTable(MultiSeries lambda) : lambda_(std::move(lambda)) {}

    Cyc8 operator()(int l, int k, int r, int b, long w4) const
    {
        if (l < 0 || k < 0 || r < 0 || b < 0) {
            return Cyc8();
        }
        Exponents e{l, k, r, b};
        auto over = overrides_.find(std::make_tuple(l, k, r, b, w4));
        if (over != overrides_.end()) {
            return over->second;
        }
        return lambda_.coeff(e).coeff(12 * w4) * factorial_weight(e);
    }

    // Replaces one value; used by mutation tests.
    void override_value(int l, int k, int r, int b, long w4, Cyc8 v)
    {
        overrides_[std::make_tuple(l, k, r, b, w4)] = std::move(v);
    }

    const MultiSeries &lambda() const { return lambda_; }

private:
    MultiSeries lambda_;
    std::map<std::tuple<int, int, int, int, long>, Cyc8> overrides_;
};

inline Cyc8 p_coefficient(int l, int k, int r, int b, long w4, int sigma_base)
{
    if (l < 0 || k < 0 || r < 0 || b < 0) {
        return Cyc8();
    }
    LambdaCaps caps{l, k, r, b, l + 2 * k + 2 * r};
    return PTable(caps, sigma_base, std::max<long>(w4, 0))(l, k, r, b, w4);
}

struct RecursionGrid {
    int max_weight = 8; // l + 2k + 2r
    int max_b = 2;
    long min_w4 = -25;
    long max_w4 = 16;
};

// The t-degree cap and weight cap a grid needs for all four recursions.
inline LambdaCaps recursion_caps(const RecursionGrid &grid)
{
    int w = grid.max_weight + 3;
    return LambdaCaps{w, w / 2, w / 2, grid.max_b + 1, w};
}

namespace detail {

inline std::string tuple_text(int l, int k, int r, int b, long w4)
{
    std::ostringstream os;
    os << "(l,k,r,b,w) = (" << l << "," << k << "," << r << "," << b << "," << w4 << "/4)";
    return os.str();
}

inline void record(CheckResult &c, bool ok, const std::string &where)
{
    ++c.checked;
    if (!ok && c.passed) {
        c.passed = false;
        c.detail = "first failure at " + where;
    }
}

} // namespace detail

inline Report recursion_suite(const PTable &P, const RecursionGrid &grid)
{
    CheckResult c0{"P = sum_n P(b+1, w-n^2)", true, 0, {}, ""},
        c1{"P = sum_n (-1)^n (2n+1)/2 P(l+1, b+1, w-(n+1/2)^2)", true, 0, {}, ""},
        c2{"sum_n n^2 P(b+1, w-n^2) = 2 sum_n P(l-2, k+1, b+1, w-n^2) for l >= 2", true, 0, {}, ""},
        c3{"P(r+1) from the odd-shifted sum of P(l+3) and P(l+1, k+1)", true, 0, {}, ""};
    long nonzero = 0;
    for (int l = 0; l <= grid.max_weight; ++l) {
        for (int k = 0; l + 2 * k <= grid.max_weight; ++k) {
            for (int r = 0; l + 2 * k + 2 * r <= grid.max_weight; ++r) {
                for (int b = 0; b <= grid.max_b; ++b) {
                    for (long w4 = grid.min_w4; w4 <= grid.max_w4; ++w4) {
                        std::string where = detail::tuple_text(l, k, r, b, w4);
                        // Terms below the valuation bound vanish, so these
                        // ranges cover every contributing n.
                        long span = w4 + 4 * (grid.max_weight + 4);
                        Cyc8 lhs = P(l, k, r, b, w4);
                        if (!lhs.is_zero()) {
                            ++nonzero;
                        }
                        Cyc8 s0, s1, s2l, s2r;
                        for (long n = -64; n <= 64; ++n) {
                            if (4 * n * n > span) {
                                continue;
                            }
                            long w = w4 - 4 * n * n;
                            s0 += P(l, k, r, b + 1, w);
                            s2l += P(l, k, r, b + 1, w) * Rational(n * n);
                            s2r += P(l - 2, k + 1, r, b + 1, w) * Rational(2);
                        }
                        Cyc8 s3;
                        for (long m = -129; m <= 129; m += 2) { // m = 2n+1
                            if (m * m > span) {
                                continue;
                            }
                            long w = w4 - m * m;
                            long n = (m - 1) / 2;
                            Rational half(m, 2);
                            Rational sign = n % 2 == 0 ? Rational(1) : Rational(-1);
                            s1 += P(l + 1, k, r, b + 1, w) * (sign * half);
                            s3 += (P(l + 3, k, r, b + 1, w) * (half * half * half) -
                                   P(l + 1, k + 1, r, b + 1, w) * (Rational(6) * half)) *
                                  (-sign);
                        }
                        detail::record(c0, lhs == s0, where);
                        detail::record(c1, lhs == s1, where);
                        if (l >= 2) {
                            detail::record(c2, s2l == s2r, where);
                        }
                        detail::record(c3, P(l, k, r + 1, b, w4) == s3, where);
                    }
                }
            }
        }
    }
    Report rep{"recursions", {c0, c1, c2, c3}};
    for (auto &c : rep.checks) {
        if (c.passed) {
            c.detail = std::to_string(nonzero) + " nonzero P values on the grid";
        }
    }
    return rep;
}

inline Report recursion_suite(const RecursionGrid &grid = {}, int sigma = 0)
{
    return recursion_suite(PTable(recursion_caps(grid), sigma, grid.max_w4), grid);
}

// ---------------------------------------------------------------------------
// Differential equations of Lambda, checked monomial by monomial through
// lattice index `top`.

inline Report diffeq_suite(const MultiSeries &lambda, Index top)
{
    Index T = top + 8 * kUnit;
    QSeries th = wallx::theta(T), eta3 = eta2_cubed(T);
    QSeries dth = q_derivative(th), deta3 = q_derivative(eta3);

    MultiSeries dt = lambda.derivative(kT);
    MultiSeries dLdt = dt.derivative(kL);
    MultiSeries dQ = lambda.derivative(kQ);
    MultiSeries dLL = lambda.derivative(kL, 2);
    MultiSeries dx = lambda.derivative(kX);
    MultiSeries dLLLt = dLdt.derivative(kL, 2);
    MultiSeries dLQt = dLdt.derivative(kQ);

    CheckResult c0{"theta d/dt Lambda = Lambda", true, 0, {}, ""};
    CheckResult c1{"eta(2tau)^3 d/dL d/dt Lambda = Lambda", true, 0, {}, ""};
    CheckResult c2{"2 theta d/dQ Lambda = (q d/dq theta) d^2/dL^2 Lambda", true, 0, {}, ""};
    CheckResult c3{"d/dx Lambda = -(q d/dq eta(2tau)^3) d^3/dL^3 d/dt Lambda + 6 eta(2tau)^3 d/dL d/dQ d/dt Lambda",
                   true, 0, {}, ""};

    auto shifted = [](Exponents e, std::size_t var, int by) {
        e[var] += by;
        return e;
    };
    auto check = [&](CheckResult &c, const Exponents &m, const QSeries &lhs, const QSeries &rhs) {
        std::ostringstream where;
        where << "monomial (L,Q,x,t) = (" << m[0] << "," << m[1] << "," << m[2] << "," << m[3] << ")";
        if (lhs.valid_to() < top || rhs.valid_to() < top) {
            detail::record(c, false, where.str() + " (insufficient truncation)");
            return;
        }
        Index d = lhs.first_difference(rhs, top);
        detail::record(c, d == kExact, where.str() + ", lattice index " + std::to_string(d));
    };

    for (const auto &m : admissible_monomials(lambda)) {
        if (lambda.admits(shifted(m, kT, 1))) {
            check(c0, m, th * dt.coeff(m), lambda.coeff(m));
        }
        Exponents mlt = shifted(shifted(m, kL, 1), kT, 1);
        if (lambda.admits(mlt)) {
            check(c1, m, eta3 * dLdt.coeff(m), lambda.coeff(m));
        }
        if (lambda.admits(shifted(m, kQ, 1)) && lambda.admits(shifted(m, kL, 2))) {
            check(c2, m, th * dQ.coeff(m) * Rational(2), dth * dLL.coeff(m));
        }
        Exponents m3 = shifted(shifted(m, kL, 3), kT, 1);
        Exponents mlqt = shifted(shifted(shifted(m, kL, 1), kQ, 1), kT, 1);
        if (lambda.admits(shifted(m, kX, 1)) && lambda.admits(m3) && lambda.admits(mlqt)) {
            check(c3, m, dx.coeff(m), eta3 * dLQt.coeff(m) * Rational(6) - deta3 * dLLLt.coeff(m));
        }
    }
    return Report{"diffeq", {c0, c1, c2, c3}};
}

inline Report diffeq_suite(const LambdaCaps &caps = {}, Index top = 10 * kUnit, int sigma = 0)
{
    return diffeq_suite(build_lambda(caps, sigma, auto_trunc(caps.effective_weight_cap(), top)), top);
}

// ---------------------------------------------------------------------------
// Blowup consistency: X versus X # (-P^2), with the exceptional class E
// carried as an extra cycle with half pairing -j/2 and square -1.

class BlowupChecker {
public:
    BlowupChecker(Cyc8 pair, Cyc8 quad, int degree_cap)
        : pair_(std::move(pair)), quad_(std::move(quad)), cap_(degree_cap), T_(auto_trunc(degree_cap + 1))
    {
    }

    int degree_cap() const { return cap_; }

    const MultiSeries &g_base(int sigma)
    {
        auto it = base_.find(sigma);
        if (it == base_.end()) {
            it = base_.emplace(sigma, build_g(sigma, CycleData::single(pair_, quad_, "a"), cap_, T_)).first;
        }
        return it->second;
    }

    // g of the blowup for the class xi + jE, signature sigma - 1.
    const MultiSeries &g_blowup(int sigma, long j)
    {
        auto key = std::make_pair(sigma, j);
        auto it = blown_.find(key);
        if (it == blown_.end()) {
            CycleData cd{{"a", "e"},
                         {pair_, Cyc8(Rational(-j, 2))},
                         {{quad_, Cyc8()}, {Cyc8(), Cyc8(-1)}},
                         {-1, 3}};
            it = blown_.emplace(key, build_g(sigma - 1, cd, cap_ + 1, T_)).first;
        }
        return it->second;
    }

    Report check(long xi_sq, int sigma)
    {
        if (xi_sq >= 0) {
            throw std::invalid_argument("blowup_consistency: xi^2 must be negative");
        }
        const MultiSeries &gx = g_base(sigma);
        auto dx = [&](int a, int r) {
            return gx.coeff({a, r}).coeff(12 * xi_sq) * factorial(a) * factorial(r);
        };
        auto dhat = [&](long j, int a, int e, int r) {
            const MultiSeries &g = g_blowup(sigma, j);
            return g.coeff({a, e, r}).coeff(12 * (xi_sq - j * j)) * factorial(a) * factorial(e) * factorial(r);
        };
        // Contributions need j^2 <= xi^2 + N + 4 with N <= cap + 1; one more
        // shell is included and must contribute nothing.
        long jmax = static_cast<long>(std::sqrt(static_cast<double>(std::max<long>(0, xi_sq + cap_ + 4)))) + 2;

        std::string tag = "xi^2=" + std::to_string(xi_sq) + " sigma=" + std::to_string(sigma);
        CheckResult c0{"(0) delta_X = sum_n delta_{xi+2nE}", true, 0, {}, ""};
        CheckResult c1{"(1) delta_X(alpha) = sum_n (-1)^(n-1) delta_{xi+(2n+1)E}(E alpha)", true, 0, {}, ""};
        CheckResult c2{"(2) sum_n delta_{xi+2nE}(E^2 beta) = 0", true, 0, {}, ""};
        CheckResult c3{"(3) delta_X(p^(r+1) alpha) = sum_n (-1)^n delta_{xi+(2n+1)E}(E^3 p^r alpha)", true, 0, {},
                       ""};
        for (int r = 0; 2 * r <= cap_; ++r) {
            for (int a = 0; a + 2 * r <= cap_; ++a) {
                std::string where = tag + " (a,r)=(" + std::to_string(a) + "," + std::to_string(r) + ")";
                Cyc8 s0, s1, s2, s3;
                for (long j = -jmax; j <= jmax; ++j) {
                    if (j % 2 == 0) {
                        s0 += dhat(j, a, 0, r);
                        if (a + 2 * r + 2 <= cap_) {
                            s2 += dhat(j, a, 2, r);
                        }
                    } else {
                        long n = (j - 1) / 2;
                        bool n_even = n % 2 == 0;
                        Cyc8 v1 = dhat(j, a, 1, r);
                        s1 += n_even ? -v1 : v1;
                        if (a + 2 * r + 2 <= cap_) {
                            Cyc8 v3 = dhat(j, a, 3, r);
                            s3 += n_even ? v3 : -v3;
                        }
                    }
                }
                Cyc8 lhs = dx(a, r);
                detail::record(c0, lhs == s0, where);
                detail::record(c1, lhs == s1, where);
                if (a + 2 * r + 2 <= cap_) {
                    detail::record(c2, s2.is_zero(), where);
                    detail::record(c3, dx(a, r + 1) == s3, where);
                }
            }
        }
        return Report{"blowup", {c0, c1, c2, c3}};
    }

private:
    Cyc8 pair_, quad_;
    int cap_;
    Index T_;
    std::map<int, MultiSeries> base_;
    std::map<std::pair<int, long>, MultiSeries> blown_;
};

inline Report blowup_consistency(long xi_sq, int sigma, int degree_cap, const Cyc8 &pair = Cyc8(1),
                                 const Cyc8 &quad = Cyc8(0))
{
    BlowupChecker checker(pair, quad, degree_cap);
    return checker.check(xi_sq, sigma);
}

// Merges per-configuration reports check by check.
inline Report merge_reports(const std::string &suite, const std::vector<Report> &parts)
{
    Report out{suite, {}};
    for (const auto &p : parts) {
        for (std::size_t i = 0; i < p.checks.size(); ++i) {
            if (out.checks.size() <= i) {
                out.checks.push_back({p.checks[i].name, true, 0, {}, ""});
            }
            CheckResult &dst = out.checks[i];
            dst.checked += p.checks[i].checked;
            if (!p.checks[i].passed && dst.passed) {
                dst.passed = false;
                dst.detail = p.checks[i].detail;
                dst.first_failure = p.checks[i].first_failure;
            }
        }
    }
    return out;
}

// Criterion-scale sweep: xi^2 in [xi_lo, xi_hi], sigma in [-2, 2].
inline Report blowup_sweep(long xi_lo = -10, long xi_hi = -3, int sigma_lo = -2, int sigma_hi = 2,
                           int degree_cap = 8, const Cyc8 &pair = Cyc8(Rational(3, 2)),
                           const Cyc8 &quad = Cyc8(2))
{
    BlowupChecker checker(pair, quad, degree_cap);
    std::vector<Report> parts;
    for (int sigma = sigma_lo; sigma <= sigma_hi; ++sigma) {
        for (long xi_sq = xi_lo; xi_sq <= xi_hi; ++xi_sq) {
            parts.push_back(checker.check(xi_sq, sigma));
        }
    }
    return merge_reports("blowup", parts);
}

// ---------------------------------------------------------------------------
// Residue lemma: H_k = g~_{4k} Delta / phi^(2k+5) has no q^0 term.

inline QSeries h_k_series(int k, Index T)
{
    return g_tilde_4k(k, T) * delta(2, T) / pow(phi(T), 2 * k + 5);
}

inline Cyc8 h_k_residue(int k, std::optional<Index> trunc = std::nullopt)
{
    Index T = trunc.value_or(kUnit * (k + 3));
    return h_k_series(k, T).coeff(0);
}

inline Report residue_suite(int k_max = 3)
{
    Report r{"residues", {}};
    for (int k = 1; k <= k_max; ++k) {
        CheckResult c{"res H_" + std::to_string(k) + " = 0", true, 1, {}, ""};
        Cyc8 v = h_k_residue(k);
        if (!v.is_zero()) {
            std::ostringstream os;
            os << "residue " << v;
            c.passed = false;
            c.detail = os.str();
        }
        r.checks.push_back(c);
    }
    return r;
}

} // namespace wallx
