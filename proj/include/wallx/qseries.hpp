#pragma once

// Truncated Laurent series in q^(1/48) with Cyc8 coefficients.
//
// Exponents are stored as integer indices in units of 1/48. A series knows
// the index `valid_to` through which every coefficient is exact; nothing is
// asserted above it. Only nonzero coefficients are stored, sorted by index.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"

namespace wallx {

using Index = std::int64_t;

inline constexpr Index kUnit = 48;
// valid_to of a series that is exact at every exponent (a Laurent polynomial).
inline constexpr Index kExact = std::numeric_limits<Index>::max() / 4;

inline bool is_exact_bound(Index vt) { return vt >= kExact; }

class QSeries {
public:
    struct Term {
        Index index;
        Cyc8 coeff;
    };

    // The exact zero series.
    QSeries() = default;

    // The zero series, known to vanish only through `valid_to`.
    static QSeries zero(Index valid_to) { return QSeries(valid_to, {}); }

    static QSeries monomial(Cyc8 c, Index index, Index valid_to = kExact)
    {
        std::vector<Term> t;
        if (!c.is_zero() && index <= valid_to) {
            t.push_back({index, std::move(c)});
        }
        return QSeries(valid_to, std::move(t));
    }

    static QSeries constant(Cyc8 c, Index valid_to = kExact) { return monomial(std::move(c), 0, valid_to); }

    // Terms may be unsorted and repeated; repeated indices are summed.
    static QSeries from_terms(std::vector<Term> terms, Index valid_to)
    {
        std::stable_sort(terms.begin(), terms.end(),
                         [](const Term &a, const Term &b) { return a.index < b.index; });
        std::vector<Term> out;
        for (auto &t : terms) {
            if (t.index > valid_to) {
                break;
            }
            if (!out.empty() && out.back().index == t.index) {
                out.back().coeff += t.coeff;
            } else {
                out.push_back(std::move(t));
            }
        }
        std::erase_if(out, [](const Term &t) { return t.coeff.is_zero(); });
        return QSeries(valid_to, std::move(out));
    }

    // coeffs[j] is the coefficient at index lo + j.
    static QSeries from_dense(Index lo, const std::vector<Cyc8> &coeffs, Index valid_to)
    {
        std::vector<Term> t;
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            Index e = lo + static_cast<Index>(j);
            if (e > valid_to) {
                break;
            }
            if (!coeffs[j].is_zero()) {
                t.push_back({e, coeffs[j]});
            }
        }
        return QSeries(valid_to, std::move(t));
    }

    Index valid_to() const { return valid_to_; }
    bool is_exact() const { return is_exact_bound(valid_to_); }

    // True when no nonzero coefficient exists through valid_to.
    bool is_zero() const { return terms_.empty(); }

    // Index of the leading nonzero coefficient; valid_to + 1 for a zero series.
    Index lo() const
    {
        if (!terms_.empty()) {
            return terms_.front().index;
        }
        return is_exact() ? kExact : valid_to_ + 1;
    }

    const Cyc8 &leading() const { return terms_.front().coeff; }
    const std::vector<Term> &terms() const { return terms_; }

    // Exact coefficient at index e (units of 1/48).
    Cyc8 coeff(Index e) const
    {
        if (e > valid_to_) {
            throw BeyondTruncation("coefficient at q^(" + std::to_string(e) +
                                   "/48) requested, series exact only through q^(" +
                                   std::to_string(valid_to_) + "/48)");
        }
        auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                                   [](const Term &t, Index v) { return t.index < v; });
        if (it != terms_.end() && it->index == e) {
            return it->coeff;
        }
        return Cyc8();
    }

    // Dense coefficient vector over [lo, valid_to]; empty for zero series.
    std::vector<Cyc8> dense() const
    {
        if (terms_.empty() || is_exact()) {
            std::vector<Cyc8> v;
            if (is_exact() && !terms_.empty()) {
                v.resize(static_cast<std::size_t>(terms_.back().index - lo() + 1));
                for (const auto &t : terms_) {
                    v[static_cast<std::size_t>(t.index - lo())] = t.coeff;
                }
            }
            return v;
        }
        std::vector<Cyc8> v(static_cast<std::size_t>(valid_to_ - lo() + 1));
        for (const auto &t : terms_) {
            v[static_cast<std::size_t>(t.index - lo())] = t.coeff;
        }
        return v;
    }

    QSeries truncated(Index valid_to) const
    {
        if (valid_to >= valid_to_) {
            return *this;
        }
        std::vector<Term> t;
        for (const auto &term : terms_) {
            if (term.index > valid_to) {
                break;
            }
            t.push_back(term);
        }
        return QSeries(valid_to, std::move(t));
    }

    // Multiplication by q^(shift/48).
    QSeries shifted(Index shift) const
    {
        QSeries r = *this;
        for (auto &t : r.terms_) {
            t.index += shift;
        }
        if (!is_exact()) {
            r.valid_to_ += shift;
        }
        return r;
    }

    QSeries operator-() const
    {
        QSeries r = *this;
        for (auto &t : r.terms_) {
            t.coeff = -t.coeff;
        }
        return r;
    }

    QSeries &operator*=(const Cyc8 &c)
    {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto &t : terms_) {
            t.coeff = t.coeff * c;
        }
        return *this;
    }
    QSeries &operator*=(const Rational &r) { return *this *= Cyc8(r); }

    friend QSeries operator*(QSeries a, const Cyc8 &c) { return a *= c; }
    friend QSeries operator*(const Cyc8 &c, QSeries a) { return a *= c; }
    friend QSeries operator*(QSeries a, const Rational &r) { return a *= r; }
    friend QSeries operator*(const Rational &r, QSeries a) { return a *= r; }

    friend QSeries operator+(const QSeries &a, const QSeries &b) { return combine(a, b, false); }
    friend QSeries operator-(const QSeries &a, const QSeries &b) { return combine(a, b, true); }
    QSeries &operator+=(const QSeries &b) { return *this = *this + b; }
    QSeries &operator-=(const QSeries &b) { return *this = *this - b; }

    // Cauchy product. valid_to = min(a.valid_to + b.lo, b.valid_to + a.lo).
    friend QSeries operator*(const QSeries &a, const QSeries &b)
    {
        if ((a.is_zero() && a.is_exact()) || (b.is_zero() && b.is_exact())) {
            return QSeries();
        }
        Index vt = std::min(bound_add(a.valid_to_, b.lo()), bound_add(b.valid_to_, a.lo()));
        if (a.is_zero() || b.is_zero()) {
            return zero(vt);
        }
        Index lo = a.lo() + b.lo();
        if (vt < lo) {
            return zero(vt);
        }
        Index hi = vt;
        if (is_exact_bound(vt)) {
            hi = a.terms_.back().index + b.terms_.back().index;
        }
        std::size_t na = a.terms_.size(), nb = b.terms_.size();
        if (na * nb < static_cast<std::size_t>(hi - lo + 1)) {
            // Few terms over a wide range: collect products and merge.
            std::vector<Term> t;
            t.reserve(na * nb);
            for (const auto &ta : a.terms_) {
                for (const auto &tb : b.terms_) {
                    Index e = ta.index + tb.index;
                    if (e > hi) {
                        break;
                    }
                    t.push_back({e, ta.coeff * tb.coeff});
                }
            }
            return from_terms(std::move(t), vt);
        }
        std::vector<Cyc8> acc(static_cast<std::size_t>(hi - lo + 1));
        for (const auto &ta : a.terms_) {
            for (const auto &tb : b.terms_) {
                Index e = ta.index + tb.index;
                if (e > hi) {
                    break;
                }
                acc[static_cast<std::size_t>(e - lo)].add_product(ta.coeff, tb.coeff);
            }
        }
        return from_accumulator(lo, std::move(acc), vt);
    }
    QSeries &operator*=(const QSeries &b) { return *this = *this * b; }

    friend bool operator==(const QSeries &a, const QSeries &b)
    {
        if (a.valid_to_ != b.valid_to_ || a.terms_.size() != b.terms_.size()) {
            return false;
        }
        for (std::size_t k = 0; k < a.terms_.size(); ++k) {
            if (a.terms_[k].index != b.terms_[k].index || !(a.terms_[k].coeff == b.terms_[k].coeff)) {
                return false;
            }
        }
        return true;
    }

    // Equality of coefficients through index `through` (both must be valid there).
    bool agrees_with(const QSeries &o, Index through) const
    {
        return first_difference(o, through) == kExact;
    }

    // First index <= through where the coefficients differ, kExact if none.
    Index first_difference(const QSeries &o, Index through) const
    {
        if (through > valid_to_ || through > o.valid_to_) {
            throw BeyondTruncation("comparison through q^(" + std::to_string(through) +
                                   "/48) exceeds the valid range");
        }
        std::size_t i = 0, j = 0;
        while (true) {
            Index ei = i < terms_.size() ? terms_[i].index : kExact;
            Index ej = j < o.terms_.size() ? o.terms_[j].index : kExact;
            Index e = std::min(ei, ej);
            if (e > through) {
                return kExact;
            }
            if (ei != ej || !(terms_[i].coeff == o.terms_[j].coeff)) {
                return e;
            }
            ++i;
            ++j;
        }
    }

    static Index bound_add(Index bound, Index offset)
    {
        if (is_exact_bound(bound) || is_exact_bound(offset)) {
            return kExact;
        }
        return bound + offset;
    }

private:
    QSeries(Index valid_to, std::vector<Term> terms) : valid_to_(valid_to), terms_(std::move(terms)) {}

    static QSeries from_accumulator(Index lo, std::vector<Cyc8> acc, Index vt)
    {
        std::vector<Term> t;
        for (std::size_t j = 0; j < acc.size(); ++j) {
            if (!acc[j].is_zero()) {
                t.push_back({lo + static_cast<Index>(j), std::move(acc[j])});
            }
        }
        return QSeries(vt, std::move(t));
    }

    static QSeries combine(const QSeries &a, const QSeries &b, bool subtract)
    {
        Index vt = std::min(a.valid_to_, b.valid_to_);
        std::vector<Term> out;
        out.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            Index ei = i < a.terms_.size() ? a.terms_[i].index : kExact;
            Index ej = j < b.terms_.size() ? b.terms_[j].index : kExact;
            Index e = std::min(ei, ej);
            if (e > vt) {
                break;
            }
            Cyc8 c;
            if (ei == e) {
                c = a.terms_[i++].coeff;
            }
            if (ej == e) {
                if (subtract) {
                    c -= b.terms_[j++].coeff;
                } else {
                    c += b.terms_[j++].coeff;
                }
            }
            if (!c.is_zero()) {
                out.push_back({e, std::move(c)});
            }
        }
        return QSeries(vt, std::move(out));
    }

    friend QSeries operator/(const QSeries &a, const QSeries &b);
    friend QSeries exp(const QSeries &a);

    Index valid_to_ = kExact;
    std::vector<Term> terms_;
};

// Quotient c with b*c = a through the derived range:
// lo = a.lo - b.lo, valid_to = min(a.valid_to - b.lo, b.valid_to - b.lo + c.lo).
inline QSeries operator/(const QSeries &a, const QSeries &b)
{
    if (b.is_zero()) {
        throw ZeroLeading("division by a series that vanishes through q^(" + std::to_string(b.valid_to()) +
                          "/48)");
    }
    Index blo = b.lo();
    Index clo = a.is_zero() ? (a.is_exact() ? kExact : a.valid_to() + 1 - blo) : a.lo() - blo;
    Index vt = std::min(QSeries::bound_add(a.valid_to(), -blo), QSeries::bound_add(b.valid_to(), clo - blo));
    if (a.is_zero() && a.is_exact()) {
        return QSeries();
    }
    if (is_exact_bound(vt)) {
        if (b.terms().size() != 1) {
            throw std::invalid_argument("exact quotient has infinitely many terms; truncate an operand first");
        }
        vt = kExact;
    }
    if (a.is_zero() || vt < clo) {
        return QSeries::zero(vt);
    }
    Cyc8 inv = b.leading().inverse();
    if (is_exact_bound(vt)) {
        std::vector<QSeries::Term> t;
        for (const auto &ta : a.terms()) {
            t.push_back({ta.index - blo, ta.coeff * inv});
        }
        return QSeries::from_terms(std::move(t), kExact);
    }
    // c_n = (a_{n+blo} - sum_{j>0} b_{blo+j} c_{n-j}) / b_lead
    std::vector<Cyc8> c(static_cast<std::size_t>(vt - clo + 1));
    for (const auto &ta : a.terms()) {
        Index n = ta.index - blo;
        if (n > vt) {
            break;
        }
        c[static_cast<std::size_t>(n - clo)] = ta.coeff;
    }
    const auto &bt = b.terms();
    for (Index n = clo; n <= vt; ++n) {
        Cyc8 &cn = c[static_cast<std::size_t>(n - clo)];
        for (std::size_t k = 1; k < bt.size(); ++k) {
            Index j = bt[k].index - blo;
            if (n - j < clo) {
                break;
            }
            const Cyc8 &prev = c[static_cast<std::size_t>(n - j - clo)];
            if (!prev.is_zero()) {
                cn.add_product(-bt[k].coeff, prev);
            }
        }
        if (!cn.is_zero()) {
            cn = cn * inv;
        }
    }
    return QSeries::from_accumulator(clo, std::move(c), vt);
}

// exp(a) for a with strictly positive valuation; valid through a.valid_to.
inline QSeries exp(const QSeries &a)
{
    if (a.is_zero()) {
        return QSeries::constant(Cyc8(1), a.valid_to());
    }
    if (a.lo() <= 0) {
        throw NonPositiveValuation("exp of a series with a term at q^(" + std::to_string(a.lo()) + "/48)");
    }
    if (a.is_exact()) {
        throw std::invalid_argument("exp of an exact nonzero series has infinitely many terms; truncate first");
    }
    Index vt = a.valid_to();
    // n E_n = sum_j j a_j E_{n-j}, from E' = a' E.
    std::vector<Cyc8> e(static_cast<std::size_t>(vt + 1));
    e[0] = Cyc8(1);
    const auto &at = a.terms();
    for (Index n = 1; n <= vt; ++n) {
        Cyc8 acc;
        for (const auto &t : at) {
            if (t.index > n) {
                break;
            }
            const Cyc8 &prev = e[static_cast<std::size_t>(n - t.index)];
            if (!prev.is_zero()) {
                acc.add_product(t.coeff * Rational(static_cast<long>(t.index)), prev);
            }
        }
        if (!acc.is_zero()) {
            e[static_cast<std::size_t>(n)] = acc * Rational(1, static_cast<long>(n));
        }
    }
    return QSeries::from_accumulator(0, std::move(e), vt);
}

// a^n for any integer n; negative powers divide the exact unit.
inline QSeries pow(const QSeries &a, long n)
{
    if (n < 0) {
        if (a.is_zero()) {
            throw ZeroLeading("negative power of a series vanishing through its range");
        }
        return QSeries::constant(Cyc8(1)) / pow(a, -n);
    }
    QSeries result = QSeries::constant(Cyc8(1));
    QSeries base = a;
    while (n > 0) {
        if (n & 1) {
            result *= base;
        }
        n >>= 1;
        if (n > 0) {
            base *= base;
        }
    }
    return result;
}

// q d/dq: c q^(k/48) -> (k/48) c q^(k/48).
inline QSeries q_derivative(const QSeries &a)
{
    std::vector<QSeries::Term> t;
    for (const auto &term : a.terms()) {
        if (term.index != 0) {
            t.push_back({term.index, term.coeff * Rational(static_cast<long>(term.index), kUnit)});
        }
    }
    return QSeries::from_terms(std::move(t), a.valid_to());
}

// q * dlog_q(a) = q (da/dq) / a.
inline QSeries q_log_deriv(const QSeries &a)
{
    return q_derivative(a) / a;
}

inline Cyc8 coeff_at(const QSeries &a, Index e) { return a.coeff(e); }

} // namespace wallx
