#pragma once

// Polynomials in weighted formal variables with QSeries coefficients,
// truncated by total weight and optional per-variable degree caps.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qseries.hpp"

namespace wallx {

struct Variable {
    std::string name;
    int weight = 1;
    int max_degree = -1; // -1: bounded only by the weight cap

    friend bool operator==(const Variable &, const Variable &) = default;
};

using Exponents = std::vector<int>;

class MultiSeries {
public:
    MultiSeries(std::vector<Variable> vars, int weight_cap) : vars_(std::move(vars)), weight_cap_(weight_cap)
    {
        if (weight_cap_ < 0) {
            throw std::invalid_argument("MultiSeries: negative weight cap");
        }
        for (const auto &v : vars_) {
            if (v.weight < 0 || (v.weight == 0 && v.max_degree < 0)) {
                throw std::invalid_argument("MultiSeries: variable '" + v.name +
                                            "' needs a positive weight or a degree cap");
            }
        }
    }

    // c times the empty monomial.
    static MultiSeries constant(std::vector<Variable> vars, int weight_cap, QSeries c)
    {
        MultiSeries m(std::move(vars), weight_cap);
        m.add_term(Exponents(m.vars_.size(), 0), std::move(c));
        return m;
    }

    MultiSeries unit() const { return constant(vars_, weight_cap_, QSeries::constant(Cyc8(1))); }
    MultiSeries zero() const { return MultiSeries(vars_, weight_cap_); }

    // c * (variable `var`)^power
    MultiSeries monomial(std::size_t var, int power, QSeries c) const
    {
        MultiSeries m = zero();
        Exponents e(vars_.size(), 0);
        e.at(var) = power;
        m.add_term(std::move(e), std::move(c));
        return m;
    }

    const std::vector<Variable> &variables() const { return vars_; }
    int weight_cap() const { return weight_cap_; }
    const std::map<Exponents, QSeries> &terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    std::size_t index_of(const std::string &name) const
    {
        for (std::size_t k = 0; k < vars_.size(); ++k) {
            if (vars_[k].name == name) {
                return k;
            }
        }
        throw std::out_of_range("MultiSeries: no variable named '" + name + "'");
    }

    int weight(const Exponents &e) const
    {
        int w = 0;
        for (std::size_t k = 0; k < vars_.size(); ++k) {
            w += vars_[k].weight * e[k];
        }
        return w;
    }

    // Whether a monomial survives truncation.
    bool admits(const Exponents &e) const
    {
        if (e.size() != vars_.size()) {
            return false;
        }
        for (std::size_t k = 0; k < vars_.size(); ++k) {
            if (e[k] < 0 || (vars_[k].max_degree >= 0 && e[k] > vars_[k].max_degree)) {
                return false;
            }
        }
        return weight(e) <= weight_cap_;
    }

    // Adds c to the coefficient of e; silently drops non-admitted monomials.
    void add_term(Exponents e, QSeries c)
    {
        if (!admits(e) || (c.is_zero() && c.is_exact())) {
            return;
        }
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(std::move(e), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero() && it->second.is_exact()) {
                terms_.erase(it);
            }
        }
    }

    // Coefficient of a monomial; absent monomials are exactly zero.
    QSeries coeff(const Exponents &e) const
    {
        if (!admits(e)) {
            throw std::out_of_range("MultiSeries: monomial beyond the truncation caps");
        }
        auto it = terms_.find(e);
        return it == terms_.end() ? QSeries() : it->second;
    }

    MultiSeries &operator+=(const MultiSeries &o)
    {
        check_compatible(o);
        for (const auto &[e, c] : o.terms_) {
            add_term(e, c);
        }
        return *this;
    }
    MultiSeries &operator-=(const MultiSeries &o)
    {
        check_compatible(o);
        for (const auto &[e, c] : o.terms_) {
            add_term(e, -c);
        }
        return *this;
    }
    friend MultiSeries operator+(MultiSeries a, const MultiSeries &b) { return a += b; }
    friend MultiSeries operator-(MultiSeries a, const MultiSeries &b) { return a -= b; }

    friend MultiSeries operator*(const MultiSeries &a, const MultiSeries &b)
    {
        a.check_compatible(b);
        MultiSeries r = a.zero();
        Exponents e(a.vars_.size());
        for (const auto &[ea, ca] : a.terms_) {
            for (const auto &[eb, cb] : b.terms_) {
                for (std::size_t k = 0; k < e.size(); ++k) {
                    e[k] = ea[k] + eb[k];
                }
                if (r.admits(e)) {
                    r.add_term(e, ca * cb);
                }
            }
        }
        return r;
    }
    MultiSeries &operator*=(const MultiSeries &o) { return *this = *this * o; }

    MultiSeries &operator*=(const QSeries &c)
    {
        for (auto &[e, s] : terms_) {
            s = s * c;
        }
        return *this;
    }
    friend MultiSeries operator*(MultiSeries a, const QSeries &c) { return a *= c; }
    friend MultiSeries operator*(const QSeries &c, MultiSeries a) { return a *= c; }
    friend MultiSeries operator*(MultiSeries a, const Cyc8 &c) { return a *= QSeries::constant(c); }

    // Formal partial derivative of the given order in one variable.
    MultiSeries derivative(std::size_t var, int order = 1) const
    {
        MultiSeries r = zero();
        for (const auto &[e, c] : terms_) {
            if (e[var] < order) {
                continue;
            }
            Rational falling(1);
            for (int j = 0; j < order; ++j) {
                falling *= Rational(e[var] - j);
            }
            Exponents d = e;
            d[var] -= order;
            r.add_term(std::move(d), c * falling);
        }
        return r;
    }

    template <typename F>
    MultiSeries map_coefficients(F &&fn) const
    {
        MultiSeries r = zero();
        for (const auto &[e, c] : terms_) {
            r.add_term(e, fn(c));
        }
        return r;
    }

private:
    void check_compatible(const MultiSeries &o) const
    {
        if (vars_ != o.vars_ || weight_cap_ != o.weight_cap_) {
            throw std::invalid_argument("MultiSeries: incompatible variable sets or caps");
        }
    }

    std::vector<Variable> vars_;
    int weight_cap_;
    std::map<Exponents, QSeries> terms_;
};

// exp(a) for an argument without a pure-q constant part. Computed as the
// product over the terms c*m of a of the finite sums sum_j c^j m^j / j!.
inline MultiSeries exp(const MultiSeries &a)
{
    Exponents zero_e(a.variables().size(), 0);
    if (a.terms().count(zero_e) != 0) {
        throw ConstantPartPresent("exp of a multivariate series with a constant part");
    }
    MultiSeries result = a.unit();
    for (const auto &[m, c] : a.terms()) {
        MultiSeries factor = a.unit();
        QSeries power = QSeries::constant(Cyc8(1));
        Exponents e = zero_e;
        for (long j = 1;; ++j) {
            for (std::size_t k = 0; k < e.size(); ++k) {
                e[k] += m[k];
            }
            if (!a.admits(e)) {
                break;
            }
            power = power * c * Rational(1, j);
            factor.add_term(e, power);
        }
        result *= factor;
    }
    return result;
}

} // namespace wallx
