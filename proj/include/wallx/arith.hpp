#pragma once

// Exact rationals (GMP-backed) and the cyclotomic ring Q(s), s^4 = -1.

#include <array>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "errors.hpp"

namespace wallx {

class Rational {
public:
    Rational() = default;
    Rational(long n) : v_(n) {}
    Rational(long num, long den) : v_(mpz_class(num), mpz_class(den))
    {
        if (den == 0) {
            throw std::domain_error("Rational: zero denominator");
        }
        v_.canonicalize();
    }
    explicit Rational(const mpz_class &n) : v_(n) {}
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    // Accepts "num/den" or a bare integer "num".
    static Rational parse(std::string_view text)
    {
        std::string s(text);
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) {
                return Rational(mpz_class(s, 10));
            }
            mpz_class num(s.substr(0, slash), 10);
            mpz_class den(s.substr(slash + 1), 10);
            if (den == 0) {
                throw std::invalid_argument("zero denominator");
            }
            return Rational(mpq_class(num, den));
        } catch (const std::invalid_argument &) {
            throw std::invalid_argument("not a rational: '" + s + "'");
        }
    }

    // Always "num/den", denominator positive, lowest terms.
    std::string str() const
    {
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    const mpq_class &mpq() const { return v_; }
    mpq_class &mpq() { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational &operator+=(const Rational &o) { v_ += o.v_; return *this; }
    Rational &operator-=(const Rational &o) { v_ -= o.v_; return *this; }
    Rational &operator*=(const Rational &o) { v_ *= o.v_; return *this; }
    Rational &operator/=(const Rational &o)
    {
        if (o.is_zero()) {
            throw std::domain_error("Rational: division by zero");
        }
        v_ /= o.v_;
        return *this;
    }
    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

    friend bool operator==(const Rational &a, const Rational &b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

private:
    mpq_class v_;
};

inline Rational factorial(long n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

// c0 + c1 s + c2 s^2 + c3 s^3 with s a fixed primitive 8th root of unity.
// s^2 plays the role of i, s the role of sqrt(i).
class Cyc8 {
public:
    Cyc8() = default;
    Cyc8(long n) { c_[0] = Rational(n); }
    Cyc8(Rational r) { c_[0] = std::move(r); }
    Cyc8(Rational c0, Rational c1, Rational c2, Rational c3)
        : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)}
    {
    }

    static Cyc8 s() { return Cyc8(0, 1, 0, 0); }
    static Cyc8 i() { return Cyc8(0, 0, 1, 0); }

    const Rational &operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
    Rational &operator[](int k) { return c_[static_cast<std::size_t>(k)]; }

    bool is_zero() const
    {
        return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
    }
    bool is_rational() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }

    Cyc8 operator-() const { return Cyc8(-c_[0], -c_[1], -c_[2], -c_[3]); }
    Cyc8 &operator+=(const Cyc8 &o)
    {
        for (std::size_t k = 0; k < 4; ++k) {
            if (!o.c_[k].is_zero()) {
                c_[k] += o.c_[k];
            }
        }
        return *this;
    }
    Cyc8 &operator-=(const Cyc8 &o)
    {
        for (std::size_t k = 0; k < 4; ++k) {
            if (!o.c_[k].is_zero()) {
                c_[k] -= o.c_[k];
            }
        }
        return *this;
    }
    Cyc8 &operator*=(const Rational &r)
    {
        for (auto &c : c_) {
            if (!c.is_zero()) {
                c *= r;
            }
        }
        return *this;
    }

    // *this += a * b, reducing s^4 = -1. Hot loop of every series product.
    void add_product(const Cyc8 &a, const Cyc8 &b)
    {
        thread_local mpq_class tmp;
        for (int i = 0; i < 4; ++i) {
            const mpq_class &ai = a.c_[static_cast<std::size_t>(i)].mpq();
            if (sgn(ai) == 0) {
                continue;
            }
            for (int j = 0; j < 4; ++j) {
                const mpq_class &bj = b.c_[static_cast<std::size_t>(j)].mpq();
                if (sgn(bj) == 0) {
                    continue;
                }
                mpq_mul(tmp.get_mpq_t(), ai.get_mpq_t(), bj.get_mpq_t());
                int k = i + j;
                mpq_class &dst = c_[static_cast<std::size_t>(k & 3)].mpq();
                if (k < 4) {
                    mpq_add(dst.get_mpq_t(), dst.get_mpq_t(), tmp.get_mpq_t());
                } else {
                    mpq_sub(dst.get_mpq_t(), dst.get_mpq_t(), tmp.get_mpq_t());
                }
            }
        }
    }

    friend Cyc8 operator+(Cyc8 a, const Cyc8 &b) { return a += b; }
    friend Cyc8 operator-(Cyc8 a, const Cyc8 &b) { return a -= b; }
    friend Cyc8 operator*(const Cyc8 &a, const Cyc8 &b)
    {
        Cyc8 r;
        r.add_product(a, b);
        return r;
    }
    friend Cyc8 operator*(Cyc8 a, const Rational &r) { return a *= r; }
    friend Cyc8 operator*(const Rational &r, Cyc8 a) { return a *= r; }

    // Galois conjugate s -> s^k for odd k.
    Cyc8 conjugate(int k) const
    {
        Cyc8 r;
        for (int j = 0; j < 4; ++j) {
            if (c_[static_cast<std::size_t>(j)].is_zero()) {
                continue;
            }
            int e = (j * k) & 7;
            if (e < 4) {
                r.c_[static_cast<std::size_t>(e)] += c_[static_cast<std::size_t>(j)];
            } else {
                r.c_[static_cast<std::size_t>(e - 4)] -= c_[static_cast<std::size_t>(j)];
            }
        }
        return r;
    }

    Cyc8 inverse() const
    {
        if (is_zero()) {
            throw std::domain_error("Cyc8: inverse of zero");
        }
        if (is_rational()) {
            return Cyc8(Rational(1) / c_[0]);
        }
        Cyc8 others = conjugate(3) * conjugate(5) * conjugate(7);
        Cyc8 norm = *this * others;
        return others * (Rational(1) / norm.c_[0]);
    }

    friend Cyc8 operator/(const Cyc8 &a, const Cyc8 &b) { return a * b.inverse(); }

    friend bool operator==(const Cyc8 &a, const Cyc8 &b) { return a.c_ == b.c_; }

    friend std::ostream &operator<<(std::ostream &os, const Cyc8 &a)
    {
        if (a.is_rational()) {
            return os << a.c_[0];
        }
        os << "[" << a.c_[0] << ", " << a.c_[1] << ", " << a.c_[2] << ", " << a.c_[3] << "]";
        return os;
    }

private:
    std::array<Rational, 4> c_;
};

// s^m, reduced with s^8 = 1.
inline Cyc8 sqrt_i_pow(std::int64_t m)
{
    std::int64_t e = ((m % 8) + 8) % 8;
    Cyc8 r;
    r[static_cast<int>(e & 3)] = e < 4 ? Rational(1) : Rational(-1);
    return r;
}

inline Rational rational_part(const Cyc8 &a)
{
    if (!a.is_rational()) {
        throw NotRational("expected a rational value, got " + [&] {
            std::string s = "[";
            for (int k = 0; k < 4; ++k) {
                s += a[k].str() + (k < 3 ? ", " : "]");
            }
            return s;
        }());
    }
    return a[0];
}

} // namespace wallx
