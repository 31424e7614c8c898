#pragma once

// Intersection lattices with b+ = 1 and enumeration of walls of type (N).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "errors.hpp"
#include "report.hpp"

namespace wallx {

using Coords = std::vector<long>;

// Integral symmetric form in a fixed basis. Built-in geometries only.
class Lattice {
public:
    // F^2 = G^2 = 0, F.G = 1; basis (F, G, E_1, ..., E_b).
    static Lattice p1xp1(int blowups = 0)
    {
        Lattice l("p1xp1", 2 + blowups);
        l.gram_[0][1] = l.gram_[1][0] = 1;
        for (int k = 0; k < blowups; ++k) {
            l.gram_[2 + k][2 + k] = -1;
        }
        return l;
    }

    // H^2 = 1, E_k^2 = -1; basis (H, E_1, ..., E_b).
    static Lattice blowup_p2(int blowups = 1)
    {
        Lattice l("blowup-p2", 1 + blowups);
        l.gram_[0][0] = 1;
        for (int k = 0; k < blowups; ++k) {
            l.gram_[1 + k][1 + k] = -1;
        }
        return l;
    }

    const std::string &name() const { return name_; }
    int rank() const { return static_cast<int>(gram_.size()); }
    long gram(int i, int j) const { return gram_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

    long pair(const Coords &a, const Coords &b) const
    {
        check(a);
        check(b);
        long s = 0;
        for (int i = 0; i < rank(); ++i) {
            for (int j = 0; j < rank(); ++j) {
                s += a[static_cast<std::size_t>(i)] * gram(i, j) * b[static_cast<std::size_t>(j)];
            }
        }
        return s;
    }
    long square(const Coords &a) const { return pair(a, a); }

private:
    Lattice(std::string name, int rank)
        : name_(std::move(name)), gram_(static_cast<std::size_t>(rank), std::vector<long>(static_cast<std::size_t>(rank)))
    {
    }
    void check(const Coords &a) const
    {
        if (static_cast<int>(a.size()) != rank()) {
            throw std::invalid_argument("Lattice: coordinate vector has wrong rank");
        }
    }

    std::string name_;
    std::vector<std::vector<long>> gram_;
};

struct WallClass {
    Coords coords;
    long xi_sq = 0;

    friend bool operator==(const WallClass &, const WallClass &) = default;
    friend bool operator<(const WallClass &a, const WallClass &b) { return a.coords < b.coords; }
};

inline long floor_mod(long a, long m) { return ((a % m) + m) % m; }

// xi defines a wall of type (N): -(N+3) <= xi^2 < 0 and xi^2 = -(N+3) mod 4.
// The residue formula supports the wall-crossing term exactly on this class.
inline bool defines_wall_type(long xi_sq, long N)
{
    if (N < 0 || xi_sq >= 0 || xi_sq < -(N + 3)) {
        return false;
    }
    return floor_mod(xi_sq + N + 3, 4) == 0;
}

// {(2n-1)H - 2aE : a >= n > 0} of type (N), basis (H, E).
inline std::vector<WallClass> walls_blowupP2_h(long N)
{
    std::vector<WallClass> out;
    for (long n = 1; 4 * n - 1 <= N + 3; ++n) {
        long h = 2 * n - 1;
        for (long a = n; 4 * a * a - h * h <= N + 3; ++a) {
            long sq = h * h - 4 * a * a;
            if (defines_wall_type(sq, N)) {
                out.push_back({{h, -2 * a}, sq});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// {2nH - (2a-1)E : a > n > 0} of type (N), basis (H, E).
inline std::vector<WallClass> walls_blowupP2_e(long N)
{
    std::vector<WallClass> out;
    for (long n = 1; 4 * n + 1 <= N + 3; ++n) {
        for (long a = n + 1; (2 * a - 1) * (2 * a - 1) - 4 * n * n <= N + 3; ++a) {
            long sq = 4 * n * n - (2 * a - 1) * (2 * a - 1);
            if (defines_wall_type(sq, N)) {
                out.push_back({{2 * n, -(2 * a - 1)}, sq});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// {(2n-1)F - (2m-1)G : n, m > 0} of type (N), basis (F, G).
inline std::vector<WallClass> walls_P1xP1(long N)
{
    std::vector<WallClass> out;
    for (long u = 1; 2 * u <= N + 3; u += 2) {
        for (long v = 1; 2 * u * v <= N + 3; v += 2) {
            long sq = -2 * u * v;
            if (defines_wall_type(sq, N)) {
                out.push_back({{u, -v}, sq});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Per-coordinate bound on walls of type (N) with xi.A- < 0 < xi.A+.
//
// On V = span(A-, A+) with g = A-.A+ > 0 and det D < 0, writing a = xi.A-,
// b = xi.A+ (integers, a <= -1, b >= 1):
//   (beta a^2 + 2g|a|b + alpha b^2)/|D| - xi_W^2 = -xi^2 <= N+3,
// so |a|, b <= K = (N+3)|D|/(2g) and -xi_W^2 <= N+3. The positive definite
// form M = a^2 + b^2 - xi_W^2 is then at most R = 2K^2 + N+3, which bounds
// coordinate i by sqrt(R (M^-1)_ii).
inline std::vector<long> wall_search_box(const Lattice &lat, long N, const Coords &a_minus, const Coords &a_plus)
{
    int r = lat.rank();
    Eigen::MatrixXd G(r, r);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            G(i, j) = static_cast<double>(lat.gram(i, j));
        }
    }
    long alpha = lat.square(a_minus), beta = lat.square(a_plus), g = lat.pair(a_minus, a_plus);
    long det = alpha * beta - g * g;
    if (alpha < 0 || beta < 0 || g <= 0 || det >= 0) {
        throw UnboundedSearch("wall search: endpoints must span a hyperbolic plane inside the closed positive cone");
    }
    Eigen::MatrixXd B(2, r);
    for (int j = 0; j < r; ++j) {
        double am = 0, ap = 0;
        for (int i = 0; i < r; ++i) {
            am += static_cast<double>(a_minus[static_cast<std::size_t>(i)]) * G(i, j);
            ap += static_cast<double>(a_plus[static_cast<std::size_t>(i)]) * G(i, j);
        }
        B(0, j) = am;
        B(1, j) = ap;
    }
    Eigen::Matrix2d GV;
    GV << static_cast<double>(alpha), static_cast<double>(g), static_cast<double>(g), static_cast<double>(beta);
    Eigen::MatrixXd M = B.transpose() * B - G + B.transpose() * GV.inverse() * B;
    Eigen::LLT<Eigen::MatrixXd> llt(M);
    if (llt.info() != Eigen::Success) {
        throw UnboundedSearch("wall search: sign constraints do not bound the coordinates");
    }
    Eigen::MatrixXd Minv = llt.solve(Eigen::MatrixXd::Identity(r, r));
    double K = static_cast<double>(N + 3) * static_cast<double>(-det) / (2.0 * static_cast<double>(g));
    double R = 2.0 * K * K + static_cast<double>(N + 3);
    std::vector<long> box(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        box[static_cast<std::size_t>(i)] = static_cast<long>(std::floor(std::sqrt(R * Minv(i, i)) + 1e-9)) + 1;
    }
    return box;
}

// Brute-force scan of the bounded box; parity gives the class of xi mod 2.
inline std::vector<WallClass> enumerate_walls(const Lattice &lat, const Coords &parity, long N,
                                              const Coords &a_minus, const Coords &a_plus)
{
    std::vector<long> box = wall_search_box(lat, N, a_minus, a_plus);
    int r = lat.rank();
    if (static_cast<int>(parity.size()) != r) {
        throw std::invalid_argument("enumerate_walls: parity vector has wrong rank");
    }
    std::vector<WallClass> out;
    bool shell_hit = false;
    Coords xi(static_cast<std::size_t>(r));
    auto visit = [&](auto &&self, int i) -> void {
        if (i == r) {
            for (int k = 0; k < r; ++k) {
                if (floor_mod(xi[static_cast<std::size_t>(k)] - parity[static_cast<std::size_t>(k)], 2) != 0) {
                    return;
                }
            }
            long sq = lat.square(xi);
            if (!defines_wall_type(sq, N) || lat.pair(xi, a_minus) >= 0 || lat.pair(xi, a_plus) <= 0) {
                return;
            }
            for (int k = 0; k < r; ++k) {
                if (std::abs(xi[static_cast<std::size_t>(k)]) == box[static_cast<std::size_t>(k)]) {
                    shell_hit = true;
                }
            }
            out.push_back({xi, sq});
            return;
        }
        long b = box[static_cast<std::size_t>(i)];
        for (long v = -b; v <= b; ++v) {
            xi[static_cast<std::size_t>(i)] = v;
            self(self, i + 1);
        }
    };
    visit(visit, 0);
    if (shell_hit) {
        throw std::logic_error("enumerate_walls: solution on the boundary shell; search box is not complete");
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Closed-form wall sets against the brute-force enumerator for N <= n_max.
inline Report wall_enumeration_suite(long n_max = 25)
{
    struct Family {
        std::string name;
        Lattice lat;
        Coords parity, a_minus, a_plus;
        std::vector<WallClass> (*closed)(long);
    };
    const std::vector<Family> families{
        {"blowup-p2 h", Lattice::blowup_p2(1), {1, 0}, {1, -1}, {1, 0}, walls_blowupP2_h},
        {"blowup-p2 e", Lattice::blowup_p2(1), {0, 1}, {1, -1}, {1, 0}, walls_blowupP2_e},
        {"p1xp1 f+g", Lattice::p1xp1(), {1, 1}, {1, 0}, {0, 1}, walls_P1xP1},
    };
    Report r{"walls", {}};
    for (const auto &fam : families) {
        CheckResult c{fam.name + " closed form equals enumeration", true, 0, {}, ""};
        for (long N = 0; N <= n_max; ++N) {
            ++c.checked;
            if (fam.closed(N) != enumerate_walls(fam.lat, fam.parity, N, fam.a_minus, fam.a_plus) && c.passed) {
                c.passed = false;
                c.first_failure = N;
                c.detail = "first mismatch at N = " + std::to_string(N);
            }
        }
        r.checks.push_back(c);
    }
    return r;
}

} // namespace wallx
