// Donaldson invariants of P2 for both first Chern classes, computed twice.

#include <cstdlib>
#include <iostream>

#include "wallx/donaldson.hpp"

int main(int argc, char **argv)
{
    using namespace wallx;
    int degree = argc > 1 ? std::atoi(argv[1]) : 12;
    int status = 0;
    for (C1 c : {C1::H, C1::Zero}) {
        InvariantTable closed = phi_p2(c, degree);
        InvariantTable walls = phi_via_wallsum(c, degree);
        std::cout << "c1 = " << c1_name(c) << "\n";
        for (const auto &[Nr, v] : closed.entries) {
            std::cout << "  Phi(H^" << Nr.first - 2 * Nr.second << " p^" << Nr.second << ") = " << v << "\n";
        }
        bool same = closed.entries == walls.entries;
        std::cout << "  wall-by-wall sum " << (same ? "agrees" : "DISAGREES") << "\n";
        status |= same ? 0 : 1;
    }
    return status;
}
