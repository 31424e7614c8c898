// Walls of small type on the blown-up plane and on P1 x P1, with a check
// against the generic lattice enumerator.

#include <iostream>

#include "wallx/walls.hpp"

namespace {

void print(const char *title, const std::vector<wallx::WallClass> &walls)
{
    std::cout << title << ":";
    for (const auto &w : walls) {
        std::cout << " (" << w.coords[0] << "," << w.coords[1] << ")^2=" << w.xi_sq;
    }
    std::cout << "\n";
}

} // namespace

int main()
{
    using namespace wallx;
    for (long N = 0; N <= 6; ++N) {
        std::cout << "N = " << N << "\n";
        print("  blowup-p2 h (H, E)", walls_blowupP2_h(N));
        print("  blowup-p2 e (H, E)", walls_blowupP2_e(N));
        print("  p1xp1     (F, G)", walls_P1xP1(N));
    }
    Report r = wall_enumeration_suite(25);
    std::cout << r.text();
    return r.passed() ? 0 : 1;
}
