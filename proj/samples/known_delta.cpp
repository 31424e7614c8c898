// Wall-crossing term of F - 3G on P1 x P1 applied to (2G)^3.
//
// xi = F - 3G has xi^2 = -6, alpha = 2G has alpha^2 = 0 and xi/2 . alpha = 1,
// so this is a single-cycle evaluation with pairing 1 and quadratic term 0.

#include <iostream>

#include "wallx/wallcross.hpp"

int main()
{
    using namespace wallx;
    DeltaTable t = delta_eval(-6, 0, Cyc8(1), Cyc8(0), 3);
    std::cout << "delta_{F-3G}((2G)^3) = " << t.at(3, 0) << "\n";
    std::cout << "delta_{F-3G}(2G p)   = " << t.at(1, 1) << "\n";
    std::cout << "truncation used: q^(" << t.trunc << "/48)\n";
    return t.at(3, 0) == Cyc8(1) ? 0 : 1;
}
