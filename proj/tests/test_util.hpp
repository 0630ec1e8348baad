#pragma once

#include <complex>
#include <random>

#include "polyfock/polyfun.hpp"

namespace testutil {

using polyfock::Complex;
using polyfock::PolyFun;

inline Complex random_in_disk(std::mt19937_64& rng, double radius) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    return std::polar(radius * std::sqrt(unit(rng)), 2.0 * M_PI * unit(rng));
}

inline PolyFun random_poly(std::mt19937_64& rng, int degree) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    PolyFun f;
    for (int m = 0; m <= degree; ++m)
        for (int n = 0; m + n <= degree; ++n) {
            const double re = u(rng), im = u(rng);
            f.set_term(m, n, Complex{re, im});
        }
    return f;
}

} // namespace testutil
