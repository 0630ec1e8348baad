#pragma once

#include "polyfock/polyfun.hpp"

namespace polyfock {

// Shared moment-expansion core (defined in gaussmoments.cpp): the Berezin
// oracle uses (u,v) = (z, conj z), the windowed transform (u,v) = (z, conj a).
Complex windowed_expansion_series(const PolyFun& f, Complex u, Complex v, int d_exp,
                                  const char* who);
int windowed_default_d_exp(const PolyFun& f, double reach);

} // namespace polyfock
