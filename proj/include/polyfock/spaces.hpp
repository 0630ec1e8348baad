#pragma once

#include <string_view>

#include "polyfock/polyfun.hpp"

namespace polyfock {

// The three coefficient spaces:
//   SF — weight m!*n!,        functions on all of C
//   SH — weight 1,            functions on the open unit disk
//   DA — weight m!n!/(m+n)!,  functions on the open ball of radius 1/sqrt(2)
enum class SpaceKind { SF, SH, DA };

class SpaceWeight {
public:
    explicit SpaceWeight(SpaceKind kind) : kind_(kind) {}
    static SpaceWeight from_tag(std::string_view tag); // "SF" | "SH" | "DA"

    SpaceKind kind() const { return kind_; }
    std::string_view tag() const;

    double weight(int m, int n) const;
    bool in_domain(Complex w) const;
    void require_in_domain(Complex w) const; // throws DomainViolationError

private:
    SpaceKind kind_;
};

// n! as a double. Exact integers up to 18!, correctly rounded products up to
// 170!; beyond that falls back to exp(log_factorial). The exactness at small
// n is load-bearing for the adjoint checks (see operators.hpp).
double factorial(int n);
double log_factorial(int n); // lgamma(n+1)

// <f,g>_s = sum_{m,n} weight(m,n) a_{m,n}(f) conj(a_{m,n}(g)).
Complex inner(const PolyFun& f, const PolyFun& g, const SpaceWeight& s);
double norm(const PolyFun& f, const SpaceWeight& s);

// Degree-<=degree truncation of the kernel section K_w as a function of z:
// the coefficient on z^m zbar^n is conj(w)^m w^n / weight(m,n).
PolyFun kernel_section(const SpaceWeight& s, Complex w,
                       int degree = PolyFun::kDegreeCap);

// | <f, K_w>_s - f(w) |; zero in exact arithmetic once degree >= deg(f).
double reproduce_residual(const PolyFun& f, Complex w, const SpaceWeight& s,
                          int degree = PolyFun::kDegreeCap);

} // namespace polyfock
