#pragma once

#include <compare>
#include <complex>
#include <map>

#include "polyfock/errors.hpp"

namespace polyfock {

using Complex = std::complex<double>;

// Index of the monomial z^m zbar^n.
struct MonomialIndex {
    int m = 0;
    int n = 0;
    friend auto operator<=>(const MonomialIndex&, const MonomialIndex&) = default;
};

// Finitely supported sum  f(z) = sum_{m,n} a_{m,n} z^m zbar^n.
//
// Coefficients that are exactly zero are pruned (no epsilon pruning, so
// supports never change silently). Total degree m+n is capped at kDegreeCap;
// operations that would cross the cap throw DegreeOverflowError.
// Immutable in spirit: every operation below returns a fresh value, so
// PolyFun can be shared across threads freely.
class PolyFun {
public:
    static constexpr int kDegreeCap = 60;

    PolyFun() = default;

    static PolyFun constant(Complex c);
    static PolyFun monomial(int m, int n, Complex c = Complex{1.0, 0.0});

    // Overwrites the coefficient at (m,n); an exact zero erases the term.
    void set_term(int m, int n, Complex c);
    void add_term(int m, int n, Complex c);

    Complex coeff(int m, int n) const;
    // Max total degree over the support; 0 for the zero function.
    int degree() const;
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<MonomialIndex, Complex>& terms() const { return terms_; }

private:
    std::map<MonomialIndex, Complex> terms_;
};

// z^e by binary exponentiation (e >= 0).
Complex pow_int(Complex z, int e);

// Horner-style evaluation, inner accumulation over n (in zbar), outer over m.
Complex eval(const PolyFun& f, Complex z);

// Wirtinger derivatives and real-coordinate partials (z = x + iy).
PolyFun ddz(const PolyFun& f);
PolyFun ddzbar(const PolyFun& f);
PolyFun laplacian(const PolyFun& f); // 4 * ddzbar(ddz(f))
PolyFun ddx(const PolyFun& f);       // ddz + ddzbar
PolyFun ddy(const PolyFun& f);       // i*ddz - i*ddzbar

PolyFun mul_z(const PolyFun& f);
PolyFun mul_zbar(const PolyFun& f);
PolyFun mul(const PolyFun& f, const PolyFun& g);
// Product with all terms of total degree > max_degree dropped.
PolyFun mul_truncated(const PolyFun& f, const PolyFun& g, int max_degree);
// Complex conjugate of the function: a_{m,n} -> conj(a_{n,m}).
PolyFun conj(const PolyFun& f);
PolyFun add(const PolyFun& f, const PolyFun& g);
PolyFun sub(const PolyFun& f, const PolyFun& g);
PolyFun scale(const PolyFun& f, Complex c);

// Max absolute coefficient difference over the union of supports.
double max_coeff_distance(const PolyFun& f, const PolyFun& g);

} // namespace polyfock
