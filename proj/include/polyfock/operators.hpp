#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "polyfock/polyfun.hpp"
#include "polyfock/spaces.hpp"

namespace polyfock {

// Coefficient-space operators. The backward shifts never divide by z or
// zbar pointwise; the removable singularity is resolved by index shifts.
//
//   Mz / Mzbar      multiplication by z / zbar
//   Dz / Dzbar      d/dz and d/dzbar
//   Rinf / Linf     backward shifts: a_{m,n} -> a_{m+1,n} resp. a_{m,n+1}
//   Iinf / Jinf     integration: a_{m,n} -> a_{m,n}/(m+1) at (m+1,n), resp. n
//   A0 / B0         radial Gleason solvers: a_{m,n} -> (m/(m+n)) a at (m-1,n)
//   Aa / Ba         z/(1-2Re(z conj(a))) resp. zbar/(1-2Re(zbar a)) as
//                   truncated geometric expansions (parameter |a| < 1/sqrt 2)
//   AaStar / BaStar their adjoints in the DA inner product (exact on
//                   polynomials, computed by weighted projection)
struct OperatorId {
    enum class Tag {
        Mz, Mzbar, Dz, Dzbar, Rinf, Linf, Iinf, Jinf,
        A0, B0, Aa, Ba, AaStar, BaStar,
    };

    Tag tag = Tag::Mz;
    Complex a{}; // only read by the Aa/Ba family

    static OperatorId from_tag(std::string_view tag, Complex a = Complex{});
    std::string_view name() const;
};

PolyFun apply(const OperatorId& id, const PolyFun& f);

struct OperatorReport {
    std::string left;
    std::string right;
    SpaceKind space = SpaceKind::SF;
    int degree = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

// max over basis pairs (z^m zbar^n, z^p zbar^q), m+n and p+q <= degree-1, of
// | <L f, g>_s - <f, R g>_s |.
OperatorReport adjoint_residual(const OperatorId& left, const OperatorId& right,
                                const SpaceWeight& s, int degree,
                                double tolerance = 1e-10);

// Coefficient distance of [Dz,Mz]f from f, and of the zbar twin; max of both.
double commutator_residual(const PolyFun& f);

// (|Rinf f|_SF^2 , |f|_SF^2 - sum_n n! |a_{0,n}|^2); contract lhs <= rhs.
std::pair<double, double> contraction_check(const PolyFun& f, const SpaceWeight& s);

// Coefficient distance between f - f(0,0) and z*(A0 f) + zbar*(B0 f).
double gleason_residual(const PolyFun& f);

// Pointwise residual of the one-point decomposition at a of the DA kernel
// section at w, using the closed-form adjoint action; max over a grid |z|<=0.6.
double da_gleason_residual(Complex w, Complex a, int degree);

// Residuals of (Rinf - lambda1) and (Linf - lambda2) on the truncated
// product-geometric function, interior indices m+n <= degree-1 only.
std::pair<double, double> eigenfunction_residual(Complex lambda1, Complex lambda2,
                                                 int degree);

// Same idea for A0/B0 on the truncation of 1/(1 - a z - b zbar); needs
// |a| + |b| < 1.
double a0b0_common_eigenfunction_residual(Complex a, Complex b, int degree);

} // namespace polyfock
