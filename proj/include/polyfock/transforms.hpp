#pragma once

#include <map>
#include <utility>

#include "polyfock/polyfun.hpp"

namespace polyfock {

// Coefficients beta_{m,n} on the tensor Hermite-function basis
// psi_m(x) psi_n(y) of L^2(R^2). psi_m is the L^2-normalized physicists'
// Hermite function (2^m m! sqrt(pi))^{-1/2} H_m(x) exp(-x^2/2).
class HermiteCoeffs {
public:
    static constexpr int kIndexCap = PolyFun::kDegreeCap;

    HermiteCoeffs() = default;
    static HermiteCoeffs basis(int m, int n, Complex c = Complex{1.0, 0.0});

    void set_term(int m, int n, Complex c);
    void add_term(int m, int n, Complex c);
    Complex coeff(int m, int n) const;
    int max_index() const; // max of m and n over the support
    bool is_zero() const { return terms_.empty(); }
    const std::map<MonomialIndex, Complex>& terms() const { return terms_; }

private:
    std::map<MonomialIndex, Complex> terms_;
};

// Coefficients on the complex Hermite polynomials H_{p,q}(z, zbar).
class ComplexHermiteCoeffs {
public:
    ComplexHermiteCoeffs() = default;

    void set_term(int p, int q, Complex c);
    void add_term(int p, int q, Complex c);
    Complex coeff(int p, int q) const;
    bool is_zero() const { return terms_.empty(); }
    const std::map<MonomialIndex, Complex>& terms() const { return terms_; }

private:
    std::map<MonomialIndex, Complex> terms_;
};

// A(z,x) = pi^{-1/4} exp(-(z^2 + x^2)/2 + sqrt(2) z x). The pi^{-1/4}
// normalization makes <A_z, A_w>_{L^2(R)} = exp(z conj(w)) hold exactly,
// which the quadrature checks depend on.
Complex bargmann_kernel(Complex z, double x);

// The coefficient-level transform: beta_{m,n} -> beta_{m,n}/sqrt(m! n!) on
// the monomial z^m zbar^n. Unitary between finite supports.
PolyFun segal_bargmann(const HermiteCoeffs& phi);
HermiteCoeffs segal_bargmann_inverse(const PolyFun& f);

// Tensor Gauss-Hermite evaluation of the defining double integral
// int A_z(x) A_zbar(y) phi(x,y) dx dy; oracle for segal_bargmann.
Complex segal_bargmann_quadrature_oracle(const HermiteCoeffs& phi, Complex z,
                                         int n_quad = 80);

// H_{p,q}(z,zbar) = sum_k (-1)^k k! C(p,k) C(q,k) z^{p-k} zbar^{q-k}.
PolyFun complex_hermite_to_monomials(int p, int q);
// Inverse change of basis, by back-substitution down the total-degree
// filtration (the transition matrix is unitriangular).
ComplexHermiteCoeffs monomials_to_complex_hermite(const PolyFun& f);
PolyFun complex_hermite_expand(const ComplexHermiteCoeffs& c);

// Berezin transform on coefficients: expand in H_{p,q}, relabel
// H_{p,q} -> z^p zbar^q. Matches the moment-expansion integral oracle.
PolyFun berezin(const PolyFun& f);

// Coefficient-level residuals of the derivative identities satisfied by the
// Berezin transform, f read as a function of w:
//   d1:    dz B(f)  = -zbar B(f) + B(wbar f)          (and the zbar twin)
//   dn:    dz^n B(f) = sum_k (-1)^k C(n,k) zbar^k B(wbar^{n-k} f), n <= 3
//   p512:  dz B(f)  = B(dw f)                         (and the zbar twin)
//   dwbar: B(dwbar f) = B(w f) - z B(f)               (and the w twin)
struct BerezinDerivativeReport {
    double d1 = 0.0;
    double dn = 0.0;
    double p512 = 0.0;
    double dwbar = 0.0;
    double max_residual = 0.0;
};
BerezinDerivativeReport berezin_derivative_residuals(const PolyFun& f);

// (|B(f)|_{L^2(mu_beta)}, sqrt(beta/(beta-2)) |f|_{L^2(mu)}), beta > 2;
// contract lhs <= rhs.
std::pair<double, double> berezin_bound_check(const PolyFun& f, double beta);

// Residual of T^{-1}(d/dz + M_z)T = sqrt(2) X and its Y twin on all basis
// elements with indices <= degree-2.
double position_conjugation_residual(int degree);
// Residual of T(X - d/dx)T^{-1} = sqrt(2) M_z and its Y twin.
double creation_conjugation_residual(int degree);

// S_phi with exponential window phi_a(u) = exp(conj(a) u):
//   exp(-conj(a) z) * (1/pi) int exp(z conj(w)) exp(conj(a) w) f(w) e^{-|w|^2} dA.
// s_phi(f, z, z) equals eval(berezin(f), z); with a = 0 it reproduces
// analytic f.
Complex s_phi(const PolyFun& f, Complex a, Complex z);

} // namespace polyfock
