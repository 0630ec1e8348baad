#pragma once

#include <Eigen/Dense>
#include <vector>

#include "polyfock/polyfun.hpp"

namespace polyfock {

// Interpolation data: pairwise-distinct nodes z_j with |z_j| < 1/sqrt(2)
// and complex targets w_j.
struct PickProblem {
    std::vector<Complex> nodes;
    std::vector<Complex> targets;

    void validate() const; // throws on malformed data
};

// Entry (n,m) = (1 - w_n conj(w_m)) / (1 - 2 Re(z_n conj(z_m))).
Eigen::MatrixXcd pick_matrix(const PickProblem& p);

struct FeasibilityResult {
    bool feasible = false;
    double min_eigenvalue = 0.0;
};

// Feasible iff the Pick matrix is PSD up to -tol, by self-adjoint
// eigensolve. pivoted_cholesky_psd is the independent second opinion.
FeasibilityResult feasible(const PickProblem& p, double tol = 1e-10);
bool pivoted_cholesky_psd(const Eigen::MatrixXcd& a, double tol);

// Taylor coefficients of 1 - sqrt(1-t) = sum_{n>=1} c_n t^n; returns
// c_1..c_count. All positive, partial sums < 1.
std::vector<double> c_coeffs(int count);

// Hermitian PSD square root of I_2 - v v* with v = (conj(a), a)^T, via the
// closed form; the series route is evaluated internally as a cross-check.
Eigen::Matrix2cd sqrt_factor(Complex a);

struct BlaschkeFactor {
    Complex a{};
    Eigen::Matrix2cd sqrt_matrix;   // sqrt(I_2 - v v*), v = (conj(a), a)^T
    double prefactor_numerator = 1.0; // 1 - 2|a|^2; denominator is 1 - 2Re(z conj(a))
    static BlaschkeFactor at(Complex a);
};

// Row vector  (1-2|a|^2)/(1-2Re(z conj(a))) * (z-a, zbar-conj(a)) * sqrt_factor(a).
Eigen::RowVector2cd blaschke_eval(Complex a, Complex z);

// f_m(z) = z + sum_{n<=m} c_n zbar^{2n}: bounded by one in modulus on the
// ball yet of DA norm^2 = 1 + sum c_n^2 > 1.
struct SchurCounterexampleReport {
    double sup_modulus_bound = 0.0; // max |f_m| over boundary + interior samples
    double da_norm_sq = 0.0;
};
SchurCounterexampleReport schur_counterexample_report(int m);

// | <f, dt^n du^m K_w>_DA - dx^n dy^m f (t,u) | at w = t + iu; the section is
// differentiated in its parameter on the coefficient formula.
double da_derivative_reproducing_residual(const PolyFun& f, double t, double u,
                                          int n, int m,
                                          int degree = PolyFun::kDegreeCap);

// x^n y^m as a PolyFun through x = (z+zbar)/2, y = (z-zbar)/(2i).
PolyFun xy_monomial(int n, int m);
// Finite DA norm of x^n y^m (membership witness at finite degree).
double monomials_in_hk_check(int n, int m);

} // namespace polyfock
