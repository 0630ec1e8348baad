#pragma once

#include <vector>

#include "polyfock/polyfun.hpp"

namespace polyfock {

// Gaussian density (beta/pi) exp(-beta |w|^2) against planar area measure.
struct GaussianMeasure {
    explicit GaussianMeasure(double beta_);
    double beta;
};

// (1/pi) * integral of w^m conj(w)^n exp(-beta |w|^2) dA(w)
//   = delta_{m,n} * m! / beta^(m+1), computed in log space.
double moment(int m, int n, double beta);

// integral over R of exp(-a t^2 + b t) dt = sqrt(pi/a) exp(b^2 / (4a)).
Complex gaussian_1d(double a, Complex b);

// Term-by-term Gaussian integral of f read as a function of w:
// sum a_{m,n} moment(m, n, beta). Linear in f.
Complex integrate_poly_gaussian(const PolyFun& f, double beta);
Complex integrate_poly_gaussian(const PolyFun& f, const GaussianMeasure& mu);

// Moment-expansion oracle for the Berezin transform:
//   exp(-|z|^2) * (1/pi) int exp(z conj(w) + conj(z) w) f(w) exp(-|w|^2) dA(w)
// with the exponential kernel expanded to order d_exp and integrated termwise.
// Throws TailNotConvergedError if the last expansion shell is not negligible.
Complex berezin_of_poly(const PolyFun& f, Complex z);
Complex berezin_of_poly(const PolyFun& f, Complex z, int d_exp);

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights; // for integrals against exp(-x^2) dx
};

// Golub-Welsch nodes/weights for the Hermite weight, cached per n (1..200).
const QuadratureRule& gauss_hermite_nodes(int n);

} // namespace polyfock
