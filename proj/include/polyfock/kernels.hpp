#pragma once

#include <Eigen/Dense>
#include <string_view>

#include "polyfock/polyfun.hpp"

namespace polyfock {

enum class KernelTag {
    FockInf,      // K(z,w)  = exp(z conj(w) + conj(z) w), all of C^2
    FockN,        // K_n(z,w) = exp(z conj(w)) L^1_{n-1}(|z-w|^2), n >= 1
    Gfactor,      // G(z,w)  = exp(z conj(w) - |z|^2 - |w|^2)
    Hardy,        // 1 / ((1 - z conj(w))(1 - conj(z) w)), unit disk
    DruryArveson, // 1 / (1 - 2 Re(z conj(w))), ball of radius 1/sqrt(2)
    BidiskJ,      // de-branged two-variable kernel of the inner function j
};

struct KernelId {
    KernelTag tag = KernelTag::FockInf;
    int order = 1; // FockN only

    static KernelId from_tag(std::string_view tag, int order = 1);
    std::string_view name() const;
};

// Closed-form kernel value. FockN is evaluated through both of its closed
// forms (finite binomial sum in quad precision and Laguerre recurrence); a
// disagreement past 1e-11 relative aborts with std::runtime_error, so every
// FockN value returned has survived the cross-check.
Complex eval_kernel(const KernelId& id, Complex z, Complex w);

// Generalized Laguerre L_n^alpha and physicists' Hermite H_n by stable
// three-term recurrences.
double laguerre(int n, double alpha, double x);
double hermite_poly(int n, double x);

// The two K_n routes side by side (binomial sum, Laguerre recurrence),
// without the internal agreement assertion; for cross-checking.
std::pair<Complex, Complex> fockn_dual_values(int n, Complex z, Complex w);

// Partial sum  sum_{n=1}^{terms} K_n(z,w) / 2^{n+1}.
Complex kernel_sum_partial(Complex z, Complex w, int terms);
// | partial sum - G(z,w) K(z,w) |.
double kernel_sum_residual(Complex z, Complex w, int terms);
// Residuals for every truncation N = 1..terms (index N-1); used by the
// convergence checks.
std::vector<double> kernel_sum_residual_sequence(Complex z, Complex w, int terms);

// Rational inner function on the bidisk and its transfer-function
// realization C (I - Z A)^{-1} Z B with the unitary colligation below.
Complex eval_j(Complex z1, Complex z2);
Complex eval_j_realization(Complex z1, Complex z2);
Eigen::Matrix3cd j_colligation();

// Kernel attached to j on the diagonal (z, conj(z)); both closed forms.
Complex eval_Kj(Complex z, Complex w);          // displayed two-term form
Complex eval_Kj_quotient(Complex z, Complex w); // (1 - j(z) conj(j(w))) / (rho rho)

} // namespace polyfock
