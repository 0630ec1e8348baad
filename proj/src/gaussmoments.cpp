#include "polyfock/gaussmoments.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "polyfock/spaces.hpp"

namespace polyfock {

namespace {

void require_positive_beta(double beta, const char* who) {
    if (!(beta > 0.0) || !std::isfinite(beta))
        throw std::invalid_argument(std::string(who) + ": beta must be positive");
}

} // namespace

GaussianMeasure::GaussianMeasure(double beta_) : beta(beta_) {
    require_positive_beta(beta, "GaussianMeasure");
}

double moment(int m, int n, double beta) {
    if (m < 0 || n < 0) throw std::invalid_argument("moment: negative exponent");
    require_positive_beta(beta, "moment");
    if (m != n) return 0.0; // angular integral vanishes
    if (beta == 1.0 && m <= 170) return factorial(m);
    return std::exp(log_factorial(m) - (m + 1) * std::log(beta));
}

Complex gaussian_1d(double a, Complex b) {
    if (!(a > 0.0) || !std::isfinite(a))
        throw std::invalid_argument("gaussian_1d: need a > 0");
    return std::sqrt(M_PI / a) * std::exp(b * b / (4.0 * a));
}

Complex integrate_poly_gaussian(const PolyFun& f, double beta) {
    require_positive_beta(beta, "integrate_poly_gaussian");
    Complex acc{0.0, 0.0};
    for (const auto& [idx, c] : f.terms())
        if (idx.m == idx.n) acc += c * moment(idx.m, idx.n, beta);
    return acc;
}

Complex integrate_poly_gaussian(const PolyFun& f, const GaussianMeasure& mu) {
    return integrate_poly_gaussian(f, mu.beta);
}

namespace {

// sum over the support of f and 0 <= k, j = k+m-n <= d_exp of
//   u^j v^k (k+m)! / (j! k!) * a_{m,n}
// This is the kernel expansion integrated against w^m wbar^n termwise; the
// Berezin oracle instantiates (u,v) = (z, conj z), the windowed transform
// (u,v) = (z, conj a). Terms peak near k ~ |u v| and then decay like |uv|/k,
// so contributions at the truncation boundary measure the dropped tail:
// if they are not negligible against the sum, d_exp was too small.
Complex expansion_series(const PolyFun& f, Complex u, Complex v, int d_exp,
                         const char* who) {
    const double au = std::abs(u), av = std::abs(v);
    Complex acc{0.0, 0.0};
    double boundary = 0.0;
    double peak = 0.0;

    for (const auto& [idx, alpha] : f.terms()) {
        const int m = idx.m, n = idx.n;
        for (int k = 0; k <= d_exp; ++k) {
            const int j = k + m - n;
            if (j < 0) continue;
            if (j > d_exp) break;
            if ((j > 0 && au == 0.0) || (k > 0 && av == 0.0)) continue;

            Complex term;
            if (k + m <= 170) {
                const double ratio = factorial(k + m) / factorial(j) / factorial(k);
                term = ratio * pow_int(u, j) * pow_int(v, k);
            } else {
                const double lg = log_factorial(k + m) - log_factorial(j) -
                                  log_factorial(k) +
                                  (j > 0 ? j * std::log(au) : 0.0) +
                                  (k > 0 ? k * std::log(av) : 0.0);
                term = std::exp(lg) * std::polar(1.0, j * std::arg(u) + k * std::arg(v));
            }
            const Complex contrib = alpha * term;
            acc += contrib;
            peak = std::max(peak, std::abs(contrib));
            if (k == d_exp || j == d_exp) boundary += std::abs(contrib);
        }
    }
    if (boundary > 1e-13 * std::max(peak, std::abs(acc)))
        throw TailNotConvergedError(std::string(who) + ": expansion tail above bound");
    return acc;
}

int default_d_exp(const PolyFun& f, double reach) {
    const double e = 2.718281828459045;
    return 2 * (int)std::ceil(e * reach * f.degree()) + 40;
}

} // namespace

Complex berezin_of_poly(const PolyFun& f, Complex z) {
    return berezin_of_poly(f, z, default_d_exp(f, std::abs(z)));
}

Complex berezin_of_poly(const PolyFun& f, Complex z, int d_exp) {
    if (d_exp < 0) throw std::invalid_argument("berezin_of_poly: d_exp < 0");
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::invalid_argument("berezin_of_poly: non-finite point");
    const Complex series = expansion_series(f, z, std::conj(z), d_exp, "berezin_of_poly");
    return std::exp(-std::norm(z)) * series;
}

// shared with transforms.cpp (s_phi); not part of the public header
Complex windowed_expansion_series(const PolyFun& f, Complex u, Complex v, int d_exp,
                                  const char* who) {
    return expansion_series(f, u, v, d_exp, who);
}

int windowed_default_d_exp(const PolyFun& f, double reach) {
    return default_d_exp(f, reach);
}

const QuadratureRule& gauss_hermite_nodes(int n) {
    if (n < 1 || n > 200)
        throw std::invalid_argument("gauss_hermite_nodes: n must be in 1..200");

    static std::mutex mu;
    static std::map<int, QuadratureRule> cache;
    std::scoped_lock lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;

    // Golub-Welsch: Jacobi matrix of the Hermite weight is tridiagonal with
    // zero diagonal and off-diagonal sqrt(k/2).
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd sub(n > 1 ? n - 1 : 1);
    for (int k = 1; k < n; ++k) sub(k - 1) = std::sqrt(k / 2.0);

    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    if (n == 1) {
        rule.nodes[0] = 0.0;
        rule.weights[0] = std::sqrt(M_PI);
    } else {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
        es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
        for (int i = 0; i < n; ++i) {
            rule.nodes[i] = es.eigenvalues()(i);
            const double v0 = es.eigenvectors()(0, i);
            rule.weights[i] = std::sqrt(M_PI) * v0 * v0;
        }
    }
    return cache.emplace(n, std::move(rule)).first->second;
}

} // namespace polyfock
