#include "polyfock/kernels.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <stdexcept>
#include <string>

#include "polyfock/spaces.hpp"

namespace polyfock {

namespace {

using quad = boost::multiprecision::cpp_bin_float_quad;

constexpr double kSingularityEps = 1e-13;

void require_finite(Complex z, const char* who) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainViolationError(std::string(who) + ": non-finite point");
}

void require_disk(Complex z, const char* who) {
    require_finite(z, who);
    if (std::abs(z) >= 1.0)
        throw DomainViolationError(std::string(who) + ": point outside the unit disk");
}

// Laguerre L^1_{n-1} factor of K_n, carried in long double so the factor
// stays accurate even near its zeros.
long double laguerre_alpha1_ld(int degree, long double x) {
    if (degree == 0) return 1.0L;
    long double prev = 1.0L, cur = 2.0L - x;
    for (int k = 1; k < degree; ++k) {
        long double next = ((2.0L * k + 2.0L - x) * cur - (k + 1.0L) * prev) / (k + 1.0L);
        prev = cur;
        cur = next;
    }
    return cur;
}

// Finite binomial form of the same factor,
// sum_{k=0}^{n-1} (-1)^k C(n,k+1) x^k / k!, in quad precision: the
// alternating sum cancels catastrophically in double (observed ~1e-5
// relative at n = 40, x = 9).
quad laguerre_factor_binomial(int n, quad x) {
    quad term = n; // k = 0: C(n,1)
    quad sum = term;
    for (int k = 1; k < n; ++k) {
        term *= -x * quad(n - k) / (quad(k) * quad(k + 1));
        sum += term;
    }
    return sum;
}

// Both routes, cross-checked; returns the recurrence value.
double fockn_factor_checked(int n, double x) {
    const long double by_recurrence = laguerre_alpha1_ld(n - 1, (long double)x);
    const quad by_binomial = laguerre_factor_binomial(n, quad(x));
    const double a = (double)by_recurrence;
    const double b = (double)by_binomial;
    const double scale = std::max({std::abs(a), std::abs(b), 1.0});
    if (std::abs(a - b) > 1e-11 * scale)
        throw std::runtime_error("FockN kernel: binomial and Laguerre forms disagree at n=" +
                                 std::to_string(n));
    return a;
}

Complex fock_inf(Complex z, Complex w) {
    return std::exp(z * std::conj(w) + std::conj(z) * w);
}

Complex g_factor(Complex z, Complex w) {
    return std::exp(z * std::conj(w) - (std::norm(z) + std::norm(w)));
}

} // namespace

KernelId KernelId::from_tag(std::string_view tag, int order) {
    if (tag == "FockInf") return {KernelTag::FockInf, 1};
    if (tag == "FockN") return {KernelTag::FockN, order};
    if (tag == "Gfactor") return {KernelTag::Gfactor, 1};
    if (tag == "Hardy") return {KernelTag::Hardy, 1};
    if (tag == "DruryArveson") return {KernelTag::DruryArveson, 1};
    if (tag == "BidiskJ") return {KernelTag::BidiskJ, 1};
    throw std::invalid_argument("KernelId: unknown tag '" + std::string(tag) + "'");
}

std::string_view KernelId::name() const {
    switch (tag) {
        case KernelTag::FockInf: return "FockInf";
        case KernelTag::FockN: return "FockN";
        case KernelTag::Gfactor: return "Gfactor";
        case KernelTag::Hardy: return "Hardy";
        case KernelTag::DruryArveson: return "DruryArveson";
        case KernelTag::BidiskJ: return "BidiskJ";
    }
    return "";
}

double laguerre(int n, double alpha, double x) {
    if (n < 0) throw std::invalid_argument("laguerre: negative degree");
    if (n == 0) return 1.0;
    double prev = 1.0, cur = 1.0 + alpha - x;
    for (int k = 1; k < n; ++k) {
        double next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

double hermite_poly(int n, double x) {
    if (n < 0) throw std::invalid_argument("hermite_poly: negative degree");
    if (n == 0) return 1.0;
    double prev = 1.0, cur = 2.0 * x;
    for (int k = 1; k < n; ++k) {
        double next = 2.0 * x * cur - 2.0 * k * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

std::pair<Complex, Complex> fockn_dual_values(int n, Complex z, Complex w) {
    if (n < 1) throw std::invalid_argument("fockn_dual_values: order must be >= 1");
    require_finite(z, "fockn_dual_values");
    require_finite(w, "fockn_dual_values");
    const double x = std::norm(z - w);
    const Complex front = std::exp(z * std::conj(w));
    const double by_binomial = (double)laguerre_factor_binomial(n, quad(x));
    const double by_recurrence = (double)laguerre_alpha1_ld(n - 1, (long double)x);
    return {front * by_binomial, front * by_recurrence};
}

Complex eval_kernel(const KernelId& id, Complex z, Complex w) {
    switch (id.tag) {
        case KernelTag::FockInf:
            require_finite(z, "FockInf");
            require_finite(w, "FockInf");
            return fock_inf(z, w);
        case KernelTag::FockN: {
            if (id.order < 1) throw std::invalid_argument("FockN: order must be >= 1");
            require_finite(z, "FockN");
            require_finite(w, "FockN");
            const double x = std::norm(z - w);
            return std::exp(z * std::conj(w)) * fockn_factor_checked(id.order, x);
        }
        case KernelTag::Gfactor:
            require_finite(z, "Gfactor");
            require_finite(w, "Gfactor");
            return g_factor(z, w);
        case KernelTag::Hardy: {
            require_disk(z, "Hardy");
            require_disk(w, "Hardy");
            const Complex a = 1.0 - z * std::conj(w);
            const Complex b = 1.0 - std::conj(z) * w;
            return 1.0 / (a * b);
        }
        case KernelTag::DruryArveson: {
            const SpaceWeight da(SpaceKind::DA);
            da.require_in_domain(z);
            da.require_in_domain(w);
            return 1.0 / (1.0 - 2.0 * std::real(z * std::conj(w)));
        }
        case KernelTag::BidiskJ:
            return eval_Kj(z, w);
    }
    throw std::invalid_argument("eval_kernel: bad kernel id");
}

Complex kernel_sum_partial(Complex z, Complex w, int terms) {
    if (terms < 1) throw std::invalid_argument("kernel_sum_partial: need terms >= 1");
    require_finite(z, "kernel_sum_partial");
    require_finite(w, "kernel_sum_partial");
    const long double x = (long double)std::norm(z - w);
    // sum_{n=1}^{N} L^1_{n-1}(x) / 2^{n+1}, recurrence carried across n
    long double prev = 1.0L, cur = 2.0L - x, pow2 = 0.25L, acc = 0.25L * prev;
    for (int n = 2; n <= terms; ++n) {
        pow2 *= 0.5L;
        acc += pow2 * cur;
        const int k = n - 1;
        long double next = ((2.0L * k + 2.0L - x) * cur - (k + 1.0L) * prev) / (k + 1.0L);
        prev = cur;
        cur = next;
    }
    return std::exp(z * std::conj(w)) * (double)acc;
}

double kernel_sum_residual(Complex z, Complex w, int terms) {
    return std::abs(kernel_sum_partial(z, w, terms) - g_factor(z, w) * fock_inf(z, w));
}

std::vector<double> kernel_sum_residual_sequence(Complex z, Complex w, int terms) {
    if (terms < 1) throw std::invalid_argument("kernel_sum_residual_sequence: need terms >= 1");
    const Complex target = g_factor(z, w) * fock_inf(z, w);
    const Complex front = std::exp(z * std::conj(w));
    const long double x = (long double)std::norm(z - w);
    std::vector<double> out;
    out.reserve(terms);
    long double prev = 1.0L, cur = 2.0L - x, pow2 = 0.25L, acc = 0.25L;
    out.push_back(std::abs(front * (double)acc - target));
    for (int n = 2; n <= terms; ++n) {
        pow2 *= 0.5L;
        acc += pow2 * cur;
        out.push_back(std::abs(front * (double)acc - target));
        const int k = n - 1;
        long double next = ((2.0L * k + 2.0L - x) * cur - (k + 1.0L) * prev) / (k + 1.0L);
        prev = cur;
        cur = next;
    }
    return out;
}

Complex eval_j(Complex z1, Complex z2) {
    require_finite(z1, "eval_j");
    require_finite(z2, "eval_j");
    const Complex den = z1 + z2 + 2.0;
    if (std::abs(den) < kSingularityEps)
        throw SingularityError("eval_j: denominator z1 + z2 + 2 vanishes");
    return (z1 + z2 + 2.0 * z1 * z2) / den;
}

Complex eval_j_realization(Complex z1, Complex z2) {
    require_finite(z1, "eval_j_realization");
    require_finite(z2, "eval_j_realization");
    Eigen::Matrix2cd a;
    a << -0.5, -0.5, -0.5, -0.5;
    const double s = 1.0 / std::sqrt(2.0);
    Eigen::Vector2cd b(s, -s);
    Eigen::RowVector2cd c(s, -s);
    Eigen::Matrix2cd zmat = Eigen::Matrix2cd::Zero();
    zmat(0, 0) = z1;
    zmat(1, 1) = z2;
    const Eigen::Matrix2cd lhs = Eigen::Matrix2cd::Identity() - zmat * a;
    if (std::abs(lhs.determinant()) < kSingularityEps)
        throw SingularityError("eval_j_realization: I - Z A is singular");
    return (c * lhs.inverse() * (zmat * b))(0, 0);
}

Eigen::Matrix3cd j_colligation() {
    const double s = 1.0 / std::sqrt(2.0);
    Eigen::Matrix3cd m;
    m << -0.5, -0.5, s,
         -0.5, -0.5, -s,
            s,   -s, 0.0;
    return m;
}

Complex eval_Kj(Complex z, Complex w) {
    require_disk(z, "eval_Kj");
    require_disk(w, "eval_Kj");
    const Complex zb = std::conj(z), wb = std::conj(w);
    const Complex den = (z + zb + 2.0) * (wb + w + 2.0);
    if (std::abs(den) < kSingularityEps)
        throw SingularityError("eval_Kj: singular prefactor");
    const Complex t1 = (z + 1.0) * (wb + 1.0) / (1.0 - z * wb);
    const Complex t2 = (zb + 1.0) * (w + 1.0) / (1.0 - zb * w);
    return 2.0 / den * (t1 + t2);
}

Complex eval_Kj_quotient(Complex z, Complex w) {
    require_disk(z, "eval_Kj_quotient");
    require_disk(w, "eval_Kj_quotient");
    const Complex jz = eval_j(z, std::conj(z));
    const Complex jw = eval_j(w, std::conj(w));
    const Complex rho = (1.0 - z * std::conj(w)) * (1.0 - std::conj(z) * w);
    return (1.0 - jz * std::conj(jw)) / rho;
}

} // namespace polyfock
