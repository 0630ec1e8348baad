#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "polyfock/kernels.hpp"
#include "test_util.hpp"

using namespace polyfock;
using testutil::random_in_disk;

namespace {

using CLD = std::complex<long double>;

// the infinite-order kernel in long double, for the finite-difference checks
CLD kernel_ld(CLD z, CLD w) { return std::exp(z * std::conj(w) + std::conj(z) * w); }

// Wirtinger d/dz via central differences: (d/dx - i d/dy)/2
template <typename F>
CLD fd_dz(F f, CLD z, long double h) {
    const CLD i{0.0L, 1.0L};
    return (f(z + h) - f(z - h)) / (4.0L * h) - i * (f(z + i * h) - f(z - i * h)) / (4.0L * h);
}

template <typename F>
CLD fd_laplacian(F f, CLD z, long double h) {
    const CLD i{0.0L, 1.0L};
    return (f(z + h) + f(z - h) + f(z + i * h) + f(z - i * h) - 4.0L * f(z)) / (h * h);
}

} // namespace

TEST_CASE("closed-form kernel values") {
    const KernelId kinf{KernelTag::FockInf, 1};
    CHECK(std::abs(eval_kernel(kinf, Complex{0.37, -1.2}, Complex{0.0, 0.0}) - 1.0) == 0.0);

    // order 1 reduces to exp(z conj w)
    const KernelId k1{KernelTag::FockN, 1};
    const Complex z{0.4, 0.8}, w{-0.2, 0.5};
    CHECK(std::abs(eval_kernel(k1, z, w) - std::exp(z * std::conj(w))) < 1e-14);

    const KernelId da{KernelTag::DruryArveson, 1};
    CHECK(eval_kernel(da, Complex{0.5, 0.0}, Complex{0.5, 0.0}).real() ==
          doctest::Approx(2.0));

    // K = F conj(F) with F the order-1 kernel
    std::mt19937_64 rng(31);
    for (int t = 0; t < 25; ++t) {
        const Complex a = random_in_disk(rng, 1.5), b = random_in_disk(rng, 1.5);
        const Complex f1 = std::exp(a * std::conj(b));
        CHECK(std::abs(eval_kernel(kinf, a, b) - f1 * std::conj(f1)) <
              1e-13 * std::abs(eval_kernel(kinf, a, b)));
    }
}

TEST_CASE("laguerre and hermite recurrences") {
    // L_n^1(0) = n+1, against the explicit binomial value
    for (int n = 0; n <= 25; ++n) CHECK(laguerre(n, 1.0, 0.0) == doctest::Approx(n + 1.0));
    CHECK(laguerre(0, 1.0, 3.7) == 1.0);

    for (double x : {-1.3, 0.0, 0.8, 2.5}) {
        CHECK(hermite_poly(2, x) == doctest::Approx(4.0 * x * x - 2.0));
        CHECK(hermite_poly(3, x) == doctest::Approx(8.0 * x * x * x - 12.0 * x));
    }
    CHECK_THROWS_AS(laguerre(-1, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("order-n kernels: binomial and recurrence routes agree") {
    std::mt19937_64 rng(32);
    for (int t = 0; t < 30; ++t) {
        const Complex z = random_in_disk(rng, 1.5), w = random_in_disk(rng, 1.5);
        for (int n : {1, 2, 7, 23, 40}) {
            const auto [bin, lag] = fockn_dual_values(n, z, w);
            const double scale = std::max({std::abs(bin), std::abs(lag), 1e-30});
            CHECK(std::abs(bin - lag) / scale < 1e-11);
        }
    }
    // order 2 against the hand expansion e^{z conj w} (2 - |z-w|^2)
    const Complex z{0.9, -0.3}, w{0.1, 0.4};
    const Complex direct = std::exp(z * std::conj(w)) * (2.0 - std::norm(z - w));
    CHECK(std::abs(eval_kernel(KernelId{KernelTag::FockN, 2}, z, w) - direct) < 1e-13);
    CHECK_THROWS_AS(eval_kernel(KernelId{KernelTag::FockN, 0}, z, w), std::invalid_argument);
}

TEST_CASE("kernel sum against the product G*K") {
    // diagonal: G(z,z) K(z,z) = e^{|z|^2}; truncation error at N terms is
    // exactly (N+2)/2^(N+1) there since the Laguerre factors collapse to n
    const Complex z{0.6, -1.1};
    const Complex limit = std::exp(std::norm(z));
    const Complex p30 = kernel_sum_partial(z, z, 30);
    const double expected_gap = 32.0 / std::pow(2.0, 31.0) * std::exp(std::norm(z));
    CHECK(std::abs(p30 - limit) == doctest::Approx(expected_gap).epsilon(1e-10));

    // z = w = 0: partial sums of n/2^(n+1)
    CHECK(std::abs(kernel_sum_partial(Complex{}, Complex{}, 30) - 1.0) ==
          doctest::Approx(32.0 / std::pow(2.0, 31.0)).epsilon(1e-12));

    // deep truncations land within 1e-9 everywhere on the test grid
    std::mt19937_64 rng(33);
    for (int t = 0; t < 15; ++t) {
        const Complex a = random_in_disk(rng, 1.5), b = random_in_disk(rng, 1.5);
        CHECK(kernel_sum_residual(a, b, 60) < 1e-9);
        // overall decay: late truncations beat the first one
        CHECK(kernel_sum_residual(a, b, 40) < kernel_sum_residual(a, b, 1));
    }

    const auto seq = kernel_sum_residual_sequence(Complex{0.3, 0.0}, Complex{0.1, 0.0}, 60);
    CHECK(seq.size() == 60);
    CHECK(seq.back() < 1e-12);
}

TEST_CASE("hermitian symmetry across all kernels") {
    std::mt19937_64 rng(34);
    struct Entry {
        KernelId id;
        double radius;
    } entries[] = {
        {{KernelTag::FockInf, 1}, 1.5}, {{KernelTag::FockN, 4}, 1.5},
        {{KernelTag::Gfactor, 1}, 1.5}, {{KernelTag::Hardy, 1}, 0.9},
        {{KernelTag::DruryArveson, 1}, 0.65}, {{KernelTag::BidiskJ, 1}, 0.9},
    };
    for (const auto& e : entries) {
        for (int t = 0; t < 100; ++t) {
            const Complex z = random_in_disk(rng, e.radius);
            const Complex w = random_in_disk(rng, e.radius);
            const Complex zw = eval_kernel(e.id, z, w);
            const Complex wz = eval_kernel(e.id, w, z);
            CHECK(std::abs(zw - std::conj(wz)) < 1e-12 * std::max(1.0, std::abs(zw)));
        }
    }
}

TEST_CASE("derivative identities by finite differences") {
    // rounding dominates high-order stencils at tiny steps, so each order
    // uses its own step; evaluation in long double keeps the noise down
    const CLD z{0.55L, -0.35L}, w{0.6L, 0.4L};
    auto fz = [&](CLD zz) { return kernel_ld(zz, w); };
    const CLD k = kernel_ld(z, w);
    const CLD wb = std::conj(w);

    const CLD d1 = fd_dz(fz, z, 1e-5L);
    CHECK(std::abs(std::complex<double>(d1 - wb * k)) < 1e-6);

    auto dz_once = [&](CLD zz) { return fd_dz(fz, zz, 1e-4L); };
    const CLD d2 = fd_dz(dz_once, z, 1e-4L);
    CHECK(std::abs(std::complex<double>(d2 - wb * wb * k)) < 1e-6);

    auto dz_twice = [&](CLD zz) { return fd_dz(dz_once, zz, 1e-3L); };
    const CLD d3 = fd_dz(dz_twice, z, 1e-3L);
    CHECK(std::abs(std::complex<double>(d3 - wb * wb * wb * k)) < 1e-6);
}

TEST_CASE("laplacian identities by finite differences") {
    const CLD z{0.5L, 0.25L}, w{-0.3L, 0.45L};
    auto fz = [&](CLD zz) { return kernel_ld(zz, w); };
    const CLD k = kernel_ld(z, w);

    const CLD lap = fd_laplacian(fz, z, 1e-4L);
    const CLD expect = 4.0L * std::norm(w) * k;
    CHECK(std::abs(std::complex<double>(lap - expect)) / std::abs(std::complex<double>(expect)) <
          1e-4);

    // double laplacian: 16 |1 + conj(w) z|^2 K
    auto lap_z = [&](CLD ww) {
        auto g = [&](CLD zz) { return kernel_ld(zz, ww); };
        return fd_laplacian(g, z, 1e-3L);
    };
    const CLD laplap = fd_laplacian(lap_z, w, 1e-3L);
    const CLD expect2 = 16.0L * std::norm(1.0L + std::conj(w) * z) * k;
    CHECK(std::abs(std::complex<double>(laplap - expect2)) /
              std::abs(std::complex<double>(expect2)) <
          1e-4);
}

TEST_CASE("bidisk inner function") {
    CHECK(std::abs(eval_j(Complex{}, Complex{})) == 0.0);

    // diagonal value at real z = 0.5: (Re z + |z|^2)/(1 + Re z)
    CHECK(eval_j(Complex{0.5, 0.0}, Complex{0.5, 0.0}).real() == doctest::Approx(0.5));

    // unimodular boundary values on the diagonal (z, conj z)
    for (int k = 0; k < 64; ++k) {
        const double th = 2.0 * M_PI * (k + 0.5) / 64.0;
        const Complex zb = std::polar(1.0, th);
        CHECK(std::abs(eval_j(zb, std::conj(zb)) - 1.0) < 1e-12);
    }

    CHECK_THROWS_AS(eval_j(Complex{-1.0, 0.0}, Complex{-1.0, 0.0}), SingularityError);

    // realization agrees with the rational form; the colligation is unitary
    std::mt19937_64 rng(35);
    for (int t = 0; t < 50; ++t) {
        const Complex z1 = random_in_disk(rng, 0.95), z2 = random_in_disk(rng, 0.95);
        CHECK(std::abs(eval_j(z1, z2) - eval_j_realization(z1, z2)) < 1e-12);
    }
    const Eigen::Matrix3cd m = j_colligation();
    CHECK((m * m.adjoint() - Eigen::Matrix3cd::Identity()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("kernel attached to the inner function") {
    CHECK(eval_Kj(Complex{}, Complex{}).real() == doctest::Approx(1.0));
    CHECK(std::abs(eval_Kj(Complex{}, Complex{}).imag()) < 1e-15);

    std::mt19937_64 rng(36);
    for (int t = 0; t < 50; ++t) {
        const Complex z = random_in_disk(rng, 0.9), w = random_in_disk(rng, 0.9);
        CHECK(std::abs(eval_Kj(z, w) - eval_Kj_quotient(z, w)) < 1e-11);
    }

    // real and positive on the real diagonal
    for (double x : {-0.8, -0.3, 0.0, 0.4, 0.9}) {
        const Complex v = eval_Kj(Complex{x, 0.0}, Complex{x, 0.0});
        CHECK(v.imag() == doctest::Approx(0.0).epsilon(1e-14));
        CHECK(v.real() > 0.0);
    }

    CHECK_THROWS_AS(eval_Kj(Complex{1.1, 0.0}, Complex{}), DomainViolationError);
}

TEST_CASE("kernel domains are enforced") {
    CHECK_THROWS_AS(eval_kernel(KernelId{KernelTag::Hardy, 1}, Complex{1.0, 0.0}, Complex{}),
                    DomainViolationError);
    CHECK_THROWS_AS(
        eval_kernel(KernelId{KernelTag::DruryArveson, 1}, Complex{0.8, 0.0}, Complex{}),
        DomainViolationError);
    CHECK_THROWS_AS(KernelId::from_tag("Nope"), std::invalid_argument);
}
