#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyfock/gaussmoments.hpp"
#include "polyfock/spaces.hpp"
#include "test_util.hpp"

using namespace polyfock;
using testutil::random_in_disk;

TEST_CASE("planar gaussian moments") {
    CHECK(moment(0, 0, 1.0) == 1.0);
    CHECK(moment(2, 2, 1.0) == 2.0);
    CHECK(moment(1, 2, 1.0) == 0.0);
    CHECK(moment(0, 0, 4.0) == doctest::Approx(0.25));
    CHECK(moment(3, 3, 2.0) == doctest::Approx(6.0 / 16.0));

    CHECK_THROWS_AS(moment(-1, 0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(moment(0, 0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(GaussianMeasure(-1.0), std::invalid_argument);
}

TEST_CASE("one-dimensional gaussian integral") {
    CHECK(std::abs(gaussian_1d(1.0, Complex{}) - std::sqrt(M_PI)) < 1e-15);
    CHECK(std::abs(gaussian_1d(1.0, Complex{2.0, 0.0}) - std::sqrt(M_PI) * std::exp(1.0)) <
          1e-14);
    // b = i: b^2/(4a) = -1/8
    const Complex v = gaussian_1d(2.0, Complex{0.0, 1.0});
    CHECK(std::abs(v - std::sqrt(M_PI / 2.0) * std::exp(-0.125)) < 1e-15);
    CHECK_THROWS_AS(gaussian_1d(0.0, Complex{}), std::invalid_argument);
}

TEST_CASE("termwise polynomial integration") {
    CHECK(std::abs(integrate_poly_gaussian(PolyFun::monomial(1, 1), 1.0) - 1.0) == 0.0);
    CHECK(integrate_poly_gaussian(PolyFun::monomial(3, 0), 1.0) == Complex{0.0, 0.0});
    for (double beta : {0.5, 1.0, 3.0})
        CHECK(std::abs(integrate_poly_gaussian(PolyFun::constant(1.0), beta) - 1.0 / beta) <
              1e-15);
    CHECK(std::abs(integrate_poly_gaussian(PolyFun::monomial(2, 2), GaussianMeasure(1.0)) -
                   2.0) == 0.0);
}

TEST_CASE("moment-expansion berezin oracle on fixed points") {
    // monomials w^n are fixed
    std::mt19937_64 rng(41);
    for (int n : {0, 1, 3, 6}) {
        const PolyFun f = PolyFun::monomial(n, 0);
        for (int t = 0; t < 5; ++t) {
            const Complex z = random_in_disk(rng, 1.5);
            CHECK(std::abs(berezin_of_poly(f, z) - pow_int(z, n)) <
                  1e-11 * std::max(1.0, std::abs(pow_int(z, n))));
        }
    }

    // w wbar - 1 maps to z zbar
    PolyFun h11 = PolyFun::monomial(1, 1);
    h11.add_term(0, 0, -1.0);
    for (int t = 0; t < 5; ++t) {
        const Complex z = random_in_disk(rng, 1.5);
        CHECK(std::abs(berezin_of_poly(h11, z) - Complex{std::norm(z), 0.0}) < 1e-11);
    }

    CHECK(std::abs(berezin_of_poly(PolyFun::constant(1.0), Complex{}) - 1.0) == 0.0);
}

TEST_CASE("gaussian average of the kernel section is exp(|z|^2)") {
    const PolyFun one = PolyFun::constant(1.0);
    std::mt19937_64 rng(42);
    for (int t = 0; t < 20; ++t) {
        const Complex z = random_in_disk(rng, 2.0);
        // (1/pi) int K(z,w) e^{-|w|^2} dA = e^{|z|^2}; equivalently the
        // normalized transform of 1 equals 1
        CHECK(std::abs(berezin_of_poly(one, z) - 1.0) < 1e-10);
    }
}

TEST_CASE("the expansion tail check trips when the order is too small") {
    const PolyFun f = PolyFun::monomial(4, 2);
    CHECK_THROWS_AS(berezin_of_poly(f, Complex{1.5, 0.5}, 3), TailNotConvergedError);
    CHECK_NOTHROW(berezin_of_poly(f, Complex{1.5, 0.5}, 80));
}

TEST_CASE("gauss-hermite rules") {
    const QuadratureRule& r1 = gauss_hermite_nodes(1);
    CHECK(r1.nodes[0] == doctest::Approx(0.0));
    CHECK(r1.weights[0] == doctest::Approx(std::sqrt(M_PI)));

    // degree-9 exactness at n = 5
    const QuadratureRule& r5 = gauss_hermite_nodes(5);
    double x2 = 0.0, x4 = 0.0;
    for (std::size_t i = 0; i < r5.nodes.size(); ++i) {
        x2 += r5.weights[i] * r5.nodes[i] * r5.nodes[i];
        x4 += r5.weights[i] * std::pow(r5.nodes[i], 4.0);
    }
    CHECK(std::abs(x2 - std::sqrt(M_PI) / 2.0) < 1e-12);
    CHECK(std::abs(x4 - 0.75 * std::sqrt(M_PI)) < 1e-12);

    for (int n : {2, 10, 80, 200}) {
        const QuadratureRule& r = gauss_hermite_nodes(n);
        double total = 0.0;
        for (double w : r.weights) total += w;
        CHECK(std::abs(total - std::sqrt(M_PI)) < 1e-12);
    }
    CHECK_THROWS_AS(gauss_hermite_nodes(0), std::invalid_argument);
    CHECK_THROWS_AS(gauss_hermite_nodes(201), std::invalid_argument);
}

TEST_CASE("moments agree with tensor quadrature") {
    const QuadratureRule& rule = gauss_hermite_nodes(80);
    for (double beta : {1.0, 2.5, 4.0}) {
        const double sb = std::sqrt(beta);
        for (int m : {0, 2, 5, 9}) {
            double val = 0.0;
            for (std::size_t i = 0; i < rule.nodes.size(); ++i)
                for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
                    const Complex w{rule.nodes[i] / sb, rule.nodes[j] / sb};
                    val += rule.weights[i] * rule.weights[j] *
                           std::real(pow_int(w, m) * pow_int(std::conj(w), m));
                }
            val /= (M_PI * beta);
            CHECK(std::abs(val - moment(m, m, beta)) <
                  1e-9 * std::max(1.0, moment(m, m, beta)));
        }
    }
}
