#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyfock/exact.hpp"
#include "polyfock/pick.hpp"
#include "polyfock/spaces.hpp"
#include "test_util.hpp"

using namespace polyfock;
using testutil::random_in_disk;
using testutil::random_poly;

TEST_CASE("pick matrix entries") {
    PickProblem p;
    p.nodes = {Complex{}};
    p.targets = {Complex{}};
    CHECK(pick_matrix(p)(0, 0) == Complex{1.0, 0.0});

    p.nodes = {Complex{0.5, 0.0}};
    p.targets = {Complex{1.5, 0.0}};
    CHECK(pick_matrix(p)(0, 0).real() < 0.0); // |w| > 1 over a positive denominator

    p.nodes = {Complex{}, Complex{0.5, 0.0}};
    p.targets = {Complex{}, Complex{}};
    const Eigen::MatrixXcd m = pick_matrix(p);
    CHECK(m(0, 0) == Complex{1.0, 0.0});
    CHECK(m(0, 1) == Complex{1.0, 0.0});
    CHECK(m(1, 0) == Complex{1.0, 0.0});
    CHECK(m(1, 1).real() == doctest::Approx(2.0));

    // hermitian for arbitrary data
    std::mt19937_64 rng(71);
    PickProblem q;
    for (int i = 0; i < 5; ++i) {
        q.nodes.push_back(random_in_disk(rng, 0.69));
        q.targets.push_back(random_in_disk(rng, 2.0));
    }
    const Eigen::MatrixXcd g = pick_matrix(q);
    CHECK((g - g.adjoint()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("feasibility verdicts") {
    std::mt19937_64 rng(72);

    // zero targets are always feasible: the matrix is a kernel gram matrix
    PickProblem zeros;
    for (int i = 0; i < 6; ++i) {
        zeros.nodes.push_back(random_in_disk(rng, 0.65));
        zeros.targets.push_back(Complex{});
    }
    CHECK(feasible(zeros).feasible);

    PickProblem two;
    two.nodes = {Complex{}, Complex{0.5, 0.0}};
    two.targets = {Complex{}, Complex{}};
    const auto res = feasible(two);
    CHECK(res.feasible);
    CHECK(res.min_eigenvalue == doctest::Approx((3.0 - std::sqrt(5.0)) / 2.0));

    // single node: feasible iff the target is within the closed unit disk
    for (int t = 0; t < 50; ++t) {
        PickProblem one;
        one.nodes = {random_in_disk(rng, 0.7)};
        std::uniform_real_distribution<double> mag(0.0, 2.0);
        double r = mag(rng);
        if (std::abs(r - 1.0) < 0.01) r += 0.05;
        one.targets = {std::polar(r, 2.0 * M_PI * mag(rng))};
        CHECK(feasible(one).feasible == (r <= 1.0));
    }

    // invariant under a common rotation of the targets
    PickProblem rot = zeros;
    for (int i = 0; i < 6; ++i) rot.targets[i] = random_in_disk(rng, 0.9);
    const Eigen::MatrixXcd before = pick_matrix(rot);
    for (auto& w : rot.targets) w *= std::polar(1.0, 1.234);
    CHECK((pick_matrix(rot) - before).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("problem validation") {
    PickProblem p;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p.nodes = {Complex{0.8, 0.0}};
    p.targets = {Complex{}};
    CHECK_THROWS_AS(p.validate(), DomainViolationError);
    p.nodes = {Complex{0.1, 0.0}, Complex{0.1, 0.0}};
    p.targets = {Complex{}, Complex{}};
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p.nodes = {Complex{0.1, 0.0}};
    CHECK_THROWS_AS(p.validate(), std::invalid_argument); // length mismatch
}

TEST_CASE("pivoted cholesky agrees with the eigensolver verdict") {
    std::mt19937_64 rng(73);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    int psd_seen = 0, indef_seen = 0;
    for (int t = 0; t < 60; ++t) {
        const int n = 2 + int(t % 7);
        Eigen::MatrixXcd b(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) b(i, j) = Complex{u(rng), u(rng)};
        Eigen::MatrixXcd a = b * b.adjoint(); // PSD by construction
        if (t % 2 == 1) a -= 0.3 * Eigen::MatrixXcd::Identity(n, n);

        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a, Eigen::EigenvaluesOnly);
        const bool eig_psd = es.eigenvalues().minCoeff() >= -1e-10;
        (eig_psd ? psd_seen : indef_seen) += 1;
        CHECK(pivoted_cholesky_psd(a, 1e-9) == eig_psd);
    }
    CHECK(psd_seen > 10);
    CHECK(indef_seen > 10);

    // indefinite despite a harmless diagonal
    Eigen::MatrixXcd offdiag(2, 2);
    offdiag << 0.0, 1.0, 1.0, 0.0;
    CHECK(!pivoted_cholesky_psd(offdiag, 1e-9));
    Eigen::MatrixXcd neg(1, 1);
    neg << -1.0;
    CHECK(!pivoted_cholesky_psd(neg, 1e-9));
}

TEST_CASE("series coefficients of 1 - sqrt(1-t)") {
    const std::vector<double> c = c_coeffs(60);
    CHECK(c[0] == doctest::Approx(0.5));
    CHECK(c[1] == doctest::Approx(0.125));
    CHECK(c[2] == doctest::Approx(1.0 / 16.0));

    // binomial-series oracle, exact rational arithmetic
    const auto exact_c = exact::c_coeffs_exact(60);
    for (int n = 0; n < 60; ++n)
        CHECK(c[n] == doctest::Approx(exact::to_double(exact_c[n])).epsilon(1e-14));

    double partial = 0.0;
    for (double v : c) {
        CHECK(v > 0.0);
        partial += v;
        CHECK(partial < 1.0);
    }
    // the tail decays like 1/sqrt(pi N): about 0.0727 after 60 terms
    CHECK(partial == doctest::Approx(1.0 - 0.0727).epsilon(2e-3));

    // convergence to 1 from below, seen at a depth where the tail is < 0.01
    const std::vector<double> deep = c_coeffs(4000);
    double total = 0.0;
    for (double v : deep) total += v;
    CHECK(total > 0.99);
    CHECK(total < 1.0);
}

TEST_CASE("matrix square root factor") {
    CHECK((sqrt_factor(Complex{}) - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() ==
          0.0);

    // eigenvalue sqrt(1-q) along v, eigenvalue 1 across it
    const Complex a{0.5, 0.0};
    const Eigen::Matrix2cd s = sqrt_factor(a);
    Eigen::Vector2cd v;
    v << std::conj(a), a;
    CHECK((s * v - std::sqrt(0.5) * v).cwiseAbs().maxCoeff() < 1e-15);

    std::mt19937_64 rng(74);
    for (int t = 0; t < 20; ++t) {
        const Complex b = random_in_disk(rng, 0.65);
        const Eigen::Matrix2cd m = sqrt_factor(b);
        Eigen::Matrix2cd vvstar;
        const Complex bb = std::conj(b);
        vvstar << std::norm(b), bb * bb, b * b, std::norm(b);
        CHECK((m * m - (Eigen::Matrix2cd::Identity() - vvstar)).cwiseAbs().maxCoeff() <
              1e-12);
        // hermitian PSD, commutes with vv*
        CHECK((m - m.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(m, Eigen::EigenvaluesOnly);
        CHECK(es.eigenvalues().minCoeff() >= -1e-14);
        CHECK((m * vvstar - vvstar * m).cwiseAbs().maxCoeff() < 1e-14);
    }
    CHECK_THROWS_AS(sqrt_factor(Complex{0.75, 0.0}), DomainViolationError);
}

TEST_CASE("row factor with a prescribed zero") {
    const Complex a{0.3, -0.2};
    CHECK(blaschke_eval(a, a).cwiseAbs().maxCoeff() == 0.0);

    const BlaschkeFactor bf = BlaschkeFactor::at(a);
    CHECK(bf.prefactor_numerator == doctest::Approx(1.0 - 2.0 * std::norm(a)));
    CHECK((bf.sqrt_matrix - sqrt_factor(a)).cwiseAbs().maxCoeff() == 0.0);

    const Complex z{0.4, 0.1};
    const Eigen::RowVector2cd at0 = blaschke_eval(Complex{}, z);
    CHECK(std::abs(at0(0) - z) < 1e-15);
    CHECK(std::abs(at0(1) - std::conj(z)) < 1e-15);

    // the kernel-section identity behind the factorization, via the
    // closed-form adjoint action
    std::mt19937_64 rng(75);
    for (int t = 0; t < 30; ++t) {
        const Complex aa = random_in_disk(rng, 0.5);
        const Complex b = random_in_disk(rng, 0.5);
        const Complex zz = random_in_disk(rng, 0.5);
        auto k = [&](Complex x, Complex y) {
            return 1.0 / (1.0 - 2.0 * std::real(x * std::conj(y)));
        };
        const Complex denom = 1.0 - 2.0 * std::real(b * std::conj(aa));
        const Complex lhs = k(zz, b) - k(aa, b);
        const Complex rhs = (zz - aa) * std::conj(b) / denom * k(zz, b) +
                            (std::conj(zz) - std::conj(aa)) * b / denom * k(zz, b);
        CHECK(std::abs(lhs - rhs) < 1e-10);
    }
}

TEST_CASE("bounded-but-not-multiplier counterexample") {
    const auto r1 = schur_counterexample_report(1);
    CHECK(r1.da_norm_sq == doctest::Approx(1.25));
    CHECK(r1.sup_modulus_bound <= 1.0);
    // the max sits near the positive real boundary point
    CHECK(r1.sup_modulus_bound == doctest::Approx(1.0 / std::sqrt(2.0) + 0.25).epsilon(1e-6));

    for (int m : {5, 20}) {
        const auto r = schur_counterexample_report(m);
        CHECK(r.sup_modulus_bound <= 1.0);
        CHECK(r.da_norm_sq > 1.25 - 1e-15);
        CHECK(r.da_norm_sq < 1.5);
    }
    CHECK_THROWS_AS(schur_counterexample_report(0), std::invalid_argument);
    CHECK_THROWS_AS(schur_counterexample_report(31), std::invalid_argument);
}

TEST_CASE("derivative reproducing in the weighted ball space") {
    // zeroth derivative reduces to plain reproduction
    std::mt19937_64 rng(76);
    for (int t = 0; t < 5; ++t) {
        const PolyFun f = random_poly(rng, 6);
        CHECK(da_derivative_reproducing_residual(f, 0.2, -0.1, 0, 0, 30) < 1e-12);
    }

    // f = z zbar = x^2 + y^2: d/dx at (t,u) is 2t
    const PolyFun f = PolyFun::monomial(1, 1);
    CHECK(da_derivative_reproducing_residual(f, 0.3, 0.1, 1, 0, 30) < 1e-13);
    {
        PolyFun df = ddx(f);
        CHECK(std::abs(eval(df, Complex{0.3, 0.1}) - 0.6) < 1e-15);
    }

    // f = x^2: second x-derivative is the constant 2
    const PolyFun x2 = xy_monomial(2, 0);
    for (double t : {0.0, 0.25, -0.4}) {
        CHECK(da_derivative_reproducing_residual(x2, t, 0.1, 2, 0, 30) < 1e-12);
        PolyFun dd = ddx(ddx(x2));
        CHECK(std::abs(eval(dd, Complex{t, 0.1}) - 2.0) < 1e-15);
    }

    CHECK_THROWS_AS(da_derivative_reproducing_residual(f, 0.9, 0.0, 1, 0, 30),
                    DomainViolationError);
    CHECK_THROWS_AS(da_derivative_reproducing_residual(f, 0.1, 0.0, 3, 2, 30),
                    std::invalid_argument);
}

TEST_CASE("norms of the real-coordinate monomials") {
    CHECK(monomials_in_hk_check(0, 0) == doctest::Approx(1.0));
    CHECK(monomials_in_hk_check(1, 0) == doctest::Approx(std::sqrt(0.5)));

    // oracle: expand (z+zbar)^n ((z-zbar)/(2i))^m exactly and sum the weights
    using namespace polyfock::exact;
    for (int n = 0; n <= 4; ++n)
        for (int m = 0; m <= 4; ++m) {
            RatPoly x, y;
            x.add_term(1, 0, RationalComplex{Rational(1, 2), 0});
            x.add_term(0, 1, RationalComplex{Rational(1, 2), 0});
            y.add_term(1, 0, RationalComplex{0, Rational(-1, 2)});
            y.add_term(0, 1, RationalComplex{0, Rational(1, 2)});
            RatPoly acc;
            acc.add_term(0, 0, RationalComplex{1, 0});
            for (int i = 0; i < n; ++i) acc = exact::mul(acc, x);
            for (int i = 0; i < m; ++i) acc = exact::mul(acc, y);
            const RationalComplex nsq = inner_exact(acc, acc, WeightKind::DA);
            const double expect = std::sqrt(to_double(nsq.re));
            CHECK(monomials_in_hk_check(n, m) == doctest::Approx(expect).epsilon(1e-12));
        }
}
