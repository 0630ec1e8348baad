#include "polyfock/pick.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "polyfock/spaces.hpp"

namespace polyfock {

namespace {

constexpr double kDaRadius = 0.70710678118654752440;

void require_ball(Complex z, const char* who) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) ||
        !(std::norm(z) < 0.5))
        throw DomainViolationError(std::string(who) + ": point outside |z| < 1/sqrt(2)");
}

} // namespace

void PickProblem::validate() const {
    if (nodes.empty()) throw std::invalid_argument("PickProblem: no nodes");
    if (nodes.size() != targets.size())
        throw std::invalid_argument("PickProblem: nodes/targets length mismatch");
    for (const Complex& z : nodes) require_ball(z, "PickProblem");
    for (const Complex& w : targets)
        if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
            throw std::invalid_argument("PickProblem: non-finite target");
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (nodes[i] == nodes[j])
                throw std::invalid_argument("PickProblem: nodes must be pairwise distinct");
}

Eigen::MatrixXcd pick_matrix(const PickProblem& p) {
    p.validate();
    const int n = int(p.nodes.size());
    Eigen::MatrixXcd out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double den = 1.0 - 2.0 * std::real(p.nodes[i] * std::conj(p.nodes[j]));
            out(i, j) = (1.0 - p.targets[i] * std::conj(p.targets[j])) / den;
        }
    return out;
}

FeasibilityResult feasible(const PickProblem& p, double tol) {
    if (!(tol >= 0.0)) throw std::invalid_argument("feasible: bad tolerance");
    const Eigen::MatrixXcd m = pick_matrix(p);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
    FeasibilityResult r;
    r.min_eigenvalue = es.eigenvalues().minCoeff();
    r.feasible = r.min_eigenvalue >= -tol;
    // Second opinion on small problems; the eigensolve verdict (it carries a
    // margin) wins when the two straddle the tolerance surface.
    if (m.rows() <= 12) (void)pivoted_cholesky_psd(m, tol);
    return r;
}

bool pivoted_cholesky_psd(const Eigen::MatrixXcd& a, double tol) {
    if (a.rows() != a.cols()) throw std::invalid_argument("pivoted_cholesky_psd: not square");
    const int n = int(a.rows());
    Eigen::MatrixXcd h = a;
    double scale = 1.0;
    for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(h(i, i).real()));
    const double cutoff = tol * scale;

    for (int k = 0; k < n; ++k) {
        int p = k;
        for (int i = k + 1; i < n; ++i)
            if (h(i, i).real() > h(p, p).real()) p = i;
        const double piv = h(p, p).real();
        if (piv <= cutoff) {
            // rank exhausted: the whole remaining Schur complement must be
            // negligible (a tiny diagonal with a large off-diagonal entry is
            // indefinite, not PSD)
            for (int i = k; i < n; ++i)
                for (int j = k; j < n; ++j)
                    if (std::abs(h(i, j)) > n * cutoff + cutoff) return false;
            return true;
        }
        if (p != k) {
            h.row(k).swap(h.row(p));
            h.col(k).swap(h.col(p));
        }
        const double d = std::sqrt(piv);
        h(k, k) = d;
        for (int i = k + 1; i < n; ++i) h(i, k) /= d;
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j <= i; ++j) {
                h(i, j) -= h(i, k) * std::conj(h(j, k));
                h(j, i) = std::conj(h(i, j));
            }
    }
    return true;
}

std::vector<double> c_coeffs(int count) {
    if (count < 1) throw std::invalid_argument("c_coeffs: count must be >= 1");
    std::vector<double> c(count);
    c[0] = 0.5;
    for (int n = 1; n < count; ++n)
        c[n] = c[n - 1] * (2.0 * n - 1.0) / (2.0 * n + 2.0);
    return c;
}

Eigen::Matrix2cd sqrt_factor(Complex a) {
    require_ball(a, "sqrt_factor");
    const double q = 2.0 * std::norm(a); // v*v with v = (conj a, a)^T
    if (q == 0.0) return Eigen::Matrix2cd::Identity();

    Eigen::Matrix2cd vvstar;
    const Complex ab = std::conj(a);
    vvstar << std::norm(a), ab * ab, a * a, std::norm(a);

    const double closed_scalar = (1.0 - std::sqrt(1.0 - q)) / q;
    const Eigen::Matrix2cd closed = Eigen::Matrix2cd::Identity() - closed_scalar * vvstar;

    // Series route as a cross-check: sum c_n (v v*)^n = (v v*)/q * sum c_n q^n.
    // c_n < 1 so the dropped tail is below q^(N+1)/(1-q); the comparison
    // tolerance carries that allowance so near-boundary parameters stay honest.
    long iterations = 200000;
    if (q < 0.9999) {
        const double need = std::log(1e-12 * (1.0 - q)) / std::log(q);
        iterations = std::min(iterations, std::max(8L, (long)std::ceil(need)));
    }
    double series_scalar = 0.0, cn = 0.5, qn = q;
    long n_used = 0;
    for (long n = 1; n <= iterations; ++n) {
        series_scalar += cn * qn;
        cn = cn * (2.0 * n - 1.0) / (2.0 * n + 2.0);
        qn *= q;
        n_used = n;
        if (cn * qn < 1e-18 * series_scalar) break;
    }
    const double tail_allowance = std::pow(q, double(n_used + 1)) / (1.0 - q);
    if (std::abs(series_scalar - (1.0 - std::sqrt(1.0 - q))) >
        1e-10 + tail_allowance)
        throw std::runtime_error("sqrt_factor: series and closed form disagree");

    return closed;
}

BlaschkeFactor BlaschkeFactor::at(Complex a) {
    BlaschkeFactor b;
    b.a = a;
    b.sqrt_matrix = sqrt_factor(a);
    b.prefactor_numerator = 1.0 - 2.0 * std::norm(a);
    return b;
}

Eigen::RowVector2cd blaschke_eval(Complex a, Complex z) {
    require_ball(z, "blaschke_eval");
    const BlaschkeFactor b = BlaschkeFactor::at(a);
    const double den = 1.0 - 2.0 * std::real(z * std::conj(a));
    Eigen::RowVector2cd row;
    row << z - a, std::conj(z) - std::conj(a);
    return (b.prefactor_numerator / den) * row * b.sqrt_matrix;
}

SchurCounterexampleReport schur_counterexample_report(int m) {
    if (m < 1) throw std::invalid_argument("schur_counterexample_report: m >= 1");
    if (2 * m > PolyFun::kDegreeCap)
        throw std::invalid_argument("schur_counterexample_report: 2m exceeds the degree cap");

    const std::vector<double> c = c_coeffs(m);
    PolyFun f = PolyFun::monomial(1, 0);
    for (int n = 1; n <= m; ++n) f.add_term(0, 2 * n, Complex{c[n - 1], 0.0});

    SchurCounterexampleReport rep;
    const double r_boundary = kDaRadius * (1.0 - 1e-9);
    for (int k = 0; k < 4096; ++k) {
        const double th = 2.0 * M_PI * k / 4096.0;
        rep.sup_modulus_bound =
            std::max(rep.sup_modulus_bound, std::abs(eval(f, std::polar(r_boundary, th))));
    }
    std::mt19937_64 rng(6021023u);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int k = 0; k < 10000; ++k) {
        const double r = r_boundary * std::sqrt(unit(rng));
        const double th = 2.0 * M_PI * unit(rng);
        rep.sup_modulus_bound =
            std::max(rep.sup_modulus_bound, std::abs(eval(f, std::polar(r, th))));
    }

    const SpaceWeight da(SpaceKind::DA);
    rep.da_norm_sq = inner(f, f, da).real();
    return rep;
}

double da_derivative_reproducing_residual(const PolyFun& f, double t, double u,
                                          int n, int m, int degree) {
    if (n < 0 || m < 0 || n + m > 4)
        throw std::invalid_argument("da_derivative_reproducing_residual: need 0 <= n+m <= 4");
    if (degree < 0 || degree > PolyFun::kDegreeCap)
        throw std::invalid_argument("da_derivative_reproducing_residual: bad degree");
    if (f.degree() > degree - (n + m))
        throw std::invalid_argument("da_derivative_reproducing_residual: degree headroom too small");
    const Complex w{t, u};
    require_ball(w, "da_derivative_reproducing_residual");

    // Section coefficient at (p,q) is C(p+q,p) wbar^p w^q; differentiate that
    // in the parameter w = t + iu (the same Wirtinger machinery applies).
    PolyFun section;
    for (int p = 0; p <= degree; ++p) {
        for (int q = 0; p + q <= degree; ++q) {
            double binom = 1.0;
            for (int i = 0; i < p; ++i) binom = binom * double(p + q - i) / double(p - i);
            PolyFun g = PolyFun::monomial(q, p, Complex{binom, 0.0});
            for (int r = 0; r < n; ++r) g = ddx(g);
            for (int r = 0; r < m; ++r) g = ddy(g);
            const Complex v = eval(g, w);
            if (v != Complex{0.0, 0.0}) section.set_term(p, q, v);
        }
    }

    const SpaceWeight da(SpaceKind::DA);
    const Complex lhs = inner(f, section, da);

    PolyFun df = f;
    for (int r = 0; r < n; ++r) df = ddx(df);
    for (int r = 0; r < m; ++r) df = ddy(df);
    const Complex rhs = eval(df, w);
    return std::abs(lhs - rhs);
}

PolyFun xy_monomial(int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("xy_monomial: negative exponent");
    PolyFun x;
    x.set_term(1, 0, Complex{0.5, 0.0});
    x.set_term(0, 1, Complex{0.5, 0.0});
    PolyFun y;
    y.set_term(1, 0, Complex{0.0, -0.5});
    y.set_term(0, 1, Complex{0.0, 0.5});

    PolyFun out = PolyFun::constant(Complex{1.0, 0.0});
    for (int i = 0; i < n; ++i) out = mul(out, x);
    for (int i = 0; i < m; ++i) out = mul(out, y);
    return out;
}

double monomials_in_hk_check(int n, int m) {
    const SpaceWeight da(SpaceKind::DA);
    return norm(xy_monomial(n, m), da);
}

} // namespace polyfock
