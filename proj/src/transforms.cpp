#include "polyfock/transforms.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyfock/gaussmoments.hpp"
#include "polyfock/spaces.hpp"
#include "series_detail.hpp"

namespace polyfock {

namespace {

bool exact_zero(Complex c) { return c.real() == 0.0 && c.imag() == 0.0; }

void check_hermite_index(int m, int n) {
    if (m < 0 || n < 0)
        throw std::invalid_argument("HermiteCoeffs: negative index");
    if (m > HermiteCoeffs::kIndexCap || n > HermiteCoeffs::kIndexCap)
        throw std::invalid_argument("HermiteCoeffs: index exceeds cap");
}

// psi_m(x) e^{x^2/2} = (2^m m! sqrt(pi))^{-1/2} H_m(x); values for all
// m <= top at one node. The stripped Gaussian cancels against the quadrature
// weight, so nothing here over- or underflows for moderate m.
std::vector<double> hermite_function_no_gauss(int top, double x) {
    std::vector<double> h(top + 1);
    h[0] = std::pow(M_PI, -0.25);
    if (top >= 1) h[1] = std::sqrt(2.0) * x * h[0];
    for (int k = 2; k <= top; ++k)
        h[k] = x * std::sqrt(2.0 / k) * h[k - 1] - std::sqrt((k - 1.0) / k) * h[k - 2];
    return h;
}

// A(z,x) e^{x^2/2} = pi^{-1/4} exp(-z^2/2 + sqrt(2) z x)
Complex bargmann_no_gauss(Complex z, double x) {
    return std::pow(M_PI, -0.25) * std::exp(-0.5 * z * z + std::sqrt(2.0) * z * x);
}

} // namespace

HermiteCoeffs HermiteCoeffs::basis(int m, int n, Complex c) {
    HermiteCoeffs phi;
    phi.set_term(m, n, c);
    return phi;
}

void HermiteCoeffs::set_term(int m, int n, Complex c) {
    check_hermite_index(m, n);
    if (exact_zero(c))
        terms_.erase({m, n});
    else
        terms_[{m, n}] = c;
}

void HermiteCoeffs::add_term(int m, int n, Complex c) {
    check_hermite_index(m, n);
    auto it = terms_.find({m, n});
    if (it == terms_.end()) {
        if (!exact_zero(c)) terms_.emplace(MonomialIndex{m, n}, c);
        return;
    }
    it->second += c;
    if (exact_zero(it->second)) terms_.erase(it);
}

Complex HermiteCoeffs::coeff(int m, int n) const {
    auto it = terms_.find({m, n});
    return it == terms_.end() ? Complex{0.0, 0.0} : it->second;
}

int HermiteCoeffs::max_index() const {
    int top = 0;
    for (const auto& [idx, c] : terms_) top = std::max({top, idx.m, idx.n});
    return top;
}

void ComplexHermiteCoeffs::set_term(int p, int q, Complex c) {
    if (p < 0 || q < 0) throw std::invalid_argument("ComplexHermiteCoeffs: negative index");
    if (exact_zero(c))
        terms_.erase({p, q});
    else
        terms_[{p, q}] = c;
}

void ComplexHermiteCoeffs::add_term(int p, int q, Complex c) {
    if (p < 0 || q < 0) throw std::invalid_argument("ComplexHermiteCoeffs: negative index");
    auto it = terms_.find({p, q});
    if (it == terms_.end()) {
        if (!exact_zero(c)) terms_.emplace(MonomialIndex{p, q}, c);
        return;
    }
    it->second += c;
    if (exact_zero(it->second)) terms_.erase(it);
}

Complex ComplexHermiteCoeffs::coeff(int p, int q) const {
    auto it = terms_.find({p, q});
    return it == terms_.end() ? Complex{0.0, 0.0} : it->second;
}

Complex bargmann_kernel(Complex z, double x) {
    if (!std::isfinite(x) || !std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::invalid_argument("bargmann_kernel: non-finite argument");
    return std::pow(M_PI, -0.25) *
           std::exp(-0.5 * (z * z + x * x) + std::sqrt(2.0) * z * x);
}

PolyFun segal_bargmann(const HermiteCoeffs& phi) {
    PolyFun f;
    for (const auto& [idx, beta] : phi.terms())
        f.set_term(idx.m, idx.n, beta / std::sqrt(factorial(idx.m) * factorial(idx.n)));
    return f;
}

HermiteCoeffs segal_bargmann_inverse(const PolyFun& f) {
    HermiteCoeffs phi;
    for (const auto& [idx, alpha] : f.terms())
        phi.set_term(idx.m, idx.n, alpha * std::sqrt(factorial(idx.m) * factorial(idx.n)));
    return phi;
}

Complex segal_bargmann_quadrature_oracle(const HermiteCoeffs& phi, Complex z,
                                         int n_quad) {
    if (n_quad < 1 || n_quad > 200)
        throw std::invalid_argument("segal_bargmann_quadrature_oracle: n_quad in 1..200");
    if (phi.is_zero()) return {0.0, 0.0};

    const QuadratureRule& rule = gauss_hermite_nodes(n_quad);
    const int top = phi.max_index();

    std::vector<std::vector<double>> h(n_quad);
    std::vector<Complex> ax(n_quad), ay(n_quad);
    for (int i = 0; i < n_quad; ++i) {
        h[i] = hermite_function_no_gauss(top, rule.nodes[i]);
        ax[i] = bargmann_no_gauss(z, rule.nodes[i]);
        ay[i] = bargmann_no_gauss(std::conj(z), rule.nodes[i]);
    }

    Complex acc{0.0, 0.0};
    for (int i = 0; i < n_quad; ++i) {
        for (int j = 0; j < n_quad; ++j) {
            Complex phi_val{0.0, 0.0};
            for (const auto& [idx, beta] : phi.terms())
                phi_val += beta * h[i][idx.m] * h[j][idx.n];
            acc += rule.weights[i] * rule.weights[j] * ax[i] * ay[j] * phi_val;
        }
    }
    return acc;
}

PolyFun complex_hermite_to_monomials(int p, int q) {
    if (p < 0 || q < 0)
        throw std::invalid_argument("complex_hermite_to_monomials: negative index");
    PolyFun f;
    const int kmax = std::min(p, q);
    double c = 1.0; // (-1)^k k! C(p,k) C(q,k), updated incrementally
    for (int k = 0; k <= kmax; ++k) {
        f.set_term(p - k, q - k, Complex{c, 0.0});
        c *= -double(k + 1) * double(p - k) * double(q - k) / double((k + 1) * (k + 1));
    }
    return f;
}

ComplexHermiteCoeffs monomials_to_complex_hermite(const PolyFun& f) {
    // back-substitution down the total-degree filtration; the change of
    // basis is unitriangular, so the leading term cancels exactly
    std::map<MonomialIndex, Complex> work(f.terms().begin(), f.terms().end());
    ComplexHermiteCoeffs out;
    while (!work.empty()) {
        auto lead = work.begin();
        for (auto it = work.begin(); it != work.end(); ++it)
            if (it->first.m + it->first.n > lead->first.m + lead->first.n) lead = it;
        const int p = lead->first.m, q = lead->first.n;
        const Complex c = lead->second;
        out.add_term(p, q, c);
        const PolyFun expansion = complex_hermite_to_monomials(p, q);
        for (const auto& [idx, hcoef] : expansion.terms()) {
            auto it = work.find(idx);
            Complex next = (it == work.end() ? Complex{0.0, 0.0} : it->second) - c * hcoef;
            if (exact_zero(next)) {
                if (it != work.end()) work.erase(it);
            } else {
                work[idx] = next;
            }
        }
    }
    return out;
}

PolyFun complex_hermite_expand(const ComplexHermiteCoeffs& c) {
    PolyFun f;
    for (const auto& [idx, v] : c.terms()) {
        const PolyFun h = complex_hermite_to_monomials(idx.m, idx.n);
        for (const auto& [hidx, hc] : h.terms()) f.add_term(hidx.m, hidx.n, v * hc);
    }
    return f;
}

PolyFun berezin(const PolyFun& f) {
    const ComplexHermiteCoeffs c = monomials_to_complex_hermite(f);
    PolyFun out;
    for (const auto& [idx, v] : c.terms()) out.set_term(idx.m, idx.n, v);
    return out;
}

BerezinDerivativeReport berezin_derivative_residuals(const PolyFun& f) {
    if (f.degree() > PolyFun::kDegreeCap - 4)
        throw std::invalid_argument("berezin_derivative_residuals: degree headroom < 4");

    const PolyFun bf = berezin(f);
    BerezinDerivativeReport rep;

    // first-order: dz B(f) = -zbar B(f) + B(wbar f), and the zbar twin
    rep.d1 = std::max(
        max_coeff_distance(ddz(bf), add(scale(mul_zbar(bf), -1.0), berezin(mul_zbar(f)))),
        max_coeff_distance(ddzbar(bf), add(scale(mul_z(bf), -1.0), berezin(mul_z(f)))));

    // higher order via the binomial expansion, zbar acting as the outer factor
    for (int n = 1; n <= 3; ++n) {
        PolyFun lhs_z = bf, lhs_zb = bf;
        for (int k = 0; k < n; ++k) {
            lhs_z = ddz(lhs_z);
            lhs_zb = ddzbar(lhs_zb);
        }
        PolyFun rhs_z, rhs_zb;
        double binom = 1.0;
        for (int k = 0; k <= n; ++k) {
            PolyFun inner_z = f, inner_zb = f;
            for (int r = 0; r < n - k; ++r) {
                inner_z = mul_zbar(inner_z);
                inner_zb = mul_z(inner_zb);
            }
            PolyFun term_z = berezin(inner_z), term_zb = berezin(inner_zb);
            for (int r = 0; r < k; ++r) {
                term_z = mul_zbar(term_z);
                term_zb = mul_z(term_zb);
            }
            const double sign = (k % 2 == 0) ? 1.0 : -1.0;
            rhs_z = add(rhs_z, scale(term_z, sign * binom));
            rhs_zb = add(rhs_zb, scale(term_zb, sign * binom));
            binom = binom * double(n - k) / double(k + 1);
        }
        rep.dn = std::max({rep.dn, max_coeff_distance(lhs_z, rhs_z),
                           max_coeff_distance(lhs_zb, rhs_zb)});
    }

    // dz B(f) = B(dw f), and the zbar twin
    rep.p512 = std::max(max_coeff_distance(ddz(bf), berezin(ddz(f))),
                        max_coeff_distance(ddzbar(bf), berezin(ddzbar(f))));

    // B(dwbar f) = B(w f) - z B(f), and the w twin
    rep.dwbar = std::max(
        max_coeff_distance(berezin(ddzbar(f)), sub(berezin(mul_z(f)), mul_z(bf))),
        max_coeff_distance(berezin(ddz(f)), sub(berezin(mul_zbar(f)), mul_zbar(bf))));

    rep.max_residual = std::max({rep.d1, rep.dn, rep.p512, rep.dwbar});
    return rep;
}

std::pair<double, double> berezin_bound_check(const PolyFun& f, double beta) {
    if (!(beta > 2.0))
        throw std::invalid_argument("berezin_bound_check: need beta > 2");
    const PolyFun bf = berezin(f);
    const double lhs_sq = beta * integrate_poly_gaussian(mul(bf, conj(bf)), beta).real();
    const double norm_mu_sq = integrate_poly_gaussian(mul(f, conj(f)), 1.0).real();
    const double rhs = std::sqrt(beta / (beta - 2.0)) * std::sqrt(std::max(0.0, norm_mu_sq));
    return {std::sqrt(std::max(0.0, lhs_sq)), rhs};
}

double position_conjugation_residual(int degree) {
    if (degree < 4) throw std::invalid_argument("position_conjugation_residual: degree < 4");
    double worst = 0.0;
    const double s2 = std::sqrt(2.0);
    for (int m = 0; m <= degree - 2; ++m) {
        for (int n = 0; n <= degree - 2; ++n) {
            const PolyFun tf = segal_bargmann(HermiteCoeffs::basis(m, n));

            // (d/dz + M_z) T = sqrt(2) T X
            HermiteCoeffs xphi;
            xphi.add_term(m + 1, n, std::sqrt((m + 1) / 2.0));
            if (m > 0) xphi.add_term(m - 1, n, std::sqrt(m / 2.0));
            worst = std::max(worst, max_coeff_distance(add(ddz(tf), mul_z(tf)),
                                                       scale(segal_bargmann(xphi), s2)));

            // (d/dzbar + M_zbar) T = sqrt(2) T Y
            HermiteCoeffs yphi;
            yphi.add_term(m, n + 1, std::sqrt((n + 1) / 2.0));
            if (n > 0) yphi.add_term(m, n - 1, std::sqrt(n / 2.0));
            worst = std::max(worst, max_coeff_distance(add(ddzbar(tf), mul_zbar(tf)),
                                                       scale(segal_bargmann(yphi), s2)));
        }
    }
    return worst;
}

double creation_conjugation_residual(int degree) {
    if (degree < 4) throw std::invalid_argument("creation_conjugation_residual: degree < 4");
    double worst = 0.0;
    const double s2 = std::sqrt(2.0);
    for (int m = 0; m <= degree - 2; ++m) {
        for (int n = 0; n <= degree - 2; ++n) {
            const PolyFun tf = segal_bargmann(HermiteCoeffs::basis(m, n));

            // (X - d/dx) psi_{m,n} = sqrt(2(m+1)) psi_{m+1,n}
            HermiteCoeffs raised_x = HermiteCoeffs::basis(m + 1, n, std::sqrt(2.0 * (m + 1)));
            worst = std::max(worst, max_coeff_distance(segal_bargmann(raised_x),
                                                       scale(mul_z(tf), s2)));

            HermiteCoeffs raised_y = HermiteCoeffs::basis(m, n + 1, std::sqrt(2.0 * (n + 1)));
            worst = std::max(worst, max_coeff_distance(segal_bargmann(raised_y),
                                                       scale(mul_zbar(tf), s2)));
        }
    }
    return worst;
}

Complex s_phi(const PolyFun& f, Complex a, Complex z) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) ||
        !std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::invalid_argument("s_phi: non-finite argument");
    const int d_exp = windowed_default_d_exp(f, std::max(std::abs(z), std::abs(a)));
    const Complex series = windowed_expansion_series(f, z, std::conj(a), d_exp, "s_phi");
    return std::exp(-std::conj(a) * z) * series;
}

} // namespace polyfock
