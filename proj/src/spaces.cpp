#include "polyfock/spaces.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyfock {

namespace {

constexpr int kFactTableSize = 171; // 170! is the last finite double
constexpr double kDaRadius = 0.70710678118654752440; // 1/sqrt(2)
constexpr double kDaMargin = 1e-12;

const std::array<double, kFactTableSize>& fact_table() {
    static const auto table = [] {
        std::array<double, kFactTableSize> t{};
        t[0] = 1.0;
        for (int i = 1; i < kFactTableSize; ++i) t[i] = t[i - 1] * i;
        return t;
    }();
    return table;
}

} // namespace

double factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    if (n < kFactTableSize) return fact_table()[n];
    return std::exp(log_factorial(n));
}

double log_factorial(int n) {
    if (n < 0) throw std::invalid_argument("log_factorial: negative argument");
    return std::lgamma(double(n) + 1.0);
}

SpaceWeight SpaceWeight::from_tag(std::string_view tag) {
    if (tag == "SF") return SpaceWeight(SpaceKind::SF);
    if (tag == "SH") return SpaceWeight(SpaceKind::SH);
    if (tag == "DA") return SpaceWeight(SpaceKind::DA);
    throw std::invalid_argument("SpaceWeight: unknown tag '" + std::string(tag) + "'");
}

std::string_view SpaceWeight::tag() const {
    switch (kind_) {
        case SpaceKind::SF: return "SF";
        case SpaceKind::SH: return "SH";
        case SpaceKind::DA: return "DA";
    }
    return "";
}

double SpaceWeight::weight(int m, int n) const {
    switch (kind_) {
        case SpaceKind::SF: return factorial(m) * factorial(n);
        case SpaceKind::SH: return 1.0;
        case SpaceKind::DA: return factorial(m) * factorial(n) / factorial(m + n);
    }
    return 0.0;
}

bool SpaceWeight::in_domain(Complex w) const {
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return false;
    switch (kind_) {
        case SpaceKind::SF: return true;
        case SpaceKind::SH: return std::abs(w) < 1.0;
        case SpaceKind::DA: return std::abs(w) < kDaRadius - kDaMargin;
    }
    return false;
}

void SpaceWeight::require_in_domain(Complex w) const {
    if (!in_domain(w))
        throw DomainViolationError("point outside the domain of " + std::string(tag()));
}

Complex inner(const PolyFun& f, const PolyFun& g, const SpaceWeight& s) {
    Complex acc{0.0, 0.0};
    // iterate the smaller support
    const PolyFun& small = f.term_count() <= g.term_count() ? f : g;
    const PolyFun& large = f.term_count() <= g.term_count() ? g : f;
    const bool swapped = &small == &g;
    for (const auto& [idx, c] : small.terms()) {
        Complex other = large.coeff(idx.m, idx.n);
        if (other.real() == 0.0 && other.imag() == 0.0) continue;
        const double w = s.weight(idx.m, idx.n);
        acc += swapped ? w * other * std::conj(c) : w * c * std::conj(other);
    }
    return acc;
}

double norm(const PolyFun& f, const SpaceWeight& s) {
    double acc = 0.0;
    for (const auto& [idx, c] : f.terms()) acc += s.weight(idx.m, idx.n) * std::norm(c);
    return std::sqrt(acc);
}

PolyFun kernel_section(const SpaceWeight& s, Complex w, int degree) {
    s.require_in_domain(w);
    if (degree < 0 || degree > PolyFun::kDegreeCap)
        throw std::invalid_argument("kernel_section: bad truncation degree");

    const Complex wb = std::conj(w);
    std::vector<Complex> wpow(degree + 1), wbpow(degree + 1);
    wpow[0] = wbpow[0] = Complex{1.0, 0.0};
    for (int k = 1; k <= degree; ++k) {
        wpow[k] = wpow[k - 1] * w;
        wbpow[k] = wbpow[k - 1] * wb;
    }

    PolyFun r;
    for (int m = 0; m <= degree; ++m)
        for (int n = 0; n + m <= degree; ++n)
            r.set_term(m, n, wbpow[m] * wpow[n] / s.weight(m, n));
    return r;
}

double reproduce_residual(const PolyFun& f, Complex w, const SpaceWeight& s, int degree) {
    if (f.degree() > degree)
        throw std::invalid_argument("reproduce_residual: degree below deg(f)");
    const PolyFun section = kernel_section(s, w, degree);
    return std::abs(inner(f, section, s) - eval(f, w));
}

} // namespace polyfock
