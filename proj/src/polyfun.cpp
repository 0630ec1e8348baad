#include "polyfock/polyfun.hpp"

#include <cmath>
#include <string>

namespace polyfock {

namespace {

void check_index(int m, int n) {
    if (m < 0 || n < 0)
        throw std::invalid_argument("PolyFun: negative monomial index");
    if (m + n > PolyFun::kDegreeCap)
        throw DegreeOverflowError("PolyFun: degree " + std::to_string(m + n) +
                                  " exceeds cap " + std::to_string(PolyFun::kDegreeCap));
}

bool is_exact_zero(Complex c) { return c.real() == 0.0 && c.imag() == 0.0; }

} // namespace

PolyFun PolyFun::constant(Complex c) {
    PolyFun f;
    f.set_term(0, 0, c);
    return f;
}

PolyFun PolyFun::monomial(int m, int n, Complex c) {
    PolyFun f;
    f.set_term(m, n, c);
    return f;
}

void PolyFun::set_term(int m, int n, Complex c) {
    check_index(m, n);
    if (is_exact_zero(c))
        terms_.erase({m, n});
    else
        terms_[{m, n}] = c;
}

void PolyFun::add_term(int m, int n, Complex c) {
    check_index(m, n);
    auto it = terms_.find({m, n});
    if (it == terms_.end()) {
        if (!is_exact_zero(c)) terms_.emplace(MonomialIndex{m, n}, c);
        return;
    }
    it->second += c;
    if (is_exact_zero(it->second)) terms_.erase(it);
}

Complex PolyFun::coeff(int m, int n) const {
    auto it = terms_.find({m, n});
    return it == terms_.end() ? Complex{0.0, 0.0} : it->second;
}

int PolyFun::degree() const {
    int d = 0;
    for (const auto& [idx, c] : terms_) d = std::max(d, idx.m + idx.n);
    return d;
}

Complex pow_int(Complex z, int e) {
    Complex r{1.0, 0.0};
    while (e > 0) {
        if (e & 1) r *= z;
        z *= z;
        e >>= 1;
    }
    return r;
}

Complex eval(const PolyFun& f, Complex z) {
    const auto& ts = f.terms();
    if (ts.empty()) return {0.0, 0.0};
    const Complex zb = std::conj(z);

    // Inner Horner over n within each m-group, outer Horner over m; gaps in
    // the sparse support are bridged with binary powers.
    Complex outer{0.0, 0.0};
    int outer_m = -1;
    for (auto it = ts.rbegin(); it != ts.rend();) {
        const int m = it->first.m;
        Complex inner{0.0, 0.0};
        int inner_n = -1;
        for (; it != ts.rend() && it->first.m == m; ++it) {
            const int n = it->first.n;
            inner = (inner_n < 0) ? it->second : inner * pow_int(zb, inner_n - n) + it->second;
            inner_n = n;
        }
        if (inner_n > 0) inner *= pow_int(zb, inner_n);
        outer = (outer_m < 0) ? inner : outer * pow_int(z, outer_m - m) + inner;
        outer_m = m;
    }
    if (outer_m > 0) outer *= pow_int(z, outer_m);
    return outer;
}

PolyFun ddz(const PolyFun& f) {
    PolyFun r;
    for (const auto& [idx, c] : f.terms())
        if (idx.m > 0) r.add_term(idx.m - 1, idx.n, double(idx.m) * c);
    return r;
}

PolyFun ddzbar(const PolyFun& f) {
    PolyFun r;
    for (const auto& [idx, c] : f.terms())
        if (idx.n > 0) r.add_term(idx.m, idx.n - 1, double(idx.n) * c);
    return r;
}

PolyFun laplacian(const PolyFun& f) { return scale(ddzbar(ddz(f)), 4.0); }

PolyFun ddx(const PolyFun& f) { return add(ddz(f), ddzbar(f)); }

PolyFun ddy(const PolyFun& f) {
    const Complex i{0.0, 1.0};
    return sub(scale(ddz(f), i), scale(ddzbar(f), i));
}

PolyFun mul_z(const PolyFun& f) {
    PolyFun r;
    for (const auto& [idx, c] : f.terms()) r.set_term(idx.m + 1, idx.n, c);
    return r;
}

PolyFun mul_zbar(const PolyFun& f) {
    PolyFun r;
    for (const auto& [idx, c] : f.terms()) r.set_term(idx.m, idx.n + 1, c);
    return r;
}

namespace {

PolyFun convolve(const PolyFun& f, const PolyFun& g, int max_degree) {
    std::map<MonomialIndex, Complex> acc;
    for (const auto& [i, a] : f.terms()) {
        for (const auto& [j, b] : g.terms()) {
            const int m = i.m + j.m, n = i.n + j.n;
            if (m + n > max_degree) continue;
            acc[{m, n}] += a * b;
        }
    }
    PolyFun r;
    for (const auto& [idx, c] : acc) r.set_term(idx.m, idx.n, c);
    return r;
}

} // namespace

PolyFun mul(const PolyFun& f, const PolyFun& g) {
    // The cap check is on the actual result support: cancellations may keep
    // a formally over-cap product inside the cap.
    std::map<MonomialIndex, Complex> acc;
    for (const auto& [i, a] : f.terms())
        for (const auto& [j, b] : g.terms())
            acc[{i.m + j.m, i.n + j.n}] += a * b;
    PolyFun r;
    for (const auto& [idx, c] : acc) {
        if (c.real() == 0.0 && c.imag() == 0.0) continue;
        r.set_term(idx.m, idx.n, c); // throws DegreeOverflowError past the cap
    }
    return r;
}

PolyFun mul_truncated(const PolyFun& f, const PolyFun& g, int max_degree) {
    return convolve(f, g, std::min(max_degree, PolyFun::kDegreeCap));
}

PolyFun conj(const PolyFun& f) {
    PolyFun r;
    for (const auto& [idx, c] : f.terms()) r.set_term(idx.n, idx.m, std::conj(c));
    return r;
}

PolyFun add(const PolyFun& f, const PolyFun& g) {
    PolyFun r = f;
    for (const auto& [idx, c] : g.terms()) r.add_term(idx.m, idx.n, c);
    return r;
}

PolyFun sub(const PolyFun& f, const PolyFun& g) {
    PolyFun r = f;
    for (const auto& [idx, c] : g.terms()) r.add_term(idx.m, idx.n, -c);
    return r;
}

PolyFun scale(const PolyFun& f, Complex c) {
    PolyFun r;
    if (c.real() == 0.0 && c.imag() == 0.0) return r;
    for (const auto& [idx, a] : f.terms()) r.set_term(idx.m, idx.n, c * a);
    return r;
}

double max_coeff_distance(const PolyFun& f, const PolyFun& g) {
    double d = 0.0;
    for (const auto& [idx, c] : f.terms())
        d = std::max(d, std::abs(c - g.coeff(idx.m, idx.n)));
    for (const auto& [idx, c] : g.terms())
        d = std::max(d, std::abs(f.coeff(idx.m, idx.n) - c));
    return d;
}

} // namespace polyfock
