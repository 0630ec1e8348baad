#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <map>

#include "polyfock/polyfun.hpp"

// Exact-rational mode for oracle-grade checks at degree <= 20. Kept
// deliberately independent of the double-precision code paths: everything
// here is recomputed from first principles in cpp_rational arithmetic, so a
// test that compares the two routes compares genuinely different pipelines.
namespace polyfock::exact {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct RationalComplex {
    Rational re{0};
    Rational im{0};

    friend RationalComplex operator+(const RationalComplex& a, const RationalComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend RationalComplex operator-(const RationalComplex& a, const RationalComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend RationalComplex operator*(const RationalComplex& a, const RationalComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const RationalComplex& a, const RationalComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
    bool is_zero() const { return re == 0 && im == 0; }
};

inline RationalComplex conj(const RationalComplex& a) { return {a.re, -a.im}; }

inline BigInt factorial_exact(int n) {
    BigInt r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

inline BigInt binomial_exact(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 0; i < k; ++i) { r *= (n - i); r /= (i + 1); }
    return r;
}

// Same sparse layout as PolyFun, with exact coefficients.
class RatPoly {
public:
    void add_term(int m, int n, RationalComplex c) {
        auto it = terms_.find({m, n});
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(MonomialIndex{m, n}, c);
            return;
        }
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    RationalComplex coeff(int m, int n) const {
        auto it = terms_.find({m, n});
        return it == terms_.end() ? RationalComplex{} : it->second;
    }
    const std::map<MonomialIndex, RationalComplex>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

private:
    std::map<MonomialIndex, RationalComplex> terms_;
};

inline RatPoly mul(const RatPoly& f, const RatPoly& g) {
    RatPoly r;
    for (const auto& [i, a] : f.terms())
        for (const auto& [j, b] : g.terms())
            r.add_term(i.m + j.m, i.n + j.n, a * b);
    return r;
}

inline RatPoly ddz(const RatPoly& f) {
    RatPoly r;
    for (const auto& [i, a] : f.terms())
        if (i.m > 0) r.add_term(i.m - 1, i.n, RationalComplex{Rational(i.m), 0} * a);
    return r;
}

inline RatPoly ddzbar(const RatPoly& f) {
    RatPoly r;
    for (const auto& [i, a] : f.terms())
        if (i.n > 0) r.add_term(i.m, i.n - 1, RationalComplex{Rational(i.n), 0} * a);
    return r;
}

enum class WeightKind { SF, SH, DA };

inline Rational weight_exact(WeightKind k, int m, int n) {
    switch (k) {
        case WeightKind::SF: return Rational(factorial_exact(m) * factorial_exact(n));
        case WeightKind::SH: return Rational(1);
        case WeightKind::DA:
            return Rational(factorial_exact(m) * factorial_exact(n), factorial_exact(m + n));
    }
    return Rational(0);
}

inline RationalComplex inner_exact(const RatPoly& f, const RatPoly& g, WeightKind k) {
    RationalComplex acc;
    for (const auto& [i, a] : f.terms()) {
        RationalComplex b = g.coeff(i.m, i.n);
        if (b.is_zero()) continue;
        Rational w = weight_exact(k, i.m, i.n);
        RationalComplex t = a * conj(b);
        acc = acc + RationalComplex{w * t.re, w * t.im};
    }
    return acc;
}

// Complex Hermite polynomial H_{p,q}, exactly.
inline RatPoly hermite_mn_exact(int p, int q) {
    RatPoly r;
    const int kmax = std::min(p, q);
    for (int k = 0; k <= kmax; ++k) {
        BigInt c = factorial_exact(k) * binomial_exact(p, k) * binomial_exact(q, k);
        if (k % 2) c = -c;
        r.add_term(p - k, q - k, RationalComplex{Rational(c), 0});
    }
    return r;
}

// c_1..c_count of 1 - sqrt(1-t), from the binomial series of (1-t)^{1/2}:
// an independent route from the recurrence used by the double-precision code.
inline std::vector<Rational> c_coeffs_exact(int count) {
    std::vector<Rational> out;
    out.reserve(count);
    // C(1/2, n) = prod_{i=0}^{n-1} (1/2 - i) / n!,  c_n = (-1)^{n+1} C(1/2, n)
    Rational binom = Rational(1, 2); // C(1/2, 1)
    for (int n = 1; n <= count; ++n) {
        out.push_back(n % 2 == 1 ? binom : -binom);
        binom = binom * Rational(1 - 2 * n, 2) / Rational(n + 1);
    }
    return out;
}

inline double to_double(const Rational& r) {
    return static_cast<double>(r);
}

} // namespace polyfock::exact
