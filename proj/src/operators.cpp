#include "polyfock/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyfock {

namespace {

constexpr double kDaRadiusSq = 0.5;

void require_ball_param(Complex a, const char* who) {
    if (!(std::norm(a) < kDaRadiusSq))
        throw DomainViolationError(std::string(who) + ": parameter outside |a| < 1/sqrt(2)");
}

// Degree-cap truncation of 1/(1 - 2 Re(z conj(a))) = sum_d (z conj(a) + zbar a)^d.
PolyFun geometric_prefactor(Complex a, int max_degree) {
    PolyFun p;
    const Complex ab = std::conj(a);
    // (z ab + zbar a)^d expands to sum_q C(d,q) ab^q a^(d-q) z^q zbar^(d-q)
    for (int d = 0; d <= max_degree; ++d) {
        double binom = 1.0;
        for (int q = 0; q <= d; ++q) {
            const Complex c = binom * pow_int(ab, q) * pow_int(a, d - q);
            if (c != Complex{0.0, 0.0}) p.add_term(q, d - q, c);
            binom = binom * (d - q) / (q + 1.0);
        }
    }
    return p;
}

PolyFun apply_aa(const PolyFun& f, Complex a, bool conjugate_variant) {
    require_ball_param(a, conjugate_variant ? "Ba" : "Aa");
    const PolyFun shifted = conjugate_variant ? mul_zbar(f) : mul_z(f);
    // Ba uses zbar/(1 - 2Re(zbar a)); the prefactor is the same real kernel.
    const PolyFun prefactor = geometric_prefactor(a, PolyFun::kDegreeCap);
    return mul_truncated(prefactor, shifted, PolyFun::kDegreeCap);
}

// Adjoint of Aa/Ba in the DA pairing, exact on polynomials: coefficient of
// the result at (p,q) is <f, Op e_pq>_DA / weight(p,q). Op raises total
// degree, so the result support sits strictly below deg(f).
PolyFun apply_aa_star(const PolyFun& f, Complex a, bool conjugate_variant) {
    require_ball_param(a, conjugate_variant ? "BaStar" : "AaStar");
    PolyFun out;
    if (f.is_zero()) return out;
    const SpaceWeight da(SpaceKind::DA);
    const int top = f.degree() - 1;
    if (top < 0) return out;
    const PolyFun prefactor = geometric_prefactor(a, f.degree());
    for (int p = 0; p <= top; ++p) {
        for (int q = 0; p + q <= top; ++q) {
            PolyFun basis = PolyFun::monomial(p, q);
            PolyFun image = conjugate_variant ? mul_zbar(basis) : mul_z(basis);
            image = mul_truncated(prefactor, image, f.degree());
            const Complex c = inner(f, image, da) / da.weight(p, q);
            if (c != Complex{0.0, 0.0}) out.add_term(p, q, c);
        }
    }
    return out;
}

} // namespace

OperatorId OperatorId::from_tag(std::string_view tag, Complex a) {
    static const std::pair<std::string_view, Tag> table[] = {
        {"Mz", Tag::Mz},       {"Mzbar", Tag::Mzbar},   {"Dz", Tag::Dz},
        {"Dzbar", Tag::Dzbar}, {"Rinf", Tag::Rinf},     {"Linf", Tag::Linf},
        {"Iinf", Tag::Iinf},   {"Jinf", Tag::Jinf},     {"A0", Tag::A0},
        {"B0", Tag::B0},       {"Aa", Tag::Aa},         {"Ba", Tag::Ba},
        {"AaStar", Tag::AaStar}, {"BaStar", Tag::BaStar},
    };
    for (const auto& [name, t] : table)
        if (name == tag) return OperatorId{t, a};
    throw std::invalid_argument("OperatorId: unknown tag '" + std::string(tag) + "'");
}

std::string_view OperatorId::name() const {
    switch (tag) {
        case Tag::Mz: return "Mz";
        case Tag::Mzbar: return "Mzbar";
        case Tag::Dz: return "Dz";
        case Tag::Dzbar: return "Dzbar";
        case Tag::Rinf: return "Rinf";
        case Tag::Linf: return "Linf";
        case Tag::Iinf: return "Iinf";
        case Tag::Jinf: return "Jinf";
        case Tag::A0: return "A0";
        case Tag::B0: return "B0";
        case Tag::Aa: return "Aa";
        case Tag::Ba: return "Ba";
        case Tag::AaStar: return "AaStar";
        case Tag::BaStar: return "BaStar";
    }
    return "";
}

PolyFun apply(const OperatorId& id, const PolyFun& f) {
    using Tag = OperatorId::Tag;
    PolyFun r;
    switch (id.tag) {
        case Tag::Mz: return mul_z(f);
        case Tag::Mzbar: return mul_zbar(f);
        case Tag::Dz: return ddz(f);
        case Tag::Dzbar: return ddzbar(f);
        case Tag::Rinf:
            for (const auto& [idx, c] : f.terms())
                if (idx.m > 0) r.set_term(idx.m - 1, idx.n, c);
            return r;
        case Tag::Linf:
            for (const auto& [idx, c] : f.terms())
                if (idx.n > 0) r.set_term(idx.m, idx.n - 1, c);
            return r;
        case Tag::Iinf:
            for (const auto& [idx, c] : f.terms())
                r.set_term(idx.m + 1, idx.n, c / double(idx.m + 1));
            return r;
        case Tag::Jinf:
            for (const auto& [idx, c] : f.terms())
                r.set_term(idx.m, idx.n + 1, c / double(idx.n + 1));
            return r;
        case Tag::A0:
            for (const auto& [idx, c] : f.terms())
                if (idx.m > 0)
                    r.set_term(idx.m - 1, idx.n, c * (double(idx.m) / double(idx.m + idx.n)));
            return r;
        case Tag::B0:
            for (const auto& [idx, c] : f.terms())
                if (idx.n > 0)
                    r.set_term(idx.m, idx.n - 1, c * (double(idx.n) / double(idx.m + idx.n)));
            return r;
        case Tag::Aa: return apply_aa(f, id.a, false);
        case Tag::Ba: return apply_aa(f, id.a, true);
        case Tag::AaStar: return apply_aa_star(f, id.a, false);
        case Tag::BaStar: return apply_aa_star(f, id.a, true);
    }
    throw std::invalid_argument("apply: bad operator id");
}

OperatorReport adjoint_residual(const OperatorId& left, const OperatorId& right,
                                const SpaceWeight& s, int degree, double tolerance) {
    if (degree < 1 || degree > PolyFun::kDegreeCap)
        throw std::invalid_argument("adjoint_residual: bad degree");
    if (!(tolerance > 0.0)) throw std::invalid_argument("adjoint_residual: bad tolerance");

    std::vector<MonomialIndex> basis;
    for (int m = 0; m < degree; ++m)
        for (int n = 0; m + n < degree; ++n) basis.push_back({m, n});

    std::vector<PolyFun> lhs, rhs;
    lhs.reserve(basis.size());
    rhs.reserve(basis.size());
    for (const auto& idx : basis) {
        lhs.push_back(apply(left, PolyFun::monomial(idx.m, idx.n)));
        rhs.push_back(apply(right, PolyFun::monomial(idx.m, idx.n)));
    }

    double worst = 0.0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const PolyFun f = PolyFun::monomial(basis[i].m, basis[i].n);
        for (std::size_t j = 0; j < basis.size(); ++j) {
            const PolyFun g = PolyFun::monomial(basis[j].m, basis[j].n);
            const Complex a = inner(lhs[i], g, s);
            const Complex b = inner(f, rhs[j], s);
            worst = std::max(worst, std::abs(a - b));
        }
    }

    OperatorReport rep;
    rep.left = std::string(left.name());
    rep.right = std::string(right.name());
    rep.space = s.kind();
    rep.degree = degree;
    rep.max_residual = worst;
    rep.tolerance = tolerance;
    rep.passed = worst <= tolerance;
    return rep;
}

double commutator_residual(const PolyFun& f) {
    if (f.degree() >= PolyFun::kDegreeCap)
        throw std::invalid_argument("commutator_residual: deg(f) must be below the cap");
    const PolyFun dz_mz = sub(ddz(mul_z(f)), mul_z(ddz(f)));
    const PolyFun dzb_mzb = sub(ddzbar(mul_zbar(f)), mul_zbar(ddzbar(f)));
    return std::max(max_coeff_distance(dz_mz, f), max_coeff_distance(dzb_mzb, f));
}

std::pair<double, double> contraction_check(const PolyFun& f, const SpaceWeight& s) {
    if (s.kind() != SpaceKind::SF)
        throw std::invalid_argument("contraction_check: stated for the SF weights");
    const PolyFun shifted = apply(OperatorId{OperatorId::Tag::Rinf}, f);
    const double lhs = inner(shifted, shifted, s).real();
    double origin_mass = 0.0; // sum_n n! |a_{0,n}|^2, the slice values at 0
    for (const auto& [idx, c] : f.terms())
        if (idx.m == 0) origin_mass += factorial(idx.n) * std::norm(c);
    const double rhs = inner(f, f, s).real() - origin_mass;
    return {lhs, rhs};
}

double gleason_residual(const PolyFun& f) {
    const PolyFun a0f = apply(OperatorId{OperatorId::Tag::A0}, f);
    const PolyFun b0f = apply(OperatorId{OperatorId::Tag::B0}, f);
    const PolyFun recombined = add(mul_z(a0f), mul_zbar(b0f));
    PolyFun centered = f;
    centered.add_term(0, 0, -f.coeff(0, 0));
    return max_coeff_distance(centered, recombined);
}

double da_gleason_residual(Complex w, Complex a, int degree) {
    const SpaceWeight da(SpaceKind::DA);
    da.require_in_domain(w);
    da.require_in_domain(a);

    const PolyFun section = kernel_section(da, w, degree);
    const Complex denom = 1.0 - 2.0 * std::real(w * std::conj(a));
    const Complex ca = std::conj(w) / denom; // closed-form action of Aa* on the section
    const Complex cb = w / denom;
    const Complex f_at_a = eval(section, a);

    double worst = 0.0;
    for (int ir = 1; ir <= 4; ++ir) {
        const double r = 0.15 * ir;
        for (int it = 0; it < 12; ++it) {
            const double th = 2.0 * M_PI * it / 12.0;
            const Complex z = std::polar(r, th);
            const Complex fz = eval(section, z);
            const Complex lhs = fz - f_at_a;
            const Complex rhs = (z - a) * ca * fz + (std::conj(z) - std::conj(a)) * cb * fz;
            worst = std::max(worst, std::abs(lhs - rhs));
        }
    }
    // include the origin
    {
        const Complex fz = eval(section, Complex{0.0, 0.0});
        const Complex lhs = fz - f_at_a;
        const Complex rhs = (-a) * ca * fz + (-std::conj(a)) * cb * fz;
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

std::pair<double, double> eigenfunction_residual(Complex lambda1, Complex lambda2,
                                                 int degree) {
    if (std::abs(lambda1) >= 1.0 || std::abs(lambda2) >= 1.0)
        throw DomainViolationError("eigenfunction_residual: eigenvalues must lie in the disk");
    if (degree < 1 || degree > PolyFun::kDegreeCap)
        throw std::invalid_argument("eigenfunction_residual: bad degree");

    PolyFun f;
    Complex p1{1.0, 0.0};
    for (int m = 0; m <= degree; ++m) {
        Complex c = p1;
        for (int n = 0; m + n <= degree; ++n) {
            f.set_term(m, n, c);
            c *= lambda2;
        }
        p1 *= lambda1;
    }

    const PolyFun rf = apply(OperatorId{OperatorId::Tag::Rinf}, f);
    const PolyFun lf = apply(OperatorId{OperatorId::Tag::Linf}, f);
    double r1 = 0.0, r2 = 0.0;
    for (const auto& [idx, c] : f.terms()) {
        if (idx.m + idx.n > degree - 1) continue; // truncation boundary excluded
        r1 = std::max(r1, std::abs(rf.coeff(idx.m, idx.n) - lambda1 * c));
        r2 = std::max(r2, std::abs(lf.coeff(idx.m, idx.n) - lambda2 * c));
    }
    return {r1, r2};
}

double a0b0_common_eigenfunction_residual(Complex a, Complex b, int degree) {
    if (!(std::abs(a) + std::abs(b) < 1.0))
        throw DomainViolationError("a0b0_common_eigenfunction_residual: need |a|+|b| < 1");
    if (degree < 1 || degree > PolyFun::kDegreeCap)
        throw std::invalid_argument("a0b0_common_eigenfunction_residual: bad degree");

    // truncation of 1/(1 - a z - b zbar): coefficients C(m+n, m) a^m b^n
    PolyFun f;
    Complex pa{1.0, 0.0};
    for (int m = 0; m <= degree; ++m) {
        Complex c = pa;
        for (int n = 0; m + n <= degree; ++n) {
            double binom = 1.0;
            for (int i = 0; i < m; ++i) binom = binom * double(m + n - i) / double(m - i);
            f.set_term(m, n, binom * c);
            c *= b;
        }
        pa *= a;
    }

    const PolyFun af = apply(OperatorId{OperatorId::Tag::A0}, f);
    const PolyFun bf = apply(OperatorId{OperatorId::Tag::B0}, f);
    double worst = 0.0;
    for (const auto& [idx, c] : f.terms()) {
        if (idx.m + idx.n > degree - 1) continue;
        worst = std::max(worst, std::abs(af.coeff(idx.m, idx.n) - a * c));
        worst = std::max(worst, std::abs(bf.coeff(idx.m, idx.n) - b * c));
    }
    return worst;
}

} // namespace polyfock
