#include "polyfock/json_io.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace polyfock {

namespace {

using nlohmann::json;

double finite_number(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number())
        throw std::invalid_argument(std::string("json: missing numeric field '") + key + "'");
    const double v = j[key].get<double>();
    if (!std::isfinite(v))
        throw std::invalid_argument(std::string("json: non-finite field '") + key + "'");
    return v;
}

int index_field(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw std::invalid_argument(std::string("json: missing integer field '") + key + "'");
    const long long v = j[key].get<long long>();
    if (v < 0 || v > PolyFun::kDegreeCap)
        throw std::invalid_argument(std::string("json: index field '") + key + "' out of range");
    return int(v);
}

json terms_to_json(const std::map<MonomialIndex, Complex>& terms) {
    json arr = json::array();
    for (const auto& [idx, c] : terms)
        arr.push_back({{"m", idx.m}, {"n", idx.n}, {"re", c.real()}, {"im", c.imag()}});
    return json{{"terms", arr}};
}

template <typename Sink>
void terms_from_json(const json& j, Sink&& sink) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw std::invalid_argument("json: expected an object with a 'terms' array");
    std::set<std::pair<int, int>> seen;
    for (const json& t : j["terms"]) {
        const int m = index_field(t, "m");
        const int n = index_field(t, "n");
        if (!seen.insert({m, n}).second)
            throw std::invalid_argument("json: duplicate (m,n) key in 'terms'");
        sink(m, n, Complex{finite_number(t, "re"), finite_number(t, "im")});
    }
}

std::string_view space_tag(SpaceKind k) { return SpaceWeight(k).tag(); }

} // namespace

json to_json(const PolyFun& f) { return terms_to_json(f.terms()); }

PolyFun polyfun_from_json(const json& j) {
    PolyFun f;
    terms_from_json(j, [&](int m, int n, Complex c) { f.set_term(m, n, c); });
    return f;
}

json to_json(const HermiteCoeffs& phi) { return terms_to_json(phi.terms()); }

HermiteCoeffs hermite_coeffs_from_json(const json& j) {
    HermiteCoeffs phi;
    terms_from_json(j, [&](int m, int n, Complex c) { phi.set_term(m, n, c); });
    return phi;
}

json complex_to_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

Complex complex_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("json: expected {re, im}");
    return {finite_number(j, "re"), finite_number(j, "im")};
}

std::vector<Complex> complex_list_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("json: expected a list of {re, im}");
    std::vector<Complex> out;
    out.reserve(j.size());
    for (const json& e : j) out.push_back(complex_from_json(e));
    return out;
}

json to_json(const OperatorReport& r) {
    return json{{"left", r.left},
                {"right", r.right},
                {"space", std::string(space_tag(r.space))},
                {"degree", r.degree},
                {"max_residual", r.max_residual},
                {"tolerance", r.tolerance},
                {"passed", r.passed}};
}

json to_json(const FeasibilityResult& r) {
    return json{{"feasible", r.feasible}, {"min_eig", r.min_eigenvalue}};
}

json to_json(const CheckResult& r) {
    json j{{"name", r.name},
           {"criterion", r.criterion},
           {"degree", r.degree},
           {"max_residual", r.max_residual},
           {"tolerance", r.tolerance},
           {"passed", r.passed}};
    if (r.expected_fail) j["expected_fail"] = true;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

json to_json(const std::vector<CheckResult>& rs) {
    json arr = json::array();
    for (const CheckResult& r : rs) arr.push_back(to_json(r));
    return arr;
}

} // namespace polyfock
