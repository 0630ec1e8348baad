#pragma once

#include <json.hpp>

#include "polyfock/operators.hpp"
#include "polyfock/pick.hpp"
#include "polyfock/polyfun.hpp"
#include "polyfock/suite.hpp"
#include "polyfock/transforms.hpp"

namespace polyfock {

// Wire schema, shared by files and CLI output:
//   PolyFun / HermiteCoeffs: {"terms":[{"m":int,"n":int,"re":num,"im":num},...]}
//     with unique (m,n) keys in any order.
//   complex point: {"re":num,"im":num}
//   point list:    [{"re":..,"im":..}, ...]
// Parsers throw std::invalid_argument on malformed input.

nlohmann::json to_json(const PolyFun& f);
PolyFun polyfun_from_json(const nlohmann::json& j);

nlohmann::json to_json(const HermiteCoeffs& phi);
HermiteCoeffs hermite_coeffs_from_json(const nlohmann::json& j);

nlohmann::json complex_to_json(Complex z);
Complex complex_from_json(const nlohmann::json& j);
std::vector<Complex> complex_list_from_json(const nlohmann::json& j);

nlohmann::json to_json(const OperatorReport& r);
nlohmann::json to_json(const FeasibilityResult& r);
nlohmann::json to_json(const CheckResult& r);
nlohmann::json to_json(const std::vector<CheckResult>& rs);

} // namespace polyfock
