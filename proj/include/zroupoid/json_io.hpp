#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "zroupoid/algebra.hpp"
#include "zroupoid/catalog.hpp"
#include "zroupoid/enumerate.hpp"
#include "zroupoid/order.hpp"

namespace zroupoid {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kAlgebraSchema = "zroupoid-v1";
inline constexpr std::string_view kOrderSchema = "order-report-v1";
inline constexpr std::string_view kCheckSchema = "check-result-v1";
inline constexpr std::string_view kIsoSchema = "iso-result-v1";
inline constexpr std::string_view kEnumerationSchema = "enumeration-v1";
inline constexpr std::string_view kSuiteSchema = "suite-report-v1";

Json to_json(const FiniteZroupoid& alg);

/// Throws ValidationError for a missing or wrong "schema" field, missing
/// fields, or a table the algebra constructor rejects.
FiniteZroupoid algebra_from_json(const Json& j);

/// Accepts a zroupoid-v1 object, an array of them, or an enumeration-v1
/// document.
std::vector<FiniteZroupoid> algebras_from_json(const Json& j);

/// Parses text as JSON, reporting syntax errors as ValidationError.
Json parse_json(std::string_view text);

Json to_json(const OrderReport& report, const FiniteZroupoid& alg);
Json to_json(const CheckResult& result, const Statement& statement);
Json to_json(const IsoResult& result);
Json to_json(const EnumerationResult& result, const SearchConfig& config);
Json to_json(const SuiteReport& report, const std::vector<NamedCheck>& checks);

/// Assignment as an object whose keys keep the variable order.
Json to_json(const Assignment& assignment);

}  // namespace zroupoid
