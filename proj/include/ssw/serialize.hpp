/*
 * Machine-readable output for enumeration results and class records:
 * JSON (schema 1), CSV, and Markdown renderings of the same flat data, plus
 * the JSON parser used to verify that emission round-trips.
 */
#pragma once

#include <string>

#include <json.hpp>

#include "ssw/enumerate.hpp"

namespace ssw {

// Polynomial coefficients as ascending decimal strings (they routinely
// exceed 2^53, so JSON numbers are not an option).
nlohmann::json poly_to_json(const IntPoly& f);
IntPoly poly_from_json(const nlohmann::json& a);

// One class: {"h":[…], "e":…, "P":[…], "order_L":…, "local":{"d":…, "r":…}}.
nlohmann::json class_to_json(const IsogenyClass& c);

// {"schema":1, "q":{"p":…,"n":…}, "g":…, "classes":[…]}.
nlohmann::json enumeration_to_json(const EnumerationResult& r);

// Inverse of enumeration_to_json for the serialized fields (h, e, P, order_L,
// local.d, local.r per class); throws std::runtime_error on schema violations.
EnumerationResult enumeration_from_json(const nlohmann::json& j);

// The same records as delimited text: header row
// p,n,g,order_L,e,d,r,h,P with coefficient lists quoted.
std::string enumeration_to_csv(const EnumerationResult& r);
std::string enumeration_to_md(const EnumerationResult& r);

// Data-equality on the serialized subset (used by round-trip tests).
bool serialized_equal(const EnumerationResult& a, const EnumerationResult& b);

}  // namespace ssw
