#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "picmod/form.hpp"

namespace picmod {

// Serializable description of a quadratic form:
//   {"name": ..., "orders": [n1, ...], "q_diag": ["a/b", ...],
//    "sigma_offdiag": {"i,j": "a/b", ...}}
// with rationals as "num/den" strings throughout.
struct FormSpec {
    std::string name;
    std::vector<i64> orders;
    std::vector<std::string> q_diag;
    std::map<std::string, std::string> sigma_offdiag;

    bool operator==(const FormSpec&) const = default;
};

FormSpec form_spec_from_json(const nlohmann::json& doc);
nlohmann::ordered_json to_json(const FormSpec& spec);

// Realizes a FormSpec as a validated form; throws ParseError / InvalidFormError
// with the offending location.
QuadraticForm realize(const FormSpec& spec);
QuadraticForm parse_form(const nlohmann::json& doc);

// Round-trip back to a spec (named after the caller's choice).
FormSpec spec_of(const std::string& name, const QuadraticForm& q);

// The named forms used throughout the test and comparison harness.
std::vector<FormSpec> builtin_catalog();
FormSpec catalog_entry(const std::string& name);

}  // namespace picmod
