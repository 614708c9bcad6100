#pragma once

#include <map>
#include <string>
#include <vector>

#include "picmod/catalog.hpp"
#include "picmod/form.hpp"
#include "picmod/qz.hpp"

namespace picmod::testing {

inline QuadraticForm make_form(std::vector<i64> orders, std::vector<std::string> diag,
                               std::map<std::string, std::string> off = {}) {
    FormSpec spec{"test", std::move(orders), std::move(diag), std::move(off)};
    return realize(spec);
}

inline std::vector<QuadraticForm> catalog_forms() {
    std::vector<QuadraticForm> out;
    for (const auto& spec : builtin_catalog()) out.push_back(realize(spec));
    return out;
}

// Every quadratic form on Z/n: q(e) ranges over the gcd(2,n)*n-torsion.
inline std::vector<QuadraticForm> cyclic_forms(i64 n) {
    const i64 t = (n % 2 == 0 ? 2 * n : n);
    std::vector<QuadraticForm> out;
    for (i64 k = 0; k < t; ++k) out.push_back(make_form({n}, {QZ(k, t).str()}));
    return out;
}

}  // namespace picmod::testing
