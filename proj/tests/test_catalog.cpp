#include <doctest.h>

#include "helpers.hpp"
#include "picmod/errors.hpp"
#include "picmod/parallel.hpp"
#include "picmod/report.hpp"

using namespace picmod;

TEST_CASE("builtin catalog") {
    const auto catalog = builtin_catalog();
    CHECK(catalog.size() == 11);
    for (const auto& spec : catalog) CHECK_NOTHROW(realize(spec));
    CHECK(realize(catalog_entry("semion")).q_gen(0) == QZ(1, 4));
    CHECK(realize(catalog_entry("toric")).sigma_gen(0, 1) == QZ(1, 2));
    CHECK(catalog_entry("z2z4").orders == std::vector<i64>{2, 4});
    CHECK_THROWS_AS(catalog_entry("nope"), ParseError);
}

TEST_CASE("parse_form") {
    CHECK(parse_form(nlohmann::json::parse(R"({"orders":[2],"q_diag":["1/4"]})")) ==
          testing::make_form({2}, {"1/4"}));
    CHECK_THROWS_AS(parse_form(nlohmann::json::parse(R"({"orders":[2],"q_diag":["1/3"]})")),
                    InvalidFormError);
    CHECK(parse_form(nlohmann::json::parse(
              R"({"orders":[2,2],"q_diag":["0/1","0/1"],"sigma_offdiag":{"0,1":"1/2"}})")) ==
          testing::make_form({2, 2}, {"0/1", "0/1"}, {{"0,1", "1/2"}}));
    CHECK_THROWS_AS(parse_form(nlohmann::json::parse(R"({"orders":[2]})")), ParseError);
    CHECK_THROWS_AS(parse_form(nlohmann::json::parse(
                        R"({"orders":[2,2],"q_diag":["0/1","0/1"],"sigma_offdiag":{"1,0":"1/2"}})")),
                    ParseError);
    CHECK_THROWS_AS(parse_form(nlohmann::json::parse(R"({"orders":[2],"q_diag":["0/1","0/1"]})")),
                    ParseError);
}

TEST_CASE("spec round-trip: export, parse, export") {
    for (const auto& spec : builtin_catalog()) {
        const auto doc = to_json(spec);
        const FormSpec back = form_spec_from_json(doc);
        CHECK(back == spec);
        CHECK(to_json(back) == doc);
        CHECK(realize(back) == realize(spec));
    }
    // spec_of inverts realize up to naming.
    for (const auto& spec : builtin_catalog()) {
        const FormSpec again = spec_of(spec.name, realize(spec));
        CHECK(realize(again) == realize(spec));
    }
}

TEST_CASE("cocycle JSON round-trip") {
    for (const auto& name : {"semion", "z3", "z4std", "toric"}) {
        const AbelianCocycle p = standard_cocycle(realize(catalog_entry(name)));
        const AbelianCocycle back = cocycle_from_json(cocycle_to_json(p));
        CHECK(back.group == p.group);
        CHECK(back.omega == p.omega);
        CHECK(back.c == p.c);
    }
}

TEST_CASE("reports are deterministic across worker counts") {
    const FormSpec spec = catalog_entry("toric");
    par::set_thread_count(1);
    const std::string one = form_report(spec).dump();
    par::set_thread_count(4);
    const std::string four = form_report(spec).dump();
    par::set_thread_count(1);
    CHECK(one == four);
}
