#include "picmod/catalog.hpp"

#include "picmod/errors.hpp"

namespace picmod {

FormSpec form_spec_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw ParseError("form document must be a JSON object");
    FormSpec spec;
    try {
        spec.name = doc.value("name", "");
        spec.orders = doc.at("orders").get<std::vector<i64>>();
        spec.q_diag = doc.at("q_diag").get<std::vector<std::string>>();
        if (doc.contains("sigma_offdiag"))
            spec.sigma_offdiag =
                doc.at("sigma_offdiag").get<std::map<std::string, std::string>>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed form document: ") + e.what());
    }
    return spec;
}

nlohmann::ordered_json to_json(const FormSpec& spec) {
    nlohmann::ordered_json doc;
    doc["name"] = spec.name;
    doc["orders"] = spec.orders;
    doc["q_diag"] = spec.q_diag;
    doc["sigma_offdiag"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : spec.sigma_offdiag) doc["sigma_offdiag"][key] = value;
    return doc;
}

QuadraticForm realize(const FormSpec& spec) {
    if (spec.q_diag.size() != spec.orders.size())
        throw ParseError("form '" + spec.name + "': q_diag length does not match orders");
    FinAbGroup group(spec.orders);
    std::vector<QZ> diag;
    for (const auto& s : spec.q_diag) diag.push_back(QZ::parse(s));
    std::map<std::pair<std::size_t, std::size_t>, QZ> off;
    for (const auto& [key, value] : spec.sigma_offdiag) {
        const auto comma = key.find(',');
        if (comma == std::string::npos)
            throw ParseError("form '" + spec.name + "': sigma_offdiag key '" + key +
                             "' is not \"i,j\"");
        std::size_t i = 0, j = 0;
        try {
            i = std::stoul(key.substr(0, comma));
            j = std::stoul(key.substr(comma + 1));
        } catch (const std::logic_error&) {
            throw ParseError("form '" + spec.name + "': sigma_offdiag key '" + key +
                             "' is not \"i,j\"");
        }
        if (i >= j || j >= spec.orders.size())
            throw ParseError("form '" + spec.name + "': sigma_offdiag key '" + key +
                             "' out of range (need i < j < rank)");
        off[{i, j}] = QZ::parse(value);
    }
    return QuadraticForm(std::move(group), std::move(diag), off);
}

QuadraticForm parse_form(const nlohmann::json& doc) { return realize(form_spec_from_json(doc)); }

FormSpec spec_of(const std::string& name, const QuadraticForm& q) {
    FormSpec spec;
    spec.name = name;
    spec.orders = q.group().orders();
    for (std::size_t i = 0; i < q.group().rank(); ++i) spec.q_diag.push_back(q.q_gen(i).str());
    for (std::size_t i = 0; i < q.group().rank(); ++i)
        for (std::size_t j = i + 1; j < q.group().rank(); ++j) {
            const QZ s = q.sigma_gen(i, j);
            if (!s.is_zero())
                spec.sigma_offdiag[std::to_string(i) + "," + std::to_string(j)] = s.str();
        }
    return spec;
}

std::vector<FormSpec> builtin_catalog() {
    auto entry = [](std::string name, std::vector<i64> orders, std::vector<std::string> diag,
                    std::map<std::string, std::string> off = {}) {
        return FormSpec{std::move(name), std::move(orders), std::move(diag), std::move(off)};
    };
    return {
        entry("triv2", {2}, {"0/1"}),
        entry("semion", {2}, {"1/4"}),
        entry("svec", {2}, {"1/2"}),
        entry("z3", {3}, {"1/3"}),
        entry("toric", {2, 2}, {"0/1", "0/1"}, {{"0,1", "1/2"}}),
        entry("klein0", {2, 2}, {"0/1", "0/1"}),
        entry("z4std", {4}, {"1/8"}),
        entry("z4ferm", {4}, {"1/2"}),
        entry("z4tan", {4}, {"1/4"}),
        entry("z2z4", {2, 4}, {"0/1", "1/8"}, {{"0,1", "1/2"}}),
        entry("cube0", {2, 2, 2}, {"0/1", "0/1", "0/1"}),
    };
}

FormSpec catalog_entry(const std::string& name) {
    for (auto& spec : builtin_catalog())
        if (spec.name == name) return spec;
    throw ParseError("no builtin form named '" + name + "'");
}

}  // namespace picmod
