// picmod - Picard crossed modules of pre-metric groups, exactly.
//
// Feed it a quadratic form on a finite abelian group (builtin name or JSON
// document) and it enumerates O(A,q) and P(A,q), classifies module-category
// data (B, beta), verifies the crossed-module axioms, analyses ker/coker of
// d, builds the Drinfeld-center form, and audits the closed-form order
// predictions.  All arithmetic is exact; every order is brute-forced.
//
// Exit codes: 0 on success (mathematical discrepancies are findings, not
// failures), 1 on input or guard errors, 2 on usage errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "picmod/errors.hpp"
#include "picmod/parallel.hpp"
#include "picmod/report.hpp"

using namespace picmod;
using nlohmann::ordered_json;

namespace {

struct Options {
    std::string input_path;
    std::string catalog_name;  // "builtin" to take every entry
    std::string form_name;
    std::string format = "table";
    i64 max_group_order = 36;
    i64 max_candidates = 10'000'000;
    i64 max_center_base_order = 12;
    int threads = 1;
    bool invertible_only = false;

    SizeGuard guard() const {
        return SizeGuard{max_candidates, max_group_order, max_center_base_order};
    }
};

void apply_env_guard(Options& opt) {
    const char* env = std::getenv("METRIC_GROUP_GUARD");
    if (!env) return;
    std::stringstream ss(env);
    std::string part;
    int slot = 0;
    while (std::getline(ss, part, ':') && slot < 3) {
        try {
            const i64 v = std::stoll(part);
            if (slot == 0) opt.max_group_order = v;
            if (slot == 1) opt.max_candidates = v;
            if (slot == 2) opt.max_center_base_order = v;
        } catch (const std::logic_error&) {
            throw ParseError("METRIC_GROUP_GUARD: expected integers separated by ':'");
        }
        ++slot;
    }
}

std::vector<FormSpec> resolve_forms(const Options& opt) {
    if (!opt.form_name.empty()) return {catalog_entry(opt.form_name)};
    if (!opt.input_path.empty()) {
        std::ifstream in(opt.input_path);
        if (!in) throw ParseError("cannot open input file '" + opt.input_path + "'");
        nlohmann::json doc;
        try {
            in >> doc;
        } catch (const nlohmann::json::exception& e) {
            throw ParseError("cannot parse '" + opt.input_path + "': " + e.what());
        }
        std::vector<FormSpec> out;
        if (doc.is_array())
            for (const auto& item : doc) out.push_back(form_spec_from_json(item));
        else
            out.push_back(form_spec_from_json(doc));
        return out;
    }
    if (opt.catalog_name == "builtin" || opt.catalog_name.empty()) return builtin_catalog();
    throw ParseError("unknown catalog '" + opt.catalog_name + "' (only 'builtin' exists)");
}

void check_order_guard(const FormSpec& spec, const Options& opt) {
    i64 order = 1;
    for (i64 n : spec.orders) order *= n;
    if (order > opt.max_group_order)
        throw SizeGuardError("form '" + spec.name + "' has order " + std::to_string(order) +
                             " > --max-group-order " + std::to_string(opt.max_group_order));
}

// ---- rendering ------------------------------------------------------------

std::string matrix_str(const ordered_json& rows) {
    std::string out = "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out += "; ";
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (j) out += " ";
            out += rows[i][j].dump();
        }
    }
    return out + "]";
}

void print_table(const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty()) return;
    std::vector<std::size_t> width(rows[0].size(), 0);
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
        }
        std::cout << line << "\n";
    }
}

void print_csv(const std::vector<std::vector<std::string>>& rows) {
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) std::cout << ",";
            std::cout << row[c];
        }
        std::cout << "\n";
    }
}

void emit(const Options& opt, const ordered_json& doc,
          const std::vector<std::vector<std::string>>& rows) {
    if (opt.format == "json")
        std::cout << doc.dump(2) << "\n";
    else if (opt.format == "csv")
        print_csv(rows);
    else
        print_table(rows);
}

std::vector<std::vector<std::string>> flat_rows(const ordered_json& doc,
                                                const std::vector<std::string>& keys) {
    std::vector<std::vector<std::string>> rows{keys};
    std::vector<std::string> row;
    for (const auto& k : keys) {
        const auto& v = doc.at(k);
        row.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    }
    rows.push_back(row);
    return rows;
}

// ---- commands -------------------------------------------------------------

int cmd_simple(const Options& opt, const std::string& which) {
    ordered_json all = ordered_json::array();
    std::vector<std::vector<std::string>> rows;
    for (const auto& spec : resolve_forms(opt)) {
        check_order_guard(spec, opt);
        const SizeGuard guard = opt.guard();
        ordered_json doc;
        std::vector<std::string> header, row;
        if (which == "describe") {
            doc = describe_report(spec, guard);
            header = {"name", "group_order", "nondegenerate", "radical_tannakian",
                      "classification"};
            row = {spec.name, doc["group_order"].dump(), doc["nondegenerate"].dump(),
                   doc["radical_tannakian"].dump(), doc["classification"]};
        } else if (which == "picard") {
            doc = picard_report(spec, guard);
            header = {"name", "picard_order", "elements"};
            std::string els;
            for (const auto& e : doc["elements"]) {
                if (!els.empty()) els += " ";
                els += matrix_str(e["f"]);
            }
            row = {spec.name, doc["picard_order"].dump(), els};
        } else if (which == "orthogonal") {
            doc = orthogonal_report(spec, guard);
            header = {"name", "orthogonal_order"};
            row = {spec.name, doc["orthogonal_order"].dump()};
        } else if (which == "kernel") {
            doc = kernel_report_json(spec, guard);
            header = {"name", "kernel_order", "radical_picard_order", "radical_tannakian",
                      "isomorphism_ok"};
            row = {spec.name, doc["kernel_order"].dump(), doc["radical_picard_order"].dump(),
                   doc["radical_tannakian"].dump(), doc["isomorphism_ok"].dump()};
        } else if (which == "cokernel") {
            doc = cokernel_report_json(spec, guard);
            header = {"name", "orthogonal_order", "image_order", "coset_count", "image_normal"};
            row = {spec.name, doc["orthogonal_order"].dump(), doc["image_order"].dump(),
                   doc["coset_count"].dump(), doc["image_normal"].dump()};
        } else if (which == "center") {
            doc = center_report(spec, guard);
            header = {"name", "center_orders", "center_nondegenerate", "trivializable_count"};
            row = {spec.name, doc["center_form"]["orders"].dump(),
                   doc["center_nondegenerate"].dump(), doc["trivializable_count"].dump()};
        } else if (which == "cohomology") {
            doc = cohomology_report(spec, guard);
            header = {"name", "valid", "violations", "trace_roundtrip_ok"};
            row = {spec.name, doc["valid"].dump(), doc["violations"].dump(),
                   doc["trace_roundtrip_ok"].dump()};
        } else if (which == "crossed-module") {
            doc = form_report(spec, guard);
            header = {"name", "picard_order", "orthogonal_order", "axioms_ok",
                      "kernel_central", "image_normal"};
            row = {spec.name, doc["picard_order"].dump(), doc["orthogonal_order"].dump(),
                   doc["axioms_ok"].dump(), doc["kernel_central"].dump(),
                   doc["image_normal"].dump()};
        }
        all.push_back(doc);
        if (rows.empty()) rows.push_back(header);
        rows.push_back(row);
    }
    emit(opt, all.size() == 1 ? all[0] : all, rows);
    return 0;
}

int cmd_modcats(const Options& opt) {
    ordered_json all = ordered_json::array();
    std::vector<std::vector<std::string>> rows{
        {"name", "subgroup_order", "basis", "invertible", "beta"}};
    for (const auto& spec : resolve_forms(opt)) {
        check_order_guard(spec, opt);
        const ordered_json doc = modcats_report(spec, opt.invertible_only, opt.guard());
        for (const auto& d : doc["data"]) {
            std::string beta;
            for (const auto& v : d["beta"]) {
                if (!beta.empty()) beta += " ";
                beta += v.get<std::string>();
            }
            rows.push_back({spec.name, d["subgroup"]["order"].dump(),
                            d["subgroup"]["basis"].dump(), d["invertible"].dump(), beta});
        }
        all.push_back(doc);
    }
    emit(opt, all.size() == 1 ? all[0] : all, rows);
    return 0;
}

int cmd_paper_check(const Options& opt) {
    const ordered_json doc = paper_check_report(resolve_forms(opt), opt.guard());
    std::vector<std::vector<std::string>> rows{
        {"form", "claim", "detail", "predicted", "computed", "verdict"}};
    for (const auto& entry : doc["forms"])
        for (const auto& row : entry["comparisons"])
            rows.push_back({entry["name"], row["claim"], row["detail"],
                            row["predicted"].dump(), row["computed"].dump(),
                            row["match"].get<bool>() ? "MATCH" : "MISMATCH"});
    rows.push_back({});
    rows.push_back({"total", doc["total_comparisons"].dump(), "flagged",
                    doc["flagged_comparisons"].dump(), "classes",
                    doc["flagged_claims"].dump()});
    emit(opt, doc, rows);
    return 0;
}

int cmd_catalog(const Options& opt, bool list_only) {
    const auto catalog = builtin_catalog();
    if (list_only) {
        std::vector<std::vector<std::string>> rows{{"name", "orders", "group_order"}};
        for (const auto& spec : catalog) {
            i64 order = 1;
            for (i64 n : spec.orders) order *= n;
            rows.push_back({spec.name, ordered_json(spec.orders).dump(), std::to_string(order)});
        }
        ordered_json doc = ordered_json::array();
        for (const auto& spec : catalog) doc.push_back(to_json(spec));
        emit(opt, doc, rows);
        return 0;
    }
    ordered_json doc = ordered_json::array();
    std::vector<FormSpec> wanted =
        opt.form_name.empty() ? catalog : std::vector<FormSpec>{catalog_entry(opt.form_name)};
    for (const auto& spec : wanted) doc.push_back(to_json(spec));
    std::cout << (doc.size() == 1 ? doc[0] : doc).dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Picard crossed modules of pre-metric groups, in exact arithmetic"};
    app.require_subcommand(1);

    Options opt;
    try {
        apply_env_guard(opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    auto add_common = [&](CLI::App* sub, bool with_invertible = false) {
        sub->add_option("--input", opt.input_path, "JSON form document (object or array)");
        sub->add_option("--catalog", opt.catalog_name, "'builtin' selects every builtin form");
        sub->add_option("--name", opt.form_name, "builtin form by name");
        sub->add_option("--format", opt.format, "json|table|csv")
            ->check(CLI::IsMember({"json", "table", "csv"}));
        sub->add_option("--max-group-order", opt.max_group_order, "largest |A| accepted");
        sub->add_option("--max-candidates", opt.max_candidates,
                        "largest enumeration candidate space");
        sub->add_option("--threads", opt.threads, "worker cap (0 = hardware)");
        if (with_invertible)
            sub->add_flag("--invertible-only", opt.invertible_only,
                          "keep only invertible (B,beta) data");
    };

    const std::vector<std::string> simple = {"describe", "picard",   "orthogonal",
                                             "kernel",   "cokernel", "center",
                                             "cohomology", "crossed-module"};
    for (const auto& name : simple) add_common(app.add_subcommand(name));
    add_common(app.add_subcommand("modcats", "classify module-category data"), true);
    add_common(app.add_subcommand("paper-check",
                                  "compare brute force against the closed-form predictions"));
    CLI::App* cat = app.add_subcommand("catalog", "show the builtin form catalog");
    bool list_only = false;
    cat->add_flag("--list", list_only, "print names and orders only");
    add_common(cat);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    par::set_thread_count(opt.threads);

    try {
        for (const auto& name : simple)
            if (app.got_subcommand(name)) return cmd_simple(opt, name);
        if (app.got_subcommand("modcats")) return cmd_modcats(opt);
        if (app.got_subcommand("paper-check")) return cmd_paper_check(opt);
        if (app.got_subcommand("catalog")) return cmd_catalog(opt, list_only);
    } catch (const SizeGuardError& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
