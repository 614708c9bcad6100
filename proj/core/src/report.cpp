#include "picmod/report.hpp"

#include <algorithm>
#include <string>

#include "picmod/center.hpp"
#include "picmod/errors.hpp"
#include "picmod/modcat.hpp"

namespace picmod {

using nlohmann::ordered_json;

ordered_json hom_to_json(const GroupHom& h) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : h.matrix()) rows.push_back(row);
    return rows;
}

namespace {

ordered_json subgroup_to_json(const Subgroup& s) {
    ordered_json doc;
    doc["order"] = s.order();
    doc["basis_orders"] = s.basis_orders();
    ordered_json basis = ordered_json::array();
    for (const auto& b : s.basis()) basis.push_back(b.coords);
    doc["basis"] = basis;
    return doc;
}

ordered_json row_json(const std::string& claim, const std::string& detail, i64 predicted,
                      i64 predicted_alternate, i64 computed, bool match) {
    ordered_json row;
    row["claim"] = claim;
    row["detail"] = detail;
    row["predicted"] = predicted;
    if (predicted_alternate >= 0) row["predicted_alternate"] = predicted_alternate;
    row["computed"] = computed;
    row["match"] = match;
    return row;
}

}  // namespace

ordered_json comparison_rows(const QuadraticForm& q, const SizeGuard& guard) {
    ordered_json rows = ordered_json::array();
    const PredictionReport pred = paper_predictions(q, guard);
    for (const auto& r : pred.rows)
        rows.push_back(
            row_json(r.claim, r.detail, r.predicted, r.predicted_alternate, r.computed, r.match));

    const KernelReport ker = kernel_partial(q, guard);
    rows.push_back(row_json(
        "kernel_proposition", "ker d = P(A-perp, q|) through induction",
        static_cast<i64>(ker.radical_picard.size()), -1, static_cast<i64>(ker.kernel.size()),
        ker.isomorphism_ok));

    const CokernelReport cok = cokernel_partial(q, guard);
    if (cok.has_comparison)
        rows.push_back(row_json("cokernel_proposition",
                                "ker(coker d -> Aut(A-perp)) = Hom(A/A-perp, A-perp)",
                                cok.hom_quotient_radical_order, -1,
                                cok.restriction_kernel_order,
                                cok.exactness_match && cok.restriction_well_defined));
    return rows;
}

ordered_json describe_report(const FormSpec& spec, const SizeGuard& guard) {
    const QuadraticForm q = realize(spec);
    const RadicalInfo rad = radical(q);
    ordered_json doc;
    doc["form"] = to_json(spec);
    doc["group_order"] = q.group().order();
    doc["nondegenerate"] = rad.subgroup.order() == 1;
    doc["radical"] = subgroup_to_json(rad.subgroup);
    doc["radical_tannakian"] = rad.tannakian;
    doc["classification"] = paper_predictions(q, guard).classification;
    return doc;
}

ordered_json picard_report(const FormSpec& spec, const SizeGuard& guard) {
    const QuadraticForm q = realize(spec);
    const auto picard = enumerate_picard(q, guard);
    ordered_json doc;
    doc["form"] = to_json(spec);
    doc["picard_order"] = static_cast<i64>(picard.size());
    ordered_json els = ordered_json::array();
    for (const auto& f : picard) {
        ordered_json e;
        e["f"] = hom_to_json(f.f);
        e["partial"] = hom_to_json(partial_hom(f));
        els.push_back(e);
    }
    doc["elements"] = els;
    return doc;
}

ordered_json orthogonal_report(const FormSpec& spec, const SizeGuard& guard) {
    const QuadraticForm q = realize(spec);
    const auto ortho = orthogonal_group(q, guard);
    ordered_json doc;
    doc["form"] = to_json(spec);
    doc["orthogonal_order"] = static_cast<i64>(ortho.size());
    ordered_json els = ordered_json::array();
    for (const auto& g : ortho) els.push_back(hom_to_json(g));
    doc["elements"] = els;
    return doc;
}

ordered_json modcats_report(const FormSpec& spec, bool invertible_only, const SizeGuard& guard) {
    const QuadraticForm q = realize(spec);
    ordered_json doc;
    doc["form"] = to_json(spec);
    ordered_json list = ordered_json::array();
    i64 invertible = 0;
    for (const auto& d : enumerate_module_cats(q, guard)) {
        const bool inv = is_invertible_modcat(d);
        if (inv) ++invertible;
        if (invertible_only && !inv) continue;
        ordered_json e;
        e["subgroup"] = subgroup_to_json(d.b);
        ordered_json beta = ordered_json::array();
        for (const auto& v : d.beta) beta.push_back(v.str());
        e["beta"] = beta;
        e["invertible"] = inv;
        if (inv) e["picard_image"] = hom_to_json(to_picard(d).f);
        list.push_back(e);
    }
    doc["invertible_count"] = invertible;
    doc["data"] = list;
    return doc;
}

ordered_json form_report(const FormSpec& spec, const SizeGuard& guard) {
    const QuadraticForm q = realize(spec);
    const CrossedModuleReport cm = verify_crossed_module(q, guard);
    const KernelReport ker = kernel_partial(q, guard);
    const CokernelReport cok = cokernel_partial(q, guard);

    ordered_json doc;
    doc["form"] = to_json(spec);
    doc["picard_order"] = static_cast<i64>(cm.picard.size());
    doc["orthogonal_order"] = static_cast<i64>(cm.orthogonal.size());
    ordered_json table = ordered_json::array();
    for (std::size_t i = 0; i < cm.picard.size(); ++i) {
        ordered_json e;
        e["f"] = hom_to_json(cm.picard[i].f);
        e["partial"] = hom_to_json(cm.orthogonal[static_cast<std::size_t>(cm.partial_index[i])]);
        table.push_back(e);
    }
    doc["partial_table"] = table;
    doc["axioms_ok"] = cm.axioms_ok;
    doc["violations"] = static_cast<i64>(cm.violations.size());
    doc["kernel_central"] = cm.kernel_central;
    doc["image_normal"] = cm.image_normal;

    ordered_json kj;
    kj["order"] = static_cast<i64>(ker.kernel.size());
    kj["radical"] = subgroup_to_json(ker.rad.subgroup);
    kj["radical_tannakian"] = ker.rad.tannakian;
    kj["radical_picard_order"] = static_cast<i64>(ker.radical_picard.size());
    kj["isomorphism_ok"] = ker.isomorphism_ok;
    doc["kernel"] = kj;

    ordered_json cj;
    cj["image_order"] = cok.image_order;
    cj["coset_count"] = cok.coset_count;
    cj["image_normal"] = cok.image_normal;
    cj["radical_tannakian"] = cok.radical_tannakian;
    if (cok.has_comparison) {
        ordered_json cmp;
        cmp["hom_quotient_radical_order"] = cok.hom_quotient_radical_order;
        cmp["restriction_kernel_order"] = cok.restriction_kernel_order;
        cmp["restriction_well_defined"] = cok.restriction_well_defined;
        cmp["star_group_ok"] = cok.star_group_ok;
        cmp["match"] = cok.exactness_match;
        cj["comparison"] = cmp;
    } else {
        cj["comparison"] = nullptr;
    }
    doc["cokernel"] = cj;

    doc["paper_comparison"] = comparison_rows(q, guard);
    return doc;
}

ordered_json kernel_report_json(const FormSpec& spec, const SizeGuard& guard) {
    const QuadraticForm q = realize(spec);
    const KernelReport ker = kernel_partial(q, guard);
    ordered_json doc;
    doc["form"] = to_json(spec);
    doc["kernel_order"] = static_cast<i64>(ker.kernel.size());
    ordered_json els = ordered_json::array();
    for (const auto& f : ker.kernel) els.push_back(hom_to_json(f.f));
    doc["kernel"] = els;
    doc["radical"] = subgroup_to_json(ker.rad.subgroup);
    doc["radical_tannakian"] = ker.rad.tannakian;
    doc["radical_picard_order"] = static_cast<i64>(ker.radical_picard.size());
    doc["isomorphism_ok"] = ker.isomorphism_ok;
    return doc;
}

ordered_json cokernel_report_json(const FormSpec& spec, const SizeGuard& guard) {
    const QuadraticForm q = realize(spec);
    const CokernelReport cok = cokernel_partial(q, guard);
    ordered_json doc;
    doc["form"] = to_json(spec);
    doc["orthogonal_order"] = cok.orthogonal_order;
    doc["image_order"] = cok.image_order;
    doc["coset_count"] = cok.coset_count;
    doc["image_normal"] = cok.image_normal;
    doc["radical_tannakian"] = cok.radical_tannakian;
    if (cok.has_comparison) {
        doc["hom_quotient_radical_order"] = cok.hom_quotient_radical_order;
        doc["restriction_kernel_order"] = cok.restriction_kernel_order;
        doc["restriction_well_defined"] = cok.restriction_well_defined;
        doc["star_group_ok"] = cok.star_group_ok;
        doc["exactness_match"] = cok.exactness_match;
    }
    return doc;
}

ordered_json center_report(const FormSpec& spec, const SizeGuard& guard) {
    const QuadraticForm q = realize(spec);
    const CenterForm cf = center_form(q);
    ordered_json doc;
    doc["form"] = to_json(spec);
    doc["center_form"] = to_json(spec_of(spec.name + "_center", cf.doubled));
    doc["center_nondegenerate"] = is_nondegenerate(cf.doubled);
    doc["trivializable_count"] =
        static_cast<i64>(enumerate_trivializable(q, guard).size());
    return doc;
}

ordered_json cohomology_report(const FormSpec& spec, const SizeGuard& guard) {
    const QuadraticForm q = realize(spec);
    const AbelianCocycle p = standard_cocycle(q, guard);
    const CocycleValidation val = validate_abelian_cocycle(p);
    ordered_json doc;
    doc["form"] = to_json(spec);
    doc["valid"] = val.valid;
    doc["violations"] = static_cast<i64>(val.violations.size());
    doc["convention"] = val.convention;
    doc["trace_roundtrip_ok"] = trace_form(p) == q;
    doc["cocycle"] = cocycle_to_json(p);
    return doc;
}

ordered_json paper_check_report(const std::vector<FormSpec>& catalog, const SizeGuard& guard) {
    ordered_json doc;
    ordered_json forms = ordered_json::array();
    i64 total = 0, flagged = 0;
    std::vector<std::string> flagged_claims;
    for (const auto& spec : catalog) {
        const QuadraticForm q = realize(spec);
        ordered_json entry;
        entry["name"] = spec.name;
        entry["classification"] = paper_predictions(q, guard).classification;
        const ordered_json rows = comparison_rows(q, guard);
        for (const auto& row : rows) {
            ++total;
            if (!row.at("match").get<bool>()) {
                ++flagged;
                flagged_claims.push_back(row.at("claim").get<std::string>());
            }
        }
        entry["comparisons"] = rows;
        forms.push_back(entry);
    }
    std::sort(flagged_claims.begin(), flagged_claims.end());
    flagged_claims.erase(std::unique(flagged_claims.begin(), flagged_claims.end()),
                         flagged_claims.end());
    doc["forms"] = forms;
    doc["total_comparisons"] = total;
    doc["flagged_comparisons"] = flagged;
    doc["flagged_claims"] = flagged_claims;
    return doc;
}

ordered_json cocycle_to_json(const AbelianCocycle& p) {
    ordered_json doc;
    doc["orders"] = p.group.orders();
    ordered_json omega = ordered_json::object();
    for (std::size_t i = 0; i < p.omega.size(); ++i)
        if (!p.omega[i].is_zero()) omega[std::to_string(i)] = p.omega[i].str();
    ordered_json braid = ordered_json::object();
    for (std::size_t i = 0; i < p.c.size(); ++i)
        if (!p.c[i].is_zero()) braid[std::to_string(i)] = p.c[i].str();
    doc["omega"] = omega;
    doc["c"] = braid;
    return doc;
}

AbelianCocycle cocycle_from_json(const nlohmann::json& doc) {
    AbelianCocycle p;
    try {
        p.group = FinAbGroup(doc.at("orders").get<std::vector<i64>>());
        const i64 n = p.group.order();
        p.omega.assign(static_cast<std::size_t>(n * n * n), QZ());
        p.c.assign(static_cast<std::size_t>(n * n), QZ());
        for (const auto& [key, value] : doc.at("omega").items())
            p.omega.at(std::stoull(key)) = QZ::parse(value.get<std::string>());
        for (const auto& [key, value] : doc.at("c").items())
            p.c.at(std::stoull(key)) = QZ::parse(value.get<std::string>());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed cocycle document: ") + e.what());
    } catch (const std::out_of_range&) {
        throw ParseError("cocycle document: index out of range");
    } catch (const std::logic_error&) {
        throw ParseError("cocycle document: bad index");
    }
    return p;
}

}  // namespace picmod
