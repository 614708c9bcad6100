#pragma once

#include <nlohmann/json.hpp>

#include "picmod/catalog.hpp"
#include "picmod/cocycle.hpp"
#include "picmod/picard.hpp"

namespace picmod {

// JSON builders shared by the CLI and the acceptance suite.  All output is
// ordered_json assembled in a fixed order, so serialized reports are
// byte-identical across runs and worker counts.

nlohmann::ordered_json hom_to_json(const GroupHom& h);

// Closed-form comparison rows for one form: the applicable worked example,
// the kernel proposition, and (for Tannakian radicals) the cokernel
// proposition.  Mismatches set "match": false and are findings, not errors.
nlohmann::ordered_json comparison_rows(const QuadraticForm& q, const SizeGuard& guard = {});

nlohmann::ordered_json describe_report(const FormSpec& spec, const SizeGuard& guard = {});
nlohmann::ordered_json picard_report(const FormSpec& spec, const SizeGuard& guard = {});
nlohmann::ordered_json orthogonal_report(const FormSpec& spec, const SizeGuard& guard = {});
nlohmann::ordered_json modcats_report(const FormSpec& spec, bool invertible_only,
                                      const SizeGuard& guard = {});
// The full crossed-module report schema.
nlohmann::ordered_json form_report(const FormSpec& spec, const SizeGuard& guard = {});
nlohmann::ordered_json kernel_report_json(const FormSpec& spec, const SizeGuard& guard = {});
nlohmann::ordered_json cokernel_report_json(const FormSpec& spec, const SizeGuard& guard = {});
nlohmann::ordered_json center_report(const FormSpec& spec, const SizeGuard& guard = {});
nlohmann::ordered_json cohomology_report(const FormSpec& spec, const SizeGuard& guard = {});
nlohmann::ordered_json paper_check_report(const std::vector<FormSpec>& catalog,
                                          const SizeGuard& guard = {});

// Cocycle tables as sparse flattened-rank maps over the group's mixed-radix
// element order; absent keys are zero.
nlohmann::ordered_json cocycle_to_json(const AbelianCocycle& p);
AbelianCocycle cocycle_from_json(const nlohmann::json& doc);

}  // namespace picmod
