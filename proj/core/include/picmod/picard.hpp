#pragma once

#include <array>
#include <string>
#include <vector>

#include "picmod/form.hpp"
#include "picmod/group.hpp"

namespace picmod {

// Element of P(A, q): a homomorphism f: A^ -> A with
//   (i)  id - sigma~ o f bijective, and
//   (ii) <phi, f(phi)> = q(f(phi)) for every character phi.
// The dual group shares A's orders list, so f is a plain square-shaped hom.
struct PicardElement {
    QuadraticForm form;
    GroupHom f;

    bool operator==(const PicardElement& o) const { return form == o.form && f == o.f; }
};

// Condition (ii) checked over all of A^ (it is quadratic in phi, so generator
// checking alone would be unsound).
bool is_picard_element(const QuadraticForm& q, const GroupHom& f);
// Sufficient finite check: (ii) on generators plus the polarization residual
// on generator pairs; property-tested against the exhaustive version.
bool is_picard_element_fast(const QuadraticForm& q, const GroupHom& f);

// All of P(A, q) by backtracking over dual-generator images with the
// generator/pair conditions as pruning; agrees with filtering Hom(A^, A)
// through is_picard_element, sorted by matrix entries.
std::vector<PicardElement> enumerate_picard(const QuadraticForm& q, const SizeGuard& guard = {});

// f <> g = f + g - f o sigma~ o g; the result is re-validated (closure is a
// theorem, failure throws).
PicardElement diamond(const PicardElement& f, const PicardElement& g);

// The diamond-inverse f*, realized as the dual homomorphism; asserts
// f <> f* = 0 = f* <> f and cross-checks (f o sigma~ - id)^{-1} o f when that
// composite is invertible.
PicardElement picard_inverse(const PicardElement& f);

// d(f) = id_A - f o sigma~, asserted to land in O(A, q).
GroupHom partial_hom(const PicardElement& f);

// ^g f = g o f o g^ with g^(phi) = phi o g; re-validated.
PicardElement act(const GroupHom& g, const PicardElement& f);

struct CrossedModuleViolation {
    std::string law;  // "axiom1" | "axiom2" | "assoc" | "action" | ...
    std::array<i64, 3> at;
};

struct CrossedModuleReport {
    std::vector<PicardElement> picard;
    std::vector<GroupHom> orthogonal;
    std::vector<i64> partial_index;  // position of d(f) in orthogonal, per picard element
    std::vector<std::vector<i64>> act_table;      // [g][f] -> picard index
    std::vector<std::vector<i64>> diamond_table;  // [f][g] -> picard index
    std::vector<CrossedModuleViolation> violations;
    std::vector<i64> kernel_indices;
    i64 image_order = 0;
    bool axioms_ok = false;
    bool kernel_central = false;
    bool image_normal = false;
};

// Exhaustive verification of the crossed-module axioms
//   d(^g f) = g d(f) g^{-1}   and   ^{d(f)} f' = f <> f' <> f^{-1}
// plus the group laws of <>, the action laws, kernel centrality and image
// normality.  The violation list is expected to stay empty.
CrossedModuleReport verify_crossed_module(const QuadraticForm& q, const SizeGuard& guard = {});

struct KernelReport {
    std::vector<PicardElement> kernel;          // f with d(f) = id
    RadicalInfo rad;
    QuadraticForm radical_form;                 // q restricted to A-perp
    std::vector<PicardElement> radical_picard;  // P(A-perp, q|)
    bool j_into_kernel = false;
    bool j_bijective = false;
    bool j_homomorphism = false;
    bool i_into_radical_picard = false;
    bool mutually_inverse = false;
    bool isomorphism_ok = false;  // conjunction of the above
};

// The kernel of d together with the induction isomorphism
// j: P(A-perp, q|) -> ker d and its inverse i (characters restricted /
// descended through the radical); every claimed identity is checked and
// reported, never assumed.
KernelReport kernel_partial(const QuadraticForm& q, const SizeGuard& guard = {});

struct CokernelReport {
    i64 orthogonal_order = 0;
    i64 image_order = 0;
    i64 coset_count = 0;
    bool image_normal = false;
    bool radical_tannakian = false;
    // Comparison against the claimed exact sequence
    //   0 -> Hom(A/A-perp, A-perp) -> coker d -> Aut(A-perp),
    // run only when q vanishes on the radical.
    bool has_comparison = false;
    bool restriction_well_defined = false;
    i64 hom_quotient_radical_order = 0;  // predicted kernel order
    i64 restriction_kernel_order = 0;    // computed kernel order
    bool star_group_ok = false;  // {phi : id+phi invertible} closed under phi+psi+phi o psi
    bool exactness_match = false;
};

CokernelReport cokernel_partial(const QuadraticForm& q, const SizeGuard& guard = {});

struct PredictionRow {
    std::string claim;   // "example_i" | "example_ii" | "example_iii"
    std::string detail;  // e.g. the direct-summand case of example (iii)
    i64 predicted = 0;
    i64 predicted_alternate = -1;  // example (iii): the other reading of the dichotomy
    i64 computed = 0;
    bool match = false;
};

struct PredictionReport {
    std::string classification;  // nondegenerate | tannakian | symmetric_non_tannakian | general
    bool partial_bijective = false;
    std::vector<PredictionRow> rows;
};

// Closed-form order predictions from the worked examples, compared against
// brute force.  Mismatches are findings, not failures.
PredictionReport paper_predictions(const QuadraticForm& q, const SizeGuard& guard = {});

}  // namespace picmod
