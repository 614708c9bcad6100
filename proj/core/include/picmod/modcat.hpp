#pragma once

#include <vector>

#include "picmod/form.hpp"
#include "picmod/picard.hpp"

namespace picmod {

// Module-category datum (B, beta): subgroup of A plus a bimultiplicative
// table with beta(x, x) = q(x) on B; the dense table is indexed by positions
// in B's sorted element list.
struct ModuleCategoryDatum {
    QuadraticForm form;
    Subgroup b;
    std::vector<QZ> beta;  // |B|^2

    QZ beta_pos(i64 x, i64 y) const { return beta[static_cast<std::size_t>(x * b.order() + y)]; }
    QZ beta_at(const GroupElement& x, const GroupElement& y) const {
        return beta_pos(b.position(x), b.position(y));
    }
    bool operator==(const ModuleCategoryDatum& o) const {
        return form == o.form && b == o.b && beta == o.beta;
    }
};

// Throws PropertyViolationError unless beta is bimultiplicative with
// beta(x,x) = q(x) and beta(x,y) + beta(y,x) = sigma(x,y) on all of B.
void validate_modcat(const ModuleCategoryDatum& d);

// All (B, beta): per subgroup, generator values beta(b_r, b_s) range over the
// gcd(o_r, o_s)-torsion of Q/Z subject to the diagonal and symmetrization
// constraints, then expand bimultiplicatively; the expansion is re-verified
// against the diagonal condition on every element.
std::vector<ModuleCategoryDatum> enumerate_module_cats(const QuadraticForm& q,
                                                       const SizeGuard& guard = {});

// Invertible iff x -> beta(x, .) is injective on B.
bool is_invertible_modcat(const ModuleCategoryDatum& d);

// f(phi) = the unique b in B with beta(x, b) = <phi, x> for all x in B.
PicardElement to_picard(const ModuleCategoryDatum& d);

// B = im(f), beta(x, f(phi)) = <phi, x>; well-definedness over all preimages
// is checked exhaustively, and to_picard is asserted to invert the result.
ModuleCategoryDatum from_picard(const PicardElement& f);

// The unique g in O(A, q) with g(a) - a in B for all a and
// beta(b, g(a) - a) = -sigma(b, a); existence and uniqueness asserted, and g
// is cross-checked against partial_hom(to_picard(d)).  (The weaker printed
// conditions quantified only over B admit several g for some data; the
// quantifier over all of A pins g down.)
GroupHom partial_alexei(const ModuleCategoryDatum& d);

// h(B, beta) = (h(B), beta(h^{-1} ., h^{-1} .)); equivariance of to_picard
// and partial_alexei is asserted for invertible data.
ModuleCategoryDatum act_on_modcat(const GroupHom& h, const ModuleCategoryDatum& d);

}  // namespace picmod
