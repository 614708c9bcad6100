#pragma once

#include <map>
#include <utility>
#include <vector>

#include "picmod/group.hpp"
#include "picmod/qz.hpp"

namespace picmod {

// Quadratic form q: A -> Q/Z given by generator values q(e_i) and the
// off-diagonal bilinear values sigma(e_i, e_j).  Construction enforces the
// torsion invariants
//   gcd(2, n_i) * n_i * q(e_i) = 0   and   gcd(n_i, n_j) * sigma(e_i, e_j) = 0,
// which make the evaluation polynomial a well-defined function on A.
class QuadraticForm {
  public:
    QuadraticForm() = default;
    QuadraticForm(FinAbGroup group, std::vector<QZ> diag,
                  const std::map<std::pair<std::size_t, std::size_t>, QZ>& offdiag);

    const FinAbGroup& group() const { return group_; }
    QZ q_gen(std::size_t i) const { return diag_[i]; }
    // Gram entry of the polarization; the diagonal is 2 q(e_i).
    QZ sigma_gen(std::size_t i, std::size_t j) const { return gram_[i * group_.rank() + j]; }

    // q(x) = sum_i x_i^2 q(e_i) + sum_{i<j} x_i x_j sigma(e_i, e_j)
    QZ evaluate(const GroupElement& x) const;
    // sigma(x, y) = q(x+y) - q(x) - q(y), computed from the Gram data.
    QZ bilinear(const GroupElement& x, const GroupElement& y) const;

    // sigma~ : A -> A^ with <sigma~(a), x> = sigma(a, x).
    GroupHom sigma_tilde() const;

    bool is_zero() const;
    bool operator==(const QuadraticForm& o) const = default;

  private:
    FinAbGroup group_;
    std::vector<QZ> diag_;
    std::vector<QZ> gram_;  // rank x rank, symmetric
};

struct RadicalInfo {
    Subgroup subgroup;  // A-perp = ker sigma~
    bool tannakian;     // q restricted to the radical is identically zero
};

RadicalInfo radical(const QuadraticForm& q);
Subgroup orthogonal_complement(const QuadraticForm& q, const Subgroup& b);
bool is_nondegenerate(const QuadraticForm& q);

// The form q|_B on B's abstract basis group, read off on basis elements.
QuadraticForm restrict_form(const QuadraticForm& q, const Subgroup& b);

// Membership certificate for O(A, q): g bijective with q(g e_i) = q(e_i) and
// sigma(g e_i, g e_j) = sigma(e_i, e_j); sufficient because q is determined
// by its generator data.
bool is_orthogonal(const QuadraticForm& q, const GroupHom& g);

// O(A, q): automorphisms with q o g = q, by backtracking over generator
// images with q/sigma pruning; output sorted by matrix entries.
std::vector<GroupHom> orthogonal_group(const QuadraticForm& q, const SizeGuard& guard = {});

}  // namespace picmod
