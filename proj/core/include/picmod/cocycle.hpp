#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "picmod/form.hpp"
#include "picmod/group.hpp"
#include "picmod/qz.hpp"

namespace picmod {

// Dense tables live only at cohomology scale.
inline constexpr i64 kMaxCohomologyOrder = 9;

// Abelian 3-cocycle (omega, c): omega a normalized 3-cocycle, c tied to it by
// the two hexagon identities.  Tables are dense over element ranks.
struct AbelianCocycle {
    FinAbGroup group;
    std::vector<QZ> omega;  // |A|^3, index (x*n + y)*n + z
    std::vector<QZ> c;      // |A|^2, index x*n + y

    QZ w(i64 x, i64 y, i64 z) const {
        const i64 n = group.order();
        return omega[static_cast<std::size_t>((x * n + y) * n + z)];
    }
    QZ braid(i64 x, i64 y) const {
        return c[static_cast<std::size_t>(x * group.order() + y)];
    }

    // Z^3_ab is a group under entrywise sum.
    AbelianCocycle operator+(const AbelianCocycle& o) const;
};

struct CocycleViolation {
    std::string kind;        // "normalization" | "cocycle" | "hexagon_a" | "hexagon_b"
    std::array<i64, 4> at;   // element ranks, unused slots -1
    QZ residual;
};

struct CocycleValidation {
    bool valid = false;
    std::vector<CocycleViolation> violations;
    // Pinned sign conventions, recorded for the report (the printed
    // coboundary formula needed one sign flipped to satisfy Eilenberg-MacLane).
    std::string convention;
};

CocycleValidation validate_abelian_cocycle(const AbelianCocycle& p);

// q(x) = c(x, x); rejects pairs whose trace is not a quadratic form or whose
// c fails c(x,y) + c(y,x) = sigma(x,y).
QuadraticForm trace_form(const AbelianCocycle& p);

// Standard representative with trace q:
//   c(x,y) = sum_i q(e_i) x_i y_i + sum_{i<j} sigma(e_i,e_j) x_i y_j
//   omega(x,y,z) = eps * sum_i q(e_i) x_i n_i carry_i(y,z)
// The sign eps is fixed by validation (both signs coincide mod 1 here since
// n_i q(e_i) is 2-torsion, but the probe keeps the construction honest).
AbelianCocycle standard_cocycle(const QuadraticForm& q, const SizeGuard& guard = {});

// Coboundary action of a normalized 2-cochain phi (dense |A|^2 table):
//   omega' = omega - d(phi),  c' = c - (phi - phi^T).
AbelianCocycle apply_coboundary(const AbelianCocycle& p, const std::vector<QZ>& phi);

// Witness phi relating p1 to p2 through the coboundary action, or absent.
// Decided exactly through the Smith-normal-form solver.
std::optional<std::vector<QZ>> cohomologous(const AbelianCocycle& p1, const AbelianCocycle& p2);

// Module-category 2-cochain gamma on B x B with d(gamma) = omega|_B.
struct ModuleCochain {
    Subgroup subgroup;
    std::vector<QZ> gamma;  // |B|^2, indexed by positions in subgroup.elements()
};

std::optional<ModuleCochain> solve_gamma(const AbelianCocycle& p, const Subgroup& b);

// beta = c + gamma - gamma^T on B, asserted bimultiplicative with
// beta(x,x) = q(x) and beta(x,y) + beta(y,x) = sigma(x,y).
std::vector<QZ> beta_from_gamma(const AbelianCocycle& p, const ModuleCochain& mc);

}  // namespace picmod
