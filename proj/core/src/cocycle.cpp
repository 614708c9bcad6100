#include "picmod/cocycle.hpp"

#include <map>

#include "picmod/errors.hpp"
#include "picmod/snf.hpp"

namespace picmod {

namespace {

const char* kConvention =
    "hexagons and 3-cocycle identity as printed; coboundary "
    "d(phi)(x,y,z) = phi(y,z) - phi(x+y,z) + phi(x,y+z) - phi(x,y), "
    "i.e. the sign of phi(x,y+z) is flipped relative to the printed "
    "2-coboundary, which is the unique choice satisfying the "
    "Eilenberg-MacLane correspondence; braiding shift c -> c - (phi - phi^T)";

// Rank-level addition table; n <= kMaxCohomologyOrder keeps this tiny.
std::vector<i64> addition_table(const FinAbGroup& g) {
    const i64 n = g.order();
    std::vector<i64> t(static_cast<std::size_t>(n * n));
    for (i64 x = 0; x < n; ++x)
        for (i64 y = 0; y < n; ++y)
            t[static_cast<std::size_t>(x * n + y)] =
                g.rank_of(g.add(g.from_rank(x), g.from_rank(y)));
    return t;
}

void check_cohomology_scale(const FinAbGroup& g, const char* who) {
    if (g.order() > kMaxCohomologyOrder)
        throw SizeGuardError(std::string(who) + ": dense cocycle tables are limited to |A| <= " +
                             std::to_string(kMaxCohomologyOrder));
}

}  // namespace

AbelianCocycle AbelianCocycle::operator+(const AbelianCocycle& o) const {
    if (!(group == o.group)) throw ShapeError("AbelianCocycle::operator+: group mismatch");
    AbelianCocycle r = *this;
    for (std::size_t i = 0; i < omega.size(); ++i) r.omega[i] += o.omega[i];
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
}

CocycleValidation validate_abelian_cocycle(const AbelianCocycle& p) {
    check_cohomology_scale(p.group, "validate_abelian_cocycle");
    const i64 n = p.group.order();
    CocycleValidation rep;
    rep.convention = kConvention;
    const auto add = addition_table(p.group);
    auto sum = [&](i64 x, i64 y) { return add[static_cast<std::size_t>(x * n + y)]; };

    for (i64 x = 0; x < n; ++x)
        for (i64 y = 0; y < n; ++y) {
            if ((x == 0 || y == 0) && !p.braid(x, y).is_zero())
                rep.violations.push_back({"normalization", {x, y, -1, -1}, p.braid(x, y)});
            for (i64 z = 0; z < n; ++z)
                if ((x == 0 || y == 0 || z == 0) && !p.w(x, y, z).is_zero())
                    rep.violations.push_back({"normalization", {x, y, z, -1}, p.w(x, y, z)});
        }

    for (i64 x = 0; x < n; ++x)
        for (i64 y = 0; y < n; ++y)
            for (i64 z = 0; z < n; ++z) {
                for (i64 v = 0; v < n; ++v) {
                    const QZ r = p.w(y, z, v) - p.w(sum(x, y), z, v) + p.w(x, sum(y, z), v) -
                                 p.w(x, y, sum(z, v)) + p.w(x, y, z);
                    if (!r.is_zero()) rep.violations.push_back({"cocycle", {x, y, z, v}, r});
                }
                const QZ ha = p.braid(x, sum(y, z)) - p.braid(x, y) - p.braid(x, z) -
                              (p.w(x, y, z) - p.w(y, x, z) + p.w(y, z, x));
                if (!ha.is_zero()) rep.violations.push_back({"hexagon_a", {x, y, z, -1}, ha});
                const QZ hb = p.braid(sum(x, y), z) - p.braid(x, z) - p.braid(y, z) -
                              (-p.w(x, y, z) + p.w(x, z, y) - p.w(z, x, y));
                if (!hb.is_zero()) rep.violations.push_back({"hexagon_b", {x, y, z, -1}, hb});
            }

    rep.valid = rep.violations.empty();
    return rep;
}

QuadraticForm trace_form(const AbelianCocycle& p) {
    const FinAbGroup& a = p.group;
    std::vector<QZ> diag;
    std::map<std::pair<std::size_t, std::size_t>, QZ> off;
    std::vector<i64> gen_rank(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) {
        GroupElement e = a.zero();
        e.coords[i] = 1 % a.orders()[i];
        gen_rank[i] = a.rank_of(e);
    }
    for (std::size_t i = 0; i < a.rank(); ++i) {
        diag.push_back(p.braid(gen_rank[i], gen_rank[i]));
        for (std::size_t j = i + 1; j < a.rank(); ++j) {
            const QZ s = p.braid(gen_rank[i], gen_rank[j]) + p.braid(gen_rank[j], gen_rank[i]);
            if (!s.is_zero()) off[{i, j}] = s;
        }
    }
    QuadraticForm q(a, std::move(diag), off);
    // The generator read-off must reproduce the whole trace, and the
    // symmetrized braiding must equal the polarization everywhere.
    const i64 n = a.order();
    for (i64 x = 0; x < n; ++x) {
        if (!(q.evaluate(a.from_rank(x)) == p.braid(x, x)))
            throw InvalidFormError("trace_form: c(x,x) is not a quadratic form");
        for (i64 y = 0; y < n; ++y)
            if (!(p.braid(x, y) + p.braid(y, x) ==
                  q.bilinear(a.from_rank(x), a.from_rank(y))))
                throw InvalidFormError("trace_form: c(x,y) c(y,x) != sigma(x,y)");
    }
    return q;
}

AbelianCocycle standard_cocycle(const QuadraticForm& q, const SizeGuard& guard) {
    const FinAbGroup& a = q.group();
    check_cohomology_scale(a, "standard_cocycle");
    const i64 n = a.order();
    if (n * n * n > guard.max_candidates)
        throw SizeGuardError("standard_cocycle: |A|^3 exceeds max_candidates");

    AbelianCocycle p;
    p.group = a;
    p.c.assign(static_cast<std::size_t>(n * n), QZ());
    for (i64 x = 0; x < n; ++x) {
        const GroupElement ex = a.from_rank(x);
        for (i64 y = 0; y < n; ++y) {
            const GroupElement ey = a.from_rank(y);
            QZ v;
            for (std::size_t i = 0; i < a.rank(); ++i) {
                v += q.q_gen(i).times(ex.coords[i] * ey.coords[i]);
                for (std::size_t j = i + 1; j < a.rank(); ++j)
                    v += q.sigma_gen(i, j).times(ex.coords[i] * ey.coords[j]);
            }
            p.c[static_cast<std::size_t>(x * n + y)] = v;
        }
    }

    for (const i64 eps : {i64{1}, i64{-1}}) {
        p.omega.assign(static_cast<std::size_t>(n * n * n), QZ());
        for (i64 x = 0; x < n; ++x) {
            const GroupElement ex = a.from_rank(x);
            for (i64 y = 0; y < n; ++y) {
                const GroupElement ey = a.from_rank(y);
                for (i64 z = 0; z < n; ++z) {
                    const GroupElement ez = a.from_rank(z);
                    QZ v;
                    for (std::size_t i = 0; i < a.rank(); ++i) {
                        const i64 ni = a.orders()[i];
                        if (ey.coords[i] + ez.coords[i] >= ni)  // carry
                            v += q.q_gen(i).times(eps * ex.coords[i] * ni);
                    }
                    p.omega[static_cast<std::size_t>((x * n + y) * n + z)] = v;
                }
            }
        }
        if (validate_abelian_cocycle(p).valid) return p;
    }
    throw ConstructionError("standard_cocycle: neither sign choice validates");
}

AbelianCocycle apply_coboundary(const AbelianCocycle& p, const std::vector<QZ>& phi) {
    const i64 n = p.group.order();
    if (static_cast<i64>(phi.size()) != n * n)
        throw ShapeError("apply_coboundary: phi table size mismatch");
    for (i64 x = 0; x < n; ++x)
        if (!phi[static_cast<std::size_t>(x * n)].is_zero() ||
            !phi[static_cast<std::size_t>(x)].is_zero())
            throw WellDefinednessError("apply_coboundary: phi must be normalized");
    const auto add = addition_table(p.group);
    auto sum = [&](i64 x, i64 y) { return add[static_cast<std::size_t>(x * n + y)]; };
    auto f = [&](i64 x, i64 y) { return phi[static_cast<std::size_t>(x * n + y)]; };

    AbelianCocycle r = p;
    for (i64 x = 0; x < n; ++x)
        for (i64 y = 0; y < n; ++y) {
            r.c[static_cast<std::size_t>(x * n + y)] =
                p.braid(x, y) - (f(x, y) - f(y, x));
            for (i64 z = 0; z < n; ++z) {
                const QZ d = f(y, z) - f(sum(x, y), z) + f(x, sum(y, z)) - f(x, y);
                r.omega[static_cast<std::size_t>((x * n + y) * n + z)] = p.w(x, y, z) - d;
            }
        }
    return r;
}

std::optional<std::vector<QZ>> cohomologous(const AbelianCocycle& p1, const AbelianCocycle& p2) {
    if (!(p1.group == p2.group)) throw ShapeError("cohomologous: group mismatch");
    check_cohomology_scale(p1.group, "cohomologous");
    const i64 n = p1.group.order();
    const auto add = addition_table(p1.group);
    auto sum = [&](i64 x, i64 y) { return add[static_cast<std::size_t>(x * n + y)]; };
    auto idx = [&](i64 x, i64 y) { return x * n + y; };

    // Unknowns phi(x,y); rows: d(phi) = omega1 - omega2 over A^3, then
    // phi - phi^T = c1 - c2 over A^2.
    IntMat c(n * n * n + n * n, n * n);
    std::vector<QZ> rhs(static_cast<std::size_t>(c.rows));
    i64 row = 0;
    for (i64 x = 0; x < n; ++x)
        for (i64 y = 0; y < n; ++y)
            for (i64 z = 0; z < n; ++z, ++row) {
                c.at(row, idx(y, z)) += 1;
                c.at(row, idx(sum(x, y), z)) -= 1;
                c.at(row, idx(x, sum(y, z))) += 1;
                c.at(row, idx(x, y)) -= 1;
                rhs[static_cast<std::size_t>(row)] = p1.w(x, y, z) - p2.w(x, y, z);
            }
    for (i64 x = 0; x < n; ++x)
        for (i64 y = 0; y < n; ++y, ++row) {
            c.at(row, idx(x, y)) += 1;
            c.at(row, idx(y, x)) -= 1;
            rhs[static_cast<std::size_t>(row)] = p1.braid(x, y) - p2.braid(x, y);
        }
    return solve_linear_qz(c, rhs);
}

std::optional<ModuleCochain> solve_gamma(const AbelianCocycle& p, const Subgroup& b) {
    check_cohomology_scale(p.group, "solve_gamma");
    const i64 m = b.order();
    const auto& els = b.elements();
    const FinAbGroup& a = p.group;
    auto idx = [&](i64 x, i64 y) { return x * m + y; };

    // d(gamma)(x,y,z) = gamma(x+y,z) + gamma(x,y) - gamma(x,y+z) - gamma(y,z)
    IntMat c(m * m * m, m * m);
    std::vector<QZ> rhs(static_cast<std::size_t>(c.rows));
    i64 row = 0;
    for (i64 x = 0; x < m; ++x)
        for (i64 y = 0; y < m; ++y)
            for (i64 z = 0; z < m; ++z, ++row) {
                const i64 xy = b.position(a.add(els[static_cast<std::size_t>(x)],
                                                els[static_cast<std::size_t>(y)]));
                const i64 yz = b.position(a.add(els[static_cast<std::size_t>(y)],
                                                els[static_cast<std::size_t>(z)]));
                c.at(row, idx(xy, z)) += 1;
                c.at(row, idx(x, y)) += 1;
                c.at(row, idx(x, yz)) -= 1;
                c.at(row, idx(y, z)) -= 1;
                rhs[static_cast<std::size_t>(row)] =
                    p.w(a.rank_of(els[static_cast<std::size_t>(x)]),
                        a.rank_of(els[static_cast<std::size_t>(y)]),
                        a.rank_of(els[static_cast<std::size_t>(z)]));
            }
    auto sol = solve_linear_qz(c, rhs);
    if (!sol) return std::nullopt;
    return ModuleCochain{b, std::move(*sol)};
}

std::vector<QZ> beta_from_gamma(const AbelianCocycle& p, const ModuleCochain& mc) {
    const Subgroup& b = mc.subgroup;
    const i64 m = b.order();
    const auto& els = b.elements();
    const FinAbGroup& a = p.group;
    auto g = [&](i64 x, i64 y) { return mc.gamma[static_cast<std::size_t>(x * m + y)]; };

    std::vector<QZ> beta(static_cast<std::size_t>(m * m));
    for (i64 x = 0; x < m; ++x)
        for (i64 y = 0; y < m; ++y)
            beta[static_cast<std::size_t>(x * m + y)] =
                p.braid(a.rank_of(els[static_cast<std::size_t>(x)]),
                        a.rank_of(els[static_cast<std::size_t>(y)])) +
                g(x, y) - g(y, x);

    const QuadraticForm q = trace_form(p);
    auto bat = [&](i64 x, i64 y) { return beta[static_cast<std::size_t>(x * m + y)]; };
    for (i64 x = 0; x < m; ++x)
        for (i64 y = 0; y < m; ++y) {
            const GroupElement& ex = els[static_cast<std::size_t>(x)];
            const GroupElement& ey = els[static_cast<std::size_t>(y)];
            if (x == y && !(bat(x, x) == q.evaluate(ex)))
                throw PropertyViolationError("beta_from_gamma: beta(x,x) != q(x)");
            if (!(bat(x, y) + bat(y, x) == q.bilinear(ex, ey)))
                throw PropertyViolationError("beta_from_gamma: beta(x,y) beta(y,x) != sigma(x,y)");
            for (i64 z = 0; z < m; ++z) {
                const i64 yz = b.position(a.add(ey, els[static_cast<std::size_t>(z)]));
                if (!(bat(x, yz) == bat(x, y) + bat(x, z)) ||
                    !(bat(yz, x) == bat(y, x) + bat(z, x)))
                    throw PropertyViolationError("beta_from_gamma: beta not bimultiplicative");
            }
        }
    return beta;
}

}  // namespace picmod
