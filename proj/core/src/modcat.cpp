#include "picmod/modcat.hpp"

#include <algorithm>
#include <numeric>

#include "picmod/errors.hpp"

namespace picmod {

void validate_modcat(const ModuleCategoryDatum& d) {
    const FinAbGroup& a = d.form.group();
    const auto& els = d.b.elements();
    const i64 m = d.b.order();
    if (static_cast<i64>(d.beta.size()) != m * m)
        throw ShapeError("validate_modcat: table size mismatch");
    for (i64 x = 0; x < m; ++x) {
        if (!(d.beta_pos(x, x) == d.form.evaluate(els[static_cast<std::size_t>(x)])))
            throw PropertyViolationError("validate_modcat: beta(x,x) != q(x)");
        for (i64 y = 0; y < m; ++y) {
            if (!(d.beta_pos(x, y) + d.beta_pos(y, x) ==
                  d.form.bilinear(els[static_cast<std::size_t>(x)], els[static_cast<std::size_t>(y)])))
                throw PropertyViolationError("validate_modcat: beta + beta^T != sigma");
            for (i64 z = 0; z < m; ++z) {
                const i64 yz = d.b.position(a.add(els[static_cast<std::size_t>(y)],
                                                  els[static_cast<std::size_t>(z)]));
                if (!(d.beta_pos(x, yz) == d.beta_pos(x, y) + d.beta_pos(x, z)) ||
                    !(d.beta_pos(yz, x) == d.beta_pos(y, x) + d.beta_pos(z, x)))
                    throw PropertyViolationError("validate_modcat: beta not bimultiplicative");
            }
        }
    }
}

std::vector<ModuleCategoryDatum> enumerate_module_cats(const QuadraticForm& q,
                                                       const SizeGuard& guard) {
    const FinAbGroup& a = q.group();
    std::vector<ModuleCategoryDatum> out;
    for (const Subgroup& b : enumerate_subgroups(a, guard)) {
        const auto& basis = b.basis();
        const auto& orders = b.basis_orders();
        const std::size_t k = basis.size();

        // The forced diagonal beta(b_r, b_r) = q(b_r) needs order dividing o_r.
        bool feasible = true;
        for (std::size_t r = 0; r < k; ++r)
            if (!q.evaluate(basis[r]).times(orders[r]).is_zero()) {
                feasible = false;
                break;
            }
        if (!feasible) continue;

        // Free choices: beta(b_r, b_s) for r < s in the gcd(o_r, o_s)-torsion;
        // beta(b_s, b_r) is then sigma(b_r, b_s) minus that choice.
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        i64 combos = 1;
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t s = r + 1; s < k; ++s) {
                slots.push_back({r, s});
                combos *= std::gcd(orders[r], orders[s]);
                if (combos > guard.max_candidates)
                    throw SizeGuardError("enumerate_module_cats: table count exceeds guard");
            }

        // Basis coordinates of every element of B, by element position.
        const FinAbGroup bg = b.basis_group();
        std::vector<GroupElement> coords(static_cast<std::size_t>(b.order()));
        for (i64 t = 0; t < bg.order(); ++t) {
            const GroupElement u = bg.from_rank(t);
            coords[static_cast<std::size_t>(b.position(b.embed(u)))] = u;
        }

        std::vector<QZ> gen_table(k * k);
        for (std::size_t r = 0; r < k; ++r) gen_table[r * k + r] = q.evaluate(basis[r]);

        std::vector<ModuleCategoryDatum> local;
        auto emit = [&] {
            const i64 m = b.order();
            std::vector<QZ> beta(static_cast<std::size_t>(m * m));
            for (i64 x = 0; x < m; ++x)
                for (i64 y = 0; y < m; ++y) {
                    QZ v;
                    const GroupElement& cx = coords[static_cast<std::size_t>(x)];
                    const GroupElement& cy = coords[static_cast<std::size_t>(y)];
                    for (std::size_t r = 0; r < k; ++r)
                        for (std::size_t s = 0; s < k; ++s)
                            v += gen_table[r * k + s].times(cx.coords[r] * cy.coords[s]);
                    beta[static_cast<std::size_t>(x * m + y)] = v;
                }
            ModuleCategoryDatum d{q, b, std::move(beta)};
            // Generator constraints are sufficient; the exhaustive recheck
            // keeps that claim honest.
            validate_modcat(d);
            local.push_back(std::move(d));
        };
        auto rec = [&](auto&& self, std::size_t slot) -> void {
            if (slot == slots.size()) {
                emit();
                return;
            }
            const auto [r, s] = slots[slot];
            const i64 g = std::gcd(orders[r], orders[s]);
            const QZ sigma_rs = q.bilinear(basis[r], basis[s]);
            for (i64 t = 0; t < g; ++t) {
                gen_table[r * k + s] = QZ(t, g);
                gen_table[s * k + r] = sigma_rs - QZ(t, g);
                self(self, slot + 1);
            }
        };
        rec(rec, 0);
        std::sort(local.begin(), local.end(),
                  [](const ModuleCategoryDatum& x, const ModuleCategoryDatum& y) {
                      return x.beta < y.beta;
                  });
        out.insert(out.end(), std::make_move_iterator(local.begin()),
                   std::make_move_iterator(local.end()));
    }
    return out;
}

bool is_invertible_modcat(const ModuleCategoryDatum& d) {
    const i64 m = d.b.order();
    for (i64 x = 1; x < m; ++x) {
        bool hits = false;
        for (i64 y = 0; y < m; ++y)
            if (!d.beta_pos(x, y).is_zero()) {
                hits = true;
                break;
            }
        if (!hits) return false;
    }
    return true;
}

PicardElement to_picard(const ModuleCategoryDatum& d) {
    if (!is_invertible_modcat(d)) throw Error("to_picard: datum is not invertible");
    const FinAbGroup& a = d.form.group();
    const auto& els = d.b.elements();
    const i64 m = d.b.order();
    std::vector<std::vector<i64>> mat(a.rank(), std::vector<i64>(a.rank(), 0));
    for (std::size_t j = 0; j < a.rank(); ++j) {
        GroupElement chi = a.zero();
        chi.coords[j] = 1 % a.orders()[j];
        i64 found = -1;
        for (i64 y = 0; y < m; ++y) {
            bool all = true;
            for (i64 x = 0; x < m; ++x)
                if (!(d.beta_pos(x, y) == pairing(a, chi, els[static_cast<std::size_t>(x)]))) {
                    all = false;
                    break;
                }
            if (all) {
                if (found >= 0)
                    throw PropertyViolationError("to_picard: beta lookup not unique");
                found = y;
            }
        }
        if (found < 0) throw PropertyViolationError("to_picard: beta lookup has no solution");
        for (std::size_t i = 0; i < a.rank(); ++i)
            mat[i][j] = els[static_cast<std::size_t>(found)].coords[i];
    }
    GroupHom f(a, a, std::move(mat));
    if (!is_picard_element(d.form, f))
        throw PropertyViolationError("to_picard: image is not a Picard element");
    return PicardElement{d.form, std::move(f)};
}

ModuleCategoryDatum from_picard(const PicardElement& f) {
    const FinAbGroup& a = f.form.group();
    std::vector<GroupElement> gens;
    for (std::size_t j = 0; j < a.rank(); ++j) {
        GroupElement chi = a.zero();
        chi.coords[j] = 1 % a.orders()[j];
        gens.push_back(f.f.apply(chi));
    }
    Subgroup b = Subgroup::span(a, gens);
    const i64 m = b.order();
    std::vector<QZ> beta(static_cast<std::size_t>(m * m));
    std::vector<bool> set(static_cast<std::size_t>(m * m), false);
    for (i64 r = 0; r < a.order(); ++r) {
        const GroupElement phi = a.from_rank(r);
        const i64 y = b.position(f.f.apply(phi));
        if (y < 0) throw PropertyViolationError("from_picard: image left its own span");
        for (i64 x = 0; x < m; ++x) {
            const QZ v = pairing(a, phi, b.elements()[static_cast<std::size_t>(x)]);
            const std::size_t idx = static_cast<std::size_t>(x * m + y);
            if (set[idx] && !(beta[idx] == v))
                throw PropertyViolationError(
                    "from_picard: beta(x, f(phi)) depends on the preimage choice");
            beta[idx] = v;
            set[idx] = true;
        }
    }
    for (bool s : set)
        if (!s) throw PropertyViolationError("from_picard: beta table not fully determined");
    ModuleCategoryDatum d{f.form, std::move(b), std::move(beta)};
    validate_modcat(d);
    if (!is_invertible_modcat(d))
        throw PropertyViolationError("from_picard: produced datum is degenerate");
    if (!(to_picard(d).f == f.f))
        throw PropertyViolationError("from_picard: round-trip through to_picard failed");
    return d;
}

GroupHom partial_alexei(const ModuleCategoryDatum& d) {
    if (!is_invertible_modcat(d)) throw Error("partial_alexei: datum is not invertible");
    const FinAbGroup& a = d.form.group();
    const QuadraticForm& q = d.form;
    std::vector<GroupHom> hits;
    for (const GroupHom& g : orthogonal_group(q)) {
        bool ok = true;
        for (i64 r = 0; r < a.order() && ok; ++r) {
            const GroupElement x = a.from_rank(r);
            const GroupElement shift = a.sub(g.apply(x), x);
            if (!d.b.contains(shift)) {
                ok = false;
                break;
            }
            for (const auto& bel : d.b.elements())
                if (!(d.beta_at(bel, shift) == -q.bilinear(bel, x))) {
                    ok = false;
                    break;
                }
        }
        if (ok) hits.push_back(g);
    }
    if (hits.empty()) throw PropertyViolationError("partial_alexei: no automorphism matches");
    if (hits.size() > 1) throw PropertyViolationError("partial_alexei: automorphism not unique");
    GroupHom g = hits.front();

    // The printed conditions (quantified over B only) must hold for g too.
    for (const auto& c : d.b.elements()) {
        if (!d.b.contains(g.apply(c)))
            throw PropertyViolationError("partial_alexei: g(B) not contained in B");
        for (const auto& bel : d.b.elements())
            if (!(d.beta_at(bel, g.apply(c)) == -d.beta_at(c, bel)))
                throw PropertyViolationError("partial_alexei: beta(b, g(c)) != -beta(c, b)");
    }
    if (!(g == partial_hom(to_picard(d))))
        throw PropertyViolationError("partial_alexei: disagrees with d(f) under the bijection");
    return g;
}

ModuleCategoryDatum act_on_modcat(const GroupHom& h, const ModuleCategoryDatum& d) {
    const FinAbGroup& a = d.form.group();
    const auto hinv_opt = h.inverse();
    if (!hinv_opt) throw Error("act_on_modcat: h is not invertible");
    const GroupHom& hinv = *hinv_opt;

    std::vector<GroupElement> gens;
    for (const auto& x : d.b.basis()) gens.push_back(h.apply(x));
    Subgroup bh = Subgroup::span(a, gens);
    const i64 m = bh.order();
    std::vector<QZ> beta(static_cast<std::size_t>(m * m));
    for (i64 x = 0; x < m; ++x)
        for (i64 y = 0; y < m; ++y)
            beta[static_cast<std::size_t>(x * m + y)] =
                d.beta_at(hinv.apply(bh.elements()[static_cast<std::size_t>(x)]),
                          hinv.apply(bh.elements()[static_cast<std::size_t>(y)]));
    ModuleCategoryDatum out{d.form, std::move(bh), std::move(beta)};
    validate_modcat(out);

    if (is_invertible_modcat(d)) {
        if (!(partial_alexei(out) == h.compose(partial_alexei(d)).compose(hinv)))
            throw PropertyViolationError("act_on_modcat: partial_alexei not equivariant");
        if (!(to_picard(out).f == act(h, to_picard(d)).f))
            throw PropertyViolationError("act_on_modcat: to_picard not equivariant");
    }
    return out;
}

}  // namespace picmod
