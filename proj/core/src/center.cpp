#include "picmod/center.hpp"

#include <algorithm>
#include <map>

#include "picmod/errors.hpp"
#include "picmod/parallel.hpp"

namespace picmod {

namespace {

FinAbGroup doubled_group(const FinAbGroup& a) {
    std::vector<i64> orders = a.orders();
    orders.insert(orders.end(), a.orders().begin(), a.orders().end());
    return FinAbGroup(std::move(orders));
}

// Block matrix [[tl, tr], [bl, br]] over the doubled group.
GroupHom block_hom(const FinAbGroup& a, const GroupHom& tl, const GroupHom& tr,
                   const GroupHom& bl, const GroupHom& br) {
    const std::size_t k = a.rank();
    const FinAbGroup d = doubled_group(a);
    std::vector<std::vector<i64>> m(2 * k, std::vector<i64>(2 * k, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            m[i][j] = tl.matrix()[i][j];
            m[i][k + j] = tr.matrix()[i][j];
            m[k + i][j] = bl.matrix()[i][j];
            m[k + i][k + j] = br.matrix()[i][j];
        }
    return GroupHom(d, d, std::move(m));
}

}  // namespace

CenterForm center_form(const QuadraticForm& q) {
    const FinAbGroup& a = q.group();
    const std::size_t k = a.rank();
    const FinAbGroup d = doubled_group(a);
    std::vector<QZ> diag(2 * k);
    std::map<std::pair<std::size_t, std::size_t>, QZ> off;
    for (std::size_t i = 0; i < k; ++i) {
        diag[i] = q.q_gen(i);
        for (std::size_t j = i + 1; j < k; ++j) {
            const QZ s = q.sigma_gen(i, j);
            if (!s.is_zero()) off[{i, j}] = s;
        }
        // Cross block: B(e_i, e^_j) = <e^_j, e_i> = delta_ij / n_i.
        if (a.orders()[i] > 1) off[{i, k + i}] = QZ(1, a.orders()[i]);
    }
    return CenterForm{q, QuadraticForm(d, std::move(diag), off)};
}

CenterEmbeddings embeddings(const QuadraticForm& q) {
    const FinAbGroup& a = q.group();
    const CenterForm cf = center_form(q);
    const GroupHom st = q.sigma_tilde();
    const std::size_t k = a.rank();
    const FinAbGroup d = cf.doubled.group();

    std::vector<std::vector<i64>> mf(2 * k, std::vector<i64>(k, 0));
    std::vector<std::vector<i64>> mr(2 * k, std::vector<i64>(k, 0));
    for (std::size_t i = 0; i < k; ++i) {
        mf[i][i] = 1 % a.orders()[i];
        mr[i][i] = 1 % a.orders()[i];
        for (std::size_t j = 0; j < k; ++j)
            mr[k + i][j] = (a.orders()[i] - st.matrix()[i][j]) % a.orders()[i];
    }
    GroupHom fwd(a, d, std::move(mf));
    GroupHom rev(a, d, std::move(mr));

    // Q agrees with q through the first embedding and with -q through the
    // second; both are injective and the images are mutual complements.
    for (i64 r = 0; r < a.order(); ++r) {
        const GroupElement x = a.from_rank(r);
        if (!(cf.doubled.evaluate(fwd.apply(x)) == q.evaluate(x)))
            throw PropertyViolationError("embeddings: forward embedding not orthogonal");
        if (!(cf.doubled.evaluate(rev.apply(x)) == -q.evaluate(x)))
            throw PropertyViolationError("embeddings: reverse embedding not from (A, -q)");
    }
    if (!fwd.is_injective() || !rev.is_injective())
        throw PropertyViolationError("embeddings: embedding not injective");

    std::vector<GroupElement> fimg, rimg;
    for (i64 r = 0; r < a.order(); ++r) {
        fimg.push_back(fwd.apply(a.from_rank(r)));
        rimg.push_back(rev.apply(a.from_rank(r)));
    }
    CenterEmbeddings e{std::move(fwd), std::move(rev), Subgroup::span(d, fimg),
                       Subgroup::span(d, rimg)};
    if (!(orthogonal_complement(cf.doubled, e.forward_image) == e.reverse_image) ||
        !(orthogonal_complement(cf.doubled, e.reverse_image) == e.forward_image))
        throw PropertyViolationError("embeddings: images are not mutual centralizers");
    return e;
}

GroupHom alpha_f(const QuadraticForm& q, const GroupHom& f) {
    const FinAbGroup& a = q.group();
    if (!(f.source() == a) || !(f.target() == a))
        throw ShapeError("alpha_f: f must map A^ -> A");
    const GroupHom st = q.sigma_tilde();
    const GroupHom id = GroupHom::identity(a);
    return block_hom(a, id, f, GroupHom::zero_map(a, a), id.sub(st.compose(f)));
}

std::vector<GroupHom> enumerate_trivializable(const QuadraticForm& q, const SizeGuard& guard) {
    const FinAbGroup& a = q.group();
    if (a.order() > guard.max_center_base_order)
        throw SizeGuardError("enumerate_trivializable: |A| exceeds the doubled-group guard");
    const CenterForm cf = center_form(q);
    const QuadraticForm& qq = cf.doubled;
    const FinAbGroup& d = qq.group();
    const std::size_t k = a.rank();
    if (k == 0) return {GroupHom::identity(d)};

    // Columns for the A block are pinned to the identity; search the images
    // of the A^-generators.  Orthogonality against the pinned block forces
    // B(v_j, (e_i, 0)) = <e^_j, e_i> for every i, and Q(v_j) = 0.
    const auto all = d.elements();
    std::vector<GroupElement> pinned(k);
    for (std::size_t i = 0; i < k; ++i) {
        pinned[i] = d.zero();
        pinned[i].coords[i] = 1 % a.orders()[i];
    }
    std::vector<std::vector<GroupElement>> candidates(k);
    for (std::size_t j = 0; j < k; ++j) {
        for (const auto& v : all) {
            if (a.orders()[j] % d.element_order(v) != 0) continue;
            if (!qq.evaluate(v).is_zero()) continue;
            bool ok = true;
            for (std::size_t i = 0; i < k; ++i) {
                const QZ want = i == j ? QZ(1, a.orders()[i]) : QZ();
                if (!(qq.bilinear(v, pinned[i]) == want)) {
                    ok = false;
                    break;
                }
            }
            if (ok) candidates[j].push_back(v);
        }
    }

    auto complete = [&](const GroupElement& first) {
        std::vector<GroupHom> found;
        std::vector<GroupElement> img(k);
        img[0] = first;
        auto rec = [&](auto&& self, std::size_t j) -> void {
            if (j == k) {
                std::vector<std::vector<i64>> m(2 * k, std::vector<i64>(2 * k, 0));
                for (std::size_t i = 0; i < k; ++i) m[i][i] = 1 % a.orders()[i];
                for (std::size_t col = 0; col < k; ++col)
                    for (std::size_t row = 0; row < 2 * k; ++row)
                        m[row][k + col] = img[col].coords[row];
                GroupHom g(d, d, std::move(m));
                if (g.is_injective()) found.push_back(std::move(g));
                return;
            }
            for (const auto& v : candidates[j]) {
                bool ok = true;
                for (std::size_t i = 0; i < j; ++i)
                    if (!(qq.bilinear(img[i], v) == qq.sigma_gen(k + i, k + j))) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                img[j] = v;
                self(self, j + 1);
            }
        };
        rec(rec, 1);
        return found;
    };

    std::vector<GroupHom> out = par::map_indexed<GroupHom>(
        static_cast<i64>(candidates[0].size()),
        [&](i64 c0) { return complete(candidates[0][static_cast<std::size_t>(c0)]); });
    std::sort(out.begin(), out.end(),
              [](const GroupHom& x, const GroupHom& y) { return x.flat() < y.flat(); });
    return out;
}

GroupHom restrict_to_rev(const QuadraticForm& q, const GroupHom& alpha) {
    const FinAbGroup& a = q.group();
    const CenterEmbeddings e = embeddings(q);
    std::vector<std::vector<i64>> m(a.rank(), std::vector<i64>(a.rank(), 0));
    for (std::size_t j = 0; j < a.rank(); ++j) {
        GroupElement gen = a.zero();
        gen.coords[j] = 1 % a.orders()[j];
        const GroupElement w = alpha.apply(e.reverse.apply(gen));
        // e_rev(a') = (a', -sigma~ a'): recover a' from the first block and
        // insist the second block matches.
        GroupElement aprime = a.zero();
        for (std::size_t i = 0; i < a.rank(); ++i) aprime.coords[i] = w.coords[i];
        if (!(e.reverse.apply(aprime) == w))
            throw PropertyViolationError(
                "restrict_to_rev: alpha does not preserve the reverse embedding");
        for (std::size_t i = 0; i < a.rank(); ++i) m[i][j] = aprime.coords[i];
    }
    return GroupHom(a, a, std::move(m));
}

bool lift_conjugation_check(const QuadraticForm& q, const GroupHom& g, const PicardElement& f) {
    const FinAbGroup& a = q.group();
    const auto ginv_opt = g.inverse();
    if (!ginv_opt) throw Error("lift_conjugation_check: g not invertible");
    const GroupHom zero = GroupHom::zero_map(a, a);
    // g~(a, phi) = (g(a), phi o g^{-1}) = (g(a), dual(g^{-1})(phi))
    const GroupHom gt = block_hom(a, g, zero, zero, ginv_opt->dual());
    const GroupHom gt_inv = block_hom(a, *ginv_opt, zero, zero, g.dual());
    const GroupHom lhs = gt.compose(alpha_f(q, f.f)).compose(gt_inv);
    const GroupHom rhs = alpha_f(q, act(g, f).f);
    return lhs == rhs;
}

}  // namespace picmod
