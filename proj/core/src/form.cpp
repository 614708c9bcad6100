#include "picmod/form.hpp"

#include <algorithm>
#include <numeric>

#include "picmod/errors.hpp"
#include "picmod/parallel.hpp"

namespace picmod {

QuadraticForm::QuadraticForm(FinAbGroup group, std::vector<QZ> diag,
                             const std::map<std::pair<std::size_t, std::size_t>, QZ>& offdiag)
    : group_(std::move(group)), diag_(std::move(diag)) {
    const std::size_t k = group_.rank();
    if (diag_.size() != k) throw ShapeError("QuadraticForm: diagonal length mismatch");
    gram_.assign(k * k, QZ());
    for (std::size_t i = 0; i < k; ++i) {
        const i64 n = group_.orders()[i];
        if (!diag_[i].times(std::gcd<i64>(2, n) * n).is_zero())
            throw InvalidFormError("QuadraticForm: gcd(2,n)*n*q(e_" + std::to_string(i) +
                                   ") != 0");
        gram_[i * k + i] = diag_[i].times(2);
    }
    for (const auto& [idx, value] : offdiag) {
        const auto [i, j] = idx;
        if (i >= j || j >= k) throw ShapeError("QuadraticForm: off-diagonal index out of range");
        const i64 g = std::gcd(group_.orders()[i], group_.orders()[j]);
        if (!value.times(g).is_zero())
            throw InvalidFormError("QuadraticForm: gcd(n_i,n_j)*sigma(e_i,e_j) != 0 at (" +
                                   std::to_string(i) + "," + std::to_string(j) + ")");
        gram_[i * k + j] = value;
        gram_[j * k + i] = value;
    }
}

QZ QuadraticForm::evaluate(const GroupElement& x) const {
    const std::size_t k = group_.rank();
    QZ v;
    for (std::size_t i = 0; i < k; ++i) {
        if (x.coords[i] == 0) continue;
        v += diag_[i].times(x.coords[i] * x.coords[i]);
        for (std::size_t j = i + 1; j < k; ++j)
            if (x.coords[j] != 0) v += gram_[i * k + j].times(x.coords[i] * x.coords[j]);
    }
    return v;
}

QZ QuadraticForm::bilinear(const GroupElement& x, const GroupElement& y) const {
    const std::size_t k = group_.rank();
    QZ v;
    for (std::size_t i = 0; i < k; ++i) {
        if (x.coords[i] == 0) continue;
        for (std::size_t j = 0; j < k; ++j)
            if (y.coords[j] != 0) v += gram_[i * k + j].times(x.coords[i] * y.coords[j]);
    }
    return v;
}

GroupHom QuadraticForm::sigma_tilde() const {
    const std::size_t k = group_.rank();
    std::vector<std::vector<i64>> m(k, std::vector<i64>(k, 0));
    for (std::size_t i = 0; i < k; ++i) {
        const i64 n = group_.orders()[i];
        for (std::size_t j = 0; j < k; ++j) {
            // den(sigma(e_i, e_j)) divides n_i by the torsion invariants, so
            // n_i * sigma(e_i, e_j) is the integer num * (n_i / den).
            const QZ s = gram_[i * k + j];
            if (n % s.den() != 0)
                throw PropertyViolationError("sigma_tilde: n_i * sigma(e_i, e_j) not integral");
            m[i][j] = s.num() * (n / s.den()) % n;
        }
    }
    return GroupHom(group_, group_, std::move(m));
}

bool QuadraticForm::is_zero() const {
    for (const QZ& v : diag_)
        if (!v.is_zero()) return false;
    for (const QZ& v : gram_)
        if (!v.is_zero()) return false;
    return true;
}

RadicalInfo radical(const QuadraticForm& q) {
    const GroupHom st = q.sigma_tilde();
    const FinAbGroup& a = q.group();
    std::vector<GroupElement> gens;
    for (i64 r = 0; r < a.order(); ++r) {
        GroupElement x = a.from_rank(r);
        if (st.apply(x).is_zero()) gens.push_back(std::move(x));
    }
    Subgroup rad = Subgroup::span(a, gens);
    bool tannakian = true;
    for (const auto& x : rad.elements())
        if (!q.evaluate(x).is_zero()) {
            tannakian = false;
            break;
        }
    return RadicalInfo{std::move(rad), tannakian};
}

Subgroup orthogonal_complement(const QuadraticForm& q, const Subgroup& b) {
    const FinAbGroup& a = q.group();
    std::vector<GroupElement> gens;
    for (i64 r = 0; r < a.order(); ++r) {
        GroupElement x = a.from_rank(r);
        bool orth = true;
        for (const auto& gen : b.basis())
            if (!q.bilinear(x, gen).is_zero()) {
                orth = false;
                break;
            }
        if (orth) gens.push_back(std::move(x));
    }
    return Subgroup::span(a, gens);
}

bool is_nondegenerate(const QuadraticForm& q) { return radical(q).subgroup.order() == 1; }

QuadraticForm restrict_form(const QuadraticForm& q, const Subgroup& b) {
    std::vector<QZ> diag;
    std::map<std::pair<std::size_t, std::size_t>, QZ> off;
    const auto& basis = b.basis();
    for (std::size_t r = 0; r < basis.size(); ++r) {
        diag.push_back(q.evaluate(basis[r]));
        for (std::size_t s = r + 1; s < basis.size(); ++s) {
            const QZ v = q.bilinear(basis[r], basis[s]);
            if (!v.is_zero()) off[{r, s}] = v;
        }
    }
    return QuadraticForm(b.basis_group(), std::move(diag), off);
}

bool is_orthogonal(const QuadraticForm& q, const GroupHom& g) {
    const FinAbGroup& a = q.group();
    if (!(g.source() == a) || !(g.target() == a)) return false;
    if (!g.is_injective()) return false;
    const std::size_t k = a.rank();
    std::vector<GroupElement> img(k);
    for (std::size_t i = 0; i < k; ++i) {
        GroupElement e = a.zero();
        e.coords[i] = 1 % a.orders()[i];
        img[i] = g.apply(e);
        if (!(q.evaluate(img[i]) == q.q_gen(i))) return false;
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (!(q.bilinear(img[i], img[j]) == q.sigma_gen(i, j))) return false;
    return true;
}

std::vector<GroupHom> orthogonal_group(const QuadraticForm& q, const SizeGuard& guard) {
    const FinAbGroup& a = q.group();
    if (a.order() > guard.max_group_order * guard.max_group_order)
        throw SizeGuardError("orthogonal_group: group order exceeds guard");
    const std::size_t k = a.rank();
    if (k == 0) return {GroupHom::identity(a)};

    // Per-column candidates: images v of e_i with matching order constraint
    // and q(v) = q(e_i).
    const auto all = a.elements();
    std::vector<std::vector<GroupElement>> candidates(k);
    for (std::size_t i = 0; i < k; ++i) {
        GroupElement gen = a.zero();
        gen.coords[i] = 1 % a.orders()[i];
        const QZ qi = q.evaluate(gen);
        for (const auto& v : all) {
            if (a.orders()[i] % a.element_order(v) != 0) continue;
            if (q.evaluate(v) == qi) candidates[i].push_back(v);
        }
    }

    auto complete = [&](const GroupElement& first) {
        std::vector<GroupHom> found;
        std::vector<GroupElement> img(k);
        img[0] = first;
        auto rec = [&](auto&& self, std::size_t i) -> void {
            if (i == k) {
                std::vector<std::vector<i64>> m(k, std::vector<i64>(k, 0));
                for (std::size_t col = 0; col < k; ++col)
                    for (std::size_t row = 0; row < k; ++row) m[row][col] = img[col].coords[row];
                GroupHom g(a, a, std::move(m));
                if (g.is_injective()) found.push_back(std::move(g));
                return;
            }
            for (const auto& v : candidates[i]) {
                bool ok = true;
                for (std::size_t j = 0; j < i; ++j)
                    if (!(q.bilinear(img[j], v) == q.sigma_gen(j, i))) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                img[i] = v;
                self(self, i + 1);
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

}  // namespace picmod
