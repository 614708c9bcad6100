#include "picmod/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "picmod/errors.hpp"

namespace picmod {

FinAbGroup::FinAbGroup(std::vector<i64> orders) : orders_(std::move(orders)) {
    for (i64 n : orders_) {
        if (n < 1) throw Error("FinAbGroup: factor orders must be >= 1");
        order_ *= n;
    }
}

GroupElement FinAbGroup::zero() const {
    return GroupElement{std::vector<i64>(rank(), 0)};
}

GroupElement FinAbGroup::element(std::vector<i64> coords) const {
    if (coords.size() != rank()) throw ShapeError("FinAbGroup: coordinate count mismatch");
    for (std::size_t i = 0; i < coords.size(); ++i) {
        coords[i] %= orders_[i];
        if (coords[i] < 0) coords[i] += orders_[i];
    }
    return GroupElement{std::move(coords)};
}

GroupElement FinAbGroup::add(const GroupElement& a, const GroupElement& b) const {
    GroupElement r = a;
    for (std::size_t i = 0; i < rank(); ++i) {
        r.coords[i] += b.coords[i];
        if (r.coords[i] >= orders_[i]) r.coords[i] -= orders_[i];
    }
    return r;
}

GroupElement FinAbGroup::sub(const GroupElement& a, const GroupElement& b) const {
    GroupElement r = a;
    for (std::size_t i = 0; i < rank(); ++i) {
        r.coords[i] -= b.coords[i];
        if (r.coords[i] < 0) r.coords[i] += orders_[i];
    }
    return r;
}

GroupElement FinAbGroup::neg(const GroupElement& a) const { return sub(zero(), a); }

GroupElement FinAbGroup::scale(i64 k, const GroupElement& a) const {
    GroupElement r = zero();
    for (std::size_t i = 0; i < rank(); ++i) {
        i64 v = (k % orders_[i]) * a.coords[i] % orders_[i];
        if (v < 0) v += orders_[i];
        r.coords[i] = v;
    }
    return r;
}

i64 FinAbGroup::element_order(const GroupElement& a) const {
    i64 ord = 1;
    for (std::size_t i = 0; i < rank(); ++i) {
        const i64 o = orders_[i] / std::gcd(orders_[i], a.coords[i]);
        ord = std::lcm(ord, o);
    }
    return ord;
}

i64 FinAbGroup::rank_of(const GroupElement& a) const {
    i64 r = 0;
    for (std::size_t i = 0; i < rank(); ++i) r = r * orders_[i] + a.coords[i];
    return r;
}

GroupElement FinAbGroup::from_rank(i64 r) const {
    std::vector<i64> coords(rank(), 0);
    for (std::size_t i = rank(); i-- > 0;) {
        coords[i] = r % orders_[i];
        r /= orders_[i];
    }
    return GroupElement{std::move(coords)};
}

std::vector<GroupElement> FinAbGroup::elements() const {
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(order_));
    for (i64 r = 0; r < order_; ++r) out.push_back(from_rank(r));
    return out;
}

QZ pairing(const FinAbGroup& g, const GroupElement& chi, const GroupElement& a) {
    QZ v;
    for (std::size_t i = 0; i < g.rank(); ++i)
        v += QZ(chi.coords[i] * a.coords[i], g.orders()[i]);
    return v;
}

GroupHom::GroupHom(FinAbGroup source, FinAbGroup target, std::vector<std::vector<i64>> matrix)
    : source_(std::move(source)), target_(std::move(target)), m_(std::move(matrix)) {
    const auto& srco = source_.orders();
    const auto& tgto = target_.orders();
    if (m_.size() != tgto.size()) throw ShapeError("GroupHom: row count mismatch");
    for (std::size_t i = 0; i < m_.size(); ++i) {
        if (m_[i].size() != srco.size()) throw ShapeError("GroupHom: column count mismatch");
        for (std::size_t j = 0; j < m_[i].size(); ++j) {
            i64& e = m_[i][j];
            e %= tgto[i];
            if (e < 0) e += tgto[i];
            if (srco[j] * e % tgto[i] != 0)
                throw WellDefinednessError("GroupHom: m_j * M_ij != 0 (mod n_i) at (" +
                                           std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
}

GroupHom GroupHom::identity(const FinAbGroup& g) {
    std::vector<std::vector<i64>> m(g.rank(), std::vector<i64>(g.rank(), 0));
    for (std::size_t i = 0; i < g.rank(); ++i) m[i][i] = 1 % g.orders()[i];
    return GroupHom(g, g, std::move(m));
}

GroupHom GroupHom::zero_map(const FinAbGroup& source, const FinAbGroup& target) {
    return GroupHom(source, target,
                    std::vector<std::vector<i64>>(target.rank(), std::vector<i64>(source.rank(), 0)));
}

GroupElement GroupHom::apply(const GroupElement& x) const {
    GroupElement y = target_.zero();
    for (std::size_t i = 0; i < target_.rank(); ++i) {
        i64 acc = 0;
        for (std::size_t j = 0; j < source_.rank(); ++j)
            acc = (acc + m_[i][j] * x.coords[j]) % target_.orders()[i];
        y.coords[i] = acc;
    }
    return y;
}

GroupHom GroupHom::compose(const GroupHom& inner) const {
    if (!(inner.target_ == source_)) throw ShapeError("GroupHom::compose: shape mismatch");
    std::vector<std::vector<i64>> m(target_.rank(), std::vector<i64>(inner.source_.rank(), 0));
    for (std::size_t i = 0; i < target_.rank(); ++i)
        for (std::size_t j = 0; j < inner.source_.rank(); ++j) {
            i64 acc = 0;
            for (std::size_t k = 0; k < source_.rank(); ++k)
                acc = (acc + m_[i][k] * inner.m_[k][j]) % target_.orders()[i];
            m[i][j] = acc;
        }
    return GroupHom(inner.source_, target_, std::move(m));
}

GroupHom GroupHom::dual() const {
    const auto& srco = source_.orders();
    const auto& tgto = target_.orders();
    std::vector<std::vector<i64>> n(source_.rank(), std::vector<i64>(target_.rank(), 0));
    for (std::size_t j = 0; j < source_.rank(); ++j)
        for (std::size_t i = 0; i < target_.rank(); ++i)
            n[j][i] = srco[j] * m_[i][j] / tgto[i] % srco[j];
    return GroupHom(target_, source_, std::move(n));
}

bool GroupHom::is_injective() const {
    for (i64 r = 1; r < source_.order(); ++r)
        if (apply(source_.from_rank(r)).is_zero()) return false;
    return true;
}

std::optional<GroupHom> GroupHom::inverse() const {
    if (source_.order() != target_.order()) return std::nullopt;
    std::vector<i64> preimage(static_cast<std::size_t>(target_.order()), -1);
    for (i64 r = 0; r < source_.order(); ++r) {
        const i64 t = target_.rank_of(apply(source_.from_rank(r)));
        if (preimage[static_cast<std::size_t>(t)] != -1) return std::nullopt;
        preimage[static_cast<std::size_t>(t)] = r;
    }
    std::vector<std::vector<i64>> m(source_.rank(), std::vector<i64>(target_.rank(), 0));
    for (std::size_t j = 0; j < target_.rank(); ++j) {
        GroupElement gen = target_.zero();
        gen.coords[j] = 1 % target_.orders()[j];
        const GroupElement pre = source_.from_rank(preimage[static_cast<std::size_t>(target_.rank_of(gen))]);
        for (std::size_t i = 0; i < source_.rank(); ++i) m[i][j] = pre.coords[i];
    }
    GroupHom inv(target_, source_, std::move(m));
    if (!(inv.compose(*this) == identity(source_)) || !(compose(inv) == identity(target_)))
        return std::nullopt;
    return inv;
}

GroupHom GroupHom::add(const GroupHom& o) const {
    if (!(source_ == o.source_) || !(target_ == o.target_))
        throw ShapeError("GroupHom::add: shape mismatch");
    auto m = m_;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j)
            m[i][j] = (m[i][j] + o.m_[i][j]) % target_.orders()[i];
    return GroupHom(source_, target_, std::move(m));
}

GroupHom GroupHom::sub(const GroupHom& o) const {
    if (!(source_ == o.source_) || !(target_ == o.target_))
        throw ShapeError("GroupHom::sub: shape mismatch");
    auto m = m_;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j)
            m[i][j] = (m[i][j] - o.m_[i][j] % target_.orders()[i] + target_.orders()[i]) %
                      target_.orders()[i];
    return GroupHom(source_, target_, std::move(m));
}

std::vector<i64> GroupHom::flat() const {
    std::vector<i64> out;
    for (const auto& row : m_) out.insert(out.end(), row.begin(), row.end());
    return out;
}

namespace {

std::vector<GroupElement> closure(const FinAbGroup& g, const std::vector<GroupElement>& gens) {
    std::set<GroupElement> seen{g.zero()};
    std::vector<GroupElement> work{g.zero()};
    while (!work.empty()) {
        const GroupElement x = work.back();
        work.pop_back();
        for (const auto& gen : gens) {
            GroupElement y = g.add(x, gen);
            if (seen.insert(y).second) work.push_back(std::move(y));
        }
    }
    return {seen.begin(), seen.end()};
}

// Greedy basis: repeatedly take an element whose order modulo the current
// span is maximal and equals its own order in the ambient group (such a
// representative exists because the current span stays a direct summand).
void extract_basis(const FinAbGroup& g, const std::vector<GroupElement>& elements,
                   std::vector<GroupElement>& basis, std::vector<i64>& basis_orders) {
    std::set<GroupElement> span_set{g.zero()};
    std::vector<GroupElement> span_gens;
    auto quot_order = [&](const GroupElement& x) {
        GroupElement acc = x;
        for (i64 k = 1;; ++k) {
            if (span_set.count(acc)) return k;
            acc = g.add(acc, x);
        }
    };
    while (static_cast<i64>(span_set.size()) < static_cast<i64>(elements.size())) {
        i64 best = 0;
        const GroupElement* pick = nullptr;
        for (const auto& x : elements) {
            if (span_set.count(x)) continue;
            const i64 q = quot_order(x);
            if (q > best && g.element_order(x) == q) {
                best = q;
                pick = &x;
            }
        }
        if (!pick)
            throw PropertyViolationError("Subgroup: no order-matching representative found");
        basis.push_back(*pick);
        basis_orders.push_back(best);
        span_gens.push_back(*pick);
        auto closed = closure(g, span_gens);
        span_set = std::set<GroupElement>(closed.begin(), closed.end());
    }
    i64 prod = 1;
    for (i64 o : basis_orders) prod *= o;
    if (prod != static_cast<i64>(elements.size()))
        throw PropertyViolationError("Subgroup: basis certificate failed");
}

}  // namespace

Subgroup Subgroup::span(const FinAbGroup& ambient, const std::vector<GroupElement>& gens) {
    Subgroup s;
    s.ambient_ = ambient;
    s.elements_ = closure(ambient, gens);
    std::sort(s.elements_.begin(), s.elements_.end());
    extract_basis(ambient, s.elements_, s.basis_, s.basis_orders_);
    return s;
}

Subgroup Subgroup::trivial(const FinAbGroup& ambient) { return span(ambient, {}); }

Subgroup Subgroup::full(const FinAbGroup& ambient) {
    std::vector<GroupElement> gens;
    for (std::size_t i = 0; i < ambient.rank(); ++i) {
        GroupElement e = ambient.zero();
        e.coords[i] = 1 % ambient.orders()[i];
        gens.push_back(std::move(e));
    }
    return span(ambient, gens);
}

bool Subgroup::contains(const GroupElement& x) const {
    return std::binary_search(elements_.begin(), elements_.end(), x);
}

i64 Subgroup::position(const GroupElement& x) const {
    const auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
    if (it == elements_.end() || !(*it == x)) return -1;
    return it - elements_.begin();
}

FinAbGroup Subgroup::basis_group() const { return FinAbGroup(basis_orders_); }

GroupElement Subgroup::embed(const GroupElement& u) const {
    GroupElement x = ambient_.zero();
    for (std::size_t r = 0; r < basis_.size(); ++r)
        x = ambient_.add(x, ambient_.scale(u.coords[r], basis_[r]));
    return x;
}

GroupElement Subgroup::coords_of(const GroupElement& x) const {
    const FinAbGroup b = basis_group();
    for (i64 r = 0; r < b.order(); ++r) {
        const GroupElement u = b.from_rank(r);
        if (embed(u) == x) return u;
    }
    throw Error("Subgroup::coords_of: element not in subgroup");
}

GroupHom Subgroup::embedding_hom() const {
    std::vector<std::vector<i64>> m(ambient_.rank(), std::vector<i64>(basis_.size(), 0));
    for (std::size_t r = 0; r < basis_.size(); ++r)
        for (std::size_t i = 0; i < ambient_.rank(); ++i) m[i][r] = basis_[r].coords[i];
    return GroupHom(basis_group(), ambient_, std::move(m));
}

GroupHom Subgroup::restriction_hom() const { return embedding_hom().dual(); }

std::vector<GroupHom> enumerate_homs(const FinAbGroup& source, const FinAbGroup& target,
                                     const SizeGuard& guard) {
    i64 count = 1;
    for (i64 m : source.orders()) {
        for (i64 n : target.orders()) {
            count *= std::gcd(m, n);
            if (count > guard.max_candidates)
                throw SizeGuardError("enumerate_homs: |Hom| exceeds max_candidates");
        }
    }
    // Entry (i, j) ranges over multiples of n_i / gcd(m_j, n_i).
    std::vector<GroupHom> out;
    out.reserve(static_cast<std::size_t>(count));
    std::vector<std::vector<i64>> m(target.rank(), std::vector<i64>(source.rank(), 0));
    const std::size_t cells = target.rank() * source.rank();
    auto rec = [&](auto&& self, std::size_t cell) -> void {
        if (cell == cells) {
            out.emplace_back(source, target, m);
            return;
        }
        const std::size_t i = cell / source.rank();
        const std::size_t j = cell % source.rank();
        const i64 g = std::gcd(source.orders()[j], target.orders()[i]);
        const i64 step = target.orders()[i] / g;
        for (i64 k = 0; k < g; ++k) {
            m[i][j] = k * step;
            self(self, cell + 1);
        }
    };
    if (cells == 0) {
        out.emplace_back(source, target, m);
    } else {
        rec(rec, 0);
    }
    return out;
}

std::vector<GroupHom> enumerate_automorphisms(const FinAbGroup& g, const SizeGuard& guard) {
    std::vector<GroupHom> out;
    for (auto& f : enumerate_homs(g, g, guard))
        if (f.inverse()) out.push_back(std::move(f));
    return out;
}

std::vector<Subgroup> enumerate_subgroups(const FinAbGroup& g, const SizeGuard& guard) {
    if (g.order() > guard.max_group_order)
        throw SizeGuardError("enumerate_subgroups: group order exceeds guard");
    const auto all = g.elements();
    std::map<std::vector<GroupElement>, Subgroup> found;
    Subgroup triv = Subgroup::trivial(g);
    found.emplace(triv.elements(), triv);
    std::vector<Subgroup> work{triv};
    while (!work.empty()) {
        Subgroup s = std::move(work.back());
        work.pop_back();
        for (const auto& x : all) {
            if (s.contains(x)) continue;
            std::vector<GroupElement> gens = s.basis();
            gens.push_back(x);
            Subgroup bigger = Subgroup::span(g, gens);
            if (found.emplace(bigger.elements(), bigger).second) work.push_back(std::move(bigger));
        }
    }
    std::vector<Subgroup> out;
    out.reserve(found.size());
    for (auto& [key, s] : found) out.push_back(std::move(s));
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements() < b.elements();
    });
    return out;
}

}  // namespace picmod
