#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "picmod/qz.hpp"

namespace picmod {

using i64 = std::int64_t;

// Budget for exhaustive enumerations.  max_candidates bounds the size of a
// generated candidate space (e.g. |Hom(G,H)|), max_group_order bounds |G|
// for element-by-element scans, and max_center_base_order bounds |A| when an
// operation works on the doubled group A + A^ of order |A|^2.
struct SizeGuard {
    i64 max_candidates = 10'000'000;
    i64 max_group_order = 36;
    i64 max_center_base_order = 12;
};

// Residue vector tied to some FinAbGroup; arithmetic goes through the group.
struct GroupElement {
    std::vector<i64> coords;

    bool is_zero() const {
        for (i64 c : coords)
            if (c != 0) return false;
        return true;
    }
    bool operator==(const GroupElement&) const = default;
    auto operator<=>(const GroupElement&) const = default;
};

// Finite abelian group presented as a list of cyclic factor orders n_i >= 1.
// The list is kept as given (not forced into invariant factors); elements are
// canonical residue vectors; element ranks follow mixed-radix order with the
// last coordinate fastest.
class FinAbGroup {
  public:
    FinAbGroup() = default;
    explicit FinAbGroup(std::vector<i64> orders);

    std::size_t rank() const { return orders_.size(); }
    i64 order() const { return order_; }
    const std::vector<i64>& orders() const { return orders_; }
    bool operator==(const FinAbGroup&) const = default;

    GroupElement zero() const;
    GroupElement element(std::vector<i64> coords) const;  // canonicalizes
    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement sub(const GroupElement& a, const GroupElement& b) const;
    GroupElement neg(const GroupElement& a) const;
    GroupElement scale(i64 k, const GroupElement& a) const;
    i64 element_order(const GroupElement& a) const;

    i64 rank_of(const GroupElement& a) const;
    GroupElement from_rank(i64 r) const;
    std::vector<GroupElement> elements() const;  // all, in rank order

  private:
    std::vector<i64> orders_;
    i64 order_ = 1;
};

// Pontryagin pairing <chi, a> = sum_i chi_i a_i / n_i.  The dual group of A
// reuses A's orders list; the first argument is read as a character.
QZ pairing(const FinAbGroup& g, const GroupElement& chi, const GroupElement& a);

// Homomorphism f: source -> target stored as an integer matrix with rows
// indexed by target factors and columns by source factors, entries reduced
// mod the row's order.  Construction validates m_j * M_ij = 0 (mod n_i).
class GroupHom {
  public:
    GroupHom() = default;
    GroupHom(FinAbGroup source, FinAbGroup target, std::vector<std::vector<i64>> matrix);

    static GroupHom identity(const FinAbGroup& g);
    static GroupHom zero_map(const FinAbGroup& source, const FinAbGroup& target);

    const FinAbGroup& source() const { return source_; }
    const FinAbGroup& target() const { return target_; }
    const std::vector<std::vector<i64>>& matrix() const { return m_; }

    GroupElement apply(const GroupElement& x) const;
    GroupHom compose(const GroupHom& inner) const;  // (*this) o inner

    // Dual f*: target^ -> source^ with <f*(psi), x> = <psi, f(x)>; the matrix
    // entry is (m_j * M_ij) / n_i mod m_j, integral by well-definedness.
    GroupHom dual() const;

    bool is_injective() const;  // kernel scan over the source
    // Two-sided inverse if bijective; certified by composing back to identity.
    std::optional<GroupHom> inverse() const;

    GroupHom add(const GroupHom& o) const;  // pointwise sum, same shape
    GroupHom sub(const GroupHom& o) const;

    std::vector<i64> flat() const;  // row-major entries, canonical sort key
    bool operator==(const GroupHom& o) const = default;

  private:
    FinAbGroup source_, target_;
    std::vector<std::vector<i64>> m_;
};

// Subgroup of an ambient group: the full (sorted) element set plus a basis of
// independent generators obtained by greedy reduction and certified by
// regenerating the element set.
class Subgroup {
  public:
    static Subgroup span(const FinAbGroup& ambient, const std::vector<GroupElement>& gens);
    static Subgroup trivial(const FinAbGroup& ambient);
    static Subgroup full(const FinAbGroup& ambient);

    const FinAbGroup& ambient() const { return ambient_; }
    i64 order() const { return static_cast<i64>(elements_.size()); }
    const std::vector<GroupElement>& elements() const { return elements_; }
    const std::vector<GroupElement>& basis() const { return basis_; }
    const std::vector<i64>& basis_orders() const { return basis_orders_; }

    bool contains(const GroupElement& x) const;
    // Position of x in the sorted element list; -1 if absent.
    i64 position(const GroupElement& x) const;

    // The abstract group carried by the basis orders, together with the two
    // structure maps: embed sends basis coordinates into the ambient group,
    // coords_of inverts it on the element set.
    FinAbGroup basis_group() const;
    GroupElement embed(const GroupElement& u) const;
    GroupElement coords_of(const GroupElement& x) const;  // throws if absent
    GroupHom embedding_hom() const;                       // basis_group -> ambient
    // Character restriction ambient^ -> basis_group^, the dual of embedding_hom.
    GroupHom restriction_hom() const;

    bool operator==(const Subgroup& o) const {
        return ambient_ == o.ambient_ && elements_ == o.elements_;
    }

  private:
    FinAbGroup ambient_;
    std::vector<GroupElement> elements_;
    std::vector<GroupElement> basis_;
    std::vector<i64> basis_orders_;
};

// All homomorphisms G -> H; |Hom| = prod gcd(m_j, n_i) is checked against the
// guard before materializing.
std::vector<GroupHom> enumerate_homs(const FinAbGroup& source, const FinAbGroup& target,
                                     const SizeGuard& guard = {});

// All bijective endomorphisms, each certified by a two-sided inverse.
std::vector<GroupHom> enumerate_automorphisms(const FinAbGroup& g, const SizeGuard& guard = {});

// Every subgroup exactly once, sorted by (order, element ranks).
std::vector<Subgroup> enumerate_subgroups(const FinAbGroup& g, const SizeGuard& guard = {});

}  // namespace picmod
