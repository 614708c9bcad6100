#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "picmod/errors.hpp"
#include "picmod/group.hpp"

using namespace picmod;

namespace {

GroupHom make_hom(const std::vector<i64>& src, const std::vector<i64>& dst,
                  std::vector<std::vector<i64>> m) {
    return GroupHom(FinAbGroup(src), FinAbGroup(dst), std::move(m));
}

const std::vector<std::vector<i64>> kDeskGroups = {
    {2}, {3}, {4}, {6}, {8}, {2, 2}, {2, 4}, {3, 3}, {2, 2, 2}, {12},
};

}  // namespace

TEST_CASE("group element arithmetic") {
    FinAbGroup g({2, 4});
    CHECK(g.order() == 8);
    const auto x = g.element({1, 3});
    const auto y = g.element({1, 2});
    CHECK(g.add(x, y) == g.element({0, 1}));
    CHECK(g.neg(x) == g.element({1, 1}));
    CHECK(g.scale(3, x) == g.element({1, 1}));
    CHECK(g.element_order(x) == 4);
    CHECK(g.element_order(g.zero()) == 1);
    CHECK(g.element({5, -1}) == g.element({1, 3}));
    for (i64 r = 0; r < g.order(); ++r) CHECK(g.rank_of(g.from_rank(r)) == r);
}

TEST_CASE("hom construction validates well-definedness") {
    CHECK_NOTHROW(make_hom({2}, {2}, {{1}}));
    CHECK_THROWS_AS(make_hom({2}, {4}, {{1}}), WellDefinednessError);
    const GroupHom f = make_hom({2}, {4}, {{2}});
    CHECK(f.apply(f.source().element({1})) == f.target().element({2}));
    CHECK_THROWS_AS(make_hom({2}, {2}, {{1, 0}}), ShapeError);
}

TEST_CASE("composition") {
    FinAbGroup z4({4});
    const GroupHom t = make_hom({4}, {4}, {{3}});
    CHECK(t.compose(t) == GroupHom::identity(z4));
    CHECK(t.compose(GroupHom::identity(z4)) == t);
    CHECK(GroupHom::identity(z4).compose(t) == t);
}

TEST_CASE("additivity of generated homs, exhaustively at desk scale") {
    for (const auto& src : {std::vector<i64>{2, 4}, std::vector<i64>{3}})
        for (const auto& dst : {std::vector<i64>{4}, std::vector<i64>{2, 2}}) {
            FinAbGroup s(src), d(dst);
            for (const auto& f : enumerate_homs(s, d)) {
                CHECK(f.apply(s.zero()).is_zero());
                for (i64 rx = 0; rx < s.order(); ++rx)
                    for (i64 ry = 0; ry < s.order(); ++ry) {
                        const auto x = s.from_rank(rx), y = s.from_rank(ry);
                        CHECK(f.apply(s.add(x, y)) == d.add(f.apply(x), f.apply(y)));
                    }
            }
        }
}

TEST_CASE("dual homs and the pairing identity") {
    FinAbGroup z2({2}), z4({4});
    CHECK(GroupHom::identity(z4).dual() == GroupHom::identity(z4));

    const GroupHom f = make_hom({2}, {4}, {{2}});
    const GroupHom fd = f.dual();
    CHECK(fd.matrix() == std::vector<std::vector<i64>>{{1}});
    for (i64 psi = 0; psi < 4; ++psi)
        for (i64 x = 0; x < 2; ++x) {
            const auto p = z4.element({psi});
            const auto e = z2.element({x});
            CHECK(pairing(z2, fd.apply(p), e) == pairing(z4, p, f.apply(e)));
        }

    // Contravariance on random small homs.
    std::mt19937_64 rng(3);
    FinAbGroup a({2, 4}), b({4}), c({2, 2});
    const auto fs = enumerate_homs(a, b), gs = enumerate_homs(b, c);
    for (int it = 0; it < 40; ++it) {
        const auto& ff = fs[rng() % fs.size()];
        const auto& gg = gs[rng() % gs.size()];
        CHECK(gg.compose(ff).dual() == ff.dual().compose(gg.dual()));
    }

    // The pairing identity for every hom between a pair of desk groups.
    for (const auto& f2 : fs)
        for (i64 psi = 0; psi < b.order(); ++psi)
            for (i64 x = 0; x < a.order(); ++x)
                CHECK(pairing(a, f2.dual().apply(b.from_rank(psi)), a.from_rank(x)) ==
                      pairing(b, b.from_rank(psi), f2.apply(a.from_rank(x))));
}

TEST_CASE("pairing is perfect") {
    for (const auto& orders : kDeskGroups) {
        FinAbGroup g(orders);
        if (g.order() > 12) continue;
        for (i64 p1 = 0; p1 < g.order(); ++p1)
            for (i64 p2 = p1 + 1; p2 < g.order(); ++p2) {
                bool separated = false;
                for (i64 x = 0; x < g.order() && !separated; ++x)
                    separated = !(pairing(g, g.from_rank(p1), g.from_rank(x)) ==
                                  pairing(g, g.from_rank(p2), g.from_rank(x)));
                CHECK(separated);
            }
    }
}

TEST_CASE("hom enumeration counts") {
    CHECK(enumerate_homs(FinAbGroup({2}), FinAbGroup({3})).size() == 1);
    CHECK(enumerate_homs(FinAbGroup({2}), FinAbGroup({3}))[0].apply(FinAbGroup({2}).element({1}))
              .is_zero());
    CHECK(enumerate_homs(FinAbGroup({2}), FinAbGroup({4})).size() == 2);
    CHECK(enumerate_homs(FinAbGroup({2, 2}), FinAbGroup({2, 2})).size() == 16);

    // Count formula prod gcd(m_j, n_i) on a few shapes.
    for (const auto& src : kDeskGroups)
        for (const auto& dst : {std::vector<i64>{2, 4}, std::vector<i64>{6}}) {
            i64 expect = 1;
            for (i64 m : src)
                for (i64 n : dst) expect *= std::gcd(m, n);
            CHECK(static_cast<i64>(enumerate_homs(FinAbGroup(src), FinAbGroup(dst)).size()) ==
                  expect);
        }

    SizeGuard tight;
    tight.max_candidates = 10;
    CHECK_THROWS_AS(enumerate_homs(FinAbGroup({2, 2}), FinAbGroup({2, 2}), tight),
                    SizeGuardError);
}

TEST_CASE("trivial group edge cases") {
    FinAbGroup triv(std::vector<i64>{});
    CHECK(triv.order() == 1);
    CHECK(enumerate_homs(triv, FinAbGroup({4})).size() == 1);
    CHECK(enumerate_homs(FinAbGroup({4}), triv).size() == 1);
    CHECK(enumerate_automorphisms(triv).size() == 1);
    FinAbGroup ones({1, 1});
    CHECK(ones.order() == 1);
    CHECK(enumerate_automorphisms(ones).size() == 1);
}

TEST_CASE("automorphism groups") {
    CHECK(enumerate_automorphisms(FinAbGroup({4})).size() == 2);
    CHECK(enumerate_automorphisms(FinAbGroup({2, 2})).size() == 6);
    CHECK(enumerate_automorphisms(FinAbGroup({2, 4})).size() == 8);

    // Closure and inverses: Aut is a group under composition.
    for (const auto& orders : {std::vector<i64>{2, 4}, std::vector<i64>{2, 2}}) {
        FinAbGroup g(orders);
        const auto aut = enumerate_automorphisms(g);
        std::set<std::vector<i64>> keys;
        for (const auto& f : aut) keys.insert(f.flat());
        for (const auto& f : aut) {
            CHECK(keys.count(f.inverse()->flat()) == 1);
            for (const auto& h : aut) CHECK(keys.count(f.compose(h).flat()) == 1);
        }
    }
}

TEST_CASE("subgroup enumeration and bases") {
    CHECK(enumerate_subgroups(FinAbGroup({4})).size() == 3);
    CHECK(enumerate_subgroups(FinAbGroup({2, 2})).size() == 5);
    CHECK(enumerate_subgroups(FinAbGroup({6})).size() == 4);

    for (const auto& orders : kDeskGroups) {
        FinAbGroup g(orders);
        for (const auto& s : enumerate_subgroups(g)) {
            // Certificate: the basis regenerates the element set and the
            // basis orders multiply to |B|.
            i64 prod = 1;
            for (std::size_t r = 0; r < s.basis().size(); ++r) {
                CHECK(g.element_order(s.basis()[r]) == s.basis_orders()[r]);
                prod *= s.basis_orders()[r];
            }
            CHECK(prod == s.order());
            const Subgroup regen = Subgroup::span(g, s.basis());
            CHECK(regen == s);
            // embed/coords_of are mutually inverse over the basis group.
            const FinAbGroup bg = s.basis_group();
            for (i64 r = 0; r < bg.order(); ++r) {
                const auto u = bg.from_rank(r);
                CHECK(s.coords_of(s.embed(u)) == u);
                CHECK(s.contains(s.embed(u)));
            }
        }
    }
}

TEST_CASE("subgroup restriction hom is dual to the embedding") {
    FinAbGroup g({2, 4});
    for (const auto& s : enumerate_subgroups(g)) {
        const GroupHom e = s.embedding_hom();
        const GroupHom r = s.restriction_hom();
        const FinAbGroup bg = s.basis_group();
        for (i64 phi = 0; phi < g.order(); ++phi)
            for (i64 u = 0; u < bg.order(); ++u)
                CHECK(pairing(bg, r.apply(g.from_rank(phi)), bg.from_rank(u)) ==
                      pairing(g, g.from_rank(phi), e.apply(bg.from_rank(u))));
    }
}

TEST_CASE("inverse certificates") {
    FinAbGroup g({2, 4});
    for (const auto& f : enumerate_homs(g, g)) {
        const auto inv = f.inverse();
        if (inv) {
            CHECK(inv->compose(f) == GroupHom::identity(g));
            CHECK(f.compose(*inv) == GroupHom::identity(g));
            CHECK(f.is_injective());
        } else {
            CHECK_FALSE(f.is_injective());
        }
    }
}
