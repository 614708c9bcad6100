#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "picmod/center.hpp"

using namespace picmod;
using namespace picmod::testing;

TEST_CASE("center form: worked examples") {
    // q = 0 on Z/2 doubles to the hyperbolic form Q(a, phi) = a phi / 2.
    const CenterForm hyp = center_form(make_form({2}, {"0/1"}));
    CHECK(hyp.doubled.group().orders() == std::vector<i64>{2, 2});
    CHECK(hyp.doubled.evaluate(hyp.doubled.group().element({1, 1})) == QZ(1, 2));
    CHECK(hyp.doubled.evaluate(hyp.doubled.group().element({1, 0})) == QZ());
    CHECK(hyp.doubled.evaluate(hyp.doubled.group().element({0, 1})) == QZ());

    const CenterForm triv = center_form(make_form({}, {}));
    CHECK(triv.doubled.group().order() == 1);

    const CenterForm semion = center_form(make_form({2}, {"1/4"}));
    CHECK(is_nondegenerate(semion.doubled));
    CHECK(semion.doubled.evaluate(semion.doubled.group().element({1, 0})) == QZ(1, 4));
    CHECK(semion.doubled.evaluate(semion.doubled.group().element({1, 1})) ==
          QZ(1, 4) + QZ(1, 2));

    // Q(a, phi) = <phi, a> + q(a) on every catalog form, exhaustively.
    for (const auto& q : catalog_forms()) {
        const CenterForm cf = center_form(q);
        const FinAbGroup& a = q.group();
        const FinAbGroup& d = cf.doubled.group();
        for (i64 ra = 0; ra < a.order(); ++ra)
            for (i64 rp = 0; rp < a.order(); ++rp) {
                const auto av = a.from_rank(ra), pv = a.from_rank(rp);
                std::vector<i64> coords = av.coords;
                coords.insert(coords.end(), pv.coords.begin(), pv.coords.end());
                CHECK(cf.doubled.evaluate(d.element(coords)) ==
                      pairing(a, pv, av) + q.evaluate(av));
            }
        // The center of a pointed category is factorizable.
        CHECK(is_nondegenerate(cf.doubled));
    }
}

TEST_CASE("embeddings") {
    for (const auto& q : catalog_forms()) {
        if (q.group().order() > 8) continue;
        const CenterEmbeddings e = embeddings(q);  // asserts internally
        const FinAbGroup& a = q.group();
        CHECK(e.forward_image.order() == a.order());
        CHECK(e.reverse_image.order() == a.order());
    }
}

TEST_CASE("alpha_f membership characterizes P(A,q)") {
    for (const auto& q : catalog_forms()) {
        if (q.group().order() > 4) continue;
        const CenterForm cf = center_form(q);
        const FinAbGroup& a = q.group();
        for (const auto& f : enumerate_homs(a, a)) {
            const GroupHom alpha = alpha_f(q, f);
            const bool orth = is_orthogonal(cf.doubled, alpha);
            CHECK(orth == is_picard_element(q, f));
        }
    }
}

TEST_CASE("alpha_f worked examples") {
    const QuadraticForm toric = make_form({2, 2}, {"0/1", "0/1"}, {{"0,1", "1/2"}});
    const CenterForm cf0 = center_form(toric);
    CHECK(alpha_f(toric, GroupHom::zero_map(toric.group(), toric.group())) ==
          GroupHom::identity(cf0.doubled.group()));

    const GroupHom ones(toric.group(), toric.group(), {{1, 1}, {1, 1}});
    const GroupHom alpha = alpha_f(toric, ones);
    const CenterForm cf = center_form(toric);
    const FinAbGroup& d = cf.doubled.group();
    CHECK(alpha.compose(alpha) == GroupHom::identity(d));
    // fixes A + 0 pointwise
    CHECK(alpha.apply(d.element({1, 0, 0, 0})) == d.element({1, 0, 0, 0}));
    CHECK(alpha.apply(d.element({0, 1, 0, 0})) == d.element({0, 1, 0, 0}));

    const GroupHom not_picard(toric.group(), toric.group(), {{1, 0}, {0, 1}});
    CHECK_FALSE(is_orthogonal(center_form(toric).doubled, alpha_f(toric, not_picard)));
}

TEST_CASE("trivializable automorphisms = alpha over P(A,q)") {
    for (const auto& q : catalog_forms()) {
        const auto triv = enumerate_trivializable(q);
        std::set<std::vector<i64>> lhs;
        for (const auto& g : triv) lhs.insert(g.flat());
        std::set<std::vector<i64>> rhs;
        for (const auto& f : enumerate_picard(q)) rhs.insert(alpha_f(q, f.f).flat());
        CHECK(lhs == rhs);
    }
    CHECK(enumerate_trivializable(make_form({2}, {"1/4"})).size() == 1);
    CHECK(enumerate_trivializable(make_form({2}, {"1/2"})).size() == 2);
    CHECK(enumerate_trivializable(make_form({2, 2}, {"0/1", "0/1"})).size() == 2);
}

TEST_CASE("alpha is a group homomorphism into O(double)") {
    for (const auto& q : catalog_forms()) {
        if (q.group().order() > 8) continue;
        const auto picard = enumerate_picard(q);
        for (const auto& f : picard)
            for (const auto& g : picard)
                CHECK(alpha_f(q, diamond(f, g).f) == alpha_f(q, f.f).compose(alpha_f(q, g.f)));
    }
}

TEST_CASE("restriction to the reverse embedding recovers partial") {
    for (const auto& q : catalog_forms()) {
        if (q.group().order() > 8) continue;
        for (const auto& f : enumerate_picard(q))
            CHECK(restrict_to_rev(q, alpha_f(q, f.f)) == partial_hom(f));
    }
    // Worked values.
    const QuadraticForm z4tan = make_form({4}, {"1/4"});
    const GroupHom one(z4tan.group(), z4tan.group(), {{1}});
    CHECK(restrict_to_rev(z4tan, alpha_f(z4tan, one)).matrix() ==
          std::vector<std::vector<i64>>{{3}});
}

TEST_CASE("conjugation lifts through the center") {
    for (const auto& q : catalog_forms()) {
        if (q.group().order() > 8) continue;
        const auto og = orthogonal_group(q);
        for (const auto& g : og)
            for (const auto& f : enumerate_picard(q)) CHECK(lift_conjugation_check(q, g, f));
    }
}
