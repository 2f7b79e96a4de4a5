#include <gtest/gtest.h>

#include "quantalib/constructions.hpp"
#include "quantalib/generators.hpp"
#include "quantalib/grothendieck.hpp"
#include "quantalib/iso.hpp"
#include "quantalib/sites.hpp"

using namespace quantalib;

namespace {

QuantaloidPtr share(FiniteQuantaloid q) { return std::make_shared<const FiniteQuantaloid>(std::move(q)); }

QuantaloidPtr locale3() { return share(locale_quantale(FiniteSupLattice::chain({"0", "m", "1"}))); }
QuantaloidPtr z2() { return share(groupoid_quantale(FiniteGroupoid::cyclic(2))); }

QuantaloidPtr crible2()
{
    FiniteCategory c({"a", "b"}, {{"u", "a", "b"}}, {});
    return share(closed_crible_quantaloid({c, trivial_topology(c)}).q);
}

TypedSet stars(std::size_t n)
{
    TypedSet t;
    for (std::size_t i = 0; i < n; ++i) {
        t.names.push_back("x" + std::to_string(i));
        t.types.push_back(0);
    }
    return t;
}

// Z/2-sets with at most n orbits, counted by orbit multiset: each orbit is free or a fixed point.
std::size_t z2_sets_by_orbits(std::size_t n)
{
    std::size_t count = 0;
    for (std::size_t k = 0; k <= n; ++k) count += k + 1;
    return count;
}

} // namespace

TEST(MoritaQuantale, OneObjectIsItself)
{
    for (const auto& q : {locale3(), z2(), share(relation_quantale(2))}) {
        auto m = morita_quantale(q);
        EXPECT_FALSE(m.qm.validate());
        EXPECT_TRUE(find_isomorphism(*q, m.qm));
        EXPECT_TRUE(morita_embedding_fully_faithful(m));
    }
}

TEST(MoritaQuantale, SeveralObjects)
{
    for (const auto& q : {share(all_boolean_quantaloid()), crible2()}) {
        auto m = morita_quantale(q);
        std::size_t expected = 1;
        for (ObjId a = 0; a < q->num_objects(); ++a)
            for (ObjId b = 0; b < q->num_objects(); ++b) expected *= q->hom(a, b).size();
        EXPECT_EQ(m.qm.hom(0, 0).size(), expected);
        EXPECT_FALSE(m.qm.validate());
        EXPECT_FALSE(m.split.split.validate());
        EXPECT_TRUE(morita_embedding_fully_faithful(m));
    }
}

TEST(MoritaQuantale, CarrierCap)
{
    // sixteen two-element homs give 2^16 matrices, past the lattice cap
    EXPECT_THROW(morita_quantale(share(all_boolean_quantaloid({"A", "B", "C", "D"}))), ResourceError);
}

TEST(Projections, RoundTrip)
{
    for (const auto& q : {locale3(), z2(), share(boolean_quantale())}) {
        auto ctx = make_split_context(q, true);
        for (std::size_t n = 1; n <= 2; ++n)
            for (const auto& p : symmetric_projections(q, stars(n))) {
                auto c = projection_to_category(ctx, p);
                EXPECT_TRUE(is_normal(*c));
                EXPECT_TRUE(is_symmetric(*c));
                EXPECT_EQ(category_to_projection(ctx, *c), p);
            }
        for (std::size_t n = 0; n <= 2; ++n)
            for (const auto& c : normal_categories(ctx.base, n, true)) {
                auto p = category_to_projection(ctx, *c);
                EXPECT_TRUE(is_symmetric_projection(p));
                EXPECT_EQ(projection_to_category(ctx, p)->hom(), c->hom());
            }
    }
}

TEST(Projections, Rejections)
{
    auto q = z2();
    auto ctx = make_split_context(q, true);
    Matrix p(q, stars(1), stars(1));
    p.set(0, 0, q->hom(0, 0).index_of("{1}"));
    EXPECT_THROW(projection_to_category(ctx, p), InputError);
    auto l = share(lukasiewicz_chain());
    auto lctx = make_split_context(l, true);
    EXPECT_THROW(projection_to_category(lctx, identity_matrix(l, stars(1))), CapabilityError);
}

TEST(Projections, EquivalenceMatchesMorita)
{
    auto q = z2();
    auto ctx = make_split_context(q, true);
    std::vector<Matrix> ps;
    for (std::size_t n = 1; n <= 2; ++n)
        for (auto& p : symmetric_projections(q, stars(n))) ps.push_back(p);
    for (const auto& p : ps)
        for (const auto& p2 : ps)
            EXPECT_EQ(projections_equivalent(p, p2),
                      morita_equivalence(projection_to_category(ctx, p), projection_to_category(ctx, p2)).has_value());
}

TEST(Normalize, WitnessesAndTypes)
{
    for (const auto& q : {locale3(), z2()}) {
        auto ctx = make_split_context(q, true);
        // all categories over ssi(Q) with up to two objects, normal or not
        for (std::size_t n = 1; n <= 2; ++n) {
            for (ObjId t0 = 0; t0 < ctx.base->num_objects(); ++t0)
                for (ObjId t1 = 0; t1 < (n == 2 ? ctx.base->num_objects() : 1); ++t1) {
                    TypedSet t;
                    t.names = {"a"};
                    t.types = {t0};
                    if (n == 2) {
                        t.names.push_back("b");
                        t.types.push_back(t1);
                    }
                    Matrix m(ctx.base, t, t);
                    std::size_t total = 1;
                    for (std::size_t y = 0; y < n; ++y)
                        for (std::size_t x = 0; x < n; ++x) total *= m.hom(y, x).size();
                    for (std::size_t code = 0; code < total; ++code) {
                        std::size_t c = code;
                        for (std::size_t y = 0; y < n; ++y)
                            for (std::size_t x = 0; x < n; ++x) {
                                m.set(y, x, static_cast<Elem>(c % m.hom(y, x).size()));
                                c /= m.hom(y, x).size();
                            }
                        if (!is_monad(m)) continue;
                        auto a = make_category(m);
                        auto nz = normalize(ctx, a);
                        EXPECT_TRUE(is_normal(*nz.cat));
                        EXPECT_TRUE(normalization_witnessed(a, nz));
                        if (is_symmetric(*a)) {
                            EXPECT_TRUE(is_symmetric(*nz.cat));
                        }
                    }
                }
        }
    }
}

TEST(Sheaves, BooleanCountsSets)
{
    auto b = share(boolean_quantale());
    for (std::size_t n = 0; n <= 3; ++n) EXPECT_EQ(enumerate_sheaves(b, n, true).representatives.size(), n + 1);
}

TEST(Sheaves, CyclicGroupCountsOrbitMultisets)
{
    for (std::size_t n = 0; n <= 2; ++n)
        EXPECT_EQ(enumerate_sheaves(z2(), n, true).representatives.size(), z2_sets_by_orbits(n));
}

TEST(Sheaves, AllIdempotentsMode)
{
    auto b = share(boolean_quantale());
    // non-symmetric categories over 2 are preorders; up to equivalence, posets
    const std::size_t posets[] = {1, 2, 4};
    for (std::size_t n = 0; n <= 2; ++n) EXPECT_EQ(enumerate_sheaves(b, n, false).representatives.size(), posets[n]);
    EXPECT_THROW(enumerate_sheaves(b, 3, true, 1), ResourceError);
}

TEST(MoritaQuantale, TwoBooleanObjectsGiveRelations)
{
    auto m = morita_quantale(share(all_boolean_quantaloid()));
    EXPECT_TRUE(find_isomorphism(m.qm, relation_quantale(2)));
    for (ObjId a = 0; a < 2; ++a) {
        Morphism e{0, 0, m.matrix_of(m.base->identity(a))};
        EXPECT_TRUE(is_symmetric_idempotent(m.qm, e));
    }
}

TEST(Projections, DiagonalGivesDiscrete)
{
    for (const auto& q : {locale3(), z2()}) {
        auto ctx = make_split_context(q, true);
        auto c = projection_to_category(ctx, identity_matrix(q, stars(2)));
        ObjId top = *ctx.object_for(q->identity(0));
        EXPECT_EQ(c->hom(), discrete_category(ctx.base, TypedSet{{"x0", "x1"}, {top, top}})->hom());
    }
}

TEST(Normalize, OneObjectRetypedAtItsIdempotent)
{
    // typed at the diagonal, with the full relation (an idempotent above it) as hom
    auto q = share(relation_quantale(2));
    auto ctx = make_split_context(q, true);
    ObjId diag = *ctx.object_for(q->identity(0));
    const Elem full = q->hom(0, 0).top();
    Matrix m(ctx.base, typed_singleton("a", diag), typed_singleton("a", diag));
    m.set(0, 0, ctx.local(diag, diag, full));
    auto a = make_category(m);
    auto nz = normalize(ctx, a);
    EXPECT_EQ(ctx.split.idempotent_of[nz.cat->type(0)], (Morphism{0, 0, full}));
    EXPECT_TRUE(is_normal(*nz.cat));
    EXPECT_TRUE(normalization_witnessed(a, nz));
    // already normal: unchanged, identity witnesses
    auto again = normalize(ctx, nz.cat);
    EXPECT_EQ(again.cat->hom(), nz.cat->hom());
    EXPECT_EQ(again.gamma.m, nz.cat->hom());
}

TEST(Groupoids, QuantalesAreGrothendieck)
{
    std::vector<FiniteGroupoid> gs{FiniteGroupoid::cyclic(1), FiniteGroupoid::cyclic(2), FiniteGroupoid::cyclic(3)};
    for (const auto& g : gs) {
        auto q = groupoid_quantale(g);
        EXPECT_TRUE(is_grothendieck(q));
        EXPECT_TRUE(grothendieck_via_top(q).holds);
    }
    EXPECT_TRUE(find_isomorphism(groupoid_quantale(FiniteGroupoid::cyclic(1)), boolean_quantale()));
}
