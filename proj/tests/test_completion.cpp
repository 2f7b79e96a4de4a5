#include <gtest/gtest.h>

#include "quantalib/completion.hpp"
#include "quantalib/generators.hpp"
#include "quantalib/predicates.hpp"

using namespace quantalib;

namespace {

QuantaloidPtr share(FiniteQuantaloid q) { return std::make_shared<const FiniteQuantaloid>(std::move(q)); }

QuantaloidPtr locale3() { return share(locale_quantale(FiniteSupLattice::chain({"0", "m", "1"}))); }

CatPtr empty_category(const QuantaloidPtr& q) { return make_category(Matrix(q, {}, {})); }

CatPtr one_object_category(const QuantaloidPtr& q, const std::vector<std::vector<std::string>>& h)
{
    TypedSet t;
    for (std::size_t i = 0; i < h.size(); ++i) {
        t.names.push_back("a" + std::to_string(i));
        t.types.push_back(0);
    }
    Matrix m(q, t, t);
    for (std::size_t y = 0; y < h.size(); ++y)
        for (std::size_t x = 0; x < h.size(); ++x) m.set(y, x, q->hom(0, 0).index_of(h[y][x]));
    return make_category(m);
}

// All families by direct product, filtered with an independent action check.
std::size_t presheaf_count_by_product(const QCategory& a, ObjId at)
{
    const auto& q = *a.base();
    std::size_t total = 1;
    for (std::size_t i = 0; i < a.size(); ++i) total *= q.hom(at, a.type(i)).size();
    std::size_t count = 0;
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<Elem> v(a.size());
        std::size_t c = code;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const std::size_t s = q.hom(at, a.type(i)).size();
            v[i] = static_cast<Elem>(c % s);
            c /= s;
        }
        bool ok = true;
        for (std::size_t x = 0; x < a.size(); ++x)
            for (std::size_t y = 0; y < a.size(); ++y) {
                Elem lhs = q.comp(at, a.type(x), a.type(y), a(y, x), v[x]);
                ok = ok && q.hom(at, a.type(y)).join(lhs, v[y]) == v[y];
            }
        count += ok;
    }
    return count;
}

std::vector<CatPtr> corpus()
{
    auto l = locale3();
    auto b = share(boolean_quantale());
    auto z = share(groupoid_quantale(FiniteGroupoid::cyclic(2)));
    TypedSet two{{"p", "q"}, {0, 0}};
    return {point_category(l, 0),
            one_object_category(l, {{"1", "m"}, {"m", "1"}}),
            one_object_category(l, {{"1", "0"}, {"m", "1"}}),
            discrete_category(b, two),
            one_object_category(b, {{"1", "1"}, {"1", "1"}}),
            point_category(z, 0),
            one_object_category(z, {{"{0}", "{1}"}, {"{1}", "{0}"}}),
            empty_category(l)};
}

} // namespace

TEST(Presheaves, EmptyCategoryHasOne)
{
    auto a = empty_category(locale3());
    auto ps = presheaves(*a, 0);
    ASSERT_EQ(ps.size(), 1u);
    EXPECT_TRUE(ps[0].v.empty());
}

TEST(Presheaves, PointCategoryGivesAllElements)
{
    for (const auto& q : {locale3(), share(relation_quantale(2)), share(all_boolean_quantaloid())}) {
        for (ObjId x = 0; x < q->num_objects(); ++x) {
            auto a = point_category(q, x);
            EXPECT_EQ(presheaves(*a, x).size(), q->hom(x, x).size());
        }
    }
}

TEST(Presheaves, MatchProductScan)
{
    for (const auto& a : corpus())
        for (ObjId x = 0; x < a->base()->num_objects(); ++x) {
            auto ps = presheaves(*a, x);
            EXPECT_EQ(ps.size(), presheaf_count_by_product(*a, x));
            for (const auto& p : ps) EXPECT_TRUE(is_presheaf(*a, p));
            EXPECT_TRUE(std::is_sorted(ps.begin(), ps.end()));
        }
}

TEST(Presheaves, CapIsResourceError)
{
    auto a = one_object_category(share(relation_quantale(2)), {{"{(1,1),(2,2)}", "{}"}, {"{}", "{(1,1),(2,2)}"}});
    EXPECT_THROW(presheaves(*a, 0, 10), ResourceError);
}

TEST(Presheaves, YonedaLemma)
{
    for (const auto& a : corpus())
        for (std::size_t x = 0; x < a->size(); ++x) {
            auto y = yoneda(*a, x);
            EXPECT_TRUE(is_presheaf(*a, y));
            for (const auto& p : all_presheaves(*a)) EXPECT_EQ(presheaf_hom(*a, y, p), p.v[x]);
            for (std::size_t z = 0; z < a->size(); ++z) EXPECT_EQ(presheaf_hom(*a, yoneda(*a, z), y), (*a)(z, x));
        }
}

TEST(Presheaves, HomIsAtLeastIdentity)
{
    for (const auto& a : corpus())
        for (const auto& p : all_presheaves(*a)) {
            const auto& q = *a->base();
            EXPECT_TRUE(q.hom(p.at, p.at).leq(q.id(p.at), presheaf_hom(*a, p, p)));
        }
}

TEST(Completion, PointOverLocaleKeepsOnlyTop)
{
    auto l = locale3();
    auto c = cauchy_completion(point_category(l, 0));
    ASSERT_EQ(c.presheaves.size(), 1u);
    EXPECT_EQ(l->hom(0, 0).name(c.presheaves[0].v[0]), "1");
    EXPECT_TRUE(is_cauchy_complete(point_category(l, 0)));
}

TEST(Completion, DiscreteBooleanAddsNothing)
{
    auto b = share(boolean_quantale());
    auto a = discrete_category(b, TypedSet{{"p", "q", "r"}, {0, 0, 0}});
    auto c = cauchy_completion(a);
    EXPECT_EQ(iso_class_count(*c.cat), 3u);
    EXPECT_TRUE(is_cauchy_complete(a));
}

TEST(Completion, EmptyIsEmpty)
{
    auto a = empty_category(locale3());
    EXPECT_EQ(cauchy_completion(a).cat->size(), 0u);
    EXPECT_EQ(symmetric_completion(a).cat->size(), 0u);
    EXPECT_TRUE(is_cauchy_complete(a));
}

TEST(Completion, CompletionIsCompleteAndIdempotent)
{
    for (const auto& a : corpus()) {
        auto c = cauchy_completion(a);
        EXPECT_TRUE(is_cauchy_complete(c.cat));
        EXPECT_EQ(iso_class_count(*cauchy_completion(c.cat).cat), iso_class_count(*c.cat));
    }
}

TEST(Completion, YonedaIsMorita)
{
    for (const auto& a : corpus()) EXPECT_TRUE(yoneda_is_morita(a));
}

TEST(Completion, SymmetricEqualsCauchyOnBilateralBases)
{
    for (const auto& a : corpus()) {
        if (!is_symmetric(*a) || !cauchy_bilateral(*a->base()).holds) continue;
        auto sc = symmetric_completion(a);
        auto cc = cauchy_completion(a);
        EXPECT_EQ(sc.presheaves, cc.presheaves);
        EXPECT_TRUE(is_symmetrically_complete(symmetrise(*cc.cat)));
    }
}

TEST(Completion, LeftAdjointsBetweenCompleteCategoriesAreRepresentable)
{
    auto cs = corpus();
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            if (cs[i]->base() != cs[j]->base()) continue;
            auto a = cauchy_completion(cs[i]).cat, b = cauchy_completion(cs[j]).cat;
            for_each_distributor(a, b, 1'000'000, "distributors", [&](const Distributor& phi) {
                if (is_left_adjoint(phi)) {
                    auto f = representing_functor(phi);
                    EXPECT_TRUE(f);
                    if (f) {
                        EXPECT_EQ(graph_of(*f).m, phi.m);
                    }
                }
                return true;
            });
        }
}

TEST(Completion, SymmetricCompletionNeedsSymmetry)
{
    auto a = one_object_category(locale3(), {{"1", "0"}, {"m", "1"}});
    EXPECT_THROW(symmetric_completion(a), CapabilityError);
}

TEST(Morita, CompletionIsMoritaEquivalent)
{
    for (const auto& a : corpus()) {
        auto c = cauchy_completion(a);
        EXPECT_TRUE(morita_equivalence(a, c.cat, 1'000'000));
    }
    auto b = share(boolean_quantale());
    auto one = discrete_category(b, TypedSet{{"p"}, {0}});
    auto two = discrete_category(b, TypedSet{{"p", "q"}, {0, 0}});
    EXPECT_FALSE(morita_equivalence(one, two, 1'000'000));
    EXPECT_THROW(morita_equivalence(one, two, 1), ResourceError);
}
