#include <gtest/gtest.h>

#include <random>

#include "quantalib/generators.hpp"
#include "quantalib/qcat.hpp"
#include "support/oracles.hpp"

using namespace quantalib;

namespace {

QuantaloidPtr boolean() { return std::make_shared<const FiniteQuantaloid>(boolean_quantale()); }

TypedSet points(std::size_t n, const std::string& prefix = "p")
{
    TypedSet t;
    for (std::size_t i = 0; i < n; ++i) {
        t.names.push_back(prefix + std::to_string(i));
        t.types.push_back(0);
    }
    return t;
}

Matrix from_relation(const QuantaloidPtr& b, const TypedSet& dom, const TypedSet& cod, const oracle::Relation& r)
{
    Matrix m(b, dom, cod);
    const Elem one = b->hom(0, 0).index_of("1");
    for (auto [a, c] : r) m.set(static_cast<std::size_t>(c), static_cast<std::size_t>(a), one);
    return m;
}

oracle::Relation to_relation(const Matrix& m)
{
    oracle::Relation r;
    for (std::size_t c = 0; c < m.cod().size(); ++c)
        for (std::size_t a = 0; a < m.dom().size(); ++a)
            if (m.hom(c, a).name(m.at(c, a)) == "1") r.insert({static_cast<int>(a), static_cast<int>(c)});
    return r;
}

oracle::Relation random_relation(std::mt19937& rng, int n, int m)
{
    oracle::Relation r;
    for (int a = 0; a < n; ++a)
        for (int c = 0; c < m; ++c)
            if (rng() & 1U) r.insert({a, c});
    return r;
}

// Preorder on n points as a Boolean category.
CatPtr preorder(const QuantaloidPtr& b, std::size_t n, const std::function<bool(std::size_t, std::size_t)>& le)
{
    TypedSet t = points(n, "x");
    Matrix m(b, t, t);
    const Elem one = b->hom(0, 0).index_of("1");
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = 0; x < n; ++x)
            if (le(x, y)) m.set(y, x, one); // A(y, x) = 1 iff x ≤ y
    return make_category(m);
}

CatPtr locale_category(const QuantaloidPtr& q, const std::vector<std::vector<std::string>>& h)
{
    TypedSet t = points(h.size(), "a");
    Matrix m(q, t, t);
    for (std::size_t y = 0; y < h.size(); ++y)
        for (std::size_t x = 0; x < h.size(); ++x) m.set(y, x, q->hom(0, 0).index_of(h[y][x]));
    return make_category(m);
}

} // namespace

TEST(Matrix, BooleanCompositionIsRelational)
{
    auto b = boolean();
    std::mt19937 rng(7);
    for (int n = 0; n <= 3; ++n)
        for (int k = 0; k <= 3; ++k)
            for (int m = 0; m <= 3; ++m)
                for (int rep = 0; rep < 8; ++rep) {
                    auto r = random_relation(rng, n, k), s = random_relation(rng, k, m);
                    auto tn = points(n), tk = points(k), tm = points(m);
                    auto prod = compose(from_relation(b, tk, tm, s), from_relation(b, tn, tk, r));
                    EXPECT_EQ(to_relation(prod), oracle::compose(s, r));
                    EXPECT_EQ(to_relation(involute(from_relation(b, tn, tk, r))), oracle::transpose(r));
                }
}

TEST(Matrix, IdentityIsUnit)
{
    auto b = boolean();
    std::mt19937 rng(3);
    auto t2 = points(2), t3 = points(3);
    for (int rep = 0; rep < 16; ++rep) {
        auto m = from_relation(b, t2, t3, random_relation(rng, 2, 3));
        EXPECT_EQ(compose(identity_matrix(b, t3), m), m);
        EXPECT_EQ(compose(m, identity_matrix(b, t2)), m);
    }
}

TEST(Matrix, DirectSumEquations)
{
    auto q = std::make_shared<const FiniteQuantaloid>(all_boolean_quantaloid());
    std::vector<TypedSet> parts{typed_singleton("u", 0), typed_singleton("v", 1)};
    auto d = direct_sum(q, parts);
    EXPECT_TRUE(verify_direct_sum(q, d, parts));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            auto pij = compose(d.projections[i], d.injections[j]);
            if (i == j) {
                EXPECT_EQ(pij, identity_matrix(q, parts[i]));
            } else {
                EXPECT_EQ(pij, zero_matrix(q, parts[j], parts[i]));
            }
        }
}

TEST(Matrix, MonadsOfPreorders)
{
    auto b = boolean();
    auto chain = preorder(b, 2, [](std::size_t x, std::size_t y) { return x <= y; });
    EXPECT_TRUE(is_monad(chain->hom()));
    EXPECT_TRUE(is_antisymmetric_monad(chain->hom()));
    EXPECT_FALSE(is_symmetric_monad(chain->hom()));
    auto full = preorder(b, 2, [](std::size_t, std::size_t) { return true; });
    EXPECT_TRUE(is_symmetric_monad(full->hom()));
    EXPECT_FALSE(is_antisymmetric_monad(full->hom()));
    auto delta = identity_matrix(b, points(3));
    EXPECT_TRUE(is_monad(delta));
    EXPECT_TRUE(is_symmetric_monad(delta));
    EXPECT_TRUE(is_antisymmetric_monad(delta));
    // a non-transitive relation is no monad
    Matrix bad = identity_matrix(b, points(3));
    const Elem one = b->hom(0, 0).index_of("1");
    bad.set(1, 0, one);
    bad.set(2, 1, one);
    EXPECT_FALSE(is_monad(bad));
    EXPECT_THROW(make_category(bad), InputError);
}

TEST(QCategory, SymmetriseAndSymmetry)
{
    auto b = boolean();
    auto chain = preorder(b, 2, [](std::size_t x, std::size_t y) { return x <= y; });
    EXPECT_FALSE(is_symmetric(*chain));
    auto s = symmetrise(*chain);
    EXPECT_TRUE(is_symmetric(*s));
    EXPECT_EQ(s->hom(), identity_matrix(b, chain->objects()));
    auto d = discrete_category(b, points(2));
    EXPECT_TRUE(is_symmetric(*d));
    EXPECT_EQ(*symmetrise(*d), *d);
    // preorder 0 ≤ 1 ≤ 0, 2 alone: symmetrisation keeps the equivalence
    auto pre = preorder(b, 3, [](std::size_t x, std::size_t y) { return x == y || (x < 2 && y < 2) || x == 2; });
    auto ps = symmetrise(*pre);
    EXPECT_TRUE(leq(ps->hom(), pre->hom()));
    EXPECT_EQ(*symmetrise(*ps), *ps);
    for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t y = 0; y < 3; ++y) {
            bool both = b->hom(0, 0).name((*pre)(y, x)) == "1" && b->hom(0, 0).name((*pre)(x, y)) == "1";
            EXPECT_EQ(b->hom(0, 0).name((*ps)(y, x)) == "1", both);
        }
}

TEST(Distributor, CompositionLaws)
{
    auto q = std::make_shared<const FiniteQuantaloid>(locale_quantale(FiniteSupLattice::chain({"0", "m", "1"})));
    auto a = locale_category(q, {{"1", "m"}, {"m", "1"}});
    auto id = identity_distributor(a);
    EXPECT_EQ(compose(id, id).m, id.m);
    Matrix mm(q, a->objects(), a->objects());
    for (std::size_t y = 0; y < 2; ++y)
        for (std::size_t x = 0; x < 2; ++x) mm.set(y, x, q->hom(0, 0).index_of("m"));
    auto phi = make_distributor(a, a, mm);
    EXPECT_EQ(compose(phi, id).m, phi.m);
    EXPECT_EQ(compose(id, phi).m, phi.m);
    EXPECT_EQ(compose(compose(phi, phi), phi).m, compose(phi, compose(phi, phi)).m);
    EXPECT_TRUE(satisfies_actions(compose(phi, phi)));
}

TEST(Distributor, InvolutionLaws)
{
    auto b = boolean();
    auto a = discrete_category(b, points(2));
    auto c = discrete_category(b, points(3));
    std::mt19937 rng(11);
    for (int rep = 0; rep < 8; ++rep) {
        auto phi = make_distributor(a, c, from_relation(b, a->objects(), c->objects(), random_relation(rng, 2, 3)));
        auto psi = make_distributor(c, a, from_relation(b, c->objects(), a->objects(), random_relation(rng, 3, 2)));
        EXPECT_EQ(involute(involute(phi)).m, phi.m);
        EXPECT_EQ(involute(compose(psi, phi)).m, compose(involute(phi), involute(psi)).m);
    }
    auto chain = preorder(b, 2, [](std::size_t x, std::size_t y) { return x <= y; });
    EXPECT_THROW(involute(identity_distributor(chain)), CapabilityError);
}

TEST(Distributor, RightAdjoints)
{
    auto b = boolean();
    auto a = discrete_category(b, points(2));
    auto id = identity_distributor(a);
    auto r = right_adjoint(id);
    ASSERT_TRUE(r);
    EXPECT_EQ(r->m, id.m);
    auto empty = make_distributor(a, a, zero_matrix(b, a->objects(), a->objects()));
    EXPECT_FALSE(right_adjoint(empty));
    // functions are left adjoints with transpose as right adjoint
    auto c = discrete_category(b, points(3));
    auto f = make_functor(a, c, {2, 0});
    auto g = graph_of(f);
    auto ra = right_adjoint(g);
    ASSERT_TRUE(ra);
    EXPECT_EQ(ra->m, cograph_of(f).m);
    EXPECT_TRUE(is_symmetric_left_adjoint(g));
}

TEST(Functor, GraphCographAdjunction)
{
    auto q = std::make_shared<const FiniteQuantaloid>(locale_quantale(FiniteSupLattice::chain({"0", "m", "1"})));
    auto a = locale_category(q, {{"1", "m"}, {"m", "1"}});
    auto pt = point_category(q, 0);
    for (std::size_t t = 0; t < 2; ++t) {
        auto f = make_functor(pt, a, {t});
        auto g = graph_of(f), cg = cograph_of(f);
        EXPECT_TRUE(leq(identity_distributor(pt), compose(cg, g)));
        EXPECT_TRUE(leq(compose(g, cg), identity_distributor(a)));
        EXPECT_TRUE(satisfies_actions(g));
        EXPECT_TRUE(satisfies_actions(cg));
        // constant functor into a: column of homs
        for (std::size_t y = 0; y < 2; ++y) EXPECT_EQ(g(y, 0), (*a)(y, t));
        EXPECT_EQ(involute(g).m, cg.m);
    }
    auto idf = identity_functor(a);
    EXPECT_EQ(graph_of(idf).m, a->hom());
    EXPECT_EQ(cograph_of(idf).m, a->hom());
}

TEST(Functor, GraphOfFunctionIsItsRelation)
{
    auto b = boolean();
    auto a = discrete_category(b, points(3));
    auto c = discrete_category(b, points(2));
    auto f = make_functor(a, c, {1, 0, 1});
    EXPECT_EQ(to_relation(graph_of(f).m), (oracle::Relation{{0, 1}, {1, 0}, {2, 1}}));
}

TEST(Functor, Representability)
{
    auto b = boolean();
    auto a = discrete_category(b, points(2));
    auto c = discrete_category(b, points(3));
    auto f = make_functor(a, c, {2, 0});
    auto rep = representing_functor(graph_of(f));
    ASSERT_TRUE(rep);
    EXPECT_EQ(graph_of(*rep).m, graph_of(f).m);
    auto idrep = representing_functor(identity_distributor(c));
    ASSERT_TRUE(idrep);
    EXPECT_EQ(idrep->map, identity_functor(c).map);
    // on the locale point category, the presheaf m is a distributor but not representable
    auto q = std::make_shared<const FiniteQuantaloid>(locale_quantale(FiniteSupLattice::chain({"0", "m", "1"})));
    auto pt = point_category(q, 0);
    Matrix mm(q, pt->objects(), pt->objects());
    mm.set(0, 0, q->hom(0, 0).index_of("m"));
    EXPECT_FALSE(representing_functor(make_distributor(pt, pt, mm)));
}

TEST(Functor, LocalOrder)
{
    auto q = std::make_shared<const FiniteQuantaloid>(locale_quantale(FiniteSupLattice::chain({"0", "m", "1"})));
    auto a = locale_category(q, {{"1", "1"}, {"m", "1"}});
    auto pt = point_category(q, 0);
    auto f0 = make_functor(pt, a, {0}), f1 = make_functor(pt, a, {1});
    EXPECT_TRUE(functor_leq(f0, f1));
    EXPECT_FALSE(functor_leq(f1, f0));
}

TEST(MapTabulation, RelationSpan)
{
    auto b = boolean();
    auto a = discrete_category(b, points(2));
    auto c = discrete_category(b, points(3));
    oracle::Relation rel{{0, 0}, {0, 2}, {1, 1}};
    auto phi = make_distributor(a, c, from_relation(b, a->objects(), c->objects(), rel));
    auto t = map_tabulation(phi);
    EXPECT_EQ(t.r->size(), rel.size());
    EXPECT_EQ(t.composite.m, phi.m);
    auto empty = make_distributor(a, c, zero_matrix(b, a->objects(), c->objects()));
    auto te = map_tabulation(empty);
    EXPECT_EQ(te.r->size(), 0u);
    EXPECT_EQ(te.composite.m, empty.m);
    auto ti = map_tabulation(identity_distributor(a));
    EXPECT_EQ(ti.r->size(), 2u);
    EXPECT_EQ(ti.composite.m, a->hom());
}

TEST(QCategory, ProductAndSubcategory)
{
    auto b = boolean();
    auto chain = preorder(b, 2, [](std::size_t x, std::size_t y) { return x <= y; });
    auto p = product(*chain, *chain);
    EXPECT_EQ(p->size(), 4u);
    EXPECT_TRUE(is_monad(p->hom()));
    auto sub = full_subcategory(*p, {0, 3});
    EXPECT_EQ(sub->size(), 2u);
    // (x0,x0) and (x1,x1) reproduce the chain
    for (std::size_t y = 0; y < 2; ++y)
        for (std::size_t x = 0; x < 2; ++x) EXPECT_EQ((*sub)(y, x), (*chain)(y, x));
}
