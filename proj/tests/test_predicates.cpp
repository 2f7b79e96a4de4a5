#include <gtest/gtest.h>

#include "quantalib/generators.hpp"
#include "quantalib/grothendieck.hpp"
#include "quantalib/predicates.hpp"
#include "quantalib/sites.hpp"
#include "support/oracles.hpp"

using namespace quantalib;

namespace {

FiniteQuantaloid locale_chain(std::vector<std::string> names) { return locale_quantale(FiniteSupLattice::chain(names)); }

FiniteQuantaloid z2() { return groupoid_quantale(FiniteGroupoid::cyclic(2)); }

FiniteQuantaloid crible_chain2()
{
    FiniteCategory c({"a", "b"}, {{"u", "a", "b"}}, {});
    Topology j = trivial_topology(c);
    return closed_crible_quantaloid({c, j}).q;
}

std::vector<FiniteQuantaloid> involutive_corpus()
{
    return {boolean_quantale(),
            locale_chain({"0", "m", "1"}),
            locale_quantale(FiniteSupLattice::powerset({"a", "b"})),
            relation_quantale(2),
            z2(),
            crible_chain2(),
            lukasiewicz_chain(),
            m3_quantale()};
}

// Cauchy-bilaterality by scanning every family of pairs at every object.
bool bilateral_by_subsets(const FiniteQuantaloid& q)
{
    Ops o{q};
    for (ObjId x = 0; x < q.num_objects(); ++x) {
        struct P {
            ObjId xi;
            Elem f, g;
        };
        std::vector<P> ps;
        for (ObjId xi = 0; xi < q.num_objects(); ++xi)
            for (Elem f = 0; f < q.hom(x, xi).size(); ++f)
                for (Elem g = 0; g < q.hom(xi, x).size(); ++g) ps.push_back({xi, f, g});
        if (ps.size() > 20) ADD_FAILURE() << "too many pairs for subset scan";
        const auto& h = q.hom(x, x);
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << ps.size()); ++mask) {
            bool premises = true;
            Elem sup = h.bottom(), concl = h.bottom();
            for (std::size_t j = 0; j < ps.size() && premises; ++j) {
                if (!(mask >> j & 1U)) continue;
                const P& pj = ps[j];
                Elem gfj = o.c(x, pj.xi, x, pj.g, pj.f);
                sup = h.join(sup, gfj);
                concl = h.join(concl, o.c(x, pj.xi, x, o.meet(pj.xi, x, pj.g, o.inv(x, pj.xi, pj.f)),
                                          o.meet(x, pj.xi, o.inv(pj.xi, x, pj.g), pj.f)));
                for (std::size_t k = 0; k < ps.size() && premises; ++k) {
                    if (!(mask >> k & 1U)) continue;
                    const P& pk = ps[k];
                    premises = o.leq(x, pk.xi, o.c(x, x, pk.xi, pk.f, gfj), pk.f) &&
                               o.leq(pk.xi, x, o.c(pk.xi, x, x, gfj, pk.g), pk.g);
                }
            }
            if (premises && h.leq(q.id(x), sup) && !h.leq(q.id(x), concl)) return false;
        }
    }
    return true;
}

} // namespace

TEST(Predicates, LocaleChain)
{
    auto q = locale_chain({"0", "m", "1"});
    EXPECT_TRUE(modular(q).holds);
    EXPECT_TRUE(locally_localic(q).holds);
    auto wt = weakly_tabular(q);
    EXPECT_FALSE(wt.holds);
    ASSERT_TRUE(wt.counterexample);
    EXPECT_EQ(q.hom(0, 0).name(wt.counterexample->morphisms[0].elt), "m");
    EXPECT_TRUE(weakly_tabular(boolean_quantale()).holds);
}

TEST(Predicates, RelationQuantale)
{
    auto q = relation_quantale(2);
    EXPECT_TRUE(modular(q).holds);
    EXPECT_TRUE(weakly_semi_simple(q).holds);
    EXPECT_TRUE(map_discrete(q).holds);
}

TEST(Predicates, RelationModularLawMatchesDedekindOracle)
{
    auto q = relation_quantale(2);
    const auto& l = q.hom(0, 0);
    auto rel = [&](Elem e) {
        oracle::Relation r;
        const auto& s = l.name(e);
        for (std::size_t i = 0; i < s.size(); ++i)
            if (s[i] == '(') r.insert({s[i + 1] - '0', s[i + 3] - '0'});
        return r;
    };
    auto meet = [](const oracle::Relation& a, const oracle::Relation& b) {
        oracle::Relation r;
        for (const auto& p : a)
            if (b.count(p)) r.insert(p);
        return r;
    };
    bool dedekind = true;
    for (Elem f = 0; f < l.size(); ++f)
        for (Elem g = 0; g < l.size(); ++g)
            for (Elem h = 0; h < l.size(); ++h) {
                auto lhs = meet(oracle::compose(rel(g), rel(f)), rel(h));
                auto rhs = oracle::compose(rel(g), meet(rel(f), oracle::compose(oracle::transpose(rel(g)), rel(h))));
                for (const auto& p : lhs) dedekind = dedekind && rhs.count(p);
            }
    EXPECT_TRUE(dedekind);
    EXPECT_EQ(modular(q).holds, dedekind);
}

TEST(Predicates, GroupoidQuantale)
{
    auto q = z2();
    EXPECT_EQ(q.hom(0, 0).size(), 4u);
    EXPECT_EQ(q.hom(0, 0).name(q.comp(0, 0, 0, q.hom(0, 0).index_of("{1}"), q.hom(0, 0).index_of("{1}"))), "{0}");
    EXPECT_TRUE(stably_gelfand(q).holds);
    EXPECT_TRUE(modular(q).holds);
    // the top {0,1} is a join of simple composites, but no single one
    EXPECT_FALSE(semi_simple(q).holds);
    EXPECT_TRUE(weakly_semi_simple(q).holds);
}

TEST(Predicates, TruncatedAdditionIsNotModular)
{
    auto r = modular(lukasiewicz_chain());
    EXPECT_FALSE(r.holds);
    ASSERT_TRUE(r.counterexample);
    const auto& m = r.counterexample->morphisms;
    ASSERT_EQ(m.size(), 3u);
    EXPECT_FALSE(modular_instance(lukasiewicz_chain(), 0, 0, 0, m[0].elt, m[1].elt, m[2].elt));
}

TEST(Predicates, SimpleMorphisms)
{
    auto q = locale_chain({"0", "m", "1"});
    for (Elem e = 0; e < 3; ++e) EXPECT_TRUE(is_simple_morphism(q, {0, 0, e}));
    auto z = z2();
    EXPECT_TRUE(is_simple_morphism(z, z.morphism("*", "*", "{1}")));
    EXPECT_FALSE(is_simple_morphism(z, z.morphism("*", "*", "{0,1}")));
    EXPECT_THROW(is_simple_morphism(q.with_involution(std::nullopt), {0, 0, 0}), CapabilityError);
}

TEST(Predicates, InvolutionRequired)
{
    auto q = boolean_quantale().with_involution(std::nullopt);
    EXPECT_THROW(modular(q), CapabilityError);
    EXPECT_THROW(tabular(q), CapabilityError);
    EXPECT_THROW(cauchy_bilateral(q), CapabilityError);
    EXPECT_NO_THROW(weakly_modular(q));
    EXPECT_NO_THROW(map_tabular(q));
}

TEST(Predicates, CounterexamplesReplay)
{
    // each reported modular-law witness fails the instance check it names
    for (const auto& q : involutive_corpus()) {
        auto r = modular(q);
        if (r.holds) continue;
        const auto& m = r.counterexample->morphisms;
        EXPECT_FALSE(modular_instance(q, m[0].src, m[0].dst, m[1].dst, m[0].elt, m[1].elt, m[2].elt));
    }
}

TEST(Predicates, ModularConsequences)
{
    for (const auto& q : involutive_corpus()) {
        if (!modular(q).holds) continue;
        EXPECT_TRUE(modular_regular(q).holds);
        EXPECT_TRUE(left_adjoints_symmetric(q).holds);
        EXPECT_TRUE(map_discrete(q).holds);
    }
}

TEST(Predicates, CauchyBilateralMatchesSubsetScan)
{
    for (const auto& q : {boolean_quantale(), locale_chain({"0", "m", "1"}), z2(), lukasiewicz_chain(), m3_quantale(),
                          crible_chain2()}) {
        bool small = true;
        for (ObjId x = 0; x < q.num_objects(); ++x) {
            std::size_t pairs = 0;
            for (ObjId y = 0; y < q.num_objects(); ++y) pairs += q.hom(x, y).size() * q.hom(y, x).size();
            small = small && pairs <= 20;
        }
        if (!small) continue;
        EXPECT_EQ(cauchy_bilateral(q).holds, bilateral_by_subsets(q));
    }
}

TEST(Predicates, CauchyBilateralCap)
{
    EXPECT_THROW(cauchy_bilateral(relation_quantale(2), 1), ResourceError);
}

TEST(Predicates, LocallyLocalicModularAreBilateral)
{
    for (const auto& q : involutive_corpus())
        if (locally_localic(q).holds && modular(q).holds) {
            EXPECT_TRUE(cauchy_bilateral(q).holds);
        }
}

TEST(Predicates, EmptyQuantaloidIsVacuous)
{
    auto q = QuantaloidBuilder(std::vector<std::string>{}).build();
    for (const auto& r : closed_crible_axioms(q)) EXPECT_TRUE(r.holds);
}

TEST(Grothendieck, Examples)
{
    EXPECT_TRUE(is_grothendieck(locale_chain({"0", "m", "1"})));
    EXPECT_TRUE(is_grothendieck(z2()));
    EXPECT_FALSE(is_grothendieck(lukasiewicz_chain()));
    EXPECT_TRUE(grothendieck_via_top(locale_chain({"0", "m", "1"})).holds);
    EXPECT_TRUE(grothendieck_via_top(z2()).holds);
    auto m3 = grothendieck_via_top(m3_quantale());
    EXPECT_FALSE(m3.holds);
    EXPECT_EQ(m3.counterexample->check, "distributivity");
    EXPECT_THROW(grothendieck_via_top(all_boolean_quantaloid()), CapabilityError);
}

TEST(Grothendieck, ReportAgreesWithSsiCertification)
{
    for (const auto& q : {locale_chain({"0", "m", "1"}), z2(), boolean_quantale(), lukasiewicz_chain()}) {
        auto r = grothendieck_report(q);
        EXPECT_EQ(r.holds, r.ssi_weakly_tabular.holds);
        EXPECT_EQ(r.holds, r.ssi_certified());
    }
}

TEST(Grothendieck, TopCriterionAgreesOnOneObjectCorpus)
{
    for (const auto& q : involutive_corpus())
        if (q.num_objects() == 1) {
            EXPECT_EQ(is_grothendieck(q), grothendieck_via_top(q).holds);
        }
}

TEST(DerivedInvolution, RelationLikeIsTranspose)
{
    auto q = relation_quantale(2);
    if (is_closed_crible(q)) {
        auto d = derived_involution(q);
        ASSERT_TRUE(d);
        EXPECT_EQ(*d, q.involution_table());
    }
    auto b = all_boolean_quantaloid();
    auto d = derived_involution(b);
    ASSERT_TRUE(d);
    EXPECT_EQ(*d, b.involution_table());
}
