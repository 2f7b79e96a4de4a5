#include <gtest/gtest.h>

#include "quantalib/generators.hpp"
#include "quantalib/iso.hpp"
#include "quantalib/sites.hpp"
#include "quantalib/split.hpp"

using namespace quantalib;

namespace {

FiniteCategory terminal() { return FiniteCategory({"X"}, {}, {}); }

FiniteCategory chain2() { return FiniteCategory({"a", "b"}, {{"u", "a", "b"}}, {}); }

Site trivial_site(FiniteCategory c)
{
    Topology j = trivial_topology(c);
    return {std::move(c), std::move(j)};
}

FiniteSupLattice chain3() { return FiniteSupLattice::chain({"0", "m", "1"}); }

} // namespace

TEST(Category, IdentitiesAndComposition)
{
    auto c = chain2();
    EXPECT_EQ(c.num_arrows(), 3u);
    Arrow u = c.arrow("u");
    EXPECT_EQ(c.comp(c.identity(c.object("b")), u), u);
    EXPECT_EQ(c.comp(u, c.identity(c.object("a"))), u);
    EXPECT_EQ(c.comp(u, u), kNoArrow);
}

TEST(Category, RejectsMalformedInput)
{
    EXPECT_THROW(FiniteCategory({"a"}, {{"f", "a", "a"}}, {}), InputError); // f∘f missing
    EXPECT_THROW(FiniteCategory({"a", "a"}, {}, {}), InputError);
    EXPECT_THROW(FiniteCategory({"a"}, {{"f", "a", "zz"}}, {}), InputError);
    // f∘f = f is fine; f∘f = 1 makes an involution, also fine
    EXPECT_NO_THROW(FiniteCategory({"a"}, {{"f", "a", "a"}}, {{"f", "f", "f"}}));
    EXPECT_NO_THROW(FiniteCategory({"a"}, {{"f", "a", "a"}}, {{"f", "f", "1_a"}}));
}

TEST(Category, SievesOnChain)
{
    auto c = FiniteCategory::poset({"0", "1", "2"}, [](std::size_t a, std::size_t b) { return a <= b; });
    // sieves on the top of a 3-chain are the down-sets of {0,1,2}: 4 of them
    EXPECT_EQ(all_sieves(c, c.object("2")).size(), 4u);
    EXPECT_EQ(all_sieves(c, c.object("0")).size(), 2u);
}

TEST(Topology, TrivialTopologyIsValid)
{
    auto c = chain2();
    auto j = trivial_topology(c);
    EXPECT_FALSE(topology_violation(c, j));
    for (std::size_t x = 0; x < c.num_objects(); ++x) EXPECT_EQ(j.covering[x].size(), 1u);
}

TEST(Topology, CoversAreValidatedNotCompleted)
{
    auto c = chain2();
    // pulling <u> back along u gives the maximal sieve on a
    EXPECT_NO_THROW(topology_from_covers(c, {{"b", {{"u"}}}}));
    // the empty family covering b pulls back to the empty sieve on a, which is not listed
    EXPECT_THROW(topology_from_covers(c, {{"b", {{}}}}), InputError);
    // with both empty sieves covering, transitivity still demands <u> on b
    EXPECT_THROW(topology_from_covers(c, {{"b", {{}}}, {"a", {{}}}}), InputError);
    EXPECT_NO_THROW(topology_from_covers(c, {{"b", {{}, {"u"}}}, {"a", {{}}}}));
}

TEST(Topology, CanonicalSiteOfChain)
{
    auto s = canonical_site_of_locale(chain3());
    const auto& c = s.category;
    // 0 is covered by the empty family; m and 1 only by their maximal sieves
    EXPECT_EQ(s.topology.covering[c.object("0")].size(), 2u);
    EXPECT_EQ(s.topology.covering[c.object("m")].size(), 1u);
    EXPECT_EQ(s.topology.covering[c.object("1")].size(), 1u);
    auto p = canonical_site_of_locale(FiniteSupLattice::powerset({"a", "b"}));
    const auto& pc = p.category;
    Sieve ab(pc.num_arrows());
    ab.set(pc.arrow("{a}<={a,b}"));
    ab.set(pc.arrow("{b}<={a,b}"));
    EXPECT_TRUE(p.topology.covers(pc.object("{a,b}"), sieve_closure(pc, ab)));
    EXPECT_THROW(canonical_site_of_locale(m3_quantale().hom(0, 0)), InputError);
}

TEST(Crible, CloseIsClosureOperator)
{
    for (const auto& site : {trivial_site(chain2()), canonical_site_of_locale(chain3())}) {
        const auto& c = site.category;
        for (std::size_t x = 0; x < c.num_objects(); ++x)
            for (std::size_t y = 0; y < c.num_objects(); ++y) {
                SpanSpace sp(c, site.topology, x, y);
                ASSERT_LE(sp.size(), 12u);
                const std::uint64_t n = std::uint64_t{1} << sp.size();
                std::vector<DynBitset> all;
                for (std::uint64_t m = 0; m < n; ++m) {
                    DynBitset r = sp.empty();
                    for (std::size_t i = 0; i < sp.size(); ++i)
                        if (m >> i & 1U) r.set(i);
                    all.push_back(r);
                }
                for (const auto& r : all) {
                    auto cr = sp.close(r);
                    EXPECT_TRUE(r.is_subset_of(cr));
                    EXPECT_EQ(sp.close(cr), cr);
                }
                for (const auto& r : all)
                    for (const auto& s : all)
                        if (r.is_subset_of(s)) {
                            EXPECT_TRUE(sp.close(r).is_subset_of(sp.close(s)));
                        }
            }
    }
}

TEST(Crible, TrivialTopologyCloseIsPrecompositionClosure)
{
    auto site = trivial_site(chain2());
    const auto& c = site.category;
    SpanSpace sp(c, site.topology, 1, 1);
    for (std::size_t i = 0; i < sp.size(); ++i) EXPECT_EQ(sp.close(sp.principal(i)), sp.principal(i));
}

TEST(Crible, LocaleJoinByClosure)
{
    // in the canonical site of {a,b}-powerset, the spans through {a} and {b} close to the one through {a,b}
    auto l = FiniteSupLattice::powerset({"a", "b"});
    auto site = canonical_site_of_locale(l);
    const auto& c = site.category;
    const std::size_t top = c.object("{a,b}");
    SpanSpace sp(c, site.topology, top, top);
    Arrow ia = c.arrow("{a}<={a,b}"), ib = c.arrow("{b}<={a,b}"), it = c.identity(top);
    DynBitset r = sp.empty();
    r.set(sp.index(ia, ia));
    r.set(sp.index(ib, ib));
    EXPECT_TRUE(sp.close(r).test(sp.index(it, it)));
}

TEST(CribleQuantaloid, TerminalSiteIsBoolean)
{
    auto r = closed_crible_quantaloid(trivial_site(terminal()));
    EXPECT_EQ(r.q.hom(0, 0).size(), 2u);
    auto b = boolean_quantale();
    EXPECT_TRUE(find_isomorphism(r.q.with_involution(std::nullopt), b.with_involution(std::nullopt), false));
}

TEST(CribleQuantaloid, TwoChainTrivialTopology)
{
    auto r = closed_crible_quantaloid(trivial_site(chain2()));
    const auto& q = r.q;
    EXPECT_FALSE(q.validate());
    EXPECT_EQ(q.hom(0, 0).size(), 2u);
    EXPECT_EQ(q.hom(0, 1).size(), 2u);
    EXPECT_EQ(q.hom(1, 0).size(), 2u);
    EXPECT_EQ(q.hom(1, 1).size(), 3u);
    EXPECT_TRUE(all_hold(closed_crible_axioms(q)));
    EXPECT_TRUE(modular(q).holds);
}

TEST(CribleQuantaloid, CanonicalSiteOfChainIsSsi)
{
    auto r = closed_crible_quantaloid(canonical_site_of_locale(chain3()));
    auto s = ssi(locale_quantale(chain3()));
    EXPECT_TRUE(find_isomorphism(r.q, s.split));
}

TEST(CribleQuantaloid, TranspositionIsDerivedInvolution)
{
    for (const auto& site : {trivial_site(chain2()), canonical_site_of_locale(chain3()), trivial_site(terminal())}) {
        auto r = closed_crible_quantaloid(site);
        auto d = derived_involution(r.q);
        ASSERT_TRUE(d);
        EXPECT_EQ(*d, r.q.involution_table());
    }
}

TEST(InducedSite, BooleanIsTrivial)
{
    auto s = topology_from_quantaloid(boolean_quantale());
    EXPECT_EQ(s.category.num_arrows(), 1u);
    EXPECT_EQ(s.topology.covering[0].size(), 1u);
}

TEST(InducedSite, SsiOfChainIsCanonicalSite)
{
    auto s = topology_from_quantaloid(ssi(locale_quantale(chain3())).split);
    EXPECT_TRUE(sites_isomorphic(s, canonical_site_of_locale(chain3())));
    EXPECT_FALSE(sites_isomorphic(s, trivial_site(s.category)));
}

TEST(InducedSite, RoundTrip)
{
    for (const auto& site : {trivial_site(chain2()), canonical_site_of_locale(chain3())}) {
        auto q = closed_crible_quantaloid(site).q;
        auto back = closed_crible_quantaloid(topology_from_quantaloid(q)).q;
        EXPECT_TRUE(find_isomorphism(q, back));
    }
}
