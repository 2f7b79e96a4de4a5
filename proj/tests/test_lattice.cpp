#include <gtest/gtest.h>

#include "quantalib/lattice.hpp"
#include "support/oracles.hpp"

using namespace quantalib;

namespace {

FiniteSupLattice chain3() { return FiniteSupLattice::chain({"0", "m", "1"}); }

FiniteSupLattice m3()
{
    return FiniteSupLattice({"0", "a", "b", "c", "1"}, std::vector<std::pair<std::string, std::string>>{
                                                           {"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
}

FiniteSupLattice n5()
{
    return FiniteSupLattice({"0", "a", "b", "c", "1"}, std::vector<std::pair<std::string, std::string>>{
                                                           {"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
}

std::vector<FiniteSupLattice> corpus()
{
    return {FiniteSupLattice::chain({"x"}),
            FiniteSupLattice::chain({"0", "1"}),
            chain3(),
            FiniteSupLattice::powerset({"a", "b"}),
            FiniteSupLattice::powerset({"a", "b", "c"}),
            m3(),
            n5()};
}

} // namespace

TEST(Lattice, JoinExamples)
{
    auto c = chain3();
    EXPECT_EQ(c.name(c.join_ids({"0", "m"})), "m");
    EXPECT_EQ(c.join_ids({}), c.bottom());
    EXPECT_EQ(c.name(c.bottom()), "0");
    auto p = FiniteSupLattice::powerset({"a", "b"});
    EXPECT_EQ(p.name(p.join_ids({"{a}", "{b}"})), "{a,b}");
}

TEST(Lattice, MeetExamples)
{
    auto c = chain3();
    EXPECT_EQ(c.name(c.meet_ids({"m", "1"})), "m");
    EXPECT_EQ(c.meet_ids({}), c.top());
    auto p = FiniteSupLattice::powerset({"a", "b"});
    EXPECT_EQ(p.name(p.meet_ids({"{a}", "{b}"})), "{}");
}

TEST(Lattice, UnknownIdIsInputError)
{
    auto c = chain3();
    EXPECT_THROW(c.join_ids({"0", "zz"}), InputError);
    EXPECT_THROW(c.meet_ids({"q"}), InputError);
    EXPECT_THROW(c.index_of("nope"), InputError);
}

TEST(Lattice, LocaleExamples)
{
    EXPECT_TRUE(chain3().is_locale());
    EXPECT_TRUE(FiniteSupLattice::chain({"0", "1", "2", "3", "4"}).is_locale());
    EXPECT_TRUE(FiniteSupLattice::powerset({"a", "b", "c"}).is_locale());
    EXPECT_FALSE(m3().is_locale());
    EXPECT_FALSE(n5().is_locale());
}

TEST(Lattice, ConstructionRejectsNonLattices)
{
    using Gen = std::vector<std::pair<std::string, std::string>>;
    // two maximal elements: no top
    EXPECT_THROW(FiniteSupLattice({"0", "a", "b"}, Gen{{"0", "a"}, {"0", "b"}}), InputError);
    // a, b have two minimal upper bounds
    EXPECT_THROW(FiniteSupLattice({"0", "a", "b", "c", "d", "1"},
                                  Gen{{"0", "a"}, {"0", "b"}, {"a", "c"}, {"b", "c"}, {"a", "d"}, {"b", "d"}, {"c", "1"},
                                      {"d", "1"}}),
                 InputError);
    EXPECT_THROW(FiniteSupLattice({"a", "b"}, Gen{{"a", "b"}, {"b", "a"}}), InputError);
    EXPECT_THROW(FiniteSupLattice(std::vector<std::string>{}, Gen{}), InputError);
    EXPECT_THROW(FiniteSupLattice({"a", "a"}, Gen{}), InputError);
}

TEST(Lattice, ClosureOfGeneratingRelation)
{
    auto c = FiniteSupLattice::chain({"0", "1", "2", "3"});
    EXPECT_TRUE(c.leq(c.index_of("0"), c.index_of("3")));
    EXPECT_FALSE(c.leq(c.index_of("3"), c.index_of("1")));
    EXPECT_EQ(c.covers().size(), 3u);
}

TEST(Lattice, JoinMeetAlgebraOnSmallSubsets)
{
    for (const auto& l : corpus()) {
        const Elem n = static_cast<Elem>(l.size());
        for (Elem a = 0; a < n; ++a) {
            EXPECT_EQ(l.join(a, a), a);
            EXPECT_EQ(l.meet(a, a), a);
            for (Elem b = 0; b < n; ++b) {
                EXPECT_EQ(l.join(a, b), l.join(b, a));
                EXPECT_EQ(l.meet(a, b), l.meet(b, a));
                EXPECT_EQ(l.join(a, b), oracle::join_by_scan(l, {a, b}));
                EXPECT_EQ(l.meet(a, b), oracle::meet_by_scan(l, {a, b}));
                for (Elem c = 0; c < n; ++c) {
                    EXPECT_EQ(l.join(l.join(a, b), c), l.join(a, l.join(b, c)));
                    EXPECT_EQ(l.meet(l.meet(a, b), c), l.meet(a, l.meet(b, c)));
                    std::vector<Elem> s{a, b, c};
                    EXPECT_EQ(l.join(s), oracle::join_by_scan(l, s));
                    EXPECT_EQ(l.meet(s), oracle::meet_by_scan(l, s));
                    if (l.leq(a, b)) {
                        EXPECT_TRUE(l.leq(l.join(a, c), l.join(b, c)));
                        EXPECT_TRUE(l.leq(l.meet(a, c), l.meet(b, c)));
                    }
                }
            }
        }
    }
}

TEST(Lattice, JoinIsLeastUpperBound)
{
    for (const auto& l : corpus()) {
        const Elem n = static_cast<Elem>(l.size());
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b) {
                Elem j = l.join(a, b);
                for (Elem x = 0; x < n; ++x) EXPECT_EQ(l.leq(j, x), l.leq(a, x) && l.leq(b, x));
            }
    }
}

TEST(Lattice, LocaleAgreesWithAllSubsetsFrameLaw)
{
    for (const auto& l : corpus()) {
        if (l.size() <= 6) {
            EXPECT_EQ(l.is_locale(), oracle::frame_law_all_subsets(l)) << l.size();
        }
    }
}

TEST(Lattice, JoinIrreducibles)
{
    EXPECT_EQ(FiniteSupLattice::powerset({"a", "b", "c"}).join_irreducibles().size(), 3u);
    EXPECT_EQ(chain3().join_irreducibles().size(), 2u);
    EXPECT_EQ(m3().join_irreducibles().size(), 3u);
}
