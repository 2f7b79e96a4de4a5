#include <gtest/gtest.h>

#include "quantalib/generators.hpp"
#include "quantalib/predicates.hpp"
#include "support/oracles.hpp"

using namespace quantalib;

namespace {

FiniteQuantaloid locale3() { return locale_quantale(FiniteSupLattice::chain({"0", "m", "1"})); }

Morphism el(const FiniteQuantaloid& q, const std::string& e) { return q.morphism("*", "*", e); }

oracle::Relation parse_relation(const std::string& s)
{
    oracle::Relation r;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] == '(') r.insert({s[i + 1] - '0', s[i + 3] - '0'});
    return r;
}

std::string relation_name(const oracle::Relation& r)
{
    std::string s = "{";
    bool first = true;
    // atoms are ordered (1,1),(1,2),(2,1),(2,2) which is the set's own order
    for (auto [a, b] : r) {
        if (!first) s += ",";
        s += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
        first = false;
    }
    return s + "}";
}

} // namespace

TEST(Quantaloid, LocaleComposition)
{
    auto q = locale3();
    EXPECT_EQ(q.compose(el(q, "m"), el(q, "m")), el(q, "m"));
    EXPECT_EQ(q.compose(q.identity(0), el(q, "m")), el(q, "m"));
    EXPECT_EQ(q.compose(el(q, "m"), q.identity(0)), el(q, "m"));
}

TEST(Quantaloid, RelationCompositionMatchesOracle)
{
    auto q = relation_quantale(2);
    EXPECT_EQ(q.hom(0, 0).size(), 16u);
    EXPECT_EQ(q.compose(el(q, "{(1,2)}"), el(q, "{(2,1)}")), el(q, "{(2,2)}"));
    for (const auto& g : oracle::all_relations(2))
        for (const auto& f : oracle::all_relations(2)) {
            auto got = q.compose(el(q, relation_name(g)), el(q, relation_name(f)));
            EXPECT_EQ(parse_relation(q.hom(0, 0).name(got.elt)), oracle::compose(g, f));
        }
    for (const auto& f : oracle::all_relations(2))
        EXPECT_EQ(parse_relation(q.hom(0, 0).name(q.involute(el(q, relation_name(f))).elt)), oracle::transpose(f));
}

TEST(Quantaloid, CompositionTypeMismatch)
{
    auto q = all_boolean_quantaloid();
    Morphism ab = q.morphism("A", "B", "1");
    EXPECT_THROW(q.compose(ab, ab), CompositionError);
    EXPECT_THROW(q.left_residual(ab, q.morphism("B", "A", "1")), CompositionError);
    EXPECT_THROW(q.right_residual(ab, q.morphism("B", "A", "1")), CompositionError);
}

TEST(Quantaloid, LeftResidualExamples)
{
    auto q = locale3();
    EXPECT_EQ(q.left_residual(el(q, "m"), el(q, "1")), el(q, "m"));
    EXPECT_EQ(q.left_residual(el(q, "0"), el(q, "m")), el(q, "0"));
    auto r = relation_quantale(2);
    for (Elem f = 0; f < 16; ++f) EXPECT_EQ(r.left_residual(r.top(0, 0), {0, 0, f}), r.top(0, 0));
}

TEST(Quantaloid, RightResidualExamples)
{
    auto q = locale3();
    EXPECT_EQ(q.right_residual(el(q, "1"), el(q, "m")), el(q, "m"));
    EXPECT_EQ(q.right_residual(el(q, "m"), el(q, "0")), el(q, "0"));
    auto r = relation_quantale(2);
    for (Elem f = 0; f < 16; ++f) EXPECT_EQ(r.right_residual({0, 0, f}, r.top(0, 0)), r.top(0, 0));
}

TEST(Quantaloid, ResidualScanOracle)
{
    // x ↦ largest x with x∧m ≤ 0, by direct scan
    auto q = locale3();
    const auto& l = q.hom(0, 0);
    Elem best = l.bottom();
    for (Elem x = 0; x < l.size(); ++x)
        if (l.meet(x, l.index_of("m")) == l.index_of("0")) best = l.join(best, x);
    EXPECT_EQ(q.left_residual(el(q, "0"), el(q, "m")).elt, best);
}

TEST(Quantaloid, RightAdjointExamples)
{
    auto q = locale3();
    EXPECT_EQ(q.right_adjoint_of(q.identity(0)), q.identity(0));
    EXPECT_FALSE(q.right_adjoint_of(el(q, "m")));
    EXPECT_FALSE(q.right_adjoint_of(el(q, "0")));
    EXPECT_EQ(q.left_adjoints(0, 0).size(), 1u);
}

TEST(Quantaloid, RelationLeftAdjointsAreFunctionGraphs)
{
    auto q = relation_quantale(2);
    std::vector<std::string> graphs;
    for (Elem f : q.left_adjoints(0, 0)) graphs.push_back(q.hom(0, 0).name(f));
    std::sort(graphs.begin(), graphs.end());
    // functions {1,2} -> {1,2} as relations {(a, f(a))}
    std::vector<std::string> want{"{(1,1),(2,1)}", "{(1,1),(2,2)}", "{(1,2),(2,1)}", "{(1,2),(2,2)}"};
    std::sort(want.begin(), want.end());
    EXPECT_EQ(graphs, want);
    for (Elem f : q.left_adjoints(0, 0)) {
        EXPECT_EQ(*q.right_adjoint_of({0, 0, f}), q.involute({0, 0, f}));
        EXPECT_TRUE(q.is_symmetric_left_adjoint({0, 0, f}));
    }
}

TEST(Quantaloid, RightAdjointIsUnique)
{
    for (const auto& q : {relation_quantale(2), locale3(), all_boolean_quantaloid()}) {
        for (ObjId x = 0; x < q.num_objects(); ++x)
            for (ObjId y = 0; y < q.num_objects(); ++y)
                for (Elem f = 0; f < q.hom(x, y).size(); ++f) {
                    std::vector<Elem> adj;
                    for (Elem g = 0; g < q.hom(y, x).size(); ++g)
                        if (q.hom(x, x).leq(q.id(x), q.comp(x, y, x, g, f)) &&
                            q.hom(y, y).leq(q.comp(y, x, y, f, g), q.id(y)))
                            adj.push_back(g);
                    auto r = q.right_adjoint_of({x, y, f});
                    if (adj.empty()) {
                        EXPECT_FALSE(r);
                    } else {
                        ASSERT_EQ(adj.size(), 1u);
                        EXPECT_EQ(r->elt, adj[0]);
                    }
                }
    }
}

TEST(Quantaloid, SymmetricLeftAdjointExamples)
{
    auto q = locale3();
    EXPECT_TRUE(q.is_symmetric_left_adjoint(q.identity(0)));
    EXPECT_FALSE(q.is_symmetric_left_adjoint(el(q, "m")));
    auto plain = q.with_involution(std::nullopt);
    EXPECT_THROW(plain.is_symmetric_left_adjoint(plain.identity(0)), CapabilityError);
}

TEST(Quantaloid, ValidateDetectsBrokenTables)
{
    auto q = boolean_quantale();
    EXPECT_FALSE(q.validate());
    const auto& l = q.hom(0, 0);
    auto bad = q.with_composition_entry(0, 0, 0, l.top(), l.top(), l.bottom());
    auto cx = bad.validate();
    ASSERT_TRUE(cx);
    EXPECT_EQ(cx->check, "left_unit");
    std::vector<std::vector<Elem>> inv{{l.top(), l.top()}};
    auto badinv = q.with_involution(inv);
    ASSERT_TRUE(badinv.validate());
    EXPECT_THROW(badinv.validated(), InputError);
}

TEST(Quantaloid, BuilderReportsMissingEntries)
{
    QuantaloidBuilder b({"X"});
    b.set_hom(0, 0, FiniteSupLattice::chain({"0", "1"}));
    b.set_identity(0, 1);
    EXPECT_THROW(b.build(), InputError);
    b.set_composition_entry(0, 0, 0, 1, 1, 1);
    EXPECT_THROW(b.build(), InputError);
    b.set_composition_entry(0, 0, 0, 0, 0, 0).set_composition_entry(0, 0, 0, 0, 1, 0).set_composition_entry(0, 0, 0, 1, 0, 0);
    EXPECT_NO_THROW(b.build());
    EXPECT_THROW(QuantaloidBuilder({"A->B"}), InputError);
    EXPECT_THROW(QuantaloidBuilder({"A", "A"}), InputError);
}

TEST(Quantaloid, GeneratorsAreValid)
{
    EXPECT_FALSE(lukasiewicz_chain().validate());
    EXPECT_FALSE(m3_quantale().validate());
    EXPECT_FALSE(all_boolean_quantaloid().validate());
    EXPECT_FALSE(groupoid_quantale(FiniteGroupoid::cyclic(2)).validate());
    EXPECT_FALSE(groupoid_quantale(FiniteGroupoid::cyclic(3)).validate());
    EXPECT_THROW(locale_quantale(m3_quantale().hom(0, 0)), InputError);
}

TEST(Quantaloid, ResiduationAdjunctionHolds)
{
    for (const auto& q : {boolean_quantale(), locale3(), relation_quantale(2), lukasiewicz_chain(), m3_quantale(),
                          all_boolean_quantaloid()})
        EXPECT_TRUE(residuation(q).holds);
}

TEST(Quantaloid, EmptyQuantaloid)
{
    auto q = QuantaloidBuilder(std::vector<std::string>{}).build();
    EXPECT_EQ(q.num_objects(), 0u);
    EXPECT_FALSE(q.validate());
    EXPECT_TRUE(locally_localic(q).holds);
    EXPECT_TRUE(weakly_tabular(q).holds);
    EXPECT_TRUE(map_tabular(q).holds);
}
