#ifndef QUANTALIB_CORPUS_HPP
#define QUANTALIB_CORPUS_HPP

#include <string>
#include <vector>

#include "quantalib/generators.hpp"
#include "quantalib/qcat.hpp"
#include "quantalib/sites.hpp"

namespace quantalib {

struct CorpusEntry {
    std::string name;
    QuantaloidPtr q;
};

inline QuantaloidPtr shared_quantaloid(FiniteQuantaloid q) { return std::make_shared<const FiniteQuantaloid>(std::move(q)); }

/// The 2-chain a <= b as a category.
inline FiniteCategory two_chain_category() { return FiniteCategory({"a", "b"}, {{"u", "a", "b"}}, {}); }

inline FiniteSupLattice three_chain() { return FiniteSupLattice::chain({"0", "m", "1"}); }

/// Boolean, 3-chain, powerset of two atoms, Rel(2), Z/2, closed cribles on the 2-chain.
inline std::vector<CorpusEntry> standard_corpus()
{
    const auto c = two_chain_category();
    return {
        {"boolean", shared_quantaloid(boolean_quantale())},
        {"locale3", shared_quantaloid(locale_quantale(three_chain()))},
        {"powerset2", shared_quantaloid(locale_quantale(FiniteSupLattice::powerset({"a", "b"})))},
        {"rel2", shared_quantaloid(relation_quantale(2))},
        {"z2", shared_quantaloid(groupoid_quantale(FiniteGroupoid::cyclic(2)))},
        {"cribles-2chain", shared_quantaloid(closed_crible_quantaloid({c, trivial_topology(c)}).q)},
    };
}

/// Truncated-sum chain: involutive, locally localic, not modular.
inline CorpusEntry nonmodular_example() { return {"lukasiewicz3", shared_quantaloid(lukasiewicz_chain())}; }

inline const CorpusEntry& corpus_entry(const std::vector<CorpusEntry>& corpus, const std::string& name)
{
    for (const auto& e : corpus)
        if (e.name == name) return e;
    throw InputError("no corpus entry '" + name + "'");
}

/// Sites whose closed-crible quantaloids are round-tripped.
inline std::vector<std::pair<std::string, Site>> standard_sites()
{
    const auto c = two_chain_category();
    return {{"2chain-trivial", {c, trivial_topology(c)}}, {"locale3-canonical", canonical_site_of_locale(three_chain())}};
}

/**
 * Symmetric categories over q: every one with at most two objects, plus
 * discrete and indiscrete ones on three objects of each type.
 */
inline std::vector<CatPtr> symmetric_category_corpus(const QuantaloidPtr& q)
{
    std::vector<CatPtr> out;
    const ObjId n = static_cast<ObjId>(q->num_objects());
    auto sweep = [&](const TypedSet& t) {
        Matrix m(q, t, t);
        std::vector<std::pair<std::size_t, std::size_t>> cells;
        for (std::size_t y = 0; y < t.size(); ++y)
            for (std::size_t x = y; x < t.size(); ++x) cells.emplace_back(y, x);
        auto rec = [&](auto&& self, std::size_t k) -> void {
            if (k == cells.size()) {
                if (is_symmetric_monad(m)) out.push_back(make_category(m));
                return;
            }
            auto [y, x] = cells[k];
            for (Elem e = 0; e < m.hom(y, x).size(); ++e) {
                if (x == y && !m.hom(y, x).leq(q->id(t.types[x]), e)) continue;
                m.set(y, x, e);
                m.set(x, y, q->inv(t.types[x], t.types[y], e));
                self(self, k + 1);
            }
        };
        rec(rec, 0);
    };
    sweep({});
    for (ObjId a = 0; a < n; ++a) {
        sweep({{"p"}, {a}});
        for (ObjId b = a; b < n; ++b) sweep({{"p", "q"}, {a, b}});
    }
    for (ObjId a = 0; a < n; ++a) {
        TypedSet t{{"p", "q", "r"}, {a, a, a}};
        out.push_back(discrete_category(q, t));
        Matrix top(q, t, t);
        for (std::size_t y = 0; y < 3; ++y)
            for (std::size_t x = 0; x < 3; ++x) top.set(y, x, q->hom(a, a).top());
        if (is_monad(top)) out.push_back(make_category(top));
    }
    return out;
}

} // namespace quantalib

#endif
