#ifndef QUANTALIB_VERIFY_HPP
#define QUANTALIB_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quantalib/completion.hpp"
#include "quantalib/constructions.hpp"
#include "quantalib/corpus.hpp"
#include "quantalib/grothendieck.hpp"
#include "quantalib/iso.hpp"
#include "quantalib/oracle.hpp"
#include "quantalib/predicates.hpp"
#include "quantalib/replay.hpp"
#include "quantalib/sites.hpp"

namespace quantalib {

struct Limits {
    std::uint64_t max_presheaves = kDefaultMaxPresheaves;
    std::uint64_t max_morita = kDefaultMaxMorita;
    std::uint64_t max_cliques = kDefaultMaxCliques;
    std::uint64_t max_categories = kDefaultMaxCategories;
};

/// One verdict. A failing law check carries a counterexample in `on`.
struct Check {
    std::string criterion;
    std::string subject;
    std::string name;
    bool holds = true;
    std::optional<Counterexample> cx;
    QuantaloidPtr on;
    std::string on_name;
    std::vector<std::pair<std::string, std::string>> facts;

    bool replays() const { return cx && on && replay(*on, *cx); }
};

using Checks = std::vector<Check>;

namespace detail {

inline Check law(std::string criterion, std::string subject, const PredicateResult& r, QuantaloidPtr on,
                 std::string on_name)
{
    Check c{std::move(criterion), std::move(subject), r.name, r.holds, r.counterexample, {}, {}, {}};
    if (!r.holds) {
        c.on = std::move(on);
        c.on_name = std::move(on_name);
    }
    return c;
}

inline Check verdict(std::string criterion, std::string subject, std::string name, bool holds,
                     std::vector<std::pair<std::string, std::string>> facts = {})
{
    Check c{std::move(criterion), std::move(subject), std::move(name), holds, std::nullopt, {}, {}, std::move(facts)};
    return c;
}

/// Quantaloid axioms; false when the subject is corrupt and later checks must be skipped.
inline bool axioms(Checks& out, const std::string& criterion, const CorpusEntry& e)
{
    auto cx = e.q->validate();
    Check c{criterion, e.name, "quantaloid_axioms", !cx, cx, {}, {}, {}};
    if (cx) {
        c.on = e.q;
        c.on_name = e.name;
    }
    out.push_back(std::move(c));
    return !cx;
}

inline std::string yes(bool b) { return b ? "true" : "false"; }

inline QuantaloidPtr ssi_of(const FiniteQuantaloid& q) { return shared_quantaloid(ssi(q).split); }

} // namespace detail

/// Both residuation adjunctions at every triple.
inline Checks check_residuation(const std::vector<CorpusEntry>& corpus)
{
    Checks out;
    for (const auto& e : corpus) {
        if (!detail::axioms(out, "residuation", e)) continue;
        out.push_back(detail::law("residuation", e.name, residuation(*e.q), e.q, e.name));
    }
    return out;
}

/// The corpus is modular; f ≤ ff°f, left adjoints are symmetric and order-discrete.
inline Checks check_modularity(const std::vector<CorpusEntry>& corpus)
{
    Checks out;
    for (const auto& e : corpus) {
        if (!detail::axioms(out, "modularity", e)) continue;
        auto m = modular(*e.q);
        out.push_back(detail::law("modularity", e.name, m, e.q, e.name));
        if (!m.holds) continue;
        out.push_back(detail::law("modularity", e.name, modular_regular(*e.q), e.q, e.name));
        out.push_back(detail::law("modularity", e.name, left_adjoints_symmetric(*e.q), e.q, e.name));
        out.push_back(detail::law("modularity", e.name, map_discrete(*e.q), e.q, e.name));
    }
    return out;
}

/// ssi(Q) inherits local localicity and modularity; its meets are the parent's.
inline Checks check_splitting(const std::vector<CorpusEntry>& corpus)
{
    Checks out;
    for (const auto& e : corpus) {
        if (!detail::axioms(out, "splitting", e)) continue;
        const auto& q = *e.q;
        auto s = ssi(q);
        auto sp = shared_quantaloid(s.split);
        const std::string sname = "ssi(" + e.name + ")";
        if (locally_localic(q).holds) out.push_back(detail::law("splitting", e.name, locally_localic(*sp), sp, sname));
        if (modular(q).holds) out.push_back(detail::law("splitting", e.name, modular(*sp), sp, sname));
        bool meets = true;
        std::string where;
        for (ObjId a = 0; a < sp->num_objects() && meets; ++a)
            for (ObjId b = 0; b < sp->num_objects() && meets; ++b) {
                const auto& h = sp->hom(a, b);
                const auto& ph = q.hom(s.idempotent_of[a].src, s.idempotent_of[b].src);
                for (Elem x = 0; x < h.size() && meets; ++x)
                    for (Elem y = 0; y < h.size() && meets; ++y)
                        if (s.to_parent({a, b, h.meet(x, y)}).elt !=
                            ph.meet(s.to_parent({a, b, x}).elt, s.to_parent({a, b, y}).elt)) {
                            meets = false;
                            where = sp->describe({a, b, x}) + " ∧ " + sp->describe({a, b, y});
                        }
            }
        out.push_back(detail::verdict("splitting", e.name, "ssi_meets_are_parent_meets", meets,
                                      meets ? decltype(Check::facts){} : decltype(Check::facts){{"at", where}}));
    }
    return out;
}

/// Semi-simple ⇔ ssi tabular, weakly semi-simple ⇔ ssi weakly tabular, on modular entries.
inline Checks check_semisimple_tabular(const std::vector<CorpusEntry>& corpus)
{
    Checks out;
    for (const auto& e : corpus) {
        if (!detail::axioms(out, "semisimple-tabular", e)) continue;
        if (!modular(*e.q).holds) continue;
        auto sp = detail::ssi_of(*e.q);
        bool ss = semi_simple(*e.q).holds, tb = tabular(*sp).holds;
        bool wss = weakly_semi_simple(*e.q).holds, wtb = weakly_tabular(*sp).holds;
        out.push_back(detail::verdict("semisimple-tabular", e.name, "semi_simple_iff_ssi_tabular", ss == tb,
                                      {{"semi_simple", detail::yes(ss)}, {"ssi_tabular", detail::yes(tb)}}));
        out.push_back(detail::verdict("semisimple-tabular", e.name, "weakly_semi_simple_iff_ssi_weakly_tabular",
                                      wss == wtb,
                                      {{"weakly_semi_simple", detail::yes(wss)}, {"ssi_weakly_tabular", detail::yes(wtb)}}));
    }
    return out;
}

/**
 * Three routes to the Grothendieck property agree: ssi weakly tabular,
 * closed-crible axioms on ssi, and the definition. Expected true on the
 * positive entries; on the negative ones each route must fail with a
 * counterexample that replays.
 */
inline Checks check_grothendieck_routes(const std::vector<CorpusEntry>& positive,
                                        const std::vector<CorpusEntry>& negative)
{
    Checks out;
    auto routes = [&](const CorpusEntry& e, bool expected) {
        if (!detail::axioms(out, "grothendieck-routes", e)) return;
        auto r = grothendieck_report(*e.q);
        auto sp = detail::ssi_of(*e.q);
        const std::string sname = "ssi(" + e.name + ")";
        const bool certified = r.ssi_certified();
        const bool agree = r.holds == r.ssi_weakly_tabular.holds && r.holds == certified;
        out.push_back(detail::verdict("grothendieck-routes", e.name, "routes_agree", agree,
                                      {{"definition", detail::yes(r.holds)},
                                       {"ssi_weakly_tabular", detail::yes(r.ssi_weakly_tabular.holds)},
                                       {"ssi_closed_crible", detail::yes(certified)}}));
        if (expected) {
            auto route = [&](const std::string& prefix, const PredicateResult& p, const QuantaloidPtr& on,
                             const std::string& on_name) {
                out.push_back(detail::law("grothendieck-routes", e.name, p, on, on_name));
                out.back().name = prefix + "/" + out.back().name;
            };
            for (const auto& p : r.definition) route("definition", p, e.q, e.name);
            route("ssi", r.ssi_weakly_tabular, sp, sname);
            for (const auto& p : r.ssi_closed_crible) route("ssi_closed_crible", p, sp, sname);
            return;
        }
        // every route false, each with a replaying witness
        auto witnessed = [&](const std::vector<PredicateResult>& ps, const QuantaloidPtr& on) {
            for (const auto& p : ps)
                if (!p.holds) return p.counterexample && replay(*on, *p.counterexample);
            return false;
        };
        const bool w_def = witnessed(r.definition, e.q);
        const bool w_wt = witnessed({r.ssi_weakly_tabular}, sp);
        const bool w_cc = witnessed(r.ssi_closed_crible, sp);
        out.push_back(detail::verdict("grothendieck-routes", e.name, "all_routes_refuted_with_witness",
                                      w_def && w_wt && w_cc,
                                      {{"definition_witness", detail::yes(w_def)},
                                       {"ssi_weakly_tabular_witness", detail::yes(w_wt)},
                                       {"ssi_closed_crible_witness", detail::yes(w_cc)}}));
    };
    for (const auto& e : positive) routes(e, true);
    for (const auto& e : negative) routes(e, false);
    return out;
}

/// One-object entries: the top criterion agrees with the definition.
inline Checks check_top_criterion(const std::vector<CorpusEntry>& corpus)
{
    Checks out;
    for (const auto& e : corpus) {
        if (e.q->num_objects() != 1) continue;
        if (!detail::axioms(out, "top-criterion", e)) continue;
        const bool def = is_grothendieck(*e.q);
        const bool top = grothendieck_via_top(*e.q).holds;
        out.push_back(detail::verdict("top-criterion", e.name, "top_criterion_matches_definition", def == top,
                                      {{"definition", detail::yes(def)}, {"top_criterion", detail::yes(top)}}));
    }
    return out;
}

/// R(Map(Q), J(Q)) ≅ Q for Q = R(C, J).
inline Checks check_site_roundtrip(const std::vector<std::pair<std::string, Site>>& sites)
{
    Checks out;
    for (const auto& [name, site] : sites) {
        auto q = closed_crible_quantaloid(site).q;
        auto back = closed_crible_quantaloid(topology_from_quantaloid(q)).q;
        const bool iso = find_isomorphism(q, back).has_value();
        out.push_back(detail::verdict("site-roundtrip", name, "roundtrip_isomorphic", iso,
                                      {{"objects", std::to_string(q.num_objects())},
                                       {"roundtrip_objects", std::to_string(back.num_objects())}}));
    }
    return out;
}

/// ssi of a locale is a closed-crible quantaloid whose induced site is the canonical one.
inline Checks check_locale_site(const FiniteSupLattice& l, const std::string& name)
{
    Checks out;
    auto q = locale_quantale(l);
    auto sp = detail::ssi_of(q);
    for (const auto& p : closed_crible_axioms(*sp))
        out.push_back(detail::law("locale-site", name, p, sp, "ssi(" + name + ")"));
    const bool same = sites_isomorphic(topology_from_quantaloid(*sp), canonical_site_of_locale(l));
    out.push_back(detail::verdict("locale-site", name, "induced_site_is_canonical", same));
    return out;
}

/// Morita classes of symmetric categories against an exhaustive G-set count.
inline Check census_against_gsets(const std::string& name, const FiniteGroupoid& g, std::size_t n,
                                  const Limits& lim)
{
    auto q = shared_quantaloid(groupoid_quantale(g));
    auto census = enumerate_sheaves(q, n, true, lim.max_morita, lim.max_categories);
    const std::size_t by_elements = count_gsets_by_elements(g, n);
    const std::size_t by_orbits = count_gsets_by_orbits(g, n);
    return detail::verdict("sheaf-census", name, "classes_match_gsets_by_elements",
                           census.representatives.size() == by_elements,
                           {{"max_objects", std::to_string(n)},
                            {"classes", std::to_string(census.representatives.size())},
                            {"gsets_by_elements", std::to_string(by_elements)},
                            {"gsets_by_orbits", std::to_string(by_orbits)},
                            {"categories_enumerated", std::to_string(census.categories)}});
}

inline Check census_against_locale(const std::string& name, const FiniteSupLattice& l, std::size_t n,
                                   const Limits& lim)
{
    auto q = shared_quantaloid(locale_quantale(l));
    auto census = enumerate_sheaves(q, n, true, lim.max_morita, lim.max_categories);
    const std::size_t oracle = count_locale_sheaves(l, n);
    return detail::verdict("sheaf-census", name, "classes_match_locale_sheaves",
                           census.representatives.size() == oracle,
                           {{"max_objects", std::to_string(n)},
                            {"classes", std::to_string(census.representatives.size())},
                            {"oracle", std::to_string(oracle)},
                            {"categories_enumerated", std::to_string(census.categories)}});
}

/// Boolean sets up to 3 and Z/2-sets up to 2 elements.
inline Checks check_sheaf_census(const Limits& lim = {})
{
    return {census_against_gsets("boolean", FiniteGroupoid::cyclic(1), 3, lim),
            census_against_gsets("z2", FiniteGroupoid::cyclic(2), 2, lim)};
}

/// Further locale censuses against the stalk-based oracle.
inline Checks check_locale_census(const Limits& lim = {})
{
    return {census_against_locale("boolean", FiniteSupLattice::chain({"0", "1"}), 3, lim),
            census_against_locale("locale3", three_chain(), 3, lim),
            census_against_locale("powerset2", FiniteSupLattice::powerset({"a", "b"}), 2, lim)};
}

/**
 * Symmetric projections of size 1 and 2 against normal symmetric ssi
 * categories with at most 2 objects: round trips are identities, the two
 * equivalences correspond, and every category class is hit.
 */
inline Checks check_projections(const CorpusEntry& e, const Limits& lim = {})
{
    Checks out;
    if (!detail::axioms(out, "projections", e)) return out;
    auto ctx = make_split_context(e.q, true);
    std::vector<Matrix> ps;
    for (std::size_t n = 1; n <= 2; ++n) {
        TypedSet t;
        for (std::size_t i = 0; i < n; ++i) {
            t.names.push_back("x" + std::to_string(i));
            t.types.push_back(0);
        }
        for (auto& p : symmetric_projections(e.q, t, lim.max_categories)) ps.push_back(std::move(p));
    }
    std::vector<CatPtr> pcats;
    bool round = true;
    for (const auto& p : ps) {
        pcats.push_back(projection_to_category(ctx, p));
        round = round && category_to_projection(ctx, *pcats.back()) == p;
    }
    std::vector<CatPtr> cats;
    for (std::size_t n = 0; n <= 2; ++n)
        for (auto& c : normal_categories(ctx.base, n, true, lim.max_categories)) {
            if (n > 0) {
                auto p = category_to_projection(ctx, *c);
                round = round && projection_to_category(ctx, p)->hom() == c->hom();
            }
            cats.push_back(std::move(c));
        }
    out.push_back(detail::verdict("projections", e.name, "roundtrips_are_identities", round,
                                  {{"projections", std::to_string(ps.size())},
                                   {"normal_categories", std::to_string(cats.size())}}));
    bool corresponds = true;
    std::vector<std::size_t> pclass_reps;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        bool fresh = true;
        for (std::size_t j = 0; j < ps.size(); ++j) {
            const bool pe = projections_equivalent(ps[i], ps[j], lim.max_morita);
            const bool me = morita_equivalence(pcats[i], pcats[j], lim.max_morita).has_value();
            corresponds = corresponds && pe == me;
            if (j < i && pe) fresh = false;
        }
        if (fresh) pclass_reps.push_back(i);
    }
    out.push_back(detail::verdict("projections", e.name, "projection_equivalence_is_morita_equivalence",
                                  corresponds, {{"projection_classes", std::to_string(pclass_reps.size())}}));
    std::size_t cat_classes = 0;
    bool surjective = true;
    std::vector<CatPtr> reps;
    for (const auto& c : cats) {
        bool fresh = true;
        for (const auto& r : reps)
            if (morita_equivalence(r, c, lim.max_morita)) {
                fresh = false;
                break;
            }
        if (!fresh) continue;
        reps.push_back(c);
        ++cat_classes;
        bool hit = false;
        for (auto i : pclass_reps) hit = hit || morita_equivalence(pcats[i], c, lim.max_morita).has_value();
        surjective = surjective && hit;
    }
    out.push_back(detail::verdict("projections", e.name, "classes_biject",
                                  surjective && cat_classes == pclass_reps.size(),
                                  {{"projection_classes", std::to_string(pclass_reps.size())},
                                   {"category_classes", std::to_string(cat_classes)}}));
    return out;
}

/// Locally localic modular entries are Cauchy-bilateral, and symmetric = Cauchy completions there.
inline Checks check_cauchy_bilateral(const std::vector<CorpusEntry>& corpus, const Limits& lim = {})
{
    Checks out;
    for (const auto& e : corpus) {
        if (!detail::axioms(out, "cauchy-bilateral", e)) continue;
        if (!locally_localic(*e.q).holds || !modular(*e.q).holds) continue;
        auto cb = cauchy_bilateral(*e.q, lim.max_cliques);
        out.push_back(detail::law("cauchy-bilateral", e.name, cb, e.q, e.name));
        std::size_t n = 0, mismatched = 0;
        for (const auto& a : symmetric_category_corpus(e.q)) {
            ++n;
            if (symmetric_completion(a, lim.max_presheaves).presheaves !=
                cauchy_completion(a, lim.max_presheaves).presheaves)
                ++mismatched;
        }
        out.push_back(detail::verdict("cauchy-bilateral", e.name, "symmetric_completion_is_cauchy_completion",
                                      mismatched == 0,
                                      {{"categories", std::to_string(n)}, {"mismatched", std::to_string(mismatched)}}));
    }
    return out;
}

/// Q^m is a quantale and M embeds Q fully faithfully after splitting {M_1A}.
inline Checks check_morita_quantale(const std::vector<CorpusEntry>& corpus)
{
    Checks out;
    for (const auto& e : corpus) {
        if (!detail::axioms(out, "morita-quantale", e)) continue;
        auto m = morita_quantale(e.q);
        auto qm = shared_quantaloid(m.qm);
        auto cx = qm->validate();
        Check c{"morita-quantale", e.name, "quantale_axioms", !cx, cx, {}, {}, {}};
        if (cx) c.on = qm, c.on_name = "Q^m(" + e.name + ")";
        out.push_back(std::move(c));
        out.push_back(detail::verdict("morita-quantale", e.name, "embedding_fully_faithful",
                                      morita_embedding_fully_faithful(m),
                                      {{"carrier", std::to_string(m.qm.hom(0, 0).size())}}));
    }
    return out;
}

/// normalize gives a normal category with witnesses, on the symmetric category corpus over ssi.
inline Checks check_normalization(const std::vector<CorpusEntry>& corpus)
{
    Checks out;
    for (const auto& e : corpus) {
        if (e.q->num_objects() != 1) continue;
        if (!detail::axioms(out, "normalization", e)) continue;
        auto ctx = make_split_context(e.q, true);
        std::size_t n = 0, bad = 0;
        for (const auto& a : symmetric_category_corpus(ctx.base)) {
            if (a->size() > 2) continue;
            ++n;
            auto nz = normalize(ctx, a);
            if (!is_normal(*nz.cat) || !is_symmetric(*nz.cat) || !normalization_witnessed(a, nz)) ++bad;
        }
        out.push_back(detail::verdict("normalization", e.name, "normal_with_witnesses", bad == 0,
                                      {{"categories", std::to_string(n)}, {"failures", std::to_string(bad)}}));
    }
    return out;
}

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"c-lemmas", "d-theorems", "e-theorems", "walters"};
    return names;
}

/// Locale and groupoid entries of a corpus (the positive Grothendieck examples).
inline std::vector<CorpusEntry> grothendieck_examples(const std::vector<CorpusEntry>& corpus)
{
    std::vector<CorpusEntry> out;
    for (const auto& e : corpus)
        if (e.name == "boolean" || e.name == "locale3" || e.name == "powerset2" || e.name == "z2") out.push_back(e);
    return out;
}

inline Checks run_suite(const std::string& suite, const std::vector<CorpusEntry>& corpus, const Limits& lim = {})
{
    Checks out;
    auto add = [&](Checks cs) {
        for (auto& c : cs) out.push_back(std::move(c));
    };
    if (suite == "c-lemmas") {
        add(check_residuation(corpus));
        add(check_modularity(corpus));
        add(check_cauchy_bilateral(corpus, lim));
    } else if (suite == "d-theorems") {
        add(check_splitting(corpus));
        add(check_semisimple_tabular(corpus));
        add(check_grothendieck_routes(grothendieck_examples(corpus), {nonmodular_example()}));
        auto one = corpus;
        one.push_back(nonmodular_example());
        one.push_back({"m3", shared_quantaloid(m3_quantale())});
        add(check_top_criterion(one));
        add(check_site_roundtrip(standard_sites()));
        add(check_locale_site(three_chain(), "locale3"));
    } else if (suite == "e-theorems") {
        add(check_morita_quantale(corpus));
        add(check_normalization(corpus));
        add(check_projections(corpus_entry(corpus, "z2"), lim));
    } else if (suite == "walters") {
        add(check_sheaf_census(lim));
        add(check_locale_census(lim));
    } else {
        throw InputError("unknown suite '" + suite + "'");
    }
    return out;
}

/// One overwritten composition entry: name of the corpus entry, position, new value.
struct Fault {
    std::string entry;
    ObjId x = 0, y = 0, z = 0;
    Elem g = 0, f = 0, result = 0;
};

inline std::vector<CorpusEntry> inject(std::vector<CorpusEntry> corpus, const Fault& fault)
{
    for (auto& e : corpus)
        if (e.name == fault.entry) {
            e.q = shared_quantaloid(e.q->with_composition_entry(fault.x, fault.y, fault.z, fault.g, fault.f,
                                                                 fault.result));
            return corpus;
        }
    throw InputError("no corpus entry '" + fault.entry + "'");
}

/// m∘m := 0 in the 3-chain locale: still a quantale, no longer modular.
inline Fault default_fault(const std::vector<CorpusEntry>& corpus)
{
    const auto& q = *corpus_entry(corpus, "locale3").q;
    const auto& h = q.hom(0, 0);
    return {"locale3", 0, 0, 0, h.index_of("m"), h.index_of("m"), h.bottom()};
}

/// Every single-entry fault of one corpus member.
inline std::vector<Fault> all_faults(const CorpusEntry& e)
{
    std::vector<Fault> out;
    const auto& q = *e.q;
    const ObjId n = static_cast<ObjId>(q.num_objects());
    for (ObjId x = 0; x < n; ++x)
        for (ObjId y = 0; y < n; ++y)
            for (ObjId z = 0; z < n; ++z)
                for (Elem g = 0; g < q.hom(y, z).size(); ++g)
                    for (Elem f = 0; f < q.hom(x, y).size(); ++f)
                        for (Elem r = 0; r < q.hom(x, z).size(); ++r)
                            if (r != q.comp(x, y, z, g, f)) out.push_back({e.name, x, y, z, g, f, r});
    return out;
}

} // namespace quantalib

#endif
