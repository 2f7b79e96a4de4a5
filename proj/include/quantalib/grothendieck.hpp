#ifndef QUANTALIB_GROTHENDIECK_HPP
#define QUANTALIB_GROTHENDIECK_HPP

#include <string>
#include <vector>

#include "quantalib/predicates.hpp"
#include "quantalib/split.hpp"

namespace quantalib {

/// Grothendieck certification, with each ingredient kept for reporting.
struct GrothendieckReport {
    bool holds = false;
    /// modular, locally_localic, weakly_semi_simple on Q
    std::vector<PredicateResult> definition;
    /// weakly_tabular on Q_ssi
    PredicateResult ssi_weakly_tabular;
    /// closed-crible axioms on Q_ssi
    std::vector<PredicateResult> ssi_closed_crible;

    bool ssi_certified() const { return all_hold(ssi_closed_crible); }
};

inline std::vector<PredicateResult> grothendieck_definition(const FiniteQuantaloid& q)
{
    q.require_involution();
    return {modular(q), locally_localic(q), weakly_semi_simple(q)};
}

inline GrothendieckReport grothendieck_report(const FiniteQuantaloid& q)
{
    GrothendieckReport r;
    r.definition = grothendieck_definition(q);
    r.holds = all_hold(r.definition);
    const FiniteQuantaloid s = ssi(q).split;
    r.ssi_weakly_tabular = weakly_tabular(s);
    r.ssi_closed_crible = closed_crible_axioms(s);
    return r;
}

inline bool is_grothendieck(const FiniteQuantaloid& q) { return all_hold(grothendieck_definition(q)); }

/// One-object test: the hom is a locale, Q is modular, ⊤ = ⋁{fg° : f, g simple}.
inline PredicateResult grothendieck_via_top(const FiniteQuantaloid& q)
{
    if (q.num_objects() != 1) throw CapabilityError("top criterion needs exactly one object");
    q.require_involution();
    const auto& l = q.hom(0, 0);
    if (auto v = l.distributivity_violation())
        return fail("grothendieck_via_top", {"distributivity", {{0, 0, (*v)[0]}, {0, 0, (*v)[1]}, {0, 0, (*v)[2]}},
                                             "hom is not a locale"});
    if (auto m = modular(q); !m.holds) return fail("grothendieck_via_top", *m.counterexample);
    Elem j = simple_join_below(q, 0, 0, l.top(), simple_spans(q, 0, 0));
    if (j != l.top())
        return fail("grothendieck_via_top",
                    {"simple_top", {{0, 0, l.top()}}, "join of simple fg° is " + l.name(j)});
    return pass("grothendieck_via_top");
}

} // namespace quantalib

#endif
