#ifndef QUANTALIB_PREDICATES_HPP
#define QUANTALIB_PREDICATES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quantalib/quantaloid.hpp"

namespace quantalib {

struct PredicateResult {
    std::string name;
    bool holds = true;
    std::optional<Counterexample> counterexample;
};

inline PredicateResult pass(std::string name) { return {std::move(name), true, std::nullopt}; }
inline PredicateResult fail(std::string name, Counterexample cx) { return {std::move(name), false, std::move(cx)}; }

/// A span (f, g): X ⇸ Y of left adjoints with apex Z: f: Z->Y, g: Z->X.
struct Span {
    ObjId apex;
    Elem f;
    Elem g;
};

/// Shorthand for raw composition g∘f along x->y->z.
struct Ops {
    const FiniteQuantaloid& q;

    Elem c(ObjId x, ObjId y, ObjId z, Elem g, Elem f) const { return q.comp(x, y, z, g, f); }
    /// h∘g∘f along x->y->z->w.
    Elem c3(ObjId x, ObjId y, ObjId z, ObjId w, Elem h, Elem g, Elem f) const
    {
        return q.comp(x, z, w, h, q.comp(x, y, z, g, f));
    }
    Elem ra(ObjId x, ObjId y, Elem f) const { return q.right_adjoint_raw(x, y, f); }
    Elem inv(ObjId x, ObjId y, Elem f) const { return q.inv(x, y, f); }
    bool leq(ObjId x, ObjId y, Elem a, Elem b) const { return q.hom(x, y).leq(a, b); }
    Elem meet(ObjId x, ObjId y, Elem a, Elem b) const { return q.hom(x, y).meet(a, b); }
    Elem join(ObjId x, ObjId y, Elem a, Elem b) const { return q.hom(x, y).join(a, b); }

    /// f g* : X->Y for a span of left adjoints.
    Elem span_adj(ObjId x, ObjId y, const Span& s) const { return c(x, s.apex, y, s.f, ra(s.apex, x, s.g)); }
    /// f g° : X->Y.
    Elem span_inv(ObjId x, ObjId y, ObjId z, Elem f, Elem g) const { return c(x, z, y, f, inv(z, x, g)); }
};

/// All spans X ⇸ Y of left adjoints, ordered by apex then f then g.
inline std::vector<Span> left_adjoint_spans(const FiniteQuantaloid& q, ObjId x, ObjId y)
{
    std::vector<Span> out;
    for (ObjId z = 0; z < q.num_objects(); ++z)
        for (Elem f : q.left_adjoints(z, y))
            for (Elem g : q.left_adjoints(z, x)) out.push_back({z, f, g});
    return out;
}

/// q simple when q∘q° ≤ 1 (q: x->y).
inline bool is_simple_raw(const FiniteQuantaloid& q, ObjId x, ObjId y, Elem f)
{
    return q.hom(y, y).leq(q.comp(y, x, y, f, q.inv(x, y, f)), q.id(y));
}

inline bool is_simple_morphism(const FiniteQuantaloid& q, const Morphism& f)
{
    q.require_involution();
    q.check(f);
    return is_simple_raw(q, f.src, f.dst, f.elt);
}

inline std::vector<Elem> simple_morphisms(const FiniteQuantaloid& q, ObjId x, ObjId y)
{
    std::vector<Elem> out;
    for (Elem f = 0; f < q.hom(x, y).size(); ++f)
        if (is_simple_raw(q, x, y, f)) out.push_back(f);
    return out;
}

inline PredicateResult locally_localic(const FiniteQuantaloid& q)
{
    for (ObjId x = 0; x < q.num_objects(); ++x)
        for (ObjId y = 0; y < q.num_objects(); ++y)
            if (auto v = q.hom(x, y).distributivity_violation())
                return fail("locally_localic",
                            {"distributivity", {{x, y, (*v)[0]}, {x, y, (*v)[1]}, {x, y, (*v)[2]}},
                             "x∧(a∨b) != (x∧a)∨(x∧b)"});
    return pass("locally_localic");
}

inline PredicateResult map_discrete(const FiniteQuantaloid& q)
{
    for (ObjId x = 0; x < q.num_objects(); ++x)
        for (ObjId y = 0; y < q.num_objects(); ++y)
            for (Elem f : q.left_adjoints(x, y))
                for (Elem g : q.left_adjoints(x, y))
                    if (f != g && q.hom(x, y).leq(f, g))
                        return fail("map_discrete", {"map_discrete", {{x, y, f}, {x, y, g}}, "left adjoints f < g"});
    return pass("map_discrete");
}

/// Join of f g* over spans with f g* ≤ q.
inline Elem weak_tabulation_join(const FiniteQuantaloid& q, ObjId x, ObjId y, Elem target,
                                 const std::vector<Span>& spans)
{
    Ops o{q};
    Elem acc = q.hom(x, y).bottom();
    for (const auto& s : spans) {
        Elem v = o.span_adj(x, y, s);
        if (o.leq(x, y, v, target)) acc = o.join(x, y, acc, v);
    }
    return acc;
}

inline PredicateResult weakly_tabular(const FiniteQuantaloid& q)
{
    for (ObjId x = 0; x < q.num_objects(); ++x)
        for (ObjId y = 0; y < q.num_objects(); ++y) {
            auto spans = left_adjoint_spans(q, x, y);
            for (Elem t = 0; t < q.hom(x, y).size(); ++t)
                if (Elem j = weak_tabulation_join(q, x, y, t, spans); j != t)
                    return fail("weakly_tabular", {"weakly_tabular", {{x, y, t}},
                                                   "join of spans below q is " + q.hom(x, y).name(j)});
        }
    return pass("weakly_tabular");
}

inline bool has_map_tabulation(const FiniteQuantaloid& q, ObjId x, ObjId y, Elem t, const std::vector<Span>& spans)
{
    Ops o{q};
    for (const auto& s : spans) {
        if (o.span_adj(x, y, s) != t) continue;
        const ObjId z = s.apex;
        Elem ff = o.c(z, y, z, o.ra(z, y, s.f), s.f);
        Elem gg = o.c(z, x, z, o.ra(z, x, s.g), s.g);
        if (o.meet(z, z, ff, gg) == q.id(z)) return true;
    }
    return false;
}

inline PredicateResult map_tabular(const FiniteQuantaloid& q)
{
    for (ObjId x = 0; x < q.num_objects(); ++x)
        for (ObjId y = 0; y < q.num_objects(); ++y) {
            auto spans = left_adjoint_spans(q, x, y);
            for (Elem t = 0; t < q.hom(x, y).size(); ++t)
                if (!has_map_tabulation(q, x, y, t, spans))
                    return fail("map_tabular", {"map_tabular", {{x, y, t}}, "no span of left adjoints tabulates q"});
        }
    return pass("map_tabular");
}

/// fg* ∧ mn* ≤ f(g*n ∧ f*m)n* for spans (f,g) with apex z and (m,n) with apex w.
inline bool weakly_modular_instance(const FiniteQuantaloid& q, ObjId x, ObjId y, const Span& a, const Span& b)
{
    Ops o{q};
    const ObjId z = a.apex, w = b.apex;
    Elem lhs = o.meet(x, y, o.span_adj(x, y, a), o.span_adj(x, y, b));
    Elem gs_n = o.c(w, x, z, o.ra(z, x, a.g), b.g);
    Elem fs_m = o.c(w, y, z, o.ra(z, y, a.f), b.f);
    Elem mid = o.meet(w, z, gs_n, fs_m);
    Elem rhs = o.c(x, w, y, o.c(w, z, y, a.f, mid), o.ra(w, x, b.g));
    return o.leq(x, y, lhs, rhs);
}

inline PredicateResult weakly_modular(const FiniteQuantaloid& q)
{
    for (ObjId x = 0; x < q.num_objects(); ++x)
        for (ObjId y = 0; y < q.num_objects(); ++y) {
            auto spans = left_adjoint_spans(q, x, y);
            for (const auto& a : spans)
                for (const auto& b : spans)
                    if (!weakly_modular_instance(q, x, y, a, b))
                        return fail("weakly_modular", {"weakly_modular",
                                                       {{a.apex, y, a.f}, {a.apex, x, a.g}, {b.apex, y, b.f},
                                                        {b.apex, x, b.g}},
                                                       "fg*∧mn* not below f(g*n∧f*m)n*"});
        }
    return pass("weakly_modular");
}

inline bool has_tabulation(const FiniteQuantaloid& q, ObjId x, ObjId y, Elem t, const std::vector<Span>& spans)
{
    Ops o{q};
    for (const auto& s : spans) {
        const ObjId z = s.apex;
        if (o.span_inv(x, y, z, s.f, s.g) != t) continue;
        Elem ff = o.c(z, y, z, o.inv(z, y, s.f), s.f);
        Elem gg = o.c(z, x, z, o.inv(z, x, s.g), s.g);
        if (o.meet(z, z, ff, gg) == q.id(z)) return true;
    }
    return false;
}

inline PredicateResult tabular(const FiniteQuantaloid& q)
{
    q.require_involution();
    for (ObjId x = 0; x < q.num_objects(); ++x)
        for (ObjId y = 0; y < q.num_objects(); ++y) {
            auto spans = left_adjoint_spans(q, x, y);
            for (Elem t = 0; t < q.hom(x, y).size(); ++t)
                if (!has_tabulation(q, x, y, t, spans))
                    return fail("tabular", {"tabular", {{x, y, t}}, "no span of left adjoints with fg°=q, f°f∧g°g=1"});
        }
    return pass("tabular");
}

/// gf ∧ h ≤ g(f ∧ g°h) for f: x->y, g: y->z, h: x->z.
inline bool modular_instance(const FiniteQuantaloid& q, ObjId x, ObjId y, ObjId z, Elem f, Elem g, Elem h)
{
    Ops o{q};
    Elem lhs = o.meet(x, z, o.c(x, y, z, g, f), h);
    Elem rhs = o.c(x, y, z, g, o.meet(x, y, f, o.c(x, z, y, o.inv(y, z, g), h)));
    return o.leq(x, z, lhs, rhs);
}

inline PredicateResult modular(const FiniteQuantaloid& q)
{
    q.require_involution();
    const ObjId n = static_cast<ObjId>(q.num_objects());
    for (ObjId x = 0; x < n; ++x)
        for (ObjId y = 0; y < n; ++y)
            for (ObjId z = 0; z < n; ++z)
                for (Elem f = 0; f < q.hom(x, y).size(); ++f)
                    for (Elem g = 0; g < q.hom(y, z).size(); ++g)
                        for (Elem h = 0; h < q.hom(x, z).size(); ++h)
                            if (!modular_instance(q, x, y, z, f, g, h))
                                return fail("modular", {"modular", {{x, y, f}, {y, z, g}, {x, z, h}},
                                                        "gf∧h not below g(f∧g°h)"});
    return pass("modular");
}

/// Pairs of simple morphisms (f: z->y, g: z->x), ordered by apex, f, g.
inline std::vector<Span> simple_spans(const FiniteQuantaloid& q, ObjId x, ObjId y)
{
    std::vector<Span> out;
    for (ObjId z = 0; z < q.num_objects(); ++z) {
        auto fs = simple_morphisms(q, z, y);
        auto gs = simple_morphisms(q, z, x);
        for (Elem f : fs)
            for (Elem g : gs) out.push_back({z, f, g});
    }
    return out;
}

inline PredicateResult semi_simple(const FiniteQuantaloid& q)
{
    q.require_involution();
    Ops o{q};
    for (ObjId x = 0; x < q.num_objects(); ++x)
        for (ObjId y = 0; y < q.num_objects(); ++y) {
            const auto& h = q.hom(x, y);
            std::vector<bool> hit(h.size(), false);
            for (const auto& s : simple_spans(q, x, y)) hit[o.span_inv(x, y, s.apex, s.f, s.g)] = true;
            for (Elem t = 0; t < h.size(); ++t)
                if (!hit[t]) return fail("semi_simple", {"semi_simple", {{x, y, t}}, "q is no fg° with f, g simple"});
        }
    return pass("semi_simple");
}

inline Elem simple_join_below(const FiniteQuantaloid& q, ObjId x, ObjId y, Elem t, const std::vector<Span>& spans)
{
    Ops o{q};
    Elem acc = q.hom(x, y).bottom();
    for (const auto& s : spans) {
        Elem v = o.span_inv(x, y, s.apex, s.f, s.g);
        if (o.leq(x, y, v, t)) acc = o.join(x, y, acc, v);
    }
    return acc;
}

inline PredicateResult weakly_semi_simple(const FiniteQuantaloid& q)
{
    q.require_involution();
    for (ObjId x = 0; x < q.num_objects(); ++x)
        for (ObjId y = 0; y < q.num_objects(); ++y) {
            auto spans = simple_spans(q, x, y);
            for (Elem t = 0; t < q.hom(x, y).size(); ++t)
                if (Elem j = simple_join_below(q, x, y, t, spans); j != t)
                    return fail("weakly_semi_simple", {"weakly_semi_simple", {{x, y, t}},
                                                       "join of simple fg° below q is " + q.hom(x, y).name(j)});
        }
    return pass("weakly_semi_simple");
}

inline PredicateResult stably_gelfand(const FiniteQuantaloid& q)
{
    q.require_involution();
    Ops o{q};
    for (ObjId x = 0; x < q.num_objects(); ++x)
        for (ObjId y = 0; y < q.num_objects(); ++y)
            for (Elem f = 0; f < q.hom(x, y).size(); ++f) {
                Elem fff = o.c3(x, y, x, y, f, o.inv(x, y, f), f);
                if (o.leq(x, y, fff, f) && !o.leq(x, y, f, fff))
                    return fail("stably_gelfand", {"stably_gelfand", {{x, y, f}}, "ff°f ≤ f but f not below ff°f"});
            }
    return pass("stably_gelfand");
}

inline constexpr std::uint64_t kDefaultMaxCliques = std::uint64_t{1} << 20;

namespace detail {

struct BilateralPair {
    ObjId obj;    // X_i
    Elem f;       // X -> X_i
    Elem g;       // X_i -> X
    Elem gf;      // g∘f : X -> X
    Elem concl;   // (g ∧ f°)∘(g° ∧ f) : X -> X
};

} // namespace detail

/**
 * Cauchy-bilaterality. Families satisfying the two pairwise premises are
 * cliques of a compatibility graph on pairs (f: X->X_i, g: X_i->X). Both
 * the sup premise and the conclusion grow with the family, so it is enough
 * to test, along a depth-first enumeration, the first prefix whose sup
 * reaches 1_X. Pairs contributing nothing to the sup premise are dropped
 * (g∘f = 0, or (g∘f)∧1 = 0 when hom(X,X) is distributive).
 */
inline PredicateResult cauchy_bilateral(const FiniteQuantaloid& q, std::uint64_t max_nodes = kDefaultMaxCliques)
{
    q.require_involution();
    Ops o{q};
    std::uint64_t nodes = 0;
    for (ObjId x = 0; x < q.num_objects(); ++x) {
        const auto& hxx = q.hom(x, x);
        const Elem one = q.id(x);
        const bool distributive = hxx.is_locale();
        std::vector<detail::BilateralPair> cands;
        for (ObjId xi = 0; xi < q.num_objects(); ++xi)
            for (Elem f = 0; f < q.hom(x, xi).size(); ++f)
                for (Elem g = 0; g < q.hom(xi, x).size(); ++g) {
                    Elem gf = o.c(x, xi, x, g, f);
                    if (gf == hxx.bottom()) continue;
                    if (distributive && hxx.meet(gf, one) == hxx.bottom()) continue;
                    Elem left = o.meet(xi, x, g, o.inv(x, xi, f));
                    Elem right = o.meet(x, xi, o.inv(xi, x, g), f);
                    cands.push_back({xi, f, g, gf, o.c(x, xi, x, left, right)});
                }
        // premises for (j, k): f_k g_j f_j ≤ f_k and g_j f_j g_k ≤ g_k
        auto premise = [&](const detail::BilateralPair& j, const detail::BilateralPair& k) {
            return o.leq(x, k.obj, o.c(x, x, k.obj, k.f, j.gf), k.f) &&
                   o.leq(k.obj, x, o.c(k.obj, x, x, j.gf, k.g), k.g);
        };
        std::vector<std::size_t> self_ok;
        for (std::size_t i = 0; i < cands.size(); ++i)
            if (premise(cands[i], cands[i])) self_ok.push_back(i);
        const std::size_t m = self_ok.size();
        std::vector<DynBitset> compat(m, DynBitset(m));
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = a; b < m; ++b)
                if (premise(cands[self_ok[a]], cands[self_ok[b]]) && premise(cands[self_ok[b]], cands[self_ok[a]])) {
                    compat[a].set(b);
                    compat[b].set(a);
                }
        // suffix_join[i]: join of gf over candidates i..m-1, for pruning
        std::vector<Elem> suffix_join(m + 1, hxx.bottom());
        for (std::size_t i = m; i-- > 0;) suffix_join[i] = hxx.join(suffix_join[i + 1], cands[self_ok[i]].gf);

        std::vector<std::size_t> chosen;
        std::optional<Counterexample> found;
        // allowed: candidates compatible with all chosen so far
        auto dfs = [&](auto&& self, std::size_t start, const DynBitset& allowed, Elem sup, Elem concl) -> void {
            for (std::size_t i = allowed.next(start); i < m && !found; i = allowed.next(i + 1)) {
                if (!hxx.leq(one, hxx.join(sup, suffix_join[i]))) return;
                if (++nodes > max_nodes)
                    throw ResourceError("cliques", max_nodes, "Cauchy-bilaterality family search");
                const auto& c = cands[self_ok[i]];
                Elem s2 = hxx.join(sup, c.gf);
                Elem c2 = hxx.join(concl, c.concl);
                chosen.push_back(i);
                if (hxx.leq(one, s2)) {
                    if (!hxx.leq(one, c2)) {
                        Counterexample cx{"cauchy_bilateral", {}, "premises hold, 1 not below ⋁(g∧f°)(g°∧f)"};
                        for (std::size_t k : chosen) {
                            const auto& p = cands[self_ok[k]];
                            cx.morphisms.push_back({x, p.obj, p.f});
                            cx.morphisms.push_back({p.obj, x, p.g});
                        }
                        found = std::move(cx);
                    }
                } else {
                    self(self, i + 1, allowed & compat[i], s2, c2);
                }
                chosen.pop_back();
            }
        };
        DynBitset all(m);
        all.set_all();
        dfs(dfs, 0, all, hxx.bottom(), hxx.bottom());
        if (found) return fail("cauchy_bilateral", std::move(*found));
    }
    return pass("cauchy_bilateral");
}

/// f ≤ ff°f for every f (holds in every modular quantaloid).
inline PredicateResult modular_regular(const FiniteQuantaloid& q)
{
    q.require_involution();
    Ops o{q};
    for (ObjId x = 0; x < q.num_objects(); ++x)
        for (ObjId y = 0; y < q.num_objects(); ++y)
            for (Elem f = 0; f < q.hom(x, y).size(); ++f)
                if (!o.leq(x, y, f, o.c3(x, y, x, y, f, o.inv(x, y, f), f)))
                    return fail("modular_regular", {"modular_regular", {{x, y, f}}, "f not below ff°f"});
    return pass("modular_regular");
}

/// Every left adjoint has its involute as right adjoint.
inline PredicateResult left_adjoints_symmetric(const FiniteQuantaloid& q)
{
    q.require_involution();
    for (ObjId x = 0; x < q.num_objects(); ++x)
        for (ObjId y = 0; y < q.num_objects(); ++y)
            for (Elem f : q.left_adjoints(x, y))
                if (q.right_adjoint_raw(x, y, f) != q.inv(x, y, f))
                    return fail("left_adjoints_symmetric",
                                {"symmetric_left_adjoint", {{x, y, f}}, "right adjoint differs from involute"});
    return pass("left_adjoints_symmetric");
}

/// Both residuation adjunctions, at every triple.
inline PredicateResult residuation(const FiniteQuantaloid& q)
{
    const ObjId n = static_cast<ObjId>(q.num_objects());
    for (ObjId x = 0; x < n; ++x)
        for (ObjId y = 0; y < n; ++y)
            for (ObjId z = 0; z < n; ++z) {
                const auto& hxy = q.hom(x, y);
                const auto& hyz = q.hom(y, z);
                const auto& hxz = q.hom(x, z);
                for (Elem f = 0; f < hxy.size(); ++f)
                    for (Elem g = 0; g < hxz.size(); ++g) {
                        Elem ext = q.left_residual_raw(x, y, z, g, f);
                        for (Elem h = 0; h < hyz.size(); ++h)
                            if (hxz.leq(q.comp(x, y, z, h, f), g) != hyz.leq(h, ext))
                                return fail("residuation", {"residuation_left", {{y, z, h}, {x, y, f}, {x, z, g}},
                                                            "h∘f ≤ g disagrees with h ≤ g↙f"});
                    }
                for (Elem f = 0; f < hyz.size(); ++f)
                    for (Elem g = 0; g < hxz.size(); ++g) {
                        Elem lift = q.right_residual_raw(x, y, z, f, g);
                        for (Elem h = 0; h < hxy.size(); ++h)
                            if (hxz.leq(q.comp(x, y, z, f, h), g) != hxy.leq(h, lift))
                                return fail("residuation", {"residuation_right", {{y, z, f}, {x, y, h}, {x, z, g}},
                                                            "f∘h ≤ g disagrees with h ≤ f↘g"});
                    }
            }
    return pass("residuation");
}

/// Closed-crible axiomatics: locally localic, map-discrete, weakly tabular, weakly modular.
inline std::vector<PredicateResult> closed_crible_axioms(const FiniteQuantaloid& q)
{
    return {locally_localic(q), map_discrete(q), weakly_tabular(q), weakly_modular(q)};
}

inline bool all_hold(const std::vector<PredicateResult>& rs)
{
    for (const auto& r : rs)
        if (!r.holds) return false;
    return true;
}

inline bool is_closed_crible(const FiniteQuantaloid& q) { return all_hold(closed_crible_axioms(q)); }

/**
 * Involution q° = ⋁{g f* : f: Z->X, g: Z->Y left adjoints, f g* ≤ q} for
 * q: Y->X. Returns nothing unless the closed-crible axioms hold and the
 * table obeys the involution laws.
 */
inline std::optional<std::vector<std::vector<Elem>>> derived_involution(const FiniteQuantaloid& q)
{
    if (!is_closed_crible(q)) return std::nullopt;
    const ObjId n = static_cast<ObjId>(q.num_objects());
    Ops o{q};
    std::vector<std::vector<Elem>> inv(std::size_t{n} * n);
    for (ObjId y = 0; y < n; ++y)
        for (ObjId x = 0; x < n; ++x) {
            // spans (f: Z->X, g: Z->Y), f g* : Y->X
            auto spans = left_adjoint_spans(q, y, x);
            auto& row = inv[y * n + x];
            row.assign(q.hom(y, x).size(), q.hom(x, y).bottom());
            for (Elem t = 0; t < q.hom(y, x).size(); ++t)
                for (const auto& s : spans)
                    if (o.leq(y, x, o.span_adj(y, x, s), t)) {
                        Elem gfs = o.c(x, s.apex, y, s.g, o.ra(s.apex, x, s.f));
                        row[t] = o.join(x, y, row[t], gfs);
                    }
        }
    FiniteQuantaloid with = q.with_involution(inv);
    if (with.validate()) return std::nullopt;
    return inv;
}

} // namespace quantalib

#endif
