#ifndef QUANTALIB_REPLAY_HPP
#define QUANTALIB_REPLAY_HPP

#include <string>

#include "quantalib/error.hpp"
#include "quantalib/grothendieck.hpp"
#include "quantalib/predicates.hpp"

namespace quantalib {

namespace detail {

inline void need(const Counterexample& cx, std::size_t n)
{
    if (cx.morphisms.size() != n)
        throw InputError("counterexample '" + cx.check + "' expects " + std::to_string(n) + " morphisms");
}

} // namespace detail

/**
 * Re-evaluates the law named by cx.check at the recorded morphisms.
 * True when the law fails there, i.e. the counterexample reproduces.
 */
inline bool replay(const FiniteQuantaloid& q, const Counterexample& cx)
{
    const auto& m = cx.morphisms;
    for (const auto& f : m) q.check(f);
    Ops o{q};
    const std::string& c = cx.check;
    if (c == "left_unit") {
        detail::need(cx, 1);
        return q.comp(m[0].src, m[0].dst, m[0].dst, q.id(m[0].dst), m[0].elt) != m[0].elt;
    }
    if (c == "right_unit") {
        detail::need(cx, 1);
        return q.comp(m[0].src, m[0].src, m[0].dst, m[0].elt, q.id(m[0].src)) != m[0].elt;
    }
    if (c == "bottom_preservation") {
        detail::need(cx, 2);
        const auto& g = m[0];
        const auto& f = m[1];
        const bool zero = f.elt == q.hom(f.src, f.dst).bottom() || g.elt == q.hom(g.src, g.dst).bottom();
        return zero && q.comp(f.src, f.dst, g.dst, g.elt, f.elt) != q.hom(f.src, g.dst).bottom();
    }
    if (c == "join_preservation_right") {
        detail::need(cx, 3);
        const auto& g = m[0];
        const ObjId x = m[1].src, y = m[1].dst, z = g.dst;
        return q.comp(x, y, z, g.elt, q.hom(x, y).join(m[1].elt, m[2].elt)) !=
               q.hom(x, z).join(q.comp(x, y, z, g.elt, m[1].elt), q.comp(x, y, z, g.elt, m[2].elt));
    }
    if (c == "join_preservation_left") {
        detail::need(cx, 3);
        const auto& f = m[2];
        const ObjId x = f.src, y = f.dst, z = m[0].dst;
        return q.comp(x, y, z, q.hom(y, z).join(m[0].elt, m[1].elt), f.elt) !=
               q.hom(x, z).join(q.comp(x, y, z, m[0].elt, f.elt), q.comp(x, y, z, m[1].elt, f.elt));
    }
    if (c == "associativity") {
        detail::need(cx, 3);
        const auto &h = m[0], &g = m[1], &f = m[2];
        return q.comp(f.src, g.dst, h.dst, h.elt, q.comp(f.src, f.dst, g.dst, g.elt, f.elt)) !=
               q.comp(f.src, f.dst, h.dst, q.comp(g.src, g.dst, h.dst, h.elt, g.elt), f.elt);
    }
    if (c == "involution_unit") {
        detail::need(cx, 1);
        return q.inv(m[0].src, m[0].src, q.id(m[0].src)) != q.id(m[0].src);
    }
    if (c == "involution_twice") {
        detail::need(cx, 1);
        return q.inv(m[0].dst, m[0].src, q.inv(m[0].src, m[0].dst, m[0].elt)) != m[0].elt;
    }
    if (c == "involution_joins") {
        const ObjId x = m.at(0).src, y = m.at(0).dst;
        if (m.size() == 1) return q.inv(x, y, q.hom(x, y).bottom()) != q.hom(y, x).bottom();
        detail::need(cx, 2);
        return q.inv(x, y, q.hom(x, y).join(m[0].elt, m[1].elt)) !=
               q.hom(y, x).join(q.inv(x, y, m[0].elt), q.inv(x, y, m[1].elt));
    }
    if (c == "involution_composition") {
        detail::need(cx, 2);
        const auto &g = m[0], &f = m[1];
        const ObjId x = f.src, y = f.dst, z = g.dst;
        return q.inv(x, z, q.comp(x, y, z, g.elt, f.elt)) != q.comp(z, y, x, q.inv(x, y, f.elt), q.inv(y, z, g.elt));
    }
    if (c == "distributivity") {
        detail::need(cx, 3);
        const auto& h = q.hom(m[0].src, m[0].dst);
        return h.meet(m[0].elt, h.join(m[1].elt, m[2].elt)) !=
               h.join(h.meet(m[0].elt, m[1].elt), h.meet(m[0].elt, m[2].elt));
    }
    if (c == "map_discrete") {
        detail::need(cx, 2);
        const auto& ladj = q.left_adjoints(m[0].src, m[0].dst);
        auto is_ladj = [&](Elem e) { return std::find(ladj.begin(), ladj.end(), e) != ladj.end(); };
        return m[0].elt != m[1].elt && is_ladj(m[0].elt) && is_ladj(m[1].elt) &&
               q.hom(m[0].src, m[0].dst).leq(m[0].elt, m[1].elt);
    }
    if (c == "weakly_tabular") {
        detail::need(cx, 1);
        const ObjId x = m[0].src, y = m[0].dst;
        return weak_tabulation_join(q, x, y, m[0].elt, left_adjoint_spans(q, x, y)) != m[0].elt;
    }
    if (c == "map_tabular") {
        detail::need(cx, 1);
        const ObjId x = m[0].src, y = m[0].dst;
        return !has_map_tabulation(q, x, y, m[0].elt, left_adjoint_spans(q, x, y));
    }
    if (c == "weakly_modular") {
        detail::need(cx, 4);
        // (f: z->y, g: z->x), (m: w->y, n: w->x)
        const ObjId x = m[1].dst, y = m[0].dst;
        return !weakly_modular_instance(q, x, y, {m[0].src, m[0].elt, m[1].elt}, {m[2].src, m[2].elt, m[3].elt});
    }
    if (c == "tabular") {
        detail::need(cx, 1);
        const ObjId x = m[0].src, y = m[0].dst;
        return !has_tabulation(q, x, y, m[0].elt, left_adjoint_spans(q, x, y));
    }
    if (c == "modular") {
        detail::need(cx, 3);
        return !modular_instance(q, m[0].src, m[0].dst, m[1].dst, m[0].elt, m[1].elt, m[2].elt);
    }
    if (c == "semi_simple") {
        detail::need(cx, 1);
        const ObjId x = m[0].src, y = m[0].dst;
        for (const auto& s : simple_spans(q, x, y))
            if (o.span_inv(x, y, s.apex, s.f, s.g) == m[0].elt) return false;
        return true;
    }
    if (c == "weakly_semi_simple" || c == "simple_top") {
        detail::need(cx, 1);
        const ObjId x = m[0].src, y = m[0].dst;
        if (c == "simple_top" && m[0].elt != q.hom(x, y).top()) return false;
        return simple_join_below(q, x, y, m[0].elt, simple_spans(q, x, y)) != m[0].elt;
    }
    if (c == "stably_gelfand") {
        detail::need(cx, 1);
        const ObjId x = m[0].src, y = m[0].dst;
        const Elem f = m[0].elt, fff = o.c3(x, y, x, y, f, o.inv(x, y, f), f);
        return o.leq(x, y, fff, f) && !o.leq(x, y, f, fff);
    }
    if (c == "modular_regular") {
        detail::need(cx, 1);
        const ObjId x = m[0].src, y = m[0].dst;
        return !o.leq(x, y, m[0].elt, o.c3(x, y, x, y, m[0].elt, o.inv(x, y, m[0].elt), m[0].elt));
    }
    if (c == "symmetric_left_adjoint") {
        detail::need(cx, 1);
        const ObjId x = m[0].src, y = m[0].dst;
        return q.right_adjoint_raw(x, y, m[0].elt) != kNoElem &&
               q.right_adjoint_raw(x, y, m[0].elt) != q.inv(x, y, m[0].elt);
    }
    if (c == "residuation_left") {
        detail::need(cx, 3);
        const auto &h = m[0], &f = m[1], &g = m[2];
        const ObjId x = f.src, y = f.dst, z = h.dst;
        return q.hom(x, z).leq(q.comp(x, y, z, h.elt, f.elt), g.elt) !=
               q.hom(y, z).leq(h.elt, q.left_residual_raw(x, y, z, g.elt, f.elt));
    }
    if (c == "residuation_right") {
        detail::need(cx, 3);
        const auto &f = m[0], &h = m[1], &g = m[2];
        const ObjId x = h.src, y = h.dst, z = f.dst;
        return q.hom(x, z).leq(q.comp(x, y, z, f.elt, h.elt), g.elt) !=
               q.hom(x, y).leq(h.elt, q.right_residual_raw(x, y, z, f.elt, g.elt));
    }
    if (c == "cauchy_bilateral") {
        if (m.empty() || m.size() % 2) throw InputError("cauchy_bilateral counterexample needs (f, g) pairs");
        const ObjId x = m[0].src;
        const auto& hxx = q.hom(x, x);
        Elem sup = hxx.bottom(), concl = hxx.bottom();
        for (std::size_t j = 0; j < m.size(); j += 2) {
            const auto &fj = m[j], &gj = m[j + 1];
            const Elem gf = o.c(x, fj.dst, x, gj.elt, fj.elt);
            for (std::size_t k = 0; k < m.size(); k += 2) {
                const auto &fk = m[k], &gk = m[k + 1];
                if (!o.leq(x, fk.dst, o.c(x, x, fk.dst, fk.elt, gf), fk.elt)) return false;
                if (!o.leq(fk.dst, x, o.c(fk.dst, x, x, gf, gk.elt), gk.elt)) return false;
            }
            sup = hxx.join(sup, gf);
            Elem l = o.meet(fj.dst, x, gj.elt, o.inv(x, fj.dst, fj.elt));
            Elem r = o.meet(x, fj.dst, o.inv(fj.dst, x, gj.elt), fj.elt);
            concl = hxx.join(concl, o.c(x, fj.dst, x, l, r));
        }
        return hxx.leq(q.id(x), sup) && !hxx.leq(q.id(x), concl);
    }
    throw InputError("no replay for check '" + c + "'");
}

} // namespace quantalib

#endif
