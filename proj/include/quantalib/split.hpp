#ifndef QUANTALIB_SPLIT_HPP
#define QUANTALIB_SPLIT_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "quantalib/quantaloid.hpp"

namespace quantalib {

/// Result of splitting a set of idempotents.
struct SplitQuantaloid {
    FiniteQuantaloid split;
    /// Per new object: the idempotent it splits (an endomorphism of the parent).
    std::vector<Morphism> idempotent_of;
    /// Per new hom (index a*N+b): new element -> parent element of hom(src a, src b).
    std::vector<std::vector<Elem>> parent_elt;
    /// Parent object -> new object of its identity, when every identity was split.
    std::optional<std::vector<ObjId>> embedding;

    Morphism to_parent(const Morphism& m) const
    {
        const auto& e = idempotent_of.at(m.src);
        const auto& f = idempotent_of.at(m.dst);
        return {e.src, f.src, parent_elt[m.src * split.num_objects() + m.dst].at(m.elt)};
    }

    /// Image of a parent morphism under the embedding.
    Morphism embed(const Morphism& m) const
    {
        if (!embedding) throw CapabilityError("not every identity was split");
        ObjId a = (*embedding)[m.src], b = (*embedding)[m.dst];
        const auto& tbl = parent_elt[a * split.num_objects() + b];
        auto it = std::find(tbl.begin(), tbl.end(), m.elt);
        return {a, b, static_cast<Elem>(it - tbl.begin())};
    }
};

enum class SplitInvolution { automatic, require, drop };

inline bool is_idempotent(const FiniteQuantaloid& q, const Morphism& e)
{
    return e.src == e.dst && q.comp(e.src, e.src, e.src, e.elt, e.elt) == e.elt;
}

inline bool is_symmetric_idempotent(const FiniteQuantaloid& q, const Morphism& e)
{
    return is_idempotent(q, e) && q.inv(e.src, e.src, e.elt) == e.elt;
}

inline std::vector<Morphism> idempotents(const FiniteQuantaloid& q)
{
    std::vector<Morphism> out;
    for (ObjId x = 0; x < q.num_objects(); ++x)
        for (Elem e = 0; e < q.hom(x, x).size(); ++e)
            if (is_idempotent(q, {x, x, e})) out.push_back({x, x, e});
    return out;
}

inline std::vector<Morphism> symmetric_idempotents(const FiniteQuantaloid& q)
{
    q.require_involution();
    std::vector<Morphism> out;
    for (const auto& e : idempotents(q))
        if (q.inv(e.src, e.src, e.elt) == e.elt) out.push_back(e);
    return out;
}

inline std::string split_object_name(const FiniteQuantaloid& q, const Morphism& e)
{
    return q.object_name(e.src) + "|" + q.hom(e.src, e.src).name(e.elt);
}

/**
 * Splits the idempotents in `es`. hom(e, f) is {x : f∘x = x = x∘e} with the
 * parent's order, composition is the parent's, and the identity at e is e.
 */
inline SplitQuantaloid split_idempotents(const FiniteQuantaloid& q, std::vector<Morphism> es,
                                         SplitInvolution mode = SplitInvolution::automatic)
{
    for (const auto& e : es) {
        q.check(e);
        if (!is_idempotent(q, e)) throw InputError("not an idempotent: " + q.describe(e));
    }
    bool involutive = q.has_involution();
    if (involutive)
        for (const auto& e : es)
            if (q.inv(e.src, e.src, e.elt) != e.elt) involutive = false;
    if (mode == SplitInvolution::require && !involutive)
        throw CapabilityError("inherited involution needs an involutive parent and symmetric idempotents");
    if (mode == SplitInvolution::drop) involutive = false;

    std::vector<std::pair<std::string, Morphism>> named;
    for (const auto& e : es) named.emplace_back(split_object_name(q, e), e);
    std::sort(named.begin(), named.end());
    for (std::size_t i = 1; i < named.size(); ++i)
        if (named[i].first == named[i - 1].first) throw InputError("duplicate idempotent " + named[i].first);

    const std::size_t n = named.size();
    std::vector<std::string> names;
    SplitQuantaloid out;
    for (const auto& [nm, e] : named) {
        names.push_back(nm);
        out.idempotent_of.push_back(e);
    }
    QuantaloidBuilder b(names);
    out.parent_elt.resize(n * n);
    std::vector<std::vector<Elem>> local(n * n); // parent elt -> local index
    for (ObjId a = 0; a < n; ++a)
        for (ObjId c = 0; c < n; ++c) {
            const auto& e = out.idempotent_of[a];
            const auto& f = out.idempotent_of[c];
            const auto& h = q.hom(e.src, f.src);
            std::vector<Elem> members;
            for (Elem x = 0; x < h.size(); ++x)
                if (q.comp(e.src, f.src, f.src, f.elt, x) == x && q.comp(e.src, e.src, f.src, x, e.elt) == x)
                    members.push_back(x);
            std::vector<std::string> ids;
            for (Elem x : members) ids.push_back(h.name(x));
            FiniteSupLattice l(ids, [&](std::size_t i, std::size_t j) { return h.leq(members[i], members[j]); });
            auto& pe = out.parent_elt[a * n + c];
            pe.resize(l.size());
            auto& loc = local[a * n + c];
            loc.assign(h.size(), kNoElem);
            for (Elem x : members) {
                Elem li = l.index_of(h.name(x));
                pe[li] = x;
                loc[x] = li;
            }
            b.set_hom(a, c, std::move(l));
        }
    for (ObjId a = 0; a < n; ++a) {
        const auto& ea = out.idempotent_of[a];
        b.set_identity(a, local[a * n + a][ea.elt]);
        for (ObjId c = 0; c < n; ++c)
            for (ObjId d = 0; d < n; ++d) {
                const ObjId x = ea.src, y = out.idempotent_of[c].src, z = out.idempotent_of[d].src;
                const auto& pf = out.parent_elt[a * n + c];
                const auto& pg = out.parent_elt[c * n + d];
                const auto& loc = local[a * n + d];
                b.set_composition(a, c, d, [&](Elem g, Elem f) { return loc[q.comp(x, y, z, pg[g], pf[f])]; });
            }
    }
    if (involutive)
        for (ObjId a = 0; a < n; ++a)
            for (ObjId c = 0; c < n; ++c) {
                const ObjId x = out.idempotent_of[a].src, y = out.idempotent_of[c].src;
                const auto& pf = out.parent_elt[a * n + c];
                const auto& loc = local[c * n + a];
                b.set_involution(a, c, [&](Elem f) { return loc[q.inv(x, y, pf[f])]; });
            }
    // Splitting keeps the parent's laws, so validating again would only cost time.
    out.split = b.build(false);

    std::vector<ObjId> emb(q.num_objects(), kNoElem);
    bool all = true;
    for (ObjId x = 0; x < q.num_objects(); ++x) {
        for (ObjId a = 0; a < n; ++a)
            if (out.idempotent_of[a] == q.identity(x)) emb[x] = a;
        if (emb[x] == kNoElem) all = false;
    }
    if (all) out.embedding = std::move(emb);
    return out;
}

/// Splitting at all symmetric idempotents, with the inherited involution.
inline SplitQuantaloid ssi(const FiniteQuantaloid& q)
{
    return split_idempotents(q, symmetric_idempotents(q), SplitInvolution::require);
}

/// Splitting at all idempotents (no involution).
inline SplitQuantaloid si(const FiniteQuantaloid& q)
{
    return split_idempotents(q, idempotents(q), SplitInvolution::drop);
}

} // namespace quantalib

#endif
