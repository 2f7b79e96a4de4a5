#ifndef QUANTALIB_COMPLETION_HPP
#define QUANTALIB_COMPLETION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "quantalib/qcat.hpp"

namespace quantalib {

inline constexpr std::uint64_t kDefaultMaxPresheaves = 1'000'000;

/// φ(a): X -> ta for every object a, with A(a', a)∘φ(a) ≤ φ(a').
struct Presheaf {
    ObjId at;
    std::vector<Elem> v;

    friend bool operator==(const Presheaf&, const Presheaf&) = default;
    friend auto operator<=>(const Presheaf&, const Presheaf&) = default;
};

inline std::string presheaf_name(const QCategory& a, const Presheaf& p)
{
    const auto& q = *a.base();
    std::string s = q.object_name(p.at) + ":[";
    for (std::size_t i = 0; i < p.v.size(); ++i) {
        if (i) s += ",";
        s += q.hom(p.at, a.type(i)).name(p.v[i]);
    }
    return s + "]";
}

inline bool is_presheaf(const QCategory& a, const Presheaf& p)
{
    const auto& q = *a.base();
    if (p.v.size() != a.size()) return false;
    for (std::size_t x = 0; x < a.size(); ++x)
        for (std::size_t y = 0; y < a.size(); ++y)
            if (!q.hom(p.at, a.type(y)).leq(q.comp(p.at, a.type(x), a.type(y), a(y, x), p.v[x]), p.v[y]))
                return false;
    return true;
}

/// All presheaves at X, in lexicographic order of their element vectors.
inline std::vector<Presheaf> presheaves(const QCategory& a, ObjId at, std::uint64_t max_nodes = kDefaultMaxPresheaves)
{
    const auto& q = *a.base();
    const std::size_t n = a.size();
    std::vector<Presheaf> out;
    Presheaf cur{at, std::vector<Elem>(n, 0)};
    std::uint64_t nodes = 0;
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == n) {
            out.push_back(cur);
            return;
        }
        const ObjId tk = a.type(k);
        for (Elem e = 0; e < q.hom(at, tk).size(); ++e) {
            if (++nodes > max_nodes) throw ResourceError("presheaves", max_nodes, "presheaf enumeration");
            bool ok = true;
            for (std::size_t j = 0; j <= k && ok; ++j) {
                const Elem vj = j == k ? e : cur.v[j];
                const ObjId tj = a.type(j);
                // A(k, j)∘φ(j) ≤ φ(k) and A(j, k)∘φ(k) ≤ φ(j)
                ok = q.hom(at, tk).leq(q.comp(at, tj, tk, a(k, j), vj), e) &&
                     q.hom(at, tj).leq(q.comp(at, tk, tj, a(j, k), e), vj);
            }
            if (!ok) continue;
            cur.v[k] = e;
            self(self, k + 1);
        }
    };
    rec(rec, 0);
    return out;
}

/// Presheaves at every object of the base, grouped by object.
inline std::vector<Presheaf> all_presheaves(const QCategory& a, std::uint64_t max_nodes = kDefaultMaxPresheaves)
{
    std::vector<Presheaf> out;
    for (ObjId x = 0; x < a.base()->num_objects(); ++x) {
        auto p = presheaves(a, x, max_nodes);
        out.insert(out.end(), p.begin(), p.end());
    }
    return out;
}

/// [ψ, φ] = ⋀_a ψ(a)↘φ(a) : tφ -> tψ.
inline Elem presheaf_hom(const QCategory& a, const Presheaf& psi, const Presheaf& phi)
{
    const auto& q = *a.base();
    const auto& h = q.hom(phi.at, psi.at);
    Elem acc = h.top();
    for (std::size_t i = 0; i < a.size(); ++i)
        acc = h.meet(acc, q.right_residual_raw(phi.at, psi.at, a.type(i), psi.v[i], phi.v[i]));
    return acc;
}

/// A(-, a).
inline Presheaf yoneda(const QCategory& a, std::size_t x)
{
    Presheaf p{a.type(x), std::vector<Elem>(a.size())};
    for (std::size_t y = 0; y < a.size(); ++y) p.v[y] = a(y, x);
    return p;
}

/// A presheaf as a distributor *_X ⇸ A.
inline Distributor presheaf_distributor(const CatPtr& a, const Presheaf& p)
{
    CatPtr pt = point_category(a->base(), p.at);
    Matrix m(a->base(), pt->objects(), a->objects());
    for (std::size_t y = 0; y < a->size(); ++y) m.set(y, 0, p.v[y]);
    return {pt, a, std::move(m)};
}

inline bool is_left_adjoint_presheaf(const CatPtr& a, const Presheaf& p)
{
    return is_left_adjoint(presheaf_distributor(a, p));
}

inline bool is_symmetric_left_adjoint_presheaf(const CatPtr& a, const Presheaf& p)
{
    return is_symmetric_left_adjoint(presheaf_distributor(a, p));
}

/// Full subcategory of P(A) on the listed presheaves.
inline CatPtr presheaf_category(const QCategory& a, const std::vector<Presheaf>& ps)
{
    TypedSet t;
    for (const auto& p : ps) {
        t.names.push_back(presheaf_name(a, p));
        t.types.push_back(p.at);
    }
    Matrix m(a.base(), t, t);
    for (std::size_t y = 0; y < ps.size(); ++y)
        for (std::size_t x = 0; x < ps.size(); ++x) m.set(y, x, presheaf_hom(a, ps[y], ps[x]));
    return make_category(std::move(m));
}

struct Completion {
    CatPtr cat;
    std::vector<Presheaf> presheaves;
    /// A -> completion, a ↦ A(-, a).
    Functor yoneda;
};

namespace detail {

inline Completion complete_with(const CatPtr& a, std::vector<Presheaf> ps)
{
    Completion c;
    c.cat = presheaf_category(*a, ps);
    std::vector<std::size_t> map(a->size());
    for (std::size_t x = 0; x < a->size(); ++x) {
        auto it = std::find(ps.begin(), ps.end(), yoneda(*a, x));
        if (it == ps.end()) throw ConsistencyError("representable presheaf missing from completion");
        map[x] = static_cast<std::size_t>(it - ps.begin());
    }
    c.presheaves = std::move(ps);
    c.yoneda = make_functor(a, c.cat, std::move(map));
    return c;
}

} // namespace detail

/// A_cc: the left adjoint presheaves.
inline Completion cauchy_completion(const CatPtr& a, std::uint64_t max_nodes = kDefaultMaxPresheaves)
{
    std::vector<Presheaf> keep;
    for (auto& p : all_presheaves(*a, max_nodes))
        if (is_left_adjoint_presheaf(a, p)) keep.push_back(std::move(p));
    return detail::complete_with(a, std::move(keep));
}

/// A_sc: the symmetric left adjoint presheaves. A must be symmetric.
inline Completion symmetric_completion(const CatPtr& a, std::uint64_t max_nodes = kDefaultMaxPresheaves)
{
    if (!is_symmetric(*a)) throw CapabilityError("symmetric completion needs a symmetric category");
    std::vector<Presheaf> keep;
    for (auto& p : all_presheaves(*a, max_nodes))
        if (is_symmetric_left_adjoint_presheaf(a, p)) keep.push_back(std::move(p));
    auto c = detail::complete_with(a, std::move(keep));
    if (!is_symmetric(*c.cat)) throw ConsistencyError("symmetric completion is not symmetric");
    return c;
}

/// 1 ≤ A(x, y) and 1 ≤ A(y, x).
inline bool isomorphic_objects(const QCategory& a, std::size_t x, std::size_t y)
{
    if (a.type(x) != a.type(y)) return false;
    const auto& q = *a.base();
    const ObjId t = a.type(x);
    return q.hom(t, t).leq(q.id(t), a(x, y)) && q.hom(t, t).leq(q.id(t), a(y, x));
}

inline std::size_t iso_class_count(const QCategory& a)
{
    std::vector<std::size_t> reps;
    for (std::size_t x = 0; x < a.size(); ++x) {
        bool seen = false;
        for (auto r : reps) seen = seen || isomorphic_objects(a, x, r);
        if (!seen) reps.push_back(x);
    }
    return reps.size();
}

namespace detail {

inline bool represented(const CatPtr& a, const Presheaf& p)
{
    const auto& q = *a->base();
    const ObjId t = p.at;
    for (std::size_t x = 0; x < a->size(); ++x) {
        if (a->type(x) != t) continue;
        Presheaf y = yoneda(*a, x);
        if (q.hom(t, t).leq(q.id(t), presheaf_hom(*a, p, y)) && q.hom(t, t).leq(q.id(t), presheaf_hom(*a, y, p)))
            return true;
    }
    return false;
}

} // namespace detail

inline bool is_cauchy_complete(const CatPtr& a, std::uint64_t max_nodes = kDefaultMaxPresheaves)
{
    for (const auto& p : all_presheaves(*a, max_nodes))
        if (is_left_adjoint_presheaf(a, p) && !detail::represented(a, p)) return false;
    return true;
}

inline bool is_symmetrically_complete(const CatPtr& a, std::uint64_t max_nodes = kDefaultMaxPresheaves)
{
    if (!is_symmetric(*a)) throw CapabilityError("symmetric completeness needs a symmetric category");
    for (const auto& p : all_presheaves(*a, max_nodes))
        if (is_symmetric_left_adjoint_presheaf(a, p) && !detail::represented(a, p)) return false;
    return true;
}

/// The graph and cograph of Y: A -> A_cc are mutually inverse distributors.
inline bool yoneda_is_morita(const CatPtr& a, std::uint64_t max_nodes = kDefaultMaxPresheaves)
{
    auto c = cauchy_completion(a, max_nodes);
    auto g = graph_of(c.yoneda);
    auto cg = cograph_of(c.yoneda);
    return compose(cg, g).m == a->hom() && compose(g, cg).m == c.cat->hom();
}

} // namespace quantalib

#endif
