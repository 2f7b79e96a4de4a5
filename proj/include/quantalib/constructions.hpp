#ifndef QUANTALIB_CONSTRUCTIONS_HPP
#define QUANTALIB_CONSTRUCTIONS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "quantalib/completion.hpp"
#include "quantalib/predicates.hpp"
#include "quantalib/qcat.hpp"
#include "quantalib/split.hpp"

namespace quantalib {

inline constexpr std::uint64_t kDefaultMaxCategories = 1'000'000;

/// The objects of Q as a typed set, each typed by itself.
inline TypedSet object_typed_set(const FiniteQuantaloid& q)
{
    TypedSet t;
    for (ObjId x = 0; x < q.num_objects(); ++x) {
        t.names.push_back(q.object_name(x));
        t.types.push_back(x);
    }
    return t;
}

/**
 * Q^m: endo-matrices on the objects of Q under matrix composition, with
 * f ↦ M_f and the embedding into the splitting of Q^m at {M_{1_A}}.
 */
struct MoritaQuantale {
    QuantaloidPtr base;
    FiniteQuantaloid qm;
    /// element of Q^m -> its matrix entries (row-major by (b, a))
    std::vector<std::vector<Elem>> entries;
    SplitQuantaloid split;
    /// object A of Q -> object M_{1_A} of the splitting
    std::vector<ObjId> object_of;

    Elem element_of(const std::vector<Elem>& e) const { return lookup_.at(e); }

    /// M_f: zero except f at (dst, src).
    Elem matrix_of(const Morphism& f) const
    {
        const std::size_t n = base->num_objects();
        std::vector<Elem> e(n * n);
        for (ObjId b = 0; b < n; ++b)
            for (ObjId a = 0; a < n; ++a) e[b * n + a] = base->hom(a, b).bottom();
        e[f.dst * n + f.src] = f.elt;
        return element_of(e);
    }

    std::map<std::vector<Elem>, Elem> lookup_;
};

namespace detail {

inline std::string matrix_name(const FiniteQuantaloid& q, const std::vector<Elem>& e)
{
    const std::size_t n = q.num_objects();
    std::string s = "[";
    for (ObjId b = 0; b < n; ++b)
        for (ObjId a = 0; a < n; ++a) {
            if (b || a) s += ";";
            s += q.hom(a, b).name(e[b * n + a]);
        }
    return s + "]";
}

} // namespace detail

inline MoritaQuantale morita_quantale(const QuantaloidPtr& qp)
{
    const auto& q = *qp;
    const std::size_t n = q.num_objects();
    std::uint64_t total = 1;
    for (ObjId b = 0; b < n; ++b)
        for (ObjId a = 0; a < n; ++a) {
            total *= q.hom(a, b).size();
            if (total > kMaxLatticeSize)
                throw ResourceError("lattice-size", kMaxLatticeSize, "Morita quantale carrier");
        }
    std::vector<std::vector<Elem>> all;
    std::vector<Elem> cur(n * n, 0);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (std::size_t k = n * n; k-- > 0;) {
            const auto s = q.hom(static_cast<ObjId>(k % n), static_cast<ObjId>(k / n)).size();
            cur[k] = static_cast<Elem>(c % s);
            c /= s;
        }
        all.push_back(cur);
    }
    std::vector<std::string> names;
    for (const auto& e : all) names.push_back(detail::matrix_name(q, e));
    FiniteSupLattice l(names, [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < n * n; ++k)
            if (!q.hom(static_cast<ObjId>(k % n), static_cast<ObjId>(k / n)).leq(all[i][k], all[j][k])) return false;
        return true;
    });
    MoritaQuantale out;
    out.base = qp;
    out.entries.resize(l.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        Elem e = l.index_of(names[i]);
        out.entries[e] = all[i];
        out.lookup_[all[i]] = e;
    }
    auto mul = [&](Elem g, Elem f) {
        const auto& N = out.entries[g];
        const auto& M = out.entries[f];
        std::vector<Elem> r(n * n);
        for (ObjId c = 0; c < n; ++c)
            for (ObjId a = 0; a < n; ++a) {
                const auto& h = q.hom(a, c);
                Elem acc = h.bottom();
                for (ObjId b = 0; b < n; ++b) acc = h.join(acc, q.comp(a, b, c, N[c * n + b], M[b * n + a]));
                r[c * n + a] = acc;
            }
        return out.lookup_.at(r);
    };
    std::vector<Elem> delta(n * n);
    for (ObjId b = 0; b < n; ++b)
        for (ObjId a = 0; a < n; ++a) delta[b * n + a] = a == b ? q.id(a) : q.hom(a, b).bottom();
    std::function<Elem(Elem)> inv = [&](Elem f) {
        const auto& M = out.entries[f];
        std::vector<Elem> r(n * n);
        for (ObjId b = 0; b < n; ++b)
            for (ObjId a = 0; a < n; ++a) r[a * n + b] = q.inv(a, b, M[b * n + a]);
        return out.lookup_.at(r);
    };
    out.qm = make_quantale("*", l, mul, out.lookup_.at(delta), q.has_involution() ? &inv : nullptr, false);
    std::vector<Morphism> es;
    for (ObjId a = 0; a < n; ++a) es.push_back({0, 0, out.matrix_of(q.identity(a))});
    out.split = split_idempotents(out.qm, es);
    out.object_of.resize(n);
    for (ObjId a = 0; a < n; ++a)
        for (ObjId s = 0; s < n; ++s)
            if (out.split.idempotent_of[s] == es[a]) out.object_of[a] = s;
    return out;
}

/**
 * f ↦ M_f into hom(M_{1_A}, M_{1_B}) of the splitting is a bijection for
 * every A, B, and preserves composition, identities, order and involution.
 */
inline bool morita_embedding_fully_faithful(const MoritaQuantale& m)
{
    const auto& q = *m.base;
    const auto& s = m.split.split;
    const ObjId n = static_cast<ObjId>(q.num_objects());
    // local element of M_f in the splitting
    auto local = [&](ObjId a, ObjId b, Elem f) -> std::optional<Elem> {
        const auto& pe = m.split.parent_elt[m.object_of[a] * n + m.object_of[b]];
        auto it = std::find(pe.begin(), pe.end(), m.matrix_of({a, b, f}));
        if (it == pe.end()) return std::nullopt;
        return static_cast<Elem>(it - pe.begin());
    };
    for (ObjId a = 0; a < n; ++a) {
        if (local(a, a, q.id(a)) != s.id(m.object_of[a])) return false;
        for (ObjId b = 0; b < n; ++b) {
            const auto& h = q.hom(a, b);
            if (s.hom(m.object_of[a], m.object_of[b]).size() != h.size()) return false;
            for (Elem f = 0; f < h.size(); ++f) {
                auto lf = local(a, b, f);
                if (!lf) return false;
                for (Elem g = 0; g < h.size(); ++g)
                    if (h.leq(f, g) != s.hom(m.object_of[a], m.object_of[b]).leq(*lf, *local(a, b, g))) return false;
                if (q.has_involution() && s.has_involution() &&
                    s.inv(m.object_of[a], m.object_of[b], *lf) != *local(b, a, q.inv(a, b, f)))
                    return false;
                for (ObjId c = 0; c < n; ++c)
                    for (Elem g = 0; g < q.hom(b, c).size(); ++g)
                        if (s.comp(m.object_of[a], m.object_of[b], m.object_of[c], *local(b, c, g), *lf) !=
                            *local(a, c, q.comp(a, b, c, g, f)))
                            return false;
            }
        }
    }
    return true;
}

/// A splitting of Q used as the base for enumerated categories.
struct SplitContext {
    QuantaloidPtr parent;
    SplitQuantaloid split;
    QuantaloidPtr base;
    bool symmetric = true;

    /// Split object for the idempotent e of the parent, if split.
    std::optional<ObjId> object_for(const Morphism& e) const
    {
        for (ObjId a = 0; a < split.idempotent_of.size(); ++a)
            if (split.idempotent_of[a] == e) return a;
        return std::nullopt;
    }
    /// Local element of hom(a, b) for a parent element, or kNoElem.
    Elem local(ObjId a, ObjId b, Elem parent_elt) const
    {
        const auto& pe = split.parent_elt[a * split.split.num_objects() + b];
        auto it = std::find(pe.begin(), pe.end(), parent_elt);
        return it == pe.end() ? kNoElem : static_cast<Elem>(it - pe.begin());
    }
    Elem parent_of(ObjId a, ObjId b, Elem e) const { return split.parent_elt[a * split.split.num_objects() + b][e]; }
};

/// Q_ssi (symmetric) or Q_si (all idempotents, no involution) as a base.
inline SplitContext make_split_context(const QuantaloidPtr& q, bool symmetric)
{
    SplitContext c;
    c.parent = q;
    c.symmetric = symmetric;
    c.split = symmetric ? ssi(*q) : si(*q);
    c.base = std::make_shared<const FiniteQuantaloid>(c.split.split);
    return c;
}

inline bool is_normal(const QCategory& a)
{
    for (std::size_t x = 0; x < a.size(); ++x)
        if (a(x, x) != a.base()->id(a.type(x))) return false;
    return true;
}

/// P⊗P = P = P° on an endo-matrix.
inline bool is_symmetric_projection(const Matrix& p)
{
    return is_endo(p) && compose(p, p) == p && involute(p) == p;
}

/// The normal symmetric category ℙ over Q_ssi with types P(x, x) and ℙ(x', x) = P(x', x).
inline CatPtr projection_to_category(const SplitContext& ctx, const Matrix& p)
{
    if (!ctx.symmetric) throw CapabilityError("projection matrices live over the symmetric splitting");
    if (p.base() != ctx.parent) throw InputError("projection matrix is over another quantaloid");
    if (!is_symmetric_projection(p)) throw InputError("matrix is not a symmetric idempotent");
    if (!stably_gelfand(*ctx.parent).holds) throw CapabilityError("base quantaloid is not stably Gelfand");
    TypedSet t;
    for (std::size_t x = 0; x < p.dom().size(); ++x) {
        auto obj = ctx.object_for({p.dom().types[x], p.dom().types[x], p.at(x, x)});
        if (!obj) throw ConsistencyError("diagonal entry is not a symmetric idempotent");
        t.names.push_back(p.dom().names[x]);
        t.types.push_back(*obj);
    }
    Matrix m(ctx.base, t, t);
    for (std::size_t y = 0; y < t.size(); ++y)
        for (std::size_t x = 0; x < t.size(); ++x) {
            Elem e = ctx.local(t.types[x], t.types[y], p.at(y, x));
            if (e == kNoElem) throw ConsistencyError("projection entry outside the split hom");
            m.set(y, x, e);
        }
    return make_category(std::move(m));
}

/// Inverse of projection_to_category on normal symmetric categories.
inline Matrix category_to_projection(const SplitContext& ctx, const QCategory& a)
{
    if (a.base() != ctx.base) throw InputError("category is not over this splitting");
    if (!is_normal(a)) throw InputError("category is not normal");
    TypedSet t;
    for (std::size_t x = 0; x < a.size(); ++x) {
        t.names.push_back(a.name(x));
        t.types.push_back(ctx.split.idempotent_of[a.type(x)].src);
    }
    Matrix p(ctx.parent, t, t);
    for (std::size_t y = 0; y < a.size(); ++y)
        for (std::size_t x = 0; x < a.size(); ++x) p.set(y, x, ctx.parent_of(a.type(x), a.type(y), a(y, x)));
    return p;
}

/// Every symmetric projection on the typed set t.
inline std::vector<Matrix> symmetric_projections(const QuantaloidPtr& q, const TypedSet& t,
                                                 std::uint64_t max_nodes = kDefaultMaxCategories)
{
    q->require_involution();
    std::vector<Matrix> out;
    Matrix m(q, t, t);
    const std::size_t n = t.size();
    std::uint64_t nodes = 0;
    // upper triangle including the diagonal; the lower one is the involute
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = y; x < n; ++x) cells.emplace_back(y, x);
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == cells.size()) {
            if (compose(m, m) == m) out.push_back(m);
            return;
        }
        auto [y, x] = cells[k];
        for (Elem e = 0; e < m.hom(y, x).size(); ++e) {
            if (++nodes > max_nodes) throw ResourceError("categories", max_nodes, "projection enumeration");
            if (x == y && q->inv(t.types[x], t.types[x], e) != e) continue;
            m.set(y, x, e);
            m.set(x, y, q->inv(t.types[x], t.types[y], e));
            self(self, k + 1);
        }
    };
    rec(rec, 0);
    return out;
}

/// R: P -> P' and S: P' -> P with R = P'RP, S = PSP', S⊗R = P and R⊗S = P'.
inline bool projections_equivalent(const Matrix& p, const Matrix& p2, std::uint64_t max_nodes = kDefaultMaxMorita)
{
    const auto& base = p.base();
    std::vector<Matrix> rs, ss;
    std::uint64_t nodes = 0;
    auto collect = [&](const Matrix& from, const Matrix& to, std::vector<Matrix>& into) {
        Matrix m(base, from.dom(), to.dom());
        const std::size_t cells = from.dom().size() * to.dom().size();
        auto rec = [&](auto&& self, std::size_t k) -> void {
            if (k == cells) {
                if (compose(to, compose(m, from)) == m) into.push_back(m);
                return;
            }
            const std::size_t b = k / from.dom().size(), a = k % from.dom().size();
            for (Elem e = 0; e < m.hom(b, a).size(); ++e) {
                if (++nodes > max_nodes) throw ResourceError("morita", max_nodes, "projection equivalence search");
                m.set(b, a, e);
                self(self, k + 1);
            }
            m.set(b, a, m.hom(b, a).bottom());
        };
        rec(rec, 0);
    };
    collect(p, p2, rs);
    collect(p2, p, ss);
    for (const auto& r : rs)
        for (const auto& s : ss)
            if (compose(s, r) == p && compose(r, s) == p2) return true;
    return false;
}

struct Normalized {
    CatPtr cat;
    /// Γ: A ⇸ C and Γ': C ⇸ A with Γ'⊗Γ = hom(A), Γ⊗Γ' = hom(C).
    Distributor gamma;
    Distributor gamma_back;
};

/// Retypes each x at A(x, x); hom entries are kept.
inline Normalized normalize(const SplitContext& ctx, const CatPtr& a)
{
    if (a->base() != ctx.base) throw InputError("category is not over this splitting");
    TypedSet t;
    for (std::size_t x = 0; x < a->size(); ++x) {
        const ObjId src = ctx.split.idempotent_of[a->type(x)].src;
        auto obj = ctx.object_for({src, src, ctx.parent_of(a->type(x), a->type(x), (*a)(x, x))});
        if (!obj) throw ConsistencyError("diagonal hom is not a split idempotent");
        t.names.push_back(a->name(x));
        t.types.push_back(*obj);
    }
    auto entry = [&](ObjId from, ObjId to, std::size_t y, std::size_t x) {
        Elem e = ctx.local(from, to, ctx.parent_of(a->type(x), a->type(y), (*a)(y, x)));
        if (e == kNoElem) throw ConsistencyError("hom entry outside the split hom");
        return e;
    };
    Matrix c(ctx.base, t, t), g(ctx.base, a->objects(), t), gb(ctx.base, t, a->objects());
    for (std::size_t y = 0; y < a->size(); ++y)
        for (std::size_t x = 0; x < a->size(); ++x) {
            c.set(y, x, entry(t.types[x], t.types[y], y, x));
            g.set(y, x, entry(a->type(x), t.types[y], y, x));
            gb.set(y, x, entry(t.types[x], a->type(y), y, x));
        }
    Normalized out;
    out.cat = make_category(std::move(c));
    out.gamma = make_distributor(a, out.cat, std::move(g));
    out.gamma_back = make_distributor(out.cat, a, std::move(gb));
    return out;
}

inline bool normalization_witnessed(const CatPtr& a, const Normalized& n)
{
    return compose(n.gamma_back, n.gamma).m == a->hom() && compose(n.gamma, n.gamma_back).m == n.cat->hom();
}

/// Every normal category (symmetric when requested) on n objects with nondecreasing types.
inline std::vector<CatPtr> normal_categories(const QuantaloidPtr& base, std::size_t n, bool symmetric,
                                             std::uint64_t max_nodes = kDefaultMaxCategories)
{
    const auto& q = *base;
    std::vector<CatPtr> out;
    std::uint64_t nodes = 0;
    std::vector<ObjId> types(n, 0);
    auto with_types = [&]() {
        TypedSet t;
        for (std::size_t i = 0; i < n; ++i) {
            t.names.push_back("x" + std::to_string(i));
            t.types.push_back(types[i]);
        }
        Matrix m(base, t, t);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, q.id(types[i]));
        std::vector<std::pair<std::size_t, std::size_t>> cells;
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t x = symmetric ? y + 1 : 0; x < n; ++x)
                if (x != y) cells.emplace_back(y, x);
        auto rec = [&](auto&& self, std::size_t k) -> void {
            if (k == cells.size()) {
                if (is_monad(m)) out.push_back(make_category(m));
                return;
            }
            auto [y, x] = cells[k];
            for (Elem e = 0; e < m.hom(y, x).size(); ++e) {
                if (++nodes > max_nodes) throw ResourceError("categories", max_nodes, "category enumeration");
                m.set(y, x, e);
                if (symmetric) m.set(x, y, q.inv(types[x], types[y], e));
                self(self, k + 1);
            }
        };
        rec(rec, 0);
    };
    auto choose = [&](auto&& self, std::size_t i, ObjId lo) -> void {
        if (i == n) {
            with_types();
            return;
        }
        for (ObjId t = lo; t < q.num_objects(); ++t) {
            types[i] = t;
            self(self, i + 1, t);
        }
    };
    choose(choose, 0, 0);
    return out;
}

struct SheafCensus {
    std::vector<CatPtr> representatives;
    std::size_t categories = 0;
};

/**
 * Morita classes of normal (symmetric) categories over Q_ssi (or Q_si)
 * with at most max_objects objects. The representative of a class is its
 * first member in enumeration order (object count, types, entries).
 */
inline SheafCensus enumerate_sheaves(const QuantaloidPtr& q, std::size_t max_objects, bool symmetric,
                                     std::uint64_t max_morita = kDefaultMaxMorita,
                                     std::uint64_t max_categories = kDefaultMaxCategories)
{
    SheafCensus out;
    if (q->num_objects() == 0) {
        out.representatives.push_back(make_category(Matrix(q, {}, {})));
        out.categories = 1;
        return out;
    }
    if (symmetric) q->require_involution();
    SplitContext ctx = make_split_context(q, symmetric);
    for (std::size_t n = 0; n <= max_objects; ++n)
        for (const auto& c : normal_categories(ctx.base, n, symmetric, max_categories)) {
            ++out.categories;
            bool known = false;
            for (const auto& r : out.representatives)
                if (morita_equivalence(r, c, max_morita)) {
                    known = true;
                    break;
                }
            if (!known) out.representatives.push_back(c);
        }
    return out;
}

} // namespace quantalib

#endif
