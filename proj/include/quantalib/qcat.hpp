#ifndef QUANTALIB_QCAT_HPP
#define QUANTALIB_QCAT_HPP

#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "quantalib/quantaloid.hpp"

namespace quantalib {

using QuantaloidPtr = std::shared_ptr<const FiniteQuantaloid>;

/// A finite set whose members are typed by objects of the base quantaloid.
struct TypedSet {
    std::vector<std::string> names;
    std::vector<ObjId> types;

    std::size_t size() const noexcept { return names.size(); }
    friend bool operator==(const TypedSet&, const TypedSet&) = default;

    std::size_t index_of(const std::string& n) const
    {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == n) return i;
        throw InputError("unknown object '" + n + "'");
    }
};

inline TypedSet typed_singleton(std::string name, ObjId type) { return {{std::move(name)}, {type}}; }

/**
 * A matrix M: A -> B over the base: one element M(b, a) of hom(ta, tb) per
 * pair, stored row-major by b.
 */
class Matrix {
public:
    Matrix() = default;
    Matrix(QuantaloidPtr base, TypedSet dom, TypedSet cod)
        : base_(std::move(base)), dom_(std::move(dom)), cod_(std::move(cod))
    {
        if (dom_.names.size() != dom_.types.size() || cod_.names.size() != cod_.types.size())
            throw InputError("typed set with mismatched names/types");
        for (auto t : dom_.types)
            if (t >= base_->num_objects()) throw InputError("type out of range");
        for (auto t : cod_.types)
            if (t >= base_->num_objects()) throw InputError("type out of range");
        e_.resize(dom_.size() * cod_.size());
        for (std::size_t b = 0; b < cod_.size(); ++b)
            for (std::size_t a = 0; a < dom_.size(); ++a) e_[b * dom_.size() + a] = hom(b, a).bottom();
    }

    const QuantaloidPtr& base() const noexcept { return base_; }
    const TypedSet& dom() const noexcept { return dom_; }
    const TypedSet& cod() const noexcept { return cod_; }

    Elem at(std::size_t b, std::size_t a) const { return e_[b * dom_.size() + a]; }
    void set(std::size_t b, std::size_t a, Elem v)
    {
        if (v >= hom(b, a).size()) throw InputError("matrix entry out of range");
        e_[b * dom_.size() + a] = v;
    }
    /// The lattice hom(ta, tb) that entry (b, a) lives in.
    const FiniteSupLattice& hom(std::size_t b, std::size_t a) const
    {
        return base_->hom(dom_.types[a], cod_.types[b]);
    }
    const std::vector<Elem>& entries() const noexcept { return e_; }

    friend bool operator==(const Matrix& x, const Matrix& y)
    {
        return x.base_ == y.base_ && x.dom_ == y.dom_ && x.cod_ == y.cod_ && x.e_ == y.e_;
    }

private:
    QuantaloidPtr base_;
    TypedSet dom_, cod_;
    std::vector<Elem> e_;
};

inline void require_same_base(const Matrix& a, const Matrix& b)
{
    if (a.base() != b.base()) throw CompositionError("matrices over different quantaloids");
}

/// (N ⊗ M)(c, a) = ⋁_b N(c, b) ∘ M(b, a).
inline Matrix compose(const Matrix& n, const Matrix& m)
{
    require_same_base(n, m);
    if (!(m.cod() == n.dom())) throw CompositionError("matrix composition: codomain/domain mismatch");
    const auto& q = *m.base();
    Matrix r(m.base(), m.dom(), n.cod());
    for (std::size_t c = 0; c < n.cod().size(); ++c)
        for (std::size_t a = 0; a < m.dom().size(); ++a) {
            const ObjId ta = m.dom().types[a], tc = n.cod().types[c];
            const auto& l = q.hom(ta, tc);
            Elem acc = l.bottom();
            for (std::size_t b = 0; b < m.cod().size(); ++b)
                acc = l.join(acc, q.comp(ta, m.cod().types[b], tc, n.at(c, b), m.at(b, a)));
            r.set(c, a, acc);
        }
    return r;
}

/// M°(a, b) = M(b, a)°.
inline Matrix involute(const Matrix& m)
{
    const auto& q = *m.base();
    q.require_involution();
    Matrix r(m.base(), m.cod(), m.dom());
    for (std::size_t b = 0; b < m.cod().size(); ++b)
        for (std::size_t a = 0; a < m.dom().size(); ++a)
            r.set(a, b, q.inv(m.dom().types[a], m.cod().types[b], m.at(b, a)));
    return r;
}

inline void require_parallel(const Matrix& a, const Matrix& b)
{
    require_same_base(a, b);
    if (!(a.dom() == b.dom()) || !(a.cod() == b.cod())) throw CompositionError("matrices are not parallel");
}

inline Matrix meet(const Matrix& x, const Matrix& y)
{
    require_parallel(x, y);
    Matrix r = x;
    for (std::size_t b = 0; b < x.cod().size(); ++b)
        for (std::size_t a = 0; a < x.dom().size(); ++a) r.set(b, a, x.hom(b, a).meet(x.at(b, a), y.at(b, a)));
    return r;
}

inline Matrix join(const Matrix& x, const Matrix& y)
{
    require_parallel(x, y);
    Matrix r = x;
    for (std::size_t b = 0; b < x.cod().size(); ++b)
        for (std::size_t a = 0; a < x.dom().size(); ++a) r.set(b, a, x.hom(b, a).join(x.at(b, a), y.at(b, a)));
    return r;
}

inline bool leq(const Matrix& x, const Matrix& y)
{
    require_parallel(x, y);
    for (std::size_t b = 0; b < x.cod().size(); ++b)
        for (std::size_t a = 0; a < x.dom().size(); ++a)
            if (!x.hom(b, a).leq(x.at(b, a), y.at(b, a))) return false;
    return true;
}

inline Matrix zero_matrix(QuantaloidPtr base, TypedSet dom, TypedSet cod)
{
    return Matrix(std::move(base), std::move(dom), std::move(cod));
}

/// Kronecker delta: identities on the diagonal, zero elsewhere.
inline Matrix identity_matrix(QuantaloidPtr base, const TypedSet& t)
{
    Matrix r(base, t, t);
    for (std::size_t a = 0; a < t.size(); ++a) r.set(a, a, base->id(t.types[a]));
    return r;
}

/// Lifting Φ↘Θ: C -> A for Φ: A -> B, Θ: C -> B; (Φ↘Θ)(a,c) = ⋀_b Φ(b,a)↘Θ(b,c).
inline Matrix lift(const Matrix& phi, const Matrix& theta)
{
    require_same_base(phi, theta);
    if (!(phi.cod() == theta.cod())) throw CompositionError("lifting needs a common codomain");
    const auto& q = *phi.base();
    Matrix r(phi.base(), theta.dom(), phi.dom());
    for (std::size_t a = 0; a < phi.dom().size(); ++a)
        for (std::size_t c = 0; c < theta.dom().size(); ++c) {
            const ObjId ta = phi.dom().types[a], tc = theta.dom().types[c];
            const auto& l = q.hom(tc, ta);
            Elem acc = l.top();
            for (std::size_t b = 0; b < phi.cod().size(); ++b)
                acc = l.meet(acc, q.right_residual_raw(tc, ta, phi.cod().types[b], phi.at(b, a), theta.at(b, c)));
            r.set(a, c, acc);
        }
    return r;
}

/// Extension Θ↙Φ: B -> C for Θ: A -> C, Φ: A -> B; (Θ↙Φ)(c,b) = ⋀_a Θ(c,a)↙Φ(b,a).
inline Matrix extend(const Matrix& theta, const Matrix& phi)
{
    require_same_base(phi, theta);
    if (!(phi.dom() == theta.dom())) throw CompositionError("extension needs a common domain");
    const auto& q = *phi.base();
    Matrix r(phi.base(), phi.cod(), theta.cod());
    for (std::size_t c = 0; c < theta.cod().size(); ++c)
        for (std::size_t b = 0; b < phi.cod().size(); ++b) {
            const ObjId tb = phi.cod().types[b], tc = theta.cod().types[c];
            const auto& l = q.hom(tb, tc);
            Elem acc = l.top();
            for (std::size_t a = 0; a < phi.dom().size(); ++a)
                acc = l.meet(acc, q.left_residual_raw(phi.dom().types[a], tb, tc, theta.at(c, a), phi.at(b, a)));
            r.set(c, b, acc);
        }
    return r;
}

inline bool is_endo(const Matrix& m) { return m.dom() == m.cod(); }

/// Δ ≤ M and M ⊗ M ≤ M.
inline bool is_monad(const Matrix& m)
{
    if (!is_endo(m)) return false;
    return leq(identity_matrix(m.base(), m.dom()), m) && leq(compose(m, m), m);
}
inline bool is_symmetric_monad(const Matrix& m) { return is_monad(m) && involute(m) == m; }
inline bool is_antisymmetric_monad(const Matrix& m)
{
    return is_monad(m) && meet(m, involute(m)) == identity_matrix(m.base(), m.dom());
}

/// Injections s_i: A_i -> ⊕A and projections p_i: ⊕A -> A_i.
struct DirectSum {
    TypedSet sum;
    std::vector<Matrix> injections;
    std::vector<Matrix> projections;
};

inline DirectSum direct_sum(const QuantaloidPtr& base, const std::vector<TypedSet>& parts)
{
    DirectSum d;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t a = 0; a < parts[i].size(); ++a) {
            d.sum.names.push_back(std::to_string(i) + ":" + parts[i].names[a]);
            d.sum.types.push_back(parts[i].types[a]);
        }
    std::size_t off = 0;
    for (const auto& p : parts) {
        Matrix s(base, p, d.sum), pr(base, d.sum, p);
        for (std::size_t a = 0; a < p.size(); ++a) {
            s.set(off + a, a, base->id(p.types[a]));
            pr.set(a, off + a, base->id(p.types[a]));
        }
        d.injections.push_back(std::move(s));
        d.projections.push_back(std::move(pr));
        off += p.size();
    }
    return d;
}

/// p_i ∘ s_j = δ_ij and ⋁_i s_i ∘ p_i = Δ.
inline bool verify_direct_sum(const QuantaloidPtr& base, const DirectSum& d, const std::vector<TypedSet>& parts)
{
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = 0; j < parts.size(); ++j) {
            Matrix ps = compose(d.projections[i], d.injections[j]);
            Matrix want = i == j ? identity_matrix(base, parts[i]) : zero_matrix(base, parts[j], parts[i]);
            if (!(ps == want)) return false;
        }
    Matrix acc = zero_matrix(base, d.sum, d.sum);
    for (std::size_t i = 0; i < parts.size(); ++i) acc = join(acc, compose(d.injections[i], d.projections[i]));
    return acc == identity_matrix(base, d.sum);
}

/**
 * A category enriched in the base: typed objects and hom(y, x) = A(y, x) in
 * hom(tx, ty), stored as the endo-matrix of a monad.
 */
class QCategory {
public:
    QCategory() = default;

    /// Throws InputError unless the matrix is a monad.
    explicit QCategory(Matrix hom, bool validate = true) : hom_(std::move(hom))
    {
        if (!is_endo(hom_)) throw InputError("category hom must be an endo-matrix");
        std::set<std::string> seen(hom_.dom().names.begin(), hom_.dom().names.end());
        if (seen.size() != hom_.dom().size()) throw InputError("duplicate object names in category");
        if (validate && !is_monad(hom_)) throw InputError("hom matrix violates composition or unit axioms");
    }

    const QuantaloidPtr& base() const noexcept { return hom_.base(); }
    const TypedSet& objects() const noexcept { return hom_.dom(); }
    std::size_t size() const noexcept { return hom_.dom().size(); }
    ObjId type(std::size_t x) const { return hom_.dom().types[x]; }
    const std::string& name(std::size_t x) const { return hom_.dom().names[x]; }
    /// A(y, x): tx -> ty.
    Elem operator()(std::size_t y, std::size_t x) const { return hom_.at(y, x); }
    const Matrix& hom() const noexcept { return hom_; }

    friend bool operator==(const QCategory& a, const QCategory& b) { return a.hom_ == b.hom_; }

private:
    Matrix hom_;
};

using CatPtr = std::shared_ptr<const QCategory>;

inline CatPtr make_category(Matrix hom) { return std::make_shared<const QCategory>(std::move(hom)); }

inline CatPtr discrete_category(const QuantaloidPtr& base, const TypedSet& t)
{
    return make_category(identity_matrix(base, t));
}

/// One object of type x with identity hom.
inline CatPtr point_category(const QuantaloidPtr& base, ObjId x, std::string name = "*")
{
    return discrete_category(base, typed_singleton(std::move(name), x));
}

inline bool is_symmetric(const QCategory& a)
{
    const auto& q = *a.base();
    q.require_involution();
    for (std::size_t x = 0; x < a.size(); ++x)
        for (std::size_t y = 0; y < a.size(); ++y)
            if (a(x, y) != q.inv(a.type(x), a.type(y), a(y, x))) return false;
    return true;
}

/// A_s(y, x) = A(y, x) ∧ A(x, y)°.
inline CatPtr symmetrise(const QCategory& a)
{
    const auto& q = *a.base();
    q.require_involution();
    Matrix m = a.hom();
    for (std::size_t y = 0; y < a.size(); ++y)
        for (std::size_t x = 0; x < a.size(); ++x)
            m.set(y, x, q.hom(a.type(x), a.type(y)).meet(a(y, x), q.inv(a.type(y), a.type(x), a(x, y))));
    return make_category(std::move(m));
}

/// Full subcategory on the listed objects (in the given order).
inline CatPtr full_subcategory(const QCategory& a, const std::vector<std::size_t>& keep)
{
    TypedSet t;
    for (auto k : keep) {
        t.names.push_back(a.name(k));
        t.types.push_back(a.type(k));
    }
    Matrix m(a.base(), t, t);
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j) m.set(i, j, a(keep[i], keep[j]));
    return make_category(std::move(m));
}

/// Objects (a, b) with ta = tb; hom is the meet of the component homs.
inline CatPtr product(const QCategory& a, const QCategory& b)
{
    if (a.base() != b.base()) throw CompositionError("categories over different quantaloids");
    TypedSet t;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (a.type(i) == b.type(j)) {
                pairs.emplace_back(i, j);
                t.names.push_back("(" + a.name(i) + "," + b.name(j) + ")");
                t.types.push_back(a.type(i));
            }
    Matrix m(a.base(), t, t);
    for (std::size_t y = 0; y < pairs.size(); ++y)
        for (std::size_t x = 0; x < pairs.size(); ++x)
            m.set(y, x, m.hom(y, x).meet(a(pairs[y].first, pairs[x].first), b(pairs[y].second, pairs[x].second)));
    return make_category(std::move(m));
}

/// A distributor Φ: A ⇸ B with elements Φ(b, a): ta -> tb.
struct Distributor {
    CatPtr dom;
    CatPtr cod;
    Matrix m;

    Elem operator()(std::size_t b, std::size_t a) const { return m.at(b, a); }
    friend bool operator==(const Distributor& x, const Distributor& y)
    {
        return x.dom == y.dom && x.cod == y.cod && x.m == y.m;
    }
};

/// B ⊗ Φ ≤ Φ and Φ ⊗ A ≤ Φ.
inline bool satisfies_actions(const Distributor& d)
{
    return leq(compose(d.cod->hom(), d.m), d.m) && leq(compose(d.m, d.dom->hom()), d.m);
}

inline Distributor make_distributor(CatPtr dom, CatPtr cod, Matrix m, bool validate = true)
{
    if (!(m.dom() == dom->objects()) || !(m.cod() == cod->objects()))
        throw CompositionError("distributor matrix does not match its categories");
    Distributor d{std::move(dom), std::move(cod), std::move(m)};
    if (validate && !satisfies_actions(d)) throw InputError("matrix violates the distributor action axioms");
    return d;
}

/// hom(A) as the identity distributor A ⇸ A.
inline Distributor identity_distributor(const CatPtr& a) { return {a, a, a->hom()}; }

inline Distributor compose(const Distributor& psi, const Distributor& phi)
{
    if (phi.cod != psi.dom && !(*phi.cod == *psi.dom))
        throw CompositionError("distributor composition: categories do not match");
    return {phi.dom, psi.cod, compose(psi.m, phi.m)};
}

inline Distributor involute(const Distributor& phi)
{
    if (!is_symmetric(*phi.dom) || !is_symmetric(*phi.cod))
        throw CapabilityError("involute of a distributor needs symmetric endpoint categories");
    return {phi.cod, phi.dom, involute(phi.m)};
}

inline bool leq(const Distributor& a, const Distributor& b) { return leq(a.m, b.m); }

/// The right adjoint of Φ when it exists: Ψ = Φ↘hom(B), checked against unit and counit.
inline std::optional<Distributor> right_adjoint(const Distributor& phi)
{
    Matrix psi = lift(phi.m, phi.cod->hom());
    if (!leq(phi.dom->hom(), compose(psi, phi.m))) return std::nullopt;
    if (!leq(compose(phi.m, psi), phi.cod->hom())) return std::nullopt;
    return Distributor{phi.cod, phi.dom, std::move(psi)};
}

inline bool is_left_adjoint(const Distributor& phi) { return right_adjoint(phi).has_value(); }

/// Left adjoint whose right adjoint is its involute.
inline bool is_symmetric_left_adjoint(const Distributor& phi)
{
    auto r = right_adjoint(phi);
    return r && r->m == involute(phi.m);
}

/**
 * Calls `visit` on every distributor dom ⇸ cod (entries filled column by
 * column, pruned on the action axioms) until it returns false. Counts
 * partial assignments against `max_nodes`.
 */
inline void for_each_distributor(const CatPtr& dom, const CatPtr& cod, std::uint64_t max_nodes, const std::string& cap,
                                 const std::function<bool(const Distributor&)>& visit)
{
    const auto& q = *dom->base();
    const std::size_t na = dom->size(), nb = cod->size();
    Matrix m(dom->base(), dom->objects(), cod->objects());
    std::uint64_t nodes = 0;
    bool stop = false;
    // cell k = (b, a) with a = k / nb, b = k % nb
    auto ok_at = [&](std::size_t b, std::size_t a) {
        const ObjId ta = dom->type(a), tb = cod->type(b);
        for (std::size_t k = 0; k < na * nb; ++k) {
            const std::size_t a2 = k / nb, b2 = k % nb;
            if (a2 > a || (a2 == a && b2 > b)) break;
            const ObjId ta2 = dom->type(a2), tb2 = cod->type(b2);
            // B(b, b2)∘Φ(b2, a) ≤ Φ(b, a) when a2 == a; Φ(b, a2)∘A(a2, a) ≤ Φ(b, a) when b2 == b
            if (a2 == a) {
                if (!q.hom(ta, tb).leq(q.comp(ta, tb2, tb, (*cod)(b, b2), m.at(b2, a)), m.at(b, a))) return false;
                if (!q.hom(ta, tb2).leq(q.comp(ta, tb, tb2, (*cod)(b2, b), m.at(b, a)), m.at(b2, a))) return false;
            }
            if (b2 == b) {
                if (!q.hom(ta, tb).leq(q.comp(ta, ta2, tb, m.at(b, a2), (*dom)(a2, a)), m.at(b, a))) return false;
                if (!q.hom(ta2, tb).leq(q.comp(ta2, ta, tb, m.at(b, a), (*dom)(a, a2)), m.at(b, a2))) return false;
            }
        }
        return true;
    };
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (stop) return;
        if (k == na * nb) {
            if (!visit(Distributor{dom, cod, m})) stop = true;
            return;
        }
        const std::size_t a = k / nb, b = k % nb;
        for (Elem e = 0; e < m.hom(b, a).size() && !stop; ++e) {
            if (++nodes > max_nodes) throw ResourceError(cap, max_nodes, "distributor enumeration");
            m.set(b, a, e);
            if (ok_at(b, a)) self(self, k + 1);
        }
        m.set(b, a, m.hom(b, a).bottom());
    };
    rec(rec, 0);
}

inline constexpr std::uint64_t kDefaultMaxMorita = 1'000'000;

/// A pair Φ: A ⇸ B, Ψ: B ⇸ A with Ψ⊗Φ = hom(A) and Φ⊗Ψ = hom(B), if one exists.
inline std::optional<std::pair<Distributor, Distributor>> morita_equivalence(const CatPtr& a, const CatPtr& b,
                                                                             std::uint64_t max_nodes = kDefaultMaxMorita)
{
    std::optional<std::pair<Distributor, Distributor>> found;
    for_each_distributor(a, b, max_nodes, "morita", [&](const Distributor& phi) {
        auto psi = right_adjoint(phi);
        if (psi && compose(*psi, phi).m == a->hom() && compose(phi, *psi).m == b->hom()) {
            found.emplace(phi, *psi);
            return false;
        }
        return true;
    });
    return found;
}

struct Functor {
    CatPtr dom;
    CatPtr cod;
    std::vector<std::size_t> map;

    friend bool operator==(const Functor&, const Functor&) = default;
};

/// Types preserved and A(y, x) ≤ B(Fy, Fx).
inline bool is_functor(const Functor& f)
{
    if (f.map.size() != f.dom->size()) return false;
    const auto& a = *f.dom;
    const auto& b = *f.cod;
    for (std::size_t x = 0; x < a.size(); ++x)
        if (f.map[x] >= b.size() || a.type(x) != b.type(f.map[x])) return false;
    for (std::size_t y = 0; y < a.size(); ++y)
        for (std::size_t x = 0; x < a.size(); ++x)
            if (!a.base()->hom(a.type(x), a.type(y)).leq(a(y, x), b(f.map[y], f.map[x]))) return false;
    return true;
}

inline Functor make_functor(CatPtr dom, CatPtr cod, std::vector<std::size_t> map)
{
    Functor f{std::move(dom), std::move(cod), std::move(map)};
    if (!is_functor(f)) throw InputError("object map is not a functor");
    return f;
}

inline Functor identity_functor(const CatPtr& a)
{
    std::vector<std::size_t> m(a->size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = i;
    return {a, a, std::move(m)};
}

/// F ≤ G when 1 ≤ B(Fx, Gx) for every x.
inline bool functor_leq(const Functor& f, const Functor& g)
{
    const auto& b = *f.cod;
    for (std::size_t x = 0; x < f.dom->size(); ++x) {
        ObjId t = f.dom->type(x);
        if (!b.base()->hom(t, t).leq(b.base()->id(t), b(f.map[x], g.map[x]))) return false;
    }
    return true;
}

/// B(-, F-): A ⇸ B.
inline Distributor graph_of(const Functor& f)
{
    const auto& b = *f.cod;
    Matrix m(b.base(), f.dom->objects(), b.objects());
    for (std::size_t y = 0; y < b.size(); ++y)
        for (std::size_t x = 0; x < f.dom->size(); ++x) m.set(y, x, b(y, f.map[x]));
    return {f.dom, f.cod, std::move(m)};
}

/// B(F-, -): B ⇸ A.
inline Distributor cograph_of(const Functor& f)
{
    const auto& b = *f.cod;
    Matrix m(b.base(), b.objects(), f.dom->objects());
    for (std::size_t x = 0; x < f.dom->size(); ++x)
        for (std::size_t y = 0; y < b.size(); ++y) m.set(x, y, b(f.map[x], y));
    return {f.cod, f.dom, std::move(m)};
}

/// First functor F (in object order) with B(-, F-) = Φ.
inline std::optional<Functor> representing_functor(const Distributor& phi)
{
    const auto& a = *phi.dom;
    const auto& b = *phi.cod;
    std::vector<std::size_t> map(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) {
        bool found = false;
        for (std::size_t c = 0; c < b.size() && !found; ++c) {
            if (b.type(c) != a.type(x)) continue;
            bool same = true;
            for (std::size_t y = 0; y < b.size() && same; ++y) same = b(y, c) == phi(y, x);
            if (same) {
                map[x] = c;
                found = true;
            }
        }
        if (!found) return std::nullopt;
    }
    Functor f{phi.dom, phi.cod, std::move(map)};
    if (!is_functor(f)) return std::nullopt;
    return f;
}

/// R: full subcategory of A×B on pairs with 1 ≤ Φ(b, a), with projections T: R -> A, S: R -> B.
struct MapTabulation {
    CatPtr r;
    Functor t;
    Functor s;
    /// B(-, S-) ⊗ A(T-, -) : A ⇸ B.
    Distributor composite;
};

inline MapTabulation map_tabulation(const Distributor& phi)
{
    const auto& a = *phi.dom;
    const auto& b = *phi.cod;
    const auto& q = *a.base();
    TypedSet t;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (a.type(i) == b.type(j) && q.hom(a.type(i), a.type(i)).leq(q.id(a.type(i)), phi(j, i))) {
                pairs.emplace_back(i, j);
                t.names.push_back("(" + a.name(i) + "," + b.name(j) + ")");
                t.types.push_back(a.type(i));
            }
    Matrix m(a.base(), t, t);
    for (std::size_t y = 0; y < pairs.size(); ++y)
        for (std::size_t x = 0; x < pairs.size(); ++x)
            m.set(y, x, m.hom(y, x).meet(a(pairs[y].first, pairs[x].first), b(pairs[y].second, pairs[x].second)));
    CatPtr r = make_category(std::move(m));
    std::vector<std::size_t> tm, sm;
    for (auto [i, j] : pairs) {
        tm.push_back(i);
        sm.push_back(j);
    }
    Functor tf = make_functor(r, phi.dom, tm);
    Functor sf = make_functor(r, phi.cod, sm);
    Distributor comp = compose(graph_of(sf), cograph_of(tf));
    return {r, std::move(tf), std::move(sf), std::move(comp)};
}

} // namespace quantalib

#endif
