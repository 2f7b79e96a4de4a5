#ifndef QUANTALIB_QUANTALOID_HPP
#define QUANTALIB_QUANTALOID_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "quantalib/error.hpp"
#include "quantalib/lattice.hpp"

namespace quantalib {

using ObjId = std::uint32_t;

inline constexpr Elem kNoElem = std::numeric_limits<Elem>::max();

/// An element of hom(src, dst).
struct Morphism {
    ObjId src = 0;
    ObjId dst = 0;
    Elem elt = 0;

    friend auto operator<=>(const Morphism&, const Morphism&) = default;
};

/// Machine-checkable witness that some law fails. `check` names the law;
/// `morphisms` lists the morphisms it was instantiated at, in the order the
/// law's replay expects them.
struct Counterexample {
    std::string check;
    std::vector<Morphism> morphisms;
    std::string detail;
};

/**
 * A finite quantaloid, optionally involutive.
 *
 * Objects are dense ids in sorted order of their names. hom(x, y) is the
 * lattice of morphisms x -> y. Composition, identities and the involution
 * are stored as full tables. A value may be constructed without checking
 * the axioms (see validate()); loaders and builders validate by default.
 */
class FiniteQuantaloid {
public:
    FiniteQuantaloid() = default;

    /// Raw constructor: `homs` is indexed x*N+y, `comp` by (x*N+y)*N+z with
    /// entries g*|hom(x,y)|+f, `inv` (if present) by x*N+y mapping into hom(y,x).
    FiniteQuantaloid(std::vector<std::string> objects, std::vector<FiniteSupLattice> homs,
                     std::vector<std::vector<Elem>> comp, std::vector<Elem> ids,
                     std::optional<std::vector<std::vector<Elem>>> inv)
        : objects_(std::move(objects)), homs_(std::move(homs)), comp_(std::move(comp)),
          ids_(std::move(ids)), inv_(std::move(inv))
    {
        const std::size_t n = objects_.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (i > 0 && !(objects_[i - 1] < objects_[i]))
                throw InputError("object ids must be distinct and sorted");
            index_.emplace(objects_[i], static_cast<ObjId>(i));
        }
        if (homs_.size() != n * n || comp_.size() != n * n * n || ids_.size() != n)
            throw InputError("quantaloid tables have inconsistent dimensions");
        for (ObjId x = 0; x < n; ++x)
            for (ObjId y = 0; y < n; ++y)
                for (ObjId z = 0; z < n; ++z) {
                    const auto& t = comp_[cidx(x, y, z)];
                    if (t.size() != hom(y, z).size() * hom(x, y).size())
                        throw InputError("composition table size mismatch");
                    for (Elem r : t)
                        if (r >= hom(x, z).size()) throw InputError("composition result out of range");
                }
        for (ObjId x = 0; x < n; ++x)
            if (ids_[x] >= hom(x, x).size()) throw InputError("identity out of range");
        if (inv_) {
            if (inv_->size() != n * n) throw InputError("involution table size mismatch");
            for (ObjId x = 0; x < n; ++x)
                for (ObjId y = 0; y < n; ++y) {
                    const auto& t = (*inv_)[x * n + y];
                    if (t.size() != hom(x, y).size()) throw InputError("involution table size mismatch");
                    for (Elem r : t)
                        if (r >= hom(y, x).size()) throw InputError("involution result out of range");
                }
        }
        compute_adjoints();
    }

    std::size_t num_objects() const noexcept { return objects_.size(); }
    const std::vector<std::string>& objects() const noexcept { return objects_; }
    const std::string& object_name(ObjId x) const { return objects_.at(x); }
    ObjId object(const std::string& name) const
    {
        auto it = index_.find(name);
        if (it == index_.end()) throw InputError("unknown object '" + name + "'");
        return it->second;
    }

    const FiniteSupLattice& hom(ObjId x, ObjId y) const { return homs_[x * num_objects() + y]; }

    bool has_involution() const noexcept { return inv_.has_value(); }

    /// g∘f for f: x->y, g: y->z (raw indices, no checks).
    Elem comp(ObjId x, ObjId y, ObjId z, Elem g, Elem f) const
    {
        return comp_[cidx(x, y, z)][g * hom(x, y).size() + f];
    }
    Elem id(ObjId x) const { return ids_[x]; }
    Elem inv(ObjId x, ObjId y, Elem f) const
    {
        require_involution();
        return (*inv_)[x * num_objects() + y][f];
    }

    Morphism identity(ObjId x) const { return {x, x, ids_.at(x)}; }
    Morphism bottom(ObjId x, ObjId y) const { return {x, y, hom(x, y).bottom()}; }
    Morphism top(ObjId x, ObjId y) const { return {x, y, hom(x, y).top()}; }

    /// Builds a checked morphism from names.
    Morphism morphism(const std::string& src, const std::string& dst, const std::string& elt) const
    {
        ObjId x = object(src), y = object(dst);
        return {x, y, hom(x, y).index_of(elt)};
    }

    std::string describe(const Morphism& m) const
    {
        return hom(m.src, m.dst).name(m.elt) + ":" + objects_[m.src] + "->" + objects_[m.dst];
    }

    Morphism compose(const Morphism& g, const Morphism& f) const
    {
        check(f);
        check(g);
        if (f.dst != g.src)
            throw CompositionError("cannot compose " + describe(g) + " after " + describe(f));
        return {f.src, g.dst, comp(f.src, f.dst, g.dst, g.elt, f.elt)};
    }

    bool leq(const Morphism& a, const Morphism& b) const
    {
        same_hom(a, b);
        return hom(a.src, a.dst).leq(a.elt, b.elt);
    }
    Morphism join(const Morphism& a, const Morphism& b) const
    {
        same_hom(a, b);
        return {a.src, a.dst, hom(a.src, a.dst).join(a.elt, b.elt)};
    }
    Morphism meet(const Morphism& a, const Morphism& b) const
    {
        same_hom(a, b);
        return {a.src, a.dst, hom(a.src, a.dst).meet(a.elt, b.elt)};
    }

    Morphism involute(const Morphism& f) const
    {
        check(f);
        return {f.dst, f.src, inv(f.src, f.dst, f.elt)};
    }

    /// Extension g↙f = ⋁{h : h∘f ≤ g} for g: X->Z, f: X->Y; result Y->Z.
    Morphism left_residual(const Morphism& g, const Morphism& f) const
    {
        check(f);
        check(g);
        if (f.src != g.src)
            throw CompositionError("left residual needs a common source: " + describe(g) + ", " + describe(f));
        return {f.dst, g.dst, left_residual_raw(f.src, f.dst, g.dst, g.elt, f.elt)};
    }

    /// Lifting f↘g = ⋁{h : f∘h ≤ g} for f: Y->Z, g: X->Z; result X->Y.
    Morphism right_residual(const Morphism& f, const Morphism& g) const
    {
        check(f);
        check(g);
        if (f.dst != g.dst)
            throw CompositionError("right residual needs a common target: " + describe(f) + ", " + describe(g));
        return {g.src, f.src, right_residual_raw(g.src, f.src, f.dst, f.elt, g.elt)};
    }

    /// g↙f with f: x->y, g: x->z.
    Elem left_residual_raw(ObjId x, ObjId y, ObjId z, Elem g, Elem f) const
    {
        const auto& hyz = hom(y, z);
        const auto& hxz = hom(x, z);
        Elem r = hyz.bottom();
        for (Elem h = 0; h < hyz.size(); ++h)
            if (hxz.leq(comp(x, y, z, h, f), g)) r = hyz.join(r, h);
        return r;
    }

    /// f↘g with f: y->z, g: x->z.
    Elem right_residual_raw(ObjId x, ObjId y, ObjId z, Elem f, Elem g) const
    {
        const auto& hxy = hom(x, y);
        const auto& hxz = hom(x, z);
        Elem r = hxy.bottom();
        for (Elem h = 0; h < hxy.size(); ++h)
            if (hxz.leq(comp(x, y, z, f, h), g)) r = hxy.join(r, h);
        return r;
    }

    /// The right adjoint of f when f is a left adjoint.
    std::optional<Morphism> right_adjoint_of(const Morphism& f) const
    {
        check(f);
        Elem g = radj_[f.src * num_objects() + f.dst][f.elt];
        if (g == kNoElem) return std::nullopt;
        return Morphism{f.dst, f.src, g};
    }
    Elem right_adjoint_raw(ObjId x, ObjId y, Elem f) const { return radj_[x * num_objects() + y][f]; }

    /// Left adjoints in hom(x, y), ascending.
    const std::vector<Elem>& left_adjoints(ObjId x, ObjId y) const { return ladj_[x * num_objects() + y]; }

    bool is_symmetric_left_adjoint(const Morphism& f) const
    {
        require_involution();
        auto r = right_adjoint_of(f);
        return r && *r == involute(f);
    }

    /// First violated axiom, or nothing when the tables form an (involutive) quantaloid.
    std::optional<Counterexample> validate() const
    {
        const ObjId n = static_cast<ObjId>(num_objects());
        for (ObjId x = 0; x < n; ++x)
            for (ObjId y = 0; y < n; ++y) {
                const auto& hxy = hom(x, y);
                for (Elem f = 0; f < hxy.size(); ++f) {
                    if (comp(x, y, y, id(y), f) != f)
                        return Counterexample{"left_unit", {{x, y, f}}, "1∘f != f"};
                    if (comp(x, x, y, f, id(x)) != f)
                        return Counterexample{"right_unit", {{x, y, f}}, "f∘1 != f"};
                }
            }
        for (ObjId x = 0; x < n; ++x)
            for (ObjId y = 0; y < n; ++y)
                for (ObjId z = 0; z < n; ++z) {
                    const auto& hxy = hom(x, y);
                    const auto& hyz = hom(y, z);
                    const auto& hxz = hom(x, z);
                    for (Elem g = 0; g < hyz.size(); ++g) {
                        if (comp(x, y, z, g, hxy.bottom()) != hxz.bottom())
                            return Counterexample{"bottom_preservation", {{y, z, g}, {x, y, hxy.bottom()}}, "g∘0 != 0"};
                        for (Elem f1 = 0; f1 < hxy.size(); ++f1)
                            for (Elem f2 = f1 + 1; f2 < hxy.size(); ++f2)
                                if (comp(x, y, z, g, hxy.join(f1, f2)) !=
                                    hxz.join(comp(x, y, z, g, f1), comp(x, y, z, g, f2)))
                                    return Counterexample{"join_preservation_right",
                                                          {{y, z, g}, {x, y, f1}, {x, y, f2}},
                                                          "g∘(f1∨f2) != g∘f1 ∨ g∘f2"};
                    }
                    for (Elem f = 0; f < hxy.size(); ++f) {
                        if (comp(x, y, z, hyz.bottom(), f) != hxz.bottom())
                            return Counterexample{"bottom_preservation", {{y, z, hyz.bottom()}, {x, y, f}}, "0∘f != 0"};
                        for (Elem g1 = 0; g1 < hyz.size(); ++g1)
                            for (Elem g2 = g1 + 1; g2 < hyz.size(); ++g2)
                                if (comp(x, y, z, hyz.join(g1, g2), f) !=
                                    hxz.join(comp(x, y, z, g1, f), comp(x, y, z, g2, f)))
                                    return Counterexample{"join_preservation_left",
                                                          {{y, z, g1}, {y, z, g2}, {x, y, f}},
                                                          "(g1∨g2)∘f != g1∘f ∨ g2∘f"};
                    }
                }
        for (ObjId x = 0; x < n; ++x)
            for (ObjId y = 0; y < n; ++y)
                for (ObjId z = 0; z < n; ++z)
                    for (ObjId w = 0; w < n; ++w) {
                        const auto& hxy = hom(x, y);
                        const auto& hyz = hom(y, z);
                        const auto& hzw = hom(z, w);
                        for (Elem f = 0; f < hxy.size(); ++f)
                            for (Elem g = 0; g < hyz.size(); ++g) {
                                Elem gf = comp(x, y, z, g, f);
                                for (Elem h = 0; h < hzw.size(); ++h)
                                    if (comp(x, z, w, h, gf) != comp(x, y, w, comp(y, z, w, h, g), f))
                                        return Counterexample{"associativity", {{z, w, h}, {y, z, g}, {x, y, f}},
                                                              "h∘(g∘f) != (h∘g)∘f"};
                            }
                    }
        if (!inv_) return std::nullopt;
        for (ObjId x = 0; x < n; ++x) {
            if (inv(x, x, id(x)) != id(x)) return Counterexample{"involution_unit", {identity(x)}, "1° != 1"};
            for (ObjId y = 0; y < n; ++y) {
                const auto& hxy = hom(x, y);
                const auto& hyx = hom(y, x);
                for (Elem f = 0; f < hxy.size(); ++f) {
                    if (inv(y, x, inv(x, y, f)) != f)
                        return Counterexample{"involution_twice", {{x, y, f}}, "f°° != f"};
                    for (Elem f2 = f + 1; f2 < hxy.size(); ++f2)
                        if (inv(x, y, hxy.join(f, f2)) != hyx.join(inv(x, y, f), inv(x, y, f2)))
                            return Counterexample{"involution_joins", {{x, y, f}, {x, y, f2}}, "(f1∨f2)° != f1°∨f2°"};
                }
                if (inv(x, y, hxy.bottom()) != hyx.bottom())
                    return Counterexample{"involution_joins", {bottom(x, y)}, "0° != 0"};
                for (ObjId z = 0; z < n; ++z) {
                    const auto& hyz = hom(y, z);
                    for (Elem f = 0; f < hxy.size(); ++f)
                        for (Elem g = 0; g < hyz.size(); ++g)
                            if (inv(x, z, comp(x, y, z, g, f)) != comp(z, y, x, inv(x, y, f), inv(y, z, g)))
                                return Counterexample{"involution_composition", {{y, z, g}, {x, y, f}},
                                                      "(g∘f)° != f°∘g°"};
                }
            }
        }
        return std::nullopt;
    }

    /// Throws InputError describing the first broken axiom.
    const FiniteQuantaloid& validated() const
    {
        if (auto cx = validate())
            throw InputError("not a quantaloid: " + cx->check + " fails at " + describe_all(cx->morphisms) + " (" +
                             cx->detail + ")");
        return *this;
    }

    std::string describe_all(const std::vector<Morphism>& ms) const
    {
        std::string s;
        for (std::size_t i = 0; i < ms.size(); ++i) {
            if (i) s += ", ";
            s += describe(ms[i]);
        }
        return s;
    }

    /// Copy with a replaced (or removed) involution table.
    FiniteQuantaloid with_involution(std::optional<std::vector<std::vector<Elem>>> inv) const
    {
        return FiniteQuantaloid(objects_, homs_, comp_, ids_, std::move(inv));
    }

    /// Copy with one composition entry overwritten; the result is not validated.
    FiniteQuantaloid with_composition_entry(ObjId x, ObjId y, ObjId z, Elem g, Elem f, Elem result) const
    {
        auto comp = comp_;
        comp[cidx(x, y, z)][g * hom(x, y).size() + f] = result;
        return FiniteQuantaloid(objects_, homs_, std::move(comp), ids_, inv_);
    }

    const std::optional<std::vector<std::vector<Elem>>>& involution_table() const noexcept { return inv_; }
    const std::vector<std::vector<Elem>>& composition_tables() const noexcept { return comp_; }
    const std::vector<FiniteSupLattice>& hom_lattices() const noexcept { return homs_; }
    const std::vector<Elem>& identities() const noexcept { return ids_; }

    std::size_t cidx(ObjId x, ObjId y, ObjId z) const
    {
        const std::size_t n = num_objects();
        return (static_cast<std::size_t>(x) * n + y) * n + z;
    }

    void require_involution() const
    {
        if (!inv_) throw CapabilityError("quantaloid has no involution");
    }

    void check(const Morphism& m) const
    {
        if (m.src >= num_objects() || m.dst >= num_objects() || m.elt >= hom(m.src, m.dst).size())
            throw InputError("morphism out of range");
    }

    friend bool operator==(const FiniteQuantaloid& a, const FiniteQuantaloid& b)
    {
        return a.objects_ == b.objects_ && a.homs_ == b.homs_ && a.comp_ == b.comp_ && a.ids_ == b.ids_ &&
               a.inv_ == b.inv_;
    }

private:
    void same_hom(const Morphism& a, const Morphism& b) const
    {
        check(a);
        check(b);
        if (a.src != b.src || a.dst != b.dst)
            throw CompositionError("morphisms " + describe(a) + " and " + describe(b) + " live in different homs");
    }

    // Candidate g = f↘1; it is the right adjoint iff 1 ≤ g∘f and f∘g ≤ 1.
    void compute_adjoints()
    {
        const ObjId n = static_cast<ObjId>(num_objects());
        radj_.assign(std::size_t{n} * n, {});
        ladj_.assign(std::size_t{n} * n, {});
        for (ObjId x = 0; x < n; ++x)
            for (ObjId y = 0; y < n; ++y) {
                const auto& hxy = hom(x, y);
                auto& row = radj_[x * n + y];
                row.assign(hxy.size(), kNoElem);
                for (Elem f = 0; f < hxy.size(); ++f) {
                    Elem g = right_residual_raw(y, x, y, f, id(y));
                    if (hom(x, x).leq(id(x), comp(x, y, x, g, f)) && hom(y, y).leq(comp(y, x, y, f, g), id(y))) {
                        row[f] = g;
                        ladj_[x * n + y].push_back(f);
                    }
                }
            }
    }

    std::vector<std::string> objects_;
    std::unordered_map<std::string, ObjId> index_;
    std::vector<FiniteSupLattice> homs_;
    std::vector<std::vector<Elem>> comp_;
    std::vector<Elem> ids_;
    std::optional<std::vector<std::vector<Elem>>> inv_;
    std::vector<std::vector<Elem>> radj_;
    std::vector<std::vector<Elem>> ladj_;
};

/**
 * Incremental construction of a FiniteQuantaloid by object and element
 * names. Object ids are fixed (sorted) at construction of the builder.
 */
class QuantaloidBuilder {
public:
    explicit QuantaloidBuilder(std::vector<std::string> objects) : objects_(std::move(objects))
    {
        std::sort(objects_.begin(), objects_.end());
        for (std::size_t i = 0; i < objects_.size(); ++i) {
            if (objects_[i].empty()) throw InputError("empty object id");
            if (objects_[i].find("->") != std::string::npos)
                throw InputError("object id '" + objects_[i] + "' must not contain '->'");
            if (i > 0 && objects_[i] == objects_[i - 1]) throw InputError("duplicate object '" + objects_[i] + "'");
        }
        const std::size_t n = objects_.size();
        homs_.resize(n * n);
        have_hom_.assign(n * n, false);
        comp_.resize(n * n * n);
        ids_.assign(n, kNoElem);
    }

    std::size_t num_objects() const noexcept { return objects_.size(); }
    ObjId object(const std::string& name) const
    {
        auto it = std::lower_bound(objects_.begin(), objects_.end(), name);
        if (it == objects_.end() || *it != name) throw InputError("unknown object '" + name + "'");
        return static_cast<ObjId>(it - objects_.begin());
    }
    const FiniteSupLattice& hom(ObjId x, ObjId y) const
    {
        if (!have_hom_[x * num_objects() + y]) throw InputError("hom not set yet");
        return homs_[x * num_objects() + y];
    }

    QuantaloidBuilder& set_hom(ObjId x, ObjId y, FiniteSupLattice l)
    {
        homs_[x * num_objects() + y] = std::move(l);
        have_hom_[x * num_objects() + y] = true;
        return *this;
    }

    /// Fills the table for f: x->y, g: y->z from `fn(g, f)`.
    QuantaloidBuilder& set_composition(ObjId x, ObjId y, ObjId z, const std::function<Elem(Elem, Elem)>& fn)
    {
        auto& t = table(x, y, z);
        const std::size_t nf = hom(x, y).size();
        for (Elem g = 0; g < hom(y, z).size(); ++g)
            for (Elem f = 0; f < nf; ++f) t[g * nf + f] = fn(g, f);
        return *this;
    }

    QuantaloidBuilder& set_composition_entry(ObjId x, ObjId y, ObjId z, Elem g, Elem f, Elem r)
    {
        auto& t = table(x, y, z);
        if (g >= hom(y, z).size() || f >= hom(x, y).size() || r >= hom(x, z).size())
            throw InputError("composition entry out of range");
        t[g * hom(x, y).size() + f] = r;
        return *this;
    }

    QuantaloidBuilder& set_identity(ObjId x, Elem e)
    {
        ids_[x] = e;
        return *this;
    }

    QuantaloidBuilder& set_involution(ObjId x, ObjId y, const std::function<Elem(Elem)>& fn)
    {
        auto& t = inv_table(x, y);
        for (Elem f = 0; f < t.size(); ++f) t[f] = fn(f);
        return *this;
    }

    QuantaloidBuilder& set_involution_entry(ObjId x, ObjId y, Elem f, Elem r)
    {
        auto& t = inv_table(x, y);
        if (f >= t.size() || r >= hom(y, x).size()) throw InputError("involution entry out of range");
        t[f] = r;
        return *this;
    }

    /// Raises InputError for missing entries; validates the axioms unless told not to.
    FiniteQuantaloid build(bool validate = true) const
    {
        const std::size_t n = num_objects();
        for (std::size_t i = 0; i < n * n; ++i)
            if (!have_hom_[i])
                throw InputError("missing hom " + objects_[i / n] + "->" + objects_[i % n]);
        std::vector<std::vector<Elem>> comp(n * n * n);
        for (ObjId x = 0; x < n; ++x)
            for (ObjId y = 0; y < n; ++y)
                for (ObjId z = 0; z < n; ++z) {
                    const std::size_t k = (x * n + y) * n + z;
                    const std::size_t need = hom(y, z).size() * hom(x, y).size();
                    if (comp_[k].size() != need ||
                        std::find(comp_[k].begin(), comp_[k].end(), kNoElem) != comp_[k].end())
                        throw InputError("missing composition entries for " + objects_[x] + "->" + objects_[y] +
                                         "->" + objects_[z]);
                    comp[k] = comp_[k];
                }
        for (ObjId x = 0; x < n; ++x)
            if (ids_[x] == kNoElem) throw InputError("missing identity for " + objects_[x]);
        std::optional<std::vector<std::vector<Elem>>> inv;
        if (!inv_.empty()) {
            inv.emplace(n * n);
            for (ObjId x = 0; x < n; ++x)
                for (ObjId y = 0; y < n; ++y) {
                    const auto& t = inv_[x * n + y];
                    if (t.size() != hom(x, y).size() || std::find(t.begin(), t.end(), kNoElem) != t.end())
                        throw InputError("missing involution entries for " + objects_[x] + "->" + objects_[y]);
                    (*inv)[x * n + y] = t;
                }
        }
        FiniteQuantaloid q(objects_, homs_, std::move(comp), ids_, std::move(inv));
        if (validate) q.validated();
        return q;
    }

private:
    std::vector<Elem>& table(ObjId x, ObjId y, ObjId z)
    {
        const std::size_t n = num_objects();
        auto& t = comp_[(x * n + y) * n + z];
        if (t.empty()) t.assign(hom(y, z).size() * hom(x, y).size(), kNoElem);
        return t;
    }
    std::vector<Elem>& inv_table(ObjId x, ObjId y)
    {
        const std::size_t n = num_objects();
        if (inv_.empty()) inv_.resize(n * n);
        auto& t = inv_[x * n + y];
        if (t.empty()) t.assign(hom(x, y).size(), kNoElem);
        return t;
    }

    std::vector<std::string> objects_;
    std::vector<FiniteSupLattice> homs_;
    std::vector<bool> have_hom_;
    std::vector<std::vector<Elem>> comp_;
    std::vector<Elem> ids_;
    std::vector<std::vector<Elem>> inv_;
};

/// One-object quantale on `l` with multiplication `mul(a, b)` = a∘b.
inline FiniteQuantaloid make_quantale(const std::string& object, const FiniteSupLattice& l,
                                      const std::function<Elem(Elem, Elem)>& mul, Elem unit,
                                      const std::function<Elem(Elem)>* involution = nullptr, bool validate = true)
{
    QuantaloidBuilder b({object});
    b.set_hom(0, 0, l).set_composition(0, 0, 0, mul).set_identity(0, unit);
    if (involution) b.set_involution(0, 0, *involution);
    return b.build(validate);
}

} // namespace quantalib

#endif
