#ifndef QUANTALIB_SITES_HPP
#define QUANTALIB_SITES_HPP

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "quantalib/bitset.hpp"
#include "quantalib/predicates.hpp"
#include "quantalib/quantaloid.hpp"

namespace quantalib {

using Arrow = std::size_t;
inline constexpr Arrow kNoArrow = static_cast<Arrow>(-1);

struct ArrowSpec {
    std::string id;
    std::string src;
    std::string tgt;
};

/**
 * A finite category. Arrows are sorted by id. An identity "1_X" is added
 * for every object that does not list one; composites involving
 * identities are implicit.
 */
class FiniteCategory {
public:
    FiniteCategory() = default;

    FiniteCategory(std::vector<std::string> objects, std::vector<ArrowSpec> arrows,
                   const std::vector<std::array<std::string, 3>>& composites)
    {
        std::sort(objects.begin(), objects.end());
        if (std::adjacent_find(objects.begin(), objects.end()) != objects.end())
            throw InputError("duplicate object in category");
        objects_ = std::move(objects);
        std::set<std::string> ids;
        for (const auto& a : arrows) ids.insert(a.id);
        if (ids.size() != arrows.size()) throw InputError("duplicate arrow id in category");
        for (const auto& o : objects_)
            if (!ids.count("1_" + o)) arrows.push_back({"1_" + o, o, o});
        std::sort(arrows.begin(), arrows.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
        for (const auto& a : arrows) {
            names_.push_back(a.id);
            src_.push_back(object(a.src));
            tgt_.push_back(object(a.tgt));
        }
        const std::size_t n = names_.size();
        ids_.assign(objects_.size(), kNoArrow);
        for (std::size_t x = 0; x < objects_.size(); ++x) {
            Arrow i = arrow("1_" + objects_[x]);
            if (src_[i] != x || tgt_[i] != x) throw InputError("identity '1_" + objects_[x] + "' has wrong endpoints");
            ids_[x] = i;
        }
        comp_.assign(n * n, kNoArrow);
        for (Arrow f = 0; f < n; ++f)
            for (Arrow g = 0; g < n; ++g) {
                if (src_[g] != tgt_[f]) continue;
                if (is_identity(g)) comp_[g * n + f] = f;
                else if (is_identity(f)) comp_[g * n + f] = g;
            }
        for (const auto& [g, f, h] : composites) {
            Arrow gi = arrow(g), fi = arrow(f), hi = arrow(h);
            if (src_[gi] != tgt_[fi]) throw InputError("composite " + g + "∘" + f + " is not composable");
            if (src_[hi] != src_[fi] || tgt_[hi] != tgt_[gi])
                throw InputError("composite " + g + "∘" + f + " = " + h + " has wrong endpoints");
            Arrow& slot = comp_[gi * n + fi];
            if (slot != kNoArrow && slot != hi) throw InputError("conflicting composite " + g + "∘" + f);
            slot = hi;
        }
        for (Arrow f = 0; f < n; ++f)
            for (Arrow g = 0; g < n; ++g)
                if (src_[g] == tgt_[f] && comp_[g * n + f] == kNoArrow)
                    throw InputError("missing composite " + names_[g] + "∘" + names_[f]);
        for (Arrow f = 0; f < n; ++f)
            for (Arrow g = 0; g < n; ++g)
                for (Arrow h = 0; h < n; ++h)
                    if (src_[g] == tgt_[f] && src_[h] == tgt_[g] && comp(h, comp(g, f)) != comp(comp(h, g), f))
                        throw InputError("composition is not associative at " + names_[h] + "," + names_[g] + "," +
                                         names_[f]);
        into_.assign(objects_.size(), {});
        for (Arrow a = 0; a < n; ++a) into_[tgt_[a]].push_back(a);
    }

    /// A poset as a category: one arrow "x<=y" per pair x ≤ y.
    static FiniteCategory poset(const std::vector<std::string>& elems,
                                const std::function<bool(std::size_t, std::size_t)>& leq)
    {
        std::vector<ArrowSpec> arrows;
        std::vector<std::array<std::string, 3>> comp;
        auto name = [&](std::size_t a, std::size_t b) {
            return a == b ? "1_" + elems[a] : elems[a] + "<=" + elems[b];
        };
        for (std::size_t a = 0; a < elems.size(); ++a)
            for (std::size_t b = 0; b < elems.size(); ++b)
                if (a != b && leq(a, b)) arrows.push_back({name(a, b), elems[a], elems[b]});
        for (std::size_t a = 0; a < elems.size(); ++a)
            for (std::size_t b = 0; b < elems.size(); ++b)
                for (std::size_t c = 0; c < elems.size(); ++c)
                    if (a != b && b != c && leq(a, b) && leq(b, c)) comp.push_back({name(b, c), name(a, b), name(a, c)});
        return FiniteCategory(elems, std::move(arrows), comp);
    }

    std::size_t num_objects() const noexcept { return objects_.size(); }
    std::size_t num_arrows() const noexcept { return names_.size(); }
    const std::vector<std::string>& objects() const noexcept { return objects_; }
    const std::string& object_name(std::size_t x) const { return objects_.at(x); }
    const std::string& arrow_name(Arrow a) const { return names_.at(a); }
    std::size_t src(Arrow a) const { return src_[a]; }
    std::size_t tgt(Arrow a) const { return tgt_[a]; }
    Arrow identity(std::size_t x) const { return ids_[x]; }
    bool is_identity(Arrow a) const { return ids_[src_[a]] == a; }
    /// g∘f, or kNoArrow.
    Arrow comp(Arrow g, Arrow f) const { return comp_[g * num_arrows() + f]; }
    const std::vector<Arrow>& arrows_into(std::size_t x) const { return into_[x]; }

    std::size_t object(const std::string& name) const
    {
        auto it = std::lower_bound(objects_.begin(), objects_.end(), name);
        if (it == objects_.end() || *it != name) throw InputError("unknown object '" + name + "'");
        return static_cast<std::size_t>(it - objects_.begin());
    }
    Arrow arrow(const std::string& id) const
    {
        for (Arrow a = 0; a < names_.size(); ++a)
            if (names_[a] == id) return a;
        throw InputError("unknown arrow '" + id + "'");
    }

    friend bool operator==(const FiniteCategory& a, const FiniteCategory& b)
    {
        return a.objects_ == b.objects_ && a.names_ == b.names_ && a.src_ == b.src_ && a.tgt_ == b.tgt_ &&
               a.comp_ == b.comp_;
    }

private:
    std::vector<std::string> objects_;
    std::vector<std::string> names_;
    std::vector<std::size_t> src_, tgt_;
    std::vector<Arrow> ids_;
    std::vector<Arrow> comp_;
    std::vector<std::vector<Arrow>> into_;
};

/// Sieves are bitsets over all arrows of the category.
using Sieve = DynBitset;

/// Closure of `s` (arrows into x) under precomposition.
inline Sieve sieve_closure(const FiniteCategory& c, Sieve s)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (Arrow f = s.next(0); f < c.num_arrows(); f = s.next(f + 1))
            for (Arrow h : c.arrows_into(c.src(f))) {
                Arrow fh = c.comp(f, h);
                if (!s.test(fh)) {
                    s.set(fh);
                    changed = true;
                }
            }
    }
    return s;
}

inline Sieve maximal_sieve(const FiniteCategory& c, std::size_t x)
{
    Sieve s(c.num_arrows());
    for (Arrow a : c.arrows_into(x)) s.set(a);
    return s;
}

/// h*S = {g : h∘g ∈ S} for h: y -> x.
inline Sieve pullback(const FiniteCategory& c, Arrow h, const Sieve& s)
{
    Sieve r(c.num_arrows());
    for (Arrow g : c.arrows_into(c.src(h)))
        if (s.test(c.comp(h, g))) r.set(g);
    return r;
}

/// Every sieve on x, sorted.
inline std::vector<Sieve> all_sieves(const FiniteCategory& c, std::size_t x, std::size_t cap = 1u << 16)
{
    std::vector<Sieve> principal;
    for (Arrow a : c.arrows_into(x)) {
        Sieve s(c.num_arrows());
        s.set(a);
        principal.push_back(sieve_closure(c, s));
    }
    std::unordered_set<Sieve, DynBitsetHash> seen;
    std::deque<Sieve> todo;
    Sieve empty(c.num_arrows());
    seen.insert(empty);
    todo.push_back(empty);
    while (!todo.empty()) {
        Sieve s = todo.front();
        todo.pop_front();
        for (const auto& p : principal) {
            Sieve u = s | p;
            if (seen.insert(u).second) {
                if (seen.size() > cap) throw ResourceError("sieves", cap, "sieve enumeration");
                todo.push_back(u);
            }
        }
    }
    std::vector<Sieve> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

/// J(x) for every object, each a sorted list of sieves.
struct Topology {
    std::vector<std::vector<Sieve>> covering;

    bool covers(std::size_t x, const Sieve& s) const
    {
        return std::binary_search(covering[x].begin(), covering[x].end(), s);
    }
    friend bool operator==(const Topology&, const Topology&) = default;
};

struct Site {
    FiniteCategory category;
    Topology topology;
};

/// First failing Grothendieck-topology axiom, described, or nothing.
inline std::optional<std::string> topology_violation(const FiniteCategory& c, const Topology& j)
{
    if (j.covering.size() != c.num_objects()) return "topology has the wrong number of objects";
    for (std::size_t x = 0; x < c.num_objects(); ++x) {
        if (!j.covers(x, maximal_sieve(c, x))) return "maximal sieve on " + c.object_name(x) + " is not covering";
        for (const auto& s : j.covering[x])
            for (Arrow h : c.arrows_into(x))
                if (!j.covers(c.src(h), pullback(c, h, s)))
                    return "covering sieve on " + c.object_name(x) + " not stable under pullback along " +
                           c.arrow_name(h);
    }
    for (std::size_t x = 0; x < c.num_objects(); ++x) {
        auto sieves = all_sieves(c, x);
        for (const auto& r : sieves) {
            if (j.covers(x, r)) continue;
            for (const auto& s : j.covering[x]) {
                bool local = true;
                for (Arrow f = s.next(0); f < c.num_arrows() && local; f = s.next(f + 1))
                    local = j.covers(c.src(f), pullback(c, f, r));
                if (local)
                    return "sieve on " + c.object_name(x) + " is locally covering but not covering (transitivity)";
            }
        }
    }
    return std::nullopt;
}

inline void require_topology(const FiniteCategory& c, const Topology& j)
{
    if (auto v = topology_violation(c, j)) throw InputError("not a Grothendieck topology: " + *v);
}

/// J(x) = maximal sieve plus the sieves generated by the listed families; validated, never completed.
inline Topology topology_from_covers(const FiniteCategory& c,
                                     const std::map<std::string, std::vector<std::vector<std::string>>>& covers)
{
    Topology j;
    j.covering.resize(c.num_objects());
    for (std::size_t x = 0; x < c.num_objects(); ++x) j.covering[x].push_back(maximal_sieve(c, x));
    for (const auto& [obj, families] : covers) {
        std::size_t x = c.object(obj);
        for (const auto& fam : families) {
            Sieve s(c.num_arrows());
            for (const auto& a : fam) {
                Arrow f = c.arrow(a);
                if (c.tgt(f) != x) throw InputError("cover of " + obj + " contains " + a + " with another target");
                s.set(f);
            }
            j.covering[x].push_back(sieve_closure(c, s));
        }
    }
    for (auto& v : j.covering) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    require_topology(c, j);
    return j;
}

inline Topology trivial_topology(const FiniteCategory& c) { return topology_from_covers(c, {}); }

/// The poset of a locale with covers = families whose join is the covered element.
inline Site canonical_site_of_locale(const FiniteSupLattice& l)
{
    if (!l.is_locale()) throw InputError("canonical site needs a locale");
    FiniteCategory c = FiniteCategory::poset(l.names(), [&](std::size_t a, std::size_t b) {
        return l.leq(static_cast<Elem>(a), static_cast<Elem>(b));
    });
    Topology j;
    j.covering.resize(c.num_objects());
    for (std::size_t x = 0; x < c.num_objects(); ++x) {
        const Elem ex = l.index_of(c.object_name(x));
        for (const auto& s : all_sieves(c, x)) {
            Elem acc = l.bottom();
            for (Arrow a = s.next(0); a < c.num_arrows(); a = s.next(a + 1))
                acc = l.join(acc, l.index_of(c.object_name(c.src(a))));
            if (acc == ex) j.covering[x].push_back(s);
        }
    }
    require_topology(c, j);
    return {std::move(c), std::move(j)};
}

/**
 * Span pairs (u: W->X, v: W->Y) for a fixed (X, Y), with the data needed
 * to close cribles.
 */
class SpanSpace {
public:
    SpanSpace(const FiniteCategory& c, const Topology& j, std::size_t x, std::size_t y) : c_(&c), x_(x), y_(y)
    {
        for (Arrow u : c.arrows_into(x))
            for (Arrow v : c.arrows_into(y))
                if (c.src(u) == c.src(v)) spans_.push_back({u, v});
        for (std::size_t i = 0; i < spans_.size(); ++i) index_[spans_[i]] = i;
        // precomposition images and covering-sieve descent lists
        pre_.resize(spans_.size());
        descent_.resize(spans_.size());
        for (std::size_t i = 0; i < spans_.size(); ++i) {
            auto [u, v] = spans_[i];
            const std::size_t w = c.src(u);
            for (Arrow t : c.arrows_into(w)) pre_[i].push_back(index_[{c.comp(u, t), c.comp(v, t)}]);
            for (const auto& s : j.covering[w]) {
                std::vector<std::size_t> need;
                for (Arrow t = s.next(0); t < c.num_arrows(); t = s.next(t + 1))
                    need.push_back(index_[{c.comp(u, t), c.comp(v, t)}]);
                descent_[i].push_back(std::move(need));
            }
        }
    }

    std::size_t size() const noexcept { return spans_.size(); }
    const std::pair<Arrow, Arrow>& span(std::size_t i) const { return spans_[i]; }
    std::size_t index(Arrow u, Arrow v) const { return index_.at({u, v}); }
    std::size_t x() const noexcept { return x_; }
    std::size_t y() const noexcept { return y_; }

    DynBitset empty() const { return DynBitset(size()); }

    DynBitset precompose_closure(DynBitset r) const
    {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = r.next(0); i < size(); i = r.next(i + 1))
                for (std::size_t k : pre_[i])
                    if (!r.test(k)) {
                        r.set(k);
                        changed = true;
                    }
        }
        return r;
    }

    /// Least closed crible containing r.
    DynBitset close(DynBitset r) const
    {
        r = precompose_closure(std::move(r));
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < size(); ++i) {
                if (r.test(i)) continue;
                for (const auto& need : descent_[i]) {
                    bool all = true;
                    for (std::size_t k : need) all = all && r.test(k);
                    if (all) {
                        r.set(i);
                        changed = true;
                        break;
                    }
                }
            }
            if (changed) r = precompose_closure(std::move(r));
        }
        return r;
    }

    DynBitset principal(std::size_t i) const
    {
        DynBitset r(size());
        r.set(i);
        return precompose_closure(std::move(r));
    }

private:
    const FiniteCategory* c_;
    std::size_t x_, y_;
    std::vector<std::pair<Arrow, Arrow>> spans_;
    std::map<std::pair<Arrow, Arrow>, std::size_t> index_;
    std::vector<std::vector<std::size_t>> pre_;
    std::vector<std::vector<std::vector<std::size_t>>> descent_;
};

/// Closed-crible quantaloid together with the crible behind each element.
struct CribleQuantaloid {
    FiniteQuantaloid q;
    std::vector<SpanSpace> spaces;                 // per (X, Y), index X*N+Y
    std::vector<std::vector<DynBitset>> cribles;   // per hom: element -> crible
};

namespace detail {

inline std::string crible_name(const FiniteCategory& c, const SpanSpace& sp, const DynBitset& r)
{
    // greedy generating set in span order, then drop redundant generators
    std::vector<std::size_t> gens;
    DynBitset acc = sp.empty();
    for (std::size_t i = r.next(0); i < sp.size(); i = r.next(i + 1))
        if (!acc.test(i)) {
            gens.push_back(i);
            DynBitset next = acc;
            next.set(i);
            acc = sp.close(std::move(next));
        }
    for (std::size_t k = 0; k < gens.size();) {
        DynBitset rest = sp.empty();
        for (std::size_t m = 0; m < gens.size(); ++m)
            if (m != k) rest.set(gens[m]);
        if (sp.close(rest) == r) gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(k));
        else ++k;
    }
    std::string s = "<";
    for (std::size_t k = 0; k < gens.size(); ++k) {
        if (k) s += ";";
        s += c.arrow_name(sp.span(gens[k]).first) + "," + c.arrow_name(sp.span(gens[k]).second);
    }
    return s + ">";
}

} // namespace detail

/**
 * R(C, J): hom(X, Y) = closed cribles of spans X <- W -> Y ordered by
 * inclusion; composite = closure of {(a, c) : (a, b) ∈ R, (b, c) ∈ S};
 * identity = closure of the diagonal; involution = transposition.
 * Asserts the closed-crible axioms and modularity on the result.
 */
inline CribleQuantaloid closed_crible_quantaloid(const Site& site, bool assert_axioms = true)
{
    const auto& c = site.category;
    const auto& j = site.topology;
    require_topology(c, j);
    const std::size_t n = c.num_objects();
    CribleQuantaloid out;
    out.spaces.reserve(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) out.spaces.emplace_back(c, j, x, y);
    out.cribles.resize(n * n);
    std::vector<std::map<DynBitset, Elem>> lookup(n * n);
    QuantaloidBuilder b(c.objects());
    for (std::size_t h = 0; h < n * n; ++h) {
        const auto& sp = out.spaces[h];
        std::set<DynBitset> found;
        std::deque<DynBitset> todo;
        DynBitset start = sp.close(sp.empty());
        found.insert(start);
        todo.push_back(start);
        std::vector<DynBitset> principals;
        for (std::size_t i = 0; i < sp.size(); ++i) principals.push_back(sp.principal(i));
        while (!todo.empty()) {
            DynBitset r = todo.front();
            todo.pop_front();
            for (std::size_t i = 0; i < sp.size(); ++i) {
                if (r.test(i)) continue;
                DynBitset u = sp.close(r | principals[i]);
                if (found.insert(u).second) {
                    if (found.size() > kMaxLatticeSize)
                        throw ResourceError("lattice-size", kMaxLatticeSize, "closed-crible enumeration");
                    todo.push_back(u);
                }
            }
        }
        std::vector<DynBitset> list(found.begin(), found.end());
        std::vector<std::string> names;
        for (const auto& r : list) names.push_back(detail::crible_name(c, sp, r));
        FiniteSupLattice l(names, [&](std::size_t a, std::size_t bb) { return list[a].is_subset_of(list[bb]); });
        auto& cr = out.cribles[h];
        cr.assign(l.size(), sp.empty());
        for (std::size_t k = 0; k < list.size(); ++k) {
            Elem e = l.index_of(names[k]);
            cr[e] = list[k];
            lookup[h][list[k]] = e;
        }
        b.set_hom(static_cast<ObjId>(sp.x()), static_cast<ObjId>(sp.y()), std::move(l));
    }
    for (std::size_t x = 0; x < n; ++x) {
        const auto& sp = out.spaces[x * n + x];
        DynBitset diag = sp.empty();
        for (Arrow a : c.arrows_into(x)) diag.set(sp.index(a, a));
        b.set_identity(static_cast<ObjId>(x), lookup[x * n + x].at(sp.close(diag)));
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                const auto& sxy = out.spaces[x * n + y];
                const auto& syz = out.spaces[y * n + z];
                const auto& sxz = out.spaces[x * n + z];
                const auto& rs = out.cribles[x * n + y];
                const auto& ss = out.cribles[y * n + z];
                b.set_composition(static_cast<ObjId>(x), static_cast<ObjId>(y), static_cast<ObjId>(z),
                                  [&](Elem g, Elem f) {
                                      DynBitset r = sxz.empty();
                                      for (std::size_t i = 0; i < sxz.size(); ++i) {
                                          auto [a, cc] = sxz.span(i);
                                          for (Arrow bb : c.arrows_into(y)) {
                                              if (c.src(bb) != c.src(a)) continue;
                                              if (rs[f].test(sxy.index(a, bb)) && ss[g].test(syz.index(bb, cc))) {
                                                  r.set(i);
                                                  break;
                                              }
                                          }
                                      }
                                      return lookup[x * n + z].at(sxz.close(r));
                                  });
                const auto& syx = out.spaces[y * n + x];
                if (z == 0)
                    b.set_involution(static_cast<ObjId>(x), static_cast<ObjId>(y), [&](Elem f) {
                        DynBitset t = syx.empty();
                        for (std::size_t i = rs[f].next(0); i < sxy.size(); i = rs[f].next(i + 1))
                            t.set(syx.index(sxy.span(i).second, sxy.span(i).first));
                        return lookup[y * n + x].at(t);
                    });
            }
    out.q = b.build(false);
    if (assert_axioms) {
        if (auto cx = out.q.validate())
            throw ConsistencyError("closed-crible quantaloid violates " + cx->check);
        std::vector<PredicateResult> checks = closed_crible_axioms(out.q);
        checks.push_back(modular(out.q));
        for (const auto& r : checks)
            if (!r.holds) throw ConsistencyError("closed-crible quantaloid is not " + r.name);
    }
    return out;
}

/// Map(Q): left adjoints of Q as a category; arrows named "X->Y:elt".
inline FiniteCategory map_category(const FiniteQuantaloid& q)
{
    std::vector<ArrowSpec> arrows;
    std::vector<std::array<std::string, 3>> comp;
    auto name = [&](ObjId x, ObjId y, Elem f) {
        if (x == y && f == q.id(x)) return "1_" + q.object_name(x);
        return q.object_name(x) + "->" + q.object_name(y) + ":" + q.hom(x, y).name(f);
    };
    const ObjId n = static_cast<ObjId>(q.num_objects());
    for (ObjId x = 0; x < n; ++x)
        for (ObjId y = 0; y < n; ++y)
            for (Elem f : q.left_adjoints(x, y))
                if (!(x == y && f == q.id(x))) arrows.push_back({name(x, y, f), q.object_name(x), q.object_name(y)});
    for (ObjId x = 0; x < n; ++x)
        for (ObjId y = 0; y < n; ++y)
            for (ObjId z = 0; z < n; ++z)
                for (Elem f : q.left_adjoints(x, y))
                    for (Elem g : q.left_adjoints(y, z))
                        comp.push_back({name(y, z, g), name(x, y, f), name(x, z, q.comp(x, y, z, g, f))});
    return FiniteCategory(q.objects(), std::move(arrows), comp);
}

/// Map(Q) with J(X) = {S : 1_X = ⋁_{s∈S} s∘s*}. Arrows map back to Q via their names.
inline Site topology_from_quantaloid(const FiniteQuantaloid& q, bool validate = true)
{
    FiniteCategory c = map_category(q);
    // recover each arrow's element: arrow ids encode x, y and the element
    std::vector<Elem> elt(c.num_arrows());
    for (Arrow a = 0; a < c.num_arrows(); ++a) {
        const ObjId x = static_cast<ObjId>(c.src(a)), y = static_cast<ObjId>(c.tgt(a));
        if (c.is_identity(a)) {
            elt[a] = q.id(x);
            continue;
        }
        const std::string prefix = q.object_name(x) + "->" + q.object_name(y) + ":";
        elt[a] = q.hom(x, y).index_of(c.arrow_name(a).substr(prefix.size()));
    }
    Topology j;
    j.covering.resize(c.num_objects());
    for (std::size_t x = 0; x < c.num_objects(); ++x) {
        const auto& hxx = q.hom(static_cast<ObjId>(x), static_cast<ObjId>(x));
        for (const auto& s : all_sieves(c, x)) {
            Elem acc = hxx.bottom();
            for (Arrow a = s.next(0); a < c.num_arrows(); a = s.next(a + 1)) {
                const ObjId w = static_cast<ObjId>(c.src(a)), xx = static_cast<ObjId>(x);
                acc = hxx.join(acc, q.comp(xx, w, xx, elt[a], q.right_adjoint_raw(w, xx, elt[a])));
            }
            if (acc == q.id(static_cast<ObjId>(x))) j.covering[x].push_back(s);
        }
    }
    if (validate) require_topology(c, j);
    return {std::move(c), std::move(j)};
}

/// Object and arrow bijection preserving composition and covering sieves.
inline bool sites_isomorphic(const Site& a, const Site& b)
{
    const auto& ca = a.category;
    const auto& cb = b.category;
    if (ca.num_objects() != cb.num_objects() || ca.num_arrows() != cb.num_arrows()) return false;
    const std::size_t n = ca.num_objects();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    do {
        std::vector<Arrow> amap(ca.num_arrows(), kNoArrow);
        std::vector<bool> used(cb.num_arrows(), false);
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x) {
            amap[ca.identity(x)] = cb.identity(perm[x]);
            used[cb.identity(perm[x])] = true;
        }
        std::vector<Arrow> rest;
        for (Arrow f = 0; f < ca.num_arrows(); ++f)
            if (!ca.is_identity(f)) rest.push_back(f);
        auto check_all = [&]() {
            for (Arrow f = 0; f < ca.num_arrows(); ++f)
                for (Arrow g = 0; g < ca.num_arrows(); ++g)
                    if (ca.src(g) == ca.tgt(f) && amap[ca.comp(g, f)] != cb.comp(amap[g], amap[f])) return false;
            for (std::size_t x = 0; x < n; ++x) {
                if (a.topology.covering[x].size() != b.topology.covering[perm[x]].size()) return false;
                for (const auto& s : a.topology.covering[x]) {
                    Sieve t(cb.num_arrows());
                    for (Arrow f = s.next(0); f < ca.num_arrows(); f = s.next(f + 1)) t.set(amap[f]);
                    if (!b.topology.covers(perm[x], t)) return false;
                }
            }
            return true;
        };
        bool found = false;
        auto rec = [&](auto&& self, std::size_t i) -> void {
            if (found) return;
            if (i == rest.size()) {
                found = check_all();
                return;
            }
            Arrow f = rest[i];
            for (Arrow g = 0; g < cb.num_arrows() && !found; ++g) {
                if (used[g] || cb.src(g) != perm[ca.src(f)] || cb.tgt(g) != perm[ca.tgt(f)]) continue;
                used[g] = true;
                amap[f] = g;
                self(self, i + 1);
                used[g] = false;
            }
        };
        rec(rec, 0);
        if (found) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace quantalib

#endif
