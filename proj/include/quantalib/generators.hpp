#ifndef QUANTALIB_GENERATORS_HPP
#define QUANTALIB_GENERATORS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "quantalib/groupoid.hpp"
#include "quantalib/quantaloid.hpp"

namespace quantalib {

/// A locale as a one-object quantale: ∘ = ∧, 1 = ⊤, identity involution.
inline FiniteQuantaloid locale_quantale(const FiniteSupLattice& l, const std::string& object = "*")
{
    if (auto v = l.distributivity_violation())
        throw InputError("not a locale: '" + l.name((*v)[0]) + "' ∧ ('" + l.name((*v)[1]) + "' ∨ '" +
                         l.name((*v)[2]) + "') does not distribute");
    std::function<Elem(Elem)> id = [](Elem a) { return a; };
    return make_quantale(object, l, [&](Elem a, Elem b) { return l.meet(a, b); }, l.top(), &id, false);
}

/// The two-element quantale {0 < 1}.
inline FiniteQuantaloid boolean_quantale() { return locale_quantale(FiniteSupLattice::chain({"0", "1"})); }

/// Quantale on the subsets of `atoms`, given multiplication and involution on bitmasks.
inline FiniteQuantaloid powerset_quantale(const std::vector<std::string>& atoms,
                                          const std::function<std::uint64_t(std::uint64_t, std::uint64_t)>& mul,
                                          std::uint64_t unit, const std::function<std::uint64_t(std::uint64_t)>& inv,
                                          bool validate = true)
{
    if (atoms.size() > 11) throw ResourceError("lattice-size", 2048, "powerset of " + std::to_string(atoms.size()));
    FiniteSupLattice l = FiniteSupLattice::powerset(atoms);
    const std::uint64_t n = std::uint64_t{1} << atoms.size();
    std::vector<Elem> of_mask(n);
    std::vector<std::uint64_t> mask_of(n);
    for (std::uint64_t m = 0; m < n; ++m) {
        of_mask[m] = l.index_of(FiniteSupLattice::subset_name(atoms, m));
        mask_of[of_mask[m]] = m;
    }
    std::function<Elem(Elem)> inv_e = [&](Elem a) { return of_mask[inv(mask_of[a])]; };
    return make_quantale("*", l, [&](Elem g, Elem f) { return of_mask[mul(mask_of[g], mask_of[f])]; },
                         of_mask[unit], &inv_e, validate);
}

/// Relations on {1..n}: g∘f = relational composite (f first), involution = transpose.
inline FiniteQuantaloid relation_quantale(std::size_t n)
{
    std::vector<std::string> atoms;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) atoms.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
    auto bit = [n](std::size_t i, std::size_t j) { return std::uint64_t{1} << (i * n + j); };
    std::uint64_t unit = 0;
    for (std::size_t i = 0; i < n; ++i) unit |= bit(i, i);
    return powerset_quantale(
        atoms,
        [=](std::uint64_t g, std::uint64_t f) {
            std::uint64_t r = 0;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    if (f & bit(a, b))
                        for (std::size_t c = 0; c < n; ++c)
                            if (g & bit(b, c)) r |= bit(a, c);
            return r;
        },
        unit,
        [=](std::uint64_t f) {
            std::uint64_t r = 0;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    if (f & bit(a, b)) r |= bit(b, a);
            return r;
        });
}

/**
 * Powerset of the arrows of a finite groupoid: S∘T = {s·t}, S° = {s⁻¹},
 * unit = the identity arrows. Checks ⊤ = ⋁{p : p°p ∨ pp° ≤ 1}.
 */
inline FiniteQuantaloid groupoid_quantale(const FiniteGroupoid& g)
{
    const std::size_t n = g.size();
    std::uint64_t unit = 0;
    for (std::size_t a = 0; a < n; ++a)
        if (g.is_identity(a)) unit |= std::uint64_t{1} << a;
    auto mul = [&g, n](std::uint64_t s, std::uint64_t t) {
        std::uint64_t r = 0;
        for (std::size_t a = 0; a < n; ++a)
            if (s >> a & 1U)
                for (std::size_t b = 0; b < n; ++b)
                    if (t >> b & 1U) {
                        auto c = g.comp(a, b);
                        if (c != FiniteGroupoid::kNone) r |= std::uint64_t{1} << c;
                    }
        return r;
    };
    auto inv = [&g, n](std::uint64_t s) {
        std::uint64_t r = 0;
        for (std::size_t a = 0; a < n; ++a)
            if (s >> a & 1U) r |= std::uint64_t{1} << g.inverse(a);
        return r;
    };
    FiniteQuantaloid q = powerset_quantale(g.arrows(), mul, unit, inv);
    std::uint64_t partial_units = 0;
    for (std::uint64_t p = 0; p < (std::uint64_t{1} << n); ++p)
        if (((mul(inv(p), p) | mul(p, inv(p))) & ~unit) == 0) partial_units |= p;
    if (partial_units != (std::uint64_t{1} << n) - 1)
        throw ConsistencyError("groupoid quantale is not covered by its partial units");
    return q;
}

/// Chain {0 < m < 1} with truncated addition a∘b = max(0, a+b-1), identity involution.
inline FiniteQuantaloid lukasiewicz_chain()
{
    FiniteSupLattice l = FiniteSupLattice::chain({"0", "m", "1"});
    auto val = [&](Elem e) { return l.name(e) == "0" ? 0 : l.name(e) == "m" ? 1 : 2; };
    auto of = [&](int v) { return l.index_of(v == 0 ? "0" : v == 1 ? "m" : "1"); };
    std::function<Elem(Elem)> id = [](Elem a) { return a; };
    return make_quantale("*", l, [&](Elem a, Elem b) { return of(std::max(0, val(a) + val(b) - 2)); },
                         l.index_of("1"), &id);
}

/// The diamond M3 = {0, a, b, c, 1}: unit a, b and c orthogonal idempotents, identity involution.
inline FiniteQuantaloid m3_quantale()
{
    FiniteSupLattice l({"0", "a", "b", "c", "1"}, std::vector<std::pair<std::string, std::string>>{
                                                      {"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
    auto table = [](const std::string& x, const std::string& y) -> std::string {
        if (x == "0" || y == "0") return "0";
        if (x == "a") return y;
        if (y == "a") return x;
        if (x == "1") return y == "1" ? "1" : y;
        if (y == "1") return x;
        return x == y ? x : "0";
    };
    std::function<Elem(Elem)> id = [](Elem a) { return a; };
    return make_quantale("*", l, [&](Elem g, Elem f) { return l.index_of(table(l.name(g), l.name(f))); },
                         l.index_of("a"), &id);
}

/// Objects A and B, every hom {0 < 1}, composition ∧, identity involution.
inline FiniteQuantaloid all_boolean_quantaloid(const std::vector<std::string>& objects = {"A", "B"})
{
    QuantaloidBuilder b(objects);
    const auto two = FiniteSupLattice::chain({"0", "1"});
    const ObjId n = static_cast<ObjId>(b.num_objects());
    for (ObjId x = 0; x < n; ++x)
        for (ObjId y = 0; y < n; ++y) b.set_hom(x, y, two);
    for (ObjId x = 0; x < n; ++x) {
        b.set_identity(x, two.top());
        for (ObjId y = 0; y < n; ++y) {
            b.set_involution(x, y, [](Elem e) { return e; });
            for (ObjId z = 0; z < n; ++z) b.set_composition(x, y, z, [&](Elem g, Elem f) { return two.meet(g, f); });
        }
    }
    return b.build();
}

} // namespace quantalib

#endif
