#ifndef QUANTALIB_ISO_HPP
#define QUANTALIB_ISO_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "quantalib/quantaloid.hpp"

namespace quantalib {

/// All order isomorphisms a -> b, as element maps. Enumerated by matching join-irreducibles.
inline std::vector<std::vector<Elem>> lattice_isomorphisms(const FiniteSupLattice& a, const FiniteSupLattice& b,
                                                           std::size_t limit = 100000)
{
    std::vector<std::vector<Elem>> out;
    if (a.size() != b.size()) return out;
    auto ja = a.join_irreducibles();
    auto jb = b.join_irreducibles();
    if (ja.size() != jb.size()) return out;
    const std::size_t k = ja.size();
    std::vector<Elem> phi(k);
    std::vector<bool> used(k, false);

    auto extend = [&]() -> std::optional<std::vector<Elem>> {
        std::vector<Elem> m(a.size());
        std::vector<bool> hit(b.size(), false);
        for (Elem x = 0; x < a.size(); ++x) {
            Elem v = b.bottom();
            for (std::size_t i = 0; i < k; ++i)
                if (a.leq(ja[i], x)) v = b.join(v, phi[i]);
            if (hit[v]) return std::nullopt;
            hit[v] = true;
            m[x] = v;
        }
        for (Elem x = 0; x < a.size(); ++x)
            for (Elem y = 0; y < a.size(); ++y)
                if (a.leq(x, y) != b.leq(m[x], m[y])) return std::nullopt;
        return m;
    };
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (out.size() >= limit) return;
        if (i == k) {
            if (auto m = extend()) out.push_back(std::move(*m));
            return;
        }
        for (std::size_t j = 0; j < k; ++j) {
            if (used[j]) continue;
            // order on irreducibles must be preserved and reflected
            bool ok = true;
            for (std::size_t p = 0; p < i && ok; ++p)
                ok = a.leq(ja[p], ja[i]) == b.leq(phi[p], jb[j]) && a.leq(ja[i], ja[p]) == b.leq(jb[j], phi[p]);
            if (!ok) continue;
            used[j] = true;
            phi[i] = jb[j];
            self(self, i + 1);
            used[j] = false;
        }
    };
    rec(rec, 0);
    return out;
}

/// Object bijection plus per-hom element bijections.
struct QuantaloidIso {
    std::vector<ObjId> object;
    std::vector<std::vector<Elem>> elt; // indexed by a's hom x*N+y
};

/**
 * Searches for a composition-, identity- and (optionally) involution-
 * preserving isomorphism. Exhaustive: object permutations times per-hom
 * lattice isomorphisms, pruned as soon as a composition triple is fixed.
 */
inline std::optional<QuantaloidIso> find_isomorphism(const FiniteQuantaloid& a, const FiniteQuantaloid& b,
                                                     bool with_involution = true,
                                                     std::uint64_t max_nodes = std::uint64_t{1} << 24)
{
    const std::size_t n = a.num_objects();
    if (n != b.num_objects()) return std::nullopt;
    if (with_involution && a.has_involution() != b.has_involution()) return std::nullopt;
    const bool inv = with_involution && a.has_involution();
    std::vector<ObjId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t nodes = 0;
    do {
        bool sizes = true;
        for (ObjId x = 0; x < n && sizes; ++x)
            for (ObjId y = 0; y < n && sizes; ++y)
                sizes = a.hom(x, y).size() == b.hom(perm[x], perm[y]).size();
        if (!sizes) continue;
        // candidate maps per hom; identities must go to identities
        std::vector<std::vector<std::vector<Elem>>> cands(n * n);
        bool feasible = true;
        for (ObjId x = 0; x < n && feasible; ++x)
            for (ObjId y = 0; y < n && feasible; ++y) {
                auto isos = lattice_isomorphisms(a.hom(x, y), b.hom(perm[x], perm[y]));
                if (x == y)
                    std::erase_if(isos, [&](const auto& m) { return m[a.id(x)] != b.id(perm[x]); });
                feasible = !isos.empty();
                cands[x * n + y] = std::move(isos);
            }
        if (!feasible) continue;
        // assign homs in order; after hom k is assigned check triples whose homs are all assigned
        std::vector<std::size_t> order(n * n);
        std::iota(order.begin(), order.end(), 0);
        std::vector<std::size_t> pos(n * n);
        for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
        std::vector<const std::vector<Elem>*> chosen(n * n, nullptr);

        auto consistent = [&](std::size_t upto) {
            auto assigned = [&](ObjId x, ObjId y) { return pos[x * n + y] <= upto; };
            const std::size_t cur = order[upto];
            const ObjId cx = static_cast<ObjId>(cur / n), cy = static_cast<ObjId>(cur % n);
            for (ObjId x = 0; x < n; ++x)
                for (ObjId y = 0; y < n; ++y)
                    for (ObjId z = 0; z < n; ++z) {
                        if (!assigned(x, y) || !assigned(y, z) || !assigned(x, z)) continue;
                        bool touches = (x == cx && y == cy) || (y == cx && z == cy) || (x == cx && z == cy);
                        if (!touches) continue;
                        const auto& mf = *chosen[x * n + y];
                        const auto& mg = *chosen[y * n + z];
                        const auto& mh = *chosen[x * n + z];
                        for (Elem g = 0; g < a.hom(y, z).size(); ++g)
                            for (Elem f = 0; f < a.hom(x, y).size(); ++f)
                                if (mh[a.comp(x, y, z, g, f)] != b.comp(perm[x], perm[y], perm[z], mg[g], mf[f]))
                                    return false;
                    }
            if (inv && assigned(cy, cx)) {
                for (auto [x, y] : {std::pair{cx, cy}, std::pair{cy, cx}}) {
                    const auto& m = *chosen[x * n + y];
                    const auto& mi = *chosen[y * n + x];
                    for (Elem f = 0; f < a.hom(x, y).size(); ++f)
                        if (mi[a.inv(x, y, f)] != b.inv(perm[x], perm[y], m[f])) return false;
                }
            }
            return true;
        };
        std::optional<QuantaloidIso> found;
        auto rec = [&](auto&& self, std::size_t i) -> void {
            if (found) return;
            if (i == order.size()) {
                QuantaloidIso iso{perm, {}};
                for (std::size_t h = 0; h < n * n; ++h) iso.elt.push_back(*chosen[h]);
                found = std::move(iso);
                return;
            }
            for (const auto& m : cands[order[i]]) {
                if (++nodes > max_nodes) throw ResourceError("iso-search", max_nodes, "quantaloid isomorphism search");
                chosen[order[i]] = &m;
                if (consistent(i)) self(self, i + 1);
                if (found) return;
            }
            chosen[order[i]] = nullptr;
        };
        rec(rec, 0);
        if (found) return found;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

} // namespace quantalib

#endif
