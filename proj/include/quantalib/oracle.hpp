#ifndef QUANTALIB_ORACLE_HPP
#define QUANTALIB_ORACLE_HPP

// Brute-force counters that do not touch quantaloids: G-sets by action
// enumeration and sheaves on a finite locale by stalks over its points.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "quantalib/error.hpp"
#include "quantalib/groupoid.hpp"
#include "quantalib/lattice.hpp"

namespace quantalib {

namespace detail {

using ActionTable = std::vector<std::vector<std::size_t>>; // act[g][x]

/// Every action of a one-object groupoid on {0..k-1}, up to relabelling.
inline std::set<ActionTable> gset_classes(const FiniteGroupoid& g, std::size_t k)
{
    if (g.objects().size() != 1) throw CapabilityError("G-set oracle needs a one-object groupoid");
    const std::size_t n = g.size();
    std::vector<std::vector<std::size_t>> maps;
    {
        std::vector<std::size_t> f(k, 0);
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < k; ++i) total *= k;
        for (std::uint64_t code = 0; code < total; ++code) {
            std::uint64_t c = code;
            for (std::size_t i = 0; i < k; ++i) {
                f[i] = c % k;
                c /= k;
            }
            maps.push_back(f);
        }
    }
    std::set<ActionTable> out;
    ActionTable act(n);
    auto lawful = [&](std::size_t upto) {
        for (std::size_t a = 0; a <= upto; ++a)
            for (std::size_t b = 0; b <= upto; ++b) {
                std::size_t ab = g.comp(a, b);
                if (ab > upto) continue;
                for (std::size_t x = 0; x < k; ++x)
                    if (act[a][act[b][x]] != act[ab][x]) return false;
            }
        if (g.is_identity(upto))
            for (std::size_t x = 0; x < k; ++x)
                if (act[upto][x] != x) return false;
        return true;
    };
    std::vector<std::size_t> perm(k);
    auto rec = [&](auto&& self, std::size_t a) -> void {
        if (a == n) {
            std::iota(perm.begin(), perm.end(), 0);
            ActionTable best;
            do {
                ActionTable t(n, std::vector<std::size_t>(k));
                for (std::size_t h = 0; h < n; ++h)
                    for (std::size_t x = 0; x < k; ++x) t[h][perm[x]] = perm[act[h][x]];
                if (best.empty() || t < best) best = t;
            } while (std::next_permutation(perm.begin(), perm.end()));
            out.insert(best);
            return;
        }
        for (const auto& f : maps) {
            act[a] = f;
            if (lawful(a)) self(self, a + 1);
        }
    };
    rec(rec, 0);
    return out;
}

inline bool transitive(const ActionTable& t, std::size_t k)
{
    if (k == 0) return false;
    std::set<std::size_t> orbit;
    for (const auto& row : t) orbit.insert(row[0]);
    return orbit.size() == k;
}

} // namespace detail

/// Iso classes of G-sets with at most n elements.
inline std::size_t count_gsets_by_elements(const FiniteGroupoid& g, std::size_t n)
{
    std::size_t count = 0;
    for (std::size_t k = 0; k <= n; ++k) count += detail::gset_classes(g, k).size();
    return count;
}

/// Iso classes of transitive G-sets (one per conjugacy class of subgroups).
inline std::size_t count_transitive_gsets(const FiniteGroupoid& g)
{
    std::size_t count = 0;
    for (std::size_t k = 1; k <= g.size(); ++k)
        for (const auto& t : detail::gset_classes(g, k)) count += detail::transitive(t, k);
    return count;
}

/// Iso classes of G-sets with at most n orbits: multisets of at most n transitive types.
inline std::size_t count_gsets_by_orbits(const FiniteGroupoid& g, std::size_t n)
{
    const std::size_t t = count_transitive_gsets(g);
    // C(t + n, n)
    std::uint64_t c = 1;
    for (std::size_t i = 1; i <= n; ++i) c = c * (t + i) / i;
    return static_cast<std::size_t>(c);
}

/// Elements p ≠ ⊥ with p = a ∨ b only for p ∈ {a, b}.
inline std::vector<Elem> join_irreducibles(const FiniteSupLattice& l)
{
    std::vector<Elem> out;
    for (Elem p = 0; p < l.size(); ++p) {
        if (p == l.bottom()) continue;
        bool irr = true;
        for (Elem a = 0; a < l.size() && irr; ++a)
            for (Elem b = 0; b < l.size() && irr; ++b)
                if (a != p && b != p && l.join(a, b) == p) irr = false;
        if (irr) out.push_back(p);
    }
    return out;
}

namespace detail {

/// A presheaf on the points of a finite locale: stalk sizes and restriction maps r[q][p] for p < q.
struct PointSheaf {
    std::vector<std::size_t> size;
    std::vector<std::vector<std::vector<std::size_t>>> res;

    friend auto operator<=>(const PointSheaf&, const PointSheaf&) = default;
};

inline std::size_t min_generators(const PointSheaf& f, const std::vector<std::vector<bool>>& below)
{
    const std::size_t m = f.size.size();
    std::vector<std::size_t> offset(m + 1, 0);
    for (std::size_t p = 0; p < m; ++p) offset[p + 1] = offset[p] + f.size[p];
    const std::size_t universe = offset[m];
    if (universe > 64) throw ResourceError("oracle", 64, "stalk elements");
    // sections over down-sets: compatible families; collect as covered-element masks
    std::set<std::uint64_t> sections;
    std::vector<std::size_t> pick(m, 0);
    std::vector<bool> in(m, false);
    auto rec = [&](auto&& self, std::size_t p, std::uint64_t mask) -> void {
        if (p == m) {
            if (mask) sections.insert(mask);
            return;
        }
        // p may be left out only if nothing above it is in
        bool forced = false;
        for (std::size_t q = 0; q < p; ++q) forced = forced || (in[q] && below[p][q]);
        if (!forced) {
            in[p] = false;
            self(self, p + 1, mask);
        }
        for (std::size_t s = 0; s < f.size[p]; ++s) {
            bool ok = true;
            for (std::size_t q = 0; q < p && ok; ++q)
                if (in[q] && below[p][q]) ok = f.res[q][p][pick[q]] == s;
            if (!ok) continue;
            in[p] = true;
            pick[p] = s;
            self(self, p + 1, mask | std::uint64_t{1} << (offset[p] + s));
        }
        in[p] = false;
    };
    rec(rec, 0, 0);
    const std::uint64_t all = universe == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << universe) - 1;
    std::vector<std::uint64_t> secs(sections.begin(), sections.end());
    for (std::size_t k = 0;; ++k) {
        auto cover = [&](auto&& self, std::uint64_t covered, std::size_t left) -> bool {
            if (covered == all) return true;
            if (left == 0) return false;
            const int e = __builtin_ctzll(~covered);
            for (auto s : secs)
                if (s >> e & 1U)
                    if (self(self, covered | s, left - 1)) return true;
            return false;
        };
        if (cover(cover, 0, k)) return k;
    }
}

} // namespace detail

/**
 * Iso classes of sheaves on the finite locale L generated by at most n
 * sections. L is read as the down-sets of its join-irreducibles, and a sheaf
 * as a presheaf of stalks on that poset; generators are sections over any
 * open, and must reach every stalk element by restriction.
 */
inline std::size_t count_locale_sheaves(const FiniteSupLattice& l, std::size_t n)
{
    if (!l.is_locale()) throw InputError("lattice is not a locale");
    const auto pts = join_irreducibles(l);
    const std::size_t m = pts.size();
    // order points with larger ones first so restrictions go forwards
    std::vector<Elem> order = pts;
    auto height = [&](Elem a) {
        std::size_t h = 0;
        for (Elem b = 0; b < l.size(); ++b) h += l.leq(b, a);
        return h;
    };
    std::stable_sort(order.begin(), order.end(), [&](Elem a, Elem b) { return height(a) > height(b); });
    std::vector<std::vector<bool>> below(m, std::vector<bool>(m, false)); // below[p][q]: p < q
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) below[p][q] = p != q && l.leq(order[p], order[q]);
    std::set<detail::PointSheaf> classes;
    detail::PointSheaf f;
    f.size.assign(m, 0);
    f.res.assign(m, std::vector<std::vector<std::size_t>>(m));
    std::vector<std::pair<std::size_t, std::size_t>> pairs; // (q, p) with p < q
    for (std::size_t q = 0; q < m; ++q)
        for (std::size_t p = 0; p < m; ++p)
            if (below[p][q]) pairs.emplace_back(q, p);
    auto canonical = [&]() {
        std::vector<std::vector<std::size_t>> perms(m);
        for (std::size_t p = 0; p < m; ++p) {
            perms[p].resize(f.size[p]);
            std::iota(perms[p].begin(), perms[p].end(), 0);
        }
        detail::PointSheaf best;
        bool have = false;
        auto rec = [&](auto&& self, std::size_t p) -> void {
            if (p == m) {
                detail::PointSheaf t = f;
                for (auto [q, r] : pairs)
                    for (std::size_t s = 0; s < f.size[q]; ++s) t.res[q][r][perms[q][s]] = perms[r][f.res[q][r][s]];
                if (!have || t < best) best = t, have = true;
                return;
            }
            std::sort(perms[p].begin(), perms[p].end());
            do self(self, p + 1);
            while (std::next_permutation(perms[p].begin(), perms[p].end()));
        };
        rec(rec, 0);
        return best;
    };
    auto maps = [&](auto&& self, std::size_t k) -> void {
        if (k == pairs.size()) {
            // functoriality: r_qp = r_rp ∘ r_qr for p < r < q
            for (auto [q, p] : pairs)
                for (std::size_t r = 0; r < m; ++r)
                    if (below[p][r] && below[r][q])
                        for (std::size_t s = 0; s < f.size[q]; ++s)
                            if (f.res[q][p][s] != f.res[r][p][f.res[q][r][s]]) return;
            if (detail::min_generators(f, below) <= n) classes.insert(canonical());
            return;
        }
        auto [q, p] = pairs[k];
        const std::size_t nq = f.size[q], np = f.size[p];
        if (nq > 0 && np == 0) return;
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < nq; ++i) total *= np;
        f.res[q][p].assign(nq, 0);
        for (std::uint64_t code = 0; code < total; ++code) {
            std::uint64_t c = code;
            for (std::size_t i = 0; i < nq; ++i) {
                f.res[q][p][i] = c % np;
                c /= np;
            }
            self(self, k + 1);
        }
    };
    auto sizes = [&](auto&& self, std::size_t p) -> void {
        if (p == m) {
            maps(maps, 0);
            return;
        }
        for (std::size_t s = 0; s <= n; ++s) {
            f.size[p] = s;
            self(self, p + 1);
        }
    };
    sizes(sizes, 0);
    return classes.size();
}

} // namespace quantalib

#endif
