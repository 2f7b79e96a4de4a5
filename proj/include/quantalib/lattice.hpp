#ifndef QUANTALIB_LATTICE_HPP
#define QUANTALIB_LATTICE_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "quantalib/bitset.hpp"
#include "quantalib/error.hpp"

namespace quantalib {

/// Dense element index inside one lattice.
using Elem = std::uint32_t;

/// Largest lattice the library will materialize (join/meet tables are n*n).
inline constexpr std::size_t kMaxLatticeSize = 2048;

/**
 * A finite complete lattice given by its carrier and order.
 *
 * Elements carry opaque string ids; internally they are the dense indices
 * 0..size()-1 in sorted order of those ids. The order is given as a
 * generating relation whose reflexive-transitive closure is taken on
 * construction. Construction fails unless every subset has a least upper
 * bound, so binary joins/meets and bottom/top are always available.
 *
 * Values are immutable once built.
 */
class FiniteSupLattice {
public:
    FiniteSupLattice() = default;

    /// Builds from ids and a generating relation over ids.
    FiniteSupLattice(std::vector<std::string> names,
                     const std::vector<std::pair<std::string, std::string>>& generating)
    {
        init_names(std::move(names));
        std::vector<DynBitset> up(size(), DynBitset(size()));
        for (const auto& [a, b] : generating) up[index_of(a)].set(index_of(b));
        finish(std::move(up));
    }

    /// Builds from ids and an order predicate over positions in `names`.
    FiniteSupLattice(std::vector<std::string> names,
                     const std::function<bool(std::size_t, std::size_t)>& leq)
    {
        std::vector<std::string> original = names;
        init_names(std::move(names));
        std::vector<DynBitset> up(size(), DynBitset(size()));
        for (std::size_t i = 0; i < original.size(); ++i)
            for (std::size_t j = 0; j < original.size(); ++j)
                if (leq(i, j)) up[index_of(original[i])].set(index_of(original[j]));
        finish(std::move(up));
    }

    /// The chain 0 < 1 < ... < n-1 with ids given in order.
    static FiniteSupLattice chain(std::vector<std::string> names)
    {
        std::vector<std::pair<std::string, std::string>> gen;
        for (std::size_t i = 0; i + 1 < names.size(); ++i) gen.emplace_back(names[i], names[i + 1]);
        return FiniteSupLattice(std::move(names), gen);
    }

    /// Subsets of `atoms`, ids formatted as "{a,b}".
    static FiniteSupLattice powerset(const std::vector<std::string>& atoms)
    {
        const std::size_t n = atoms.size();
        std::vector<std::string> names;
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask)
            names.push_back(subset_name(atoms, mask));
        return FiniteSupLattice(names, [](std::size_t a, std::size_t b) { return (a & ~b) == 0; });
    }

    static std::string subset_name(const std::vector<std::string>& atoms, std::size_t mask)
    {
        std::string s = "{";
        bool first = true;
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            if (!(mask >> i & 1U)) continue;
            if (!first) s += ",";
            s += atoms[i];
            first = false;
        }
        return s + "}";
    }

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(Elem e) const { return names_.at(e); }
    const std::vector<std::string>& names() const noexcept { return names_; }

    Elem index_of(const std::string& id) const
    {
        auto it = index_.find(id);
        if (it == index_.end()) throw InputError("unknown lattice element '" + id + "'");
        return it->second;
    }
    std::optional<Elem> find(const std::string& id) const
    {
        auto it = index_.find(id);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    bool leq(Elem a, Elem b) const { return up_[a].test(b); }
    Elem join(Elem a, Elem b) const { return join_[a * size() + b]; }
    Elem meet(Elem a, Elem b) const { return meet_[a * size() + b]; }
    Elem bottom() const noexcept { return bottom_; }
    Elem top() const noexcept { return top_; }

    /// Least upper bound; join of the empty set is bottom.
    Elem join(std::span<const Elem> s) const
    {
        Elem r = bottom_;
        for (Elem e : s) r = join(r, checked(e));
        return r;
    }

    /// Greatest lower bound; meet of the empty set is top.
    Elem meet(std::span<const Elem> s) const
    {
        Elem r = top_;
        for (Elem e : s) r = meet(r, checked(e));
        return r;
    }

    Elem join_ids(const std::vector<std::string>& ids) const
    {
        std::vector<Elem> s;
        for (const auto& id : ids) s.push_back(index_of(id));
        return join(s);
    }
    Elem meet_ids(const std::vector<std::string>& ids) const
    {
        std::vector<Elem> s;
        for (const auto& id : ids) s.push_back(index_of(id));
        return meet(s);
    }

    const DynBitset& up_set(Elem a) const { return up_[a]; }
    const DynBitset& down_set(Elem a) const { return down_[a]; }

    /// A triple (x, a, b) with x ∧ (a ∨ b) ≠ (x ∧ a) ∨ (x ∧ b), if any.
    std::optional<std::array<Elem, 3>> distributivity_violation() const
    {
        const Elem n = static_cast<Elem>(size());
        for (Elem x = 0; x < n; ++x)
            for (Elem a = 0; a < n; ++a)
                for (Elem b = a + 1; b < n; ++b)
                    if (meet(x, join(a, b)) != join(meet(x, a), meet(x, b))) return std::array{x, a, b};
        return std::nullopt;
    }

    /// Finite lattices are frames exactly when they are distributive.
    bool is_locale() const { return !distributivity_violation(); }

    /// Covering pairs (a, b): a < b with nothing strictly between.
    std::vector<std::pair<Elem, Elem>> covers() const
    {
        std::vector<std::pair<Elem, Elem>> out;
        const Elem n = static_cast<Elem>(size());
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b) {
                if (a == b || !leq(a, b)) continue;
                DynBitset between = up_[a] & down_[b];
                if (between.count() == 2) out.emplace_back(a, b);
            }
        return out;
    }

    /// Join-irreducible elements (non-bottom, not the join of strictly smaller ones).
    std::vector<Elem> join_irreducibles() const
    {
        std::vector<Elem> out;
        for (Elem a = 0; a < size(); ++a) {
            if (a == bottom_) continue;
            Elem below = bottom_;
            down_[a].for_each([&](std::size_t b) {
                if (b != a) below = join(below, static_cast<Elem>(b));
            });
            if (below != a) out.push_back(a);
        }
        return out;
    }

    friend bool operator==(const FiniteSupLattice& a, const FiniteSupLattice& b)
    {
        return a.names_ == b.names_ && a.up_ == b.up_;
    }

private:
    Elem checked(Elem e) const
    {
        if (e >= size()) throw InputError("lattice element index " + std::to_string(e) + " out of range");
        return e;
    }

    void init_names(std::vector<std::string> names)
    {
        if (names.empty()) throw InputError("a complete lattice needs at least one element");
        if (names.size() > kMaxLatticeSize)
            throw ResourceError("lattice-size", kMaxLatticeSize, "lattice with " + std::to_string(names.size()) + " elements");
        std::sort(names.begin(), names.end());
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (names[i].empty()) throw InputError("empty lattice element id");
            if (i > 0 && names[i] == names[i - 1]) throw InputError("duplicate lattice element '" + names[i] + "'");
            index_.emplace(names[i], static_cast<Elem>(i));
        }
        names_ = std::move(names);
    }

    void finish(std::vector<DynBitset> up)
    {
        const std::size_t n = size();
        for (std::size_t i = 0; i < n; ++i) up[i].set(i);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                if (up[i].test(k)) up[i] |= up[k];

        std::vector<DynBitset> down(n, DynBitset(n));
        for (std::size_t i = 0; i < n; ++i)
            up[i].for_each([&](std::size_t j) { down[j].set(i); });
        for (std::size_t i = 0; i < n; ++i)
            up[i].for_each([&](std::size_t j) {
                if (j != i && down[i].test(j))
                    throw InputError("order is not antisymmetric: '" + names_[i] + "' and '" + names_[j] + "'");
            });

        std::vector<std::size_t> up_count(n), down_count(n);
        for (std::size_t i = 0; i < n; ++i) {
            up_count[i] = up[i].count();
            down_count[i] = down[i].count();
        }
        auto least_in = [&](const DynBitset& set, const std::vector<DynBitset>& rows,
                            const std::vector<std::size_t>& counts) -> std::optional<Elem> {
            const std::size_t c = set.count();
            for (std::size_t u = set.next(0); u < n; u = set.next(u + 1))
                if (counts[u] == c && rows[u] == set) return static_cast<Elem>(u);
            return std::nullopt;
        };

        DynBitset all(n);
        all.set_all();
        auto bot = least_in(all, up, up_count);
        auto tp = least_in(all, down, down_count);
        if (!bot) throw InputError("lattice has no bottom element (empty join missing)");
        if (!tp) throw InputError("lattice has no top element");
        bottom_ = *bot;
        top_ = *tp;

        join_.assign(n * n, 0);
        meet_.assign(n * n, 0);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = a; b < n; ++b) {
                auto j = least_in(up[a] & up[b], up, up_count);
                if (!j) throw InputError("no least upper bound for '" + names_[a] + "' and '" + names_[b] + "'");
                auto m = least_in(down[a] & down[b], down, down_count);
                if (!m) throw InputError("no greatest lower bound for '" + names_[a] + "' and '" + names_[b] + "'");
                join_[a * n + b] = join_[b * n + a] = *j;
                meet_[a * n + b] = meet_[b * n + a] = *m;
            }
        }
        up_ = std::move(up);
        down_ = std::move(down);
    }

    std::vector<std::string> names_;
    std::unordered_map<std::string, Elem> index_;
    std::vector<DynBitset> up_, down_;
    std::vector<Elem> join_, meet_;
    Elem bottom_ = 0, top_ = 0;
};

} // namespace quantalib

#endif
