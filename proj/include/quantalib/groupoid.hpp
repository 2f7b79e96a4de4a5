#ifndef QUANTALIB_GROUPOID_HPP
#define QUANTALIB_GROUPOID_HPP

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "quantalib/error.hpp"

namespace quantalib {

/**
 * A finite groupoid given by its arrows. Arrows are kept in sorted order of
 * their ids; objects are the ids occurring as sources or targets.
 */
class FiniteGroupoid {
public:
    using Arrow = std::size_t;
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    FiniteGroupoid() = default;

    /// `comp` lists (g, f, g∘f) for composable pairs (src g = tgt f); `inv` lists (f, f⁻¹).
    FiniteGroupoid(std::vector<std::string> arrows, const std::map<std::string, std::string>& src,
                   const std::map<std::string, std::string>& tgt,
                   const std::vector<std::array<std::string, 3>>& comp,
                   const std::vector<std::pair<std::string, std::string>>& inv)
        : arrows_(std::move(arrows))
    {
        std::sort(arrows_.begin(), arrows_.end());
        if (std::adjacent_find(arrows_.begin(), arrows_.end()) != arrows_.end())
            throw InputError("duplicate arrow id");
        std::set<std::string> objs;
        for (const auto& a : arrows_) {
            auto s = src.find(a), t = tgt.find(a);
            if (s == src.end() || t == tgt.end()) throw InputError("arrow '" + a + "' lacks src/tgt");
            objs.insert(s->second);
            objs.insert(t->second);
        }
        objects_.assign(objs.begin(), objs.end());
        const std::size_t n = arrows_.size();
        src_.resize(n);
        tgt_.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            src_[i] = object_index(src.at(arrows_[i]));
            tgt_[i] = object_index(tgt.at(arrows_[i]));
        }
        comp_.assign(n * n, kNone);
        for (const auto& [g, f, h] : comp) {
            Arrow gi = arrow(g), fi = arrow(f), hi = arrow(h);
            if (src_[gi] != tgt_[fi]) throw InputError("composite " + g + "∘" + f + " is not composable");
            comp_[gi * n + fi] = hi;
        }
        inv_.assign(n, kNone);
        for (const auto& [f, fi] : inv) inv_[arrow(f)] = arrow(fi);
        validate();
    }

    /// A finite group as a one-object groupoid, from its multiplication table.
    static FiniteGroupoid group(const std::vector<std::string>& elems,
                                const std::function<std::string(const std::string&, const std::string&)>& mul)
    {
        std::map<std::string, std::string> s, t;
        std::vector<std::array<std::string, 3>> comp;
        std::vector<std::pair<std::string, std::string>> inv;
        for (const auto& a : elems) {
            s[a] = t[a] = "*";
            for (const auto& b : elems) comp.push_back({a, b, mul(a, b)});
        }
        std::string unit;
        for (const auto& e : elems) {
            bool is_unit = true;
            for (const auto& a : elems) is_unit = is_unit && mul(e, a) == a && mul(a, e) == a;
            if (is_unit) unit = e;
        }
        if (unit.empty()) throw InputError("group has no unit");
        for (const auto& a : elems)
            for (const auto& b : elems)
                if (mul(a, b) == unit) inv.emplace_back(a, b);
        return FiniteGroupoid(elems, s, t, comp, inv);
    }

    /// Z/n with elements "0".."n-1".
    static FiniteGroupoid cyclic(std::size_t n)
    {
        std::vector<std::string> el;
        for (std::size_t i = 0; i < n; ++i) el.push_back(std::to_string(i));
        return group(el, [n](const std::string& a, const std::string& b) {
            return std::to_string((std::stoul(a) + std::stoul(b)) % n);
        });
    }

    std::size_t size() const noexcept { return arrows_.size(); }
    const std::vector<std::string>& arrows() const noexcept { return arrows_; }
    const std::vector<std::string>& objects() const noexcept { return objects_; }
    std::size_t src(Arrow a) const { return src_[a]; }
    std::size_t tgt(Arrow a) const { return tgt_[a]; }
    /// g∘f, or kNone when not composable.
    Arrow comp(Arrow g, Arrow f) const { return comp_[g * size() + f]; }
    Arrow inverse(Arrow a) const { return inv_[a]; }
    Arrow identity(std::size_t obj) const { return ids_[obj]; }
    bool is_identity(Arrow a) const { return ids_[src_[a]] == a; }

    Arrow arrow(const std::string& id) const
    {
        auto it = std::lower_bound(arrows_.begin(), arrows_.end(), id);
        if (it == arrows_.end() || *it != id) throw InputError("unknown arrow '" + id + "'");
        return static_cast<Arrow>(it - arrows_.begin());
    }

private:
    std::size_t object_index(const std::string& o) const
    {
        return static_cast<std::size_t>(std::lower_bound(objects_.begin(), objects_.end(), o) - objects_.begin());
    }

    void validate()
    {
        const std::size_t n = size();
        for (Arrow g = 0; g < n; ++g)
            for (Arrow f = 0; f < n; ++f) {
                bool composable = src_[g] == tgt_[f];
                if (composable != (comp_[g * n + f] != kNone))
                    throw InputError(composable ? "missing composite " + arrows_[g] + "∘" + arrows_[f]
                                                : "composite given for non-composable pair");
                if (composable) {
                    Arrow h = comp_[g * n + f];
                    if (src_[h] != src_[f] || tgt_[h] != tgt_[g])
                        throw InputError("composite " + arrows_[g] + "∘" + arrows_[f] + " has wrong endpoints");
                }
            }
        for (Arrow h = 0; h < n; ++h)
            for (Arrow g = 0; g < n; ++g)
                for (Arrow f = 0; f < n; ++f)
                    if (src_[h] == tgt_[g] && src_[g] == tgt_[f] && comp(h, comp(g, f)) != comp(comp(h, g), f))
                        throw InputError("groupoid composition is not associative");
        ids_.assign(objects_.size(), kNone);
        for (Arrow a = 0; a < n; ++a) {
            if (src_[a] != tgt_[a]) continue;
            bool unit = true;
            for (Arrow f = 0; f < n && unit; ++f) {
                if (tgt_[f] == src_[a] && comp(a, f) != f) unit = false;
                if (src_[f] == src_[a] && comp(f, a) != f) unit = false;
            }
            if (unit) ids_[src_[a]] = a;
        }
        for (std::size_t o = 0; o < objects_.size(); ++o)
            if (ids_[o] == kNone) throw InputError("object '" + objects_[o] + "' has no identity arrow");
        for (Arrow a = 0; a < n; ++a) {
            Arrow b = inv_[a];
            if (b == kNone) throw InputError("arrow '" + arrows_[a] + "' has no inverse");
            if (src_[b] != tgt_[a] || tgt_[b] != src_[a] || comp(b, a) != ids_[src_[a]] ||
                comp(a, b) != ids_[tgt_[a]])
                throw InputError("'" + arrows_[b] + "' is not inverse to '" + arrows_[a] + "'");
        }
    }

    std::vector<std::string> arrows_;
    std::vector<std::string> objects_;
    std::vector<std::size_t> src_, tgt_;
    std::vector<Arrow> comp_;
    std::vector<Arrow> inv_;
    std::vector<Arrow> ids_;
};

} // namespace quantalib

#endif
