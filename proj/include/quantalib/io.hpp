#ifndef QUANTALIB_IO_HPP
#define QUANTALIB_IO_HPP

// JSON interchange for lattices, quantaloids, groupoids, sites and
// categories over a base. Element and object ids are strings on the wire.

#include <array>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "quantalib/error.hpp"
#include "quantalib/generators.hpp"
#include "quantalib/groupoid.hpp"
#include "quantalib/lattice.hpp"
#include "quantalib/qcat.hpp"
#include "quantalib/quantaloid.hpp"
#include "quantalib/sites.hpp"

namespace quantalib {

using json = nlohmann::ordered_json;

namespace detail {

inline std::string line_context(const std::string& text, std::size_t byte)
{
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline const json& field(const json& j, const std::string& key, const std::string& path)
{
    if (!j.is_object()) throw InputError(path + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw InputError(path + ": missing \"" + key + "\"");
    return *it;
}

inline std::string str(const json& j, const std::string& path)
{
    if (!j.is_string()) throw InputError(path + ": expected a string");
    return j.get<std::string>();
}

inline std::vector<std::string> strings(const json& j, const std::string& path)
{
    if (!j.is_array()) throw InputError(path + ": expected an array of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(str(j[i], path + "/" + std::to_string(i)));
    return out;
}

/// Array of fixed-length string tuples.
template <std::size_t N>
std::vector<std::array<std::string, N>> tuples(const json& j, const std::string& path)
{
    if (!j.is_array()) throw InputError(path + ": expected an array");
    std::vector<std::array<std::string, N>> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string p = path + "/" + std::to_string(i);
        if (!j[i].is_array() || j[i].size() != N)
            throw InputError(p + ": expected " + std::to_string(N) + " strings");
        std::array<std::string, N> t;
        for (std::size_t k = 0; k < N; ++k) t[k] = str(j[i][k], p + "/" + std::to_string(k));
        out.push_back(std::move(t));
    }
    return out;
}

/// Rethrows library InputErrors raised while building, prefixed with where.
template <class F>
auto at_path(const std::string& path, F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

inline Elem element(const FiniteSupLattice& l, const std::string& id, const std::string& path)
{
    return at_path(path, [&] { return l.index_of(id); });
}

inline std::pair<std::string, std::string> split2(const std::string& key, const std::string& path)
{
    auto p = key.find("->");
    if (p == std::string::npos || key.find("->", p + 2) != std::string::npos)
        throw InputError(path + ": key \"" + key + "\" is not of the form X->Y");
    return {key.substr(0, p), key.substr(p + 2)};
}

inline std::array<std::string, 3> split3(const std::string& key, const std::string& path)
{
    auto p = key.find("->");
    auto r = p == std::string::npos ? p : key.find("->", p + 2);
    if (r == std::string::npos || key.find("->", r + 2) != std::string::npos)
        throw InputError(path + ": key \"" + key + "\" is not of the form X->Y->Z");
    return {key.substr(0, p), key.substr(p + 2, r - p - 2), key.substr(r + 2)};
}

} // namespace detail

/// Parses text, reporting syntax errors with line and column.
inline json parse_json(const std::string& text, const std::string& origin = "<input>")
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::string msg = e.what();
        if (auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
        throw InputError(origin + ": " + detail::line_context(text, e.byte) + ": " + msg);
    }
}

inline json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str(), path);
}

inline void write_json_file(const std::string& path, const json& j)
{
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << j.dump(2) << '\n';
}

// ---- lattices

inline json to_json(const FiniteSupLattice& l)
{
    json leq = json::array();
    for (auto [a, b] : l.covers()) leq.push_back({l.name(a), l.name(b)});
    return {{"elements", l.names()}, {"leq", leq}};
}

inline FiniteSupLattice lattice_from_json(const json& j, const std::string& path = "")
{
    auto elems = detail::strings(detail::field(j, "elements", path), path + "/elements");
    std::vector<std::pair<std::string, std::string>> gen;
    if (j.contains("leq"))
        for (const auto& [a, b] : detail::tuples<2>(j["leq"], path + "/leq")) gen.emplace_back(a, b);
    return detail::at_path(path.empty() ? "lattice" : path, [&] { return FiniteSupLattice(elems, gen); });
}

// ---- quantaloids

inline json to_json(const FiniteQuantaloid& q)
{
    const ObjId n = static_cast<ObjId>(q.num_objects());
    json homs = json::object(), comp = json::object(), id = json::object();
    auto key = [&](ObjId x, ObjId y) { return q.object_name(x) + "->" + q.object_name(y); };
    for (ObjId x = 0; x < n; ++x)
        for (ObjId y = 0; y < n; ++y) homs[key(x, y)] = to_json(q.hom(x, y));
    for (ObjId x = 0; x < n; ++x)
        for (ObjId y = 0; y < n; ++y)
            for (ObjId z = 0; z < n; ++z) {
                json t = json::array();
                const auto &hxy = q.hom(x, y), &hyz = q.hom(y, z), &hxz = q.hom(x, z);
                for (Elem g = 0; g < hyz.size(); ++g)
                    for (Elem f = 0; f < hxy.size(); ++f)
                        t.push_back({hyz.name(g), hxy.name(f), hxz.name(q.comp(x, y, z, g, f))});
                comp[key(x, y) + "->" + q.object_name(z)] = std::move(t);
            }
    for (ObjId x = 0; x < n; ++x) id[q.object_name(x)] = q.hom(x, x).name(q.id(x));
    json out = {{"objects", q.objects()}, {"homs", homs}, {"comp", comp}, {"id", id}};
    if (q.has_involution()) {
        json inv = json::object();
        for (ObjId x = 0; x < n; ++x)
            for (ObjId y = 0; y < n; ++y) {
                json t = json::array();
                for (Elem f = 0; f < q.hom(x, y).size(); ++f)
                    t.push_back({q.hom(x, y).name(f), q.hom(y, x).name(q.inv(x, y, f))});
                inv[key(x, y)] = std::move(t);
            }
        out["inv"] = std::move(inv);
    }
    return out;
}

/// Every hom, composite and identity must be listed; the axioms are then validated.
inline FiniteQuantaloid quantaloid_from_json(const json& j, const std::string& path = "")
{
    using detail::field;
    auto objects = detail::strings(field(j, "objects", path), path + "/objects");
    QuantaloidBuilder b = detail::at_path(path + "/objects", [&] { return QuantaloidBuilder(objects); });
    auto obj = [&](const std::string& name, const std::string& p) {
        return detail::at_path(p, [&] { return b.object(name); });
    };
    if (objects.empty()) {
        // nothing for the builder to record an involution on
        std::optional<std::vector<std::vector<Elem>>> inv;
        if (j.contains("inv")) inv.emplace();
        return FiniteQuantaloid({}, {}, {}, {}, std::move(inv));
    }
    const json& homs = field(j, "homs", path);
    if (!homs.is_object()) throw InputError(path + "/homs: expected an object");
    for (const auto& [k, v] : homs.items()) {
        const std::string p = path + "/homs/" + k;
        auto [xs, ys] = detail::split2(k, p);
        b.set_hom(obj(xs, p), obj(ys, p), lattice_from_json(v, p));
    }
    const json& comp = field(j, "comp", path);
    if (!comp.is_object()) throw InputError(path + "/comp: expected an object");
    for (const auto& [k, v] : comp.items()) {
        const std::string p = path + "/comp/" + k;
        auto [xs, ys, zs] = detail::split3(k, p);
        const ObjId x = obj(xs, p), y = obj(ys, p), z = obj(zs, p);
        detail::at_path(p, [&] { return b.hom(x, y), b.hom(y, z), 0; });
        std::size_t i = 0;
        for (const auto& [g, f, r] : detail::tuples<3>(v, p)) {
            const std::string pi = p + "/" + std::to_string(i++);
            const Elem ge = detail::element(b.hom(y, z), g, pi + "/0");
            const Elem fe = detail::element(b.hom(x, y), f, pi + "/1");
            const Elem re = detail::element(b.hom(x, z), r, pi + "/2");
            b.set_composition_entry(x, y, z, ge, fe, re);
        }
    }
    const json& id = field(j, "id", path);
    if (!id.is_object()) throw InputError(path + "/id: expected an object");
    for (const auto& [k, v] : id.items()) {
        const std::string p = path + "/id/" + k;
        const ObjId x = obj(k, p);
        const auto& hxx = detail::at_path(p, [&]() -> const FiniteSupLattice& { return b.hom(x, x); });
        b.set_identity(x, detail::element(hxx, detail::str(v, p), p));
    }
    if (j.contains("inv")) {
        if (!j["inv"].is_object()) throw InputError(path + "/inv: expected an object");
        for (const auto& [k, v] : j["inv"].items()) {
            const std::string p = path + "/inv/" + k;
            auto [xs, ys] = detail::split2(k, p);
            const ObjId x = obj(xs, p), y = obj(ys, p);
            detail::at_path(p, [&] { return b.hom(x, y), b.hom(y, x), 0; });
            std::size_t i = 0;
            for (const auto& [f, r] : detail::tuples<2>(v, p)) {
                const std::string pi = p + "/" + std::to_string(i++);
                b.set_involution_entry(x, y, detail::element(b.hom(x, y), f, pi + "/0"),
                                       detail::element(b.hom(y, x), r, pi + "/1"));
            }
        }
    }
    return detail::at_path(path.empty() ? "quantaloid" : path, [&] { return b.build(true); });
}

// ---- groupoids

inline json to_json(const FiniteGroupoid& g)
{
    json src = json::object(), tgt = json::object(), comp = json::array(), inv = json::array();
    const auto& a = g.arrows();
    for (std::size_t i = 0; i < g.size(); ++i) {
        src[a[i]] = g.objects()[g.src(i)];
        tgt[a[i]] = g.objects()[g.tgt(i)];
        inv.push_back({a[i], a[g.inverse(i)]});
        for (std::size_t f = 0; f < g.size(); ++f)
            if (g.comp(i, f) != FiniteGroupoid::kNone) comp.push_back({a[i], a[f], a[g.comp(i, f)]});
    }
    return {{"arrows", a}, {"src", src}, {"tgt", tgt}, {"comp", comp}, {"inv", inv}};
}

inline FiniteGroupoid groupoid_from_json(const json& j, const std::string& path = "")
{
    using detail::field;
    auto arrows = detail::strings(field(j, "arrows", path), path + "/arrows");
    auto smap = [&](const std::string& key) {
        const json& m = field(j, key, path);
        if (!m.is_object()) throw InputError(path + "/" + key + ": expected an object");
        std::map<std::string, std::string> out;
        for (const auto& [k, v] : m.items()) out[k] = detail::str(v, path + "/" + key + "/" + k);
        return out;
    };
    auto src = smap("src"), tgt = smap("tgt");
    auto comp = detail::tuples<3>(field(j, "comp", path), path + "/comp");
    std::vector<std::pair<std::string, std::string>> inv;
    for (const auto& [f, g] : detail::tuples<2>(field(j, "inv", path), path + "/inv")) inv.emplace_back(f, g);
    return detail::at_path(path.empty() ? "groupoid" : path, [&] { return FiniteGroupoid(arrows, src, tgt, comp, inv); });
}

// ---- sites

/// Non-identity arrows, their composites, and every covering sieve but the maximal ones.
inline json to_json(const Site& s)
{
    const auto& c = s.category;
    json arrows = json::array(), comp = json::array(), covers = json::object();
    for (Arrow a = 0; a < c.num_arrows(); ++a)
        if (!c.is_identity(a))
            arrows.push_back({{"id", c.arrow_name(a)}, {"src", c.object_name(c.src(a))}, {"tgt", c.object_name(c.tgt(a))}});
    for (Arrow g = 0; g < c.num_arrows(); ++g)
        for (Arrow f = 0; f < c.num_arrows(); ++f)
            if (!c.is_identity(g) && !c.is_identity(f) && c.comp(g, f) != kNoArrow)
                comp.push_back({c.arrow_name(g), c.arrow_name(f), c.arrow_name(c.comp(g, f))});
    for (std::size_t x = 0; x < c.num_objects(); ++x) {
        json fams = json::array();
        for (const auto& sv : s.topology.covering[x]) {
            if (sv == maximal_sieve(c, x)) continue;
            json fam = json::array();
            for (Arrow a = sv.next(0); a < c.num_arrows(); a = sv.next(a + 1)) fam.push_back(c.arrow_name(a));
            fams.push_back(std::move(fam));
        }
        if (!fams.empty()) covers[c.object_name(x)] = std::move(fams);
    }
    return {{"objects", c.objects()}, {"arrows", arrows}, {"comp", comp}, {"covers", covers}};
}

inline Site site_from_json(const json& j, const std::string& path = "")
{
    using detail::field;
    auto objects = detail::strings(field(j, "objects", path), path + "/objects");
    const json& arr = field(j, "arrows", path);
    if (!arr.is_array()) throw InputError(path + "/arrows: expected an array");
    std::vector<ArrowSpec> arrows;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string p = path + "/arrows/" + std::to_string(i);
        arrows.push_back({detail::str(field(arr[i], "id", p), p + "/id"), detail::str(field(arr[i], "src", p), p + "/src"),
                          detail::str(field(arr[i], "tgt", p), p + "/tgt")});
    }
    std::vector<std::array<std::string, 3>> comp;
    if (j.contains("comp")) comp = detail::tuples<3>(j["comp"], path + "/comp");
    FiniteCategory c = detail::at_path(path + "/arrows", [&] { return FiniteCategory(objects, arrows, comp); });
    std::map<std::string, std::vector<std::vector<std::string>>> covers;
    if (j.contains("covers")) {
        if (!j["covers"].is_object()) throw InputError(path + "/covers: expected an object");
        for (const auto& [k, v] : j["covers"].items()) {
            const std::string p = path + "/covers/" + k;
            if (!v.is_array()) throw InputError(p + ": expected an array of families");
            for (std::size_t i = 0; i < v.size(); ++i) covers[k].push_back(detail::strings(v[i], p + "/" + std::to_string(i)));
        }
    }
    Topology t = detail::at_path(path + "/covers", [&] { return topology_from_covers(c, covers); });
    return {std::move(c), std::move(t)};
}

// ---- dispatch

enum class InputKind { Lattice, Quantaloid, Groupoid, Site, Category };

inline const char* kind_name(InputKind k)
{
    switch (k) {
    case InputKind::Lattice: return "lattice";
    case InputKind::Quantaloid: return "quantaloid";
    case InputKind::Groupoid: return "groupoid";
    case InputKind::Site: return "site";
    case InputKind::Category: return "category";
    }
    return "?";
}

/// Guesses the kind from the keys present.
inline InputKind detect_kind(const json& j)
{
    if (!j.is_object()) throw InputError("top level must be a JSON object");
    if (j.contains("base")) return InputKind::Category;
    if (j.contains("homs")) return InputKind::Quantaloid;
    if (j.contains("elements")) return InputKind::Lattice;
    if (j.contains("src") && j.contains("tgt")) return InputKind::Groupoid;
    if (j.contains("arrows") && j.contains("objects")) return InputKind::Site;
    throw InputError("cannot tell the kind of input from its keys");
}

/// The quantaloid a file stands for: a lattice as a locale, a groupoid
/// through its quantale of arrow sets, a site through its closed cribles.
inline FiniteQuantaloid quantaloid_of(const json& j, const std::string& path = "")
{
    switch (detect_kind(j)) {
    case InputKind::Lattice: {
        auto l = lattice_from_json(j, path);
        if (!l.is_locale()) throw InputError((path.empty() ? "lattice" : path) + ": not distributive, so not a locale");
        return locale_quantale(l);
    }
    case InputKind::Quantaloid: return quantaloid_from_json(j, path);
    case InputKind::Groupoid: return groupoid_quantale(groupoid_from_json(j, path));
    case InputKind::Site: return closed_crible_quantaloid(site_from_json(j, path)).q;
    case InputKind::Category: break;
    }
    throw InputError((path.empty() ? "input" : path) + ": a category does not name a quantaloid; use its base");
}

// ---- categories over a base

inline json category_json(const QCategory& a, const json& base)
{
    const auto& q = *a.base();
    json objects = json::object(), hom = json::array();
    for (std::size_t x = 0; x < a.size(); ++x) objects[a.name(x)] = q.object_name(a.type(x));
    for (std::size_t y = 0; y < a.size(); ++y)
        for (std::size_t x = 0; x < a.size(); ++x)
            hom.push_back({a.name(y), a.name(x), a.hom().hom(y, x).name(a.hom().at(y, x))});
    return {{"base", base}, {"objects", objects}, {"hom", hom}};
}

inline json to_json(const QCategory& a) { return category_json(a, to_json(*a.base())); }

/// Omitted hom entries are bottom. The base is any input naming a quantaloid.
inline CatPtr category_from_json(const json& j, const std::string& path = "")
{
    using detail::field;
    auto base = std::make_shared<const FiniteQuantaloid>(quantaloid_of(field(j, "base", path), path + "/base"));
    const json& objs = field(j, "objects", path);
    if (!objs.is_object()) throw InputError(path + "/objects: expected an object");
    TypedSet t;
    for (const auto& [k, v] : objs.items()) {
        const std::string p = path + "/objects/" + k;
        const std::string type = detail::str(v, p);
        const auto& names = base->objects();
        auto it = std::find(names.begin(), names.end(), type);
        if (it == names.end()) throw InputError(p + ": unknown base object '" + type + "'");
        t.names.push_back(k);
        t.types.push_back(static_cast<ObjId>(it - names.begin()));
    }
    Matrix m(base, t, t);
    std::size_t i = 0;
    for (const auto& [ys, xs, e] : detail::tuples<3>(field(j, "hom", path), path + "/hom")) {
        const std::string p = path + "/hom/" + std::to_string(i++);
        const std::size_t y = detail::at_path(p, [&] { return t.index_of(ys); });
        const std::size_t x = detail::at_path(p, [&] { return t.index_of(xs); });
        m.set(y, x, detail::element(m.hom(y, x), e, p + "/2"));
    }
    return detail::at_path(path.empty() ? "category" : path, [&] { return make_category(std::move(m)); });
}

} // namespace quantalib

#endif
