#ifndef QUANTALIB_REPORT_HPP
#define QUANTALIB_REPORT_HPP

// Deterministic reports: findings in the order they were produced, no
// timing, names rather than indices.

#include <sstream>
#include <string>
#include <vector>

#include "quantalib/io.hpp"
#include "quantalib/predicates.hpp"
#include "quantalib/verify.hpp"

namespace quantalib {

struct Finding {
    std::string group; // criterion, command step, or empty
    std::string subject;
    std::string name;
    bool holds = true;
    json evidence = json::object();
};

struct Report {
    std::string command;
    std::vector<Finding> findings;
    json extra = json::object(); // counts, artifact paths, representatives

    bool all_hold() const
    {
        for (const auto& f : findings)
            if (!f.holds) return false;
        return true;
    }
};

inline json morphism_json(const Morphism& m, const FiniteQuantaloid& q)
{
    return {{"src", q.object_name(m.src)}, {"dst", q.object_name(m.dst)}, {"elt", q.hom(m.src, m.dst).name(m.elt)}};
}

inline json counterexample_json(const Counterexample& cx, const FiniteQuantaloid& q)
{
    json ms = json::array();
    for (const auto& m : cx.morphisms) ms.push_back(morphism_json(m, q));
    json out = {{"check", cx.check}, {"morphisms", ms}};
    if (!cx.detail.empty()) out["detail"] = cx.detail;
    return out;
}

/// Reads a counterexample back against q; the inverse of counterexample_json.
inline Counterexample counterexample_from_json(const json& j, const FiniteQuantaloid& q)
{
    Counterexample cx;
    cx.check = detail::str(detail::field(j, "check", "counterexample"), "counterexample/check");
    auto obj = [&](const std::string& n) {
        const auto& o = q.objects();
        auto it = std::find(o.begin(), o.end(), n);
        if (it == o.end()) throw InputError("counterexample: unknown object '" + n + "'");
        return static_cast<ObjId>(it - o.begin());
    };
    for (const auto& m : detail::field(j, "morphisms", "counterexample")) {
        const ObjId s = obj(detail::str(detail::field(m, "src", "morphism"), "src"));
        const ObjId d = obj(detail::str(detail::field(m, "dst", "morphism"), "dst"));
        cx.morphisms.push_back({s, d, q.hom(s, d).index_of(detail::str(detail::field(m, "elt", "morphism"), "elt"))});
    }
    if (j.contains("detail")) cx.detail = j["detail"].get<std::string>();
    return cx;
}

inline Finding finding(const std::string& subject, const PredicateResult& r, const FiniteQuantaloid& q)
{
    Finding f{"", subject, r.name, r.holds, json::object()};
    if (r.counterexample) {
        f.evidence["counterexample"] = counterexample_json(*r.counterexample, q);
        f.evidence["replays"] = replay(q, *r.counterexample);
    }
    return f;
}

inline Finding finding(const Check& c)
{
    Finding f{c.criterion, c.subject, c.name, c.holds, json::object()};
    for (const auto& [k, v] : c.facts) f.evidence[k] = v;
    if (c.cx && c.on) {
        f.evidence["on"] = c.on_name;
        f.evidence["counterexample"] = counterexample_json(*c.cx, *c.on);
        f.evidence["replays"] = c.replays();
    }
    return f;
}

inline json to_json(const Finding& f)
{
    json out = json::object();
    if (!f.group.empty()) out["group"] = f.group;
    out["subject"] = f.subject;
    out["name"] = f.name;
    out["verdict"] = f.holds;
    if (!f.evidence.empty()) out["evidence"] = f.evidence;
    return out;
}

inline json to_json(const Report& r)
{
    json fs = json::array();
    std::size_t failed = 0;
    for (const auto& f : r.findings) {
        fs.push_back(to_json(f));
        failed += !f.holds;
    }
    json out = {{"command", r.command}, {"verdict", failed == 0}, {"failed", failed}, {"findings", fs}};
    for (const auto& [k, v] : r.extra.items()) out[k] = v;
    return out;
}

namespace detail {

inline std::string morphism_text(const json& m)
{
    return m["src"].get<std::string>() + "->" + m["dst"].get<std::string>() + ":" + m["elt"].get<std::string>();
}

inline std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

} // namespace detail

/// One line per finding, then any extra fields, then a summary line.
inline std::string to_text(const Report& r)
{
    std::ostringstream os;
    std::size_t failed = 0;
    for (const auto& f : r.findings) {
        failed += !f.holds;
        os << (f.holds ? "PASS " : "FAIL ");
        if (!f.group.empty()) os << '[' << f.group << "] ";
        os << f.subject << ' ' << f.name;
        for (const auto& [k, v] : f.evidence.items()) {
            if (k == "counterexample") {
                os << " | " << v["check"].get<std::string>() << " at";
                for (const auto& m : v["morphisms"]) os << ' ' << detail::morphism_text(m);
                if (v.contains("detail")) os << " (" << v["detail"].get<std::string>() << ')';
            } else {
                os << " | " << k << '=' << detail::scalar_text(v);
            }
        }
        os << '\n';
    }
    for (const auto& [k, v] : r.extra.items()) os << k << ": " << detail::scalar_text(v) << '\n';
    os << r.command << ": " << (r.findings.size() - failed) << '/' << r.findings.size() << " passed\n";
    return os.str();
}

} // namespace quantalib

#endif
