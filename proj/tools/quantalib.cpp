// quantalib: check predicates, run constructions, verify suites, run oracles.
// Exit codes: 0 all pass, 1 a verdict failed, 2 bad input, 3 resource cap hit.

#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "quantalib/quantalib.hpp"

using namespace quantalib;

namespace {

struct Options {
    std::string format = "json";
    Limits lim;
};

using PredicateFn = std::function<Finding(const std::string&, const FiniteQuantaloid&, const Limits&)>;

Finding first_failure(const std::string& subject, const std::string& name, const std::vector<PredicateResult>& parts,
                      const FiniteQuantaloid& q)
{
    Finding f{"", subject, name, true, json::object()};
    for (const auto& p : parts) {
        f.evidence[p.name] = p.holds;
        if (!p.holds && f.holds) {
            f.holds = false;
            Finding inner = finding(subject, p, q);
            for (const auto& [k, v] : inner.evidence.items()) f.evidence[k] = v;
        }
    }
    return f;
}

const std::vector<std::pair<std::string, PredicateFn>>& predicate_table()
{
    using Q = const FiniteQuantaloid&;
    using S = const std::string&;
    using L = const Limits&;
    auto simple = [](PredicateResult (*fn)(Q)) -> PredicateFn {
        return [fn](S s, Q q, L) { return finding(s, fn(q), q); };
    };
    static const std::vector<std::pair<std::string, PredicateFn>> table{
        {"residuation", simple(residuation)},
        {"locally_localic", simple(locally_localic)},
        {"map_discrete", simple(map_discrete)},
        {"weakly_tabular", simple(weakly_tabular)},
        {"map_tabular", simple(map_tabular)},
        {"weakly_modular", simple(weakly_modular)},
        {"tabular", simple(tabular)},
        {"modular", simple(modular)},
        {"semi_simple", simple(semi_simple)},
        {"weakly_semi_simple", simple(weakly_semi_simple)},
        {"stably_gelfand", simple(stably_gelfand)},
        {"modular_regular", simple(modular_regular)},
        {"left_adjoints_symmetric", simple(left_adjoints_symmetric)},
        {"cauchy_bilateral", [](S s, Q q, L lim) { return finding(s, cauchy_bilateral(q, lim.max_cliques), q); }},
        {"closed_crible", [](S s, Q q, L) { return first_failure(s, "closed_crible", closed_crible_axioms(q), q); }},
        {"grothendieck",
         [](S s, Q q, L) { return first_failure(s, "grothendieck", grothendieck_definition(q), q); }},
        {"grothendieck_via_top", [](S s, Q q, L) { return finding(s, grothendieck_via_top(q), q); }},
    };
    return table;
}

std::vector<std::string> split_list(const std::string& s)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

Report cmd_check(const std::string& path, const std::string& predicates, const Options& opt)
{
    const FiniteQuantaloid q = quantaloid_of(read_json_file(path));
    Report r{"check", {}, json::object()};
    const auto& table = predicate_table();
    if (predicates.empty() || predicates == "all") {
        json skipped = json::array();
        for (const auto& [name, fn] : table) {
            try {
                r.findings.push_back(fn(path, q, opt.lim));
            } catch (const CapabilityError& e) {
                skipped.push_back(name + ": " + e.what());
            }
        }
        if (!skipped.empty()) r.extra["skipped"] = skipped;
        return r;
    }
    for (const auto& want : split_list(predicates)) {
        auto it = std::find_if(table.begin(), table.end(), [&](const auto& p) { return p.first == want; });
        if (it == table.end()) throw InputError("unknown predicate '" + want + "'");
        r.findings.push_back(it->second(path, q, opt.lim));
    }
    return r;
}

// ---- construct

struct ConstructArgs {
    std::string path;
    std::string op;
    std::size_t max = 2;
    std::string mode = "symmetric";
    std::vector<std::string> idempotents;
    std::string out;
};

Finding axioms_finding(const std::string& subject, const FiniteQuantaloid& q)
{
    Finding f{"", subject, "axioms", true, json::object()};
    if (auto cx = q.validate()) {
        f.holds = false;
        f.evidence["counterexample"] = counterexample_json(*cx, q);
    }
    return f;
}

/// "X:e" names an endomorphism of X.
Morphism parse_endo(const FiniteQuantaloid& q, const std::string& s)
{
    auto p = s.rfind(':');
    if (p == std::string::npos) throw InputError("idempotent '" + s + "' is not of the form OBJECT:ELEMENT");
    const auto& o = q.objects();
    auto it = std::find(o.begin(), o.end(), s.substr(0, p));
    if (it == o.end()) throw InputError("unknown object in '" + s + "'");
    const ObjId x = static_cast<ObjId>(it - o.begin());
    return {x, x, q.hom(x, x).index_of(s.substr(p + 1))};
}

json census_json(const SheafCensus& c, const QuantaloidPtr& base)
{
    const json b = to_json(*base);
    json reps = json::array();
    for (const auto& a : c.representatives) reps.push_back(category_json(*a, b));
    return reps;
}

void census_findings(Report& r, const json& in, const SheafCensus& c, std::size_t n, bool symmetric,
                     const std::string& subject)
{
    r.extra["classes"] = c.representatives.size();
    r.extra["categories_enumerated"] = c.categories;
    if (!symmetric) return;
    // compare against the brute-force counters where one applies
    const InputKind k = detect_kind(in);
    if (k == InputKind::Groupoid) {
        const auto g = groupoid_from_json(in);
        if (g.objects().size() == 1) {
            const std::size_t orbits = count_gsets_by_orbits(g, n);
            r.findings.push_back({"", subject, "classes_match_gsets_by_orbits", orbits == c.representatives.size(),
                                  {{"oracle", orbits}, {"gsets_by_elements", count_gsets_by_elements(g, n)}}});
        }
    } else if (k == InputKind::Lattice) {
        const std::size_t oracle = count_locale_sheaves(lattice_from_json(in), n);
        r.findings.push_back(
            {"", subject, "classes_match_locale_sheaves", oracle == c.representatives.size(), {{"oracle", oracle}}});
    }
}

Report cmd_construct(const ConstructArgs& a, const Options& opt)
{
    const json in = read_json_file(a.path);
    Report r{"construct", {}, {{"op", a.op}}};
    json artifact;
    const std::string& s = a.path;
    if (a.op == "ssi" || a.op == "split") {
        const FiniteQuantaloid q = quantaloid_of(in);
        SplitQuantaloid sp;
        if (a.op == "ssi") {
            sp = ssi(q);
        } else if (a.idempotents.empty()) {
            sp = si(q);
        } else {
            std::vector<Morphism> es;
            for (const auto& e : a.idempotents) es.push_back(parse_endo(q, e));
            sp = split_idempotents(q, es);
        }
        r.findings.push_back(axioms_finding(s, sp.split));
        r.extra["objects"] = sp.split.num_objects();
        artifact = to_json(sp.split);
    } else if (a.op == "morita-quantale") {
        auto m = morita_quantale(shared_quantaloid(quantaloid_of(in)));
        r.findings.push_back(axioms_finding(s, m.qm));
        r.findings.push_back({"", s, "embedding_fully_faithful", morita_embedding_fully_faithful(m), json::object()});
        r.extra["elements"] = m.qm.hom(0, 0).size();
        artifact = to_json(m.qm);
    } else if (a.op == "crible-quantaloid") {
        if (detect_kind(in) != InputKind::Site) throw InputError(s + ": crible-quantaloid needs a site");
        const auto cq = closed_crible_quantaloid(site_from_json(in));
        for (const auto& p : closed_crible_axioms(cq.q)) r.findings.push_back(finding(s, p, cq.q));
        r.findings.push_back(finding(s, modular(cq.q), cq.q));
        artifact = to_json(cq.q);
    } else if (a.op == "site-roundtrip") {
        if (detect_kind(in) == InputKind::Site) {
            const Site site = site_from_json(in);
            const Site back = topology_from_quantaloid(closed_crible_quantaloid(site).q);
            r.findings.push_back({"", s, "site_recovered", sites_isomorphic(site, back), json::object()});
            artifact = to_json(back);
        } else {
            const FiniteQuantaloid q = quantaloid_of(in);
            const Site site = topology_from_quantaloid(q);
            const auto back = closed_crible_quantaloid(site).q;
            r.findings.push_back(
                {"", s, "quantaloid_recovered", find_isomorphism(q, back, q.has_involution()).has_value(), json::object()});
            artifact = to_json(site);
        }
    } else if (a.op == "sh-q" || a.op == "rel-q") {
        if (a.mode != "symmetric" && a.mode != "all") throw InputError("--mode must be symmetric or all");
        const bool symmetric = a.mode == "symmetric";
        auto q = shared_quantaloid(quantaloid_of(in));
        const auto census = enumerate_sheaves(q, a.max, symmetric, opt.lim.max_morita, opt.lim.max_categories);
        census_findings(r, in, census, a.max, symmetric, s);
        const QuantaloidPtr base = census.representatives.empty() ? q : census.representatives.front()->base();
        artifact = {{"classes", census_json(census, base)}};
        if (a.op == "rel-q") {
            // morphisms between classes: all distributors between representatives
            json counts = json::array();
            for (const auto& b : census.representatives) {
                json row = json::array();
                for (const auto& c : census.representatives) {
                    std::uint64_t k = 0;
                    for_each_distributor(c, b, opt.lim.max_morita, "distributors", [&](const Distributor&) {
                        ++k;
                        return true;
                    });
                    row.push_back(k);
                }
                counts.push_back(std::move(row));
            }
            artifact["distributors"] = counts;
        }
    } else {
        throw InputError("unknown construction '" + a.op + "'");
    }
    if (a.out.empty()) {
        r.extra["artifact"] = artifact;
    } else {
        write_json_file(a.out, artifact);
        r.extra["artifact"] = a.out;
    }
    return r;
}

// ---- verify

Report cmd_verify(std::vector<std::string> suites, bool inject_fault, const Options& opt)
{
    if (suites.empty()) suites = suite_names();
    auto corpus = standard_corpus();
    Report r{"verify", {}, json::object()};
    if (inject_fault) {
        const Fault f = default_fault(corpus);
        const auto& h = corpus_entry(corpus, f.entry).q->hom(f.x, f.z);
        const auto& q = *corpus_entry(corpus, f.entry).q;
        r.extra["fault"] = f.entry + ": " + q.hom(f.y, f.z).name(f.g) + " o " + q.hom(f.x, f.y).name(f.f) +
                           " := " + h.name(f.result);
        corpus = inject(corpus, f);
    }
    for (const auto& s : suites)
        for (const auto& c : run_suite(s, corpus, opt.lim)) r.findings.push_back(finding(c));
    return r;
}

// ---- oracle

Report cmd_oracle(const std::string& gsets, std::size_t cyclic, const std::string& locale, std::size_t max)
{
    Report r{"oracle", {}, json::object()};
    if (!gsets.empty() || cyclic > 0) {
        const FiniteGroupoid g = gsets.empty() ? FiniteGroupoid::cyclic(cyclic) : groupoid_from_json(read_json_file(gsets));
        json by_elements = json::array(), by_orbits = json::array();
        for (std::size_t n = 0; n <= max; ++n) {
            by_elements.push_back(count_gsets_by_elements(g, n));
            by_orbits.push_back(count_gsets_by_orbits(g, n));
        }
        r.extra["transitive_gsets"] = count_transitive_gsets(g);
        r.extra["gsets_by_elements"] = by_elements;
        r.extra["gsets_by_orbits"] = by_orbits;
    }
    if (!locale.empty()) {
        const auto l = lattice_from_json(read_json_file(locale));
        json counts = json::array();
        for (std::size_t n = 0; n <= max; ++n) counts.push_back(count_locale_sheaves(l, n));
        r.extra["points"] = join_irreducibles(l).size();
        r.extra["locale_sheaves"] = counts;
    }
    if (r.extra.empty()) throw InputError("oracle needs --gsets, --cyclic or --locale");
    return r;
}

void emit(const Report& r, const Options& opt)
{
    if (opt.format == "text")
        std::cout << to_text(r);
    else
        std::cout << to_json(r).dump(2) << '\n';
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Finite quantaloids: predicates, constructions, verification suites and oracles"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--max-presheaves", opt.lim.max_presheaves, "Cap on presheaf enumeration nodes");
    app.add_option("--max-morita", opt.lim.max_morita, "Cap on Morita and distributor search nodes");
    app.add_option("--max-cliques", opt.lim.max_cliques, "Cap on Cauchy-bilaterality search nodes");
    app.add_option("--max-categories", opt.lim.max_categories, "Cap on categories enumerated by censuses");

    auto* check = app.add_subcommand("check", "Run predicates on a structure");
    std::string check_path, predicates;
    check->add_option("path", check_path, "Lattice, quantaloid, groupoid or site JSON")->required();
    check->add_option("--predicates", predicates, "Comma-separated predicate names (default: all)");

    auto* construct = app.add_subcommand("construct", "Build a derived structure");
    ConstructArgs ca;
    construct->add_option("path", ca.path, "Input JSON")->required();
    construct
        ->add_option("--op", ca.op, "Construction")
        ->required()
        ->check(CLI::IsMember(
            {"ssi", "split", "rel-q", "sh-q", "morita-quantale", "site-roundtrip", "crible-quantaloid"}));
    construct->add_option("--max", ca.max, "Object bound for sh-q and rel-q");
    construct->add_option("--mode", ca.mode, "symmetric or all (sh-q, rel-q)");
    construct->add_option("--idempotent", ca.idempotents, "OBJECT:ELEMENT to split (split; default all)");
    construct->add_option("--out", ca.out, "Write the artifact here instead of into the report");

    auto* verify = app.add_subcommand("verify", "Run verification suites on the built-in corpus");
    std::vector<std::string> suites;
    bool inject_fault = false;
    verify->add_option("--suite", suites, "Suite name (repeatable; default all)")
        ->check(CLI::IsMember(suite_names()));
    verify->add_flag("--inject-fault", inject_fault, "Corrupt one composition entry first");

    auto* oracle = app.add_subcommand("oracle", "Brute-force G-set and locale-sheaf counters");
    std::string gsets, locale;
    std::size_t cyclic = 0, oracle_max = 2;
    oracle->add_option("--gsets", gsets, "One-object groupoid JSON");
    oracle->add_option("--cyclic", cyclic, "Use the cyclic group of this order");
    oracle->add_option("--locale", locale, "Lattice JSON of a finite locale");
    oracle->add_option("--max", oracle_max, "Count up to this size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        Report r;
        if (*check)
            r = cmd_check(check_path, predicates, opt);
        else if (*construct)
            r = cmd_construct(ca, opt);
        else if (*verify)
            r = cmd_verify(suites, inject_fault, opt);
        else
            r = cmd_oracle(gsets, cyclic, locale, oracle_max);
        emit(r, opt);
        return r.all_hold() ? 0 : 1;
    } catch (const ResourceError& e) {
        std::cerr << "resource cap: " << e.what() << '\n';
        return 3;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const CapabilityError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
