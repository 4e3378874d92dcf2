// loopkit command line: check properties, evaluate identities, build
// isotopes, search for loops, verify the claim catalog over a corpus, and
// print the identity/claim catalog.
//
// Exit codes: 0 success / property holds; 1 property falsified or claim
// violations; 2 usage or parse error; 3 internal invariant breach (the
// universality methods disagreed, which the characterization theorems rule
// out).

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "loopkit/constructions.hpp"
#include "loopkit/jsonio.hpp"
#include "loopkit/loopfile.hpp"
#include "loopkit/search.hpp"
#include "loopkit/theoremlab.hpp"

namespace fs = std::filesystem;
using namespace loopkit;

namespace {

struct UsageError : Error {
    using Error::Error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

LoopFile load_file(const std::string& path) { return parse_loop_file(slurp(path)); }

const NamedLoop& find_loop(const LoopFile& file, const std::string& name) {
    if (const NamedLoop* nl = file.find(name)) return *nl;
    throw UsageError("no loop named '" + name + "' in file");
}

Method parse_method(const std::string& m) {
    if (m == "identity") return Method::identity;
    if (m == "bruteforce") return Method::bruteforce;
    if (m == "both") return Method::both;
    throw UsageError("unknown method '" + m + "'");
}

std::string witness_text(const PropertyReport& rep) {
    if (!rep.witness) return "";
    return " witness " + rep.witness->to_string();
}

// Corpus assembly: each argument is a loop file or a directory of *.loops
// files (taken in sorted name order).
Corpus load_corpus(const std::vector<std::string>& paths) {
    Corpus corpus;
    for (const auto& p : paths) {
        std::vector<std::string> files;
        if (fs::is_directory(p)) {
            for (const auto& entry : fs::directory_iterator(p))
                if (entry.path().extension() == ".loops") files.push_back(entry.path().string());
            std::sort(files.begin(), files.end());
        } else {
            files.push_back(p);
        }
        for (const auto& f : files)
            for (auto& nl : load_file(f).loops) corpus.push_back(std::move(nl));
    }
    if (corpus.empty()) throw UsageError("corpus is empty");
    return corpus;
}

int cmd_check(const std::string& path, const std::string& name,
              const std::vector<std::string>& props, Method method, const std::string& format,
              int jobs) {
    LoopFile file = load_file(path);
    const NamedLoop& nl = find_loop(file, name);
    for (const auto& p : props)
        if (!is_known_property(p)) throw UsageError("unknown property '" + p + "'");

    std::vector<PropertyReport> reports(props.size(),
                                        PropertyReport{"", false, Method::identity, std::nullopt});
    parallel_for(props.size(), jobs, [&](std::size_t i) {
        Method m = is_universality_property(props[i]) ? method : Method::identity;
        reports[i] = property(nl.loop, props[i], m);
    });

    bool all = true;
    for (const auto& rep : reports) {
        all = all && rep.holds;
        if (format == "structured")
            std::cout << to_json(nl.name, rep).dump() << "\n";
        else
            std::cout << nl.name << " " << rep.property << ": " << (rep.holds ? "holds" : "fails")
                      << " [" << method_name(rep.method) << "]" << witness_text(rep) << "\n";
    }
    return all ? 0 : 1;
}

int cmd_identity(const std::string& path, const std::string& name, const std::string& expr,
                 const std::string& format) {
    LoopFile file = load_file(path);
    const NamedLoop& nl = find_loop(file, name);
    Identity id = Identity::parse("cli", expr);
    CheckResult res = id.holds(nl.loop);
    if (format == "structured") {
        std::cout << identity_record(nl.name, id.text(), res).dump() << "\n";
    } else if (res.holds) {
        std::cout << nl.name << " |= " << id.text() << "\n";
    } else {
        std::cout << nl.name << " fails " << id.text() << " at {";
        for (std::size_t i = 0; i < res.counterexample->size(); ++i) {
            if (i) std::cout << ",";
            std::cout << (*res.counterexample)[i].first << "=" << (*res.counterexample)[i].second;
        }
        std::cout << "}\n";
    }
    return res.holds ? 0 : 1;
}

int cmd_isotope(const std::string& path, const std::string& name, int u, int v) {
    LoopFile file = load_file(path);
    const NamedLoop& nl = find_loop(file, name);
    if (u < 0 || u >= nl.loop.order() || v < 0 || v >= nl.loop.order())
        throw UsageError("translation elements out of range");
    FiniteLoop iso = principal_isotope(nl.loop, IsotopeSpec::full(u, v));
    std::string comment = "principal isotope of " + nl.name + " with u=" + std::to_string(u) +
                          " v=" + std::to_string(v) + "\nidentity " + std::to_string(iso.identity()) +
                          " (pre-normalization)";
    std::cout << print_loop_block(nl.name + "_iso_" + std::to_string(u) + "_" + std::to_string(v),
                                  iso, comment);
    return 0;
}

int cmd_search(int order, const std::vector<std::string>& require,
               const std::vector<std::string>& forbid, std::optional<int> limit, bool first,
               bool count_only, int jobs, std::uint64_t seed, const std::string& format) {
    SearchQuery q;
    q.order = order;
    q.require = require;
    q.forbid = forbid;
    q.limit = limit;
    q.mode = first ? SearchQuery::Mode::first : SearchQuery::Mode::exhaustive;
    SearchOptions opts;
    opts.jobs = jobs;
    opts.seed = seed;
    auto hits = run_search(q, opts);

    if (count_only) {
        if (format == "structured") {
            ordered_json j;
            j["record"] = "search-summary";
            j["order"] = order;
            j["hits"] = hits.size();
            std::cout << j.dump() << "\n";
        } else {
            std::cout << hits.size() << "\n";
        }
        return 0;
    }

    std::string provenance = "found by search: order=" + std::to_string(order);
    if (!require.empty()) {
        provenance += " require=[";
        for (std::size_t i = 0; i < require.size(); ++i)
            provenance += (i ? "," : "") + require[i];
        provenance += "]";
    }
    if (!forbid.empty()) {
        provenance += " forbid=[";
        for (std::size_t i = 0; i < forbid.size(); ++i) provenance += (i ? "," : "") + forbid[i];
        provenance += "]";
    }
    for (std::size_t i = 0; i < hits.size(); ++i) {
        std::string hit_name = "hit" + std::to_string(i);
        if (format == "structured") {
            ordered_json j;
            j["record"] = "search-hit";
            j["name"] = hit_name;
            j["order"] = hits[i].loop.order();
            ordered_json rows = ordered_json::array();
            for (const auto& row : hits[i].loop.rows()) rows.push_back(row);
            j["table"] = std::move(rows);
            std::cout << j.dump() << "\n";
        } else {
            if (i) std::cout << "\n";
            std::cout << print_loop_block(hit_name, hits[i].loop, provenance);
        }
    }
    if (format == "structured") {
        ordered_json j;
        j["record"] = "search-summary";
        j["order"] = order;
        j["hits"] = hits.size();
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "# hits: " << hits.size() << "\n";
    }
    return 0;
}

int cmd_verify(const std::vector<std::string>& paths, Method method, int jobs,
               const std::string& format) {
    Corpus corpus = load_corpus(paths);
    auto reports = run_claims(claims(), corpus, jobs, method);

    int hard = 0, warnings = 0;
    for (const auto& rep : reports) {
        if (!rep.violations.empty()) (rep.low_confidence ? warnings : hard) += 1;
        if (format == "structured") {
            std::cout << to_json(rep).dump() << "\n";
        } else {
            std::cout << (rep.low_confidence ? "~ " : "  ") << rep.id << ": tested=" << rep.tested
                      << " vacuous=" << rep.vacuous << " verified=" << rep.verified
                      << " violations=" << rep.violations.size() << "\n";
            for (const auto& v : rep.violations)
                std::cout << (rep.low_confidence ? "      warning " : "      VIOLATION ") << v.loop
                          << ": " << v.detail << "\n";
        }
    }
    if (format == "structured") {
        ordered_json j;
        j["record"] = "verify-summary";
        j["loops"] = corpus.size();
        j["claims"] = reports.size();
        j["hard_violations"] = hard;
        j["warning_violations"] = warnings;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "loops=" << corpus.size() << " claims=" << reports.size()
                  << " hard-violations=" << hard << " warning-violations=" << warnings << "\n";
    }
    return hard == 0 ? 0 : 1;
}

int cmd_catalog(const std::string& format) {
    for (const auto& e : registry()) {
        if (format == "structured") {
            std::cout << catalog_record(e).dump() << "\n";
        } else {
            std::cout << e.key << (e.low_confidence ? " ~" : "") << "\n    [" << e.label << "] "
                      << e.identity.text() << "\n";
            if (!e.note.empty()) std::cout << "    note: " << e.note << "\n";
        }
    }
    for (const auto& c : claims()) {
        if (format == "structured") {
            ordered_json j;
            j["record"] = "catalog-claim";
            j["id"] = c.id;
            j["statement"] = c.statement;
            j["hypothesis"] = c.hypothesis;
            j["body"] = c.body == Claim::Body::equivalence ? "equivalence" : "implication";
            ordered_json groups = ordered_json::array();
            for (const auto& g : c.groups) {
                ordered_json names = ordered_json::array();
                for (const auto& ref : g) names.push_back(ref.name);
                groups.push_back(std::move(names));
            }
            j["groups"] = std::move(groups);
            j["low_confidence"] = c.low_confidence;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "claim " << c.id << (c.low_confidence ? " ~" : "") << "\n";
            if (!c.statement.empty()) std::cout << "    " << c.statement << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite loop computation kernel"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    int jobs = 1;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 64));

    std::string file, loop_name, expr, method_str = "identity";
    std::vector<std::string> props, require, forbid, corpus_paths;
    int order = 0, iso_u = 0, iso_v = 0;
    int limit = -1;
    bool first = false, count_only = false;
    std::uint64_t seed = 1;

    auto* check = app.add_subcommand("check", "evaluate loop properties");
    check->add_option("file", file)->required();
    check->add_option("loop", loop_name)->required();
    check->add_option("properties", props)->required();
    check->add_option("--method", method_str)->check(CLI::IsMember({"identity", "bruteforce", "both"}));

    auto* ident = app.add_subcommand("identity", "evaluate an identity over a loop");
    ident->add_option("file", file)->required();
    ident->add_option("loop", loop_name)->required();
    ident->add_option("expression", expr)->required();

    auto* isotope = app.add_subcommand("isotope", "emit a principal isotope as loop-file text");
    isotope->add_option("file", file)->required();
    isotope->add_option("loop", loop_name)->required();
    isotope->add_option("u", iso_u)->required();
    isotope->add_option("v", iso_v)->required();

    auto* search = app.add_subcommand("search", "enumerate loops matching property filters");
    search->add_option("--order", order)->required();
    search->add_option("--require", require);
    search->add_option("--forbid", forbid);
    search->add_option("--limit", limit);
    search->add_flag("--first", first, "stop at the first match (orders up to 10)");
    search->add_flag("--count", count_only, "print only the number of matches");
    search->add_option("--seed", seed, "seed for randomized restarts (orders 9-10)");

    auto* verify = app.add_subcommand("verify", "run the claim catalog over a corpus");
    verify->add_option("corpus", corpus_paths, "loop files or directories of *.loops")->required();
    verify->add_option("--method", method_str)->check(CLI::IsMember({"identity", "both"}));

    auto* catalog = app.add_subcommand("catalog", "print the identity and claim catalog");
    for (auto* sc : {check, ident, isotope, search, verify, catalog}) sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (check->parsed())
            return cmd_check(file, loop_name, props, parse_method(method_str), format, jobs);
        if (ident->parsed()) return cmd_identity(file, loop_name, expr, format);
        if (isotope->parsed()) return cmd_isotope(file, loop_name, iso_u, iso_v);
        if (search->parsed())
            return cmd_search(order, require, forbid,
                              limit >= 0 ? std::optional<int>(limit) : std::nullopt, first,
                              count_only, jobs, seed, format);
        if (verify->parsed())
            return cmd_verify(corpus_paths, method_str == "identity" ? Method::identity : Method::both,
                              jobs, format);
        if (catalog->parsed()) return cmd_catalog(format);
    } catch (const MethodDisagreementError& e) {
        std::cerr << "INTERNAL INVARIANT BREACH: " << e.what()
                  << "\nthe identity and brute-force universality checks disagreed\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
