#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "nkt/formulas.hpp"
#include "nkt/graph.hpp"
#include "nkt/indices.hpp"
#include "nkt/transform.hpp"
#include "nkt/verify.hpp"

namespace {

using nkt::Graph;

// Generator shorthand: cycle:7, complete:5, path:4, star:6, kab:2,3,
// gnm:10,15,seed. Anything without ':' is treated as a file path.
Graph graph_from_spec(const std::string& spec, uint64_t default_seed) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) {
        std::ifstream in(spec);
        if (!in) throw std::runtime_error("cannot open input file: " + spec);
        std::ostringstream buf;
        buf << in.rdbuf();
        return nkt::parse_edge_list(buf.str());
    }
    std::string family = spec.substr(0, colon);
    std::vector<long long> args;
    std::istringstream rest(spec.substr(colon + 1));
    std::string tok;
    while (std::getline(rest, tok, ',')) args.push_back(std::stoll(tok));
    auto want = [&](size_t lo, size_t hi) {
        if (args.size() < lo || args.size() > hi)
            throw std::runtime_error("bad parameter count in generator spec: " + spec);
    };
    if (family == "cycle") { want(1, 1); return nkt::cycle_graph((int)args[0]); }
    if (family == "complete") { want(1, 1); return nkt::complete_graph((int)args[0]); }
    if (family == "path") { want(1, 1); return nkt::path_graph((int)args[0]); }
    if (family == "star") { want(1, 1); return nkt::star_graph((int)args[0]); }
    if (family == "kab") {
        want(2, 2);
        return nkt::complete_bipartite_graph((int)args[0], (int)args[1]);
    }
    if (family == "gnm") {
        want(2, 3);
        uint64_t seed = args.size() == 3 ? (uint64_t)args[2] : default_seed;
        return nkt::gnm_random_graph((int)args[0], (int)args[1], seed);
    }
    throw std::runtime_error("unknown generator family: " + family);
}

nkt::TransformKind kind_or_throw(const std::string& name) {
    auto k = nkt::parse_kind(name);
    if (!k) throw std::runtime_error("unknown variant name: " + name);
    return *k;
}

nlohmann::ordered_json index_report_json(const nkt::IndexReport& r) {
    return {
        {"n", r.n},          {"m", r.m},
        {"M1", r.m1},        {"M2", r.m2},
        {"NK", r.nk.str()},  {"Pi1", r.pi1.str()},
        {"Pi2", r.pi2.str()}, {"Pi1star", r.pi1star.str()},
    };
}

nlohmann::ordered_json transform_degrees_json(const nkt::TransformedGraph& t) {
    nlohmann::ordered_json roles = nlohmann::ordered_json::array();
    const Graph& src = t.source();
    for (int tv = 0; tv < t.graph().vertex_count(); ++tv) {
        std::ostringstream label;
        if (tv < src.vertex_count()) {
            label << "v" << tv;
        } else {
            const auto& e = src.edges()[tv - src.vertex_count()];
            label << "e" << e.first << "-" << e.second;
        }
        roles.push_back({{"role", label.str()}, {"degree", t.graph().degree(tv)}});
    }
    return {{"variant", std::string(kind_name(t.kind()))},
            {"source", t.source_hash()},
            {"n", src.vertex_count()},
            {"m", src.edge_count()},
            {"degrees", roles}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"transformation-graph toolkit: generation, degree-based "
                 "indices, closed-form verification"};
    app.require_subcommand(1);

    std::string input, variant_name, allowlist_path;
    bool json_out = false, dot_out = false;
    bool use_oracle = false, use_formula = false, use_bound = false;
    uint64_t seed = 0;
    int max_n = 6;
    bool connected_only = true;

    auto* gen = app.add_subcommand("gen", "emit a generated graph as edge-list text");
    gen->add_option("spec", input, "generator spec, e.g. cycle:5 or gnm:10,15,7")
        ->required();
    gen->add_flag("--dot", dot_out, "emit DOT instead of edge list");
    gen->add_option("--seed", seed, "seed for gnm when not given in the spec");

    auto* tr = app.add_subcommand("transform", "materialize a transformation graph");
    tr->add_option("input", input, "edge-list file or generator spec")->required();
    tr->add_option("variant,--variant", variant_name,
                   "variant name (total, t1, t2, g+-, ..., g---)");
    tr->add_flag("--dot", dot_out, "DOT with role-annotated labels");
    tr->add_flag("--json", json_out, "JSON degree sequence by role");
    tr->add_option("--seed", seed, "seed for gnm specs");

    auto* idx = app.add_subcommand("index", "degree-based indices of a graph");
    idx->add_option("input", input, "edge-list file or generator spec")->required();
    idx->add_flag("--json", json_out, "JSON output");
    idx->add_option("--seed", seed, "seed for gnm specs");

    auto* nkc = app.add_subcommand("nk", "Narumi-Katayama index of a transformation");
    nkc->add_option("input", input, "edge-list file or generator spec")->required();
    nkc->add_option("variant,--variant", variant_name, "variant name");
    nkc->add_flag("--oracle", use_oracle, "value from the built graph");
    nkc->add_flag("--formula", use_formula, "value from the closed-form degrees");
    nkc->add_flag("--bound", use_bound, "AM-GM upper bound (bounded variants)");
    nkc->add_flag("--json", json_out, "JSON output");
    nkc->add_option("--seed", seed, "seed for gnm specs");

    auto* ver = app.add_subcommand("verify", "corpus-wide oracle/formula verification");
    ver->add_option("--max-n", max_n, "enumeration limit (default 6)");
    ver->add_flag("--connected-only,!--include-disconnected", connected_only,
                  "restrict enumeration to connected graphs (default on)");
    ver->add_flag("--json", json_out, "full JSON report");
    ver->add_option("--allowlist", allowlist_path,
                    "JSON array of claim ids expected to be errata");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (gen->parsed()) {
            Graph g = graph_from_spec(input, seed);
            std::cout << (dot_out ? nkt::to_dot(g) : nkt::format_edge_list(g));
            return 0;
        }
        if (tr->parsed()) {
            if (variant_name.empty()) throw std::runtime_error("missing variant name");
            Graph g = graph_from_spec(input, seed);
            auto t = nkt::build_transform(g, kind_or_throw(variant_name));
            if (json_out)
                std::cout << transform_degrees_json(t).dump(2) << "\n";
            else if (dot_out)
                std::cout << nkt::to_dot(t);
            else
                std::cout << nkt::format_edge_list(t.graph());
            return 0;
        }
        if (idx->parsed()) {
            Graph g = graph_from_spec(input, seed);
            nkt::IndexReport r = nkt::compute_indices(g);
            if (json_out) {
                std::cout << index_report_json(r).dump(2) << "\n";
            } else {
                std::cout << "n " << r.n << "\nm " << r.m << "\nM1 " << r.m1
                          << "\nM2 " << r.m2 << "\nNK " << r.nk << "\nPi1 "
                          << r.pi1 << "\nPi2 " << r.pi2 << "\nPi1star "
                          << r.pi1star << "\n";
            }
            return 0;
        }
        if (nkc->parsed()) {
            if (variant_name.empty()) throw std::runtime_error("missing variant name");
            Graph g = graph_from_spec(input, seed);
            nkt::TransformKind kind = kind_or_throw(variant_name);
            if (!use_oracle && !use_formula && !use_bound)
                use_oracle = use_formula = true;
            nlohmann::ordered_json j;
            std::optional<nkt::BigNat> oracle, formula;
            if (use_oracle) {
                oracle = nkt::nk(nkt::build_transform(g, kind).graph());
                j["oracle"] = oracle->str();
                if (!json_out) std::cout << "oracle " << *oracle << "\n";
            }
            if (use_formula) {
                formula = nkt::nk_exact(kind, g);
                j["formula"] = formula ? nlohmann::ordered_json(formula->str())
                                       : nlohmann::ordered_json(nullptr);
                if (!json_out) {
                    if (formula)
                        std::cout << "formula " << *formula << "\n";
                    else
                        std::cout << "formula NOT_APPLICABLE\n";
                }
            }
            if (use_bound) {
                if (!nkt::has_bound(kind))
                    throw std::runtime_error("variant has no AM-GM bound: " +
                                             variant_name);
                nkt::BoundResult b = nkt::nk_bound(kind, g);
                std::string text = "NOT_APPLICABLE";
                if (b.applicable && b.bound) {
                    std::ostringstream s;
                    s << numerator(*b.bound);
                    if (denominator(*b.bound) != 1) s << "/" << denominator(*b.bound);
                    text = s.str();
                }
                j["bound"] = text;
                if (!json_out) std::cout << "bound " << text << "\n";
            }
            int rc = 0;
            if (use_oracle && use_formula) {
                bool match = formula && *formula == *oracle;
                j["verdict"] = match ? "MATCH" : "MISMATCH";
                if (!json_out) std::cout << (match ? "MATCH" : "MISMATCH") << "\n";
                if (!match) rc = 2;
            }
            if (json_out) std::cout << j.dump(2) << "\n";
            return rc;
        }
        if (ver->parsed()) {
            nkt::CorpusSpec spec;
            spec.enum_max_n = max_n;
            spec.connected_only = connected_only;
            spec.all_graphs_max_n = std::min(4, max_n);
            auto allowlist = allowlist_path.empty()
                                 ? nkt::default_errata_allowlist()
                                 : nkt::load_allowlist(allowlist_path);
            nkt::Report report = nkt::run_suite(spec, allowlist);
            if (json_out)
                std::cout << nkt::report_to_json(report).dump(2) << "\n";
            else
                std::cout << nkt::report_to_text(report);
            return report.ok() ? 0 : 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
