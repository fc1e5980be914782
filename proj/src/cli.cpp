#include "tightframe/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tightframe/allocation.hpp"
#include "tightframe/errors.hpp"
#include "tightframe/framework.hpp"
#include "tightframe/generators.hpp"
#include "tightframe/matching.hpp"
#include "tightframe/oracle.hpp"
#include "tightframe/walks.hpp"
#include <CLI11.hpp>
#include <nlohmann/json.hpp>

namespace tightframe {

namespace {

using ordered_json = nlohmann::ordered_json;
namespace fs = std::filesystem;

constexpr const char* kToolVersion = "tightframe 0.1.0";

std::string file_hash(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return "missing";
    uint64_t h = 1469598103934665603ULL;  // FNV-1a
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    std::ostringstream s;
    s << std::hex << h;
    return s.str();
}

ordered_json make_manifest(const std::string& command, const ordered_json& params,
                           const std::vector<std::string>& inputs,
                           const std::vector<std::string>& outputs) {
    ordered_json m;
    m["command"] = command;
    m["parameters"] = params;
    m["tool_version"] = kToolVersion;
    m["input_hashes"] = ordered_json::object();
    for (const auto& p : inputs) m["input_hashes"][p] = file_hash(p);
    m["outputs"] = outputs;
    return m;
}

Graph load_any_graph(const std::string& path) {
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
        return load_graph(path, GraphFormat::Json);
    return load_graph(path, GraphFormat::EdgeList);
}

struct ComponentVerdict {
    int id;
    int edge_count;
    bool spanning;
    bool perfect_matching;
    long long period;
    bool aperiodic;
    bool framework_candidate;
};

ordered_json analyze_graph(const Graph& g, int k) {
    KGraph ambient = build_clique_hypergraph(g, k);
    TightComponents comps = tight_components(ambient);
    ordered_json result;
    result["n"] = g.vertex_count();
    result["k"] = k;
    result["clique_edges"] = ambient.edge_count();
    result["components"] = ordered_json::array();
    bool any = false;
    int best = -1;
    for (int c = 0; c < comps.count; ++c) {
        std::vector<std::vector<int>> edges;
        for (int e = 0; e < ambient.edge_count(); ++e)
            if (comps.component_of_edge[static_cast<size_t>(e)] == c) edges.push_back(ambient.edge(e));
        KGraph sub = KGraph::from_edges(k, g.vertex_count(), edges);
        ComponentVerdict v;
        v.id = c;
        v.edge_count = static_cast<int>(edges.size());
        v.spanning = true;
        for (int u = 0; u < g.vertex_count(); ++u)
            if (sub.degree(u) == 0) { v.spanning = false; break; }
        PeriodInfo info = period(ambient, comps, c);
        v.period = info.d;
        v.aperiodic = info.aperiodic_mod_k;
        v.perfect_matching = has_perfect_fractional_matching(sub).perfect;
        v.framework_candidate = v.spanning && v.perfect_matching;
        if (v.framework_candidate && best < 0) best = c;
        any = any || v.framework_candidate;
        ordered_json cj;
        cj["id"] = v.id;
        cj["edges"] = v.edge_count;
        cj["spanning"] = v.spanning;
        cj["perfect_fractional_matching"] = v.perfect_matching;
        cj["period"] = v.period;
        cj["aperiodic"] = v.aperiodic;
        cj["framework_candidate"] = v.framework_candidate;
        result["components"].push_back(cj);
    }
    result["component_count"] = comps.count;
    result["best_candidate"] = best;
    result["any_framework_candidate"] = any;
    return result;
}

void emit(CliResult& res, const std::string& command, const ordered_json& params,
          const std::vector<std::string>& inputs, const std::vector<std::string>& outputs,
          const ordered_json& body) {
    ordered_json top;
    top["manifest"] = make_manifest(command, params, inputs, outputs);
    top["result"] = body;
    res.out = top.dump() + "\n";
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const GuardError*>(&e)) return 3;
    return 2;
}

} // namespace

CliResult run_command(const std::vector<std::string>& args) {
    CliResult res;
    CLI::App app{"hamilton framework toolkit"};
    app.require_subcommand(1);

    // ---- analyze
    auto* analyze = app.add_subcommand("analyze", "tight components, periods and matchings");
    std::string an_graph;
    int an_k = 2;
    analyze->add_option("graph", an_graph)->required();
    analyze->add_option("--k", an_k)->required();

    // ---- certify
    auto* certify = app.add_subcommand("certify", "certify a framework");
    std::string ce_graph, ce_hyper, ce_want;
    int ce_k = 2;
    certify->add_option("graph", ce_graph)->required();
    certify->add_option("--k", ce_k)->required();
    certify->add_option("--h", ce_hyper);
    certify->add_option("--want", ce_want);

    // ---- probe
    auto* probe = app.add_subcommand("probe", "probe robustness by approximation trials");
    std::string pr_graph, pr_mu = "0", pr_strategy = "random";
    int pr_k = 2, pr_trials = 10;
    uint64_t pr_seed = 0;
    probe->add_option("graph", pr_graph)->required();
    probe->add_option("--k", pr_k)->required();
    probe->add_option("--mu", pr_mu);
    probe->add_option("--trials", pr_trials);
    probe->add_option("--seed", pr_seed);
    probe->add_option("--strategy", pr_strategy);

    // ---- walk
    auto* walk = app.add_subcommand("walk", "closed tight walk covering all clique edges");
    std::string wa_graph;
    int wa_k = 2, wa_q = -1;
    walk->add_option("graph", wa_graph)->required();
    walk->add_option("--k", wa_k)->required();
    walk->add_option("--q", wa_q);

    // ---- generate
    auto* generate = app.add_subcommand("generate", "structured and random instances");
    std::string ge_family, ge_out, ge_mu = "1/100", ge_p = "1/2";
    long long ge_n = 0, ge_q = 2;
    int ge_k = 3, ge_m = 1, ge_r = 3;
    uint64_t ge_seed = 0;
    bool ge_snap = false;
    generate->add_option("family", ge_family)->required();
    generate->add_option("--n", ge_n);
    generate->add_option("--k", ge_k);
    generate->add_option("--q", ge_q);
    generate->add_option("--m", ge_m);
    generate->add_option("--r", ge_r);
    generate->add_option("--mu", ge_mu);
    generate->add_option("--p", ge_p);
    generate->add_option("--seed", ge_seed);
    generate->add_flag("--snap", ge_snap);
    generate->add_option("-o,--out", ge_out);

    // ---- oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive ground-truth searches");
    std::string or_mode, or_graph;
    int or_k = 2;
    long long or_budget = 10'000'000;
    oracle_cmd->add_option("mode", or_mode)->required();
    oracle_cmd->add_option("graph", or_graph)->required();
    oracle_cmd->add_option("--k", or_k)->required();
    oracle_cmd->add_option("--budget", or_budget);

    // ---- compare
    auto* compare = app.add_subcommand("compare", "framework verdict vs oracle Hamiltonicity");
    std::string co_graph;
    int co_k = 2;
    long long co_budget = 10'000'000;
    compare->add_option("graph", co_graph)->required();
    compare->add_option("--k", co_k)->required();
    compare->add_option("--budget", co_budget);

    // ---- embed
    auto* embed = app.add_subcommand("embed", "embed a guest into an exact blow-up host");
    std::string em_host, em_guest = "cyclepower";
    int em_k = 3;
    uint64_t em_seed = 0;
    embed->add_option("--host", em_host)->required();
    embed->add_option("--guest", em_guest);
    embed->add_option("--k", em_k)->required();
    embed->add_option("--seed", em_seed);

    // ---- batch
    auto* batch = app.add_subcommand("batch", "replay a manifest of runs into a directory");
    std::string ba_manifest, ba_out;
    batch->add_option("--manifest", ba_manifest)->required();
    batch->add_option("-o,--out", ba_out)->required();

    std::vector<const char*> argv;
    argv.push_back("tightframe");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        res.err = std::string(e.what()) + "\n";
        res.exit_code = 2;
        return res;
    }

    try {
        if (*analyze) {
            Graph g = load_any_graph(an_graph);
            ordered_json body = analyze_graph(g, an_k);
            ordered_json params = {{"k", an_k}, {"graph", an_graph}};
            emit(res, "analyze", params, {an_graph}, {}, body);
            std::ostringstream table;
            table << "component edges spanning pfm period aperiodic candidate\n";
            for (const auto& c : body["components"])
                table << c["id"] << " " << c["edges"] << " " << c["spanning"] << " "
                      << c["perfect_fractional_matching"] << " " << c["period"] << " "
                      << c["aperiodic"] << " " << c["framework_candidate"] << "\n";
            res.err = table.str();
            res.exit_code = body["any_framework_candidate"].get<bool>() ? 0 : 1;
        } else if (*certify) {
            Graph g = load_any_graph(ce_graph);
            KGraph h = ce_hyper.empty() ? build_clique_hypergraph(g, ce_k) : [&] {
                std::ifstream in(ce_hyper);
                if (!in) throw InputError("cannot open " + ce_hyper);
                std::stringstream buf;
                buf << in.rdbuf();
                return parse_kgraph_json(buf.str());
            }();
            WantFlags want;
            want.aperiodic = ce_want.find("aperiodic") != std::string::npos;
            want.zero_free = ce_want.find("zero-free") != std::string::npos;
            FrameworkCertificate cert = certify_framework(g, h, want);
            ordered_json params = {{"k", ce_k}, {"graph", ce_graph}, {"want", ce_want}};
            emit(res, "certify", params, {ce_graph}, {}, ordered_json::parse(cert.to_json()));
            bool ok = cert.framework && (!want.aperiodic || cert.aperiodic) &&
                      (!want.zero_free || cert.zero_free);
            res.exit_code = ok ? 0 : 1;
        } else if (*probe) {
            Graph g = load_any_graph(pr_graph);
            KGraph h = build_clique_hypergraph(g, pr_k);
            RobustnessStrategy strategy = pr_strategy == "structured"
                                              ? RobustnessStrategy::AdversarialStructured
                                              : RobustnessStrategy::Random;
            RobustnessReport rep =
                probe_robustness(g, h, parse_rational(pr_mu), strategy, pr_trials, pr_seed);
            ordered_json params = {{"k", pr_k}, {"mu", pr_mu}, {"trials", pr_trials},
                                   {"seed", pr_seed}, {"strategy", pr_strategy}};
            emit(res, "probe", params, {pr_graph}, {}, ordered_json::parse(rep.to_json()));
            res.exit_code = rep.all_trials_pass && rep.linked_edges_ok ? 0 : 1;
        } else if (*walk) {
            Graph g = load_any_graph(wa_graph);
            KGraph h = build_clique_hypergraph(g, wa_k);
            std::optional<int> q;
            if (wa_q >= 0) q = wa_q;
            WalkCertificate cert = closed_walk_all_edges(h, q);
            ordered_json params = {{"k", wa_k}, {"q", wa_q}};
            emit(res, "walk", params, {wa_graph}, {}, ordered_json::parse(cert.to_json()));
            res.exit_code = 0;
        } else if (*generate) {
            ordered_json body;
            Graph out_graph;
            if (ge_family == "bkt") {
                VerifiedGraph vg = gen_bkt(ge_n);
                out_graph = vg.graph;
                body["checks"] = ordered_json::object();
                for (auto& [name, ok] : vg.checks) body["checks"][name] = ok;
            } else if (ge_family == "posa-extremal") {
                VerifiedGraph vg = gen_posa_extremal_k(ge_k, ge_n);
                out_graph = vg.graph;
                body["checks"] = ordered_json::object();
                for (auto& [name, ok] : vg.checks) body["checks"][name] = ok;
            } else if (ge_family == "separator") {
                SeparatorResult sr = gen_ore_posa_separator(ge_k, ge_n, parse_rational(ge_mu), ge_snap);
                out_graph = sr.graph;
                body["snapped_n"] = sr.snapped_n;
                body["x0_size"] = sr.x0_size;
                body["checks"] = ordered_json::object();
                for (auto& [name, ok] : sr.checks) body["checks"][name] = ok;
            } else if (ge_family == "fragile") {
                FragileFramework ff = gen_fragile_framework(ge_q, ge_m);
                out_graph = ff.graph;
                body["base_vertices"] = ff.base_vertices;
                body["checks"] = ordered_json::object();
                for (auto& [name, ok] : ff.checks) body["checks"][name] = ok;
            } else if (ge_family == "random") {
                out_graph = gen_random(static_cast<int>(ge_n), parse_rational(ge_p), ge_seed);
            } else if (ge_family == "multipartite") {
                out_graph =
                    gen_multipartite_random(ge_r, static_cast<int>(ge_n), parse_rational(ge_p), ge_seed);
            } else {
                throw InputError("unknown family: " + ge_family);
            }
            body["graph"] = ordered_json::parse(graph_to_json(out_graph));
            std::vector<std::string> outputs;
            if (!ge_out.empty()) {
                save_graph(out_graph, ge_out, GraphFormat::Json);
                outputs.push_back(ge_out);
            }
            ordered_json params = {{"family", ge_family}, {"n", ge_n}, {"k", ge_k},
                                   {"q", ge_q},           {"m", ge_m}, {"r", ge_r},
                                   {"mu", ge_mu},         {"p", ge_p}, {"seed", ge_seed},
                                   {"snap", ge_snap}};
            emit(res, "generate", params, {}, outputs, body);
            bool checks_ok = true;
            if (body.contains("checks"))
                for (const auto& [name, ok] : body["checks"].items()) {
                    (void)name;
                    checks_ok = checks_ok && ok.get<bool>();
                }
            res.exit_code = checks_ok ? 0 : 1;
        } else if (*oracle_cmd) {
            Graph g = load_any_graph(or_graph);
            ordered_json body;
            bool positive = false;
            if (or_mode == "powcycle") {
                OracleVerdict v = find_power_ham_cycle(g, or_k, or_budget);
                body["found"] = v.found;
                body["nodes_explored"] = v.nodes_explored;
                body["timed_out"] = v.timed_out;
                if (v.found) body["witness"] = v.witness;
                positive = v.found;
                if (v.timed_out) throw GuardError("oracle budget exhausted");
            } else if (or_mode == "factor") {
                OracleVerdict v = find_clique_factor(g, or_k, or_budget);
                body["found"] = v.found;
                body["nodes_explored"] = v.nodes_explored;
                body["timed_out"] = v.timed_out;
                if (v.found) body["witness"] = v.witness;
                positive = v.found;
                if (v.timed_out) throw GuardError("oracle budget exhausted");
            } else if (or_mode == "framework") {
                KGraph h = build_clique_hypergraph(g, or_k);
                BruteFrameworkVerdict v = framework_bruteforce(g, h);
                body["spanning"] = v.spanning;
                body["contained_in_component"] = v.contained_in_component;
                body["has_perfect_matching"] = v.has_perfect_matching;
                body["aperiodic_walk_exists"] = v.aperiodic_walk_exists;
                body["framework"] = v.framework;
                positive = v.framework;
            } else {
                throw InputError("unknown oracle mode: " + or_mode);
            }
            ordered_json params = {{"mode", or_mode}, {"k", or_k}, {"budget", or_budget}};
            emit(res, "oracle", params, {or_graph}, {}, body);
            res.exit_code = positive ? 0 : 1;
        } else if (*compare) {
            Graph g = load_any_graph(co_graph);
            ordered_json body;
            body["analysis"] = analyze_graph(g, co_k);
            OracleVerdict v = find_power_ham_cycle(g, co_k, co_budget);
            body["oracle_found"] = v.found;
            body["oracle_timed_out"] = v.timed_out;
            ordered_json params = {{"k", co_k}, {"budget", co_budget}};
            emit(res, "compare", params, {co_graph}, {}, body);
            std::ostringstream table;
            table << "framework_candidate=" << body["analysis"]["any_framework_candidate"]
                  << " oracle=" << v.found << "\n";
            res.err = table.str();
            res.exit_code = 0;
        } else if (*embed) {
            Graph host = load_any_graph(em_host);
            if (!host.partition() || host.partition()->size() < 2)
                throw InputError("host must carry its cluster partition");
            const Partition& clusters = *host.partition();
            int rt = static_cast<int>(clusters.size());
            // recover the reduced graph; host must be an exact blow-up
            std::vector<std::pair<int, int>> redges;
            for (int a = 0; a < rt; ++a)
                for (int b = a + 1; b < rt; ++b) {
                    long long present = 0;
                    for (int u : clusters[static_cast<size_t>(a)])
                        for (int v : clusters[static_cast<size_t>(b)])
                            if (host.has_edge(u, v)) ++present;
                    long long want_all = static_cast<long long>(clusters[static_cast<size_t>(a)].size()) *
                                         static_cast<long long>(clusters[static_cast<size_t>(b)].size());
                    if (present == want_all) redges.emplace_back(a, b);
                    else if (present != 0) throw InputError("host is not an exact blow-up");
                }
            Graph r_graph = Graph::from_edges(rt, redges);
            KGraph j = build_clique_hypergraph(r_graph, em_k);
            KGraph cover = bounded_degree_cover(j);
            std::vector<long long> sizes;
            for (const auto& c : clusters) sizes.push_back(static_cast<long long>(c.size()));
            if (em_guest != "cyclepower") throw InputError("only cyclepower guests via the CLI");
            EmbedRequest req;
            req.kind = GuestKind::CyclePower;
            req.seed = em_seed;
            Embedding emb = embed_on_blowup(r_graph, j, cover, sizes, em_k, req);
            ordered_json body;
            body["verified"] = emb.verified;
            body["detail"] = emb.detail;
            body["vertex_map"] = emb.vertex_map;
            ordered_json params = {{"k", em_k}, {"guest", em_guest}, {"seed", em_seed}};
            emit(res, "embed", params, {em_host}, {}, body);
            res.exit_code = emb.verified ? 0 : 1;
        } else if (*batch) {
            std::ifstream in(ba_manifest);
            if (!in) throw InputError("cannot open " + ba_manifest);
            ordered_json mf;
            try {
                mf = ordered_json::parse(in);
            } catch (const std::exception& e) {
                throw InputError(std::string("bad manifest: ") + e.what());
            }
            fs::create_directories(ba_out);
            ordered_json body;
            body["runs"] = ordered_json::array();
            std::vector<std::string> outputs;
            if (mf.contains("runs"))
                for (const auto& run : mf["runs"]) {
                    std::string name = run.at("name").get<std::string>();
                    std::vector<std::string> sub_args;
                    for (const auto& a : run.at("argv")) sub_args.push_back(a.get<std::string>());
                    CliResult sub = run_command(sub_args);
                    std::string path = ba_out + "/" + name + ".json";
                    std::ofstream outfile(path, std::ios::binary);
                    outfile << sub.out;
                    outputs.push_back(path);
                    ordered_json rj;
                    rj["name"] = name;
                    rj["exit_code"] = sub.exit_code;
                    body["runs"].push_back(rj);
                }
            std::string echo_path = ba_out + "/manifest.json";
            {
                std::ofstream echo(echo_path, std::ios::binary);
                echo << mf.dump() << "\n";
            }
            outputs.push_back(echo_path);
            ordered_json params = {{"manifest", ba_manifest}, {"out", ba_out}};
            emit(res, "batch", params, {ba_manifest}, outputs, body);
            res.exit_code = 0;
        }
    } catch (const CLI::Error& e) {
        res.err = std::string(e.what()) + "\n";
        res.exit_code = 2;
    } catch (const GuardError& e) {
        res.err = std::string("guard: ") + e.what() + "\n";
        res.exit_code = 3;
    } catch (const std::exception& e) {
        res.err = std::string("error: ") + e.what() + "\n";
        res.exit_code = exit_code_for(e);
    }
    return res;
}

int cli_main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    CliResult res = run_command(args);
    if (!res.out.empty()) std::cout << res.out;
    if (!res.err.empty()) std::cerr << res.err;
    return res.exit_code;
}

} // namespace tightframe
