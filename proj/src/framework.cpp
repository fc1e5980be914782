#include "tightframe/framework.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "tightframe/errors.hpp"
#include "tightframe/rng.hpp"
#include <nlohmann/json.hpp>

namespace tightframe {

using ordered_json = nlohmann::ordered_json;

std::string FrameworkCertificate::to_json() const {
    ordered_json j;
    j["spanning"] = spanning;
    j["contained_in_component"] = contained_in_component;
    j["component_witness"] = component_witness;
    j["has_perfect_matching"] = has_perfect_matching;
    j["matching"] = ordered_json::parse(matching.to_json());
    if (aperiodic_walk) j["aperiodic_walk"] = ordered_json::parse(aperiodic_walk->to_json());
    if (zero_free_clique) j["zero_free_clique"] = *zero_free_clique;
    j["min_linked_edges"] = linked_profile.min_count;
    j["framework"] = framework;
    j["aperiodic"] = aperiodic;
    j["zero_free"] = zero_free;
    return j.dump();
}

std::string RobustnessReport::to_json() const {
    ordered_json j;
    j["linked_edges_ok"] = linked_edges_ok;
    j["min_linked"] = min_linked;
    j["all_trials_pass"] = all_trials_pass;
    j["trials"] = ordered_json::array();
    for (const auto& t : trials) {
        ordered_json e;
        e["pass"] = t.pass;
        e["deleted_vertices"] = t.deleted_vertices;
        e["deleted_edges"] = t.deleted_edges;
        if (!t.failure.empty()) e["failure"] = t.failure;
        j["trials"].push_back(e);
    }
    if (first_counterexample) j["first_counterexample"] = ordered_json::parse(*first_counterexample);
    return j.dump();
}

std::string ConditionReport::to_json() const {
    ordered_json j;
    j["name"] = name;
    j["holds"] = holds;
    if (margin) j["margin"] = rat_str(*margin);
    if (!witness.empty()) j["witness"] = witness;
    j["probabilistic"] = probabilistic;
    return j.dump();
}

FrameworkCertificate certify_framework(const Graph& g, const KGraph& h, WantFlags want) {
    int k = h.k();
    if (h.vertex_count() != g.vertex_count())
        throw InputError("hypergraph and graph vertex counts differ");
    for (const auto& e : h.edges())
        for (size_t i = 0; i < e.size(); ++i)
            for (size_t j = i + 1; j < e.size(); ++j)
                if (!g.has_edge(e[i], e[j]))
                    throw InputError("hypergraph edge is not a clique of the graph");

    FrameworkCertificate cert;
    cert.spanning = true;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (h.degree(v) == 0) { cert.spanning = false; break; }

    KGraph ambient = build_clique_hypergraph(g, k);
    TightComponents ambient_comps = tight_components(ambient);
    cert.contained_in_component = h.edge_count() > 0;
    for (const auto& e : h.edges()) {
        int idx = ambient.edge_index(e);
        if (idx < 0) throw InputError("hypergraph edge is not a clique of the graph");
        int comp = ambient_comps.component_of_edge[static_cast<size_t>(idx)];
        if (cert.component_witness == -1) cert.component_witness = comp;
        else if (cert.component_witness != comp) {
            cert.contained_in_component = false;
            cert.component_witness = -1;
            break;
        }
    }

    PerfectMatchingWitness pm = has_perfect_fractional_matching(h);
    cert.has_perfect_matching = pm.perfect;
    cert.matching = pm.matching;
    cert.linked_profile = linked_edge_profile(h);
    cert.framework = cert.spanning && cert.contained_in_component && cert.has_perfect_matching;

    if (want.aperiodic && h.edge_count() > 0) {
        TightComponents own = tight_components(h);
        for (int comp = 0; comp < own.count && !cert.aperiodic_walk; ++comp) {
            PeriodInfo info = period(h, own, comp);
            if (!info.aperiodic_mod_k) continue;
            std::vector<std::vector<int>> comp_edges;
            for (int e = 0; e < h.edge_count(); ++e)
                if (own.component_of_edge[static_cast<size_t>(e)] == comp) comp_edges.push_back(h.edge(e));
            KGraph sub = KGraph::from_edges(k, h.vertex_count(), comp_edges);
            cert.aperiodic_walk = closed_walk_all_edges(sub, 1 % k);
        }
        cert.aperiodic = cert.framework && cert.aperiodic_walk.has_value();
    }
    if (want.zero_free) {
        cert.zero_free_clique = find_k_plus_1_clique(h);
        cert.zero_free = cert.framework && cert.zero_free_clique.has_value();
    }
    return cert;
}

namespace {

// h restricted to the surviving pairs of sub, on compacted vertex ids
KGraph restrict_hypergraph(const KGraph& h, const Graph& host, const Subgraph& sub) {
    std::vector<int> new_id(static_cast<size_t>(host.vertex_count()), -1);
    for (size_t i = 0; i < sub.vertices.size(); ++i)
        new_id[static_cast<size_t>(sub.vertices[i])] = static_cast<int>(i);
    std::set<std::pair<int, int>> kept(sub.edges.begin(), sub.edges.end());
    auto pair_alive = [&](int a, int b) {
        return kept.count({std::min(a, b), std::max(a, b)}) > 0;
    };
    std::vector<std::vector<int>> edges;
    for (const auto& e : h.edges()) {
        bool ok = true;
        for (int v : e)
            if (new_id[static_cast<size_t>(v)] < 0) { ok = false; break; }
        for (size_t i = 0; i < e.size() && ok; ++i)
            for (size_t j = i + 1; j < e.size() && ok; ++j)
                if (!pair_alive(e[i], e[j])) ok = false;
        if (!ok) continue;
        std::vector<int> mapped;
        for (int v : e) mapped.push_back(new_id[static_cast<size_t>(v)]);
        std::sort(mapped.begin(), mapped.end());
        edges.push_back(std::move(mapped));
    }
    std::optional<Partition> partition;
    if (host.partition()) {
        Partition parts;
        for (const auto& p : *host.partition()) {
            std::vector<int> keep;
            for (int v : p)
                if (new_id[static_cast<size_t>(v)] >= 0) keep.push_back(new_id[static_cast<size_t>(v)]);
            if (!keep.empty()) parts.push_back(keep);
        }
        if (!parts.empty()) partition = parts;
    }
    return KGraph::from_edges(h.k(), static_cast<int>(sub.vertices.size()), std::move(edges), partition);
}

Subgraph delete_vertices_and_edges(const Graph& g, const std::set<int>& gone_vertices,
                                   const std::set<std::pair<int, int>>& gone_edges) {
    Subgraph sub;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!gone_vertices.count(v)) sub.vertices.push_back(v);
    for (auto [u, v] : g.edges()) {
        if (gone_vertices.count(u) || gone_vertices.count(v)) continue;
        if (gone_edges.count({u, v})) continue;
        sub.edges.emplace_back(u, v);
    }
    return sub;
}

} // namespace

RobustnessReport probe_robustness(const Graph& g, const KGraph& h, const Rational& mu,
                                  RobustnessStrategy strategy, int trials, uint64_t seed,
                                  WantFlags want) {
    FrameworkCertificate base = certify_framework(g, h, want);
    if (!base.framework) throw PreconditionError("base pair is not a framework");
    int n = g.vertex_count();
    int k = h.k();

    RobustnessReport rep;
    rep.min_linked = base.linked_profile.min_count;
    rep.linked_edges_ok = base.linked_profile.meets_threshold(mu, n, k);

    Partition parts;
    if (g.partition() && g.partition()->size() >= 2) parts = *g.partition();
    else {
        std::vector<int> all(static_cast<size_t>(n));
        std::iota(all.begin(), all.end(), 0);
        parts.push_back(all);
    }
    long long vertex_budget = to_ll(floor_rat(mu * Rational(static_cast<long long>(parts[0].size()))));
    for (const auto& p : parts)
        vertex_budget = std::min(vertex_budget,
                                 to_ll(floor_rat(mu * Rational(static_cast<long long>(p.size())))));

    rep.all_trials_pass = true;
    if (mu == 0) trials = 1;
    for (int trial = 0; trial < trials; ++trial) {
        Rng rng(trial_seed(seed, static_cast<uint64_t>(trial)));
        std::set<int> gone_vertices;
        std::set<std::pair<int, int>> gone_edges;
        if (mu != 0) {
            if (strategy == RobustnessStrategy::Random) {
                long long dv = static_cast<long long>(rng.below(static_cast<uint64_t>(vertex_budget + 1)));
                for (const auto& part : parts) {
                    std::vector<int> pool = part;
                    rng.shuffle(pool);
                    for (long long i = 0; i < dv; ++i) gone_vertices.insert(pool[static_cast<size_t>(i)]);
                }
                // random edge deletions within the per-vertex-per-part budget
                std::map<std::pair<int, int>, long long> loss;  // (vertex, part) -> lost degree
                auto can_lose = [&](int v, int part_idx, long long part_size) {
                    return Rational(loss[{v, part_idx}] + 1) <= mu * Rational(part_size);
                };
                std::vector<std::pair<int, int>> all_edges = g.edges();
                rng.shuffle(all_edges);
                size_t attempts = all_edges.size() / 4;
                for (size_t i = 0; i < attempts; ++i) {
                    auto [u, v] = all_edges[i];
                    if (gone_vertices.count(u) || gone_vertices.count(v)) continue;
                    int pu = 0, pv = 0;
                    for (size_t pi = 0; pi < parts.size(); ++pi) {
                        if (std::binary_search(parts[pi].begin(), parts[pi].end(), u)) pu = static_cast<int>(pi);
                        if (std::binary_search(parts[pi].begin(), parts[pi].end(), v)) pv = static_cast<int>(pi);
                    }
                    long long su = static_cast<long long>(parts[static_cast<size_t>(pv)].size());
                    long long sv = static_cast<long long>(parts[static_cast<size_t>(pu)].size());
                    if (can_lose(u, pv, su) && can_lose(v, pu, sv)) {
                        gone_edges.insert({u, v});
                        loss[{u, pv}] += 1;
                        loss[{v, pu}] += 1;
                    }
                }
            } else {
                // structured deletions rotating over: low-degree vertices,
                // edges at low-degree vertices, matching-support edges
                int mode = trial % 3;
                if (mode == 0) {
                    for (const auto& part : parts) {
                        std::vector<int> pool = part;
                        std::sort(pool.begin(), pool.end(), [&](int a, int b) {
                            return g.degree(a) != g.degree(b) ? g.degree(a) < g.degree(b) : a < b;
                        });
                        for (long long i = 0; i < vertex_budget && i < static_cast<long long>(pool.size()); ++i)
                            gone_vertices.insert(pool[static_cast<size_t>(i)]);
                    }
                } else if (mode == 1) {
                    std::vector<int> order(static_cast<size_t>(n));
                    std::iota(order.begin(), order.end(), 0);
                    std::sort(order.begin(), order.end(), [&](int a, int b) {
                        return g.degree(a) != g.degree(b) ? g.degree(a) < g.degree(b) : a < b;
                    });
                    std::map<std::pair<int, int>, long long> loss;
                    for (int v : order) {
                        for (int u : g.neighbors(v)) {
                            int pu = 0, pv = 0;
                            for (size_t pi = 0; pi < parts.size(); ++pi) {
                                if (std::binary_search(parts[pi].begin(), parts[pi].end(), u)) pu = static_cast<int>(pi);
                                if (std::binary_search(parts[pi].begin(), parts[pi].end(), v)) pv = static_cast<int>(pi);
                            }
                            long long su = static_cast<long long>(parts[static_cast<size_t>(pv)].size());
                            long long sv = static_cast<long long>(parts[static_cast<size_t>(pu)].size());
                            std::pair<int, int> key = {std::min(u, v), std::max(u, v)};
                            if (gone_edges.count(key)) continue;
                            if (Rational(loss[{v, pu}] + 1) <= mu * Rational(sv) &&
                                Rational(loss[{u, pv}] + 1) <= mu * Rational(su)) {
                                gone_edges.insert(key);
                                loss[{v, pu}] += 1;
                                loss[{u, pv}] += 1;
                            }
                        }
                    }
                } else {
                    std::map<std::pair<int, int>, long long> loss;
                    for (const auto& [e, w] : base.matching.weights) {
                        (void)w;
                        for (size_t i = 0; i < e.size(); ++i)
                            for (size_t j = i + 1; j < e.size(); ++j) {
                                int u = e[i], v = e[j];
                                int pu = 0, pv = 0;
                                for (size_t pi = 0; pi < parts.size(); ++pi) {
                                    if (std::binary_search(parts[pi].begin(), parts[pi].end(), u)) pu = static_cast<int>(pi);
                                    if (std::binary_search(parts[pi].begin(), parts[pi].end(), v)) pv = static_cast<int>(pi);
                                }
                                long long su = static_cast<long long>(parts[static_cast<size_t>(pv)].size());
                                long long sv = static_cast<long long>(parts[static_cast<size_t>(pu)].size());
                                std::pair<int, int> key = {std::min(u, v), std::max(u, v)};
                                if (gone_edges.count(key)) continue;
                                if (Rational(loss[{u, pv}] + 1) <= mu * Rational(su) &&
                                    Rational(loss[{v, pu}] + 1) <= mu * Rational(sv)) {
                                    gone_edges.insert(key);
                                    loss[{u, pv}] += 1;
                                    loss[{v, pu}] += 1;
                                }
                            }
                    }
                }
            }
        }

        Subgraph sub = delete_vertices_and_edges(g, gone_vertices, gone_edges);
        ApproximationReport ar = is_approximation(g, sub, mu, mu);
        if (!ar.ok) {
            // deletion overshot the budget; fall back to vertex deletions only
            sub = delete_vertices_and_edges(g, gone_vertices, {});
            ar = is_approximation(g, sub, mu, mu);
            if (!ar.ok) sub = Subgraph::full(g);
        }

        RobustnessTrial t;
        t.deleted_vertices = n - static_cast<int>(sub.vertices.size());
        t.deleted_edges = g.edge_count() - static_cast<int>(sub.edges.size());
        InducedGraph ig = materialize(g, sub);
        KGraph hs = restrict_hypergraph(h, g, sub);
        FrameworkCertificate c;
        bool threw = false;
        try {
            c = certify_framework(ig.graph, hs, want);
        } catch (const std::exception& e) {
            threw = true;
            t.failure = std::string("certification error: ") + e.what();
        }
        if (!threw) {
            bool pass = c.framework;
            if (want.aperiodic) pass = pass && c.aperiodic;
            if (want.zero_free) pass = pass && c.zero_free;
            t.pass = pass;
            if (!pass) {
                if (!c.spanning) t.failure = "spanning";
                else if (!c.contained_in_component) t.failure = "containment";
                else if (!c.has_perfect_matching) t.failure = "matching";
                else if (want.aperiodic && !c.aperiodic) t.failure = "aperiodicity";
                else t.failure = "zero-freeness";
            }
        }
        if (!t.pass) {
            rep.all_trials_pass = false;
            if (!rep.first_counterexample) rep.first_counterexample = graph_to_json(ig.graph);
        }
        rep.trials.push_back(t);
    }
    return rep;
}

ConditionReport ore_check(const Graph& g, int k, const Rational& mu) {
    int n = g.vertex_count();
    ConditionReport rep;
    rep.name = "ore";
    Rational threshold = Rational(2 * (k - 1), k) * Rational(n) + mu * Rational(n);
    bool any = false;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v)) continue;
            Rational slack = Rational(g.degree(u) + g.degree(v)) - threshold;
            if (!any || slack < *rep.margin) {
                rep.margin = slack;
                rep.witness = "pair " + std::to_string(u) + "," + std::to_string(v);
            }
            any = true;
        }
    rep.holds = !any || *rep.margin >= 0;
    if (!any) rep.witness = "no non-adjacent pairs";
    if (rep.holds) rep.witness.clear();
    return rep;
}

ConditionReport posa_check(const Graph& g, int k, const Rational& mu) {
    int n = g.vertex_count();
    ConditionReport rep;
    rep.name = "posa";
    std::vector<int> d = g.degrees_sorted();
    bool any = false;
    for (int i = 1; i <= n / k; ++i) {
        Rational need = Rational(static_cast<long long>(k - 2) * n, k) + Rational(i) + mu * Rational(n);
        Rational slack = Rational(d[static_cast<size_t>(i - 1)]) - need;
        if (!any || slack < *rep.margin) {
            rep.margin = slack;
            rep.witness = "index " + std::to_string(i);
        }
        any = true;
    }
    rep.holds = !any || *rep.margin >= 0;
    if (rep.holds) rep.witness.clear();
    return rep;
}

namespace {

int popcount64(uint64_t x) { return static_cast<int>(std::popcount(x)); }

} // namespace

ConditionReport dense_inseparable_check(const Graph& g, const Rational& rho, const Rational& d,
                                        const Rational& mu, int samples, uint64_t seed) {
    int n = g.vertex_count();
    ConditionReport rep;
    rep.name = "dense-inseparable";
    Rational n2 = Rational(n) * Rational(n);
    long long total_edges = g.edge_count();

    auto density_slack = [&](long long inside, long long size) {
        return Rational(inside) - (d * Rational(size) * Rational(size) / 2 - rho * n2);
    };
    auto cut_slack = [&](long long cut, long long a, long long b) {
        return Rational(cut) - mu * Rational(a) * Rational(b);
    };

    bool any = false;
    auto consider = [&](const Rational& slack, const std::string& what) {
        if (!any || slack < *rep.margin) {
            rep.margin = slack;
            rep.witness = what;
        }
        any = true;
    };

    if (n <= 20) {
        // e(S) for all subsets by peeling the lowest vertex
        std::vector<uint32_t> adj(static_cast<size_t>(n), 0);
        for (auto [u, v] : g.edges()) {
            adj[static_cast<size_t>(u)] |= 1u << v;
            adj[static_cast<size_t>(v)] |= 1u << u;
        }
        std::vector<int> inside(static_cast<size_t>(1) << n, 0);
        for (uint32_t mask = 1; mask < (1u << n); ++mask) {
            int v = std::countr_zero(mask);
            uint32_t rest = mask & (mask - 1);
            inside[mask] = inside[rest] + popcount64(adj[static_cast<size_t>(v)] & rest);
        }
        for (uint32_t mask = 1; mask < (1u << n); ++mask)
            consider(density_slack(inside[mask], popcount64(mask)),
                     "density on a set of size " + std::to_string(popcount64(mask)));
        for (uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
            if (!(mask & 1u)) continue;  // fix vertex 0 on one side
            uint32_t other = ((1u << n) - 1) & ~mask;
            long long cut = total_edges - inside[mask] - inside[other];
            consider(cut_slack(cut, popcount64(mask), popcount64(other)),
                     "cut of sizes " + std::to_string(popcount64(mask)) + "/" +
                         std::to_string(popcount64(other)));
        }
    } else {
        rep.probabilistic = true;
        Rng rng(seed);
        for (int s = 0; s < samples; ++s) {
            std::vector<char> in(static_cast<size_t>(n), 0);
            int size = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(n)));
            std::vector<int> pool(static_cast<size_t>(n));
            std::iota(pool.begin(), pool.end(), 0);
            rng.shuffle(pool);
            long long inside = 0;
            for (int i = 0; i < size; ++i) in[static_cast<size_t>(pool[static_cast<size_t>(i)])] = 1;
            long long cut = 0, outside = 0;
            for (auto [u, v] : g.edges()) {
                bool iu = in[static_cast<size_t>(u)], iv = in[static_cast<size_t>(v)];
                if (iu && iv) ++inside;
                else if (!iu && !iv) ++outside;
                else ++cut;
            }
            consider(density_slack(inside, size), "sampled density set of size " + std::to_string(size));
            if (size < n)
                consider(cut_slack(cut, size, n - size),
                         "sampled cut of sizes " + std::to_string(size) + "/" + std::to_string(n - size));
        }
    }
    rep.holds = !any || *rep.margin >= 0;
    if (rep.holds) rep.witness.clear();
    return rep;
}

KGraph adherence(const KGraph& h, const Rational& eta) {
    int n = h.vertex_count();
    std::map<std::vector<int>, long long> shadow_deg;
    for (const auto& e : h.edges())
        for (size_t i = 0; i < e.size(); ++i) {
            std::vector<int> s;
            for (size_t j = 0; j < e.size(); ++j)
                if (j != i) s.push_back(e[j]);
            shadow_deg[s] += 1;
        }
    Rational threshold = eta * Rational(n);
    std::vector<std::vector<int>> kept;
    for (const auto& e : h.edges()) {
        bool ok = false;
        for (size_t i = 0; i < e.size() && !ok; ++i) {
            std::vector<int> s;
            for (size_t j = 0; j < e.size(); ++j)
                if (j != i) s.push_back(e[j]);
            if (Rational(shadow_deg[s]) >= threshold) ok = true;
        }
        if (ok) kept.push_back(e);
    }
    return KGraph::from_edges(h.k(), n, kept, h.partition());
}

namespace {

Rational choose2(const Rational& x) { return x * (x - 1) / 2; }

} // namespace

DeficiencyBounds deficiency_bounds(long long n, long long t, int k) {
    if (k < 2) throw InputError("k must be at least 2");
    DeficiencyBounds out;
    // g(n,t,k): max of the two extremal counts
    Rational r = Rational(ceil_rat(Rational(t + 1, k - 1)));
    long long q = t % (k - 1);
    Rational first = choose2(Rational(n)) - choose2(Rational(n + t, k) + 1);
    Rational second = choose2(Rational(n)) - choose2(r) - r * (Rational(n) - r - Rational(k - 2 - q));
    out.g = std::max(first, second);
    // f(n,t,k): smoothed piecewise version
    Rational tk1 = Rational(t, k - 1);
    if (Rational(t) < Rational((k - 1) * n, 2 * k * k - 2 * k + 1))
        out.f = choose2(Rational(n)) - choose2(tk1) - tk1 * (Rational(n) - tk1);
    else if (t < (k - 1) * n)
        out.f = choose2(Rational(n)) - choose2(Rational(n + t, k));
    else
        out.f = 0;
    return out;
}

int multipartite_degree(const Graph& g) {
    if (!g.partition() || g.partition()->size() < 2)
        throw InputError("multipartite degree needs a partition with at least 2 parts");
    const Partition& parts = *g.partition();
    int best = -1;
    for (size_t pi = 0; pi < parts.size(); ++pi)
        for (size_t pj = 0; pj < parts.size(); ++pj) {
            if (pi == pj) continue;
            for (int v : parts[pi]) {
                int deg = g.degree_into(v, parts[pj]);
                if (best < 0 || deg < best) best = deg;
            }
        }
    return best;
}

ConditionReport robust_expander_check(const Graph& g, const Rational& nu, const Rational& tau,
                                      const Rational& eta, int samples, uint64_t seed) {
    int n = g.vertex_count();
    ConditionReport rep;
    rep.name = "robust-expander";
    bool any = false;
    auto consider = [&](const Rational& slack, const std::string& what) {
        if (!any || slack < *rep.margin) {
            rep.margin = slack;
            rep.witness = what;
        }
        any = true;
    };
    for (int v = 0; v < n; ++v)
        consider(Rational(g.degree(v)) - eta * Rational(n), "degree of " + std::to_string(v));

    Rational lo = tau * Rational(n), hi = (Rational(1) - tau) * Rational(n);
    auto expansion_slack = [&](const std::vector<char>& in, long long size) {
        long long rn = 0;
        for (int v = 0; v < n; ++v) {
            long long deg_in = 0;
            for (int u : g.neighbors(v))
                if (in[static_cast<size_t>(u)]) ++deg_in;
            if (Rational(deg_in) >= nu * Rational(n)) ++rn;
        }
        return Rational(rn) - Rational(size) - nu * Rational(n);
    };

    if (n <= 20) {
        for (uint32_t mask = 1; mask < (1u << n); ++mask) {
            long long size = popcount64(mask);
            if (Rational(size) < lo || Rational(size) > hi) continue;
            std::vector<char> in(static_cast<size_t>(n), 0);
            for (int v = 0; v < n; ++v)
                if (mask & (1u << v)) in[static_cast<size_t>(v)] = 1;
            consider(expansion_slack(in, size), "set of size " + std::to_string(size));
        }
    } else {
        rep.probabilistic = true;
        Rng rng(seed);
        long long lo_i = to_ll(ceil_rat(lo)), hi_i = to_ll(floor_rat(hi));
        for (int s = 0; s < samples && lo_i <= hi_i; ++s) {
            long long size = lo_i + static_cast<long long>(rng.below(static_cast<uint64_t>(hi_i - lo_i + 1)));
            std::vector<int> pool(static_cast<size_t>(n));
            std::iota(pool.begin(), pool.end(), 0);
            rng.shuffle(pool);
            std::vector<char> in(static_cast<size_t>(n), 0);
            for (long long i = 0; i < size; ++i) in[static_cast<size_t>(pool[static_cast<size_t>(i)])] = 1;
            consider(expansion_slack(in, size), "sampled set of size " + std::to_string(size));
        }
    }
    rep.holds = !any || *rep.margin >= 0;
    if (rep.holds) rep.witness.clear();
    return rep;
}

} // namespace tightframe
