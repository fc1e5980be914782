#include <doctest.h>

#include <functional>
#include <numeric>
#include <set>

#include "tightframe/errors.hpp"
#include "tightframe/oracle.hpp"
#include "tightframe/rng.hpp"
#include "tightframe/walks.hpp"

using namespace tightframe;

namespace {

Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e);
}

Graph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

Graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

KGraph random_kgraph(int n, int k, uint64_t seed, uint64_t num = 1, uint64_t den = 3) {
    Rng rng(seed);
    std::vector<std::vector<int>> edges;
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(pick.size()) == k) {
            if (rng.bernoulli(num, den)) edges.push_back(pick);
            return;
        }
        for (int v = start; v < n; ++v) {
            pick.push_back(v);
            rec(v + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return KGraph::from_edges(k, n, edges);
}

std::vector<int> normalize(const std::vector<int>& comp) {
    std::vector<int> out(comp.size(), -1);
    std::vector<int> map(comp.size(), -1);
    int next = 0;
    for (size_t i = 0; i < comp.size(); ++i) {
        int c = comp[i];
        if (map[static_cast<size_t>(c)] == -1) map[static_cast<size_t>(c)] = next++;
        out[i] = map[static_cast<size_t>(c)];
    }
    return out;
}

// gcd of closed-walk lengths, from an explicit layered-reachability sample
long long period_by_enumeration(const KGraph& h) {
    OrderedCliqueDigraph d(h);
    int n = d.node_count();
    long long cap = 2LL * n;
    long long g = 0;
    for (int start = 0; start < n; ++start) {
        // lengths at which `start` is reachable from itself, up to cap
        std::vector<char> cur(static_cast<size_t>(n), 0), nxt;
        cur[static_cast<size_t>(start)] = 1;
        for (long long len = 1; len <= cap; ++len) {
            nxt.assign(static_cast<size_t>(n), 0);
            for (int u = 0; u < n; ++u) {
                if (!cur[static_cast<size_t>(u)]) continue;
                for (int v : d.arcs_from(u)) nxt[static_cast<size_t>(v)] = 1;
            }
            cur = nxt;
            if (cur[static_cast<size_t>(start)]) g = std::gcd(g, len);
        }
    }
    return g;
}

} // namespace

TEST_CASE("tight components") {
    // two triangles sharing two vertices
    KGraph shared = KGraph::from_edges(3, 4, {{0, 1, 2}, {1, 2, 3}});
    CHECK(tight_components(shared).count == 1);

    KGraph disjoint = KGraph::from_edges(3, 6, {{0, 1, 2}, {3, 4, 5}});
    CHECK(tight_components(disjoint).count == 2);

    KGraph p = build_clique_hypergraph(path(3), 2);
    CHECK(tight_components(p).count == 1);
}

TEST_CASE("tight components agree with the overlap oracle") {
    for (uint64_t seed = 0; seed < 60; ++seed)
        for (int k = 2; k <= 3; ++k) {
            int n = 5 + static_cast<int>(seed % 5);
            KGraph h = random_kgraph(n, k, seed * 31 + k);
            TightComponents scc = tight_components(h);
            TightComponentsOracle ufo = overlap_components(h);
            CHECK(scc.count == ufo.count);
            CHECK(normalize(scc.component_of_edge) == normalize(ufo.component_of_edge));
        }
}

TEST_CASE("period and aperiodicity") {
    KGraph c5 = build_clique_hypergraph(cycle(5), 2);
    TightComponents tc5 = tight_components(c5);
    REQUIRE(tc5.count == 1);
    CHECK(period(c5, tc5, 0).aperiodic_mod_k);

    KGraph c4 = build_clique_hypergraph(cycle(4), 2);
    TightComponents tc4 = tight_components(c4);
    REQUIRE(tc4.count == 1);
    CHECK(!period(c4, tc4, 0).aperiodic_mod_k);

    KGraph k34 = build_clique_hypergraph(complete(4), 3);
    TightComponents tk = tight_components(k34);
    REQUIRE(tk.count == 1);
    CHECK(period(k34, tk, 0).aperiodic_mod_k);

    CHECK_THROWS_AS(period(c5, tc5, 3), InputError);
}

TEST_CASE("k=2 aperiodicity is non-bipartiteness") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
        Rng rng(seed);
        int n = 4 + static_cast<int>(rng.below(5));
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.bernoulli(2, 5)) e.emplace_back(u, v);
        Graph g = Graph::from_edges(n, e);
        KGraph h = build_clique_hypergraph(g, 2);
        if (h.edge_count() == 0) continue;
        TightComponents comps = tight_components(h);
        for (int c = 0; c < comps.count; ++c) {
            // bipartiteness of the component's underlying graph
            std::vector<std::pair<int, int>> ce;
            for (int ei = 0; ei < h.edge_count(); ++ei)
                if (comps.component_of_edge[static_cast<size_t>(ei)] == c)
                    ce.emplace_back(h.edge(ei)[0], h.edge(ei)[1]);
            std::vector<int> colour(static_cast<size_t>(n), -1);
            bool bipartite = true;
            std::function<void(int, int)> dfs = [&](int v, int col) {
                colour[static_cast<size_t>(v)] = col;
                for (auto [a, b] : ce) {
                    int other = -1;
                    if (a == v) other = b;
                    if (b == v) other = a;
                    if (other < 0) continue;
                    if (colour[static_cast<size_t>(other)] == -1) dfs(other, 1 - col);
                    else if (colour[static_cast<size_t>(other)] == col) bipartite = false;
                }
            };
            dfs(ce[0].first, 0);
            CHECK(period(h, comps, c).aperiodic_mod_k == !bipartite);
        }
    }
}

TEST_CASE("period matches the explicit enumeration sample") {
    for (uint64_t seed = 0; seed < 25; ++seed)
        for (int k = 2; k <= 3; ++k) {
            int n = 5 + static_cast<int>(seed % 3);
            KGraph h = random_kgraph(n, k, seed * 17 + k);
            if (h.edge_count() == 0) continue;
            OrderedCliqueDigraph d(h);
            if (d.node_count() > 200) continue;
            TightComponents comps = tight_components(h);
            if (comps.count != 1) continue;
            CHECK(period(h, comps, 0).d == period_by_enumeration(h));
        }
}

TEST_CASE("closed walk visiting all edges") {
    KGraph single = KGraph::from_edges(3, 3, {{0, 1, 2}});
    WalkCertificate w = closed_walk_all_edges(single);
    CHECK(w.length == 3);
    CHECK(verify_walk(single, w));

    KGraph c5 = build_clique_hypergraph(cycle(5), 2);
    WalkCertificate w5 = closed_walk_all_edges(c5, 1);
    CHECK(w5.length % 2 == 1);
    CHECK(w5.length <= 600);  // k^2 t^k + k C(t,k) t^k = 4*25 + 2*10*25
    CHECK(w5.visited_edges.size() == 5);
    CHECK(verify_walk(c5, w5));

    KGraph k34 = build_clique_hypergraph(complete(4), 3);
    WalkCertificate w34 = closed_walk_all_edges(k34, 1);
    CHECK(w34.length % 3 == 1);
    CHECK(w34.visited_edges.size() == 4);
    CHECK(w34.length <= 9 * 64 + 3 * 4 * 64);
    CHECK(verify_walk(k34, w34));

    // periodic instance rejects a congruence request
    KGraph c4 = build_clique_hypergraph(cycle(4), 2);
    CHECK_THROWS_AS(closed_walk_all_edges(c4, 1), PreconditionError);
    // but serves unconstrained requests
    WalkCertificate w4 = closed_walk_all_edges(c4);
    CHECK(verify_walk(c4, w4));
    CHECK(w4.visited_edges.size() == 4);

    KGraph disconnected = KGraph::from_edges(3, 6, {{0, 1, 2}, {3, 4, 5}});
    CHECK_THROWS_AS(closed_walk_all_edges(disconnected), PreconditionError);
}

TEST_CASE("closed walk congruence across classes and instances") {
    for (uint64_t seed = 0; seed < 20; ++seed)
        for (int k = 2; k <= 3; ++k) {
            int n = 5 + static_cast<int>(seed % 4);
            KGraph h = random_kgraph(n, k, seed * 11 + k, 1, 2);
            if (h.edge_count() == 0) continue;
            TightComponents comps = tight_components(h);
            if (comps.count != 1) continue;
            long long t = n;
            long long bound = 1;
            for (int i = 0; i < k; ++i) bound *= t;
            long long cap = static_cast<long long>(k) * k * bound;
            {
                long long binom = 1;
                for (int i = 0; i < k; ++i) binom = binom * (t - i) / (i + 1);
                cap += static_cast<long long>(k) * binom * bound;
            }
            WalkCertificate w = closed_walk_all_edges(h);
            CHECK(verify_walk(h, w));
            CHECK(w.length <= cap);
            CHECK(static_cast<int>(w.visited_edges.size()) == h.edge_count());
            if (period(h, comps, 0).aperiodic_mod_k)
                for (int q = 0; q < k; ++q) {
                    WalkCertificate wq = closed_walk_all_edges(h, q);
                    CHECK(verify_walk(h, wq));
                    CHECK(wq.length % k == q);
                    CHECK(wq.length <= cap);
                    CHECK(static_cast<int>(wq.visited_edges.size()) == h.edge_count());
                }
        }
}

TEST_CASE("walk between prescribed tuples has exact length") {
    KGraph k25 = build_clique_hypergraph(complete(5), 2);
    WalkCertificate w = walk_between(k25, {0, 1}, {2, 3}, {2, 3, 4});
    CHECK(w.length == 50);  // k t^k = 2 * 25
    CHECK(!w.closed);
    CHECK(verify_walk(k25, w));
    CHECK(std::vector<int>(w.sequence.begin(), w.sequence.begin() + 2) == std::vector<int>{0, 1});
    CHECK(std::vector<int>(w.sequence.end() - 2, w.sequence.end()) == std::vector<int>{2, 3});

    // identical endpoints still pad to the exact length
    WalkCertificate w2 = walk_between(k25, {2, 3}, {2, 3}, {2, 3, 4});
    CHECK(w2.length == 50);
    CHECK(verify_walk(k25, w2));

    KGraph k36 = build_clique_hypergraph(complete(6), 3);
    WalkCertificate w3 = walk_between(k36, {0, 1, 2}, {5, 3, 4}, {3, 4, 5, 0});
    CHECK(w3.length == 3 * 216);
    CHECK(verify_walk(k36, w3));
    CHECK(std::vector<int>(w3.sequence.end() - 3, w3.sequence.end()) == std::vector<int>{5, 3, 4});

    // t >= 2k guard
    KGraph small = build_clique_hypergraph(complete(3), 2);
    CHECK_THROWS_AS(walk_between(small, {0, 1}, {1, 2}, {0, 1, 2}), PreconditionError);
}

TEST_CASE("spanning walk with prefix") {
    KGraph single = KGraph::from_edges(3, 3, {{0, 1, 2}});
    WalkCertificate w = spanning_walk_with_prefix(single, {1, 0, 2});
    CHECK(w.closed);
    CHECK(verify_walk(single, w));
    CHECK(std::vector<int>(w.sequence.begin(), w.sequence.begin() + 3) == std::vector<int>{1, 0, 2});

    KGraph shared = KGraph::from_edges(3, 4, {{0, 1, 2}, {1, 2, 3}});
    WalkCertificate w2 = spanning_walk_with_prefix(shared, {0, 1, 2});
    CHECK(w2.visited_edges.size() == 2);
    CHECK(verify_walk(shared, w2));

    KGraph c5 = build_clique_hypergraph(cycle(5), 2);
    WalkCertificate w3 = spanning_walk_with_prefix(c5, {0, 1});
    CHECK(w3.visited_edges.size() == 5);
    CHECK(verify_walk(c5, w3));
    CHECK(w3.sequence[0] == 0);
    CHECK(w3.sequence[1] == 1);

    CHECK_THROWS_AS(spanning_walk_with_prefix(c5, {0, 2}), InputError);
}

TEST_CASE("verify walk rejects corrupted certificates") {
    KGraph k34 = build_clique_hypergraph(complete(4), 3);
    WalkCertificate good;
    good.sequence = {0, 1, 2, 3};
    good.closed = true;
    good.length = 4;
    good.congruence = 1;
    good.visited_edges = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    CHECK(verify_walk(k34, good));

    // missing window
    std::vector<std::vector<int>> pruned;
    for (const auto& e : k34.edges())
        if (e != std::vector<int>{0, 1, 2}) pruned.push_back(e);
    KGraph h2 = KGraph::from_edges(3, 4, pruned);
    CHECK(!verify_walk(h2, good));

    // metadata mismatch
    WalkCertificate bad = good;
    bad.congruence = 2;
    CHECK(!verify_walk(k34, bad));
    WalkCertificate bad2 = good;
    bad2.visited_edges.pop_back();
    CHECK(!verify_walk(k34, bad2));
}

TEST_CASE("hat reachability") {
    KGraph k34 = build_clique_hypergraph(complete(4), 3);
    CHECK(hat_reachability_check(k34).verdict == ReachabilityVerdict::Holds);

    KGraph c5 = build_clique_hypergraph(cycle(5), 2);
    CHECK(hat_reachability_check(c5).verdict == ReachabilityVerdict::Holds);

    Graph c4g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, Partition{{0, 2}, {1, 3}});
    KGraph c4 = build_clique_hypergraph(c4g, 2);
    CHECK(hat_reachability_check(c4).verdict == ReachabilityVerdict::Holds);

    // r=1 periodic instance has unmet hypotheses
    KGraph c4plain = build_clique_hypergraph(cycle(4), 2);
    CHECK(hat_reachability_check(c4plain).verdict == ReachabilityVerdict::HypothesesUnmet);
}

TEST_CASE("walk constructors always emit verifiable certificates") {
    for (uint64_t seed = 0; seed < 30; ++seed)
        for (int k = 2; k <= 3; ++k) {
            KGraph h = random_kgraph(6, k, seed * 101 + k, 1, 2);
            if (h.edge_count() == 0 || !is_tightly_connected(h)) continue;
            WalkCertificate w = closed_walk_all_edges(h);
            CHECK(verify_walk(h, w));
            std::vector<int> prefix = h.edge(0);
            WalkCertificate w2 = spanning_walk_with_prefix(h, prefix);
            CHECK(verify_walk(h, w2));
        }
}
