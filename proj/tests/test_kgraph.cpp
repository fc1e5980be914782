#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "tightframe/errors.hpp"
#include "tightframe/kgraph.hpp"
#include "tightframe/rng.hpp"

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

Graph random_graph(int n, uint64_t seed, uint64_t density_num = 1, uint64_t density_den = 2) {
    Rng rng(seed);
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(density_num, density_den)) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

// definitional check: k-sets with all pairs adjacent
std::vector<std::vector<int>> cliques_by_pair_scan(const Graph& g, int k) {
    std::vector<std::vector<int>> out;
    int n = g.vertex_count();
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(pick.size()) == k) {
            for (size_t i = 0; i < pick.size(); ++i)
                for (size_t j = i + 1; j < pick.size(); ++j)
                    if (!g.has_edge(pick[i], pick[j])) return;
            out.push_back(pick);
            return;
        }
        for (int v = start; v < n; ++v) {
            pick.push_back(v);
            rec(v + 1);
            pick.pop_back();
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

// definitional linked-edge count for one vertex
long long linked_count_definition(const KGraph& h, int v) {
    std::set<std::vector<int>> linked;
    for (const auto& e : h.edges()) {
        if (std::binary_search(e.begin(), e.end(), v)) continue;
        for (const auto& f : h.edges()) {
            if (!std::binary_search(f.begin(), f.end(), v)) continue;
            std::vector<int> inter;
            std::set_intersection(e.begin(), e.end(), f.begin(), f.end(), std::back_inserter(inter));
            if (static_cast<int>(inter.size()) == h.k() - 1) linked.insert(e);
        }
    }
    return static_cast<long long>(linked.size());
}

} // namespace

TEST_CASE("clique hypergraph construction") {
    Graph c5 = cycle(5);
    KGraph k2 = build_clique_hypergraph(c5, 2);
    CHECK(k2.edge_count() == 5);  // K_2(G) is G itself

    KGraph k34 = build_clique_hypergraph(complete(4), 3);
    CHECK(k34.edge_count() == 4);
    CHECK(k34.has_edge({0, 1, 2}));
    CHECK(k34.has_edge({1, 2, 3}));

    KGraph none = build_clique_hypergraph(c5, 3);
    CHECK(none.edge_count() == 0);
}

TEST_CASE("clique enumeration matches the pairwise-scan definition") {
    for (uint64_t seed = 0; seed < 25; ++seed)
        for (int k = 2; k <= 4; ++k) {
            Graph g = random_graph(4 + static_cast<int>(seed % 5), seed, 2, 3);
            KGraph h = build_clique_hypergraph(g, k);
            CHECK(h.edges() == cliques_by_pair_scan(g, k));
        }
}

TEST_CASE("link graph") {
    KGraph k34 = build_clique_hypergraph(complete(4), 3);
    KGraph link0 = link_graph(k34, 0);
    CHECK(link0.k() == 2);
    CHECK(link0.edge_count() == 3);
    CHECK(link0.has_edge({1, 2}));
    CHECK(link0.has_edge({1, 3}));
    CHECK(link0.has_edge({2, 3}));

    // vertex not on any edge has an empty link
    Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}});
    KGraph h = build_clique_hypergraph(g, 3);
    CHECK(link_graph(h, 3).edge_count() == 0);

    // constructed absence: remove every edge through vertex 4 of K_3(K_5)
    KGraph k35 = build_clique_hypergraph(complete(5), 3);
    std::vector<std::vector<int>> remaining;
    for (const auto& e : k35.edges())
        if (!std::binary_search(e.begin(), e.end(), 4)) remaining.push_back(e);
    KGraph stripped = KGraph::from_edges(3, 5, remaining);
    CHECK(link_graph(stripped, 4).edge_count() == 0);

    CHECK_THROWS_AS(link_graph(k34, 9), InputError);
}

TEST_CASE("shadow") {
    KGraph k34 = build_clique_hypergraph(complete(4), 3);
    KGraph sh2 = shadow(k34, 2);
    CHECK(sh2.edge_count() == 6);  // all pairs of K_4
    CHECK(shadow(k34, 3).edges() == k34.edges());

    KGraph single = KGraph::from_edges(3, 3, {{0, 1, 2}});
    KGraph sh1 = shadow(single, 1);
    CHECK(sh1.edge_count() == 3);

    CHECK_THROWS_AS(shadow(k34, 0), InputError);
    CHECK_THROWS_AS(shadow(k34, 4), InputError);
}

TEST_CASE("shadow composes") {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = random_graph(7, seed, 3, 4);
        KGraph h = build_clique_hypergraph(g, 4);
        for (int j = 1; j <= 4; ++j)
            for (int i = 1; i <= j; ++i)
                CHECK(shadow(shadow(h, j), i).edges() == shadow(h, i).edges());
    }
}

TEST_CASE("linked edge profile") {
    KGraph k34 = build_clique_hypergraph(complete(4), 3);
    LinkedEdgeProfile p = linked_edge_profile(k34);
    for (int v = 0; v < 4; ++v) CHECK(p.counts[static_cast<size_t>(v)] == 1);

    KGraph single = KGraph::from_edges(3, 3, {{0, 1, 2}});
    LinkedEdgeProfile sp = linked_edge_profile(single);
    for (int v = 0; v < 3; ++v) CHECK(sp.counts[static_cast<size_t>(v)] == 0);

    KGraph c5 = build_clique_hypergraph(cycle(5), 2);
    LinkedEdgeProfile cp = linked_edge_profile(c5);
    for (int v = 0; v < 5; ++v) {
        CHECK(cp.counts[static_cast<size_t>(v)] == linked_count_definition(c5, v));
        CHECK(cp.counts[static_cast<size_t>(v)] == 2);
    }
}

TEST_CASE("linked edge profile equals the definition on random instances") {
    for (uint64_t seed = 0; seed < 20; ++seed)
        for (int k = 2; k <= 3; ++k) {
            Graph g = random_graph(7, seed * 13 + k, 2, 3);
            KGraph h = build_clique_hypergraph(g, k);
            LinkedEdgeProfile p = linked_edge_profile(h);
            for (int v = 0; v < h.vertex_count(); ++v)
                CHECK(p.counts[static_cast<size_t>(v)] == linked_count_definition(h, v));
        }
}

TEST_CASE("hat graph") {
    KGraph k34 = build_clique_hypergraph(complete(4), 3);
    Graph hat = hat_graph(k34);
    CHECK(hat.edge_count() == 6);  // K_4

    KGraph single = KGraph::from_edges(3, 4, {{0, 1, 2}});
    CHECK(hat_graph(single).edge_count() == 0);

    KGraph c4 = build_clique_hypergraph(cycle(4), 2);
    Graph hat4 = hat_graph(c4);
    CHECK(hat4.edge_count() == 2);
    CHECK(hat4.has_edge(0, 2));
    CHECK(hat4.has_edge(1, 3));
}

TEST_CASE("k plus 1 cliques") {
    KGraph k34 = build_clique_hypergraph(complete(4), 3);
    auto c = find_k_plus_1_clique(k34);
    REQUIRE(c.has_value());
    CHECK(*c == std::vector<int>{0, 1, 2, 3});

    KGraph c5 = build_clique_hypergraph(cycle(5), 2);
    CHECK(!find_k_plus_1_clique(c5).has_value());

    // K_3(K_5) minus one triple still has a 4-set avoiding it
    KGraph k35 = build_clique_hypergraph(complete(5), 3);
    std::vector<std::vector<int>> edges;
    for (const auto& e : k35.edges())
        if (e != std::vector<int>{0, 1, 2}) edges.push_back(e);
    KGraph pruned = KGraph::from_edges(3, 5, edges);
    auto c2 = find_k_plus_1_clique(pruned);
    REQUIRE(c2.has_value());
    // exhaustive cross-check: the witness avoids the removed triple
    for (int skip = 0; skip < 4; ++skip) {
        std::vector<int> sub;
        for (int i = 0; i < 4; ++i)
            if (i != skip) sub.push_back((*c2)[static_cast<size_t>(i)]);
        CHECK(pruned.has_edge(sub));
    }
}

TEST_CASE("k plus 1 clique search is complete") {
    for (uint64_t seed = 0; seed < 30; ++seed)
        for (int k = 2; k <= 3; ++k) {
            Graph g = random_graph(7, seed * 7 + k, 3, 5);
            KGraph h = build_clique_hypergraph(g, k);
            // brute force over all (k+1)-subsets
            bool exists = false;
            std::vector<int> pick;
            std::function<void(int)> rec = [&](int start) {
                if (exists) return;
                if (static_cast<int>(pick.size()) == k + 1) {
                    for (int skip = 0; skip <= k; ++skip) {
                        std::vector<int> sub;
                        for (int i = 0; i <= k; ++i)
                            if (i != skip) sub.push_back(pick[static_cast<size_t>(i)]);
                        if (!h.has_edge(sub)) return;
                    }
                    exists = true;
                    return;
                }
                for (int v = start; v < h.vertex_count(); ++v) {
                    pick.push_back(v);
                    rec(v + 1);
                    pick.pop_back();
                }
            };
            rec(0);
            CHECK(find_k_plus_1_clique(h).has_value() == exists);
        }
}

TEST_CASE("kgraph json round trip") {
    KGraph k34 = build_clique_hypergraph(complete(4), 3);
    std::string j = kgraph_to_json(k34);
    KGraph back = parse_kgraph_json(j);
    CHECK(back.edges() == k34.edges());
    CHECK(kgraph_to_json(back) == j);
}

TEST_CASE("partite edges enforced") {
    CHECK_THROWS_AS(KGraph::from_edges(2, 4, {{0, 1}}, Partition{{0, 1}, {2, 3}}), InputError);
    KGraph ok = KGraph::from_edges(2, 4, {{0, 2}}, Partition{{0, 1}, {2, 3}});
    CHECK(ok.edge_count() == 1);
}
