#include <doctest.h>

#include "tightframe/errors.hpp"
#include "tightframe/framework.hpp"
#include "tightframe/generators.hpp"
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

Graph random_graph(int n, uint64_t seed, uint64_t num = 1, uint64_t den = 2) {
    Rng rng(seed);
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(num, den)) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

} // namespace

TEST_CASE("power hamilton cycle search") {
    OracleVerdict v = find_power_ham_cycle(cycle(7), 2, 1'000'000);
    CHECK(v.found);
    CHECK(verify_power_ham_cycle(cycle(7), v.witness, 2));

    OracleVerdict k6 = find_power_ham_cycle(complete(6), 3, 1'000'000);
    CHECK(k6.found);

    OracleVerdict none = find_power_ham_cycle(cycle(6), 3, 1'000'000);
    CHECK(!none.found);
    CHECK(!none.timed_out);
}

TEST_CASE("verify power hamilton cycle") {
    std::vector<int> order = {0, 1, 2, 3, 4};
    CHECK(verify_power_ham_cycle(cycle(5), order, 2));
    CHECK(!verify_power_ham_cycle(cycle(5), order, 3));
    std::vector<int> any = {3, 1, 4, 0, 2, 5};
    CHECK(verify_power_ham_cycle(complete(6), any, 3));
    CHECK_THROWS_AS(verify_power_ham_cycle(cycle(5), {0, 1, 2, 3, 3}, 2), InputError);
}

TEST_CASE("clique factor search") {
    Graph pm = Graph::from_edges(6, {{0, 1}, {2, 3}, {4, 5}});
    CHECK(find_clique_factor(pm, 2, 1'000'000).found);

    Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(!find_clique_factor(star, 2, 1'000'000).found);

    Graph b = blow_up(complete(3), {2, 2, 2});
    OracleVerdict v = find_clique_factor(b, 3, 1'000'000);
    CHECK(v.found);
    CHECK(v.witness.size() == 6);

    CHECK_THROWS_AS(find_clique_factor(star, 3, 100), InputError);
}

TEST_CASE("fragile instance has no square hamilton cycle") {
    FragileFramework ff = gen_fragile_framework(2, 1);
    OracleVerdict v = find_power_ham_cycle(ff.graph, 3, 50'000'000);
    CHECK(!v.found);
    CHECK(!v.timed_out);
}

TEST_CASE("brute-force framework verdicts agree with the main path") {
    Graph c5 = cycle(5);
    KGraph h5 = build_clique_hypergraph(c5, 2);
    BruteFrameworkVerdict b5 = framework_bruteforce(c5, h5);
    WantFlags want;
    want.aperiodic = true;
    FrameworkCertificate cert5 = certify_framework(c5, h5, want);
    CHECK(b5.framework == cert5.framework);
    CHECK(b5.aperiodic_walk_exists == cert5.aperiodic);

    Graph k4 = complete(4);
    KGraph h4 = build_clique_hypergraph(k4, 3);
    BruteFrameworkVerdict b4 = framework_bruteforce(k4, h4);
    FrameworkCertificate cert4 = certify_framework(k4, h4, want);
    CHECK(b4.framework == cert4.framework);
    CHECK(b4.framework);
    CHECK(b4.aperiodic_walk_exists == cert4.aperiodic);
}

TEST_CASE("brute-force agreement on random instances") {
    WantFlags want;
    want.aperiodic = true;
    int tested = 0;
    for (uint64_t seed = 0; seed < 120; ++seed) {
        int k = 2 + static_cast<int>(seed % 2);
        int n = 5 + static_cast<int>(seed % 5);
        Graph g = random_graph(n, seed * 19 + 7, 3, 5);
        KGraph h = build_clique_hypergraph(g, k);
        if (h.edge_count() == 0) continue;
        ++tested;
        BruteFrameworkVerdict b = framework_bruteforce(g, h);
        FrameworkCertificate c = certify_framework(g, h, want);
        CHECK(b.spanning == c.spanning);
        CHECK(b.contained_in_component == c.contained_in_component);
        CHECK(b.has_perfect_matching == c.has_perfect_matching);
        CHECK(b.framework == c.framework);
        CHECK(b.aperiodic_walk_exists == c.aperiodic_walk.has_value());
    }
    CHECK(tested >= 80);
}

TEST_CASE("aperiodicity enumeration equals bipartiteness for graphs") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
        Graph g = random_graph(7, seed * 3 + 1, 2, 5);
        KGraph h = build_clique_hypergraph(g, 2);
        if (h.edge_count() == 0) continue;
        // bipartite (per component of the graph) iff no odd closed walk exists
        std::vector<int> colour(static_cast<size_t>(7), -1);
        bool bipartite = true;
        for (int s = 0; s < 7; ++s) {
            if (colour[static_cast<size_t>(s)] != -1 || g.degree(s) == 0) continue;
            std::vector<int> stack = {s};
            colour[static_cast<size_t>(s)] = 0;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int u : g.neighbors(v)) {
                    if (colour[static_cast<size_t>(u)] == -1) {
                        colour[static_cast<size_t>(u)] = 1 - colour[static_cast<size_t>(v)];
                        stack.push_back(u);
                    } else if (colour[static_cast<size_t>(u)] == colour[static_cast<size_t>(v)]) {
                        bipartite = false;
                    }
                }
            }
        }
        CHECK(aperiodic_walk_exists_bruteforce(h) == !bipartite);
    }
}
