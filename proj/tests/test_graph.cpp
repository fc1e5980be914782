#include <doctest.h>

#include "tightframe/errors.hpp"
#include "tightframe/graph.hpp"
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

} // namespace

TEST_CASE("edge list parsing") {
    Graph g = parse_graph_edge_list("0 1\n1 2\n2 0");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(0, 2));

    Graph empty = parse_graph_edge_list("");
    CHECK(empty.vertex_count() == 0);
    CHECK(empty.edge_count() == 0);

    CHECK_THROWS_AS(parse_graph_edge_list("3 3"), InputError);
    CHECK_THROWS_AS(parse_graph_edge_list("0 1\n0 1"), InputError);
    CHECK_THROWS_AS(parse_graph_edge_list("0 x"), InputError);
}

TEST_CASE("partition header and invariants") {
    Graph g = parse_graph_edge_list("# partition: 0,1|2,3\n0 2\n1 3\n0 3");
    REQUIRE(g.partition().has_value());
    CHECK(g.partition()->size() == 2);
    CHECK(g.part_of(1) == 0);
    CHECK(g.part_of(2) == 1);
    // intra-part edge rejected
    CHECK_THROWS_AS(parse_graph_edge_list("# partition: 0,1|2,3\n0 1"), InputError);
    // non-covering partition rejected
    CHECK_THROWS_AS(parse_graph_edge_list("# partition: 0,1|2\n0 3\n1 2"), InputError);
    g.require_sized_partition(2);
    CHECK_THROWS_AS(g.require_sized_partition(3), InputError);
}

TEST_CASE("json round trip is byte deterministic") {
    Graph g = parse_graph_edge_list("# partition: 0,1|2,3\n0 2\n1 3\n0 3");
    std::string j1 = graph_to_json(g);
    Graph g2 = parse_graph_json(j1);
    CHECK(graph_to_json(g2) == j1);
    CHECK(g2.edges() == g.edges());

    std::string el = graph_to_edge_list(g);
    Graph g3 = parse_graph_edge_list(el);
    CHECK(g3.edges() == g.edges());
    CHECK(graph_to_edge_list(g3) == el);
}

TEST_CASE("round trip on random graphs") {
    for (uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng(seed);
        int n = 1 + static_cast<int>(rng.below(10));
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.coin()) edges.emplace_back(u, v);
        Graph g = Graph::from_edges(n, edges);
        CHECK(parse_graph_json(graph_to_json(g)).edges() == g.edges());
        if (g.edge_count() > 0)
            CHECK(parse_graph_edge_list(graph_to_edge_list(g)).edges() == g.edges());
    }
}

TEST_CASE("blow up") {
    Graph edge = Graph::from_edges(2, {{0, 1}});
    Graph k22 = blow_up(edge, {2, 2});
    CHECK(k22.vertex_count() == 4);
    CHECK(k22.edge_count() == 4);
    CHECK(k22.has_edge(0, 2));
    CHECK(!k22.has_edge(0, 1));

    Graph tri = complete(3);
    Graph same = blow_up(tri, {1, 1, 1});
    CHECK(same.edges() == tri.edges());

    Graph tripartite = blow_up(tri, {2, 2, 2});
    CHECK(tripartite.vertex_count() == 6);
    // independent count: cross pairs between distinct clusters of size 2
    int expected = 0;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            if (u / 2 != v / 2) ++expected;
    CHECK(expected == 12);
    CHECK(tripartite.edge_count() == 12);
    REQUIRE(tripartite.partition().has_value());
    CHECK(tripartite.partition()->size() == 3);

    CHECK_THROWS_AS(blow_up(tri, {1, 1}), InputError);
    CHECK_THROWS_AS(blow_up(tri, {1, 0, 1}), InputError);
}

TEST_CASE("approximation clauses") {
    Graph g = complete(10);
    SUBCASE("identity subgraph accepted at any budget") {
        auto rep = is_approximation(g, Subgraph::full(g), Rational(0), Rational(0));
        CHECK(rep.ok);
    }
    SUBCASE("vertex deletion breaks clause (ii) at eps = 0.05") {
        Subgraph sub;
        for (int v = 0; v < 9; ++v) sub.vertices.push_back(v);
        for (auto [u, v] : g.edges())
            if (u < 9 && v < 9) sub.edges.emplace_back(u, v);
        auto rep = is_approximation(g, sub, Rational(1, 20), Rational(1));
        CHECK(!rep.ok);
        CHECK(rep.violated_clause == 2);
    }
    SUBCASE("unbalanced deletion across parts breaks clause (iii)") {
        Partition parts = {{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}};
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < 5; ++u)
            for (int v = 5; v < 10; ++v) edges.emplace_back(u, v);
        Graph bip = Graph::from_edges(10, edges, parts);
        Subgraph sub;
        for (int v = 1; v < 10; ++v) sub.vertices.push_back(v);
        for (auto [u, v] : bip.edges())
            if (u != 0 && v != 0) sub.edges.emplace_back(u, v);
        auto rep = is_approximation(bip, sub, Rational(1, 2), Rational(1));
        CHECK(!rep.ok);
        CHECK(rep.violated_clause == 3);
    }
    SUBCASE("non-subgraph input throws") {
        Subgraph sub = Subgraph::full(g);
        sub.edges.emplace_back(0, 0);
        CHECK_THROWS_AS(is_approximation(g, sub, Rational(1), Rational(1)), InputError);
    }
}

TEST_CASE("approximation acceptance is monotone in (eps, d)") {
    for (uint64_t seed = 0; seed < 30; ++seed) {
        Rng rng(seed);
        int n = 6 + static_cast<int>(rng.below(5));
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.below(4) < 3) edges.emplace_back(u, v);
        Graph g = Graph::from_edges(n, edges);
        Subgraph sub = Subgraph::full(g);
        // random edge deletions
        std::vector<std::pair<int, int>> kept;
        for (auto e : sub.edges)
            if (rng.below(5) > 0) kept.push_back(e);
        sub.edges = kept;
        Rational eps(static_cast<long long>(rng.below(4)), 8);
        Rational d(static_cast<long long>(rng.below(4)), 8);
        bool small = is_approximation(g, sub, eps, d).ok;
        bool large = is_approximation(g, sub, eps + Rational(1, 8), d + Rational(1, 8)).ok;
        if (small) CHECK(large);
    }
}

TEST_CASE("cycle helper sanity") {
    Graph c5 = cycle(5);
    CHECK(c5.degree(0) == 2);
    CHECK(c5.degrees_sorted() == std::vector<int>{2, 2, 2, 2, 2});
}
