#include <doctest.h>

#include <functional>
#include <set>

#include "tightframe/errors.hpp"
#include "tightframe/matching.hpp"
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

Graph random_graph(int n, uint64_t seed, uint64_t num = 1, uint64_t den = 2) {
    Rng rng(seed);
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(num, den)) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

} // namespace

TEST_CASE("maximum fractional matchings") {
    KGraph c5 = build_clique_hypergraph(cycle(5), 2);
    FractionalMatching m5 = max_fractional_matching(c5);
    CHECK(m5.size == Rational(5, 2));
    for (int v = 0; v < 5; ++v) CHECK(m5.load(v) <= 1);

    Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    KGraph hs = build_clique_hypergraph(star, 2);
    CHECK(max_fractional_matching(hs).size == Rational(1));

    // K_3(K_4): optimum 4/3, certified by the explicit primal/dual pair
    // w = 1/3 per triple (feasible) and y = 1/3 per vertex (cover) of value 4/3
    KGraph k34 = build_clique_hypergraph(complete(4), 3);
    FractionalMatching m34 = max_fractional_matching(k34);
    CHECK(m34.size == Rational(4, 3));

    KGraph empty = KGraph::from_edges(3, 3, {});
    CHECK(max_fractional_matching(empty).size == Rational(0));
}

TEST_CASE("perfect fractional matchings") {
    KGraph c5 = build_clique_hypergraph(cycle(5), 2);
    CHECK(has_perfect_fractional_matching(c5).perfect);

    Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(!has_perfect_fractional_matching(build_clique_hypergraph(star, 2)).perfect);

    Graph tri = complete(3);
    Graph b222 = blow_up(tri, {2, 2, 2});
    KGraph h = build_clique_hypergraph(b222, 3);
    CHECK(h.edge_count() == 8);  // partite triples only
    auto w = has_perfect_fractional_matching(h);
    CHECK(w.perfect);
    // hand-checkable integral matching of size 2: clusters are {0,1},{2,3},{4,5}
    CHECK(h.has_edge({0, 2, 4}));
    CHECK(h.has_edge({1, 3, 5}));
}

TEST_CASE("tutte check") {
    CHECK(tutte_check(cycle(5)).ok);

    Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    TutteResult t = tutte_check(star);
    CHECK(!t.ok);
    CHECK(t.violating_set.size() > static_cast<size_t>(1));

    Graph pm6 = Graph::from_edges(6, {{0, 1}, {2, 3}, {4, 5}});
    CHECK(tutte_check(pm6).ok);

    Graph big(21);
    CHECK_THROWS_AS(tutte_check(big), GuardError);
}

TEST_CASE("tutte equals fractional matchability on k=2") {
    for (uint64_t seed = 0; seed < 200; ++seed) {
        Graph g = random_graph(4 + static_cast<int>(seed % 6), seed);
        bool tutte = tutte_check(g).ok;
        bool pfm = has_perfect_fractional_matching(build_clique_hypergraph(g, 2)).perfect;
        CHECK(tutte == pfm);
    }
}

TEST_CASE("sparsify matching") {
    KGraph c5 = build_clique_hypergraph(cycle(5), 2);
    FractionalMatching m5 = max_fractional_matching(c5);
    FractionalMatching s5 = sparsify_matching(c5, m5);
    CHECK(s5.weights.size() == 5);  // no reduction possible on the odd cycle
    CHECK(s5.size == Rational(5, 2));
    for (int v = 0; v < 5; ++v) CHECK(s5.load(v) == 1);

    // uniform 1/3 on the 6 edges of K_4 sparsifies to support <= 4
    KGraph k24 = build_clique_hypergraph(complete(4), 2);
    FractionalMatching uniform;
    for (const auto& e : k24.edges()) uniform.weights[e] = Rational(1, 3);
    uniform.size = Rational(2);
    FractionalMatching sparse = sparsify_matching(k24, uniform);
    CHECK(sparse.weights.size() <= 4);
    CHECK(sparse.size == Rational(2));
    for (int v = 0; v < 4; ++v) CHECK(sparse.load(v) == 1);

    // non-perfect input rejected
    FractionalMatching bad;
    bad.weights[{0, 1}] = Rational(1, 2);
    bad.size = Rational(1, 2);
    CHECK_THROWS_AS(sparsify_matching(k24, bad), PreconditionError);
}

TEST_CASE("sparsify on random perfect instances") {
    int tested = 0;
    for (uint64_t seed = 0; tested < 40 && seed < 400; ++seed) {
        int k = 2 + static_cast<int>(seed % 2);
        Graph g = random_graph(6 + static_cast<int>(seed % 4), seed * 3 + 1, 3, 4);
        KGraph h = build_clique_hypergraph(g, k);
        auto w = has_perfect_fractional_matching(h);
        if (!w.perfect) continue;
        ++tested;
        FractionalMatching s = sparsify_matching(h, w.matching);
        CHECK(static_cast<int>(s.weights.size()) <= h.vertex_count());
        CHECK(s.size == Rational(h.vertex_count(), k));
        for (int v = 0; v < h.vertex_count(); ++v) CHECK(s.load(v) == 1);
        CHECK(s.weights.size() <= w.matching.weights.size());
    }
    CHECK(tested >= 20);
}

TEST_CASE("bounded degree cover") {
    KGraph c5 = build_clique_hypergraph(cycle(5), 2);
    KGraph cover = bounded_degree_cover(c5);
    for (int v = 0; v < 5; ++v) {
        CHECK(cover.degree(v) >= 1);
        CHECK(cover.degree(v) <= 5);
    }
    for (const auto& e : cover.edges()) CHECK(c5.has_edge(e));

    KGraph k39 = build_clique_hypergraph(complete(9), 3);
    KGraph cover9 = bounded_degree_cover(k39);
    for (int v = 0; v < 9; ++v) {
        CHECK(cover9.degree(v) >= 1);
        CHECK(cover9.degree(v) <= 10);
    }
    for (const auto& e : cover9.edges()) CHECK(k39.has_edge(e));

    Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK_THROWS_AS(bounded_degree_cover(build_clique_hypergraph(star, 2)), PreconditionError);
}

TEST_CASE("cover bound on random perfect instances") {
    int tested = 0;
    for (uint64_t seed = 0; tested < 40 && seed < 400; ++seed) {
        int k = 2 + static_cast<int>(seed % 2);
        Graph g = random_graph(6 + static_cast<int>(seed % 4), seed * 5 + 2, 4, 5);
        KGraph h = build_clique_hypergraph(g, k);
        if (!has_perfect_fractional_matching(h).perfect) continue;
        ++tested;
        KGraph cover = bounded_degree_cover(h);
        for (int v = 0; v < h.vertex_count(); ++v) {
            CHECK(cover.degree(v) >= 1);
            CHECK(cover.degree(v) <= k * k + 1);
        }
        for (const auto& e : cover.edges()) CHECK(h.has_edge(e));
    }
    CHECK(tested >= 20);
}

TEST_CASE("integer flow allocation") {
    KGraph tri = build_clique_hypergraph(complete(3), 2);
    SUBCASE("zero demand gives zero weights") {
        AllocationVector w = integer_flow_allocate(tri, {0, 0, 0}, 1);
        CHECK(w.values.empty());
        CHECK(w.max_abs == 0);
    }
    SUBCASE("unit transfer on a triangle") {
        AllocationVector w = integer_flow_allocate(tri, {1, -1, 0}, 1);
        std::vector<long long> loads(3, 0);
        for (const auto& [e, val] : w.values)
            for (int v : e) loads[static_cast<size_t>(v)] += val;
        CHECK(loads == std::vector<long long>{1, -1, 0});
        CHECK(w.max_abs <= 2LL * 1 * 9);
    }
    SUBCASE("k=3 on the tetrahedron") {
        KGraph k34 = build_clique_hypergraph(complete(4), 3);
        AllocationVector w = integer_flow_allocate(k34, {1, -1, 0, 0}, 1);
        std::vector<long long> loads(4, 0);
        for (const auto& [e, val] : w.values)
            for (int v : e) loads[static_cast<size_t>(v)] += val;
        CHECK(loads == std::vector<long long>{1, -1, 0, 0});
        CHECK(w.max_abs <= 3LL * 1 * 16);
    }
    SUBCASE("preconditions rejected individually") {
        CHECK_THROWS_AS(integer_flow_allocate(tri, {1, -1, 1}, 1), PreconditionError);  // sum != 0
        CHECK_THROWS_AS(integer_flow_allocate(tri, {5, -5, 0}, 1), PreconditionError);  // over s
        KGraph disconnected = KGraph::from_edges(2, 4, {{0, 1}, {2, 3}});
        CHECK_THROWS_AS(integer_flow_allocate(disconnected, {1, -1, 0, 0}, 1),
                        PreconditionError);  // hat graph disconnected
    }
}

TEST_CASE("flow bound holds on random connected instances") {
    int tested = 0;
    for (uint64_t seed = 0; tested < 40 && seed < 600; ++seed) {
        int k = 2 + static_cast<int>(seed % 2);
        int n = 5 + static_cast<int>(seed % 4);
        Graph g = random_graph(n, seed * 7 + 3, 3, 4);
        KGraph h = build_clique_hypergraph(g, k);
        if (h.edge_count() == 0) continue;
        bool any_isolated = false;
        for (int v = 0; v < n; ++v)
            if (h.degree(v) == 0) any_isolated = true;
        if (any_isolated) continue;
        Graph hat = hat_graph(h);
        // quick connectivity scan of the hat graph
        std::vector<int> stack = {0};
        std::set<int> seen = {0};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : hat.neighbors(v))
                if (!seen.count(u)) { seen.insert(u); stack.push_back(u); }
        }
        if (static_cast<int>(seen.size()) != n) continue;
        ++tested;
        Rng rng(seed);
        std::vector<long long> b(static_cast<size_t>(n), 0);
        long long s = 3;
        long long acc = 0;
        for (int v = 0; v + 1 < n; ++v) {
            b[static_cast<size_t>(v)] = static_cast<long long>(rng.below(2 * s + 1)) - s;
            acc += b[static_cast<size_t>(v)];
        }
        if (acc > s || acc < -s) continue;
        b[static_cast<size_t>(n - 1)] = -acc;
        AllocationVector w = integer_flow_allocate(h, b, s);
        std::vector<long long> loads(static_cast<size_t>(n), 0);
        for (const auto& [e, val] : w.values)
            for (int v : e) loads[static_cast<size_t>(v)] += val;
        CHECK(loads == b);
        CHECK(w.max_abs <= static_cast<long long>(k) * s * n * n);
    }
    CHECK(tested >= 20);
}

TEST_CASE("distributed matching") {
    KGraph k39 = build_clique_hypergraph(complete(9), 3);
    SUBCASE("empty family gives an empty matching") {
        DistributedMatchingParams p;
        p.pi = Rational(1, 9);
        p.max_size = 3;
        p.gamma = Rational(1, 1000);
        CHECK(distributed_matching(k39, {}, p).empty());
    }
    SUBCASE("single member quota one") {
        DistributedMatchingParams p;
        p.pi = Rational(1, 9);
        p.max_size = 3;
        p.gamma = Rational(1, 1000);
        auto m = distributed_matching(k39, {k39}, p);
        CHECK(m.size() >= 1);
        CHECK(m.size() <= 3);
    }
    SUBCASE("two members both hit, edges disjoint") {
        KGraph k312 = build_clique_hypergraph(complete(12), 3);
        // split the triples by whether they use vertex 0..5 only or 6..11 only
        std::vector<std::vector<int>> lo, hi;
        for (const auto& e : k312.edges()) {
            if (e.back() <= 5) lo.push_back(e);
            if (e.front() >= 6) hi.push_back(e);
        }
        std::vector<KGraph> family = {KGraph::from_edges(3, 12, lo), KGraph::from_edges(3, 12, hi)};
        DistributedMatchingParams p;
        p.pi = Rational(1, 12);
        p.max_size = 4;
        p.gamma = Rational(1, 1000);
        p.seed = 0;
        auto m = distributed_matching(k312, family, p);
        std::set<int> used;
        long long in_lo = 0, in_hi = 0;
        for (const auto& e : m) {
            for (int v : e) {
                CHECK(!used.count(v));
                used.insert(v);
            }
            if (family[0].has_edge(e)) ++in_lo;
            if (family[1].has_edge(e)) ++in_hi;
        }
        CHECK(in_lo >= 1);
        CHECK(in_hi >= 1);
    }
    SUBCASE("density precondition enforced") {
        KGraph sparse = KGraph::from_edges(3, 9, {{0, 1, 2}});
        DistributedMatchingParams p;
        p.pi = Rational(1, 9);
        p.max_size = 3;
        p.gamma = Rational(1, 10);
        CHECK_THROWS_AS(distributed_matching(k39, {sparse}, p), PreconditionError);
    }
}

TEST_CASE("blow-up cluster matching") {
    SUBCASE("single edge with equal clusters is perfectly matched") {
        KGraph single = KGraph::from_edges(3, 3, {{0, 1, 2}});
        FractionalMatching pm;
        pm.weights[{0, 1, 2}] = Rational(1);
        pm.size = Rational(1);
        auto r = blowup_cluster_matching(single, {4, 4, 4}, pm, Rational(0), Rational(0));
        CHECK(r.matching.size() == 4);
        CHECK(r.deficiency == std::vector<long long>{0, 0, 0});
        CHECK(r.within_bound);
    }
    SUBCASE("triangle blow-up covers up to the stated bound") {
        KGraph tri = build_clique_hypergraph(complete(3), 2);
        FractionalMatching pm = max_fractional_matching(tri);
        REQUIRE(pm.size == Rational(3, 2));
        auto r = blowup_cluster_matching(tri, {3, 3, 3}, pm, Rational(0), Rational(1, 3));
        // brute-force maximum matching of the blown-up triangle misses 1 vertex
        for (long long d : r.deficiency) CHECK(d <= 1 + 3);  // beta*v + t^{k-1} = 3 + 3
        CHECK(r.within_bound);
        std::set<int> used;
        for (const auto& e : r.matching)
            for (int v : e) {
                CHECK(!used.count(v));
                used.insert(v);
            }
    }
    SUBCASE("unbalanced clusters are rejected") {
        KGraph single = KGraph::from_edges(3, 3, {{0, 1, 2}});
        FractionalMatching pm;
        pm.weights[{0, 1, 2}] = Rational(1);
        pm.size = Rational(1);
        CHECK_THROWS_AS(blowup_cluster_matching(single, {2, 2, 9}, pm, Rational(1, 10), Rational(0)),
                        PreconditionError);
    }
}

TEST_CASE("lp duality certificate is verified for every matching solve") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
        int k = 2 + static_cast<int>(seed % 2);
        Graph g = random_graph(7, seed * 13 + 5, 2, 3);
        KGraph h = build_clique_hypergraph(g, k);
        FractionalMatching m = max_fractional_matching(h);  // throws if certificate fails
        Rational total = 0;
        for (const auto& [e, w] : m.weights) {
            CHECK(w > 0);
            CHECK(h.has_edge(e));
            total += w;
        }
        CHECK(total == m.size);
        for (int v = 0; v < h.vertex_count(); ++v) CHECK(m.load(v) <= 1);
    }
}
