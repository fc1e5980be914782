#ifndef TIGHTFRAME_GENERATORS_HPP
#define TIGHTFRAME_GENERATORS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tightframe/graph.hpp"
#include "tightframe/kgraph.hpp"

namespace tightframe {

// Every generator returns the instance together with the verdicts of the
// verifiers for the construction's claimed properties; generation without
// verification is not possible through this interface.

struct VerifiedGraph {
    Graph graph;
    std::vector<std::pair<std::string, bool>> checks;

    bool all_checks_pass() const {
        for (const auto& [name, ok] : checks)
            if (!ok) return false;
        return true;
    }
};

// Three-class construction with a dominated vertex, a star-packed middle
// class and a complete rest; degree sequence sits just above the k=3 Posa
// line while the neighbourhood of the special vertex has no path on 4
// vertices.
VerifiedGraph gen_bkt(long long n);

// Complete (k-2)-partite graph with one tripled class carrying the n-vertex
// three-class construction inside; k >= 4.
VerifiedGraph gen_posa_extremal_k(int k, long long n);

struct SeparatorResult {
    Graph graph;
    long long snapped_n = 0;  // n actually used (integrality may force a snap)
    long long x0_size = 0;
    std::vector<std::pair<std::string, bool>> checks;

    bool all_checks_pass() const {
        for (const auto& [name, ok] : checks)
            if (!ok) return false;
        return true;
    }
};

// Ore-but-not-Posa separator construction; when snap is set, n is moved to
// the nearest feasible value that makes every cardinality integral.
SeparatorResult gen_ore_posa_separator(int k, long long n, const Rational& mu, bool snap);

struct FragileFramework {
    Graph graph;
    KGraph hypergraph;  // K_3 of the graph
    int base_vertices = 0;
    std::vector<std::pair<std::string, bool>> checks;
};

// Two overlaid cube structures whose triangle hypergraph splits into exactly
// two tight components, with an apex vertex that no square of a Hamilton
// cycle can pass; blown up by m.
FragileFramework gen_fragile_framework(long long q, int m);

Graph gen_random(int n, const Rational& p, uint64_t seed);
Graph gen_multipartite_random(int r, int n, const Rational& p, uint64_t seed);

} // namespace tightframe

#endif
