#ifndef TIGHTFRAME_KGRAPH_HPP
#define TIGHTFRAME_KGRAPH_HPP

#include <optional>
#include <string>
#include <vector>

#include "tightframe/graph.hpp"

namespace tightframe {

// k-uniform hypergraph on vertex ids 0..n-1 with a sorted, deduplicated edge
// list. Partition (when present) must be respected by every edge: at most one
// vertex per part.
class KGraph {
public:
    KGraph() = default;
    KGraph(int k, int n) : k_(k), n_(n) {}

    static KGraph from_edges(int k, int n, std::vector<std::vector<int>> edges,
                             const std::optional<Partition>& partition = std::nullopt);

    int k() const { return k_; }
    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::vector<int>>& edges() const { return edges_; }
    const std::vector<int>& edge(int i) const { return edges_.at(static_cast<size_t>(i)); }

    bool has_edge(const std::vector<int>& sorted_vertices) const;
    int edge_index(const std::vector<int>& sorted_vertices) const;  // -1 if absent

    int degree(int v) const;
    bool is_isolated(int v) const { return degree(v) == 0; }

    const std::optional<Partition>& partition() const { return partition_; }
    KGraph with_partition(const Partition& parts) const;

private:
    int k_ = 0;
    int n_ = 0;
    std::vector<std::vector<int>> edges_;
    std::optional<Partition> partition_;
    std::vector<int> degree_;
};

// All k-cliques of G as a k-graph; the partition of G is inherited.
KGraph build_clique_hypergraph(const Graph& g, int k);

// (k-1)-graph of the neighbourhood sets of v.
KGraph link_graph(const KGraph& h, int v);

// i-th shadow: all i-sets contained in some edge.
KGraph shadow(const KGraph& h, int i);

struct LinkedEdgeProfile {
    std::vector<long long> counts;  // per-vertex number of linked edges
    long long min_count = 0;

    // true when every vertex has at least mu * n^k linked edges
    bool meets_threshold(const Rational& mu, int n, int k) const;
};

// For each vertex v: the number of edges e avoiding v that share k-1 vertices
// with some edge through v.
LinkedEdgeProfile linked_edge_profile(const KGraph& h);

// 2-graph joining x,y whenever their link graphs share an edge.
Graph hat_graph(const KGraph& h);

// A set of k+1 vertices all of whose k-subsets are edges of h, if one exists.
std::optional<std::vector<int>> find_k_plus_1_clique(const KGraph& h);

std::string kgraph_to_json(const KGraph& h);
KGraph parse_kgraph_json(const std::string& text);

// Edges of h entirely inside the given (sorted) vertex subset, relabelled by
// position; used when re-certifying approximations.
KGraph induce_kgraph(const KGraph& h, const std::vector<int>& vertices);

} // namespace tightframe

#endif
