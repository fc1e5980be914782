#ifndef TIGHTFRAME_GRAPH_HPP
#define TIGHTFRAME_GRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tightframe/rational.hpp"

namespace tightframe {

using Partition = std::vector<std::vector<int>>;

// Finite simple undirected graph on dense vertex ids 0..n-1, optionally
// carrying a vertex partition. Parts are kept sorted; when the partition has
// two or more parts every edge must cross parts. Immutable after construction
// through the factory functions below.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(n)) {}

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                            const std::optional<Partition>& partition = std::nullopt);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<size_t>(v)); }
    int degree(int v) const { return static_cast<int>(adj_.at(static_cast<size_t>(v)).size()); }

    // sorted (u < v) pairs, lexicographic
    std::vector<std::pair<int, int>> edges() const;

    // nondecreasing
    std::vector<int> degrees_sorted() const;

    const std::optional<Partition>& partition() const { return partition_; }

    // part index of v, or -1 when no partition
    int part_of(int v) const;

    // degree of v into part U (all of V when the graph has no partition and U=0)
    int degree_into(int v, const std::vector<int>& part) const;

    // Throws unless the partition is (n,r)-sized with r in {1,k}.
    void require_sized_partition(int k) const;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::optional<Partition> partition_;
    std::vector<int> part_of_;

    void add_edge_checked(int u, int v);
    void set_partition_checked(const Partition& parts);
};

enum class GraphFormat { EdgeList, Json };

Graph load_graph(const std::string& path, GraphFormat format);
Graph parse_graph_edge_list(const std::string& text);
Graph parse_graph_json(const std::string& text);
std::string graph_to_edge_list(const Graph& g);
std::string graph_to_json(const Graph& g);
void save_graph(const Graph& g, const std::string& path, GraphFormat format);

// Replaces vertex i of `base` by an independent cluster of sizes[i] vertices,
// and every base edge ij by the complete bipartite pattern between clusters.
// Clusters are recorded as the partition of the result.
Graph blow_up(const Graph& base, const std::vector<int>& sizes);

// A sub-structure of a host graph, listed on the host's vertex ids.
struct Subgraph {
    std::vector<int> vertices;                 // sorted surviving ids
    std::vector<std::pair<int, int>> edges;    // u < v, sorted, within `vertices`

    static Subgraph full(const Graph& host);
};

// Materializes a Subgraph as a standalone Graph with compacted ids.
// old_id[i] gives the host id of new vertex i. The host partition restricts.
struct InducedGraph {
    Graph graph;
    std::vector<int> old_id;
};
InducedGraph materialize(const Graph& host, const Subgraph& sub);

struct ApproximationReport {
    bool ok = false;
    // first violated clause: 1 = degree loss, 2 = part too small, 3 = parts unbalanced
    int violated_clause = 0;
    std::string detail;
};

// Checks the three approximation conditions of sub against host at (eps, d):
// per-vertex per-part degree loss at most d|U|, each part keeps a (1-eps)
// fraction, and part intersections stay equal. Throws InputError when sub is
// not a subgraph of host.
ApproximationReport is_approximation(const Graph& host, const Subgraph& sub,
                                     const Rational& eps, const Rational& d);

} // namespace tightframe

#endif
