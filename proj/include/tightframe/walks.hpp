#ifndef TIGHTFRAME_WALKS_HPP
#define TIGHTFRAME_WALKS_HPP

#include <optional>
#include <string>
#include <vector>

#include "tightframe/kgraph.hpp"

namespace tightframe {

// A (closed) tight walk with its bookkeeping. Length counts vertices.
struct WalkCertificate {
    std::vector<int> sequence;
    bool closed = false;
    long long length = 0;
    int congruence = 0;  // length mod k
    std::vector<std::vector<int>> visited_edges;
    long long padding = 0;       // vertices appended purely to reach a target length
    bool padding_heavy = false;  // padding exceeded t^k / 2

    std::string to_json() const;
};

// Directed graph on the ordered versions of a k-graph's edges; an arc joins
// two orderings when the k-1 tail of the first equals the k-1 head of the
// second. Node count is at most k! * |E|.
class OrderedCliqueDigraph {
public:
    explicit OrderedCliqueDigraph(const KGraph& h);

    int node_count() const { return static_cast<int>(tuples_.size()); }
    const std::vector<int>& tuple(int node) const { return tuples_.at(static_cast<size_t>(node)); }
    int edge_of(int node) const { return edge_of_.at(static_cast<size_t>(node)); }
    const std::vector<int>& arcs_from(int node) const { return arcs_.at(static_cast<size_t>(node)); }
    int node_of(const std::vector<int>& tuple) const;  // -1 if absent

    const KGraph& host() const { return *host_; }

private:
    const KGraph* host_;
    std::vector<std::vector<int>> tuples_;
    std::vector<int> edge_of_;
    std::vector<std::vector<int>> arcs_;
};

struct TightComponents {
    std::vector<int> component_of_edge;  // edge index -> component id, ids dense from 0
    int count = 0;
};

// Partition of E(H) into tight components via strongly connected components
// of the ordered-clique digraph, merging the up-to-k! pieces per component.
TightComponents tight_components(const KGraph& h);

struct PeriodInfo {
    long long d = 0;           // gcd of closed directed walk lengths in the component
    bool aperiodic_mod_k = false;
};

PeriodInfo period(const KGraph& h, const TightComponents& comps, int component);

// Closed tight walk visiting every edge of a tightly connected h; when q is
// given the walk length is congruent to q mod k (requires aperiodicity).
WalkCertificate closed_walk_all_edges(const KGraph& h, std::optional<int> q = std::nullopt);

// Tight walk of length exactly k * t^k from the ordered edge e1 to the
// ordered tuple e2 whose vertices lie inside a (k+1)-clique K of h.
WalkCertificate walk_between(const KGraph& h, const std::vector<int>& e1,
                             const std::vector<int>& e2, const std::vector<int>& clique);

// Closed walk starting with the given ordering of an edge and visiting all
// edges of a tightly connected h.
WalkCertificate spanning_walk_with_prefix(const KGraph& h, const std::vector<int>& prefix);

bool verify_walk(const KGraph& h, const WalkCertificate& w);

enum class ReachabilityVerdict { Holds, Fails, HypothesesUnmet };

struct ReachabilityReport {
    ReachabilityVerdict verdict;
    std::string detail;
};

// Whether the hat graph restricted to each partition part is connected. The
// hypotheses (no isolated vertices, tight connectivity, aperiodicity when the
// partition is trivial) are checked first and reported separately.
ReachabilityReport hat_reachability_check(const KGraph& h);

// True when some closed tight walk covers all edges (used internally and by
// certification).
bool is_tightly_connected(const KGraph& h);

} // namespace tightframe

#endif
