#ifndef TIGHTFRAME_ORACLE_HPP
#define TIGHTFRAME_ORACLE_HPP

#include <optional>
#include <vector>

#include "tightframe/graph.hpp"
#include "tightframe/kgraph.hpp"
#include "tightframe/matching.hpp"

namespace tightframe {

// Brute-force ground truth, kept independent of the construction paths it is
// used to check.

struct OracleVerdict {
    bool found = false;
    std::vector<int> witness;      // cyclic order or concatenated factor cliques
    long long nodes_explored = 0;
    bool timed_out = false;
};

// Exhaustive search for a cyclic order whose (k-1)th cycle power lies in g;
// budget counts explored search nodes.
OracleVerdict find_power_ham_cycle(const Graph& g, int k, long long budget);

// True iff every pair at cyclic distance at most k-1 in the order is adjacent.
bool verify_power_ham_cycle(const Graph& g, const std::vector<int>& order, int k);

// Exhaustive search for pairwise disjoint k-cliques covering all vertices.
OracleVerdict find_clique_factor(const Graph& g, int k, long long budget);

// Independent re-derivation of the framework conditions: components by
// overlap union-find, matching by the exact LP, aperiodicity by bounded
// closed-walk enumeration. Guarded by k! * |E| <= 5000.
struct BruteFrameworkVerdict {
    bool spanning = false;
    bool contained_in_component = false;
    bool has_perfect_matching = false;
    bool aperiodic_walk_exists = false;
    int ambient_components = 0;
    bool framework = false;
};

BruteFrameworkVerdict framework_bruteforce(const Graph& g, const KGraph& h);

// Tight components as connected components of the edge-overlap graph (edges
// adjacent when they share k-1 vertices); the oracle side of the SCC check.
struct TightComponentsOracle {
    std::vector<int> component_of_edge;
    int count = 0;
};

TightComponentsOracle overlap_components(const KGraph& h);

// Existence of a closed tight walk of length coprime to k, by exhaustive
// reachability over ordered windows with length residues.
bool aperiodic_walk_exists_bruteforce(const KGraph& h);

} // namespace tightframe

#endif
