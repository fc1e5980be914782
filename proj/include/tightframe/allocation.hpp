#ifndef TIGHTFRAME_ALLOCATION_HPP
#define TIGHTFRAME_ALLOCATION_HPP

#include <map>
#include <optional>
#include <vector>

#include "tightframe/graph.hpp"
#include "tightframe/kgraph.hpp"
#include "tightframe/matching.hpp"
#include "tightframe/rational.hpp"
#include "tightframe/walks.hpp"

namespace tightframe {

// Homomorphism of a guest graph into the (k-1)th power of a path on q
// vertices plus a dominating extra vertex for the zero colour. Positions are
// 1-based; 0 encodes the extra vertex.
struct PathPowerAllocation {
    int k = 0;
    int q = 0;
    std::vector<int> position;     // guest vertex -> 1..q, or 0 for the zero class
    std::vector<int> zero_indices; // increasing block indices carrying colour 0
    long long max_preimage = 0;    // restricted map multiplicity bound actually attained

    static PathPowerAllocation identity(int k, int q);
};

// Scans the bandwidth ordering block by block; colours j land on positions
// congruent to j mod k. Verifies the ordering, the colouring and the
// resulting homomorphism before returning.
PathPowerAllocation allocate_to_path_power(const Graph& guest, const std::vector<int>& ordering,
                                           const std::vector<int>& colouring, const Rational& beta,
                                           int z, int k);

struct MarkovAllocation {
    std::vector<int> cluster_of;     // guest vertex -> 0..rt-1 on the cycle power
    std::vector<long long> loads;    // per cluster
    int resamples = 0;               // resamples consumed before success
    bool within_bounds = false;      // all loads in (1 +- xi) n / t
};

struct MarkovParams {
    int k = 0;
    int r = 1;
    int t = 0;
    Rational xi;
    uint64_t seed = 0;
    int retries = 20;
};

// Randomised allocation of a path-power homomorphism onto the (k-1)th power
// of a cycle on r*t clusters, by simulating the loop-around walk started from
// its stationary distribution. Guest may be null when the path power itself
// is the guest (identity allocation).
MarkovAllocation markov_allocate(const PathPowerAllocation& pa, const Graph* guest,
                                 const MarkovParams& params);

// Exact stationary checks for the walk's transition structure.
bool markov_stationary_exact(int k, int r, int t);        // pi P = pi
bool markov_kstep_stationary_exact(int k, int t);          // class-restricted chain, r = k

struct BalancingVector {
    std::map<std::vector<int>, long long> w;       // final integer weights, >= 0
    std::map<std::vector<int>, long long> w2, w3, w4, w5;
    bool floors_met = false;                       // w >= 4 pi n and >= 3 alpha m on the cover
};

// Step-2 allocation solve: find integer edge weights w with
// incidence(w1 + w) = b exactly, nonnegative, with the prescribed floors.
// w1 carries the walk's window counts divided by k (exact rationals).
BalancingVector solve_balancing_vector(const KGraph& j, const KGraph& cover,
                                       const std::vector<long long>& b,
                                       const std::map<std::vector<int>, Rational>& w1,
                                       const Rational& pi, const Rational& alpha);

// A tight Hamilton cycle of the (j, sizes)-blow-up, expressed as the cyclic
// sequence of cluster ids; lifting to distinct vertices is a counting
// exercise once each cluster id appears exactly sizes[i] times.
struct ClusterCycle {
    std::vector<int> cluster_sequence;
    std::map<std::vector<int>, long long> inflations;  // per edge copies inserted
};

ClusterCycle blowup_hamilton_cycle(const KGraph& j, const KGraph& cover,
                                   const std::vector<long long>& sizes, const Rational& pi,
                                   const Rational& alpha);

struct CorrectingCycle {
    long long ell = 0;
    std::vector<long long> ell_i;          // per-cluster counts, sum r*ell per class
    std::vector<int> phi;                  // position on the cycle power -> cluster
    std::vector<std::vector<int>> buffers;   // positions per cluster (J2)
    std::vector<std::vector<int>> forwards;  // positions per cluster (J3)
    bool j1_ok = false, j2_ok = false, j3_ok = false;
};

// Imbalance-correcting homomorphism of a cycle power into the reduced graph:
// cluster i is used proportionally to sizes[i], with buffer and forward sets
// anchored on the tight Hamilton cycle `jprime`.
CorrectingCycle imbalance_correcting_cycle(const Graph& r_graph, const KGraph& j,
                                           const std::vector<int>& jprime_order,
                                           const std::vector<long long>& sizes, const Rational& xi,
                                           const Rational& pi, const Rational& alpha);

struct ZeroBlockSplit {
    long long omega = 0;
    struct Run {
        long long a, b, c, d;            // interval endpoints around one zero block
        std::vector<int> vertices;       // guest vertices of the run F_j
    };
    std::vector<Run> runs;
    std::vector<int> main_vertices;      // H' = H_1 minus the runs
    std::vector<int> zero_vertices;      // H_0
    std::vector<WalkCertificate> routing_walks;  // two per run when a framework is given
};

// Splits the guest along its zero blocks with the interval arithmetic of the
// allocation pipeline; when a reduced hypergraph with a (k+1)-clique is
// supplied, the connecting walks through the clique are produced as well.
ZeroBlockSplit split_zero_blocks(const PathPowerAllocation& pa, int t, int k, int z,
                                 const KGraph* j = nullptr,
                                 const std::vector<int>* clique = nullptr);

struct Embedding {
    std::vector<int> vertex_map;  // guest vertex -> host vertex, injective
    bool verified = false;
    std::string detail;
};

enum class GuestKind { CyclePower, BandwidthColoured };

struct EmbedRequest {
    GuestKind kind = GuestKind::CyclePower;
    // for BandwidthColoured guests
    std::optional<Graph> guest;
    std::vector<int> ordering;
    std::vector<int> colouring;
    Rational beta;
    int z = 0;
    // randomisation
    uint64_t seed = 0;
    int retries = 20;
    Rational xi = Rational(1, 10);
};

// Embeds the guest into blow_up(r_graph, sizes): for cycle powers the tight
// Hamilton cycle of the blow-up is constructed directly; bandwidth guests go
// through the path-power and random-walk allocations and must land exactly on
// the cluster sizes.
Embedding embed_on_blowup(const Graph& r_graph, const KGraph& j, const KGraph& cover,
                          const std::vector<long long>& sizes, int k, const EmbedRequest& request);

} // namespace tightframe

#endif
