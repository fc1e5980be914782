#ifndef TIGHTFRAME_MATCHING_HPP
#define TIGHTFRAME_MATCHING_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tightframe/kgraph.hpp"
#include "tightframe/rational.hpp"

namespace tightframe {

struct FractionalMatching {
    std::map<std::vector<int>, Rational> weights;  // sorted edge -> weight
    Rational size;

    Rational load(int v) const;
    std::string to_json() const;
};

// Exact optimum of max sum(w) s.t. per-vertex load <= 1, w >= 0, with a
// verified dual certificate.
FractionalMatching max_fractional_matching(const KGraph& h);

struct PerfectMatchingWitness {
    bool perfect = false;
    FractionalMatching matching;
};

// perfect iff the optimum equals v(H)/k exactly
PerfectMatchingWitness has_perfect_fractional_matching(const KGraph& h);

struct TutteResult {
    bool ok = false;
    std::vector<int> violating_set;  // independent set with |N(S)| < |S|
};

// Exhaustive over all independent sets; guarded at n <= 20.
TutteResult tutte_check(const Graph& g);

// Conic Caratheodory: perfect matching with support at most v(H), preserving
// all loads exactly.
FractionalMatching sparsify_matching(const KGraph& h, const FractionalMatching& m);

// Spanning subgraph covering every vertex between 1 and k^2+1 times; requires
// a perfect fractional matching.
KGraph bounded_degree_cover(const KGraph& h);
KGraph bounded_degree_cover(const KGraph& h, const FractionalMatching& perfect);

struct AllocationVector {
    std::map<std::vector<int>, long long> values;  // sorted edge -> integer
    long long max_abs = 0;
};

// Integer edge weights whose per-vertex sums equal b, with the infinity norm
// bounded by k*s*n^2; requires connected hat graph on each part and zero part
// sums.
AllocationVector integer_flow_allocate(const KGraph& h, const std::vector<long long>& b,
                                       long long s);

struct DistributedMatchingParams {
    Rational pi;          // per-member quota is ceil(pi * n)
    int max_size = 0;     // hard cap on |M|
    Rational gamma;       // density precondition: |F| >= gamma * n^k
    uint64_t seed = 0;
    int retries = 20;
};

// Vertex-disjoint edges meeting the quota inside every member of family.
std::vector<std::vector<int>> distributed_matching(const KGraph& h,
                                                   const std::vector<KGraph>& family,
                                                   const DistributedMatchingParams& params);

struct BlowupMatchingResult {
    std::vector<std::vector<int>> matching;   // edges on blow-up vertex ids
    std::vector<long long> deficiency;        // per cluster
    bool within_bound = false;                // deficiency <= beta*v + t^{k-1}
};

// Integral matching in the (J, sizes)-blow-up from a perfect fractional
// matching on J, by flooring scaled weights. Sizes must be (1+alpha)-balanced;
// per-part totals must agree when J is partitioned.
BlowupMatchingResult blowup_cluster_matching(const KGraph& j, const std::vector<long long>& sizes,
                                             const FractionalMatching& perfect,
                                             const Rational& alpha, const Rational& beta);

} // namespace tightframe

#endif
