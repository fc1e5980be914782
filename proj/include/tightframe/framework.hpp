#ifndef TIGHTFRAME_FRAMEWORK_HPP
#define TIGHTFRAME_FRAMEWORK_HPP

#include <optional>
#include <string>
#include <vector>

#include "tightframe/graph.hpp"
#include "tightframe/kgraph.hpp"
#include "tightframe/matching.hpp"
#include "tightframe/walks.hpp"

namespace tightframe {

struct WantFlags {
    bool aperiodic = false;
    bool zero_free = false;
};

// Witness bundle for the framework conditions: spanning, containment in one
// tight component of the ambient clique hypergraph, perfect fractional
// matching, plus the optional aperiodicity walk and (k+1)-clique.
struct FrameworkCertificate {
    bool spanning = false;
    bool contained_in_component = false;
    int component_witness = -1;
    bool has_perfect_matching = false;
    FractionalMatching matching;
    std::optional<WalkCertificate> aperiodic_walk;
    std::optional<std::vector<int>> zero_free_clique;
    LinkedEdgeProfile linked_profile;

    bool framework = false;
    bool aperiodic = false;
    bool zero_free = false;

    std::string to_json() const;
};

FrameworkCertificate certify_framework(const Graph& g, const KGraph& h, WantFlags want);

enum class RobustnessStrategy { Random, AdversarialStructured };

struct RobustnessTrial {
    bool pass = false;
    int deleted_vertices = 0;
    int deleted_edges = 0;
    std::string failure;  // which clause broke, empty when pass
};

struct RobustnessReport {
    bool linked_edges_ok = false;       // (R2) exact
    long long min_linked = 0;
    bool all_trials_pass = false;       // (R1) probed, never a universal claim
    std::vector<RobustnessTrial> trials;
    std::optional<std::string> first_counterexample;  // serialized subgraph

    std::string to_json() const;
};

RobustnessReport probe_robustness(const Graph& g, const KGraph& h, const Rational& mu,
                                  RobustnessStrategy strategy, int trials, uint64_t seed,
                                  WantFlags want = {});

struct ConditionReport {
    std::string name;
    bool holds = false;
    std::optional<Rational> margin;  // worst slack; empty when vacuous
    std::string witness;             // violation detail when available
    bool probabilistic = false;      // verdict from sampling, not exhaustion

    std::string to_json() const;
};

// deg(x)+deg(y) >= 2(k-1)n/k + mu*n over non-adjacent pairs
ConditionReport ore_check(const Graph& g, int k, const Rational& mu);

// d_i >= (k-2)n/k + i + mu*n for i <= n/k (1-based into the sorted sequence)
ConditionReport posa_check(const Graph& g, int k, const Rational& mu);

// (rho,d)-dense and mu-inseparable; exhaustive for n <= 20, sampled beyond
ConditionReport dense_inseparable_check(const Graph& g, const Rational& rho, const Rational& d,
                                        const Rational& mu, int samples = 2000, uint64_t seed = 0);

// edges of h containing a (k-1)-shadow edge of degree >= eta * n
KGraph adherence(const KGraph& h, const Rational& eta);

struct DeficiencyBounds {
    Rational g;
    Rational f;
};
DeficiencyBounds deficiency_bounds(long long n, long long t, int k);

// least minimum degree between pairs of parts
int multipartite_degree(const Graph& g);

// robust (nu,tau)-expansion plus delta(G) >= eta*n
ConditionReport robust_expander_check(const Graph& g, const Rational& nu, const Rational& tau,
                                      const Rational& eta, int samples = 2000, uint64_t seed = 0);

} // namespace tightframe

#endif
