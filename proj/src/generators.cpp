#include "tightframe/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "tightframe/errors.hpp"
#include "tightframe/framework.hpp"
#include "tightframe/oracle.hpp"
#include "tightframe/rng.hpp"
#include "tightframe/walks.hpp"

namespace tightframe {

namespace {

long long isqrt_floor(long long n) {
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

} // namespace

VerifiedGraph gen_bkt(long long n) {
    if (n % 3 != 0) throw InputError("n must be divisible by 3");
    long long root = isqrt_floor(n);
    long long c = root / 12;
    long long kn = root * root == n ? root : root + 1;  // ceil(sqrt(n))
    long long v2 = n / 3 + c + 1;
    long long v3 = 2 * n / 3 - c - 2;
    if (v2 < kn || v3 < 1) throw InputError("n too small for the construction");

    std::vector<std::pair<int, int>> edges;
    int middle_lo = 1, middle_hi = static_cast<int>(1 + v2);  // [lo, hi)
    int rest_hi = static_cast<int>(n);
    for (int u = middle_lo; u < middle_hi; ++u) edges.emplace_back(0, u);
    for (int u = middle_lo; u < middle_hi; ++u)
        for (int w = middle_hi; w < rest_hi; ++w) edges.emplace_back(u, w);
    for (int u = middle_hi; u < rest_hi; ++u)
        for (int w = u + 1; w < rest_hi; ++w) edges.emplace_back(u, w);
    // kn vertex-disjoint stars covering the middle class, sizes floor/ceil
    long long base = v2 / kn, extra = v2 % kn;
    int cursor = middle_lo;
    for (long long s = 0; s < kn; ++s) {
        long long size = base + (s < extra ? 1 : 0);
        int center = cursor;
        for (long long i = 1; i < size; ++i) edges.emplace_back(center, cursor + static_cast<int>(i));
        cursor += static_cast<int>(size);
    }

    VerifiedGraph out;
    out.graph = Graph::from_edges(static_cast<int>(n), edges);

    std::vector<int> d = out.graph.degrees_sorted();
    bool degree_ok = true;
    for (long long i = 1; i <= n / 3; ++i)
        if (d[static_cast<size_t>(i - 1)] < n / 3 + c + i) { degree_ok = false; break; }
    out.checks.emplace_back("degree-sequence", degree_ok);

    // the neighbourhood of the special vertex must have no path on 4 vertices
    bool p3_free = true;
    for (int u = middle_lo; u < middle_hi && p3_free; ++u)
        for (int w : out.graph.neighbors(u)) {
            if (w <= u || w < middle_lo || w >= middle_hi) continue;
            int du = 0, dw = 0;
            int ext_u = -1, ext_w = -1;
            for (int x : out.graph.neighbors(u))
                if (x >= middle_lo && x < middle_hi && x != w) { ++du; ext_u = x; }
            for (int x : out.graph.neighbors(w))
                if (x >= middle_lo && x < middle_hi && x != u) { ++dw; ext_w = x; }
            if (du >= 1 && dw >= 1 && (ext_u != ext_w || du > 1 || dw > 1)) {
                p3_free = false;
                break;
            }
        }
    out.checks.emplace_back("no-p4-in-special-neighbourhood", p3_free);
    return out;
}

VerifiedGraph gen_posa_extremal_k(int k, long long n) {
    if (k < 4) throw InputError("k must be at least 4 (the k=3 case is the three-class family)");
    VerifiedGraph inner = gen_bkt(3 * n);
    long long total = static_cast<long long>(k) * n;  // k-3 classes of n plus one of 3n
    std::vector<std::pair<int, int>> edges;
    // cluster boundaries: big class first (ids 0..3n-1), then k-3 classes of n
    std::vector<std::pair<int, int>> ranges;
    ranges.emplace_back(0, static_cast<int>(3 * n));
    for (int cidx = 0; cidx < k - 3; ++cidx) {
        int lo = static_cast<int>(3 * n + cidx * n);
        ranges.emplace_back(lo, lo + static_cast<int>(n));
    }
    for (size_t a = 0; a < ranges.size(); ++a)
        for (size_t b = a + 1; b < ranges.size(); ++b)
            for (int u = ranges[a].first; u < ranges[a].second; ++u)
                for (int v = ranges[b].first; v < ranges[b].second; ++v) edges.emplace_back(u, v);
    for (auto [u, v] : inner.graph.edges()) edges.emplace_back(u, v);

    VerifiedGraph out;
    out.graph = Graph::from_edges(static_cast<int>(total), edges);

    bool outside_degrees = true;
    for (int v = static_cast<int>(3 * n); v < total; ++v)
        if (out.graph.degree(v) != static_cast<int>((k - 1) * n)) { outside_degrees = false; break; }
    out.checks.emplace_back("outside-degrees-exact", outside_degrees);

    // d_i >= (k-2)N/k + sqrt(N)/(12k) + i for i <= N/k
    std::vector<int> d = out.graph.degrees_sorted();
    bool degree_ok = true;
    for (long long i = 1; i <= total / k; ++i) {
        long long lhs = d[static_cast<size_t>(i - 1)] - (k - 2) * total / k - i;  // (k-2)N/k integral here
        if (lhs < 0 || static_cast<long long>(lhs) * lhs * 144 * k * k < total) {
            degree_ok = false;
            break;
        }
    }
    out.checks.emplace_back("degree-sequence", degree_ok);
    for (auto& c : inner.checks) out.checks.emplace_back("inner-" + c.first, c.second);
    return out;
}

namespace {

bool separator_feasible(int k, long long n, const Rational& beta, long long& x0, long long& x1,
                        long long& d0, long long& d1) {
    Rational rx0 = Rational(n, 2 * k);
    Rational rx1 = Rational(3 * n, 2 * k) + beta * Rational(n);
    Rational rd0 = beta * Rational(n);
    if (denominator(rx0) != 1 || denominator(rx1) != 1 || denominator(rd0) != 1) return false;
    x0 = to_ll(numerator(rx0));
    x1 = to_ll(numerator(rx1));
    d0 = to_ll(numerator(rd0));
    if (x0 < 1 || x1 < 1 || d0 < 1 || d0 > x1) return false;
    if (n - x0 - x1 < 1) return false;
    Rational rd1 = Rational(d0) * Rational(x0) / Rational(x1);
    if (denominator(rd1) != 1) return false;
    d1 = to_ll(numerator(rd1));
    return d1 >= 1;
}

} // namespace

SeparatorResult gen_ore_posa_separator(int k, long long n, const Rational& mu, bool snap) {
    Rational beta = Rational(5) * mu;
    long long x0 = 0, x1 = 0, d0 = 0, d1 = 0;
    long long use_n = -1;
    if (separator_feasible(k, n, beta, x0, x1, d0, d1)) use_n = n;
    else if (snap) {
        for (long long delta = 1; delta <= 1'000'000 && use_n < 0; ++delta) {
            if (separator_feasible(k, n + delta, beta, x0, x1, d0, d1)) use_n = n + delta;
            else if (n - delta > 0 && separator_feasible(k, n - delta, beta, x0, x1, d0, d1))
                use_n = n - delta;
        }
    }
    if (use_n < 0)
        throw InputError("no feasible n makes all separator cardinalities integral");

    std::vector<std::pair<int, int>> edges;
    auto clique_range = [&](long long lo, long long hi) {
        for (long long u = lo; u < hi; ++u)
            for (long long v = u + 1; v < hi; ++v)
                edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    };
    clique_range(0, x0);
    clique_range(x0, x0 + x1);
    clique_range(x0 + x1, use_n);  // X2 = the remaining use_n - x0 - x1 vertices
    for (long long u = x0 + x1; u < use_n; ++u)
        for (long long v = 0; v < x0 + x1; ++v)
            edges.emplace_back(static_cast<int>(v), static_cast<int>(u));
    // biregular bipartite between the first two classes via consecutive slots
    for (long long i = 0; i < x0; ++i)
        for (long long j = 0; j < d0; ++j) {
            long long slot = (i * d0 + j) % x1;
            edges.emplace_back(static_cast<int>(i), static_cast<int>(x0 + slot));
        }

    SeparatorResult out;
    out.graph = Graph::from_edges(static_cast<int>(use_n), edges);
    out.snapped_n = use_n;
    out.x0_size = x0;

    ConditionReport ore = ore_check(out.graph, k, mu);
    out.checks.emplace_back("ore-holds", ore.holds);

    // minimum degree sum over non-edges vs the paper's explicit line
    Rational min_sum;
    bool first = true;
    for (int u = 0; u < out.graph.vertex_count(); ++u)
        for (int v = u + 1; v < out.graph.vertex_count(); ++v) {
            if (out.graph.has_edge(u, v)) continue;
            Rational s = Rational(out.graph.degree(u) + out.graph.degree(v));
            if (first || s < min_sum) { min_sum = s; first = false; }
        }
    bool line_ok = first || min_sum >= Rational(2 * (k - 1) * use_n, k) - 2 + beta * Rational(use_n) / 4;
    out.checks.emplace_back("degree-sum-line", line_ok);

    // the plain Posa condition must fail first exactly at index |X0|
    std::vector<int> d = out.graph.degrees_sorted();
    long long first_fail = -1;
    for (long long i = 1; i <= use_n / k && first_fail < 0; ++i)
        if (Rational(d[static_cast<size_t>(i - 1)]) <
            Rational((k - 2) * use_n, k) + Rational(i))
            first_fail = i;
    out.checks.emplace_back("posa-fails-at-x0", first_fail == x0);
    return out;
}

namespace {

bool is_prime(long long q) {
    if (q < 2) return false;
    for (long long p = 2; p * p <= q; ++p)
        if (q % p == 0) return false;
    return true;
}

} // namespace

FragileFramework gen_fragile_framework(long long q, int m) {
    if (!is_prime(q)) throw InputError("q must be prime");
    if (m < 1) throw InputError("m must be positive");
    long long n = 4 * q;
    long long two_n = 2 * n;
    if (std::gcd(5LL, two_n) != 1)
        throw InputError("5 must be coprime to 2n (q = 5 is excluded)");

    // ids: path vertices 0..2n-1 (v_{i+1} -> i), apex 2n
    std::set<std::pair<int, int>> edge_set;
    auto add = [&](long long a, long long b) {
        if (a == b) return;
        edge_set.insert({static_cast<int>(std::min(a, b)), static_cast<int>(std::max(a, b))});
    };
    for (long long i = 0; i < n; ++i)
        for (long long j = i + 1; j < n && j - i <= 3; ++j) add(i, j);
    for (long long i = n; i < two_n; ++i)
        for (long long j = i + 1; j < two_n && j - i <= 3; ++j) add(i, j);
    // cube of a cycle along the stretched order sigma(i) = 5i mod 2n
    std::vector<long long> sigma(static_cast<size_t>(two_n));
    for (long long i = 1; i <= two_n; ++i)
        sigma[static_cast<size_t>(i - 1)] = (5 * i - 1) % two_n;  // 0-based vertex id
    for (long long i = 0; i < two_n; ++i)
        for (long long step = 1; step <= 3; ++step)
            add(sigma[static_cast<size_t>(i)], sigma[static_cast<size_t>((i + step) % two_n)]);
    long long apex = two_n;
    add(apex, 0);
    add(apex, 1);
    add(apex, n);
    add(apex, n + 1);

    std::vector<std::pair<int, int>> base_edges(edge_set.begin(), edge_set.end());
    Graph base = Graph::from_edges(static_cast<int>(two_n + 1), base_edges);

    FragileFramework out;
    out.base_vertices = base.vertex_count();
    if (m == 1) {
        out.graph = base;
    } else {
        std::vector<int> sizes(static_cast<size_t>(two_n + 1), m);
        sizes[static_cast<size_t>(apex)] = 1;
        out.graph = blow_up(base, sizes);
    }
    out.hypergraph = build_clique_hypergraph(out.graph, 3);

    out.checks.emplace_back("sigma-bijective", std::gcd(5LL, two_n) == 1);
    TightComponents comps = tight_components(out.hypergraph);
    out.checks.emplace_back("two-tight-components", comps.count == 2);
    if (out.graph.vertex_count() <= 20) {
        OracleVerdict verdict = find_power_ham_cycle(out.graph, 3, 50'000'000);
        out.checks.emplace_back("no-square-hamilton-cycle", !verdict.found && !verdict.timed_out);
    }
    return out;
}

Graph gen_random(int n, const Rational& p, uint64_t seed) {
    if (p < 0 || p > 1) throw InputError("p must be in [0,1]");
    Rng rng(seed);
    uint64_t num = static_cast<uint64_t>(to_ll(numerator(p)));
    uint64_t den = static_cast<uint64_t>(to_ll(denominator(p)));
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(num, den)) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph gen_multipartite_random(int r, int n, const Rational& p, uint64_t seed) {
    if (r < 2) throw InputError("need at least 2 parts");
    if (p < 0 || p > 1) throw InputError("p must be in [0,1]");
    Rng rng(seed);
    uint64_t num = static_cast<uint64_t>(to_ll(numerator(p)));
    uint64_t den = static_cast<uint64_t>(to_ll(denominator(p)));
    std::vector<std::pair<int, int>> edges;
    int total = r * n;
    auto part_of = [&](int v) { return v / n; };
    for (int u = 0; u < total; ++u)
        for (int v = u + 1; v < total; ++v)
            if (part_of(u) != part_of(v) && rng.bernoulli(num, den)) edges.emplace_back(u, v);
    Partition parts;
    for (int pi = 0; pi < r; ++pi) {
        std::vector<int> part;
        for (int v = pi * n; v < (pi + 1) * n; ++v) part.push_back(v);
        parts.push_back(part);
    }
    return Graph::from_edges(total, edges, parts);
}

} // namespace tightframe
