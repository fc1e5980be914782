#include "tightframe/allocation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "tightframe/errors.hpp"
#include "tightframe/oracle.hpp"
#include "tightframe/rng.hpp"

namespace tightframe {

PathPowerAllocation PathPowerAllocation::identity(int k, int q) {
    PathPowerAllocation pa;
    pa.k = k;
    pa.q = q;
    pa.position.resize(static_cast<size_t>(q));
    std::iota(pa.position.begin(), pa.position.end(), 1);
    pa.max_preimage = 1;
    return pa;
}

PathPowerAllocation allocate_to_path_power(const Graph& guest, const std::vector<int>& ordering,
                                           const std::vector<int>& colouring, const Rational& beta,
                                           int z, int k) {
    int n = guest.vertex_count();
    if (static_cast<int>(ordering.size()) != n || static_cast<int>(colouring.size()) != n)
        throw InputError("ordering and colouring must cover every vertex");
    std::vector<int> pos(static_cast<size_t>(n), -1);  // vertex -> 1-based position
    for (int i = 0; i < n; ++i) {
        int v = ordering[static_cast<size_t>(i)];
        if (v < 0 || v >= n || pos[static_cast<size_t>(v)] != -1)
            throw InputError("ordering is not a permutation");
        pos[static_cast<size_t>(v)] = i + 1;
    }
    Rational bw_budget = beta * Rational(n);
    for (auto [u, v] : guest.edges()) {
        long long gap = std::llabs(pos[static_cast<size_t>(u)] - pos[static_cast<size_t>(v)]);
        if (Rational(gap) > bw_budget)
            throw InputError("ordering bandwidth exceeds beta*n at edge " + std::to_string(u) + "," +
                             std::to_string(v));
        if (colouring[static_cast<size_t>(u)] == colouring[static_cast<size_t>(v)])
            throw InputError("colouring is not proper");
    }
    for (int v = 0; v < n; ++v)
        if (colouring[static_cast<size_t>(v)] < 0 || colouring[static_cast<size_t>(v)] > k)
            throw InputError("colour out of range");

    long long block = to_ll(ceil_rat(bw_budget));
    if (block < 1) block = 1;
    long long q = to_ll(ceil_rat(Rational(1) / beta)) + k - 1;
    auto block_of_pos = [&](long long p) { return (p - 1) / block + 1; };

    // zero-freeness: any two blocks using colour 0 must be >= z apart
    std::set<long long> zero_blocks;
    for (int v = 0; v < n; ++v)
        if (colouring[static_cast<size_t>(v)] == 0) zero_blocks.insert(block_of_pos(pos[static_cast<size_t>(v)]));
    {
        long long prev = -1;
        for (long long bidx : zero_blocks) {
            if (prev > 0 && bidx - prev < z)
                throw InputError("colouring is not (z,beta)-zero-free");
            prev = bidx;
        }
    }

    PathPowerAllocation pa;
    pa.k = k;
    pa.q = static_cast<int>(q);
    pa.position.assign(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        int j = colouring[static_cast<size_t>(v)];
        if (j == 0) continue;
        long long i = block_of_pos(pos[static_cast<size_t>(v)]);
        long long target = k * ((i - j + k - 1) / k) + j;
        pa.position[static_cast<size_t>(v)] = static_cast<int>(target);
    }
    for (long long bidx : zero_blocks) pa.zero_indices.push_back(static_cast<int>(bidx));

    // re-verify the construction: congruences, multiplicities, homomorphism
    std::map<int, long long> preimage;
    for (int v = 0; v < n; ++v) {
        int p = pa.position[static_cast<size_t>(v)];
        if (p == 0) continue;
        if (p < 1 || p > q) throw std::logic_error("path-power position out of range");
        if ((p - colouring[static_cast<size_t>(v)]) % k != 0)
            throw std::logic_error("colour class congruence violated");
        ++preimage[p];
    }
    pa.max_preimage = 0;
    for (const auto& [p, cnt] : preimage) pa.max_preimage = std::max(pa.max_preimage, cnt);
    if (Rational(pa.max_preimage) > Rational(static_cast<long long>(k)) * Rational(block))
        throw std::logic_error("path-power multiplicity bound violated");
    for (auto [u, v] : guest.edges()) {
        int pu = pa.position[static_cast<size_t>(u)], pv = pa.position[static_cast<size_t>(v)];
        if (pu == 0 || pv == 0) continue;  // the extra vertex dominates the path
        int gap = std::abs(pu - pv);
        if (gap < 1 || gap > k - 1) throw std::logic_error("path-power map is not a homomorphism");
    }
    for (int v = 0; v < n; ++v) {
        if (colouring[static_cast<size_t>(v)] != 0) continue;
        for (int u : guest.neighbors(v)) {
            int p = pa.position[static_cast<size_t>(u)];
            bool near = false;
            for (long long bidx : zero_blocks)
                if (p >= bidx - 1 && p <= bidx + k) near = true;
            if (!near) throw std::logic_error("zero neighbourhood escaped its window");
        }
    }
    return pa;
}

namespace {

struct MarkovState {
    long long a;  // 0-based cluster index
    int b;        // loop coordinate, 1..k-1
};

} // namespace

MarkovAllocation markov_allocate(const PathPowerAllocation& pa, const Graph* guest,
                                 const MarkovParams& params) {
    int k = params.k, r = params.r, t = params.t;
    if (k < 2 || t < 1) throw InputError("need k >= 2 and t >= 1");
    if (std::gcd(static_cast<long long>(t), static_cast<long long>(k)) != 1)
        throw InputError("t and k must be coprime");
    long long rt = static_cast<long long>(r) * t;
    int q = pa.q;
    long long n_total = guest ? guest->vertex_count() : q;
    for (int v = 0; v < static_cast<int>(pa.position.size()); ++v)
        if (pa.position[static_cast<size_t>(v)] == 0)
            throw InputError("zero-class vertices must be split off before the walk allocation");
    if (r == k) {
        // per colour class the path map must be exactly n-to-one in total
        std::vector<long long> class_count(static_cast<size_t>(k), 0);
        for (int p : pa.position) ++class_count[static_cast<size_t>(p % k)];
        long long expect = n_total / r;
        for (int j = 0; j < k; ++j)
            if (class_count[static_cast<size_t>(j)] != expect)
                throw InputError("colour classes are not equitable for the partite walk");
    }

    // per-position multiplicities
    std::vector<long long> mult(static_cast<size_t>(q) + 1, 0);
    if (guest) {
        for (int v = 0; v < guest->vertex_count(); ++v) ++mult[static_cast<size_t>(pa.position[static_cast<size_t>(v)])];
    } else {
        for (int p = 1; p <= q; ++p) mult[static_cast<size_t>(p)] = 1;
    }

    Rational target = Rational(n_total, static_cast<long long>(r) * t);  // n/t
    Rational lo = (Rational(1) - params.xi) * target;
    Rational hi = (Rational(1) + params.xi) * target;

    MarkovAllocation best;
    int attempts = std::max(1, params.retries);
    for (int attempt = 0; attempt < attempts; ++attempt) {
        Rng rng(trial_seed(params.seed, static_cast<uint64_t>(attempt)));
        std::vector<int> cluster_of_pos(static_cast<size_t>(q) + 1, -1);
        MarkovState x{};
        if (k == 2) {
            x = {static_cast<long long>(rng.below(static_cast<uint64_t>(rt))), 1};
        } else {
            uint64_t u = rng.below(static_cast<uint64_t>(k) * static_cast<uint64_t>(rt));
            if (u < 2 * static_cast<uint64_t>(rt)) x = {static_cast<long long>(u / 2), 1};
            else {
                uint64_t v = u - 2 * static_cast<uint64_t>(rt);
                x = {static_cast<long long>(v / static_cast<uint64_t>(k - 2)),
                     2 + static_cast<int>(v % static_cast<uint64_t>(k - 2))};
            }
        }
        for (int s = 1; s <= q; ++s) {
            long long c = x.b == 1 ? x.a : ((x.a - k + x.b - 1) % rt + rt) % rt;
            cluster_of_pos[static_cast<size_t>(s)] = static_cast<int>(c);
            if (k == 2) {
                x.a = ((x.a + (rng.coin() ? 1 : -1)) % rt + rt) % rt;
            } else if (x.b == 1) {
                if (rng.coin()) x.a = (x.a + 1) % rt;
                else x.b = 2;
            } else if (x.b < k - 1) {
                ++x.b;
            } else {
                x.a = ((x.a - 1) % rt + rt) % rt;
                x.b = 1;
            }
        }
        // the walk must itself be a path-power homomorphism into the cycle
        for (int p = 1; p + 1 <= q; ++p)
            for (int d = 1; d < k && p + d <= q; ++d) {
                long long diff = cluster_of_pos[static_cast<size_t>(p)] - cluster_of_pos[static_cast<size_t>(p + d)];
                long long cyc = ((diff % rt) + rt) % rt;
                cyc = std::min(cyc, rt - cyc);
                if (cyc == 0 || cyc > k - 1)
                    throw std::logic_error("walk allocation is not a homomorphism");
            }

        MarkovAllocation out;
        out.loads.assign(static_cast<size_t>(rt), 0);
        if (guest) {
            out.cluster_of.resize(static_cast<size_t>(guest->vertex_count()));
            for (int v = 0; v < guest->vertex_count(); ++v) {
                int c = cluster_of_pos[static_cast<size_t>(pa.position[static_cast<size_t>(v)])];
                out.cluster_of[static_cast<size_t>(v)] = c;
                ++out.loads[static_cast<size_t>(c)];
            }
            // independent edge scan over the guest
            for (auto [u, v] : guest->edges()) {
                if (pa.position[static_cast<size_t>(u)] == 0 || pa.position[static_cast<size_t>(v)] == 0) continue;
                long long diff = out.cluster_of[static_cast<size_t>(u)] - out.cluster_of[static_cast<size_t>(v)];
                long long cyc = ((diff % rt) + rt) % rt;
                cyc = std::min(cyc, rt - cyc);
                if (cyc == 0 || cyc > k - 1)
                    throw std::logic_error("composed allocation is not a homomorphism");
            }
        } else {
            out.cluster_of.resize(static_cast<size_t>(q));
            for (int p = 1; p <= q; ++p) {
                int c = cluster_of_pos[static_cast<size_t>(p)];
                out.cluster_of[static_cast<size_t>(p - 1)] = c;
                out.loads[static_cast<size_t>(c)] += mult[static_cast<size_t>(p)];
            }
        }
        out.resamples = attempt;
        out.within_bounds = true;
        for (long long load : out.loads)
            if (Rational(load) < lo || Rational(load) > hi) { out.within_bounds = false; break; }
        best = out;
        if (out.within_bounds) return out;
    }
    return best;
}

namespace {

using RatVec = std::map<std::pair<long long, int>, Rational>;

// transition matrix of the loop-around walk as a sparse map
std::map<std::pair<long long, int>, std::vector<std::pair<std::pair<long long, int>, Rational>>>
walk_transitions(int k, long long rt) {
    std::map<std::pair<long long, int>, std::vector<std::pair<std::pair<long long, int>, Rational>>> p;
    for (long long a = 0; a < rt; ++a) {
        if (k == 2) {
            p[{a, 1}].push_back({{(a + 1) % rt, 1}, Rational(1, 2)});
            p[{a, 1}].push_back({{(a - 1 + rt) % rt, 1}, Rational(1, 2)});
            continue;
        }
        p[{a, 1}].push_back({{(a + 1) % rt, 1}, Rational(1, 2)});
        p[{a, 1}].push_back({{a, 2}, Rational(1, 2)});
        for (int b = 2; b <= k - 2; ++b) p[{a, b}].push_back({{a, b + 1}, Rational(1)});
        if (k >= 3) p[{a, k - 1}].push_back({{(a - 1 + rt) % rt, 1}, Rational(1)});
    }
    return p;
}

} // namespace

bool markov_stationary_exact(int k, int r, int t) {
    long long rt = static_cast<long long>(r) * t;
    auto trans = walk_transitions(k, rt);
    RatVec pi;
    for (long long a = 0; a < rt; ++a) {
        if (k == 2) pi[{a, 1}] = Rational(1, rt);
        else {
            pi[{a, 1}] = Rational(2, static_cast<long long>(k) * rt);
            for (int b = 2; b <= k - 1; ++b) pi[{a, b}] = Rational(1, static_cast<long long>(k) * rt);
        }
    }
    Rational total = 0;
    for (const auto& [s, v] : pi) total += v;
    if (total != 1) return false;
    RatVec next;
    for (const auto& [s, v] : pi)
        for (const auto& [toward, prob] : trans[s]) next[toward] += v * prob;
    return next == pi;
}

bool markov_kstep_stationary_exact(int k, int t) {
    long long rt = static_cast<long long>(k) * t;  // r = k
    auto trans = walk_transitions(k, rt);
    // class of a state: (a + b - 1) mod k with 1-based a as in the definition
    auto class_of = [&](const std::pair<long long, int>& s) {
        return static_cast<int>(((s.first + 1) + s.second - 1) % k);
    };
    // k-step distribution of each class: support must stay in a single class
    // and the restricted stationary values must be preserved
    std::vector<std::pair<long long, int>> states;
    for (long long a = 0; a < rt; ++a)
        for (int b = 1; b <= std::max(1, k - 1); ++b) {
            if (k == 2 && b > 1) break;
            states.push_back({a, b});
        }
    for (int j = 0; j < k; ++j) {
        RatVec pij;
        Rational total = 0;
        for (const auto& s : states) {
            if (class_of(s) != j) continue;
            Rational v = s.second == 1 ? Rational(2, static_cast<long long>(k) * t)
                                       : Rational(1, static_cast<long long>(k) * t);
            pij[s] = v;
            total += v;
        }
        if (total != 1) return false;
        RatVec cur = pij;
        for (int step = 0; step < k; ++step) {
            RatVec next;
            for (const auto& [s, v] : cur)
                for (const auto& [toward, prob] : trans[s]) next[toward] += v * prob;
            cur = std::move(next);
        }
        for (const auto& [s, v] : cur) {
            if (v == 0) continue;
            if (class_of(s) != j) return false;  // class support must be preserved
        }
        if (cur != pij) return false;
    }
    return true;
}

BalancingVector solve_balancing_vector(const KGraph& j, const KGraph& cover,
                                       const std::vector<long long>& b,
                                       const std::map<std::vector<int>, Rational>& w1,
                                       const Rational& pi, const Rational& alpha) {
    int k = j.k();
    int t_total = j.vertex_count();
    if (static_cast<int>(b.size()) != t_total) throw InputError("b must have one entry per vertex");
    for (const auto& e : cover.edges())
        if (!j.has_edge(e)) throw InputError("cover edge missing from the hypergraph");
    for (const auto& [e, w] : w1) {
        if (!j.has_edge(e)) throw InputError("walk vector uses a non-edge");
        if (w < 0) throw InputError("walk vector must be nonnegative");
    }

    int parts = 1;
    if (j.partition() && j.partition()->size() >= 2) parts = static_cast<int>(j.partition()->size());
    long long sum_b = 0;
    for (long long x : b) sum_b += x;
    Rational n_part = Rational(sum_b, parts);
    long long m = *std::min_element(b.begin(), b.end());

    // visits = incidence * w1, required integral
    std::vector<Rational> visits(static_cast<size_t>(t_total), Rational(0));
    for (const auto& [e, w] : w1)
        for (int v : e) visits[static_cast<size_t>(v)] += w;
    std::vector<long long> visit_i(static_cast<size_t>(t_total));
    for (int v = 0; v < t_total; ++v) {
        if (denominator(visits[static_cast<size_t>(v)]) != 1)
            throw InputError("walk vector does not produce integral visits");
        visit_i[static_cast<size_t>(v)] = to_ll(numerator(visits[static_cast<size_t>(v)]));
        if (visit_i[static_cast<size_t>(v)] > b[static_cast<size_t>(v)])
            throw PreconditionError("walk visits exceed cluster size at " + std::to_string(v));
    }

    BalancingVector out;
    long long floor2 = to_ll(ceil_rat(Rational(3) * alpha * Rational(m)));
    long long floor3 = to_ll(ceil_rat(Rational(5) * pi * n_part));
    for (const auto& e : cover.edges()) out.w2[e] = floor2;
    for (const auto& e : j.edges()) out.w3[e] = floor3;

    auto add_loads = [&](const std::map<std::vector<int>, long long>& w,
                         std::vector<long long>& into) {
        for (const auto& [e, val] : w)
            for (int v : e) into[static_cast<size_t>(v)] += val;
    };
    std::vector<long long> consumed(static_cast<size_t>(t_total), 0);
    for (int v = 0; v < t_total; ++v) consumed[static_cast<size_t>(v)] = visit_i[static_cast<size_t>(v)];
    add_loads(out.w2, consumed);
    add_loads(out.w3, consumed);
    std::vector<long long> c1(static_cast<size_t>(t_total));
    for (int v = 0; v < t_total; ++v) {
        c1[static_cast<size_t>(v)] = b[static_cast<size_t>(v)] - consumed[static_cast<size_t>(v)];
        if (c1[static_cast<size_t>(v)] < 0)
            throw PreconditionError("floors exceed capacity at cluster " + std::to_string(v) +
                                    "; lower pi or alpha");
    }

    // w4: floored perfect-matching multiples on the residual sizes
    PerfectMatchingWitness pm = has_perfect_fractional_matching(j);
    if (!pm.perfect) throw PreconditionError("reduced hypergraph has no perfect fractional matching");
    long long residual_min = *std::min_element(c1.begin(), c1.end());
    if (residual_min > 0)
        for (const auto& [e, w] : pm.matching.weights) {
            long long copies = to_ll(floor_rat(Rational(residual_min) * w));
            if (copies > 0) out.w4[e] = copies;
        }
    std::vector<long long> c(static_cast<size_t>(t_total));
    for (int v = 0; v < t_total; ++v) c[static_cast<size_t>(v)] = c1[static_cast<size_t>(v)];
    {
        std::vector<long long> w4_load(static_cast<size_t>(t_total), 0);
        add_loads(out.w4, w4_load);
        for (int v = 0; v < t_total; ++v) {
            c[static_cast<size_t>(v)] -= w4_load[static_cast<size_t>(v)];
            if (c[static_cast<size_t>(v)] < 0) throw std::logic_error("matching step overshot");
        }
    }

    // w5: concentrate the divisible surplus on one edge, then flow-correct
    long long sum_c = 0;
    for (long long x : c) sum_c += x;
    if (sum_c % k != 0)
        throw PreconditionError("residual is not divisible by k; the sketch walk congruence is off");
    if (parts > 1) {
        long long first = -1;
        for (const auto& part : *j.partition()) {
            long long s = 0;
            for (int v : part) s += c[static_cast<size_t>(v)];
            if (first < 0) first = s;
            else if (s != first) throw PreconditionError("per-part residuals differ");
        }
    }
    std::vector<int> e0 = j.edge(0);
    long long concentrated = sum_c / k;
    if (concentrated != 0) out.w5[e0] += concentrated;
    std::vector<long long> cprime(static_cast<size_t>(t_total));
    for (int v = 0; v < t_total; ++v) cprime[static_cast<size_t>(v)] = c[static_cast<size_t>(v)];
    for (int v : e0) cprime[static_cast<size_t>(v)] -= concentrated;
    long long s_bound = 0;
    for (long long x : cprime) s_bound = std::max(s_bound, x < 0 ? -x : x);
    if (s_bound > 0) {
        AllocationVector fw = integer_flow_allocate(j, cprime, s_bound);
        for (const auto& [e, val] : fw.values) out.w5[e] += val;
    }

    // assemble and verify the exact identity
    std::map<std::vector<int>, long long> w;
    for (const auto& [e, v] : out.w2) w[e] += v;
    for (const auto& [e, v] : out.w3) w[e] += v;
    for (const auto& [e, v] : out.w4) w[e] += v;
    for (const auto& [e, v] : out.w5) w[e] += v;
    for (const auto& [e, v] : w)
        if (v < 0)
            throw PreconditionError("flow correction drove an edge negative; raise pi");
    std::vector<Rational> final_load(static_cast<size_t>(t_total), Rational(0));
    for (int v = 0; v < t_total; ++v) final_load[static_cast<size_t>(v)] = visits[static_cast<size_t>(v)];
    for (const auto& [e, val] : w)
        for (int v : e) final_load[static_cast<size_t>(v)] += Rational(val);
    for (int v = 0; v < t_total; ++v)
        if (final_load[static_cast<size_t>(v)] != Rational(b[static_cast<size_t>(v)]))
            throw std::logic_error("balancing identity failed at cluster " + std::to_string(v));

    out.w = std::move(w);
    out.floors_met = true;
    Rational lower_all = Rational(4) * pi * n_part;
    Rational lower_cover = Rational(3) * alpha * Rational(m);
    for (const auto& e : j.edges()) {
        auto it = out.w.find(e);
        Rational val = it == out.w.end() ? Rational(0) : Rational(it->second);
        if (val < lower_all) out.floors_met = false;
        if (cover.has_edge(e) && val < lower_cover) out.floors_met = false;
    }
    return out;
}

ClusterCycle blowup_hamilton_cycle(const KGraph& j, const KGraph& cover,
                                   const std::vector<long long>& sizes, const Rational& pi,
                                   const Rational& alpha) {
    int k = j.k();
    long long total = 0;
    for (long long s : sizes) total += s;
    bool partite = j.partition() && j.partition()->size() >= 2;
    WalkCertificate sketch;
    if (partite) {
        if (total % k != 0)
            throw PreconditionError("partite blow-ups need total size divisible by k");
        sketch = closed_walk_all_edges(j, std::nullopt);
        if (sketch.length % k != 0) throw std::logic_error("partite walk length not divisible by k");
    } else {
        sketch = closed_walk_all_edges(j, static_cast<int>(total % k));
    }
    long long L = sketch.length;

    // rotate until every edge has a non-wrapping first window
    std::vector<int> seq = sketch.sequence;
    auto first_windows = [&](const std::vector<int>& s)
        -> std::optional<std::map<std::vector<int>, long long>> {
        std::map<std::vector<int>, long long> firsts;  // edge -> window start
        for (long long p = 0; p + k <= static_cast<long long>(s.size()); ++p) {
            std::vector<int> key(s.begin() + p, s.begin() + p + k);
            std::sort(key.begin(), key.end());
            if (!firsts.count(key)) firsts[key] = p;
        }
        if (static_cast<int>(firsts.size()) == j.edge_count()) return firsts;
        return std::nullopt;
    };
    std::optional<std::map<std::vector<int>, long long>> firsts;
    for (long long rot = 0; rot < L; rot += std::max(1, k - 1)) {
        firsts = first_windows(seq);
        if (firsts) break;
        std::rotate(seq.begin(), seq.begin() + std::max(1, k - 1), seq.end());
    }
    if (!firsts) throw std::logic_error("no rotation exposes every edge window");

    std::map<std::vector<int>, Rational> w1;
    {
        std::map<std::vector<int>, long long> window_count;
        for (long long p = 0; p < L; ++p) {
            std::vector<int> key;
            for (int i = 0; i < k; ++i) key.push_back(seq[static_cast<size_t>((p + i) % L)]);
            std::sort(key.begin(), key.end());
            ++window_count[key];
        }
        for (const auto& [e, cnt] : window_count) w1[e] = Rational(cnt, k);
    }

    BalancingVector bv = solve_balancing_vector(j, cover, sizes, w1, pi, alpha);

    // inflate each first window by its weight, tracking runs
    std::map<long long, std::vector<int>> insert_after;  // window end position -> block
    std::map<long long, std::pair<std::vector<int>, long long>> run_at;  // start -> (edge, copies)
    for (const auto& [e, start] : *firsts) {
        auto it = bv.w.find(e);
        long long copies = it == bv.w.end() ? 0 : it->second;
        run_at[start] = {e, copies};
        if (copies == 0) continue;
        std::vector<int> window(seq.begin() + start, seq.begin() + start + k);
        std::vector<int> block;
        for (long long cpy = 0; cpy < copies; ++cpy)
            block.insert(block.end(), window.begin(), window.end());
        insert_after[start + k - 1] = std::move(block);
    }

    ClusterCycle out;
    std::vector<long long> final_pos(static_cast<size_t>(L));
    for (long long p = 0; p < L; ++p) {
        final_pos[static_cast<size_t>(p)] = static_cast<long long>(out.cluster_sequence.size());
        out.cluster_sequence.push_back(seq[static_cast<size_t>(p)]);
        auto it = insert_after.find(p);
        if (it != insert_after.end())
            out.cluster_sequence.insert(out.cluster_sequence.end(), it->second.begin(), it->second.end());
    }
    for (const auto& [e, val] : bv.w) out.inflations[e] = val;

    // verification: counts match the sizes and every window is an edge
    std::vector<long long> counts(sizes.size(), 0);
    for (int c : out.cluster_sequence) ++counts[static_cast<size_t>(c)];
    for (size_t i = 0; i < sizes.size(); ++i)
        if (counts[i] != sizes[i])
            throw std::logic_error("cluster usage mismatch at " + std::to_string(i));
    long long n_final = static_cast<long long>(out.cluster_sequence.size());
    for (long long p = 0; p < n_final; ++p) {
        std::vector<int> key;
        for (int i = 0; i < k; ++i)
            key.push_back(out.cluster_sequence[static_cast<size_t>((p + i) % n_final)]);
        std::sort(key.begin(), key.end());
        bool distinct = true;
        for (int i = 1; i < k; ++i)
            if (key[static_cast<size_t>(i)] == key[static_cast<size_t>(i - 1)]) distinct = false;
        if (!distinct || !j.has_edge(key))
            throw std::logic_error("blow-up cycle window invalid at " + std::to_string(p));
    }
    return out;
}

CorrectingCycle imbalance_correcting_cycle(const Graph& r_graph, const KGraph& j,
                                           const std::vector<int>& jprime_order,
                                           const std::vector<long long>& sizes, const Rational& xi,
                                           const Rational& pi, const Rational& alpha) {
    int k = j.k();
    int rt = j.vertex_count();
    if (r_graph.vertex_count() != rt) throw InputError("reduced graph and hypergraph sizes differ");
    if (static_cast<int>(jprime_order.size()) != rt)
        throw InputError("the tight cycle must order every cluster");
    if (static_cast<int>(sizes.size()) != rt) throw InputError("one size per cluster required");

    // cover = edges of the tight Hamilton cycle, in cyclic order
    std::vector<std::vector<int>> cover_edges;
    for (int p = 0; p < rt; ++p) {
        std::vector<int> e;
        for (int i = 0; i < k; ++i) e.push_back(jprime_order[static_cast<size_t>((p + i) % rt)]);
        std::sort(e.begin(), e.end());
        if (!j.has_edge(e)) throw InputError("tight cycle window is not an edge");
        cover_edges.push_back(e);
    }
    KGraph cover = KGraph::from_edges(k, rt, cover_edges, j.partition());

    int parts = 1;
    if (j.partition() && j.partition()->size() >= 2) parts = static_cast<int>(j.partition()->size());
    int t = rt / parts;
    long long sum_sizes = 0;
    for (long long s : sizes) sum_sizes += s;
    Rational n_part = Rational(sum_sizes, parts);

    CorrectingCycle out;
    // largest ell <= 2 r t^2 / xi coprime to k
    Rational bound = Rational(2) * Rational(parts) * Rational(t) * Rational(t) / xi;
    long long cap = to_ll(floor_rat(bound));
    if (cap < k) throw PreconditionError("no coprime cycle length in range; lower xi");
    long long ell = -1;
    for (long long cand = cap; cand >= 1; --cand)
        if (std::gcd(cand, static_cast<long long>(k)) == 1) { ell = cand; break; }
    if (ell < 0) throw PreconditionError("no coprime cycle length in range");
    out.ell = ell;

    // class-wise largest-remainder rounding of ell * sizes_i / n
    out.ell_i.assign(static_cast<size_t>(rt), 0);
    std::vector<std::vector<int>> classes;
    if (parts == 1) {
        std::vector<int> all(static_cast<size_t>(rt));
        std::iota(all.begin(), all.end(), 0);
        classes.push_back(all);
    } else {
        for (const auto& part : *j.partition()) classes.push_back(part);
    }
    for (const auto& cls : classes) {
        long long assigned = 0;
        std::vector<std::pair<Rational, int>> remainders;
        for (int i : cls) {
            Rational exact = Rational(ell) * Rational(sizes[static_cast<size_t>(i)]) / n_part;
            long long fl = to_ll(floor_rat(exact));
            out.ell_i[static_cast<size_t>(i)] = fl;
            assigned += fl;
            remainders.push_back({exact - Rational(fl), i});
        }
        std::sort(remainders.begin(), remainders.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first > b.first;
            return a.second < b.second;
        });
        long long deficit = ell - assigned;
        for (long long d = 0; d < deficit; ++d)
            ++out.ell_i[static_cast<size_t>(remainders[static_cast<size_t>(d)].second)];
    }

    ClusterCycle cyc = blowup_hamilton_cycle(j, cover, out.ell_i, pi, alpha);
    out.phi = cyc.cluster_sequence;
    long long n_cycle = static_cast<long long>(out.phi.size());

    // (J1): |phi^{-1}(i)| / ell = sizes_i / n +- xi
    out.j1_ok = true;
    for (int i = 0; i < rt; ++i) {
        Rational lhs = Rational(out.ell_i[static_cast<size_t>(i)], ell);
        Rational rhs = Rational(sizes[static_cast<size_t>(i)]) / n_part;
        Rational diff = lhs - rhs;
        if (diff < 0) diff = -diff;
        if (diff > xi) out.j1_ok = false;
    }

    // locate the run of each cover edge in the final sequence: scan windows
    std::map<std::vector<int>, std::pair<long long, long long>> runs;  // edge -> (start, len)
    {
        // a run is a maximal stretch of windows whose sets all equal one edge
        long long p = 0;
        while (p < n_cycle) {
            std::vector<int> key;
            for (int i = 0; i < k; ++i) key.push_back(out.phi[static_cast<size_t>((p + i) % n_cycle)]);
            std::sort(key.begin(), key.end());
            long long len = static_cast<long long>(k);
            while (len < n_cycle) {
                std::vector<int> next;
                for (int i = 0; i < k; ++i)
                    next.push_back(out.phi[static_cast<size_t>((p + len - k + 1 + i) % n_cycle)]);
                std::sort(next.begin(), next.end());
                if (next != key) break;
                ++len;
            }
            auto it = runs.find(key);
            if (it == runs.end() || it->second.second < len) runs[key] = {p, len};
            p += len - k + 1;
            if (len >= n_cycle) break;
        }
    }

    // buffers from the run of the window starting at i; forwards from the run of
    // the window ending at i
    std::vector<int> pos_in_order(static_cast<size_t>(rt));
    for (int p = 0; p < rt; ++p) pos_in_order[static_cast<size_t>(jprime_order[static_cast<size_t>(p)])] = p;
    out.buffers.assign(static_cast<size_t>(rt), {});
    out.forwards.assign(static_cast<size_t>(rt), {});
    auto edge_of_window_start = [&](int p) {
        std::vector<int> e;
        for (int i = 0; i < k; ++i) e.push_back(jprime_order[static_cast<size_t>((p + i) % rt)]);
        std::sort(e.begin(), e.end());
        return e;
    };
    for (int i = 0; i < rt; ++i) {
        int p = pos_in_order[static_cast<size_t>(i)];
        std::vector<int> buffer_edge = edge_of_window_start(p);
        std::vector<int> forward_edge = edge_of_window_start(((p - k + 1) % rt + rt) % rt);
        auto bit = runs.find(buffer_edge);
        if (bit != runs.end()) {
            auto [start, len] = bit->second;
            for (long long off = 2 * k - 2; off < len - (2 * k - 2); ++off) {
                long long idx = (start + off) % n_cycle;
                if (out.phi[static_cast<size_t>(idx)] == i)
                    out.buffers[static_cast<size_t>(i)].push_back(static_cast<int>(idx));
            }
        }
        auto fit = runs.find(forward_edge);
        if (fit != runs.end()) {
            auto [start, len] = fit->second;
            for (long long off = k; off < len - k; ++off) {
                long long idx = (start + off) % n_cycle;
                if (out.phi[static_cast<size_t>(idx)] == i)
                    out.forwards[static_cast<size_t>(i)].push_back(static_cast<int>(idx));
            }
        }
        // keep the two sets disjoint (buffer gives way)
        std::set<int> fw(out.forwards[static_cast<size_t>(i)].begin(), out.forwards[static_cast<size_t>(i)].end());
        std::vector<int> kept;
        for (int x : out.buffers[static_cast<size_t>(i)])
            if (!fw.count(x)) kept.push_back(x);
        out.buffers[static_cast<size_t>(i)] = std::move(kept);
    }

    // verify (J2) and (J3) literally, plus the size floors
    KGraph rprime = shadow(cover, 2);
    auto cyc_neighbors = [&](long long x) {
        std::vector<long long> nb;
        for (int d = 1; d < k; ++d) {
            nb.push_back((x + d) % n_cycle);
            nb.push_back(((x - d) % n_cycle + n_cycle) % n_cycle);
        }
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        return nb;
    };
    out.j2_ok = true;
    out.j3_ok = true;
    for (int i = 0; i < rt; ++i) {
        Rational min_buffer = alpha * Rational(out.ell_i[static_cast<size_t>(i)]);
        Rational min_forward = pi * Rational(out.ell_i[static_cast<size_t>(i)]);
        if (Rational(static_cast<long long>(out.buffers[static_cast<size_t>(i)].size())) < min_buffer)
            out.j2_ok = false;
        if (Rational(static_cast<long long>(out.forwards[static_cast<size_t>(i)].size())) < min_forward)
            out.j3_ok = false;
        for (int x : out.buffers[static_cast<size_t>(i)])
            for (long long y : cyc_neighbors(x))
                for (long long z : cyc_neighbors(y)) {
                    if (z == x) continue;
                    int cy = out.phi[static_cast<size_t>(y)], cz = out.phi[static_cast<size_t>(z)];
                    if (cz != i && !rprime.has_edge({std::min(i, cz), std::max(i, cz)})) out.j2_ok = false;
                    if (cy != cz && !rprime.has_edge({std::min(cy, cz), std::max(cy, cz)})) out.j2_ok = false;
                }
        // forward neighbours must map into the k-1 predecessors of i on the cycle
        std::set<int> preds;
        int p = pos_in_order[static_cast<size_t>(i)];
        for (int d = 1; d < k; ++d)
            preds.insert(jprime_order[static_cast<size_t>(((p - d) % rt + rt) % rt)]);
        for (int x : out.forwards[static_cast<size_t>(i)])
            for (long long y : cyc_neighbors(x))
                if (!preds.count(out.phi[static_cast<size_t>(y)])) out.j3_ok = false;
    }
    return out;
}

ZeroBlockSplit split_zero_blocks(const PathPowerAllocation& pa, int t, int k, int z,
                                 const KGraph* j, const std::vector<int>* clique) {
    ZeroBlockSplit out;
    long long tk = 1;
    for (int i = 0; i < k; ++i) {
        tk *= t;
        if (tk > 1'000'000) throw GuardError("t^k exceeds the explicit-walk guard");
    }
    out.omega = static_cast<long long>(k) * tk;
    if (z <= 2 * out.omega - k + 4)
        throw PreconditionError("zero-block spacing must exceed 2*omega - k + 4");

    const auto& zeros = pa.zero_indices;
    for (size_t a = 1; a < zeros.size(); ++a)
        if (zeros[a] - zeros[a - 1] < z) throw PreconditionError("zero blocks closer than z");

    std::vector<std::pair<long long, long long>> keep;  // run intervals [a+k, d-k]
    for (int ij : zeros) {
        ZeroBlockSplit::Run run;
        run.a = ij - 2 - out.omega + k;
        run.b = ij + k - 3;
        run.c = ij + 2;
        run.d = ij + 1 + out.omega;
        out.runs.push_back(run);
        keep.push_back({run.a + k, run.d - k});
    }
    for (size_t a = 1; a < keep.size(); ++a)
        if (keep[a].first <= keep[a - 1].second)
            throw std::logic_error("run intervals overlap despite the spacing guard");

    for (int v = 0; v < static_cast<int>(pa.position.size()); ++v) {
        int p = pa.position[static_cast<size_t>(v)];
        if (p == 0) {
            out.zero_vertices.push_back(v);
            continue;
        }
        bool in_run = false;
        for (size_t ri = 0; ri < keep.size(); ++ri)
            if (p >= keep[ri].first && p <= keep[ri].second) {
                out.runs[ri].vertices.push_back(v);
                in_run = true;
                break;
            }
        if (!in_run) out.main_vertices.push_back(v);
    }

    if (j && clique && !zeros.empty()) {
        // connecting walks through the clique, one inbound and one outbound
        std::vector<int> anchor = j->edge(0);
        std::vector<int> e2(clique->begin(), clique->begin() + k);
        std::vector<int> e3 = e2;
        std::rotate(e3.begin(), e3.begin() + (k >= 3 ? 2 : 1), e3.end());
        for (size_t ri = 0; ri < out.runs.size(); ++ri) {
            WalkCertificate w1 = walk_between(*j, anchor, e2, *clique);
            WalkCertificate w2 = walk_between(*j, anchor, e3, *clique);
            std::reverse(w2.sequence.begin(), w2.sequence.end());
            out.routing_walks.push_back(w1);
            out.routing_walks.push_back(w2);
        }
    }
    return out;
}

Embedding embed_on_blowup(const Graph& r_graph, const KGraph& j, const KGraph& cover,
                          const std::vector<long long>& sizes, int k, const EmbedRequest& request) {
    int rt = j.vertex_count();
    if (r_graph.vertex_count() != rt || static_cast<int>(sizes.size()) != rt)
        throw InputError("reduced graph, hypergraph and sizes must agree");
    long long total = 0;
    for (long long s : sizes) total += s;
    std::vector<int> int_sizes;
    for (long long s : sizes) int_sizes.push_back(static_cast<int>(s));
    Graph host = blow_up(r_graph, int_sizes);
    std::vector<long long> offsets(sizes.size() + 1, 0);
    for (size_t i = 0; i < sizes.size(); ++i) offsets[i + 1] = offsets[i] + sizes[i];

    Embedding emb;
    if (request.kind == GuestKind::CyclePower) {
        // ladder of floor parameters; the first feasible solve wins
        std::vector<std::pair<Rational, Rational>> ladder = {
            {Rational(1, 5 * total), Rational(1, 5 * std::max<long long>(1, *std::min_element(sizes.begin(), sizes.end())) )},
            {Rational(1, 10 * total), Rational(0)},
            {Rational(1, 20 * total), Rational(0)},
            {Rational(0), Rational(0)}};
        std::optional<ClusterCycle> cyc;
        std::string last_error;
        for (const auto& [pi, alpha] : ladder) {
            try {
                cyc = blowup_hamilton_cycle(j, cover, sizes, pi, alpha);
                break;
            } catch (const std::exception& e) {
                last_error = e.what();
            }
        }
        if (!cyc) throw PreconditionError("allocation infeasible: " + last_error);
        std::vector<long long> used(sizes.size(), 0);
        emb.vertex_map.resize(static_cast<size_t>(total));
        for (long long p = 0; p < total; ++p) {
            int c = cyc->cluster_sequence[static_cast<size_t>(p)];
            emb.vertex_map[static_cast<size_t>(p)] =
                static_cast<int>(offsets[static_cast<size_t>(c)] + used[static_cast<size_t>(c)]);
            ++used[static_cast<size_t>(c)];
        }
        emb.verified = verify_power_ham_cycle(host, emb.vertex_map, k);
        emb.detail = emb.verified ? "cycle power verified" : "verification failed";
        return emb;
    }

    // bandwidth route: path power, random walk onto a coprime cycle length,
    // imbalance correction, then a repair pass to land exactly on the sizes
    if (!request.guest) throw InputError("bandwidth embedding needs a guest graph");
    const Graph& guest = *request.guest;
    if (guest.vertex_count() != total) throw InputError("guest order does not match the blow-up");
    PathPowerAllocation pa =
        allocate_to_path_power(guest, request.ordering, request.colouring, request.beta, request.z, k);
    for (int p : pa.position)
        if (p == 0)
            throw GuardError("zero-coloured guests are embedded via the cycle-power pipeline only");

    std::vector<int> jprime_order;
    {
        // cover must contain a tight Hamilton cycle to anchor the correction;
        // fall back to the identity order when it validates
        std::vector<int> order(static_cast<size_t>(rt));
        std::iota(order.begin(), order.end(), 0);
        for (int p = 0; p < rt; ++p) {
            std::vector<int> e;
            for (int i = 0; i < k; ++i) e.push_back(order[static_cast<size_t>((p + i) % rt)]);
            std::sort(e.begin(), e.end());
            if (!j.has_edge(e)) throw PreconditionError("no tight Hamilton cycle order available");
        }
        jprime_order = order;
    }
    CorrectingCycle cc = imbalance_correcting_cycle(r_graph, j, jprime_order, sizes, request.xi,
                                                    Rational(1, 100 * total), Rational(0));
    MarkovParams mp;
    mp.k = k;
    mp.r = 1;
    mp.t = static_cast<int>(cc.ell);
    mp.xi = request.xi;
    mp.seed = request.seed;
    mp.retries = request.retries;
    MarkovAllocation ma = markov_allocate(pa, &guest, mp);
    if (!ma.within_bounds) throw GuardError("walk allocation concentration not met after retries");

    std::vector<int> cluster_of(static_cast<size_t>(guest.vertex_count()));
    std::vector<long long> load(static_cast<size_t>(rt), 0);
    for (int v = 0; v < guest.vertex_count(); ++v) {
        int c = cc.phi[static_cast<size_t>(ma.cluster_of[static_cast<size_t>(v)])];
        cluster_of[static_cast<size_t>(v)] = c;
        ++load[static_cast<size_t>(c)];
    }
    // repair: move vertices from overloaded to underloaded clusters whenever
    // their neighbourhoods stay on reduced-graph edges
    for (int pass = 0; pass < 4 * rt; ++pass) {
        int over = -1, under = -1;
        for (int i = 0; i < rt; ++i) {
            if (load[static_cast<size_t>(i)] > sizes[static_cast<size_t>(i)] && over < 0) over = i;
            if (load[static_cast<size_t>(i)] < sizes[static_cast<size_t>(i)] && under < 0) under = i;
        }
        if (over < 0 && under < 0) break;
        if (over < 0 || under < 0) throw std::logic_error("load imbalance without a partner");
        bool moved = false;
        for (int v = 0; v < guest.vertex_count() && !moved; ++v) {
            if (cluster_of[static_cast<size_t>(v)] != over) continue;
            bool ok = true;
            for (int u : guest.neighbors(v)) {
                int cu = cluster_of[static_cast<size_t>(u)];
                if (cu == under || !r_graph.has_edge(under, cu)) { ok = false; break; }
            }
            if (ok) {
                cluster_of[static_cast<size_t>(v)] = under;
                --load[static_cast<size_t>(over)];
                ++load[static_cast<size_t>(under)];
                moved = true;
            }
        }
        if (!moved) throw PreconditionError("allocation infeasible: repair could not balance loads");
    }
    for (int i = 0; i < rt; ++i)
        if (load[static_cast<size_t>(i)] != sizes[static_cast<size_t>(i)])
            throw PreconditionError("allocation infeasible: loads do not match sizes");

    std::vector<long long> used(sizes.size(), 0);
    emb.vertex_map.resize(static_cast<size_t>(guest.vertex_count()));
    for (int v = 0; v < guest.vertex_count(); ++v) {
        int c = cluster_of[static_cast<size_t>(v)];
        emb.vertex_map[static_cast<size_t>(v)] =
            static_cast<int>(offsets[static_cast<size_t>(c)] + used[static_cast<size_t>(c)]);
        ++used[static_cast<size_t>(c)];
    }
    emb.verified = true;
    for (auto [u, v] : guest.edges())
        if (!host.has_edge(emb.vertex_map[static_cast<size_t>(u)], emb.vertex_map[static_cast<size_t>(v)]))
            emb.verified = false;
    emb.detail = emb.verified ? "edge-by-edge adjacency verified" : "verification failed";
    return emb;
}

} // namespace tightframe
