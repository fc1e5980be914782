#include "tightframe/matching.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

#include "tightframe/errors.hpp"
#include "tightframe/lp.hpp"
#include "tightframe/rng.hpp"
#include <nlohmann/json.hpp>

namespace tightframe {

using ordered_json = nlohmann::ordered_json;

Rational FractionalMatching::load(int v) const {
    Rational total = 0;
    for (const auto& [e, w] : weights)
        if (std::binary_search(e.begin(), e.end(), v)) total += w;
    return total;
}

std::string FractionalMatching::to_json() const {
    ordered_json j;
    j["edges"] = ordered_json::array();
    for (const auto& [e, w] : weights) {
        ordered_json entry;
        entry["edge"] = e;
        entry["weight"] = rat_str(w);
        j["edges"].push_back(entry);
    }
    j["size"] = rat_str(size);
    return j.dump();
}

FractionalMatching max_fractional_matching(const KGraph& h) {
    int n = h.vertex_count();
    std::vector<std::vector<int>> cols;
    cols.reserve(static_cast<size_t>(h.edge_count()));
    for (const auto& e : h.edges()) cols.push_back(e);
    std::vector<Rational> b(static_cast<size_t>(n), Rational(1));
    std::vector<Rational> c(cols.size(), Rational(1));
    PackingLpResult r = solve_packing_lp(n, cols, b, c);
    if (!verify_packing_certificate(n, cols, b, c, r))
        throw std::logic_error("lp certificate verification failed");
    FractionalMatching m;
    m.size = r.objective;
    for (size_t j = 0; j < cols.size(); ++j)
        if (r.x[j] != 0) m.weights[h.edge(static_cast<int>(j))] = r.x[j];
    return m;
}

PerfectMatchingWitness has_perfect_fractional_matching(const KGraph& h) {
    PerfectMatchingWitness w;
    w.matching = max_fractional_matching(h);
    w.perfect = w.matching.size == Rational(h.vertex_count(), h.k());
    return w;
}

TutteResult tutte_check(const Graph& g) {
    int n = g.vertex_count();
    if (n > 20) throw GuardError("tutte_check is exhaustive and limited to n <= 20");
    std::vector<uint32_t> adj(static_cast<size_t>(n), 0);
    for (auto [u, v] : g.edges()) {
        adj[static_cast<size_t>(u)] |= 1u << v;
        adj[static_cast<size_t>(v)] |= 1u << u;
    }
    TutteResult result;
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        uint32_t nb = 0;
        bool independent = true;
        for (int v = 0; v < n && independent; ++v)
            if (mask & (1u << v)) {
                if (adj[static_cast<size_t>(v)] & mask) independent = false;
                nb |= adj[static_cast<size_t>(v)];
            }
        if (!independent) continue;
        if (std::popcount(nb) < std::popcount(mask)) {
            for (int v = 0; v < n; ++v)
                if (mask & (1u << v)) result.violating_set.push_back(v);
            return result;
        }
    }
    result.ok = true;
    return result;
}

namespace {

// one nontrivial kernel vector of the 0/1 incidence matrix of `edges` over the
// listed vertices, or empty when the columns are independent
std::vector<Rational> incidence_kernel_vector(const std::vector<std::vector<int>>& edges,
                                              const std::vector<int>& vertices) {
    size_t rows = vertices.size(), cols = edges.size();
    std::vector<int> row_of(vertices.empty() ? 0 : static_cast<size_t>(vertices.back()) + 1, -1);
    for (size_t i = 0; i < vertices.size(); ++i) row_of[static_cast<size_t>(vertices[i])] = static_cast<int>(i);
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols, Rational(0)));
    for (size_t j = 0; j < cols; ++j)
        for (int v : edges[j]) a[static_cast<size_t>(row_of[static_cast<size_t>(v)])][j] = 1;
    std::vector<int> pivot_col_of_row;
    std::vector<int> pivot_row_of_col(cols, -1);
    size_t r = 0;
    for (size_t j = 0; j < cols && r < rows; ++j) {
        size_t sel = r;
        while (sel < rows && a[sel][j] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[r]);
        Rational inv = a[r][j];
        for (size_t jj = j; jj < cols; ++jj) a[r][jj] /= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][j] == 0) continue;
            Rational f = a[i][j];
            for (size_t jj = j; jj < cols; ++jj) a[i][jj] -= f * a[r][jj];
        }
        pivot_row_of_col[j] = static_cast<int>(r);
        pivot_col_of_row.push_back(static_cast<int>(j));
        ++r;
    }
    int free_col = -1;
    for (size_t j = 0; j < cols && free_col < 0; ++j)
        if (pivot_row_of_col[j] < 0) free_col = static_cast<int>(j);
    if (free_col < 0) return {};
    std::vector<Rational> lambda(cols, Rational(0));
    lambda[static_cast<size_t>(free_col)] = 1;
    for (size_t i = 0; i < pivot_col_of_row.size(); ++i)
        lambda[static_cast<size_t>(pivot_col_of_row[i])] = -a[i][static_cast<size_t>(free_col)];
    return lambda;
}

} // namespace

FractionalMatching sparsify_matching(const KGraph& h, const FractionalMatching& m) {
    Rational perfect_size(h.vertex_count(), h.k());
    if (m.size != perfect_size) throw PreconditionError("matching is not perfect");
    for (int v = 0; v < h.vertex_count(); ++v)
        if (m.load(v) != 1) throw PreconditionError("matching is not perfect at vertex " + std::to_string(v));

    std::vector<std::vector<int>> support;
    std::vector<Rational> weight;
    for (const auto& [e, w] : m.weights) {
        if (w == 0) continue;
        if (!h.has_edge(e)) throw InputError("matching uses an edge not in the hypergraph");
        support.push_back(e);
        weight.push_back(w);
    }
    std::vector<int> vertices(static_cast<size_t>(h.vertex_count()));
    std::iota(vertices.begin(), vertices.end(), 0);

    while (true) {
        std::vector<Rational> lambda = incidence_kernel_vector(support, vertices);
        if (lambda.empty()) break;
        bool has_positive = false;
        for (const auto& l : lambda)
            if (l > 0) { has_positive = true; break; }
        if (!has_positive)
            for (auto& l : lambda) l = -l;
        Rational tau;
        bool first = true;
        for (size_t i = 0; i < lambda.size(); ++i) {
            if (lambda[i] <= 0) continue;
            Rational ratio = weight[i] / lambda[i];
            if (first || ratio < tau) { tau = ratio; first = false; }
        }
        std::vector<std::vector<int>> next_support;
        std::vector<Rational> next_weight;
        for (size_t i = 0; i < lambda.size(); ++i) {
            Rational w = weight[i] - tau * lambda[i];
            if (w < 0) throw std::logic_error("sparsify produced a negative weight");
            if (w != 0) {
                next_support.push_back(support[i]);
                next_weight.push_back(w);
            }
        }
        support = std::move(next_support);
        weight = std::move(next_weight);
    }

    FractionalMatching out;
    out.size = 0;
    for (size_t i = 0; i < support.size(); ++i) {
        out.weights[support[i]] = weight[i];
        out.size += weight[i];
    }
    if (static_cast<int>(out.weights.size()) > h.vertex_count())
        throw std::logic_error("sparsify exceeded the support bound");
    return out;
}

namespace {

// [k]-graph level used by the cover recursion: edges are subsets of the
// original vertex ids, with exact weights and a pointer to a parent edge.
struct CoverLevel {
    std::vector<std::vector<int>> edges;
    std::vector<Rational> weight;
    std::vector<int> parent;  // index into the previous level, -1 at the top
    std::vector<int> vertices;
};

// Caratheodory step applied in place to the nonzero indices of the level
void sparsify_level(CoverLevel& level) {
    // empty edges never carry weight forward
    for (size_t i = 0; i < level.edges.size(); ++i)
        if (level.edges[i].empty()) level.weight[i] = 0;
    while (true) {
        std::vector<int> nz;
        for (size_t i = 0; i < level.edges.size(); ++i)
            if (level.weight[i] != 0) nz.push_back(static_cast<int>(i));
        std::vector<std::vector<int>> nz_edges;
        for (int i : nz) nz_edges.push_back(level.edges[static_cast<size_t>(i)]);
        std::vector<Rational> lambda = incidence_kernel_vector(nz_edges, level.vertices);
        if (lambda.empty()) return;
        bool pos = false;
        for (const auto& l : lambda)
            if (l > 0) { pos = true; break; }
        if (!pos)
            for (auto& l : lambda) l = -l;
        Rational tau;
        bool first = true;
        for (size_t i = 0; i < lambda.size(); ++i) {
            if (lambda[i] <= 0) continue;
            Rational ratio = level.weight[static_cast<size_t>(nz[i])] / lambda[i];
            if (first || ratio < tau) { tau = ratio; first = false; }
        }
        for (size_t i = 0; i < lambda.size(); ++i)
            level.weight[static_cast<size_t>(nz[i])] -= tau * lambda[i];
    }
}

} // namespace

KGraph bounded_degree_cover(const KGraph& h) {
    PerfectMatchingWitness w = has_perfect_fractional_matching(h);
    if (!w.perfect) throw PreconditionError("hypergraph has no perfect fractional matching");
    return bounded_degree_cover(h, w.matching);
}

KGraph bounded_degree_cover(const KGraph& h, const FractionalMatching& perfect) {
    int k = h.k();
    for (int v = 0; v < h.vertex_count(); ++v)
        if (perfect.load(v) != 1) throw PreconditionError("matching is not perfect");

    // iterative version of the minimal-counterexample recursion, keeping one
    // level per peeled edge so covers can be lifted back up
    std::vector<CoverLevel> levels;
    std::vector<int> estars;
    CoverLevel top;
    for (const auto& [e, wt] : perfect.weights) {
        if (wt == 0) continue;
        top.edges.push_back(e);
        top.weight.push_back(wt);
        top.parent.push_back(-1);
    }
    top.vertices.resize(static_cast<size_t>(h.vertex_count()));
    std::iota(top.vertices.begin(), top.vertices.end(), 0);

    levels.push_back(std::move(top));
    std::vector<int> base_cover;
    while (true) {
        CoverLevel& level = levels.back();
        sparsify_level(level);
        std::vector<int> nz;
        for (size_t i = 0; i < level.edges.size(); ++i)
            if (level.weight[i] != 0) nz.push_back(static_cast<int>(i));
        std::vector<long long> deg(static_cast<size_t>(h.vertex_count()), 0);
        for (int i : nz)
            for (int v : level.edges[static_cast<size_t>(i)]) ++deg[static_cast<size_t>(v)];
        bool heavy_exists = false;
        std::set<int> heavy;
        for (int v : level.vertices)
            if (deg[static_cast<size_t>(v)] >= static_cast<long long>(k) * k + 1) {
                heavy.insert(v);
                heavy_exists = true;
            }
        if (!heavy_exists) {
            base_cover = nz;
            break;
        }
        int estar = -1;
        for (int i : nz) {
            const auto& e = level.edges[static_cast<size_t>(i)];
            if (e.empty()) continue;
            bool hits = false;
            for (int v : e)
                if (heavy.count(v)) { hits = true; break; }
            if (!hits) { estar = i; break; }
        }
        if (estar < 0) throw std::logic_error("no edge avoiding the heavy set");
        estars.push_back(estar);

        const auto& estar_edge = level.edges[static_cast<size_t>(estar)];
        std::vector<int> rest;
        for (int v : level.vertices)
            if (!std::binary_search(estar_edge.begin(), estar_edge.end(), v)) rest.push_back(v);
        std::map<std::vector<int>, std::pair<Rational, int>> grouped;
        for (int i : nz) {
            std::vector<int> inter;
            for (int v : level.edges[static_cast<size_t>(i)])
                if (std::binary_search(rest.begin(), rest.end(), v)) inter.push_back(v);
            auto it = grouped.find(inter);
            if (it == grouped.end())
                grouped[inter] = {level.weight[static_cast<size_t>(i)], i};
            else {
                it->second.first += level.weight[static_cast<size_t>(i)];
                if (level.edges[static_cast<size_t>(i)] < level.edges[static_cast<size_t>(it->second.second)])
                    it->second.second = i;
            }
        }
        CoverLevel next;
        next.vertices = rest;
        for (const auto& [e, wp] : grouped) {
            next.edges.push_back(e);
            next.weight.push_back(wp.first);
            next.parent.push_back(wp.second);
        }
        levels.push_back(std::move(next));
    }

    // lift the cover back to the original edges, adding each peeled e*
    std::vector<int> cover = base_cover;
    for (size_t depth = levels.size(); depth-- > 1;) {
        std::vector<int> lifted;
        for (int i : cover) lifted.push_back(levels[depth].parent[static_cast<size_t>(i)]);
        lifted.push_back(estars[depth - 1]);
        cover = std::move(lifted);
    }

    std::vector<std::vector<int>> chosen;
    for (int i : cover) chosen.push_back(levels[0].edges[static_cast<size_t>(i)]);
    std::sort(chosen.begin(), chosen.end());
    chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());

    std::vector<long long> deg(static_cast<size_t>(h.vertex_count()), 0);
    for (const auto& e : chosen)
        for (int v : e) ++deg[static_cast<size_t>(v)];
    for (int v = 0; v < h.vertex_count(); ++v)
        if (deg[static_cast<size_t>(v)] < 1 || deg[static_cast<size_t>(v)] > static_cast<long long>(k) * k + 1)
            throw std::logic_error("cover degree bound violated at vertex " + std::to_string(v));
    return KGraph::from_edges(k, h.vertex_count(), chosen, h.partition());
}

AllocationVector integer_flow_allocate(const KGraph& h, const std::vector<long long>& b,
                                       long long s) {
    int n = h.vertex_count();
    if (static_cast<int>(b.size()) != n) throw InputError("b must have one entry per vertex");
    for (long long bi : b)
        if (bi > s || bi < -s) throw PreconditionError("||b||_inf exceeds s");

    Partition parts;
    if (h.partition() && h.partition()->size() >= 2) parts = *h.partition();
    else {
        std::vector<int> all(static_cast<size_t>(n));
        std::iota(all.begin(), all.end(), 0);
        parts.push_back(all);
    }
    for (size_t pi = 0; pi < parts.size(); ++pi) {
        long long total = 0;
        for (int v : parts[pi]) total += b[static_cast<size_t>(v)];
        if (total != 0)
            throw PreconditionError("b does not sum to zero on part " + std::to_string(pi));
    }

    Graph hat = hat_graph(h);
    // adjacency restricted per part + connectivity
    std::vector<int> part_of(static_cast<size_t>(n), -1);
    for (size_t pi = 0; pi < parts.size(); ++pi)
        for (int v : parts[pi]) part_of[static_cast<size_t>(v)] = static_cast<int>(pi);
    std::vector<std::vector<int>> hat_adj(static_cast<size_t>(n));
    for (auto [u, v] : hat.edges())
        if (part_of[static_cast<size_t>(u)] == part_of[static_cast<size_t>(v)]) {
            hat_adj[static_cast<size_t>(u)].push_back(v);
            hat_adj[static_cast<size_t>(v)].push_back(u);
        }
    for (auto& a : hat_adj) std::sort(a.begin(), a.end());
    for (size_t pi = 0; pi < parts.size(); ++pi) {
        const auto& part = parts[pi];
        std::vector<char> seen(static_cast<size_t>(n), 0);
        std::deque<int> queue = {part[0]};
        seen[static_cast<size_t>(part[0])] = 1;
        int reached = 0;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            ++reached;
            for (int v : hat_adj[static_cast<size_t>(u)])
                if (!seen[static_cast<size_t>(v)]) {
                    seen[static_cast<size_t>(v)] = 1;
                    queue.push_back(v);
                }
        }
        if (reached != static_cast<int>(part.size()))
            throw PreconditionError("hat graph disconnected on part " + std::to_string(pi));
    }

    // unit augmentations along hat paths until every vertex receives b(v)
    std::map<std::pair<int, int>, long long> flow;  // (x,y) with x<y: flow from x to y
    auto push_unit = [&](int from, int to) {
        if (from < to) flow[{from, to}] += 1;
        else flow[{to, from}] -= 1;
    };
    std::vector<long long> recv(static_cast<size_t>(n), 0);
    while (true) {
        int x = -1;
        for (int v = 0; v < n && x < 0; ++v)
            if (recv[static_cast<size_t>(v)] < b[static_cast<size_t>(v)]) x = v;
        if (x < 0) break;
        int y = -1;
        for (int v = 0; v < n && y < 0; ++v)
            if (part_of[static_cast<size_t>(v)] == part_of[static_cast<size_t>(x)] &&
                recv[static_cast<size_t>(v)] > b[static_cast<size_t>(v)])
                y = v;
        if (y < 0) throw std::logic_error("flow imbalance without a donor");
        // lex-least BFS path y -> x inside the part
        std::vector<int> parent(static_cast<size_t>(n), -2);
        std::deque<int> queue = {y};
        parent[static_cast<size_t>(y)] = -1;
        while (!queue.empty() && parent[static_cast<size_t>(x)] == -2) {
            int u = queue.front();
            queue.pop_front();
            for (int v : hat_adj[static_cast<size_t>(u)])
                if (parent[static_cast<size_t>(v)] == -2) {
                    parent[static_cast<size_t>(v)] = u;
                    queue.push_back(v);
                }
        }
        if (parent[static_cast<size_t>(x)] == -2) throw std::logic_error("donor unreachable");
        for (int v = x; parent[static_cast<size_t>(v)] != -1; v = parent[static_cast<size_t>(v)])
            push_unit(parent[static_cast<size_t>(v)], v);
        recv[static_cast<size_t>(x)] += 1;
        recv[static_cast<size_t>(y)] -= 1;
    }

    // convert the hat flow into edge weights through shared link edges
    AllocationVector out;
    for (const auto& [xy, c] : flow) {
        if (c == 0) continue;
        int x = xy.first, y = xy.second;
        long long amount = c;
        if (amount < 0) {
            std::swap(x, y);
            amount = -amount;
        }
        // lex-least common link edge of x and y
        std::vector<int> q;
        bool found = false;
        for (const auto& e : h.edges()) {
            if (!std::binary_search(e.begin(), e.end(), x)) continue;
            std::vector<int> s;
            for (int u : e)
                if (u != x) s.push_back(u);
            std::vector<int> with_y = s;
            with_y.insert(std::lower_bound(with_y.begin(), with_y.end(), y), y);
            if (std::binary_search(with_y.begin(), with_y.end(), x)) continue;  // y == x impossible
            if (static_cast<int>(with_y.size()) == h.k() && h.has_edge(with_y)) {
                q = s;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("hat edge without a common link edge");
        std::vector<int> ex = q;
        ex.insert(std::lower_bound(ex.begin(), ex.end(), x), x);
        std::vector<int> ey = q;
        ey.insert(std::lower_bound(ey.begin(), ey.end(), y), y);
        out.values[ex] -= amount;
        out.values[ey] += amount;
    }
    for (auto it = out.values.begin(); it != out.values.end();) {
        if (it->second == 0) it = out.values.erase(it);
        else ++it;
    }
    out.max_abs = 0;
    for (const auto& [e, v] : out.values) out.max_abs = std::max(out.max_abs, v < 0 ? -v : v);

    // recompute loads and check the stated bound
    std::vector<long long> check(static_cast<size_t>(n), 0);
    for (const auto& [e, v] : out.values)
        for (int u : e) check[static_cast<size_t>(u)] += v;
    for (int v = 0; v < n; ++v)
        if (check[static_cast<size_t>(v)] != b[static_cast<size_t>(v)])
            throw std::logic_error("flow allocation load mismatch");
    long long bound = static_cast<long long>(h.k()) * s * static_cast<long long>(n) * static_cast<long long>(n);
    if (out.max_abs > bound) throw std::logic_error("flow allocation exceeds k*s*n^2");
    return out;
}

std::vector<std::vector<int>> distributed_matching(const KGraph& h,
                                                   const std::vector<KGraph>& family,
                                                   const DistributedMatchingParams& params) {
    if (family.empty()) return {};
    int n = h.vertex_count();
    Rational nk = 1;
    for (int i = 0; i < h.k(); ++i) nk *= Rational(n);
    for (size_t fi = 0; fi < family.size(); ++fi) {
        const KGraph& f = family[fi];
        if (f.k() != h.k() || f.vertex_count() != n)
            throw InputError("family member " + std::to_string(fi) + " has mismatched shape");
        for (const auto& e : f.edges())
            if (!h.has_edge(e))
                throw InputError("family member " + std::to_string(fi) + " is not a subgraph");
        if (Rational(f.edge_count()) < params.gamma * nk)
            throw PreconditionError("family member " + std::to_string(fi) +
                                    " is below the density threshold");
    }
    long long quota = to_ll(ceil_rat(params.pi * Rational(n)));
    for (int attempt = 0; attempt < params.retries; ++attempt) {
        Rng rng(trial_seed(params.seed, static_cast<uint64_t>(attempt)));
        std::vector<std::vector<int>> matching;
        std::vector<char> used(static_cast<size_t>(n), 0);
        std::vector<long long> count(family.size(), 0);
        auto covered = [&]() {
            for (long long c : count)
                if (c < quota) return false;
            return true;
        };
        bool stuck = false;
        while (!covered() && !stuck) {
            // most deficient member first
            size_t pick = 0;
            long long worst = quota - count[0];
            for (size_t i = 1; i < family.size(); ++i)
                if (quota - count[i] > worst) { worst = quota - count[i]; pick = i; }
            std::vector<int> avail;
            const auto& edges = family[pick].edges();
            for (size_t ei = 0; ei < edges.size(); ++ei) {
                bool free = true;
                for (int v : edges[ei])
                    if (used[static_cast<size_t>(v)]) { free = false; break; }
                if (free) avail.push_back(static_cast<int>(ei));
            }
            if (avail.empty()) { stuck = true; break; }
            const auto& e = edges[static_cast<size_t>(avail[static_cast<size_t>(rng.below(avail.size()))])];
            matching.push_back(e);
            for (int v : e) used[static_cast<size_t>(v)] = 1;
            for (size_t i = 0; i < family.size(); ++i)
                if (family[i].has_edge(e)) ++count[i];
        }
        if (!stuck && covered() && static_cast<int>(matching.size()) <= params.max_size) {
            std::sort(matching.begin(), matching.end());
            return matching;
        }
    }
    throw GuardError("distributed matching failed after " + std::to_string(params.retries) +
                     " attempts");
}

BlowupMatchingResult blowup_cluster_matching(const KGraph& j, const std::vector<long long>& sizes,
                                             const FractionalMatching& perfect,
                                             const Rational& alpha, const Rational& beta) {
    int t_total = j.vertex_count();
    if (static_cast<int>(sizes.size()) != t_total) throw InputError("one size per cluster required");
    long long min_size = *std::min_element(sizes.begin(), sizes.end());
    long long max_size = *std::max_element(sizes.begin(), sizes.end());
    if (min_size <= 0) throw InputError("cluster sizes must be positive");
    if (Rational(max_size) > (Rational(1) + alpha) * Rational(min_size))
        throw PreconditionError("cluster sizes are not (1+alpha)-balanced");
    if (j.partition() && j.partition()->size() >= 2) {
        long long first = -1;
        for (const auto& part : *j.partition()) {
            long long total = 0;
            for (int v : part) total += sizes[static_cast<size_t>(v)];
            if (first < 0) first = total;
            else if (total != first) throw PreconditionError("per-part size totals differ");
        }
    }
    for (int v = 0; v < t_total; ++v)
        if (perfect.load(v) != 1) throw PreconditionError("matching is not perfect on the base");

    std::vector<long long> offset(sizes.size() + 1, 0);
    for (size_t i = 0; i < sizes.size(); ++i) offset[i + 1] = offset[i] + sizes[i];
    std::vector<long long> used(sizes.size(), 0);

    BlowupMatchingResult result;
    for (const auto& [e, w] : perfect.weights) {
        long long copies = to_ll(floor_rat(Rational(min_size) * w));
        for (long long c = 0; c < copies; ++c) {
            std::vector<int> edge;
            for (int cluster : e) {
                edge.push_back(static_cast<int>(offset[static_cast<size_t>(cluster)] +
                                                used[static_cast<size_t>(cluster)]));
                ++used[static_cast<size_t>(cluster)];
            }
            result.matching.push_back(std::move(edge));
        }
    }
    result.deficiency.resize(sizes.size());
    for (size_t i = 0; i < sizes.size(); ++i) result.deficiency[i] = sizes[i] - used[i];

    long long total = offset.back();
    long long t_eff = t_total;
    if (j.partition() && j.partition()->size() >= 2)
        t_eff = static_cast<long long>((*j.partition())[0].size());
    Rational tpow = 1;
    for (int i = 0; i < j.k() - 1; ++i) tpow *= Rational(t_eff);
    Rational bound = beta * Rational(total) + tpow;
    result.within_bound = true;
    for (long long d : result.deficiency)
        if (Rational(d) > bound) result.within_bound = false;
    return result;
}

} // namespace tightframe
