#include "tightframe/walks.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "tightframe/errors.hpp"
#include <nlohmann/json.hpp>

namespace tightframe {

using ordered_json = nlohmann::ordered_json;

std::string WalkCertificate::to_json() const {
    ordered_json j;
    j["sequence"] = sequence;
    j["closed"] = closed;
    j["length"] = length;
    j["congruence"] = congruence;
    if (padding > 0) {
        j["padding"] = padding;
        j["padding_heavy"] = padding_heavy;
    }
    return j.dump();
}

namespace {

long long factorial(int k) {
    long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

constexpr long long kNodeGuard = 10'000'000;

} // namespace

OrderedCliqueDigraph::OrderedCliqueDigraph(const KGraph& h) : host_(&h) {
    int k = h.k();
    long long bound = factorial(k) * h.edge_count();
    if (bound > kNodeGuard)
        throw GuardError("ordered clique digraph would have " + std::to_string(bound) +
                         " nodes (limit " + std::to_string(kNodeGuard) + ")");
    for (int ei = 0; ei < h.edge_count(); ++ei) {
        std::vector<int> perm = h.edge(ei);
        do {
            tuples_.push_back(perm);
            edge_of_.push_back(ei);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    // index nodes in tuple order
    std::vector<int> order(tuples_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return tuples_[static_cast<size_t>(a)] < tuples_[static_cast<size_t>(b)]; });
    std::vector<std::vector<int>> tuples;
    std::vector<int> edge_of;
    tuples.reserve(tuples_.size());
    for (int id : order) {
        tuples.push_back(std::move(tuples_[static_cast<size_t>(id)]));
        edge_of.push_back(edge_of_[static_cast<size_t>(id)]);
    }
    tuples_ = std::move(tuples);
    edge_of_ = std::move(edge_of);

    // completions: (k-1)-set -> vertices w with set ∪ {w} an edge
    std::map<std::vector<int>, std::vector<int>> completions;
    for (const auto& e : h.edges())
        for (size_t i = 0; i < e.size(); ++i) {
            std::vector<int> s;
            for (size_t j = 0; j < e.size(); ++j)
                if (j != i) s.push_back(e[j]);
            completions[s].push_back(e[static_cast<size_t>(i)]);
        }
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < tuples_.size(); ++i) index[tuples_[i]] = static_cast<int>(i);
    arcs_.resize(tuples_.size());
    for (size_t u = 0; u < tuples_.size(); ++u) {
        std::vector<int> tail(tuples_[u].begin() + 1, tuples_[u].end());
        std::vector<int> key = tail;
        std::sort(key.begin(), key.end());
        auto it = completions.find(key);
        if (it == completions.end()) continue;
        for (int w : it->second) {
            std::vector<int> next = tail;
            next.push_back(w);
            auto jt = index.find(next);
            if (jt != index.end()) arcs_[u].push_back(jt->second);
        }
        std::sort(arcs_[u].begin(), arcs_[u].end());
    }
}

int OrderedCliqueDigraph::node_of(const std::vector<int>& tuple) const {
    auto it = std::lower_bound(tuples_.begin(), tuples_.end(), tuple);
    if (it == tuples_.end() || *it != tuple) return -1;
    return static_cast<int>(it - tuples_.begin());
}

namespace {

// iterative Tarjan
std::pair<std::vector<int>, int> strongly_connected_components(const OrderedCliqueDigraph& d) {
    int n = d.node_count();
    std::vector<int> comp(static_cast<size_t>(n), -1), low(static_cast<size_t>(n)), num(static_cast<size_t>(n), -1);
    std::vector<char> on_stack(static_cast<size_t>(n), 0);
    std::vector<int> stack;
    int counter = 0, comp_count = 0;
    struct Frame { int v; size_t arc; };
    for (int root = 0; root < n; ++root) {
        if (num[static_cast<size_t>(root)] != -1) continue;
        std::vector<Frame> call;
        call.push_back({root, 0});
        num[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = counter++;
        stack.push_back(root);
        on_stack[static_cast<size_t>(root)] = 1;
        while (!call.empty()) {
            Frame& f = call.back();
            const auto& out = d.arcs_from(f.v);
            if (f.arc < out.size()) {
                int w = out[f.arc++];
                if (num[static_cast<size_t>(w)] == -1) {
                    num[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = counter++;
                    stack.push_back(w);
                    on_stack[static_cast<size_t>(w)] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[static_cast<size_t>(w)]) {
                    low[static_cast<size_t>(f.v)] = std::min(low[static_cast<size_t>(f.v)], num[static_cast<size_t>(w)]);
                }
            } else {
                if (low[static_cast<size_t>(f.v)] == num[static_cast<size_t>(f.v)]) {
                    while (true) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[static_cast<size_t>(w)] = 0;
                        comp[static_cast<size_t>(w)] = comp_count;
                        if (w == f.v) break;
                    }
                    ++comp_count;
                }
                int v = f.v;
                call.pop_back();
                if (!call.empty())
                    low[static_cast<size_t>(call.back().v)] =
                        std::min(low[static_cast<size_t>(call.back().v)], low[static_cast<size_t>(v)]);
            }
        }
    }
    return {comp, comp_count};
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a); b = find(b);
        if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }
};

// period (gcd of cycle lengths) of one SCC, via BFS level labels
long long scc_period(const OrderedCliqueDigraph& d, const std::vector<int>& scc_of, int scc,
                     int root) {
    std::vector<long long> level(static_cast<size_t>(d.node_count()), -1);
    std::deque<int> queue;
    level[static_cast<size_t>(root)] = 0;
    queue.push_back(root);
    long long g = 0;
    std::vector<int> seen;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        seen.push_back(u);
        for (int v : d.arcs_from(u)) {
            if (scc_of[static_cast<size_t>(v)] != scc) continue;
            if (level[static_cast<size_t>(v)] == -1) {
                level[static_cast<size_t>(v)] = level[static_cast<size_t>(u)] + 1;
                queue.push_back(v);
            }
        }
    }
    for (int u : seen)
        for (int v : d.arcs_from(u)) {
            if (scc_of[static_cast<size_t>(v)] != scc) continue;
            long long diff = level[static_cast<size_t>(u)] + 1 - level[static_cast<size_t>(v)];
            g = std::gcd(g, diff < 0 ? -diff : diff);
        }
    return g;
}

} // namespace

TightComponents tight_components(const KGraph& h) {
    TightComponents result;
    result.component_of_edge.assign(static_cast<size_t>(h.edge_count()), -1);
    if (h.edge_count() == 0) return result;
    OrderedCliqueDigraph d(h);
    auto [scc_of, scc_count] = strongly_connected_components(d);
    // edges sharing an SCC are in one tight component; merging through shared
    // edges collapses the up-to-k! SCCs per component
    UnionFind uf(h.edge_count());
    std::vector<int> scc_rep(static_cast<size_t>(scc_count), -1);
    for (int node = 0; node < d.node_count(); ++node) {
        int s = scc_of[static_cast<size_t>(node)];
        int e = d.edge_of(node);
        if (scc_rep[static_cast<size_t>(s)] == -1) scc_rep[static_cast<size_t>(s)] = e;
        else uf.unite(scc_rep[static_cast<size_t>(s)], e);
    }
    std::map<int, int> relabel;
    for (int e = 0; e < h.edge_count(); ++e) {
        int r = uf.find(e);
        auto it = relabel.find(r);
        if (it == relabel.end()) {
            int id = static_cast<int>(relabel.size());
            relabel[r] = id;
            result.component_of_edge[static_cast<size_t>(e)] = id;
        } else {
            result.component_of_edge[static_cast<size_t>(e)] = it->second;
        }
    }
    result.count = static_cast<int>(relabel.size());
    return result;
}

PeriodInfo period(const KGraph& h, const TightComponents& comps, int component) {
    if (component < 0 || component >= comps.count) throw InputError("unknown component id");
    std::vector<std::vector<int>> edges;
    for (int e = 0; e < h.edge_count(); ++e)
        if (comps.component_of_edge[static_cast<size_t>(e)] == component) edges.push_back(h.edge(e));
    KGraph sub = KGraph::from_edges(h.k(), h.vertex_count(), edges);
    OrderedCliqueDigraph d(sub);
    auto [scc_of, scc_count] = strongly_connected_components(d);
    std::vector<int> root(static_cast<size_t>(scc_count), -1);
    for (int node = 0; node < d.node_count(); ++node)
        if (root[static_cast<size_t>(scc_of[static_cast<size_t>(node)])] == -1)
            root[static_cast<size_t>(scc_of[static_cast<size_t>(node)])] = node;
    long long g = 0;
    for (int s = 0; s < scc_count; ++s)
        g = std::gcd(g, scc_period(d, scc_of, s, root[static_cast<size_t>(s)]));
    PeriodInfo info;
    info.d = g;
    info.aperiodic_mod_k = std::gcd(g, static_cast<long long>(h.k())) == 1;
    return info;
}

namespace {

// shortest path (node list, from -> to criteria) inside an SCC, breaking ties
// by node id through BFS order
std::vector<int> bfs_path(const OrderedCliqueDigraph& d, const std::vector<int>& scc_of, int scc,
                          int from, const std::vector<char>& target) {
    std::vector<int> parent(static_cast<size_t>(d.node_count()), -2);
    std::deque<int> queue;
    parent[static_cast<size_t>(from)] = -1;
    queue.push_back(from);
    int found = target[static_cast<size_t>(from)] ? from : -1;
    while (found == -1 && !queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : d.arcs_from(u)) {
            if (scc >= 0 && scc_of[static_cast<size_t>(v)] != scc) continue;
            if (parent[static_cast<size_t>(v)] != -2) continue;
            parent[static_cast<size_t>(v)] = u;
            if (target[static_cast<size_t>(v)]) { found = v; break; }
            queue.push_back(v);
        }
    }
    if (found == -1) return {};
    std::vector<int> path;
    for (int x = found; x != -1; x = parent[static_cast<size_t>(x)]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

// shortest closed-walk segment through `anchor` whose length is `residue` mod k,
// as a node path anchor -> ... -> anchor (>= 1 arcs), within one SCC
std::vector<int> congruence_loop(const OrderedCliqueDigraph& d, const std::vector<int>& scc_of,
                                 int scc, int anchor, int residue, int k) {
    int n = d.node_count();
    auto id = [&](int node, int r) { return node * k + r; };
    std::vector<int> parent(static_cast<size_t>(n) * static_cast<size_t>(k), -2);
    std::deque<int> queue;
    parent[static_cast<size_t>(id(anchor, 0))] = -1;
    queue.push_back(id(anchor, 0));
    int goal = id(anchor, residue);
    bool found = false;
    while (!queue.empty() && !found) {
        int cur = queue.front();
        queue.pop_front();
        int u = cur / k, r = cur % k;
        for (int v : d.arcs_from(u)) {
            if (scc_of[static_cast<size_t>(v)] != scc) continue;
            int nxt = id(v, (r + 1) % k);
            if (parent[static_cast<size_t>(nxt)] != -2) continue;
            parent[static_cast<size_t>(nxt)] = cur;
            if (nxt == goal) { found = true; break; }
            queue.push_back(nxt);
        }
    }
    if (!found) return {};
    std::vector<int> nodes;
    for (int x = goal; x != -1; x = parent[static_cast<size_t>(x)]) nodes.push_back(x / k);
    std::reverse(nodes.begin(), nodes.end());
    return nodes;  // starts and ends with anchor
}

struct CoveringScc {
    OrderedCliqueDigraph digraph;
    std::vector<int> scc_of;
    int scc = -1;       // an SCC whose nodes cover every edge
    int anchor = -1;    // lexicographically least tuple in that SCC
    long long d = 0;    // period of the SCC

    explicit CoveringScc(const KGraph& h) : digraph(h) {}
};

// Finds an edge-covering SCC; when `need_coprime` is set, one whose period is
// coprime to k. Throws when h is not tightly connected.
CoveringScc find_covering_scc(const KGraph& h, bool need_coprime, int preferred_anchor = -1) {
    if (h.edge_count() == 0) throw PreconditionError("hypergraph has no edges");
    CoveringScc out(h);
    auto [scc_of, scc_count] = strongly_connected_components(out.digraph);
    out.scc_of = scc_of;
    std::vector<std::set<int>> edges_in(static_cast<size_t>(scc_count));
    for (int node = 0; node < out.digraph.node_count(); ++node)
        edges_in[static_cast<size_t>(scc_of[static_cast<size_t>(node)])].insert(out.digraph.edge_of(node));
    std::vector<int> covering;
    for (int s = 0; s < scc_count; ++s)
        if (static_cast<int>(edges_in[static_cast<size_t>(s)].size()) == h.edge_count()) covering.push_back(s);
    if (covering.empty()) throw PreconditionError("hypergraph is not tightly connected");
    if (preferred_anchor >= 0) {
        int s = scc_of[static_cast<size_t>(preferred_anchor)];
        if (static_cast<int>(edges_in[static_cast<size_t>(s)].size()) != h.edge_count())
            throw PreconditionError("hypergraph is not tightly connected");
        covering = {s};
    }
    for (int s : covering) {
        int root = -1;
        for (int node = 0; node < out.digraph.node_count() && root == -1; ++node)
            if (scc_of[static_cast<size_t>(node)] == s) root = node;
        long long d = scc_period(out.digraph, scc_of, s, root);
        if (!need_coprime || std::gcd(d, static_cast<long long>(h.k())) == 1) {
            out.scc = s;
            out.anchor = preferred_anchor >= 0 ? preferred_anchor : root;
            out.d = d;
            return out;
        }
    }
    throw PreconditionError("congruence requested but no edge-covering aperiodic walk exists");
}

// closed node walk from anchor covering all edges of h (inside one SCC)
std::vector<int> covering_closed_node_walk(const CoveringScc& cs, const KGraph& h) {
    const auto& d = cs.digraph;
    std::vector<char> edge_seen(static_cast<size_t>(h.edge_count()), 0);
    std::vector<int> nodes = {cs.anchor};
    edge_seen[static_cast<size_t>(d.edge_of(cs.anchor))] = 1;
    int remaining = h.edge_count() - 1;
    while (remaining > 0) {
        std::vector<char> target(static_cast<size_t>(d.node_count()), 0);
        for (int node = 0; node < d.node_count(); ++node)
            if (cs.scc_of[static_cast<size_t>(node)] == cs.scc && !edge_seen[static_cast<size_t>(d.edge_of(node))])
                target[static_cast<size_t>(node)] = 1;
        auto path = bfs_path(d, cs.scc_of, cs.scc, nodes.back(), target);
        if (path.empty()) throw PreconditionError("hypergraph is not tightly connected");
        for (size_t i = 1; i < path.size(); ++i) {
            nodes.push_back(path[i]);
            int e = d.edge_of(path[i]);
            if (!edge_seen[static_cast<size_t>(e)]) {
                edge_seen[static_cast<size_t>(e)] = 1;
                --remaining;
            }
        }
    }
    // close the walk back to the anchor
    if (nodes.size() == 1 || nodes.back() != cs.anchor) {
        std::vector<char> target(static_cast<size_t>(d.node_count()), 0);
        target[static_cast<size_t>(cs.anchor)] = 1;
        int from = nodes.back();
        if (from == cs.anchor) {
            // nontrivial loop: step to a successor first
            int succ = -1;
            for (int v : d.arcs_from(from))
                if (cs.scc_of[static_cast<size_t>(v)] == cs.scc) { succ = v; break; }
            if (succ == -1) throw PreconditionError("hypergraph is not tightly connected");
            nodes.push_back(succ);
            from = succ;
        }
        if (from != cs.anchor) {
            auto path = bfs_path(d, cs.scc_of, cs.scc, from, target);
            if (path.empty()) throw PreconditionError("hypergraph is not tightly connected");
            for (size_t i = 1; i + 1 < path.size(); ++i) nodes.push_back(path[i]);
        } else {
            nodes.pop_back();  // walk already closes into the anchor
        }
    }
    return nodes;
}

WalkCertificate walk_from_closed_nodes(const OrderedCliqueDigraph& d, const std::vector<int>& nodes,
                                       int k) {
    WalkCertificate w;
    w.closed = true;
    w.sequence.reserve(nodes.size());
    for (int node : nodes) w.sequence.push_back(d.tuple(node)[0]);
    w.length = static_cast<long long>(w.sequence.size());
    w.congruence = static_cast<int>(w.length % k);
    std::set<std::vector<int>> edges;
    for (int node : nodes) edges.insert(d.host().edge(d.edge_of(node)));
    w.visited_edges.assign(edges.begin(), edges.end());
    return w;
}

} // namespace

bool is_tightly_connected(const KGraph& h) {
    if (h.edge_count() == 0) return false;
    try {
        find_covering_scc(h, false);
        return true;
    } catch (const PreconditionError&) {
        return false;
    }
}

WalkCertificate closed_walk_all_edges(const KGraph& h, std::optional<int> q) {
    int k = h.k();
    if (q && (*q < 0 || *q >= k)) throw InputError("congruence class out of range");
    CoveringScc cs = find_covering_scc(h, q.has_value());
    std::vector<int> nodes = covering_closed_node_walk(cs, h);
    if (q) {
        int rho = static_cast<int>(((*q - static_cast<long long>(nodes.size())) % k + k) % k);
        if (rho != 0) {
            auto loop = congruence_loop(cs.digraph, cs.scc_of, cs.scc, cs.anchor, rho, k);
            if (loop.empty())
                throw PreconditionError("congruence class unreachable in walk digraph");
            // walk starts at the anchor, so splice the loop at the seam
            for (size_t i = 0; i + 1 < loop.size(); ++i) nodes.push_back(loop[i]);
        }
    }
    WalkCertificate w = walk_from_closed_nodes(cs.digraph, nodes, k);
    if (q && w.congruence != *q) throw std::logic_error("congruence construction failed");
    return w;
}

WalkCertificate spanning_walk_with_prefix(const KGraph& h, const std::vector<int>& prefix) {
    std::vector<int> key = prefix;
    std::sort(key.begin(), key.end());
    if (!h.has_edge(key)) throw InputError("prefix is not an ordering of an edge");
    OrderedCliqueDigraph probe(h);
    int anchor = probe.node_of(prefix);
    CoveringScc cs = find_covering_scc(h, false, anchor);
    std::vector<int> nodes = covering_closed_node_walk(cs, h);
    return walk_from_closed_nodes(cs.digraph, nodes, h.k());
}

WalkCertificate walk_between(const KGraph& h, const std::vector<int>& e1, const std::vector<int>& e2,
                             const std::vector<int>& clique) {
    int k = h.k();
    long long t = h.vertex_count();
    if (t < 2 * k)
        throw PreconditionError("walk_between requires t >= 2k (t=" + std::to_string(t) + ", k=" +
                                std::to_string(k) + ")");
    long long target = k;
    for (int i = 0; i < k; ++i) {
        target *= t;
        if (target > 100'000'000LL) throw GuardError("k*t^k too large for explicit walk");
    }
    if (static_cast<int>(clique.size()) != k + 1) throw InputError("clique must have k+1 vertices");
    std::set<int> kset(clique.begin(), clique.end());
    if (static_cast<int>(kset.size()) != k + 1) throw InputError("clique vertices must be distinct");
    // K spans a clique in h
    std::vector<int> sorted_clique(kset.begin(), kset.end());
    for (int skip = 0; skip <= k; ++skip) {
        std::vector<int> sub;
        for (int i = 0; i <= k; ++i)
            if (i != skip) sub.push_back(sorted_clique[static_cast<size_t>(i)]);
        if (!h.has_edge(sub)) throw InputError("clique is not fully present in hypergraph");
    }
    std::vector<int> e1key = e1, e2key = e2;
    std::sort(e1key.begin(), e1key.end());
    std::sort(e2key.begin(), e2key.end());
    if (!h.has_edge(e1key)) throw InputError("e1 is not an ordering of an edge");
    if (static_cast<int>(e2.size()) != k) throw InputError("e2 must have k vertices");
    for (int v : e2)
        if (!kset.count(v)) throw InputError("e2 entries must lie in the clique");
    if (!h.has_edge(e2key)) throw InputError("e2 vertex set is not an edge");

    OrderedCliqueDigraph d(h);
    int start = d.node_of(e1);
    if (start < 0) throw InputError("e1 is not an ordering of an edge");
    std::vector<char> goal(static_cast<size_t>(d.node_count()), 0);
    for (int node = 0; node < d.node_count(); ++node)
        if (d.host().edge(d.edge_of(node)) == e2key) goal[static_cast<size_t>(node)] = 1;
    std::vector<int> none;
    auto path = bfs_path(d, none, -1, start, goal);
    if (path.empty()) throw PreconditionError("no tight walk from e1 to the clique edge");

    std::vector<int> seq = d.tuple(path[0]);
    for (size_t i = 1; i < path.size(); ++i) seq.push_back(d.tuple(path[i]).back());

    // swap-in-clique gadget: reorder the trailing k vertices into e2
    int extra = -1;
    for (int v : clique)
        if (std::find(e2.begin(), e2.end(), v) == e2.end()) extra = v;
    std::vector<int> f2(seq.end() - k, seq.end());
    while (f2 != e2) {
        size_t i = 0;
        while (f2[i] == e2[i]) ++i;
        size_t j = i + 1;
        while (f2[j] != e2[i]) ++j;
        std::vector<int> block2 = f2;
        block2[i] = extra;
        block2[j] = f2[i];
        std::vector<int> block3 = f2;
        std::swap(block3[i], block3[j]);
        seq.insert(seq.end(), block2.begin(), block2.end());
        seq.insert(seq.end(), block3.begin(), block3.end());
        f2 = block3;
    }
    // bring the length to 0 mod k, keeping the e2 suffix
    while (static_cast<long long>(seq.size()) % k != 0) {
        seq.push_back(extra);
        seq.insert(seq.end(), e2.begin(), e2.end());
    }
    if (static_cast<long long>(seq.size()) > target)
        throw PreconditionError("padding infeasible: base walk longer than k*t^k");
    long long padding = target - static_cast<long long>(seq.size());
    for (long long done = 0; done < padding; done += k) seq.insert(seq.end(), e2.begin(), e2.end());

    WalkCertificate w;
    w.sequence = std::move(seq);
    w.closed = false;
    w.length = static_cast<long long>(w.sequence.size());
    w.congruence = static_cast<int>(w.length % k);
    w.padding = padding;
    long long tk = target / k;
    w.padding_heavy = 2 * padding > tk;
    std::set<std::vector<int>> edges;
    for (size_t i = 0; i + static_cast<size_t>(k) <= w.sequence.size(); ++i) {
        std::vector<int> window(w.sequence.begin() + static_cast<long>(i),
                                w.sequence.begin() + static_cast<long>(i) + k);
        std::sort(window.begin(), window.end());
        edges.insert(window);
    }
    w.visited_edges.assign(edges.begin(), edges.end());
    if (!verify_walk(h, w)) throw std::logic_error("walk_between produced an invalid walk");
    return w;
}

bool verify_walk(const KGraph& h, const WalkCertificate& w) {
    int k = h.k();
    long long len = static_cast<long long>(w.sequence.size());
    if (w.length != len) return false;
    if (w.congruence != static_cast<int>(len % k)) return false;
    if (len < k && !w.closed) return false;
    if (len == 0) return false;
    std::set<std::vector<int>> edges;
    long long windows = w.closed ? len : len - k + 1;
    for (long long i = 0; i < windows; ++i) {
        std::vector<int> window;
        window.reserve(static_cast<size_t>(k));
        for (int j = 0; j < k; ++j)
            window.push_back(w.sequence[static_cast<size_t>((i + j) % len)]);
        std::sort(window.begin(), window.end());
        for (int j = 1; j < k; ++j)
            if (window[static_cast<size_t>(j)] == window[static_cast<size_t>(j - 1)]) return false;
        if (!h.has_edge(window)) return false;
        edges.insert(window);
    }
    std::vector<std::vector<int>> visited(edges.begin(), edges.end());
    std::vector<std::vector<int>> claimed = w.visited_edges;
    std::sort(claimed.begin(), claimed.end());
    return visited == claimed;
}

ReachabilityReport hat_reachability_check(const KGraph& h) {
    ReachabilityReport rep;
    for (int v = 0; v < h.vertex_count(); ++v)
        if (h.is_isolated(v)) {
            rep.verdict = ReachabilityVerdict::HypothesesUnmet;
            rep.detail = "isolated vertex " + std::to_string(v);
            return rep;
        }
    if (!is_tightly_connected(h)) {
        rep.verdict = ReachabilityVerdict::HypothesesUnmet;
        rep.detail = "not tightly connected";
        return rep;
    }
    Partition parts;
    if (h.partition() && h.partition()->size() >= 2) parts = *h.partition();
    else {
        std::vector<int> all(static_cast<size_t>(h.vertex_count()));
        std::iota(all.begin(), all.end(), 0);
        parts.push_back(all);
    }
    if (parts.size() == 1) {
        TightComponents comps = tight_components(h);
        if (comps.count != 1 || !period(h, comps, 0).aperiodic_mod_k) {
            rep.verdict = ReachabilityVerdict::HypothesesUnmet;
            rep.detail = "r=1 requires an aperiodic tightly connected hypergraph";
            return rep;
        }
    }
    Graph hat = hat_graph(h);
    for (size_t pi = 0; pi < parts.size(); ++pi) {
        const auto& part = parts[pi];
        UnionFind uf(h.vertex_count());
        for (auto [u, v] : hat.edges())
            if (std::binary_search(part.begin(), part.end(), u) &&
                std::binary_search(part.begin(), part.end(), v))
                uf.unite(u, v);
        for (size_t i = 1; i < part.size(); ++i)
            if (uf.find(part[i]) != uf.find(part[0])) {
                rep.verdict = ReachabilityVerdict::Fails;
                rep.detail = "hat graph disconnected inside part " + std::to_string(pi);
                return rep;
            }
    }
    rep.verdict = ReachabilityVerdict::Holds;
    return rep;
}

} // namespace tightframe
