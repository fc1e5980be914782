#include "tightframe/kgraph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "tightframe/errors.hpp"
#include <nlohmann/json.hpp>

namespace tightframe {

using ordered_json = nlohmann::ordered_json;

KGraph KGraph::from_edges(int k, int n, std::vector<std::vector<int>> edges,
                          const std::optional<Partition>& partition) {
    if (k < 1) throw InputError("uniformity must be at least 1");
    KGraph h(k, n);
    for (auto& e : edges) {
        if (static_cast<int>(e.size()) != k)
            throw InputError("edge of size " + std::to_string(e.size()) + " in a " +
                             std::to_string(k) + "-graph");
        std::sort(e.begin(), e.end());
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0 || e[i] >= n) throw InputError("edge vertex out of range");
            if (i > 0 && e[i] == e[i - 1]) throw InputError("repeated vertex in edge");
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    h.edges_ = std::move(edges);
    h.degree_.assign(static_cast<size_t>(n), 0);
    for (const auto& e : h.edges_)
        for (int v : e) ++h.degree_[static_cast<size_t>(v)];
    if (partition) {
        std::vector<int> owner(static_cast<size_t>(n), -1);
        for (size_t p = 0; p < partition->size(); ++p)
            for (int v : (*partition)[p]) {
                if (v < 0 || v >= n) throw InputError("partition vertex out of range");
                if (owner[static_cast<size_t>(v)] != -1) throw InputError("partition parts overlap");
                owner[static_cast<size_t>(v)] = static_cast<int>(p);
            }
        if (partition->size() >= 2)
            for (const auto& e : h.edges_) {
                std::set<int> parts_seen;
                for (int v : e)
                    if (!parts_seen.insert(owner[static_cast<size_t>(v)]).second)
                        throw InputError("edge with two vertices in one part");
            }
        h.partition_ = *partition;
    }
    return h;
}

bool KGraph::has_edge(const std::vector<int>& sorted_vertices) const {
    return std::binary_search(edges_.begin(), edges_.end(), sorted_vertices);
}

int KGraph::edge_index(const std::vector<int>& sorted_vertices) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), sorted_vertices);
    if (it == edges_.end() || *it != sorted_vertices) return -1;
    return static_cast<int>(it - edges_.begin());
}

int KGraph::degree(int v) const {
    if (v < 0 || v >= n_) throw InputError("vertex out of range");
    return degree_.at(static_cast<size_t>(v));
}

KGraph KGraph::with_partition(const Partition& parts) const {
    return KGraph::from_edges(k_, n_, edges_, parts);
}

namespace {

// cliques extending `current` by vertices from `candidates` (sorted by order)
void extend_cliques(const Graph& g, const std::vector<int>& order_pos, std::vector<int>& current,
                    std::vector<int>& candidates, int want, std::vector<std::vector<int>>& out) {
    if (want == 0) {
        std::vector<int> e = current;
        std::sort(e.begin(), e.end());
        out.push_back(std::move(e));
        return;
    }
    if (static_cast<int>(candidates.size()) < want) return;
    for (size_t i = 0; i < candidates.size(); ++i) {
        int v = candidates[i];
        std::vector<int> next;
        for (size_t j = i + 1; j < candidates.size(); ++j)
            if (g.has_edge(v, candidates[j])) next.push_back(candidates[j]);
        current.push_back(v);
        extend_cliques(g, order_pos, current, next, want - 1, out);
        current.pop_back();
    }
}

std::vector<int> degeneracy_order(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> deg(static_cast<size_t>(n));
    std::vector<char> removed(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v) deg[static_cast<size_t>(v)] = g.degree(v);
    std::vector<int> order;
    order.reserve(static_cast<size_t>(n));
    std::set<std::pair<int, int>> pq;  // (degree, vertex)
    for (int v = 0; v < n; ++v) pq.insert({deg[static_cast<size_t>(v)], v});
    while (!pq.empty()) {
        auto [d, v] = *pq.begin();
        pq.erase(pq.begin());
        (void)d;
        removed[static_cast<size_t>(v)] = 1;
        order.push_back(v);
        for (int u : g.neighbors(v))
            if (!removed[static_cast<size_t>(u)]) {
                pq.erase({deg[static_cast<size_t>(u)], u});
                --deg[static_cast<size_t>(u)];
                pq.insert({deg[static_cast<size_t>(u)], u});
            }
    }
    return order;
}

} // namespace

KGraph build_clique_hypergraph(const Graph& g, int k) {
    if (k < 2) throw InputError("clique hypergraph needs k >= 2");
    int n = g.vertex_count();
    std::vector<std::vector<int>> edges;
    if (k == 2) {
        for (auto [u, v] : g.edges()) edges.push_back({u, v});
    } else {
        std::vector<int> order = degeneracy_order(g);
        std::vector<int> pos(static_cast<size_t>(n));
        for (size_t i = 0; i < order.size(); ++i) pos[static_cast<size_t>(order[i])] = static_cast<int>(i);
        for (int v : order) {
            std::vector<int> cands;
            for (int u : g.neighbors(v))
                if (pos[static_cast<size_t>(u)] > pos[static_cast<size_t>(v)]) cands.push_back(u);
            std::sort(cands.begin(), cands.end(),
                      [&](int a, int b) { return pos[static_cast<size_t>(a)] < pos[static_cast<size_t>(b)]; });
            std::vector<int> current = {v};
            extend_cliques(g, pos, current, cands, k - 1, edges);
        }
    }
    return KGraph::from_edges(k, n, std::move(edges), g.partition());
}

KGraph link_graph(const KGraph& h, int v) {
    if (v < 0 || v >= h.vertex_count()) throw InputError("link vertex out of range");
    std::vector<std::vector<int>> edges;
    for (const auto& e : h.edges()) {
        if (!std::binary_search(e.begin(), e.end(), v)) continue;
        std::vector<int> rest;
        for (int u : e)
            if (u != v) rest.push_back(u);
        edges.push_back(std::move(rest));
    }
    return KGraph::from_edges(h.k() - 1, h.vertex_count(), std::move(edges));
}

namespace {

void subsets_of(const std::vector<int>& e, int i, size_t start, std::vector<int>& cur,
                std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == i) {
        out.push_back(cur);
        return;
    }
    for (size_t j = start; j < e.size(); ++j) {
        cur.push_back(e[j]);
        subsets_of(e, i, j + 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

KGraph shadow(const KGraph& h, int i) {
    if (i < 1 || i > h.k()) throw InputError("shadow index out of range");
    std::vector<std::vector<int>> edges;
    std::vector<int> cur;
    for (const auto& e : h.edges()) subsets_of(e, i, 0, cur, edges);
    return KGraph::from_edges(i, h.vertex_count(), std::move(edges));
}

LinkedEdgeProfile linked_edge_profile(const KGraph& h) {
    int n = h.vertex_count();
    // For v in f: any linked edge e has e∩f = f\{v}, so e = (f\{v}) ∪ {w}.
    std::map<std::vector<int>, std::vector<int>> completions;  // (k-1)-set -> vertices w
    for (const auto& e : h.edges())
        for (size_t i = 0; i < e.size(); ++i) {
            std::vector<int> s;
            s.reserve(e.size() - 1);
            for (size_t j = 0; j < e.size(); ++j)
                if (j != i) s.push_back(e[j]);
            completions[s].push_back(e[i]);
        }
    std::vector<std::set<int>> linked(static_cast<size_t>(n));  // edge indices per vertex
    for (const auto& e : h.edges())
        for (size_t i = 0; i < e.size(); ++i) {
            int v = e[i];
            std::vector<int> s;
            for (size_t j = 0; j < e.size(); ++j)
                if (j != i) s.push_back(e[j]);
            auto it = completions.find(s);
            if (it == completions.end()) continue;
            for (int w : it->second) {
                if (w == v) continue;
                std::vector<int> other = s;
                other.insert(std::lower_bound(other.begin(), other.end(), w), w);
                linked[static_cast<size_t>(v)].insert(h.edge_index(other));
            }
        }
    LinkedEdgeProfile profile;
    profile.counts.resize(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) profile.counts[static_cast<size_t>(v)] = static_cast<long long>(linked[static_cast<size_t>(v)].size());
    profile.min_count = n == 0 ? 0 : *std::min_element(profile.counts.begin(), profile.counts.end());
    return profile;
}

bool LinkedEdgeProfile::meets_threshold(const Rational& mu, int n, int k) const {
    Rational bound = mu;
    for (int i = 0; i < k; ++i) bound *= Rational(n);
    for (long long c : counts)
        if (Rational(c) < bound) return false;
    return true;
}

Graph hat_graph(const KGraph& h) {
    // x,y joined when some (k-1)-set S has both S∪{x} and S∪{y} as edges
    std::map<std::vector<int>, std::vector<int>> completions;
    for (const auto& e : h.edges())
        for (size_t i = 0; i < e.size(); ++i) {
            std::vector<int> s;
            for (size_t j = 0; j < e.size(); ++j)
                if (j != i) s.push_back(e[j]);
            completions[s].push_back(e[i]);
        }
    std::set<std::pair<int, int>> pairs;
    for (auto& [s, ws] : completions) {
        (void)s;
        std::sort(ws.begin(), ws.end());
        for (size_t a = 0; a < ws.size(); ++a)
            for (size_t b = a + 1; b < ws.size(); ++b) pairs.insert({ws[a], ws[b]});
    }
    std::vector<std::pair<int, int>> edges(pairs.begin(), pairs.end());
    return Graph::from_edges(h.vertex_count(), edges);
}

std::optional<std::vector<int>> find_k_plus_1_clique(const KGraph& h) {
    int k = h.k();
    // candidates must have positive degree; all pairs must lie in the 2-shadow
    std::vector<int> cands;
    for (int v = 0; v < h.vertex_count(); ++v)
        if (h.degree(v) > 0) cands.push_back(v);
    KGraph sh2 = k >= 2 ? shadow(h, 2) : KGraph();
    auto pair_ok = [&](int a, int b) {
        std::vector<int> p = {std::min(a, b), std::max(a, b)};
        return sh2.has_edge(p);
    };
    std::vector<int> pick;
    std::function<std::optional<std::vector<int>>(size_t)> rec =
        [&](size_t start) -> std::optional<std::vector<int>> {
        if (static_cast<int>(pick.size()) == k + 1) {
            // all k-subsets must be edges
            std::vector<int> sub;
            for (int skip = 0; skip <= k; ++skip) {
                sub.clear();
                for (int i = 0; i <= k; ++i)
                    if (i != skip) sub.push_back(pick[static_cast<size_t>(i)]);
                if (!h.has_edge(sub)) return std::nullopt;
            }
            return pick;
        }
        for (size_t i = start; i < cands.size(); ++i) {
            int v = cands[i];
            bool ok = true;
            for (int u : pick)
                if (!pair_ok(u, v)) { ok = false; break; }
            if (!ok) continue;
            pick.push_back(v);
            auto r = rec(i + 1);
            if (r) return r;
            pick.pop_back();
        }
        return std::nullopt;
    };
    return rec(0);
}

std::string kgraph_to_json(const KGraph& h) {
    ordered_json j;
    j["k"] = h.k();
    j["n"] = h.vertex_count();
    j["edges"] = ordered_json::array();
    for (const auto& e : h.edges()) j["edges"].push_back(e);
    if (h.partition()) j["partition"] = *h.partition();
    return j.dump();
}

KGraph parse_kgraph_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw InputError(std::string("bad kgraph json: ") + e.what());
    }
    int k = j.at("k").get<int>();
    int n = j.at("n").get<int>();
    std::vector<std::vector<int>> edges;
    if (j.contains("edges"))
        for (const auto& e : j["edges"]) edges.push_back(e.get<std::vector<int>>());
    std::optional<Partition> partition;
    if (j.contains("partition") && !j["partition"].is_null()) {
        Partition parts;
        for (const auto& p : j["partition"]) parts.push_back(p.get<std::vector<int>>());
        partition = parts;
    }
    return KGraph::from_edges(k, n, std::move(edges), partition);
}

KGraph induce_kgraph(const KGraph& h, const std::vector<int>& vertices) {
    std::vector<int> new_id(static_cast<size_t>(h.vertex_count()), -1);
    for (size_t i = 0; i < vertices.size(); ++i) new_id[static_cast<size_t>(vertices[i])] = static_cast<int>(i);
    std::vector<std::vector<int>> edges;
    for (const auto& e : h.edges()) {
        std::vector<int> mapped;
        bool keep = true;
        for (int v : e) {
            if (new_id[static_cast<size_t>(v)] < 0) { keep = false; break; }
            mapped.push_back(new_id[static_cast<size_t>(v)]);
        }
        if (keep) edges.push_back(std::move(mapped));
    }
    std::optional<Partition> partition;
    if (h.partition()) {
        Partition parts;
        for (const auto& p : *h.partition()) {
            std::vector<int> kept;
            for (int v : p)
                if (new_id[static_cast<size_t>(v)] >= 0) kept.push_back(new_id[static_cast<size_t>(v)]);
            if (!kept.empty()) parts.push_back(kept);
        }
        if (!parts.empty()) partition = parts;
    }
    return KGraph::from_edges(h.k(), static_cast<int>(vertices.size()), std::move(edges), partition);
}

} // namespace tightframe
