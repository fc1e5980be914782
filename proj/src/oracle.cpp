#include "tightframe/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "tightframe/errors.hpp"

namespace tightframe {

namespace {

struct SearchState {
    const Graph* g;
    int k;
    long long budget;
    long long explored = 0;
    bool timed_out = false;
};

bool extend_cycle(SearchState& st, std::vector<int>& order, std::vector<char>& used) {
    int n = st.g->vertex_count();
    if (++st.explored > st.budget) {
        st.timed_out = true;
        return false;
    }
    int pos = static_cast<int>(order.size());
    if (pos == n) {
        // wrap windows: last k-1 against first k-1
        for (int i = n - st.k + 1; i < n; ++i)
            for (int j = i + 1; j < i + st.k; ++j) {
                int u = order[static_cast<size_t>(i % n)];
                int v = order[static_cast<size_t>(j % n)];
                if (i != j && !st.g->has_edge(u, v)) return false;
            }
        return true;
    }
    for (int v = 0; v < n; ++v) {
        if (used[static_cast<size_t>(v)]) continue;
        // symmetry break: direction fixed by order[1] < order[n-1]
        if (pos == n - 1 && order.size() > 1 && v < order[1]) continue;
        bool ok = true;
        for (int back = 1; back < st.k && back <= pos && ok; ++back)
            if (!st.g->has_edge(order[static_cast<size_t>(pos - back)], v)) ok = false;
        if (!ok) continue;
        order.push_back(v);
        used[static_cast<size_t>(v)] = 1;
        if (extend_cycle(st, order, used)) return true;
        order.pop_back();
        used[static_cast<size_t>(v)] = 0;
        if (st.timed_out) return false;
    }
    return false;
}

} // namespace

OracleVerdict find_power_ham_cycle(const Graph& g, int k, long long budget) {
    OracleVerdict verdict;
    int n = g.vertex_count();
    if (n == 0 || k < 2) return verdict;
    if (n < k) return verdict;  // no tight window fits
    SearchState st{&g, k, budget, 0, false};
    // anchor the cyclic order at a minimum-degree vertex
    int anchor = 0;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) < g.degree(anchor)) anchor = v;
    std::vector<int> order = {anchor};
    std::vector<char> used(static_cast<size_t>(n), 0);
    used[static_cast<size_t>(anchor)] = 1;
    bool found = extend_cycle(st, order, used);
    verdict.nodes_explored = st.explored;
    verdict.timed_out = st.timed_out;
    if (found) {
        verdict.found = true;
        verdict.witness = order;
        if (!verify_power_ham_cycle(g, order, k))
            throw std::logic_error("oracle produced an invalid cycle power");
    }
    return verdict;
}

bool verify_power_ham_cycle(const Graph& g, const std::vector<int>& order, int k) {
    int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n) throw InputError("order must list every vertex once");
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int v : order) {
        if (v < 0 || v >= n || seen[static_cast<size_t>(v)]) throw InputError("order is not a permutation");
        seen[static_cast<size_t>(v)] = 1;
    }
    for (int i = 0; i < n; ++i)
        for (int dist = 1; dist < k; ++dist) {
            int j = (i + dist) % n;
            if (i == j) continue;
            int cyc = std::min(dist, n - dist);
            if (cyc == 0) continue;
            if (!g.has_edge(order[static_cast<size_t>(i)], order[static_cast<size_t>(j)])) return false;
        }
    return true;
}

namespace {

bool extend_factor(SearchState& st, std::vector<char>& covered, std::vector<int>& chosen) {
    int n = st.g->vertex_count();
    if (++st.explored > st.budget) {
        st.timed_out = true;
        return false;
    }
    int v = -1;
    for (int u = 0; u < n; ++u)
        if (!covered[static_cast<size_t>(u)]) { v = u; break; }
    if (v < 0) return true;
    // enumerate k-cliques on v among uncovered vertices
    std::vector<int> cands;
    for (int u : st.g->neighbors(v))
        if (u > v && !covered[static_cast<size_t>(u)]) cands.push_back(u);
    std::vector<int> clique = {v};
    std::function<bool(size_t)> rec = [&](size_t start) -> bool {
        if (static_cast<int>(clique.size()) == st.k) {
            for (int u : clique) covered[static_cast<size_t>(u)] = 1;
            for (int u : clique) chosen.push_back(u);
            if (extend_factor(st, covered, chosen)) return true;
            for (int u : clique) covered[static_cast<size_t>(u)] = 0;
            chosen.resize(chosen.size() - static_cast<size_t>(st.k));
            return false;
        }
        for (size_t i = start; i < cands.size(); ++i) {
            int u = cands[i];
            bool ok = true;
            for (int w : clique)
                if (!st.g->has_edge(w, u)) { ok = false; break; }
            if (!ok) continue;
            clique.push_back(u);
            if (rec(i + 1)) return true;
            clique.pop_back();
            if (st.timed_out) return false;
        }
        return false;
    };
    return rec(0);
}

} // namespace

OracleVerdict find_clique_factor(const Graph& g, int k, long long budget) {
    if (k < 1 || g.vertex_count() % k != 0)
        throw InputError("clique factor needs k dividing the vertex count");
    OracleVerdict verdict;
    SearchState st{&g, k, budget, 0, false};
    std::vector<char> covered(static_cast<size_t>(g.vertex_count()), 0);
    std::vector<int> chosen;
    bool found = extend_factor(st, covered, chosen);
    verdict.nodes_explored = st.explored;
    verdict.timed_out = st.timed_out;
    if (found) {
        verdict.found = true;
        verdict.witness = chosen;
    }
    return verdict;
}

TightComponentsOracle overlap_components(const KGraph& h) {
    int m = h.edge_count();
    std::vector<int> parent(static_cast<size_t>(m));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const auto& a = h.edge(i);
            const auto& b = h.edge(j);
            size_t ai = 0, bi = 0, common = 0;
            while (ai < a.size() && bi < b.size()) {
                if (a[ai] == b[bi]) { ++common; ++ai; ++bi; }
                else if (a[ai] < b[bi]) ++ai;
                else ++bi;
            }
            if (static_cast<int>(common) == h.k() - 1) {
                int ra = find(i), rb = find(j);
                if (ra != rb) parent[static_cast<size_t>(std::max(ra, rb))] = std::min(ra, rb);
            }
        }
    TightComponentsOracle out;
    out.component_of_edge.resize(static_cast<size_t>(m));
    std::map<int, int> relabel;
    for (int e = 0; e < m; ++e) {
        int r = find(e);
        auto it = relabel.find(r);
        if (it == relabel.end()) {
            int id = static_cast<int>(relabel.size());
            relabel[r] = id;
            out.component_of_edge[static_cast<size_t>(e)] = id;
        } else {
            out.component_of_edge[static_cast<size_t>(e)] = it->second;
        }
    }
    out.count = static_cast<int>(relabel.size());
    return out;
}

bool aperiodic_walk_exists_bruteforce(const KGraph& h) {
    int k = h.k();
    // ordered windows, built directly from the edge list
    std::vector<std::vector<int>> states;
    for (const auto& e : h.edges()) {
        std::vector<int> perm = e;
        do states.push_back(perm);
        while (std::next_permutation(perm.begin(), perm.end()));
    }
    std::sort(states.begin(), states.end());
    auto state_id = [&](const std::vector<int>& t) {
        auto it = std::lower_bound(states.begin(), states.end(), t);
        return it != states.end() && *it == t ? static_cast<int>(it - states.begin()) : -1;
    };
    int s_count = static_cast<int>(states.size());
    std::vector<std::vector<int>> succ(static_cast<size_t>(s_count));
    for (int s = 0; s < s_count; ++s) {
        std::vector<int> tail(states[static_cast<size_t>(s)].begin() + 1, states[static_cast<size_t>(s)].end());
        for (int w = 0; w < h.vertex_count(); ++w) {
            if (std::find(tail.begin(), tail.end(), w) != tail.end()) continue;
            std::vector<int> key = tail;
            key.push_back(w);
            std::sort(key.begin(), key.end());
            if (!h.has_edge(key)) continue;
            std::vector<int> next = tail;
            next.push_back(w);
            succ[static_cast<size_t>(s)].push_back(state_id(next));
        }
    }
    // reachability over (state, length mod k) from every start
    for (int s0 = 0; s0 < s_count; ++s0) {
        std::vector<char> seen(static_cast<size_t>(s_count) * static_cast<size_t>(k), 0);
        std::deque<int> queue;
        seen[static_cast<size_t>(s0) * static_cast<size_t>(k)] = 1;
        queue.push_back(s0 * k);
        while (!queue.empty()) {
            int cur = queue.front();
            queue.pop_front();
            int s = cur / k, r = cur % k;
            for (int t : succ[static_cast<size_t>(s)]) {
                int nr = (r + 1) % k;
                if (t == s0 && nr != 0 && std::gcd(nr, k) == 1) return true;
                int nxt = t * k + nr;
                if (!seen[static_cast<size_t>(nxt)]) {
                    seen[static_cast<size_t>(nxt)] = 1;
                    queue.push_back(nxt);
                }
            }
        }
    }
    return false;
}

BruteFrameworkVerdict framework_bruteforce(const Graph& g, const KGraph& h) {
    int k = h.k();
    long long size_guard = 1;
    for (int i = 2; i <= k; ++i) size_guard *= i;
    KGraph ambient_probe = build_clique_hypergraph(g, k);
    if (size_guard * std::max(h.edge_count(), ambient_probe.edge_count()) > 5000)
        throw GuardError("instance too large for the brute-force framework check");

    BruteFrameworkVerdict verdict;
    verdict.spanning = true;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (h.degree(v) == 0) { verdict.spanning = false; break; }

    TightComponentsOracle ambient = overlap_components(ambient_probe);
    verdict.ambient_components = ambient.count;
    verdict.contained_in_component = h.edge_count() > 0;
    int witness = -1;
    for (const auto& e : h.edges()) {
        int idx = ambient_probe.edge_index(e);
        if (idx < 0) throw InputError("hypergraph edge is not a clique of the graph");
        int comp = ambient.component_of_edge[static_cast<size_t>(idx)];
        if (witness == -1) witness = comp;
        else if (witness != comp) { verdict.contained_in_component = false; break; }
    }

    verdict.has_perfect_matching = has_perfect_fractional_matching(h).perfect;
    verdict.aperiodic_walk_exists = aperiodic_walk_exists_bruteforce(h);
    verdict.framework =
        verdict.spanning && verdict.contained_in_component && verdict.has_perfect_matching;
    return verdict;
}

} // namespace tightframe
