#include "tightframe/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "tightframe/errors.hpp"
#include <nlohmann/json.hpp>

namespace tightframe {

using ordered_json = nlohmann::ordered_json;

void Graph::add_edge_checked(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw InputError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v)) throw InputError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    adj_[static_cast<size_t>(u)].push_back(v);
    adj_[static_cast<size_t>(v)].push_back(u);
    ++m_;
}

void Graph::set_partition_checked(const Partition& parts) {
    std::vector<int> owner(static_cast<size_t>(n_), -1);
    for (size_t p = 0; p < parts.size(); ++p) {
        if (parts[p].empty()) throw InputError("empty partition part");
        for (int v : parts[p]) {
            if (v < 0 || v >= n_) throw InputError("partition vertex out of range: " + std::to_string(v));
            if (owner[static_cast<size_t>(v)] != -1)
                throw InputError("partition parts not disjoint at vertex " + std::to_string(v));
            owner[static_cast<size_t>(v)] = static_cast<int>(p);
        }
    }
    for (int v = 0; v < n_; ++v)
        if (owner[static_cast<size_t>(v)] == -1)
            throw InputError("partition does not cover vertex " + std::to_string(v));
    if (parts.size() >= 2) {
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[static_cast<size_t>(u)])
                if (u < v && owner[static_cast<size_t>(u)] == owner[static_cast<size_t>(v)])
                    throw InputError("edge inside a partition part: " + std::to_string(u) + " " +
                                     std::to_string(v));
    }
    Partition sorted = parts;
    for (auto& p : sorted) std::sort(p.begin(), p.end());
    partition_ = std::move(sorted);
    part_of_ = std::move(owner);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                        const std::optional<Partition>& partition) {
    if (n < 0) throw InputError("negative vertex count");
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge_checked(u, v);
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    if (partition) g.set_partition_checked(*partition);
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    const auto& a = adj_[static_cast<size_t>(u)];
    const auto& b = adj_[static_cast<size_t>(v)];
    const auto& small = a.size() <= b.size() ? a : b;
    int target = a.size() <= b.size() ? v : u;
    return std::binary_search(small.begin(), small.end(), target);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[static_cast<size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::degrees_sorted() const {
    std::vector<int> d(static_cast<size_t>(n_));
    for (int v = 0; v < n_; ++v) d[static_cast<size_t>(v)] = degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

int Graph::part_of(int v) const {
    if (!partition_) return -1;
    return part_of_.at(static_cast<size_t>(v));
}

int Graph::degree_into(int v, const std::vector<int>& part) const {
    const auto& nb = adj_.at(static_cast<size_t>(v));
    int count = 0;
    for (int u : nb)
        if (std::binary_search(part.begin(), part.end(), u)) ++count;
    return count;
}

void Graph::require_sized_partition(int k) const {
    if (!partition_) return;  // treated as the trivial r=1 partition
    size_t r = partition_->size();
    if (r != 1 && static_cast<int>(r) != k)
        throw InputError("partition has r=" + std::to_string(r) + " parts; expected 1 or k=" +
                         std::to_string(k));
    size_t size0 = (*partition_)[0].size();
    for (const auto& p : *partition_)
        if (p.size() != size0) throw InputError("partition parts are not equally sized");
}

namespace {

std::optional<Partition> parse_partition_header(const std::string& line) {
    // "# partition: a,b,c|d,e,f"
    auto pos = line.find("partition:");
    if (pos == std::string::npos) return std::nullopt;
    std::string body = line.substr(pos + 10);
    Partition parts;
    std::vector<int> cur;
    std::string num;
    auto flush_num = [&]() {
        if (!num.empty()) {
            cur.push_back(std::stoi(num));
            num.clear();
        }
    };
    for (char c : body) {
        if (c >= '0' && c <= '9') num += c;
        else if (c == ',') flush_num();
        else if (c == '|') { flush_num(); parts.push_back(cur); cur.clear(); }
        else if (c == ' ' || c == '\t' || c == '\r') flush_num();
        else throw InputError(std::string("bad character in partition header: ") + c);
    }
    flush_num();
    if (!cur.empty()) parts.push_back(cur);
    if (parts.empty()) return std::nullopt;
    return parts;
}

} // namespace

Graph parse_graph_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::pair<int, int>> edges;
    std::optional<Partition> partition;
    int max_id = -1;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        if (line[0] == '#') {
            auto p = parse_partition_header(line);
            if (p) partition = p;
            continue;
        }
        std::istringstream ls(line);
        long long u, v;
        if (!(ls >> u >> v)) throw InputError("malformed edge line: " + line);
        std::string rest;
        if (ls >> rest) throw InputError("trailing tokens on edge line: " + line);
        if (u < 0 || v < 0) throw InputError("negative vertex id: " + line);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        max_id = std::max(max_id, static_cast<int>(std::max(u, v)));
    }
    if (partition)
        for (const auto& p : *partition)
            for (int v : p) max_id = std::max(max_id, v);
    return Graph::from_edges(max_id + 1, edges, partition);
}

Graph parse_graph_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw InputError(std::string("bad graph json: ") + e.what());
    }
    if (!j.contains("n")) throw InputError("graph json missing \"n\"");
    int n = j["n"].get<int>();
    std::vector<std::pair<int, int>> edges;
    if (j.contains("edges"))
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2) throw InputError("graph json edge is not a pair");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
    std::optional<Partition> partition;
    if (j.contains("partition") && !j["partition"].is_null()) {
        Partition parts;
        for (const auto& p : j["partition"]) parts.push_back(p.get<std::vector<int>>());
        partition = parts;
    }
    return Graph::from_edges(n, edges, partition);
}

Graph load_graph(const std::string& path, GraphFormat format) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return format == GraphFormat::EdgeList ? parse_graph_edge_list(buf.str())
                                           : parse_graph_json(buf.str());
}

std::string graph_to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "# n: " << g.vertex_count() << "\n";
    if (g.partition()) {
        out << "# partition: ";
        const auto& parts = *g.partition();
        for (size_t p = 0; p < parts.size(); ++p) {
            if (p) out << "|";
            for (size_t i = 0; i < parts[p].size(); ++i) {
                if (i) out << ",";
                out << parts[p][i];
            }
        }
        out << "\n";
    }
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

std::string graph_to_json(const Graph& g) {
    ordered_json j;
    j["n"] = g.vertex_count();
    j["edges"] = ordered_json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    if (g.partition()) j["partition"] = *g.partition();
    return j.dump();
}

void save_graph(const Graph& g, const std::string& path, GraphFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << (format == GraphFormat::EdgeList ? graph_to_edge_list(g) : graph_to_json(g));
}

Graph blow_up(const Graph& base, const std::vector<int>& sizes) {
    if (static_cast<int>(sizes.size()) != base.vertex_count())
        throw InputError("blow_up needs one size per base vertex");
    for (int s : sizes)
        if (s <= 0) throw InputError("blow_up sizes must be positive");
    std::vector<int> offset(sizes.size() + 1, 0);
    for (size_t i = 0; i < sizes.size(); ++i) offset[i + 1] = offset[i] + sizes[i];
    int n = offset.back();
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : base.edges())
        for (int u = offset[static_cast<size_t>(a)]; u < offset[static_cast<size_t>(a) + 1]; ++u)
            for (int v = offset[static_cast<size_t>(b)]; v < offset[static_cast<size_t>(b) + 1]; ++v)
                edges.emplace_back(u, v);
    Partition clusters;
    for (size_t i = 0; i < sizes.size(); ++i) {
        std::vector<int> part;
        for (int v = offset[i]; v < offset[i + 1]; ++v) part.push_back(v);
        clusters.push_back(std::move(part));
    }
    return Graph::from_edges(n, edges, clusters);
}

Subgraph Subgraph::full(const Graph& host) {
    Subgraph s;
    s.vertices.resize(static_cast<size_t>(host.vertex_count()));
    for (int v = 0; v < host.vertex_count(); ++v) s.vertices[static_cast<size_t>(v)] = v;
    s.edges = host.edges();
    return s;
}

InducedGraph materialize(const Graph& host, const Subgraph& sub) {
    std::vector<int> new_id(static_cast<size_t>(host.vertex_count()), -1);
    for (size_t i = 0; i < sub.vertices.size(); ++i)
        new_id[static_cast<size_t>(sub.vertices[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : sub.edges) {
        int a = new_id[static_cast<size_t>(u)], b = new_id[static_cast<size_t>(v)];
        if (a < 0 || b < 0) throw InputError("subgraph edge endpoint not in vertex set");
        edges.emplace_back(a, b);
    }
    std::optional<Partition> partition;
    if (host.partition()) {
        Partition parts;
        for (const auto& p : *host.partition()) {
            std::vector<int> kept;
            for (int v : p)
                if (new_id[static_cast<size_t>(v)] >= 0) kept.push_back(new_id[static_cast<size_t>(v)]);
            if (!kept.empty()) parts.push_back(kept);
        }
        if (!parts.empty()) partition = parts;
    }
    InducedGraph out;
    out.graph = Graph::from_edges(static_cast<int>(sub.vertices.size()), edges, partition);
    out.old_id = sub.vertices;
    return out;
}

ApproximationReport is_approximation(const Graph& host, const Subgraph& sub, const Rational& eps,
                                     const Rational& d) {
    // subgraph validation
    std::vector<char> alive(static_cast<size_t>(host.vertex_count()), 0);
    for (int v : sub.vertices) {
        if (v < 0 || v >= host.vertex_count()) throw InputError("subgraph vertex out of range");
        alive[static_cast<size_t>(v)] = 1;
    }
    std::vector<std::vector<int>> sub_adj(static_cast<size_t>(host.vertex_count()));
    for (auto [u, v] : sub.edges) {
        if (!alive[static_cast<size_t>(u)] || !alive[static_cast<size_t>(v)])
            throw InputError("subgraph edge endpoint not in vertex set");
        if (!host.has_edge(u, v))
            throw InputError("subgraph edge not present in host: " + std::to_string(u) + " " +
                             std::to_string(v));
        sub_adj[static_cast<size_t>(u)].push_back(v);
        sub_adj[static_cast<size_t>(v)].push_back(u);
    }
    for (auto& a : sub_adj) std::sort(a.begin(), a.end());

    Partition parts;
    if (host.partition()) parts = *host.partition();
    else {
        std::vector<int> all(static_cast<size_t>(host.vertex_count()));
        for (int v = 0; v < host.vertex_count(); ++v) all[static_cast<size_t>(v)] = v;
        parts.push_back(all);
    }

    ApproximationReport rep;
    // (i) deg_{G'}(v;U) >= deg_G(v;U) - d|U|
    for (const auto& part : parts) {
        Rational budget = d * Rational(static_cast<long long>(part.size()));
        for (int v : sub.vertices) {
            int host_deg = host.degree_into(v, part);
            int sub_deg = 0;
            for (int u : sub_adj[static_cast<size_t>(v)])
                if (std::binary_search(part.begin(), part.end(), u)) ++sub_deg;
            if (Rational(sub_deg) < Rational(host_deg) - budget) {
                rep.violated_clause = 1;
                rep.detail = "vertex " + std::to_string(v) + " lost " +
                             std::to_string(host_deg - sub_deg) + " neighbours in a part of size " +
                             std::to_string(part.size());
                return rep;
            }
        }
    }
    // (ii) |V' ∩ U| >= (1-eps)|U| and (iii) equal across parts
    long long first_kept = -1;
    for (size_t pi = 0; pi < parts.size(); ++pi) {
        long long kept = 0;
        for (int v : parts[pi])
            if (alive[static_cast<size_t>(v)]) ++kept;
        if (Rational(kept) < (Rational(1) - eps) * Rational(static_cast<long long>(parts[pi].size()))) {
            rep.violated_clause = 2;
            rep.detail = "part " + std::to_string(pi) + " keeps " + std::to_string(kept) + " of " +
                         std::to_string(parts[pi].size());
            return rep;
        }
        if (first_kept < 0) first_kept = kept;
        else if (kept != first_kept) {
            rep.violated_clause = 3;
            rep.detail = "part " + std::to_string(pi) + " keeps " + std::to_string(kept) +
                         " vertices but an earlier part keeps " + std::to_string(first_kept);
            return rep;
        }
    }
    rep.ok = true;
    return rep;
}

} // namespace tightframe
