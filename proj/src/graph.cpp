#include "nkt/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace nkt {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw GraphError("vertex count must be non-negative");
    degrees_.assign(n, 0);
    matrix_.assign(static_cast<size_t>(n) * n, 0);
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw GraphError("vertex out of range: " + std::to_string(u) + " " +
                             std::to_string(v));
        if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (matrix_[static_cast<size_t>(u) * n + v])
            throw GraphError("duplicate edge " + std::to_string(u) + "-" +
                             std::to_string(v));
        matrix_[static_cast<size_t>(u) * n + v] = 1;
        matrix_[static_cast<size_t>(v) * n + u] = 1;
        ++degrees_[u];
        ++degrees_[v];
    }
    std::sort(edges.begin(), edges.end());
    edges_ = std::move(edges);
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw GraphError("empty input");
    std::istringstream header(line);
    int n = 0, m = 0;
    if (!(header >> n >> m)) throw GraphError("malformed header line: " + line);
    std::string extra;
    if (header >> extra) throw GraphError("malformed header line: " + line);
    std::vector<Edge> edges;
    edges.reserve(m);
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::istringstream es(line);
        int u = 0, v = 0;
        if (!(es >> u >> v) || (es >> extra))
            throw GraphError("malformed edge line " + std::to_string(lineno) +
                             ": " + line);
        edges.emplace_back(u, v);
    }
    if (static_cast<int>(edges.size()) != m)
        throw GraphError("edge count mismatch: header says " + std::to_string(m) +
                         ", got " + std::to_string(edges.size()));
    return Graph(n, std::move(edges));
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph {\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) out << "  " << v << ";\n";
    for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string graph_hash(const Graph& g) {
    uint64_t h = 1469598103934665603ull;  // FNV-1a
    auto mix = [&h](uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(static_cast<uint64_t>(g.vertex_count()));
    for (const auto& [u, v] : g.edges()) {
        mix(static_cast<uint64_t>(u));
        mix(static_cast<uint64_t>(v));
    }
    static const char* hex = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = hex[h & 0xf];
        h >>= 4;
    }
    return s;
}

Graph path_graph(int n) {
    if (n < 1) throw GraphError("path requires n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

Graph cycle_graph(int n) {
    if (n < 3) throw GraphError("cycle requires n >= 3");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(0, n - 1);
    return Graph(n, std::move(e));
}

Graph complete_graph(int n) {
    if (n < 0) throw GraphError("complete graph requires n >= 0");
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, std::move(e));
}

Graph star_graph(int n) {
    if (n < 1) throw GraphError("star requires n >= 1");
    std::vector<Edge> e;
    for (int v = 1; v < n; ++v) e.emplace_back(0, v);
    return Graph(n, std::move(e));
}

Graph complete_bipartite_graph(int a, int b) {
    if (a < 1 || b < 1) throw GraphError("complete bipartite requires a, b >= 1");
    std::vector<Edge> e;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
    return Graph(a + b, std::move(e));
}

namespace {

// splitmix64; kept local so gnm output is identical across platforms.
struct SplitMix64 {
    uint64_t state;
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    uint64_t below(uint64_t bound) { return next() % bound; }
};

}  // namespace

Graph gnm_random_graph(int n, int m, uint64_t seed) {
    if (n < 0) throw GraphError("gnm requires n >= 0");
    long long max_m = static_cast<long long>(n) * (n - 1) / 2;
    if (m < 0 || m > max_m)
        throw GraphError("gnm requires 0 <= m <= n(n-1)/2");
    std::vector<Edge> all;
    all.reserve(max_m);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
    SplitMix64 rng{seed};
    // partial Fisher-Yates: first m slots become the sample
    for (int i = 0; i < m; ++i) {
        size_t j = i + rng.below(all.size() - i);
        std::swap(all[i], all[j]);
    }
    all.resize(m);
    return Graph(n, std::move(all));
}

Graph complement(const Graph& g) {
    int n = g.vertex_count();
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) e.emplace_back(u, v);
    return Graph(n, std::move(e));
}

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v = 0; v < n; ++v)
            if (!seen[v] && g.adjacent(u, v)) {
                seen[v] = 1;
                ++reached;
                q.push(v);
            }
    }
    return reached == n;
}

std::optional<int> is_regular(const Graph& g) {
    if (g.vertex_count() == 0) return std::nullopt;
    int r = g.degree(0);
    for (int d : g.degrees())
        if (d != r) return std::nullopt;
    return r;
}

void for_each_graph(int n, bool connected_only,
                    const std::function<void(const Graph&)>& visit) {
    if (n < 1 || n > 8) throw GraphError("enumeration supports 1 <= n <= 8");
    std::vector<Edge> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    const uint64_t total = 1ull << slots.size();
    for (uint64_t mask = 0; mask < total; ++mask) {
        std::vector<Edge> e;
        for (size_t i = 0; i < slots.size(); ++i)
            if (mask & (1ull << i)) e.push_back(slots[i]);
        Graph g(n, std::move(e));
        if (connected_only && !is_connected(g)) continue;
        visit(g);
    }
}

}  // namespace nkt
