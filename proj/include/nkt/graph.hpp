#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nkt {

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Edge = std::pair<int, int>;  // canonical: first < second

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : Graph(n, {}) {}

    /// Validates and canonicalizes the edge list: rejects out-of-range
    /// endpoints, self-loops and duplicate edges.
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& degrees() const { return degrees_; }

    int degree(int v) const { return degrees_.at(v); }
    bool adjacent(int u, int v) const {
        return u != v && matrix_[static_cast<size_t>(u) * n_ + v] != 0;
    }
    bool has_vertex(int v) const { return v >= 0 && v < n_; }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> degrees_;
    std::vector<uint8_t> matrix_;  // n*n adjacency, symmetric
};

// --- parsing / formatting ---

/// Edge-list text: first line "n m", then m lines "u v".
Graph parse_edge_list(const std::string& text);
std::string format_edge_list(const Graph& g);

/// DOT export, one line per edge "u -- v".
std::string to_dot(const Graph& g);

/// Stable content hash of (n, sorted edge list); 16 hex digits.
std::string graph_hash(const Graph& g);

// --- generators ---

Graph path_graph(int n);                       // n >= 1
Graph cycle_graph(int n);                      // n >= 3
Graph complete_graph(int n);                   // n >= 0
Graph star_graph(int n);                       // n >= 1, center is vertex 0
Graph complete_bipartite_graph(int a, int b);  // a, b >= 1
Graph gnm_random_graph(int n, int m, uint64_t seed);

// --- structural queries ---

Graph complement(const Graph& g);
bool is_connected(const Graph& g);
std::optional<int> is_regular(const Graph& g);

/// Visits every labeled simple graph on n vertices (1 <= n <= 8), each
/// exactly once, in a fixed deterministic order.
void for_each_graph(int n, bool connected_only,
                    const std::function<void(const Graph&)>& visit);

}  // namespace nkt
