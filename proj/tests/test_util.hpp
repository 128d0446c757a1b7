#pragma once

#include <numeric>
#include <vector>

#include "nkt/graph.hpp"

namespace nkt::testutil {

/// Relabels vertices: vertex v of g becomes perm[v].
inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph(g.vertex_count(), std::move(edges));
}

/// Deterministic pseudo-random permutation of 0..n-1.
inline std::vector<int> permutation(int n, uint64_t seed) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    uint64_t state = seed;
    auto next = [&state] {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    };
    for (int i = n - 1; i > 0; --i) std::swap(p[i], p[next() % (i + 1)]);
    return p;
}

/// A small pool of deterministic random graphs for property tests.
inline std::vector<Graph> random_graphs(int count, int max_n, uint64_t seed) {
    std::vector<Graph> out;
    for (int i = 0; i < count; ++i) {
        int n = 1 + static_cast<int>((seed * 31 + i * 7) % max_n);
        int max_m = n * (n - 1) / 2;
        int m = static_cast<int>((i * 13 + 5) % (max_m + 1));
        out.push_back(gnm_random_graph(n, m, seed + i));
    }
    return out;
}

}  // namespace nkt::testutil
