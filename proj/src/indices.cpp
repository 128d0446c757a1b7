#include "nkt/indices.hpp"

#include <stdexcept>

namespace nkt {

long long m1(const Graph& g) {
    long long vertex_form = 0;
    for (int d : g.degrees()) vertex_form += static_cast<long long>(d) * d;
    long long edge_form = 0;
    for (const auto& [u, v] : g.edges()) edge_form += g.degree(u) + g.degree(v);
    if (vertex_form != edge_form)
        throw std::logic_error("M1 vertex-form and edge-form disagree");
    return vertex_form;
}

long long m2(const Graph& g) {
    long long sum = 0;
    for (const auto& [u, v] : g.edges())
        sum += static_cast<long long>(g.degree(u)) * g.degree(v);
    return sum;
}

BigNat nk(const Graph& g) {
    BigNat p = 1;
    for (int d : g.degrees()) p *= d;
    return p;
}

BigNat pi1(const Graph& g) {
    BigNat p = 1;
    for (int d : g.degrees()) p *= static_cast<long long>(d) * d;
    return p;
}

BigNat pi2(const Graph& g) {
    BigNat p = 1;
    for (const auto& [u, v] : g.edges())
        p *= static_cast<long long>(g.degree(u)) * g.degree(v);
    return p;
}

BigNat pi1star(const Graph& g) {
    BigNat p = 1;
    for (const auto& [u, v] : g.edges()) p *= g.degree(u) + g.degree(v);
    return p;
}

IndexReport compute_indices(const Graph& g) {
    IndexReport r;
    r.n = g.vertex_count();
    r.m = g.edge_count();
    r.m1 = m1(g);
    r.m2 = m2(g);
    r.nk = nk(g);
    r.pi1 = pi1(g);
    r.pi2 = pi2(g);
    r.pi1star = pi1star(g);
    return r;
}

}  // namespace nkt
