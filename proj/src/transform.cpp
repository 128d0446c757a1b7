#include "nkt/transform.hpp"

#include <algorithm>
#include <sstream>

namespace nkt {

std::string_view kind_name(TransformKind k) {
    switch (k) {
        case TransformKind::Total: return "total";
        case TransformKind::SemitotalPoint: return "t1";
        case TransformKind::SemitotalLine: return "t2";
        case TransformKind::Gpp: return "g++";
        case TransformKind::Gpm: return "g+-";
        case TransformKind::Gmp: return "g-+";
        case TransformKind::Gmm: return "g--";
        case TransformKind::Gppp: return "g+++";
        case TransformKind::Gppm: return "g++-";
        case TransformKind::Gpmp: return "g+-+";
        case TransformKind::Gpmm: return "g+--";
        case TransformKind::Gmpp: return "g-++";
        case TransformKind::Gmpm: return "g-+-";
        case TransformKind::Gmmp: return "g--+";
        case TransformKind::Gmmm: return "g---";
    }
    return "?";
}

std::optional<TransformKind> parse_kind(std::string_view name) {
    for (TransformKind k : all_transform_kinds)
        if (kind_name(k) == name) return k;
    return std::nullopt;
}

namespace {

enum class Rule { Keep, Complement, None };

struct AdjacencyRules {
    Rule vv, ee, ve;
};

// For the two-letter family, a drives vertex-vertex, b drives vertex-edge
// incidence and edge-edge pairs are never adjacent; this is the unique
// reading that reproduces all four degree entries m, n-2, n-1, 2, 2d.
AdjacencyRules rules_for(TransformKind k) {
    using K = Rule;
    switch (k) {
        case TransformKind::Total:
        case TransformKind::Gppp: return {K::Keep, K::Keep, K::Keep};
        case TransformKind::SemitotalPoint:
        case TransformKind::Gpp: return {K::Keep, K::None, K::Keep};
        case TransformKind::SemitotalLine: return {K::None, K::Keep, K::Keep};
        case TransformKind::Gpm: return {K::Keep, K::None, K::Complement};
        case TransformKind::Gmp: return {K::Complement, K::None, K::Keep};
        case TransformKind::Gmm: return {K::Complement, K::None, K::Complement};
        case TransformKind::Gppm: return {K::Keep, K::Keep, K::Complement};
        case TransformKind::Gpmp: return {K::Keep, K::Complement, K::Keep};
        case TransformKind::Gpmm: return {K::Keep, K::Complement, K::Complement};
        case TransformKind::Gmpp: return {K::Complement, K::Keep, K::Keep};
        case TransformKind::Gmpm: return {K::Complement, K::Keep, K::Complement};
        case TransformKind::Gmmp: return {K::Complement, K::Complement, K::Keep};
        case TransformKind::Gmmm:
            return {K::Complement, K::Complement, K::Complement};
    }
    throw std::logic_error("unknown transform kind");
}

bool apply(Rule r, bool related) {
    switch (r) {
        case Rule::Keep: return related;
        case Rule::Complement: return !related;
        case Rule::None: return false;
    }
    return false;
}

}  // namespace

TransformedGraph::TransformedGraph(Graph graph, Graph source, TransformKind kind)
    : graph_(std::move(graph)),
      source_(std::move(source)),
      kind_(kind),
      source_hash_(graph_hash(source_)) {}

VertexRole TransformedGraph::role_of(int tv) const {
    int n = source_.vertex_count();
    int m = source_.edge_count();
    if (tv < 0 || tv >= n + m)
        throw GraphError("transformed vertex out of range");
    if (tv < n) return OriginalVertex{tv};
    return OriginalEdge{source_.edges()[tv - n]};
}

int TransformedGraph::vertex_for_role(const VertexRole& role) const {
    int n = source_.vertex_count();
    if (const auto* ov = std::get_if<OriginalVertex>(&role)) {
        if (!source_.has_vertex(ov->v)) throw GraphError("unknown vertex role");
        return ov->v;
    }
    const auto& e = std::get<OriginalEdge>(role).e;
    const auto& edges = source_.edges();
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e) throw GraphError("unknown edge role");
    return n + static_cast<int>(it - edges.begin());
}

int TransformedGraph::degree_of(const VertexRole& role) const {
    return graph_.degree(vertex_for_role(role));
}

TransformedGraph build_transform(const Graph& g, TransformKind kind) {
    const AdjacencyRules rules = rules_for(kind);
    const int n = g.vertex_count();
    const int m = g.edge_count();
    const auto& ge = g.edges();
    std::vector<Edge> edges;
    for (int i = 0; i < n + m; ++i) {
        for (int j = i + 1; j < n + m; ++j) {
            bool adj;
            if (j < n) {
                adj = apply(rules.vv, g.adjacent(i, j));
            } else if (i >= n) {
                const Edge& a = ge[i - n];
                const Edge& b = ge[j - n];
                bool share = a.first == b.first || a.first == b.second ||
                             a.second == b.first || a.second == b.second;
                adj = apply(rules.ee, share);
            } else {
                const Edge& e = ge[j - n];
                bool incident = (i == e.first || i == e.second);
                adj = apply(rules.ve, incident);
            }
            if (adj) edges.emplace_back(i, j);
        }
    }
    return TransformedGraph(Graph(n + m, std::move(edges)), g, kind);
}

std::string to_dot(const TransformedGraph& t) {
    const int n = t.source().vertex_count();
    auto label = [&](int tv) {
        std::ostringstream s;
        if (tv < n) {
            s << "\"v" << tv << "\"";
        } else {
            const Edge& e = t.source().edges()[tv - n];
            s << "\"e" << e.first << "-" << e.second << "\"";
        }
        return s.str();
    };
    std::ostringstream out;
    out << "graph {\n";
    for (int tv = 0; tv < t.graph().vertex_count(); ++tv)
        if (t.graph().degree(tv) == 0) out << "  " << label(tv) << ";\n";
    for (const auto& [u, v] : t.graph().edges())
        out << "  " << label(u) << " -- " << label(v) << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace nkt
