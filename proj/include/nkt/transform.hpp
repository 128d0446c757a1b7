#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "nkt/graph.hpp"

namespace nkt {

/// The 15 transformation variants. Total and Gppp construct identical
/// graphs, as do SemitotalPoint and Gpp; they are kept distinct because the
/// closed-form machinery treats them as separate claims.
enum class TransformKind {
    Total,           // total graph T(G) = G^{+++}
    SemitotalPoint,  // T1
    SemitotalLine,   // T2
    Gpp,             // G^{++}
    Gpm,             // G^{+-}
    Gmp,             // G^{-+}
    Gmm,             // G^{--}
    Gppp,            // G^{+++}
    Gppm,            // G^{++-}
    Gpmp,            // G^{+-+}
    Gpmm,            // G^{+--}
    Gmpp,            // G^{-++}
    Gmpm,            // G^{-+-}
    Gmmp,            // G^{--+}
    Gmmm,            // G^{---}
};

inline constexpr std::array<TransformKind, 15> all_transform_kinds = {
    TransformKind::Total, TransformKind::SemitotalPoint,
    TransformKind::SemitotalLine, TransformKind::Gpp, TransformKind::Gpm,
    TransformKind::Gmp, TransformKind::Gmm, TransformKind::Gppp,
    TransformKind::Gppm, TransformKind::Gpmp, TransformKind::Gpmm,
    TransformKind::Gmpp, TransformKind::Gmpm, TransformKind::Gmmp,
    TransformKind::Gmmm,
};

/// Fixed CLI/report spelling: total, t1, t2, g++, g+-, ..., g---.
std::string_view kind_name(TransformKind k);
std::optional<TransformKind> parse_kind(std::string_view name);

/// The four complementary G^xyz sign pairs, e.g. (g+++, g---).
inline constexpr std::array<std::pair<TransformKind, TransformKind>, 4>
    complementary_xyz_pairs = {{
        {TransformKind::Gppp, TransformKind::Gmmm},
        {TransformKind::Gppm, TransformKind::Gmmp},
        {TransformKind::Gmpp, TransformKind::Gpmm},
        {TransformKind::Gpmp, TransformKind::Gmpm},
    }};

struct OriginalVertex {
    int v;
    bool operator==(const OriginalVertex&) const = default;
};
struct OriginalEdge {
    Edge e;  // canonical u < v
    bool operator==(const OriginalEdge&) const = default;
};
using VertexRole = std::variant<OriginalVertex, OriginalEdge>;

/// A transformation graph materialized on V(G) union E(G). Transformed
/// vertices 0..n-1 are the original vertices, n..n+m-1 the original edges in
/// canonical sorted order.
class TransformedGraph {
public:
    TransformedGraph(Graph graph, Graph source, TransformKind kind);

    const Graph& graph() const { return graph_; }
    const Graph& source() const { return source_; }
    TransformKind kind() const { return kind_; }
    const std::string& source_hash() const { return source_hash_; }

    VertexRole role_of(int transformed_vertex) const;
    int vertex_for_role(const VertexRole& role) const;  // throws if unknown
    int degree_of(const VertexRole& role) const;

private:
    Graph graph_;
    Graph source_;
    TransformKind kind_;
    std::string source_hash_;
};

/// Builds the transformed graph by exhaustive pair test over V(G) union E(G).
TransformedGraph build_transform(const Graph& g, TransformKind kind);

/// DOT export with role-annotated labels ("v3", "e1-2").
std::string to_dot(const TransformedGraph& t);

}  // namespace nkt
