#include <doctest.h>

#include "nkt/indices.hpp"
#include "nkt/transform.hpp"
#include "test_util.hpp"

using namespace nkt;

TEST_CASE("variant names round-trip") {
    for (TransformKind k : all_transform_kinds) {
        auto parsed = parse_kind(kind_name(k));
        REQUIRE(parsed.has_value());
        CHECK(*parsed == k);
    }
    CHECK(!parse_kind("g+++-").has_value());
    CHECK(!parse_kind("T1").has_value());
}

TEST_CASE("semitotal-point graph of C3 has 3m edges") {
    auto t = build_transform(cycle_graph(3), TransformKind::SemitotalPoint);
    CHECK(t.graph().vertex_count() == 6);
    CHECK(t.graph().edge_count() == 9);
}

TEST_CASE("semitotal-line graph of P3 has m + M1/2 edges") {
    auto t = build_transform(path_graph(3), TransformKind::SemitotalLine);
    CHECK(t.graph().edge_count() == 5);  // 2 + 6/2
}

TEST_CASE("K3 g--- is three disjoint edges") {
    auto t = build_transform(complete_graph(3), TransformKind::Gmmm);
    CHECK(t.graph().vertex_count() == 6);
    CHECK(t.graph().edge_count() == 3);
    for (int v = 0; v < 6; ++v) CHECK(t.graph().degree(v) == 1);
}

TEST_CASE("degree_of by role") {
    auto t1c4 = build_transform(cycle_graph(4), TransformKind::SemitotalPoint);
    CHECK(t1c4.degree_of(OriginalVertex{0}) == 4);  // 2d
    CHECK(t1c4.degree_of(OriginalEdge{{0, 1}}) == 2);

    auto gpm = build_transform(cycle_graph(4), TransformKind::Gpm);
    CHECK(gpm.degree_of(OriginalVertex{0}) == 4);  // m
    CHECK(gpm.degree_of(OriginalEdge{{0, 1}}) == 2);  // n-2

    auto gmmp = build_transform(path_graph(3), TransformKind::Gmmp);
    CHECK(gmmp.degree_of(OriginalEdge{{0, 1}}) == 2);  // m+3-(d0+d1)

    CHECK_THROWS_AS(gpm.degree_of(OriginalVertex{9}), GraphError);
    CHECK_THROWS_AS(gpm.degree_of(OriginalEdge{{0, 2}}), GraphError);
}

TEST_CASE("vertex ordering: originals first, then canonical edges") {
    Graph p3 = path_graph(3);
    auto t = build_transform(p3, TransformKind::Total);
    CHECK(t.role_of(0) == VertexRole{OriginalVertex{0}});
    CHECK(t.role_of(2) == VertexRole{OriginalVertex{2}});
    CHECK(t.role_of(3) == VertexRole{OriginalEdge{{0, 1}}});
    CHECK(t.role_of(4) == VertexRole{OriginalEdge{{1, 2}}});
    CHECK_THROWS_AS(t.role_of(5), GraphError);
}

TEST_CASE("total graph equals g+++ vertex-by-vertex") {
    for (const Graph& g : testutil::random_graphs(15, 6, 17)) {
        auto a = build_transform(g, TransformKind::Total);
        auto b = build_transform(g, TransformKind::Gppp);
        CHECK(a.graph() == b.graph());
    }
    // and t1 equals g++
    for (const Graph& g : testutil::random_graphs(15, 6, 23)) {
        auto a = build_transform(g, TransformKind::SemitotalPoint);
        auto b = build_transform(g, TransformKind::Gpp);
        CHECK(a.graph() == b.graph());
    }
}

TEST_CASE("complementary xyz pairs build complementary graphs") {
    auto check_pair = [](const Graph& g) {
        for (auto [a, b] : complementary_xyz_pairs) {
            Graph built = build_transform(g, a).graph();
            Graph comp = complement(build_transform(g, b).graph());
            CHECK(built == comp);
        }
    };
    for (int n = 1; n <= 4; ++n) for_each_graph(n, false, check_pair);
    for (const Graph& g : testutil::random_graphs(10, 7, 31)) check_pair(g);
}

TEST_CASE("structural edge counts over an enumerated corpus") {
    for (int n = 2; n <= 5; ++n)
        for_each_graph(n, false, [](const Graph& g) {
            int nm = g.vertex_count() + g.edge_count();
            for (TransformKind k : all_transform_kinds)
                CHECK(build_transform(g, k).graph().vertex_count() == nm);
            CHECK(build_transform(g, TransformKind::SemitotalPoint)
                      .graph()
                      .edge_count() == 3 * g.edge_count());
            CHECK(build_transform(g, TransformKind::SemitotalLine)
                      .graph()
                      .edge_count() == g.edge_count() + m1(g) / 2);
        });
}

TEST_CASE("dot export annotates roles") {
    auto t = build_transform(path_graph(3), TransformKind::SemitotalLine);
    std::string dot = to_dot(t);
    CHECK(dot.find("\"v0\" -- \"e0-1\"") != std::string::npos);
    CHECK(dot.find("\"e0-1\" -- \"e1-2\"") != std::string::npos);
}
