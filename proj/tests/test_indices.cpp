#include <doctest.h>

#include "nkt/indices.hpp"
#include "test_util.hpp"

using namespace nkt;

TEST_CASE("nk on named graphs") {
    CHECK(nk(cycle_graph(4)) == 16);
    CHECK(nk(complete_graph(4)) == 81);
    CHECK(nk(path_graph(4)) == 4);
    CHECK(nk(Graph(0)) == 1);           // empty product
    CHECK(nk(Graph(3)) == 0);           // isolated vertices
    CHECK(nk(Graph(4, {{0, 1}})) == 0);
}

TEST_CASE("zagreb indices on named graphs") {
    CHECK(m1(cycle_graph(5)) == 20);
    CHECK(m2(cycle_graph(5)) == 20);
    CHECK(m1(complete_graph(3)) == 12);
    CHECK(m2(complete_graph(3)) == 12);
    // star on 4 vertices: center degree 3
    CHECK(m1(star_graph(4)) == 12);
    CHECK(m2(star_graph(4)) == 9);
}

TEST_CASE("multiplicative indices on named graphs") {
    Graph c4 = cycle_graph(4);
    CHECK(pi1(c4) == 256);
    CHECK(pi2(c4) == 256);
    CHECK(pi1star(c4) == 256);

    Graph p3 = path_graph(3);
    CHECK(pi1(p3) == 4);
    CHECK(pi2(p3) == 4);
    CHECK(pi1star(p3) == 9);

    Graph k2 = complete_graph(2);
    CHECK(pi1(k2) == 1);
    CHECK(pi2(k2) == 1);
    CHECK(pi1star(k2) == 2);  // one edge, degree sum 1+1
}

TEST_CASE("nk values exceed 64 bits without overflow") {
    // 20-regular-ish: K21 has degrees 20, NK = 20^21 > 2^64
    BigNat v = nk(complete_graph(21));
    CHECK(v == pow(BigNat(20), 21));
    CHECK(v > BigNat("18446744073709551615"));
}

TEST_CASE("pi1 equals nk squared") {
    for (const Graph& g : testutil::random_graphs(30, 8, 3))
        CHECK(pi1(g) == nk(g) * nk(g));
    for (int n = 2; n <= 5; ++n)
        for_each_graph(n, false,
                       [](const Graph& g) { CHECK(pi1(g) == nk(g) * nk(g)); });
}

TEST_CASE("indices are label-permutation invariant") {
    for (const Graph& g : testutil::random_graphs(20, 7, 11)) {
        Graph h = testutil::relabel(
            g, testutil::permutation(g.vertex_count(), 99));
        CHECK(nk(h) == nk(g));
        CHECK(m1(h) == m1(g));
        CHECK(m2(h) == m2(g));
        CHECK(pi1star(h) == pi1star(g));
        CHECK(pi2(h) == pi2(g));
    }
}

TEST_CASE("nk of complement is the product of n-1-d") {
    for (const Graph& g : testutil::random_graphs(20, 7, 5)) {
        BigNat expected = 1;
        for (int d : g.degrees()) expected *= g.vertex_count() - 1 - d;
        CHECK(nk(complement(g)) == expected);
    }
}

TEST_CASE("compute_indices bundles everything consistently") {
    IndexReport r = compute_indices(complete_graph(4));
    CHECK(r.n == 4);
    CHECK(r.m == 6);
    CHECK(r.m1 == 36);
    CHECK(r.nk == 81);
    CHECK(r.pi1 == 81 * 81);
    CHECK(r.pi1star == pow(BigNat(6), 6));
}
