#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "nkt/graph.hpp"

namespace nkt {

/// Exact arbitrary-precision integer; degree products overflow 64 bits
/// already for modest transformed graphs.
using BigNat = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// First Zagreb index, sum of squared degrees. Computed in both the
/// vertex-sum and edge-sum forms, which must agree.
long long m1(const Graph& g);

/// Second Zagreb index, sum over edges of endpoint-degree products.
long long m2(const Graph& g);

/// Narumi-Katayama index: product of all vertex degrees. Empty product is 1;
/// any isolated vertex makes it 0.
BigNat nk(const Graph& g);

/// First multiplicative Zagreb index, product of squared degrees over
/// vertices; equals nk(g)^2.
BigNat pi1(const Graph& g);

/// Second multiplicative Zagreb index, product over edges of d(u)*d(v).
BigNat pi2(const Graph& g);

/// Multiplicative sum Zagreb index, product over edges of d(u)+d(v).
BigNat pi1star(const Graph& g);

struct IndexReport {
    int n = 0;
    int m = 0;
    long long m1 = 0;
    long long m2 = 0;
    BigNat nk;
    BigNat pi1;
    BigNat pi2;
    BigNat pi1star;
};

IndexReport compute_indices(const Graph& g);

}  // namespace nkt
