#pragma once

#include <optional>
#include <span>

#include "nkt/indices.hpp"
#include "nkt/transform.hpp"

namespace nkt {

enum class Role { Vertex, Edge };

/// Closed-form degree of a transformed vertex, evaluated from the original
/// degree(s) and (n, m) without building the graph. Edge roles need both
/// endpoint degrees. The value is returned as-is and may be negative for
/// inputs no real graph produces; callers flag that case.
long long closed_degree(TransformKind kind, Role role, long long d_u,
                        std::optional<long long> d_v, long long n, long long m);

/// Exact NK of the transformed graph as the product of closed-form degrees.
/// Returns nullopt if any closed degree evaluates negative. For the variants
/// with a literal closed form (t1, t2, g+-, g-+, total/g+++, g-++ and g++
/// via the t1 degrees) the product is additionally checked against that form.
std::optional<BigNat> nk_exact(TransformKind kind, const Graph& g);

/// True for the variants whose exact NK the closed-form theorems express
/// directly in terms of n, m, NK(G) and Pi1*(G).
bool has_paper_exact_form(TransformKind kind);
BigNat paper_exact_form(TransformKind kind, const Graph& g);

/// True for the seven variants that carry an AM-GM upper bound.
bool has_bound(TransformKind kind);

struct BoundResult {
    bool applicable = false;  // false when m = 0 (mean edge factor undefined)
    std::optional<BigNat> exact;
    std::optional<Rational> bound;
    bool regular = false;
    bool tight() const {
        return applicable && exact && bound && Rational(*exact) == *bound;
    }
    bool holds() const {
        return applicable && exact && bound && Rational(*exact) <= *bound;
    }
};

/// AM-GM upper bound on NK of the transformed graph, evaluated in exact
/// rational arithmetic. The g-- bound uses the (n-2)^m edge part that the
/// degree product yields.
BoundResult nk_bound(TransformKind kind, const Graph& g);

/// Closed forms for r-regular graphs (corollary index 1..6); (n, m, r) must
/// be consistent (nr even, m = nr/2).
BigNat regular_corollary(int index, int n, int m, int r);
TransformKind corollary_variant(int index);

enum class Family { Cycle, Complete };

/// One printed per-family formula from the worked examples, evaluated
/// literally (including the ones the oracle refutes).
struct ExampleClaim {
    const char* id;       // "ex1.i" .. "ex4.viii"
    Family family;
    TransformKind kind;
    const char* printed;  // rendering of the printed formula
    Rational (*value)(long long n);
};

std::span<const ExampleClaim> example_claims();

/// Literal value of the printed formula for the given family/variant at n;
/// throws if no printed formula exists for that combination. The result may
/// be negative where the printed expression is (the oracle refutes those).
BigNat family_example(Family family, TransformKind kind, int n);
BigNat example_value(const ExampleClaim& claim, int n);

}  // namespace nkt
